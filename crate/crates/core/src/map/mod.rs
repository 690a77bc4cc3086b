//! Oriented embedded graphs stored as combinatorial maps, plus the two
//! trihex constructors.
//!
//! A map is a set of darts (half-edges) with two permutations: `alpha`
//! pairs the two darts of an edge and `sigma` gives the next dart
//! counterclockwise around the origin vertex. Faces are the orbits of
//! `phi = sigma^-1 ∘ alpha`, which walks each face with the face on its left.

mod quotient;
mod spines;
mod validate;

use std::collections::{HashMap, VecDeque};

pub use quotient::build_by_quotient;
pub use spines::build_by_spines;
pub use validate::{Check, ValidationReport};

use crate::error::{Error, Result};

pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    alpha: Vec<Dart>,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    vertices: Vec<Vec<Dart>>,
    faces: Vec<Vec<Dart>>,
}

fn inverse(perm: &[usize]) -> Option<Vec<usize>> {
    let mut inv = vec![usize::MAX; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        if p >= perm.len() || inv[p] != usize::MAX {
            return None;
        }
        inv[p] = i;
    }
    Some(inv)
}

/// Orbits of `next`, each starting at its smallest element, numbered by that element.
fn orbits(next: impl Fn(usize) -> usize, n: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut owner = vec![usize::MAX; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if owner[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            owner[d] = id;
            cycle.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    (owner, cycles)
}

impl CombinatorialMap {
    /// Builds a map from its rotation and edge permutations.
    pub fn new(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Result<Self> {
        if sigma.len() != alpha.len() {
            return Err(Error::MalformedMap(format!(
                "rotation has {} darts but involution has {}",
                sigma.len(),
                alpha.len()
            )));
        }
        let sigma_inv = inverse(&sigma)
            .ok_or_else(|| Error::MalformedMap("rotation is not a permutation".into()))?;
        if alpha
            .iter()
            .enumerate()
            .any(|(d, &a)| a >= alpha.len() || alpha[a] != d)
        {
            return Err(Error::MalformedMap(
                "edge pairing is not an involution".into(),
            ));
        }
        let n = sigma.len();
        let (vertex_of, vertices) = orbits(|d| sigma[d], n);
        let (face_of, faces) = orbits(|d| sigma_inv[alpha[d]], n);
        Ok(CombinatorialMap {
            sigma,
            sigma_inv,
            alpha,
            vertex_of,
            face_of,
            vertices,
            faces,
        })
    }

    /// Builds a map from faces given as counterclockwise vertex cycles. Every
    /// directed edge must occur exactly once and its reverse must occur too.
    ///
    /// Darts are renumbered so that vertex `i` owns a consecutive block,
    /// starting at the dart towards its smallest neighbor and continuing
    /// counterclockwise.
    pub fn from_faces(num_vertices: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut ends = Vec::new();
        let mut phi = Vec::new();
        for face in faces {
            let k = face.len();
            let first = ends.len();
            for i in 0..k {
                let (x, y) = (face[i], face[(i + 1) % k]);
                if x >= num_vertices || y >= num_vertices {
                    return Err(Error::MalformedMap(format!(
                        "vertex out of range in face {face:?}"
                    )));
                }
                if index.insert((x, y), ends.len()).is_some() {
                    return Err(Error::MalformedMap(format!(
                        "directed edge {x}->{y} used twice"
                    )));
                }
                ends.push((x, y));
                phi.push(first + (i + 1) % k);
            }
        }
        let n = ends.len();
        let mut alpha = vec![0; n];
        for (d, &(x, y)) in ends.iter().enumerate() {
            alpha[d] = *index
                .get(&(y, x))
                .ok_or_else(|| Error::MalformedMap(format!("dangling dart {x}->{y}")))?;
        }
        let phi_inv = inverse(&phi).expect("face successor is a permutation");
        let sigma: Vec<usize> = (0..n).map(|d| alpha[phi_inv[d]]).collect();

        let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); num_vertices];
        for (d, &(x, _)) in ends.iter().enumerate() {
            outgoing[x].push(d);
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next_id = 0;
        for darts in &outgoing {
            let Some(&start) = darts.iter().min_by_key(|&&d| (ends[d].1, d)) else {
                continue;
            };
            let mut d = start;
            loop {
                if ends[d].0 != ends[start].0 || renumber[d] != usize::MAX {
                    return Err(Error::MalformedMap("rotation leaves its vertex".into()));
                }
                renumber[d] = next_id;
                next_id += 1;
                d = sigma[d];
                if d == start {
                    break;
                }
            }
        }
        if next_id != n {
            return Err(Error::MalformedMap(
                "a vertex is pinched (two rotation cycles)".into(),
            ));
        }
        let mut new_sigma = vec![0; n];
        let mut new_alpha = vec![0; n];
        for d in 0..n {
            new_sigma[renumber[d]] = renumber[sigma[d]];
            new_alpha[renumber[d]] = renumber[alpha[d]];
        }
        CombinatorialMap::new(new_sigma, new_alpha)
    }

    /// Builds a map from counterclockwise neighbor lists of a simple graph.
    /// Dart `k` of vertex `u` points to `neighbors[u][k]`.
    pub fn from_rotation_system(neighbors: &[Vec<usize>]) -> Result<Self> {
        let mut offset = Vec::with_capacity(neighbors.len());
        let mut total = 0;
        for ns in neighbors {
            offset.push(total);
            total += ns.len();
        }
        let mut sigma = vec![0; total];
        let mut alpha = vec![0; total];
        for (u, ns) in neighbors.iter().enumerate() {
            for (k, &v) in ns.iter().enumerate() {
                let d = offset[u] + k;
                sigma[d] = offset[u] + (k + 1) % ns.len();
                let back: Vec<usize> = neighbors
                    .get(v)
                    .ok_or_else(|| {
                        Error::MalformedMap(format!("neighbor {v} of {u} does not exist"))
                    })?
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| x == u)
                    .map(|(j, _)| j)
                    .collect();
                match back.as_slice() {
                    [j] => alpha[d] = offset[v] + j,
                    _ => {
                        return Err(Error::MalformedMap(format!(
                            "edge {u}-{v} is not listed exactly once at {v}"
                        )))
                    }
                }
            }
        }
        let map = CombinatorialMap::new(sigma, alpha)?;
        if map.num_vertices() != neighbors.iter().filter(|ns| !ns.is_empty()).count() {
            return Err(Error::MalformedMap("isolated vertex".into()));
        }
        Ok(map)
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> CombinatorialMap {
        CombinatorialMap::new(self.sigma_inv.clone(), self.alpha.clone())
            .expect("inverse rotation of a valid map is valid")
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// Next dart along the face on the left of `d`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma_inv[self.alpha[d]]
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    pub fn target(&self, d: Dart) -> usize {
        self.vertex_of[self.alpha[d]]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Darts leaving vertex `v`, counterclockwise.
    pub fn vertex_darts(&self, v: usize) -> &[Dart] {
        &self.vertices[v]
    }

    /// Darts bounding face `f`, in traversal order.
    pub fn face_darts(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Vertices around face `f`, counterclockwise.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.origin(d)).collect()
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices[v].iter().map(|&d| self.target(d)).collect()
    }

    /// Edges as `(u, v)` with `u <= v`, one per dart pair, ordered by smaller dart.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.num_darts())
            .filter(|&d| d < self.alpha[d])
            .map(|d| {
                let (a, b) = (self.origin(d), self.target(d));
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Triangular faces in face order.
    pub fn triangles(&self) -> Vec<usize> {
        (0..self.num_faces())
            .filter(|&f| self.face_len(f) == 3)
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport::of(self)
    }

    /// Whether the vertices not in `removed` induce a connected graph.
    pub(crate) fn connected_without(&self, removed: &[usize]) -> bool {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..n).find(|&v| !seen[v]) else {
            return true;
        };
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &d in &self.vertices[v] {
                let t = self.target(d);
                if !seen[t] {
                    seen[t] = true;
                    reached += 1;
                    queue.push_back(t);
                }
            }
        }
        reached + removed.len() == n
    }
}
