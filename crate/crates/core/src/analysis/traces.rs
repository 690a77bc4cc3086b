//! Straight traces through hexagons: each step crosses into a face and
//! leaves it through the edge opposite the one it came in by.

use crate::map::{CombinatorialMap, Dart};

/// Dart on the far side of the hexagon entered along `entry`.
fn opposite(m: &CombinatorialMap, entry: Dart) -> Dart {
    m.phi(m.phi(m.phi(entry)))
}

fn is_hexagon(m: &CombinatorialMap, d: Dart) -> bool {
    m.face_len(m.face_of(d)) == 6
}

/// Outcome of following a trace out of a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Walk {
    hexagons: Vec<usize>,
    end: Option<usize>,
    distinct: bool,
}

/// Leaves the triangle of `start` across its edge and walks until the next
/// triangle. `end` is `None` if the walk repeats an entry or outruns the
/// face count.
fn walk_from_triangle(m: &CombinatorialMap, start: Dart) -> Walk {
    let mut hexagons = Vec::new();
    let mut seen_entry = vec![false; m.num_darts()];
    let mut seen_face = vec![false; m.num_faces()];
    let mut distinct = true;
    let mut entry = m.alpha(start);
    loop {
        let face = m.face_of(entry);
        if !is_hexagon(m, entry) {
            return Walk {
                hexagons,
                end: Some(face),
                distinct,
            };
        }
        if seen_entry[entry] || hexagons.len() > m.num_faces() {
            return Walk {
                hexagons,
                end: None,
                distinct: false,
            };
        }
        seen_entry[entry] = true;
        distinct &= !std::mem::replace(&mut seen_face[face], true);
        hexagons.push(face);
        entry = m.alpha(opposite(m, entry));
    }
}

/// A chain of hexagons between two triangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spine {
    pub head: usize,
    pub tail: usize,
    pub hexagons: Vec<usize>,
}

impl Spine {
    pub fn len(&self) -> usize {
        self.hexagons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hexagons.is_empty()
    }
}

/// Every trace leaving a triangle through one of its edges and ending at a
/// triangle, three per triangle; each spine therefore shows up once from
/// each end.
pub fn find_spines(m: &CombinatorialMap) -> Vec<Spine> {
    let mut spines = Vec::new();
    for t in m.triangles() {
        for &d in m.face_darts(t) {
            let w = walk_from_triangle(m, d);
            if let Some(tail) = w.end {
                spines.push(Spine {
                    head: t,
                    tail,
                    hexagons: w.hexagons,
                });
            }
        }
    }
    spines
}

/// Closed circuit of distinct hexagons, stored in canonical form: the least
/// rotation or reversal of its face sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Belt {
    faces: Vec<usize>,
}

impl Belt {
    pub fn new(cycle: &[usize]) -> Belt {
        let n = cycle.len();
        let mut best: Option<Vec<usize>> = None;
        let reversed: Vec<usize> = cycle.iter().rev().copied().collect();
        for seq in [cycle, &reversed[..]] {
            for k in 0..n {
                let rotated: Vec<usize> = seq[k..].iter().chain(&seq[..k]).copied().collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        Belt {
            faces: best.unwrap_or_default(),
        }
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// All belts, sorted and deduplicated.
pub fn find_belts(m: &CombinatorialMap) -> Vec<Belt> {
    let mut done = vec![false; m.num_darts()];
    let mut belts = Vec::new();
    for start in 0..m.num_darts() {
        if done[start] || !is_hexagon(m, start) {
            continue;
        }
        let mut faces = Vec::new();
        let mut entry = start;
        let closed = loop {
            done[entry] = true;
            faces.push(m.face_of(entry));
            entry = m.alpha(opposite(m, entry));
            if entry == start {
                break true;
            }
            if !is_hexagon(m, entry) || done[entry] || faces.len() > m.num_faces() {
                break false;
            }
        };
        if !closed {
            continue;
        }
        let mut sorted = faces.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == faces.len() {
            belts.push(Belt::new(&faces));
        }
    }
    belts.sort();
    belts.dedup();
    belts
}

/// Triangle-to-triangle chain of distinct hexagons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoRoad {
    pub source: usize,
    pub target: usize,
    pub hexagons: Vec<usize>,
}

impl PseudoRoad {
    pub fn len(&self) -> usize {
        self.hexagons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hexagons.is_empty()
    }
}

/// Roads leaving each triangle, at most three per triangle.
pub fn pseudo_roads(m: &CombinatorialMap) -> Vec<PseudoRoad> {
    let mut roads = Vec::new();
    for t in m.triangles() {
        for &d in m.face_darts(t) {
            let w = walk_from_triangle(m, d);
            match w.end {
                Some(end) if end != t && w.distinct => roads.push(PseudoRoad {
                    source: t,
                    target: end,
                    hexagons: w.hexagons,
                }),
                _ => {}
            }
        }
    }
    roads
}

/// Graph on the four triangles joined by pseudo-roads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureGraph {
    /// Face index of each node.
    pub triangles: Vec<usize>,
    pub adjacent: [[bool; 4]; 4],
    /// Number of roads joining each pair.
    pub road_counts: [[usize; 4]; 4],
    /// A shortest road for each present edge `(i, j)` with `i < j`.
    pub witnesses: Vec<((usize, usize), PseudoRoad)>,
}

impl CurvatureGraph {
    pub fn edge_count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == 6
    }
}

/// Curvature graph of a map with four triangles.
pub fn curvature_graph(m: &CombinatorialMap) -> CurvatureGraph {
    let triangles = m.triangles();
    let node = |f: usize| triangles.iter().position(|&t| t == f);
    let mut adjacent = [[false; 4]; 4];
    let mut road_counts = [[0; 4]; 4];
    let mut best: [[Option<PseudoRoad>; 4]; 4] = Default::default();
    for road in pseudo_roads(m) {
        let (Some(i), Some(j)) = (node(road.source), node(road.target)) else {
            continue;
        };
        if i >= 4 || j >= 4 {
            continue;
        }
        // Each road is met once from each end.
        road_counts[i][j] += 1;
        let (i, j) = (i.min(j), i.max(j));
        adjacent[i][j] = true;
        adjacent[j][i] = true;
        if best[i][j].as_ref().is_none_or(|b| road.len() < b.len()) {
            best[i][j] = Some(road);
        }
    }
    let witnesses = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .filter_map(|(i, j)| best[i][j].take().map(|road| ((i, j), road)))
        .collect();
    CurvatureGraph {
        triangles,
        adjacent,
        road_counts,
        witnesses,
    }
}
