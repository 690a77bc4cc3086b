use std::collections::HashSet;
use std::fmt;

use super::CombinatorialMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the structural trihex checks, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub triangles: usize,
    pub hexagons: usize,
    pub connected: bool,
    pub simple: bool,
    /// `V - E + F - 2`.
    pub euler_residual: i64,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub(super) fn of(m: &CombinatorialMap) -> ValidationReport {
        let mut checks = Vec::new();
        let mut check = |name, passed, detail: String| {
            checks.push(Check {
                name,
                passed,
                detail,
            })
        };

        let fixed = (0..m.num_darts()).filter(|&d| m.alpha(d) == d).count();
        check(
            "involution",
            fixed == 0,
            format!("{fixed} darts paired with themselves"),
        );

        let irregular: Vec<usize> = (0..m.num_vertices())
            .filter(|&v| m.vertex_darts(v).len() != 3)
            .collect();
        check(
            "3-regular",
            irregular.is_empty(),
            match irregular.first() {
                Some(&v) => format!(
                    "{} vertices without degree 3, first {v} of degree {}",
                    irregular.len(),
                    m.vertex_darts(v).len()
                ),
                None => "all vertices have degree 3".into(),
            },
        );

        let sizes: Vec<usize> = (0..m.num_faces()).map(|f| m.face_len(f)).collect();
        let bad_faces = sizes.iter().filter(|&&k| k != 3 && k != 6).count();
        check(
            "face sizes",
            bad_faces == 0,
            format!("{bad_faces} faces neither triangle nor hexagon"),
        );

        let triangles = sizes.iter().filter(|&&k| k == 3).count();
        let hexagons = sizes.iter().filter(|&&k| k == 6).count();
        check(
            "four triangles",
            triangles == 4,
            format!("{triangles} triangles"),
        );

        let connected = m.connected_without(&[]);
        check("connected", connected, String::new());

        let loops = (0..m.num_darts())
            .filter(|&d| m.origin(d) == m.target(d))
            .count();
        let mut pairs = HashSet::new();
        let parallel = m.edges().into_iter().filter(|&e| !pairs.insert(e)).count();
        let simple = loops == 0 && parallel == 0;
        check(
            "simple",
            simple,
            format!("{loops} loop darts, {parallel} parallel edges"),
        );

        let euler_residual =
            m.num_vertices() as i64 - m.num_edges() as i64 + m.num_faces() as i64 - 2;
        check(
            "euler",
            euler_residual == 0,
            format!("V - E + F - 2 = {euler_residual}"),
        );

        let cut = if connected {
            (0..m.num_vertices()).find(|&v| !m.connected_without(&[v]))
        } else {
            None
        };
        check(
            "2-connected",
            connected && cut.is_none() && m.num_vertices() >= 3,
            match cut {
                Some(v) => format!("vertex {v} separates the graph"),
                None => String::new(),
            },
        );

        ValidationReport {
            vertices: m.num_vertices(),
            edges: m.num_edges(),
            faces: m.num_faces(),
            triangles,
            hexagons,
            connected,
            simple,
            euler_residual,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "V={} E={} F={} triangles={} hexagons={}",
            self.vertices, self.edges, self.faces, self.triangles, self.hexagons
        )?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{mark} {}", c.name)?;
            } else {
                writeln!(f, "{mark} {} ({})", c.name, c.detail)?;
            }
        }
        match self.first_failure() {
            None => write!(f, "verdict: pass"),
            Some(c) => write!(f, "verdict: fail at {}", c.name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_passes() {
        let faces = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]];
        let r = CombinatorialMap::from_faces(4, &faces).unwrap().validate();
        assert!(r.passed(), "{r}");
        assert_eq!((r.vertices, r.edges, r.faces, r.triangles), (4, 6, 4, 4));
    }

    /// Removes the edge of `d` and merges the rotations of its endpoints.
    fn contract(m: &CombinatorialMap, d: usize) -> CombinatorialMap {
        let e = m.alpha(d);
        let n = m.num_darts();
        let mut sigma: Vec<usize> = (0..n).map(|x| m.sigma(x)).collect();
        sigma[m.sigma_inv(d)] = m.sigma(e);
        sigma[m.sigma_inv(e)] = m.sigma(d);
        let keep: Vec<usize> = (0..n).filter(|&x| x != d && x != e).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let new_sigma = keep.iter().map(|&x| index[sigma[x]]).collect();
        let new_alpha = keep.iter().map(|&x| index[m.alpha(x)]).collect();
        CombinatorialMap::new(new_sigma, new_alpha).unwrap()
    }

    #[test]
    fn contracted_edge_fails_regularity() {
        let faces = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]];
        let k4 = CombinatorialMap::from_faces(4, &faces).unwrap();
        let m = contract(&k4, 0);
        assert_eq!(m.num_vertices(), 3);
        let r = m.validate();
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "3-regular");
        assert!(!r.simple);
    }

    #[test]
    fn four_cycle_fails_regularity() {
        let faces = vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]];
        let r = CombinatorialMap::from_faces(4, &faces).unwrap().validate();
        assert_eq!(r.first_failure().unwrap().name, "3-regular");
        assert_eq!(r.euler_residual, 0);
    }
}
