use crate::map::{CombinatorialMap, Dart};

/// Strongest relation between two maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Isomorphism {
    /// Related by an orientation-preserving map isomorphism.
    OrientationPreserving,
    /// Related only after reversing every rotation of one map.
    MirrorOnly,
    None,
}

/// Traversal code of the map rooted at `root`.
///
/// Darts are labelled in breadth-first order following `sigma` then
/// `alpha`; the code lists `(label(sigma d), label(alpha d))` in label
/// order. Two rooted connected maps are isomorphic exactly when their codes
/// agree.
pub fn rooted_code(m: &CombinatorialMap, root: Dart) -> Vec<u32> {
    let n = m.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        for next in [m.sigma(d), m.alpha(d)] {
            if label[next] == u32::MAX {
                label[next] = order.len() as u32;
                order.push(next);
            }
        }
        i += 1;
    }
    let mut code = Vec::with_capacity(2 * order.len() + 1);
    code.push(order.len() as u32);
    for &d in &order {
        code.push(label[m.sigma(d)]);
        code.push(label[m.alpha(d)]);
    }
    code
}

/// Lexicographically least rooted code over all roots: an invariant of
/// the map up to orientation-preserving isomorphism.
pub fn canonical_code(m: &CombinatorialMap) -> Vec<u32> {
    (0..m.num_darts())
        .map(|root| rooted_code(m, root))
        .min()
        .unwrap_or_default()
}

/// Canonical codes of a map and of its mirror image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapFingerprint {
    pub direct: Vec<u32>,
    pub mirrored: Vec<u32>,
}

impl MapFingerprint {
    pub fn of(m: &CombinatorialMap) -> Self {
        MapFingerprint {
            direct: canonical_code(m),
            mirrored: canonical_code(&m.mirror()),
        }
    }

    pub fn relation(&self, other: &MapFingerprint) -> Isomorphism {
        if self.direct == other.direct {
            Isomorphism::OrientationPreserving
        } else if self.mirrored == other.direct {
            Isomorphism::MirrorOnly
        } else {
            Isomorphism::None
        }
    }

    /// Whether the map is isomorphic to its own mirror image.
    pub fn is_achiral(&self) -> bool {
        self.direct == self.mirrored
    }
}

pub fn is_isomorphic(m1: &CombinatorialMap, m2: &CombinatorialMap) -> Isomorphism {
    if m1.num_darts() != m2.num_darts() || m1.num_vertices() != m2.num_vertices() {
        return Isomorphism::None;
    }
    let target = canonical_code(m2);
    if canonical_code(m1) == target {
        Isomorphism::OrientationPreserving
    } else if canonical_code(&m1.mirror()) == target {
        Isomorphism::MirrorOnly
    } else {
        Isomorphism::None
    }
}
