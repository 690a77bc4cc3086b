//! Recovering structure from built maps.

mod iso;
mod traces;

pub use iso::{canonical_code, is_isomorphic, rooted_code, Isomorphism, MapFingerprint};
pub use traces::{
    curvature_graph, find_belts, find_spines, pseudo_roads, Belt, CurvatureGraph, PseudoRoad, Spine,
};

use std::collections::BTreeMap;
use std::fmt;

use crate::census::signatures_for_vertices;
use crate::error::{Error, Result};
use crate::map::{build_by_quotient, CombinatorialMap};
use crate::signature::SignatureClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connectivity {
    TwoConnected,
    ThreeConnected,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::TwoConnected => "two_connected",
            Connectivity::ThreeConnected => "three_connected",
        })
    }
}

/// Three-connected unless some pair of vertices separates the graph.
pub fn connectivity_grade(m: &CombinatorialMap) -> Connectivity {
    let n = m.num_vertices();
    for a in 0..n {
        for b in a + 1..n {
            if !m.connected_without(&[a, b]) {
                return Connectivity::TwoConnected;
            }
        }
    }
    Connectivity::ThreeConnected
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    /// The map matches the class build directly.
    AsBuilt,
    /// The map matches only the mirror image of the class build.
    Mirrored,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::AsBuilt => "as_built",
            Chirality::Mirrored => "mirrored",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub class: SignatureClass,
    pub chirality: Chirality,
}

/// Equivalence classes of all signatures with `v` vertices, keyed by canonical member.
pub fn classes_for_vertices(v: u64) -> Result<Vec<SignatureClass>> {
    let mut classes = BTreeMap::new();
    for sig in signatures_for_vertices(v)? {
        let class = sig.class()?;
        let c = class.canonical();
        classes.entry((c.b(), c.f(), c.s())).or_insert(class);
    }
    Ok(classes.into_values().collect())
}

/// Finds the signature class whose quotient build is isomorphic to `m`.
pub fn identify_signature(m: &CombinatorialMap) -> Result<Identification> {
    let v = m.num_vertices() as u64;
    let classes = classes_for_vertices(v)?;
    let print = MapFingerprint::of(m);
    let mut mirrored = None;
    for class in classes {
        let built = build_by_quotient(class.canonical())?;
        if built.num_darts() != m.num_darts() {
            continue;
        }
        let code = canonical_code(&built);
        if code == print.direct {
            return Ok(Identification {
                class,
                chirality: Chirality::AsBuilt,
            });
        }
        if mirrored.is_none() && code == print.mirrored {
            mirrored = Some(class);
        }
    }
    match mirrored {
        Some(class) => Ok(Identification {
            class,
            chirality: Chirality::Mirrored,
        }),
        None => Err(Error::Internal(format!(
            "no signature with {v} vertices builds this map"
        ))),
    }
}
