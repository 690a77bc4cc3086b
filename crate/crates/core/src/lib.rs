//! Trihexes: cubic planar maps whose faces are triangles and hexagons.
//!
//! Every trihex is named by a signature `(s, b, f)`. This crate computes the
//! equivalences between signatures, counts trihexes by size, builds them as
//! combinatorial maps in two independent ways, and recovers their structure.

pub mod analysis;
pub mod census;
pub mod error;
pub mod hexlattice;
pub mod map;
pub mod signature;

pub use error::{Error, Result};
pub use map::{build_by_quotient, build_by_spines, CombinatorialMap, ValidationReport};
pub use signature::{EquivalenceDerivation, Signature, SignatureClass};
