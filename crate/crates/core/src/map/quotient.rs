use super::CombinatorialMap;
use crate::error::{Error, Result};
use crate::hexlattice::{HexCoord, RotocenterLattice};
use crate::signature::Signature;

/// For the upward vertex on base `p`, edge `k` leads to a downward vertex
/// whose negation is the upward vertex on base `-p - OPPOSITE_SHIFT[k]`,
/// reached again through its own edge `k`.
///
/// Edges are listed counterclockwise: `k = 0` points east between
/// `(q+1,r)` and `(q+1,r+1)`, `k = 1` points north-west between `(q,r)`
/// and `(q+1,r)`, `k = 2` points south-west between `(q,r)` and `(q+1,r+1)`.
const OPPOSITE_SHIFT: [HexCoord; 3] = [
    HexCoord::new(2, 1),
    HexCoord::new(1, 0),
    HexCoord::new(1, 1),
];

/// The trihex obtained as the quotient of the hexagonal tiling by the
/// half-turns about the rotocenter lattice of `sig`.
///
/// Vertex `i` is the upward vertex whose base is the `i`-th point of the
/// fundamental box of `2L`; its darts are `3i, 3i+1, 3i+2` counterclockwise.
/// Half-turns preserve orientation, so the rotation inherited from the
/// plane is well defined on the quotient.
pub fn build_by_quotient(sig: Signature) -> Result<CombinatorialMap> {
    let lattice = RotocenterLattice::new(sig);
    let v = lattice.index_of_doubled();
    if v as u64 != sig.vertices() {
        return Err(Error::Internal(format!(
            "{v} vertex orbits for {sig}, expected {}",
            sig.vertices()
        )));
    }
    let mut sigma = vec![0; 3 * v];
    let mut alpha = vec![0; 3 * v];
    for i in 0..v {
        let base = lattice.box_point(i);
        for k in 0..3 {
            sigma[3 * i + k] = 3 * i + (k + 1) % 3;
            let other = lattice.reduce(-base - OPPOSITE_SHIFT[k]);
            alpha[3 * i + k] = 3 * lattice.box_index(other) + k;
        }
    }
    let map = CombinatorialMap::new(sigma, alpha)?;
    let faces = map.num_faces() as u64;
    if faces != sig.hexagons() + 4 {
        return Err(Error::Internal(format!(
            "quotient of {sig} has {faces} faces, expected {}",
            sig.hexagons() + 4
        )));
    }
    Ok(map)
}
