use super::CombinatorialMap;
use crate::error::{Error, Result};
use crate::signature::Signature;

/// Faces of a spine whose boundary, walked with the spine on the left, is
/// `boundary[0..4s+4]` starting at the head vertex.
///
/// Internal edge `i` joins boundary positions `2i+1` and `n-2i-1`; every
/// even position is a vertex of degree 2 within the spine, every odd one has
/// degree 3.
fn spine_faces(boundary: &[usize]) -> Vec<Vec<usize>> {
    let n = boundary.len();
    let s = n / 4 - 1;
    let at = |i: usize| boundary[i % n];
    let mut faces = Vec::with_capacity(s + 2);
    faces.push(vec![at(0), at(1), at(n - 1)]);
    for i in 1..=s {
        faces.push(vec![
            at(2 * i - 1),
            at(2 * i),
            at(2 * i + 1),
            at(n - 2 * i - 1),
            at(n - 2 * i),
            at(n - 2 * i + 1),
        ]);
    }
    faces.push(vec![at(2 * s + 1), at(2 * s + 2), at(2 * s + 3)]);
    faces
}

/// Boundary position on the outermost ring where the head vertex of the
/// second spine is attached, walking back along the ring.
///
/// Without belts the head lands `2f + 1` edges counterclockwise from the
/// head of the first spine. Each belt shifts the ring by one position, which
/// accounts for the clockwise shift made when that belt is deleted.
///
/// Counting the other way round, `-(2f + 1 + b)`, builds the mirror image:
/// the first disagreement with the tiling quotient is at `(1,2,0)`. This
/// sign agrees with the quotient on every signature up to 96 vertices.
fn attachment_position(sig: Signature) -> usize {
    let n = 4 * (sig.s() + 1);
    ((2 * sig.f() + 1 + sig.b()) % n) as usize
}

/// Assembles the trihex from two spines of length `s` with `b` belts of
/// `2s + 2` hexagons spliced between them, the second spine attached at
/// offset `f`.
pub fn build_by_spines(sig: Signature) -> Result<CombinatorialMap> {
    let s = sig.s() as usize;
    let n = 4 * s + 4;
    let ring = 2 * s + 2;
    let mut next_vertex = 0;
    let mut fresh = |count: usize| {
        let ids: Vec<usize> = (next_vertex..next_vertex + count).collect();
        next_vertex += count;
        ids
    };

    let first = fresh(n);
    let mut faces = spine_faces(&first);

    // The current outer boundary, walked with everything built so far on
    // its left. Degree-3 vertices sit at positions of this parity.
    let mut boundary = first;
    let mut parity = 1;
    for _ in 0..sig.b() {
        let corners = fresh(ring);
        let middles = fresh(ring);
        let mut outer = vec![usize::MAX; n];
        for i in 0..ring {
            let c = 2 * i + parity;
            let prev = (i + ring - 1) % ring;
            faces.push(vec![
                boundary[(c + 1) % n],
                boundary[c % n],
                boundary[(c + n - 1) % n],
                corners[prev],
                middles[i],
                corners[i],
            ]);
            outer[c % n] = middles[i];
            outer[(c + 1) % n] = corners[i];
        }
        boundary = outer;
        parity ^= 1;
    }

    let t = attachment_position(sig);
    let second: Vec<usize> = (0..n).map(|j| boundary[(t + n - j) % n]).collect();
    faces.extend(spine_faces(&second));

    let map = CombinatorialMap::from_faces(next_vertex, &faces)
        .map_err(|e| Error::Internal(format!("gluing spines for {sig}: {e}")))?;
    if map.num_vertices() as u64 != sig.vertices() {
        return Err(Error::Internal(format!(
            "spine build of {sig} has {} vertices",
            map.num_vertices()
        )));
    }
    Ok(map)
}
