//! Integer model of the hexagonal tiling and of the rotocenter lattice.
//!
//! Hexagons are addressed by `(q, r)`: `q` counts steps along the SW to NE
//! diagonal (and is the column index), `r` counts steps south within a
//! column. A step in the NW to SE direction is therefore `(q + 1, r + 1)`.
//!
//! The group generated by half-turns about the points of a lattice `L` acts
//! on hexagons by `x -> ±x + t` with `t ∈ 2L`. All orbit computations reduce
//! modulo the doubled lattice `2L`, whose basis `{2u, 2w}` is already in
//! triangular form because `u = (0, s+1)` is vertical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HexCoord {
    pub q: i64,
    pub r: i64,
}

impl HexCoord {
    pub const fn new(q: i64, r: i64) -> Self {
        HexCoord { q, r }
    }

    /// The six tiling neighbors, counterclockwise starting from north.
    pub fn neighbors(self) -> [HexCoord; 6] {
        let HexCoord { q, r } = self;
        [
            HexCoord::new(q, r - 1),
            HexCoord::new(q - 1, r - 1),
            HexCoord::new(q - 1, r),
            HexCoord::new(q, r + 1),
            HexCoord::new(q + 1, r + 1),
            HexCoord::new(q + 1, r),
        ]
    }

    pub fn is_adjacent(self, other: HexCoord) -> bool {
        matches!(
            (other.q - self.q, other.r - self.r),
            (0, 1) | (0, -1) | (1, 0) | (-1, 0) | (1, 1) | (-1, -1)
        )
    }
}

impl Add for HexCoord {
    type Output = HexCoord;
    fn add(self, o: HexCoord) -> HexCoord {
        HexCoord::new(self.q + o.q, self.r + o.r)
    }
}

impl Sub for HexCoord {
    type Output = HexCoord;
    fn sub(self, o: HexCoord) -> HexCoord {
        HexCoord::new(self.q - o.q, self.r - o.r)
    }
}

impl Neg for HexCoord {
    type Output = HexCoord;
    fn neg(self) -> HexCoord {
        HexCoord::new(-self.q, -self.r)
    }
}

impl Mul<HexCoord> for i64 {
    type Output = HexCoord;
    fn mul(self, h: HexCoord) -> HexCoord {
        HexCoord::new(self * h.q, self * h.r)
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.r)
    }
}

/// Lattice of special hexagon centers for a signature, with basis
/// `u = (0, s+1)` and `w = (b+1, -f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotocenterLattice {
    u: HexCoord,
    w: HexCoord,
    source: Signature,
}

impl RotocenterLattice {
    pub fn new(sig: Signature) -> Self {
        RotocenterLattice {
            u: HexCoord::new(0, sig.s() as i64 + 1),
            w: HexCoord::new(sig.b() as i64 + 1, -(sig.f() as i64)),
            source: sig,
        }
    }

    pub fn u(&self) -> HexCoord {
        self.u
    }

    pub fn w(&self) -> HexCoord {
        self.w
    }

    pub fn source(&self) -> Signature {
        self.source
    }

    /// `det(u, w)`; its absolute value is `v / 4`.
    pub fn det(&self) -> i64 {
        self.u.q * self.w.r - self.u.r * self.w.q
    }

    /// Whether `h` is an integer combination of `u` and `w`.
    pub fn contains(&self, h: HexCoord) -> bool {
        let cols = self.w.q;
        if h.q.rem_euclid(cols) != 0 {
            return false;
        }
        let n = h.q / cols;
        (h.r - n * self.w.r).rem_euclid(self.u.r) == 0
    }

    /// Size of the fundamental box of `2L`: `(2(b+1), 2(s+1))`.
    pub fn box_dims(&self) -> (i64, i64) {
        (2 * self.w.q, 2 * self.u.r)
    }

    /// Number of cosets of `2L`, equal to the vertex count `v`.
    pub fn index_of_doubled(&self) -> usize {
        let (a, b) = self.box_dims();
        (a * b) as usize
    }

    /// Unique representative of `h + 2L` in the box `[0, 2(b+1)) x [0, 2(s+1))`.
    pub fn reduce(&self, h: HexCoord) -> HexCoord {
        let (width, height) = self.box_dims();
        let n = h.q.div_euclid(width);
        let q = h.q - n * width;
        let r = (h.r - n * 2 * self.w.r).rem_euclid(height);
        HexCoord::new(q, r)
    }

    /// Position of a reduced coordinate in the box, column-major.
    pub fn box_index(&self, reduced: HexCoord) -> usize {
        let (_, height) = self.box_dims();
        (reduced.q * height + reduced.r) as usize
    }

    /// Inverse of [`box_index`](Self::box_index).
    pub fn box_point(&self, index: usize) -> HexCoord {
        let (_, height) = self.box_dims();
        HexCoord::new(index as i64 / height, index as i64 % height)
    }

    /// All coset representatives of `2L`.
    pub fn residues(&self) -> impl Iterator<Item = HexCoord> + '_ {
        (0..self.index_of_doubled()).map(|i| self.box_point(i))
    }

    /// Orbit representative of a hexagon: the lexicographically smaller of
    /// the reductions of `h` and `-h`.
    pub fn canonical_hex_orbit(&self, h: HexCoord) -> HexCoord {
        self.reduce(h).min(self.reduce(-h))
    }

    /// Whether `h` is fixed by a half-turn of the group, i.e. lies in `L`.
    pub fn is_rotocenter(&self, h: HexCoord) -> bool {
        self.contains(h)
    }

    /// Orbit representative of a tiling vertex: the upward triple whose
    /// base hexagon lies in the fundamental box.
    pub fn canonical_vertex_orbit(&self, x: TilingVertex) -> TilingVertex {
        TilingVertex::upward(self.reduce(x.upward_base()))
    }

    /// Index of the vertex orbit of `x` in `0..v`.
    pub fn vertex_orbit_index(&self, x: TilingVertex) -> usize {
        self.box_index(self.reduce(x.upward_base()))
    }
}

impl fmt::Display for RotocenterLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} w={}", self.u, self.w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexShape {
    /// `{(q,r), (q+1,r), (q+1,r+1)}`: the vertex sits east of `(q,r)`.
    Upward,
    /// `{(q,r), (q,r+1), (q+1,r+1)}`: the vertex sits west of `(q+1,r+1)`.
    Downward,
}

/// A vertex of the honeycomb, named by the three hexagons around it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingVertex([HexCoord; 3]);

impl TilingVertex {
    pub fn new(a: HexCoord, b: HexCoord, c: HexCoord) -> Result<Self> {
        if !(a.is_adjacent(b) && b.is_adjacent(c) && a.is_adjacent(c)) {
            return Err(Error::MalformedVertex(format!(
                "{a}, {b}, {c} are not pairwise adjacent"
            )));
        }
        let mut hexes = [a, b, c];
        hexes.sort();
        Ok(TilingVertex(hexes))
    }

    pub fn upward(base: HexCoord) -> Self {
        TilingVertex([base, base + HexCoord::new(1, 0), base + HexCoord::new(1, 1)])
    }

    pub fn downward(base: HexCoord) -> Self {
        TilingVertex([base, base + HexCoord::new(0, 1), base + HexCoord::new(1, 1)])
    }

    /// The three hexagons in sorted order.
    pub fn hexagons(&self) -> [HexCoord; 3] {
        self.0
    }

    pub fn shape(&self) -> VertexShape {
        if self.0[1].q == self.0[0].q {
            VertexShape::Downward
        } else {
            VertexShape::Upward
        }
    }

    pub fn base(&self) -> HexCoord {
        self.0[0]
    }

    /// Image under `x -> -x`, which swaps the two shapes.
    pub fn negated(&self) -> TilingVertex {
        let [a, b, c] = self.0;
        let mut hexes = [-a, -b, -c];
        hexes.sort();
        TilingVertex(hexes)
    }

    /// Base of the upward triple in the same `x -> -x + t` orbit class.
    fn upward_base(&self) -> HexCoord {
        match self.shape() {
            VertexShape::Upward => self.base(),
            VertexShape::Downward => -self.base() - HexCoord::new(1, 1),
        }
    }

    pub fn translated(&self, t: HexCoord) -> TilingVertex {
        let [a, b, c] = self.0;
        TilingVertex([a + t, b + t, c + t])
    }
}
