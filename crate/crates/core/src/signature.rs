//! Signature arithmetic.
//!
//! A signature `(s, b, f)` names a trihex built from two spines of `s`
//! hexagons, `b` belts of `2s + 2` hexagons between them, and the offset `f`
//! at which the second spine is attached. The same trihex can be read off
//! along three directions of the covering hexagonal tiling, giving up to
//! three equivalent signatures.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Ordered triple `(s, b, f)` with `0 <= f <= s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    s: u64,
    b: u64,
    f: u64,
}

impl Signature {
    /// Strict constructor: rejects an offset outside `0..=s`.
    pub fn new(s: u64, b: u64, f: u64) -> Result<Self> {
        if f > s {
            return Err(Error::OffsetOutOfRange { s, f });
        }
        Ok(Signature { s, b, f })
    }

    /// Builds a signature with the offset reduced modulo `s + 1`.
    pub fn normalized(s: u64, b: u64, f: i128) -> Self {
        let f = f.rem_euclid(s as i128 + 1) as u64;
        Signature { s, b, f }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    /// Number of hexagonal faces, `2(s+1)(b+1) - 2`.
    pub fn hexagons(&self) -> u64 {
        2 * (self.s + 1) * (self.b + 1) - 2
    }

    /// Number of vertices, `4(s+1)(b+1)`.
    pub fn vertices(&self) -> u64 {
        4 * (self.s + 1) * (self.b + 1)
    }

    /// `(hexagons, vertices)`.
    pub fn counts(&self) -> (u64, u64) {
        (self.hexagons(), self.vertices())
    }

    /// Table ordering key: fewest belts first, then smallest offset.
    fn table_key(&self) -> (u64, u64, u64) {
        (self.b, self.f, self.s)
    }

    /// Compares two signatures by the class-representative key `(b, f)`.
    pub fn cmp_table(&self, other: &Signature) -> Ordering {
        self.table_key().cmp(&other.table_key())
    }

    /// The mirror image `(s, b, s - f - b mod (s+1))`.
    pub fn mirror(&self) -> Signature {
        Signature::normalized(
            self.s,
            self.b,
            self.s as i128 - self.f as i128 - self.b as i128,
        )
    }

    /// True when the trihex has no belts: `b = 0` and `f`, `f + 1`, `s + 1`
    /// pairwise coprime.
    pub fn is_tight(&self) -> bool {
        let m = self.s + 1;
        self.b == 0 && gcd(self.f, m) == 1 && gcd(self.f + 1, m) == 1
    }

    /// The signature read along the other two spine directions.
    pub fn derive_equivalents(&self) -> Result<EquivalenceDerivation> {
        let (s1, b1, f1) = (self.s, self.b, self.f);
        let m = s1 + 1;
        let h = 2 * s1 * b1 + 2 * s1 + 2 * b1;

        // SW to NE
        let j2 = additive_order(f1, m);
        let s2 = j2 * (b1 + 1) - 1;
        let b2 = belts_for_spine(h, s2)?;
        let p2 = smallest_positive_solution(f1, b2 + 1, m).ok_or_else(|| {
            Error::Internal(format!(
                "no p >= 1 with p*{f1} = {} mod {m} for {self}",
                b2 + 1
            ))
        })?;
        let f2 = s2 as i128 - (p2 * (b1 + 1)) as i128 - b2 as i128;
        let sig2 = Signature::normalized(s2, b2, f2);

        // NW to SE
        let step = (f1 + b1 + 1) % m;
        let j3 = additive_order(step, m);
        let s3 = j3 * (b1 + 1) - 1;
        let b3 = belts_for_spine(h, s3)?;
        let p3 = smallest_positive_solution(step, b3 + 1, m).ok_or_else(|| {
            Error::Internal(format!(
                "no p >= 1 with p*{step} = {} mod {m} for {self}",
                b3 + 1
            ))
        })?;
        let f3 = (s3 + 1) as i128 - (p3 * (b1 + 1)) as i128;
        let sig3 = Signature::normalized(s3, b3, f3);

        let derivation = EquivalenceDerivation {
            j2,
            j3,
            p2,
            p3,
            sig2,
            sig3,
            h,
        };
        if sig2.vertices() != self.vertices() || sig3.vertices() != self.vertices() {
            return Err(Error::Internal(format!(
                "vertex count not preserved for {self}: {derivation:?}"
            )));
        }
        Ok(derivation)
    }

    /// The class of equivalent signatures together with the derivation.
    pub fn equivalent_signatures(&self) -> Result<(SignatureClass, EquivalenceDerivation)> {
        let derivation = self.derive_equivalents()?;
        let members: BTreeSet<Signature> = [*self, derivation.sig2, derivation.sig3]
            .into_iter()
            .collect();
        if members.len() == 2 {
            return Err(Error::Internal(format!(
                "{self} has exactly two distinct equivalent signatures: {members:?}"
            )));
        }
        let mirror_members: BTreeSet<Signature> = members.iter().map(|m| m.mirror()).collect();
        let chiral = members.is_disjoint(&mirror_members);
        Ok((SignatureClass::from_members(members, chiral), derivation))
    }

    /// Equivalence class only.
    pub fn class(&self) -> Result<SignatureClass> {
        Ok(self.equivalent_signatures()?.0)
    }

    /// Union of this signature's class and its mirror's class.
    pub fn merged_class(&self) -> Result<SignatureClass> {
        let own = self.class()?;
        let mirrored = self.mirror().class()?;
        let chiral = own.members.iter().all(|m| !mirrored.contains(m));
        let members = own.members.iter().chain(mirrored.members.iter()).copied();
        Ok(SignatureClass::from_members(members.collect(), chiral))
    }
}

fn belts_for_spine(h: u64, spine: u64) -> Result<u64> {
    let num = h as i128 - 2 * spine as i128;
    let den = 2 * spine as i128 + 2;
    if num < 0 || num % den != 0 {
        return Err(Error::Internal(format!(
            "belt count ({h} - 2*{spine}) / (2*{spine} + 2) is not a non-negative integer"
        )));
    }
    Ok((num / den) as u64)
}

/// `s,b,f`; the alternate form `{:#}` prints `(s,b,f)`.
impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "({},{},{})", self.s, self.b, self.f)
        } else {
            write!(f, "{},{},{}", self.s, self.b, self.f)
        }
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let syntax = || Error::SignatureSyntax(text.to_string());
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(syntax());
        }
        let mut values = [0u64; 3];
        for (slot, part) in values.iter_mut().zip(&parts) {
            if part.is_empty() || !part.bytes().all(|c| c.is_ascii_digit()) {
                return Err(syntax());
            }
            *slot = part.parse().map_err(|_| syntax())?;
        }
        Signature::new(values[0], values[1], values[2])
    }
}

/// Intermediate values of the two re-descriptions of a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceDerivation {
    pub j2: u64,
    pub j3: u64,
    pub p2: u64,
    pub p3: u64,
    pub sig2: Signature,
    pub sig3: Signature,
    pub h: u64,
}

/// A set of signatures naming the same trihex (or, for a merged class, the
/// same graph up to reflection).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignatureClass {
    members: Vec<Signature>,
    chiral: bool,
}

impl SignatureClass {
    fn from_members(members: BTreeSet<Signature>, chiral: bool) -> Self {
        let mut members: Vec<Signature> = members.into_iter().collect();
        members.sort_by(Signature::cmp_table);
        SignatureClass { members, chiral }
    }

    /// Members ordered by `(b, f)`.
    pub fn members(&self) -> &[Signature] {
        &self.members
    }

    /// The member with the smallest `(b, f)`.
    pub fn canonical(&self) -> Signature {
        self.members[0]
    }

    /// Whether the mirror image lies in a different class.
    pub fn is_chiral(&self) -> bool {
        self.chiral
    }

    pub fn contains(&self, sig: &Signature) -> bool {
        self.members.contains(sig)
    }

    pub fn vertices(&self) -> u64 {
        self.members[0].vertices()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for SignatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m:#}")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Order of `a` in the cyclic group Z/m: smallest `j >= 1` with `j*a = 0 mod m`.
pub fn additive_order(a: u64, m: u64) -> u64 {
    m / gcd(a % m, m)
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Smallest `p >= 1` with `p * a = c (mod m)`, or `None` when unsolvable.
pub fn smallest_positive_solution(a: u64, c: u64, m: u64) -> Option<u64> {
    let (a, c, m) = ((a % m) as i128, (c % m) as i128, m as i128);
    let (g, x, _) = extended_gcd(a, m);
    if c % g != 0 {
        return None;
    }
    let period = m / g;
    let p = (x * (c / g)).rem_euclid(period);
    Some(if p == 0 { period as u64 } else { p as u64 })
}
