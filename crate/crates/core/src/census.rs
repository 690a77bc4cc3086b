//! Counting trihexes by vertex count.
//!
//! `sigma(v)` counts signatures, `alpha(v)` counts trihexes up to
//! orientation-preserving equivalence and `beta(v)` counts them up to graph
//! isomorphism (mirror images identified).

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// Prime factorization as `(prime, exponent)` pairs with increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn of(mut n: u64) -> Factorization {
        assert!(n > 0, "cannot factor zero");
        let mut factors = Vec::new();
        let mut push = |p: u64, n: &mut u64| {
            let mut e = 0;
            while (*n).is_multiple_of(p) {
                *n /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        };
        for &p in small_primes() {
            if p * p > n {
                break;
            }
            push(p, &mut n);
        }
        // beyond the table, fall back to odd trial divisors
        let mut d = SMALL_PRIME_LIMIT + 1;
        while d * d <= n {
            push(d, &mut n);
            d += 2;
        }
        if n > 1 {
            factors.push((n, 1));
        }
        Factorization(factors)
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn product(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Sum of divisors via `prod (p^(m+1) - 1) / (p - 1)`.
    pub fn divisor_sum(&self) -> u64 {
        self.0
            .iter()
            .map(|&(p, e)| (p.pow(e + 1) - 1) / (p - 1))
            .product()
    }
}

const SMALL_PRIME_LIMIT: u64 = 1001;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SMALL_PRIME_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn quarter(v: u64) -> Result<u64> {
    if v == 0 || !v.is_multiple_of(4) {
        return Err(Error::VertexCount(v));
    }
    Ok(v / 4)
}

/// Number of signatures with `v` vertices: the divisor sum of `v / 4`.
pub fn sigma(v: u64) -> Result<u64> {
    Ok(Factorization::of(quarter(v)?).divisor_sum())
}

/// All signatures with `v` vertices in lexicographic `(s, b, f)` order.
pub fn signatures_for_vertices(v: u64) -> Result<Vec<Signature>> {
    let n = quarter(v)?;
    let mut out = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0) {
        let (s, b) = (d - 1, n / d - 1);
        out.extend((0..=s).map(|f| Signature::normalized(s, b, f as i128)));
    }
    Ok(out)
}

/// Number of equivalence classes of trihexes with `v` vertices.
pub fn alpha(v: u64) -> Result<u64> {
    let mut seen = HashSet::new();
    for sig in signatures_for_vertices(v)? {
        seen.insert(sig.class()?.canonical());
    }
    Ok(seen.len() as u64)
}

/// Number of graph isomorphism classes of trihexes with `v` vertices.
pub fn beta(v: u64) -> Result<u64> {
    let mut seen = HashSet::new();
    for sig in signatures_for_vertices(v)? {
        seen.insert(sig.merged_class()?.canonical());
    }
    Ok(seen.len() as u64)
}

/// One line of the census table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub v: u64,
    pub sigma: u64,
    pub alpha: u64,
    pub beta: u64,
    pub ceil_sigma_3: u64,
    pub ceil_sigma_6: u64,
}

impl CensusRow {
    pub fn compute(v: u64) -> Result<CensusRow> {
        let sigs = signatures_for_vertices(v)?;
        let mut classes = HashSet::new();
        let mut merged = HashSet::new();
        for sig in &sigs {
            classes.insert(sig.class()?.canonical());
            merged.insert(sig.merged_class()?.canonical());
        }
        let sigma = sigma(v)?;
        if sigma != sigs.len() as u64 {
            return Err(Error::Internal(format!(
                "divisor sum {sigma} disagrees with {} enumerated signatures at v = {v}",
                sigs.len()
            )));
        }
        Ok(CensusRow {
            v,
            sigma,
            alpha: classes.len() as u64,
            beta: merged.len() as u64,
            ceil_sigma_3: sigma.div_ceil(3),
            ceil_sigma_6: sigma.div_ceil(6),
        })
    }

    /// `alpha - ceil(sigma / 3)`.
    pub fn alpha_gap(&self) -> i64 {
        self.alpha as i64 - self.ceil_sigma_3 as i64
    }

    /// `beta - ceil(sigma / 6)`.
    pub fn beta_gap(&self) -> i64 {
        self.beta as i64 - self.ceil_sigma_6 as i64
    }

    /// The class-count bounds `sigma/3 <= alpha <= sigma`, `sigma/6 <= beta <= sigma`
    /// and `beta <= alpha <= 2 beta`.
    pub fn bounds_hold(&self) -> bool {
        self.ceil_sigma_3 <= self.alpha
            && self.alpha <= self.sigma
            && self.ceil_sigma_6 <= self.beta
            && self.beta <= self.sigma
            && self.beta <= self.alpha
            && self.alpha <= 2 * self.beta
    }

    pub const CSV_HEADER: &'static str = "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6";
}

impl fmt::Display for CensusRow {
    /// CSV record without line terminator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.v, self.sigma, self.alpha, self.beta, self.ceil_sigma_3, self.ceil_sigma_6
        )
    }
}

/// Rows for every multiple of 4 in `v_min..=v_max`, ascending.
pub fn census(v_min: u64, v_max: u64) -> Result<Vec<CensusRow>> {
    let start = v_min.max(4).next_multiple_of(4);
    (start..=v_max).step_by(4).map(CensusRow::compute).collect()
}

/// Write the census as CSV with LF line endings.
pub fn write_csv<W: std::io::Write>(rows: &[CensusRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", CensusRow::CSV_HEADER)?;
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(())
}

/// Summary of how far the class counts sit above their lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureStats {
    pub v_min: u64,
    pub v_max: u64,
    pub rows: u64,
    pub alpha_gap_max: i64,
    /// Fraction of rows with `alpha - ceil(sigma/3) > 1`.
    pub alpha_gap_exceed: Ratio<u64>,
    pub beta_gap_max: i64,
    /// Fraction of rows with `beta - ceil(sigma/6) > 1`.
    pub beta_gap_exceed: Ratio<u64>,
    /// Largest `alpha / (sigma/3)`.
    pub alpha_ratio_max: Ratio<u64>,
    /// Largest `beta / (sigma/6)`.
    pub beta_ratio_max: Ratio<u64>,
    /// Smallest `alpha / (sigma/3)`; at least 1 when the lower bound holds.
    pub alpha_ratio_min: Ratio<u64>,
    pub beta_ratio_min: Ratio<u64>,
}

pub fn conjecture_stats(v_min: u64, v_max: u64) -> Result<ConjectureStats> {
    let rows = census(v_min, v_max)?;
    if rows.is_empty() {
        return Err(Error::EmptyRange {
            from: v_min,
            to: v_max,
        });
    }
    Ok(stats_from_rows(v_min, v_max, &rows))
}

pub fn stats_from_rows(v_min: u64, v_max: u64, rows: &[CensusRow]) -> ConjectureStats {
    let n = rows.len() as u64;
    let alpha_ratio = |r: &CensusRow| Ratio::new(3 * r.alpha, r.sigma);
    let beta_ratio = |r: &CensusRow| Ratio::new(6 * r.beta, r.sigma);
    ConjectureStats {
        v_min,
        v_max,
        rows: n,
        alpha_gap_max: rows.iter().map(CensusRow::alpha_gap).max().unwrap_or(0),
        alpha_gap_exceed: Ratio::new(rows.iter().filter(|r| r.alpha_gap() > 1).count() as u64, n),
        beta_gap_max: rows.iter().map(CensusRow::beta_gap).max().unwrap_or(0),
        beta_gap_exceed: Ratio::new(rows.iter().filter(|r| r.beta_gap() > 1).count() as u64, n),
        alpha_ratio_max: rows.iter().map(alpha_ratio).max().unwrap_or_default(),
        beta_ratio_max: rows.iter().map(beta_ratio).max().unwrap_or_default(),
        alpha_ratio_min: rows.iter().map(alpha_ratio).min().unwrap_or_default(),
        beta_ratio_min: rows.iter().map(beta_ratio).min().unwrap_or_default(),
    }
}

/// Decimal rendering rounded half-up to three places.
pub fn decimal3(r: Ratio<u64>) -> String {
    let scaled = (*r.numer() as u128 * 1000 * 2 + *r.denom() as u128) / (2 * *r.denom() as u128);
    format!("{}.{:03}", scaled / 1000, scaled % 1000)
}

impl fmt::Display for ConjectureStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "range {}..={} ({} values of v)",
            self.v_min, self.v_max, self.rows
        )?;
        writeln!(
            f,
            "alpha - ceil(sigma/3): max {}, > 1 in {} = {}",
            self.alpha_gap_max,
            self.alpha_gap_exceed,
            decimal3(self.alpha_gap_exceed)
        )?;
        writeln!(
            f,
            "beta - ceil(sigma/6): max {}, > 1 in {} = {}",
            self.beta_gap_max,
            self.beta_gap_exceed,
            decimal3(self.beta_gap_exceed)
        )?;
        writeln!(
            f,
            "alpha / (sigma/3): min {} = {}, max {} = {}",
            self.alpha_ratio_min,
            decimal3(self.alpha_ratio_min),
            self.alpha_ratio_max,
            decimal3(self.alpha_ratio_max)
        )?;
        write!(
            f,
            "beta / (sigma/6): min {} = {}, max {} = {}",
            self.beta_ratio_min,
            decimal3(self.beta_ratio_min),
            self.beta_ratio_max,
            decimal3(self.beta_ratio_max)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_divisor_sum(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(48), Ok(28));
        assert_eq!(sigma(4), Ok(1));
        assert_eq!(sigma(28), Ok(8));
        assert_eq!(sigma(30), Err(Error::VertexCount(30)));
        assert_eq!(sigma(0), Err(Error::VertexCount(0)));
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..3000 {
            let f = Factorization::of(n);
            assert_eq!(f.product(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        }
        let big = 1_000_003u64 * 2;
        assert_eq!(Factorization::of(big).factors(), &[(2, 1), (1_000_003, 1)]);
        assert_eq!(
            Factorization::of(1_000_003 * 1_000_033).product(),
            1_000_003 * 1_000_033
        );
    }

    #[test]
    fn sigma_matches_naive_sum() {
        for n in 1..=300 {
            assert_eq!(sigma(4 * n).unwrap(), naive_divisor_sum(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let s = |s, b, f| Signature::new(s, b, f).unwrap();
        assert_eq!(signatures_for_vertices(4).unwrap(), vec![s(0, 0, 0)]);
        assert_eq!(
            signatures_for_vertices(8).unwrap(),
            vec![s(0, 1, 0), s(1, 0, 0), s(1, 0, 1)]
        );
        assert_eq!(
            signatures_for_vertices(12).unwrap(),
            vec![s(0, 2, 0), s(2, 0, 0), s(2, 0, 1), s(2, 0, 2)]
        );
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(alpha(28), Ok(4));
        assert_eq!(alpha(4), Ok(1));
        assert_eq!(alpha(96), Ok(20));
        assert_eq!(beta(24), Ok(3));
        assert_eq!(beta(4), Ok(1));
        assert_eq!(beta(192), Ok(28));
    }

    #[test]
    fn census_examples() {
        let rows = census(4, 12).unwrap();
        assert_eq!(rows.iter().map(|r| r.v).collect::<Vec<_>>(), vec![4, 8, 12]);
        assert_eq!(
            rows.iter().map(|r| r.alpha).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
        let rows = census(200, 200).unwrap();
        assert_eq!((rows[0].alpha, rows[0].beta), (31, 17));
        assert!(census(5, 7).unwrap().is_empty());
    }

    #[test]
    fn csv_format() {
        let mut buf = Vec::new();
        write_csv(&census(4, 8).unwrap(), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6\n4,1,1,1,1,1\n8,3,1,1,1,1\n"
        );
    }

    #[test]
    fn single_tetrahedron_stats() {
        let st = conjecture_stats(4, 4).unwrap();
        assert_eq!(st.alpha_gap_max, 0);
        assert_eq!(st.beta_gap_max, 0);
        assert_eq!(st.rows, 1);
        assert!(matches!(
            conjecture_stats(5, 7),
            Err(Error::EmptyRange { .. })
        ));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal3(Ratio::new(1, 40)), "0.025");
        assert_eq!(decimal3(Ratio::new(2, 3)), "0.667");
        assert_eq!(decimal3(Ratio::new(5, 4)), "1.250");
    }
}
