//! Exact Eulerian-type numbers.
//!
//! * `A(n,k)`: permutations of `[n]` with `k` weak excedances, by recurrence and
//!   by the alternating closed form.
//! * `A(n,k; a,d)`: the general Eulerian numbers of the progression
//!   `a, a+d, a+2d, ...`.
//! * `c(n,k; j)`: coefficients of the expansion
//!   `A(n,k; a,d) = sum_j c(n,k; j) C(n,j) (d-a)^(n-j) a^j`.
//! * `a(n,k,i)` and the q-Eulerian polynomials built from it.
//!
//! Indices outside their natural range yield zero, and `0^0 = 1` everywhere.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::permutation::{enumerate_permutations, EnumerationCap};
use crate::poly::UniPolynomial;

pub type ExactInt = BigInt;

fn pow(base: i64, exponent: usize) -> BigInt {
    BigInt::from(base).pow(exponent as u32)
}

fn sign(i: usize) -> BigInt {
    if i.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `C(n, i)`, zero when `i < 0` or `i > n`.
pub fn binomial(n: u64, i: i64) -> ExactInt {
    if i < 0 || i as u64 > n {
        return BigInt::zero();
    }
    let i = (i as u64).min(n - i as u64);
    let mut acc = BigInt::one();
    for t in 0..i {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

pub fn factorial(n: usize) -> ExactInt {
    (1..=n as u64).fold(BigInt::one(), |acc, t| acc * t)
}

/// Rows `0..=n` of the Eulerian triangle from `A(m,k) = k A(m-1,k) + (m+1-k) A(m-1,k-1)`.
///
/// Row `m` has entries for `k = 0..=m`; the `k = 0` entry is zero for `m >= 1`.
pub fn eulerian_triangle(n: usize) -> Vec<Vec<ExactInt>> {
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::zero()]);
    for m in 1..=n {
        let prev = &rows[m - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let mut row = vec![BigInt::zero(); m + 1];
        row[1] = BigInt::one();
        for (k, slot) in row.iter_mut().enumerate().skip(2) {
            *slot = at(k) * k + at(k - 1) * (m + 1 - k);
        }
        rows.push(row);
    }
    rows
}

/// `A(n,k)` by the recurrence, with `A(n,1) = 1` and zero outside `1..=n`.
pub fn eulerian_recurrence(n: usize, k: usize) -> ExactInt {
    if k < 1 || k > n {
        return BigInt::zero();
    }
    eulerian_triangle(n).swap_remove(n).swap_remove(k)
}

/// `A(n,k) = sum_{i<k} (-1)^i (k-i)^n C(n+1,i)`, zero outside `1..=n`.
pub fn eulerian_analytic(n: usize, k: usize) -> ExactInt {
    if k < 1 || k > n {
        return BigInt::zero();
    }
    (0..k)
        .map(|i| sign(i) * pow((k - i) as i64, n) * binomial(n as u64 + 1, i as i64))
        .sum()
}

/// `A(n,k; a,d) = sum_{i<=k} (-1)^i ((k+1-i)d - a)^n C(n+1,i)` for arbitrary
/// integers `a`, `d`.
pub fn general_eulerian(n: usize, k: usize, a: &ExactInt, d: &ExactInt) -> ExactInt {
    (0..=k)
        .map(|i| {
            let base = d * (k + 1 - i) - a;
            sign(i) * base.pow(n as u32) * binomial(n as u64 + 1, i as i64)
        })
        .sum()
}

/// `c(n,k; j) = sum_{i<=k} (-1)^i (k+1-i)^(n-j) (k-i)^j C(n+1,i)`, zero when
/// `k > n` or `j > n`.
pub fn cnk_coefficient(n: usize, k: usize, j: usize) -> ExactInt {
    if k > n || j > n {
        return BigInt::zero();
    }
    (0..=k)
        .map(|i| {
            sign(i)
                * pow((k + 1 - i) as i64, n - j)
                * pow((k - i) as i64, j)
                * binomial(n as u64 + 1, i as i64)
        })
        .sum()
}

/// Both sides of the identity obtained from `c(n,k; j) = c(n,n-k; n-j)` after
/// substituting the closed form: the left sum runs over `i <= k`, the right over
/// `l <= n-k`.
pub fn remark_sides(n: usize, k: usize, j: usize) -> (ExactInt, ExactInt) {
    if k > n || j > n {
        return (BigInt::zero(), BigInt::zero());
    }
    let left = cnk_coefficient(n, k, j);
    let right = (0..=n - k)
        .map(|l| {
            sign(l)
                * pow((n + 1 - k - l) as i64, j)
                * pow((n - k - l) as i64, n - j)
                * binomial(n as u64 + 1, l as i64)
        })
        .sum();
    (left, right)
}

pub fn remark_identity_holds(n: usize, k: usize, j: usize) -> bool {
    let (left, right) = remark_sides(n, k, j);
    left == right
}

/// `c(n,k; 0..=n)` for one `(n,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionRow {
    pub n: usize,
    pub k: usize,
    pub coeffs: Vec<ExactInt>,
}

impl ExpansionRow {
    /// `sum_j c(n,k; j) C(n,j) (d-a)^(n-j) a^j`.
    pub fn reconstruct(&self, a: &ExactInt, d: &ExactInt) -> ExactInt {
        let diff = d - a;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c * binomial(self.n as u64, j as i64)
                    * diff.pow((self.n - j) as u32)
                    * a.pow(j as u32)
            })
            .sum()
    }
}

pub fn expansion_row(n: usize, k: usize) -> ExpansionRow {
    ExpansionRow {
        n,
        k,
        coeffs: (0..=n).map(|j| cnk_coefficient(n, k, j)).collect(),
    }
}

/// Memoizes expansion rows per `(n,k)`; shareable across threads.
#[derive(Debug, Default)]
pub struct ExpansionCache {
    rows: RwLock<HashMap<(usize, usize), Arc<ExpansionRow>>>,
}

impl ExpansionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&self, n: usize, k: usize) -> Arc<ExpansionRow> {
        if let Some(row) = self.rows.read().expect("cache lock").get(&(n, k)) {
            return Arc::clone(row);
        }
        let row = Arc::new(expansion_row(n, k));
        let mut rows = self.rows.write().expect("cache lock");
        Arc::clone(rows.entry((n, k)).or_insert(row))
    }

    pub fn coefficient(&self, n: usize, k: usize, j: usize) -> ExactInt {
        if k > n || j > n {
            return BigInt::zero();
        }
        self.row(n, k).coeffs[j].clone()
    }

    pub fn len(&self) -> usize {
        self.rows.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Joint distribution of (ascents, major index) over `S_n`.
#[derive(Debug, Clone)]
pub struct MajAscentCensus {
    n: usize,
    // counts[ascents][maj]
    counts: Vec<Vec<u64>>,
}

impl MajAscentCensus {
    pub fn new(n: usize, cap: EnumerationCap) -> Result<Self> {
        let max_maj = n * n.saturating_sub(1) / 2;
        let mut counts = vec![vec![0u64; max_maj + 1]; n];
        for pi in enumerate_permutations(n, cap)? {
            counts[pi.ascent_count()][pi.major_index()] += 1;
        }
        Ok(MajAscentCensus { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a(n,k,i)`: permutations with major index `i` and `k` ascents.
    pub fn count(&self, ascents: usize, maj: usize) -> u64 {
        self.counts
            .get(ascents)
            .and_then(|row| row.get(maj))
            .copied()
            .unwrap_or(0)
    }

    /// `sum_i a(n,k,i) q^i`.
    pub fn distribution(&self, ascents: usize) -> UniPolynomial {
        match self.counts.get(ascents) {
            Some(row) => UniPolynomial::from_terms(
                row.iter()
                    .enumerate()
                    .map(|(maj, &c)| (maj as u32, BigInt::from(c))),
            ),
            None => UniPolynomial::zero(),
        }
    }
}

/// `a(n,k,i)` by exhaustive enumeration.
pub fn a_stat(n: usize, k: usize, i: usize, cap: EnumerationCap) -> Result<ExactInt> {
    Ok(BigInt::from(MajAscentCensus::new(n, cap)?.count(k, i)))
}

/// Power of `q` multiplying the q-Eulerian sum; the undefined `m` of the
/// defining formula is read as `n`.
pub fn q_eulerian_shift(n: usize, k: usize) -> u32 {
    ((n + 1 - k) * (n - k) / 2) as u32
}

/// `A(n,k)(q) = q^((n-k+1)(n-k)/2) * sum_i a(n,n-k,i) q^i` for `0 <= k <= n-1`,
/// summing over the full support of `a(n,n-k,.)`. Zero for other `k`.
pub fn q_eulerian(n: usize, k: usize, cap: EnumerationCap) -> Result<UniPolynomial> {
    let census = MajAscentCensus::new(n, cap)?;
    Ok(q_eulerian_from_census(&census, k))
}

pub fn q_eulerian_from_census(census: &MajAscentCensus, k: usize) -> UniPolynomial {
    let n = census.n();
    if k >= n {
        return UniPolynomial::zero();
    }
    census.distribution(n - k).shifted(q_eulerian_shift(n, k))
}

/// Where the support of `a(n,n-k,.)` sits relative to the printed upper
/// summation limit `k(n-k-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSupportReport {
    pub n: usize,
    pub k: usize,
    pub stated_bound: usize,
    /// Largest `i` with `a(n,n-k,i) != 0`, if any.
    pub support_max: Option<usize>,
    /// Sum of the coefficients above the stated bound.
    pub mass_beyond_bound: u64,
}

impl QSupportReport {
    pub fn within_bound(&self) -> bool {
        self.mass_beyond_bound == 0
    }
}

pub fn q_support_report(census: &MajAscentCensus, k: usize) -> QSupportReport {
    let n = census.n();
    let stated_bound = k * (n.saturating_sub(k + 1));
    let ascents = n.saturating_sub(k);
    let row: &[u64] = if k <= n {
        census.counts.get(ascents).map_or(&[], Vec::as_slice)
    } else {
        &[]
    };
    let support_max = row.iter().rposition(|&c| c != 0);
    let mass_beyond_bound = row.iter().skip(stated_bound + 1).sum();
    QSupportReport {
        n,
        k,
        stated_bound,
        support_max,
        mass_beyond_bound,
    }
}
