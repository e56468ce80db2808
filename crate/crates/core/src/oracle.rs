//! Brute-force oracles for the combinatorial reading of `c(n,k; j)`.
//!
//! Everything here walks an explicit space (all of `S_n`, or every placement of
//! `[n]` into compartments) and counts. Nothing is clever; the point is that the
//! counts are obviously right, so the closed forms in [`crate::numbers`] can be
//! checked against them.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numbers::{binomial, ExactInt};
use crate::permutation::{enumerate_permutations, EnumerationCap, Permutation};

/// A counted class of permutations: `W_{n,k}`, optionally restricted to
/// `lo <= Q_n <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub n: usize,
    pub k: usize,
    pub q_range: Option<(usize, usize)>,
    pub count: ExactInt,
}

/// Joint distribution of (weak excedances, `Q_n`) over `S_n`.
#[derive(Debug, Clone)]
pub struct WeakExcedanceCensus {
    n: usize,
    // counts[k][q], q is 1-based so column 0 stays empty.
    counts: Vec<Vec<u64>>,
}

impl WeakExcedanceCensus {
    pub fn new(n: usize, cap: EnumerationCap) -> Result<Self> {
        let mut counts = vec![vec![0u64; n + 1]; n + 1];
        for pi in enumerate_permutations(n, cap)? {
            counts[pi.weak_excedance_count()][pi.q_position()] += 1;
        }
        Ok(WeakExcedanceCensus { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `#{pi in W_{n,k} : lo <= Q_n(pi) <= hi}`; empty ranges count zero.
    pub fn count_with_q(&self, k: usize, lo: usize, hi: usize) -> u64 {
        let Some(row) = self.counts.get(k) else {
            return 0;
        };
        let lo = lo.max(1);
        let hi = hi.min(self.n);
        if lo > hi {
            return 0;
        }
        row[lo..=hi].iter().sum()
    }

    pub fn class_size(&self, k: usize) -> u64 {
        self.count_with_q(k, 1, self.n)
    }

    pub fn class_count(&self, k: usize, q_range: Option<(usize, usize)>) -> ClassCount {
        let (lo, hi) = q_range.unwrap_or((1, self.n));
        ClassCount {
            n: self.n,
            k,
            q_range,
            count: BigInt::from(self.count_with_q(k, lo, hi)),
        }
    }

    /// The two sides of the interpretation of `c(n,k; j)`:
    /// `#{W_{n,k+1}, Q_n > j} + #{W_{n,k}, Q_n <= j}`.
    pub fn interpretation_count(&self, k: usize, j: usize) -> ExactInt {
        let above = self.count_with_q(k + 1, j + 1, self.n);
        let below = self.count_with_q(k, 1, j);
        BigInt::from(above + below)
    }
}

/// `|W_{n,k}|` by census.
pub fn count_weak_excedance_class(n: usize, k: usize, cap: EnumerationCap) -> Result<ExactInt> {
    Ok(BigInt::from(
        WeakExcedanceCensus::new(n, cap)?.class_size(k),
    ))
}

/// `#{pi in W_{n,k} : lo <= Q_n(pi) <= hi}` by census.
pub fn count_w_with_q(
    n: usize,
    k: usize,
    lo: usize,
    hi: usize,
    cap: EnumerationCap,
) -> Result<ExactInt> {
    Ok(BigInt::from(
        WeakExcedanceCensus::new(n, cap)?.count_with_q(k, lo, hi),
    ))
}

/// Closed-form `c(n,k; j)` against the census count.
pub fn main_theorem_sides(
    census: &WeakExcedanceCensus,
    k: usize,
    j: usize,
) -> (ExactInt, ExactInt) {
    (
        crate::numbers::cnk_coefficient(census.n(), k, j),
        census.interpretation_count(k, j),
    )
}

pub fn verify_main_theorem(n: usize, k: usize, j: usize, cap: EnumerationCap) -> Result<bool> {
    let census = WeakExcedanceCensus::new(n, cap)?;
    let (formula, count) = main_theorem_sides(&census, k, j);
    Ok(formula == count)
}

/// `[n]` split into `k+1` compartments by `k` bars, each compartment decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarArrangement {
    compartments: Vec<Vec<usize>>,
}

impl BarArrangement {
    /// Sorts each compartment decreasingly; the union must be `1..=n`.
    pub fn new(mut compartments: Vec<Vec<usize>>) -> Result<Self> {
        if compartments.is_empty() {
            return Err(Error::EmptyWord);
        }
        for c in &mut compartments {
            c.sort_unstable_by(|x, y| y.cmp(x));
        }
        let flat: Vec<usize> = compartments.iter().flatten().copied().collect();
        Permutation::new(flat)?;
        Ok(BarArrangement { compartments })
    }

    pub fn compartments(&self) -> &[Vec<usize>] {
        &self.compartments
    }

    pub fn n(&self) -> usize {
        self.compartments.iter().map(Vec::len).sum()
    }

    pub fn bar_count(&self) -> usize {
        self.compartments.len() - 1
    }

    /// The word left after erasing the bars.
    pub fn word(&self) -> Permutation {
        Permutation::from_word_unchecked(self.compartments.iter().flatten().copied().collect())
    }

    /// Indices (1-based) of the extraneous bars.
    ///
    /// Bar `b` sits between compartments `b-1` and `b` (0-based). It is
    /// extraneous when another bar follows it immediately, or when it closes a
    /// run of bars whose removal leaves every compartment decreasing: the
    /// nearest nonempty compartment on its left ends above the first entry on
    /// its right, or one of those sides has no entries at all.
    pub fn extraneous_bars(&self) -> BTreeSet<usize> {
        let k = self.bar_count();
        (1..=k).filter(|&b| self.is_extraneous(b)).collect()
    }

    fn is_extraneous(&self, bar: usize) -> bool {
        let k = self.bar_count();
        if bar < k && self.compartments[bar].is_empty() {
            return true;
        }
        let right = self.compartments[bar].first();
        let left = self.compartments[..bar].iter().rev().find_map(|c| c.last());
        match (left, right) {
            (Some(l), Some(r)) => l > r,
            _ => true,
        }
    }

    /// Membership in the set `B` for `j`, and which of its two kinds.
    ///
    /// `B` keeps arrangements with no extraneous bar, and arrangements whose
    /// only extraneous bar is a trailing one (empty last compartment) with some
    /// element of `{1..j}` in the compartment before it.
    pub fn set_b_case(&self, j: usize) -> Option<SetBCase> {
        let k = self.bar_count();
        let extraneous = self.extraneous_bars();
        if extraneous.is_empty() {
            return Some(SetBCase::NoExtraneousBar);
        }
        let trailing = extraneous.len() == 1
            && extraneous.contains(&k)
            && self.compartments[k].is_empty()
            && self.compartments[k - 1].iter().any(|&v| v <= j);
        trailing.then_some(SetBCase::TrailingBar)
    }
}

impl fmt::Display for BarArrangement {
    /// `32|1||7654|` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n() < 10;
        for (idx, c) in self.compartments.iter().enumerate() {
            if idx > 0 {
                f.write_str("|")?;
            }
            for (t, v) in c.iter().enumerate() {
                if t > 0 && !compact {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for BarArrangement {
    type Err = crate::permutation::ParseWordError;

    /// Compartments separated by `|`; whitespace is ignored.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let compartments = s
            .split('|')
            .map(|part| {
                let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
                if part.is_empty() {
                    Ok(Vec::new())
                } else {
                    let tokens: Vec<&str> = if part.contains(',') {
                        part.split(',').collect()
                    } else {
                        part.char_indices()
                            .map(|(i, c)| &part[i..i + c.len_utf8()])
                            .collect()
                    };
                    tokens
                        .into_iter()
                        .map(|t| {
                            t.parse::<usize>().map_err(|_| {
                                crate::permutation::ParseWordError::BadToken(t.to_string())
                            })
                        })
                        .collect()
                }
            })
            .collect::<std::result::Result<Vec<Vec<usize>>, _>>()?;
        Ok(BarArrangement::new(compartments)?)
    }
}

/// The two kinds of arrangement counted by `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetBCase {
    /// Every bar is needed: the word has exactly `k` ascents.
    NoExtraneousBar,
    /// Only the final bar is extraneous and it closes an empty compartment.
    TrailingBar,
}

/// Every placement of `[n]` into `k+1` compartments with none of `1..=j` in the
/// last one, in odometer order over the compartment chosen for each value.
#[derive(Debug, Clone)]
pub struct BarArrangements {
    n: usize,
    k: usize,
    radices: Vec<usize>,
    choice: Option<Vec<usize>>,
}

impl Iterator for BarArrangements {
    type Item = BarArrangement;

    fn next(&mut self) -> Option<BarArrangement> {
        let choice = self.choice.as_mut()?;
        let mut compartments = vec![Vec::new(); self.k + 1];
        // Values visited from n down keep every compartment decreasing.
        for v in (1..=self.n).rev() {
            compartments[choice[v - 1]].push(v);
        }
        let mut idx = 0;
        loop {
            if idx == self.n {
                self.choice = None;
                break;
            }
            choice[idx] += 1;
            if choice[idx] < self.radices[idx] {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
        Some(BarArrangement { compartments })
    }
}

pub fn enumerate_bar_arrangements(
    n: usize,
    k: usize,
    forbidden_last: usize,
    cap: EnumerationCap,
) -> Result<BarArrangements> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    cap.check(n)?;
    let radices: Vec<usize> = (1..=n)
        .map(|v| if v <= forbidden_last { k } else { k + 1 })
        .collect();
    let choice = radices.iter().all(|&r| r > 0).then(|| vec![0; n]);
    Ok(BarArrangements {
        n,
        k,
        radices,
        choice,
    })
}

/// `|B|` by filtering the arrangement stream.
pub fn count_set_b(n: usize, k: usize, j: usize, cap: EnumerationCap) -> Result<ExactInt> {
    let count = enumerate_bar_arrangements(n, k, j, cap)?
        .filter(|arr| arr.set_b_case(j).is_some())
        .count();
    Ok(BigInt::from(count))
}

/// `B_i = (k+1-i)^(n-j) (k-i)^j C(n+1,i)`: arrangements with at least `i`
/// separated extraneous bars.
pub fn inclusion_exclusion_term(n: usize, k: usize, j: usize, i: usize) -> ExactInt {
    if i > k || j > n {
        return BigInt::zero();
    }
    BigInt::from(k + 1 - i).pow((n - j) as u32)
        * BigInt::from(k - i).pow(j as u32)
        * binomial(n as u64 + 1, i as i64)
}

/// `(k+1)^(n-j) k^j - B_1 + B_2 - ... + (-1)^k B_k`.
pub fn inclusion_exclusion_b(n: usize, k: usize, j: usize) -> ExactInt {
    (0..=k)
        .map(|i| {
            let term = inclusion_exclusion_term(n, k, j, i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `f^{-1}(g(f(pi)))`.
pub fn lemma_map(pi: &Permutation) -> Permutation {
    pi.fundamental_map().complement().fundamental_inverse()
}

/// How `f^{-1} g f` behaves on one `S_{k,j} = {pi in W_{n,k} : Q_n(pi) = j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCell {
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub source_size: usize,
    pub target_size: usize,
    pub distinct_images: usize,
    /// Images that land outside `T_{k,j} = {W_{n,n+1-k}, Q_n = n+1-j}`.
    pub stray_images: usize,
}

impl LemmaCell {
    pub fn is_bijection(&self) -> bool {
        self.distinct_images == self.source_size
            && self.stray_images == 0
            && self.source_size == self.target_size
    }
}

/// Every `(k, j)` cell with `1 <= k, j <= n`, from a single pass over `S_n`.
pub fn lemma_cells(n: usize, cap: EnumerationCap) -> Result<Vec<LemmaCell>> {
    let mut images: Vec<Vec<HashSet<Permutation>>> = vec![vec![HashSet::new(); n + 1]; n + 1];
    let mut sources = vec![vec![0usize; n + 1]; n + 1];
    let mut stray = vec![vec![0usize; n + 1]; n + 1];
    for pi in enumerate_permutations(n, cap)? {
        let (k, j) = (pi.weak_excedance_count(), pi.q_position());
        let image = lemma_map(&pi);
        sources[k][j] += 1;
        if image.weak_excedance_count() != n + 1 - k || image.q_position() != n + 1 - j {
            stray[k][j] += 1;
        }
        images[k][j].insert(image);
    }
    let mut cells = Vec::with_capacity(n * n);
    for k in 1..=n {
        for j in 1..=n {
            cells.push(LemmaCell {
                n,
                k,
                j,
                source_size: sources[k][j],
                target_size: sources[n + 1 - k][n + 1 - j],
                distinct_images: images[k][j].len(),
                stray_images: stray[k][j],
            });
        }
    }
    Ok(cells)
}

pub fn lemma_bijection_check(n: usize, k: usize, j: usize, cap: EnumerationCap) -> Result<bool> {
    if k < 1 || j < 1 || k > n || j > n {
        return Ok(true);
    }
    let cell = lemma_cells(n, cap)?
        .into_iter()
        .find(|c| c.k == k && c.j == j)
        .expect("cell is in range");
    Ok(cell.is_bijection())
}
