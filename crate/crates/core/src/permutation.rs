//! Permutations of `[n]` in one-line notation and the statistics used throughout
//! the crate.
//!
//! Positions and values are 1-based at every public boundary: `value_at(i)` is
//! `p_i`, and a word such as `5243716` means `p_1 = 5, p_2 = 2, ...`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` the exhaustive enumerators accept unless overridden.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Upper bound on `n` for anything that walks all of `S_n` (or a comparable
/// arrangement space).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumerationCap(pub usize);

impl EnumerationCap {
    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::CapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap(DEFAULT_ENUMERATION_CAP)
    }
}

/// A bijection of `{1, ..., n}` stored as its word `p_1 p_2 ... p_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates `word` as a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let mut seen = vec![false; n + 1];
        for &value in &word {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange { value, n });
            }
            if seen[value] {
                return Err(Error::DuplicateValue { value });
            }
            seen[value] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The decreasing word `n (n-1) ... 1`.
    pub fn reversal(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// Caller guarantees `word` is a permutation of `1..=len`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(
            Permutation::new(word.clone()).is_ok(),
            "invalid word {word:?}"
        );
        Permutation { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `p_i` for a 1-based position `i`.
    pub fn value_at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The 1-based position holding `value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.word
            .iter()
            .position(|&v| v == value)
            .map(|idx| idx + 1)
            .expect("value is in 1..=n")
    }

    pub fn first(&self) -> usize {
        self.word[0]
    }

    pub fn last(&self) -> usize {
        self.word[self.word.len() - 1]
    }

    /// Number of `i` in `1..n` with `p_i < p_{i+1}`.
    pub fn ascent_count(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// Number of `i` in `1..=n` with `p_i >= i`.
    pub fn weak_excedance_count(&self) -> usize {
        self.weak_excedance_positions().count()
    }

    pub fn weak_excedance_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.word
            .iter()
            .enumerate()
            .filter(|&(idx, &v)| v > idx)
            .map(|(idx, _)| idx + 1)
    }

    /// Sum of the descent positions `j` (those with `p_j > p_{j+1}`).
    pub fn major_index(&self) -> usize {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(idx, _)| idx + 1)
            .sum()
    }

    /// `Q_n`: the position of the largest value.
    pub fn q_position(&self) -> usize {
        self.position_of(self.len())
    }

    /// Cycle decomposition with each cycle led by its maximum and cycles sorted
    /// by increasing maxima.
    pub fn standard_cycle_form(&self) -> CycleForm {
        let n = self.len();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Scanning from n downward reaches every cycle at its maximum first.
        for start in (1..=n).rev() {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = self.value_at(x);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        let form = CycleForm { cycles };
        debug_assert!(form.is_standard(), "non-standard cycle form {form}");
        form
    }

    /// The fundamental bijection: erase the parentheses of the standard cycle form.
    pub fn fundamental_map(&self) -> Permutation {
        Permutation::from_word_unchecked(self.standard_cycle_form().flatten())
    }

    /// Inverse of [`Permutation::fundamental_map`]: cut the word before each
    /// left-to-right maximum and read the pieces as cycles.
    pub fn fundamental_inverse(&self) -> Permutation {
        CycleForm::from_left_to_right_maxima(&self.word).to_permutation()
    }

    /// `(n+1-p_1)(n+1-p_2)...(n+1-p_n)`.
    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            word: self.word.iter().map(|&v| n + 1 - v).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    /// Single-digit words print concatenated (`5243716`); longer ones use commas.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word, self.len() < 10)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, word: &[usize], compact: bool) -> fmt::Result {
    for (idx, v) in word.iter().enumerate() {
        if idx > 0 && !compact {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Parse error for [`Permutation`] text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseWordError {
    #[error("`{0}` is not a positive integer")]
    BadToken(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl FromStr for Permutation {
    type Err = ParseWordError;

    /// Accepts `5243716` (one digit per value) or separated forms such as
    /// `10,2,3,...` / `10 2 3 ...`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
        let tokens: Vec<&str> = if separated {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect()
        } else {
            s.char_indices()
                .map(|(i, c)| &s[i..i + c.len_utf8()])
                .collect()
        };
        let word = tokens
            .into_iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| ParseWordError::BadToken(t.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Permutation::new(word)?)
    }
}

/// Cycle notation in standard representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycles are nonempty, disjoint, cover `1..=n`, start at their maxima and
    /// are ordered by increasing maxima.
    pub fn is_standard(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut previous_max = 0;
        for cycle in &self.cycles {
            let Some(&head) = cycle.first() else {
                return false;
            };
            if cycle.iter().any(|&x| x > head) || head <= previous_max {
                return false;
            }
            previous_max = head;
            for &x in cycle {
                if x == 0 || x > n || seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        true
    }

    pub fn flatten(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }

    fn from_left_to_right_maxima(word: &[usize]) -> Self {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut running_max = 0;
        for &v in word {
            if v > running_max {
                running_max = v;
                cycles.push(vec![v]);
            } else {
                cycles
                    .last_mut()
                    .expect("first letter opens a cycle")
                    .push(v);
            }
        }
        CycleForm { cycles }
    }

    /// The permutation sending each cycle entry to its successor.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.len();
        let mut word = vec![0; n];
        for cycle in &self.cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                word[x - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Permutation::from_word_unchecked(word)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() < 10;
        for cycle in &self.cycles {
            f.write_str("(")?;
            write_word(f, cycle, compact)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// All permutations of `[n]` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if next_lexicographic(&mut successor) {
            self.next = Some(successor);
        }
        Some(Permutation { word: current })
    }
}

fn next_lexicographic(word: &mut [usize]) -> bool {
    let Some(pivot) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let swap_with = word
        .iter()
        .rposition(|&v| v > word[pivot])
        .expect("the pivot has a larger value to its right");
    word.swap(pivot, swap_with);
    word[pivot + 1..].reverse();
    true
}

/// Streams all `n!` permutations of `[n]` lexicographically.
pub fn enumerate_permutations(n: usize, cap: EnumerationCap) -> Result<Permutations> {
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    cap.check(n)?;
    Ok(Permutations {
        next: Some((1..=n).collect()),
    })
}
