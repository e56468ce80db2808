//! Exact traditional, general and q-Eulerian numbers, the permutation
//! statistics behind them, and brute-force oracles for their combinatorial
//! interpretations.
//!
//! * [`permutation`]: one-line permutations, ascents, weak excedances, major
//!   index, `Q_n`, standard cycle form, the fundamental bijection and the
//!   complement map.
//! * [`numbers`]: `A(n,k)`, `A(n,k; a,d)`, `c(n,k; j)`, `a(n,k,i)` and the
//!   q-Eulerian polynomials, all in exact arithmetic.
//! * [`oracle`]: censuses over `S_n` and over bar arrangements.
//! * [`insertion`]: the `AW`/`BW` classes and their insertion maps.

pub mod error;
pub mod insertion;
pub mod numbers;
pub mod oracle;
pub mod permutation;
pub mod poly;

pub use error::{Error, Result};
pub use numbers::ExactInt;
pub use permutation::{enumerate_permutations, CycleForm, EnumerationCap, Permutation};
pub use poly::UniPolynomial;
