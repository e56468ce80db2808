use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial in one variable `q`, stored sparsely by exponent.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut poly = Self::zero();
        for (exponent, coeff) in terms {
            poly.add_term(exponent, coeff.into());
        }
        poly
    }

    pub fn add_term(&mut self, exponent: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: u32) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// Multiplies by `q^by`.
    pub fn shifted(&self, by: u32) -> Self {
        UniPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Horner over the dense exponent range.
        let Some(top) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = BigInt::zero();
        for e in (0..=top).rev() {
            acc = acc * q + self.coeff(e);
        }
        acc
    }
}

impl fmt::Display for UniPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}
