use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::factor::factorize;
use crate::rational::{to_f64, Rational};

/// Exact `Σ c_p log p` with rational coefficients: the logarithm of a
/// positive rational number, raised to a rational power.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LogSum {
    terms: BTreeMap<u64, Rational>,
}

impl LogSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn log_prime(p: u64, mult: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(p, Rational::from_integer(BigInt::from(mult)));
        s
    }

    /// `log n` for `n >= 1`.
    pub fn log_integer(n: u64) -> Self {
        let mut s = Self::zero();
        for (p, e) in factorize(n) {
            s.add_term(p, Rational::from_integer(BigInt::from(e)));
        }
        s
    }

    fn add_term(&mut self, p: u64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&p, v)| (p, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(&p, c)| (p, c))
    }

    /// Coefficient of `log p`.
    pub fn coefficient(&self, p: u64) -> Rational {
        self.terms.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&p, c)| to_f64(c) * (p as f64).ln())
            .sum()
    }
}

impl Add for LogSum {
    type Output = LogSum;
    fn add(mut self, rhs: LogSum) -> LogSum {
        self += rhs;
        self
    }
}

impl AddAssign for LogSum {
    fn add_assign(&mut self, rhs: LogSum) {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl Sub for LogSum {
    type Output = LogSum;
    fn sub(mut self, rhs: LogSum) -> LogSum {
        self -= rhs;
        self
    }
}

impl SubAssign for LogSum {
    fn sub_assign(&mut self, rhs: LogSum) {
        for (p, c) in rhs.terms {
            self.add_term(p, -c);
        }
    }
}

impl Neg for LogSum {
    type Output = LogSum;
    fn neg(self) -> LogSum {
        Self {
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl std::iter::Sum for LogSum {
    fn sum<I: Iterator<Item = LogSum>>(iter: I) -> LogSum {
        iter.fold(LogSum::zero(), |a, b| a + b)
    }
}
