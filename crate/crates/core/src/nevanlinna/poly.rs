//! Exact univariate polynomials over `Q(i)`.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::rational::{format_rational, to_f64, Rational};

pub type GaussianRational = Complex<Rational>;

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

fn c_zero() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::zero())
}

fn c_is_zero(c: &GaussianRational) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(c_is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs.into_iter().map(|c| Complex::new(c, Rational::zero())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_real(vec![Rational::one()])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![c_zero(); k + 1];
        c[k] = Complex::new(Rational::one(), Rational::zero());
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn lead(&self) -> &GaussianRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Order of vanishing at `z = 0`; `None` for the zero polynomial.
    pub fn order_at_origin(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c_is_zero(c))
    }

    /// Divides by `z^k`; the caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = c_zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = c_zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![c_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if c_is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = Complex::new(Rational::one(), Rational::zero()) / self.lead().clone();
        self.scale(&inv)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = Complex::new(Rational::one(), Rational::zero()) / d.lead().clone();
        let mut q = vec![c_zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] * &inv;
            if !c_is_zero(&t) {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &t * dc;
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient; the remainder is asserted zero in debug builds.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Complex::new(Rational::from_integer(i.into()), Rational::zero()))
                .collect(),
        )
    }

    /// Yun's square-free decomposition: `(s_k, k)` with `self = lead · Π s_k^k`,
    /// each `s_k` monic, square-free, nonconstant and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0);
        let c = fp.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn to_f64_coeffs(&self) -> Vec<Complex<f64>> {
        self.coeffs
            .iter()
            .map(|c| Complex::new(to_f64(&c.re), to_f64(&c.im)))
            .collect()
    }
}

/// Horner evaluation of `f64` coefficients, lowest degree first.
pub fn horner(coeffs: &[Complex<f64>], z: Complex<f64>) -> Complex<f64> {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c_is_zero(c))
            .map(|(i, c)| {
                let coef = if c.im.is_zero() {
                    format_rational(&c.re)
                } else {
                    format!("({}+{}i)", format_rational(&c.re), format_rational(&c.im))
                };
                match i {
                    0 => coef,
                    1 => format!("{coef}*z"),
                    _ => format!("{coef}*z^{i}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_real(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // z^2 - 1
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[0, -1, 0, 1]).gcd(&p(&[-1, 0, 1])), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), Polynomial::one());
        assert_eq!(Polynomial::zero().gcd(&p(&[0, 2])), p(&[0, 1]));
        let i = Complex::new(int(0), int(1));
        // z^2 + 1 = (z - i)(z + i)
        let zi = Polynomial::new(vec![-i.clone(), Complex::new(int(1), int(0))]);
        assert_eq!(p(&[1, 0, 1]).gcd(&zi), zi);
    }

    #[test]
    fn squarefree() {
        // z^2 (z-1)^3 (z+2)
        let f = p(&[0, 1]).pow(2).mul(&p(&[-1, 1]).pow(3)).mul(&p(&[2, 1])).scale(&Complex::new(int(5), int(0)));
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&[2, 1]), 1), (p(&[0, 1]), 2), (p(&[-1, 1]), 3)]);
        assert!(p(&[3]).squarefree_decomposition().is_empty());
        assert_eq!(p(&[0, 0, 1]).order_at_origin(), Some(2));
        assert_eq!(p(&[0, 0, 1, 4]).shift_down(2), p(&[1, 4]));
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }
}
