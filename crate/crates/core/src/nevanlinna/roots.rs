//! Roots of square-free polynomials (Aberth-Ehrlich, then Newton polishing).

use num_complex::Complex;

use num_traits::{ToPrimitive, Zero};

use super::poly::{horner, GaussianRational, Polynomial};
use crate::rational::Rational;

type C64 = Complex<f64>;

fn eval_with_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of a square-free nonconstant polynomial, sorted by modulus then argument.
pub fn roots(f: &Polynomial) -> Vec<C64> {
    let deg = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    if deg == 1 {
        let c = f.coeffs();
        let r = -(c[0].clone() / c[1].clone());
        return vec![Polynomial::new(vec![r]).to_f64_coeffs()[0]];
    }
    let coeffs = f.monic().to_f64_coeffs();
    // Fujiwara-style radius for the starting circle.
    let radius = (0..deg)
        .map(|i| coeffs[i].norm().powf(1.0 / (deg - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<C64> = (0..deg)
        .map(|k| C64::from_polar(radius, std::f64::consts::TAU * k as f64 / deg as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut worst = 0.0f64;
        for k in 0..deg {
            let (p, dp) = eval_with_derivative(&coeffs, z[k]);
            if p == C64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let sum: C64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| C64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if worst < 1e-16 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&coeffs, *r);
            let step = p / dp;
            if step.is_finite() {
                *r -= step;
            }
        }
    }
    for r in z.iter_mut() {
        *r = polish_exact(f, *r);
    }
    z.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.arg().total_cmp(&b.arg())));
    z
}

/// Two Newton steps with the residual evaluated exactly at the current
/// floating-point iterate, so accuracy is limited only by the final rounding.
fn polish_exact(f: &Polynomial, z: C64) -> C64 {
    let mut z = z;
    let df = f.derivative();
    for _ in 0..2 {
        let (Some(re), Some(im)) = (Rational::from_float(z.re), Rational::from_float(z.im)) else {
            return z;
        };
        let w: GaussianRational = Complex::new(re, im);
        let eval = |p: &Polynomial| {
            p.coeffs()
                .iter()
                .rev()
                .fold(Complex::new(Rational::zero(), Rational::zero()), |acc, c| acc * w.clone() + c.clone())
        };
        let (p, dp) = (eval(f), eval(&df));
        if dp.re.is_zero() && dp.im.is_zero() {
            return z;
        }
        let step = p / dp;
        let next = C64::new(
            (w.re - step.re).to_f64().unwrap_or(z.re),
            (w.im - step.im).to_f64().unwrap_or(z.im),
        );
        if !next.is_finite() {
            return z;
        }
        z = next;
    }
    z
}

/// Largest `|f(z)|` over the given roots, relative to the coefficient size.
pub fn residual(f: &Polynomial, zs: &[C64]) -> f64 {
    let coeffs = f.to_f64_coeffs();
    zs.iter()
        .map(|&z| {
            let scale: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.norm() * z.norm().powi(i as i32))
                .sum();
            horner(&coeffs, z).norm() / scale.max(f64::MIN_POSITIVE)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_real(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn known_roots() {
        let r = roots(&p(&[1, 0, 1]));
        assert!((r[0] - C64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - C64::new(0.0, 1.0)).norm() < 1e-12);
        let r = roots(&p(&[-6, 11, -6, 1]));
        for (z, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((z - C64::new(want, 0.0)).norm() < 1e-12);
        }
        let lin = Polynomial::from_real(vec![rat(1, 3), int(1)]);
        assert_eq!(roots(&lin), vec![C64::new(-1.0 / 3.0, 0.0)]);
    }

    #[test]
    fn cyclotomic_like() {
        // z^7 - 2
        let mut c = vec![0; 8];
        c[0] = -2;
        c[7] = 1;
        let f = p(&c);
        let r = roots(&f);
        assert_eq!(r.len(), 7);
        for z in &r {
            assert!((z.norm() - 2f64.powf(1.0 / 7.0)).abs() < 1e-12);
        }
        assert!(residual(&f, &r) < 1e-14);
    }
}
