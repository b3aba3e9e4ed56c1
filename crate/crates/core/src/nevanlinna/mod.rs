//! Nevanlinna functions of polynomial entire curves `C → P^n`: the Cartan
//! characteristic, proximity to a monomial ideal sheaf, and the (truncated)
//! counting function of the pulled-back ideal.
//!
//! Circle means use the periodic trapezoid rule on half-offset nodes, doubled
//! until two successive estimates agree. Zeros come from an exact gcd and
//! square-free decomposition over `Q(i)`, followed by numerical root finding.

mod poly;
mod roots;

use num_complex::Complex;

pub use poly::{horner, GaussianRational, Polynomial};
pub use roots::{residual, roots};

use crate::error::{Error, Result};
use crate::polyhedra::HomogeneousMonomialIdeal;

pub type C64 = Complex<f64>;

/// `T_{a,f}` is taken to be `m_f(a, r) + N_f(a, r)`.
pub const IDEAL_CHARACTERISTIC_NOTE: &str =
    "ideal characteristic T_{a,f}(r) is defined here as m_f(a,r) + N_f(a,r)";

/// An entire curve `z ↦ [f_0(z) : … : f_n(z)]` with coprime polynomial components.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCurve {
    components: Vec<Polynomial>,
    numeric: Vec<Vec<C64>>,
}

impl PolynomialCurve {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidCurve("need at least two components".into()));
        }
        if components.iter().all(Polynomial::is_constant) {
            return Err(Error::InvalidCurve("all components are constant".into()));
        }
        let g = components
            .iter()
            .fold(Polynomial::zero(), |g, f| g.gcd(f));
        if !g.is_constant() {
            return Err(Error::InvalidCurve(format!("components share the factor {g}")));
        }
        let numeric = components.iter().map(Polynomial::to_f64_coeffs).collect();
        Ok(Self { components, numeric })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// Target dimension `n`.
    pub fn n(&self) -> usize {
        self.components.len() - 1
    }

    /// Largest component degree: the slope of `T_f` against `log r`.
    pub fn degree(&self) -> usize {
        self.components.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn eval(&self, z: C64) -> Vec<C64> {
        self.numeric.iter().map(|c| horner(c, z)).collect()
    }

    /// `log|f_j(z)|` for each component (`-inf` at zeros).
    pub fn log_abs(&self, z: C64) -> Vec<f64> {
        self.numeric.iter().map(|c| horner(c, z).norm().ln()).collect()
    }

    /// `log max_j |f_j(0)|`, finite because the components are coprime.
    pub fn log_max_at_origin(&self) -> f64 {
        self.log_abs(C64::new(0.0, 0.0))
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Strictly increasing positive radii.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusGrid(Vec<f64>);

impl RadiusGrid {
    pub fn new(radii: Vec<f64>) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidGrid("empty grid".into()));
        }
        if radii.iter().any(|r| !r.is_finite() || *r <= 0.0) {
            return Err(Error::InvalidGrid("radii must be positive and finite".into()));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("radii must be strictly increasing".into()));
        }
        Ok(Self(radii))
    }

    /// `start, start+step, …` up to `end` inclusive.
    pub fn range(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(step > 0.0 && step.is_finite() && start.is_finite() && end.is_finite()) || end < start {
            return Err(Error::InvalidGrid(format!("bad range {start}:{end}:{step}")));
        }
        let count = ((end - start) / step + 1e-9).floor() as usize + 1;
        if count > 1_000_000 {
            return Err(Error::InvalidGrid("more than 10^6 radii".into()));
        }
        Self::new((0..count).map(|k| start + k as f64 * step).collect())
    }

    /// `a:b`, `a:b:step` or a comma-separated list.
    pub fn parse(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad radius `{}` in grid `{s}`", t.trim())))
        };
        if s.contains(':') {
            let parts: Vec<f64> = s.split(':').map(num).collect::<Result<_>>()?;
            match parts[..] {
                [a, b] => Self::range(a, b, 1.0),
                [a, b, step] => Self::range(a, b, step),
                _ => Err(Error::Parse(format!("grid `{s}` must be a:b or a:b:step"))),
            }
        } else {
            Self::new(s.split(',').map(num).collect::<Result<_>>()?)
        }
    }

    pub fn radii(&self) -> &[f64] {
        &self.0
    }
}

/// Periodic trapezoid rule with node doubling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub nodes: usize,
    pub tolerance: f64,
    pub max_nodes: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            nodes: 4096,
            tolerance: 1e-6,
            max_nodes: 1 << 18,
        }
    }
}

impl Quadrature {
    pub fn with_nodes(nodes: usize) -> Result<Self> {
        if nodes < 8 {
            return Err(Error::InvalidParameter("at least 8 quadrature nodes".into()));
        }
        Ok(Self {
            nodes,
            max_nodes: (nodes << 6).max(1 << 18),
            ..Self::default()
        })
    }

    fn estimate(&self, n: usize, r: f64, f: &impl Fn(C64) -> f64) -> f64 {
        let h = std::f64::consts::TAU / n as f64;
        let sum: f64 = (0..n)
            .map(|k| f(C64::from_polar(r, h * (k as f64 + 0.5))))
            .sum();
        sum / n as f64
    }

    /// `(1/2π) ∫ f(r e^{iθ}) dθ`.
    pub fn circle_mean(&self, r: f64, f: impl Fn(C64) -> f64) -> Result<f64> {
        check_radius(r)?;
        let mut n = self.nodes;
        let mut prev = self.estimate(n, r, &f);
        while n * 2 <= self.max_nodes {
            n *= 2;
            let next = self.estimate(n, r, &f);
            let done = (next - prev).abs() < self.tolerance;
            prev = next;
            if done {
                break;
            }
        }
        if !prev.is_finite() {
            return Err(Error::Internal(format!("circle mean at r = {r} is not finite")));
        }
        Ok(prev)
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGrid(format!("radius {r} must be positive and finite")))
    }
}

fn check_dims(f: &PolynomialCurve, a: &HomogeneousMonomialIdeal) -> Result<()> {
    if f.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n() + 1,
            got: f.components.len(),
        });
    }
    Ok(())
}

/// Archimedean Weil function of `a` from the values `log|x_j|`:
/// `min_g (deg g · max_j log|x_j| − log|g(x)|)`.
pub fn weil_from_logs(a: &HomogeneousMonomialIdeal, logs: &[f64]) -> f64 {
    let lmax = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    a.generators()
        .iter()
        .map(|g| {
            let mut t = g.degree() as f64 * lmax;
            for (&e, &l) in g.iter().zip(logs) {
                if e > 0 {
                    if l == f64::NEG_INFINITY {
                        return f64::INFINITY;
                    }
                    t -= f64::from(e) * l;
                }
            }
            t
        })
        .fold(f64::INFINITY, f64::min)
}

/// Cartan characteristic `T_f(r)`.
pub fn characteristic(f: &PolynomialCurve, r: f64, q: &Quadrature) -> Result<f64> {
    let mean = q.circle_mean(r, |z| {
        f.log_abs(z).into_iter().fold(f64::NEG_INFINITY, f64::max)
    })?;
    Ok(mean - f.log_max_at_origin())
}

/// `m_f(a, r)`.
pub fn proximity_curve(
    f: &PolynomialCurve,
    a: &HomogeneousMonomialIdeal,
    r: f64,
    q: &Quadrature,
) -> Result<f64> {
    check_dims(f, a)?;
    if a.is_unit() {
        check_radius(r)?;
        return Ok(0.0);
    }
    pullback(f, a)?;
    q.circle_mean(r, |z| weil_from_logs(a, &f.log_abs(z)))
}

/// `Π_j f_j^{e_j}` for every generator.
fn pullback(f: &PolynomialCurve, a: &HomogeneousMonomialIdeal) -> Result<Vec<Polynomial>> {
    let products: Vec<Polynomial> = a
        .generators()
        .iter()
        .map(|g| {
            g.iter()
                .zip(&f.components)
                .fold(Polynomial::one(), |acc, (&e, c)| acc.mul(&c.pow(e)))
        })
        .collect();
    if products.iter().all(Polynomial::is_zero) {
        return Err(Error::CurveInZeroLocus);
    }
    Ok(products)
}

/// Zeros of the pulled-back ideal: `h = gcd_g (g ∘ f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PulledBackZeros {
    /// Multiplicity at `z = 0`.
    pub at_origin: u32,
    /// Nonzero zeros with multiplicities, sorted by modulus.
    pub zeros: Vec<(C64, u32)>,
}

impl PulledBackZeros {
    pub fn compute(f: &PolynomialCurve, a: &HomogeneousMonomialIdeal) -> Result<Self> {
        check_dims(f, a)?;
        let h = pullback(f, a)?
            .iter()
            .fold(Polynomial::zero(), |g, p| g.gcd(p));
        let k = h.order_at_origin().expect("nonzero gcd");
        let rest = h.shift_down(k);
        let mut zeros: Vec<(C64, u32)> = rest
            .squarefree_decomposition()
            .iter()
            .flat_map(|(s, mult)| roots(s).into_iter().map(move |z| (z, *mult)))
            .collect();
        zeros.sort_by(|x, y| x.0.norm().total_cmp(&y.0.norm()).then(x.0.arg().total_cmp(&y.0.arg())));
        Ok(Self {
            at_origin: k as u32,
            zeros,
        })
    }

    fn sum(&self, r: f64, truncate: bool) -> Result<f64> {
        check_radius(r)?;
        let weight = |m: u32| if truncate { 1.0 } else { f64::from(m) };
        let log_r = r.ln();
        let mut total = if self.at_origin > 0 { weight(self.at_origin) * log_r } else { 0.0 };
        for &(z, m) in &self.zeros {
            let d = z.norm();
            if d < r {
                total += weight(m) * (log_r - d.ln());
            }
        }
        Ok(total)
    }

    /// `N(r) = Σ_{0<|z|<r} mult·log(r/|z|) + mult_0·log r`.
    pub fn counting(&self, r: f64) -> Result<f64> {
        self.sum(r, false)
    }

    /// As [`Self::counting`] with every multiplicity replaced by 1.
    pub fn truncated_counting(&self, r: f64) -> Result<f64> {
        self.sum(r, true)
    }
}

/// `N_f(a, r)`.
pub fn counting_curve(f: &PolynomialCurve, a: &HomogeneousMonomialIdeal, r: f64) -> Result<f64> {
    PulledBackZeros::compute(f, a)?.counting(r)
}

/// `N_f^{(1)}(a, r)`.
pub fn truncated_counting_curve(f: &PolynomialCurve, a: &HomogeneousMonomialIdeal, r: f64) -> Result<f64> {
    PulledBackZeros::compute(f, a)?.truncated_counting(r)
}

/// `T_{a,f}(r) := m_f(a, r) + N_f(a, r)`.
pub fn ideal_characteristic(
    f: &PolynomialCurve,
    a: &HomogeneousMonomialIdeal,
    r: f64,
    q: &Quadrature,
) -> Result<f64> {
    Ok(proximity_curve(f, a, r, q)? + counting_curve(f, a, r)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub r: f64,
    pub characteristic: f64,
    pub proximity: f64,
    pub counting: f64,
    pub truncated_counting: f64,
    pub ideal_characteristic: f64,
}

/// Per-radius values of `T_f`, `m_f(a)`, `N_f(a)`, `N_f^{(1)}(a)` and `T_{a,f}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveFunctionTable {
    pub rows: Vec<CurveRow>,
}

impl CurveFunctionTable {
    pub fn compute(
        f: &PolynomialCurve,
        a: &HomogeneousMonomialIdeal,
        grid: &RadiusGrid,
        q: &Quadrature,
    ) -> Result<Self> {
        let zeros = PulledBackZeros::compute(f, a)?;
        let rows = grid
            .radii()
            .iter()
            .map(|&r| {
                let proximity = proximity_curve(f, a, r, q)?;
                let counting = zeros.counting(r)?;
                Ok(CurveRow {
                    r,
                    characteristic: characteristic(f, r, q)?,
                    proximity,
                    counting,
                    truncated_counting: zeros.truncated_counting(r)?,
                    ideal_characteristic: proximity + counting,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::MonomialIdeal;
    use crate::rational::int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_real(c.iter().map(|&x| int(x)).collect())
    }

    fn curve(cs: &[&[i64]]) -> PolynomialCurve {
        PolynomialCurve::new(cs.iter().map(|c| p(c)).collect()).unwrap()
    }

    fn hideal(gens: Vec<Vec<u32>>) -> HomogeneousMonomialIdeal {
        HomogeneousMonomialIdeal::new(MonomialIdeal::from_vecs(gens).unwrap()).unwrap()
    }

    #[test]
    fn curve_validation() {
        assert!(PolynomialCurve::new(vec![p(&[1]), p(&[2])]).is_err());
        assert!(PolynomialCurve::new(vec![p(&[0, 1]), p(&[0, 0, 1])]).is_err());
        assert!(PolynomialCurve::new(vec![p(&[1, 1])]).is_err());
        assert_eq!(curve(&[&[1], &[0, 1], &[0, 0, 1]]).degree(), 2);
    }

    #[test]
    fn grids() {
        assert_eq!(RadiusGrid::parse("2:5").unwrap().radii(), &[2.0, 3.0, 4.0, 5.0]);
        assert_eq!(RadiusGrid::parse("1,2.5").unwrap().radii(), &[1.0, 2.5]);
        assert_eq!(RadiusGrid::parse("1:2:0.5").unwrap().radii().len(), 3);
        assert!(RadiusGrid::parse("3,2").is_err());
        assert!(RadiusGrid::parse("0,2").is_err());
        assert!(RadiusGrid::parse("a:b").unwrap_err().is_parse());
    }

    #[test]
    fn characteristic_of_moment_curve() {
        let f = curve(&[&[1], &[0, 1], &[0, 0, 1]]);
        let q = Quadrature::default();
        // max(1, r, r^2) = r^2 for r >= 1, so T_f(r) = 2 log r exactly
        for r in [2.0, 10.0, 1e4] {
            assert!((characteristic(&f, r, &q).unwrap() - 2.0 * f64::ln(r)).abs() < 1e-9);
        }
        let line = curve(&[&[1], &[0, 1]]);
        assert!((characteristic(&line, 10.0, &q).unwrap() - 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn counting_examples() {
        let f = curve(&[&[1], &[0, 1], &[0, 0, 1]]);
        let a = hideal(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let b = hideal(vec![vec![0, 2, 0], vec![0, 0, 2]]);
        let r = 7.0f64;
        assert!((counting_curve(&f, &a, r).unwrap() - r.ln()).abs() < 1e-12);
        assert!((truncated_counting_curve(&f, &a, r).unwrap() - r.ln()).abs() < 1e-12);
        assert!((counting_curve(&f, &b, r).unwrap() - 2.0 * r.ln()).abs() < 1e-12);
        assert!((truncated_counting_curve(&f, &b, r).unwrap() - r.ln()).abs() < 1e-12);
        let x0 = hideal(vec![vec![1, 0, 0]]);
        assert_eq!(counting_curve(&f, &x0, r).unwrap(), 0.0);
    }

    #[test]
    fn counting_off_origin() {
        // h = (z^2 - 1)^2 (z - 3) from a = {x1} on f = (1, (z^2-1)^2 (z-3))
        let f = PolynomialCurve::new(vec![p(&[1]), p(&[-1, 0, 1]).pow(2).mul(&p(&[-3, 1]))]).unwrap();
        let a = hideal(vec![vec![0, 1]]);
        let z = PulledBackZeros::compute(&f, &a).unwrap();
        let r = 5.0f64;
        let want = 4.0 * r.ln() + (r / 3.0).ln();
        assert!((z.counting(r).unwrap() - want).abs() < 1e-10);
        assert!((z.truncated_counting(r).unwrap() - (2.0 * r.ln() + (r / 3.0).ln())).abs() < 1e-10);
        assert!((z.counting(2.0).unwrap() - 4.0 * 2f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn proximity_examples() {
        let f = curve(&[&[1], &[0, 1], &[0, 0, 1]]);
        let q = Quadrature::default();
        let unit = HomogeneousMonomialIdeal::unit(2);
        assert_eq!(proximity_curve(&f, &unit, 3.0, &q).unwrap(), 0.0);
        let x0 = hideal(vec![vec![1, 0, 0]]);
        let a = hideal(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        for r in [2.0, 50.0] {
            assert!((proximity_curve(&f, &x0, r, &q).unwrap() - 2.0 * f64::ln(r)).abs() < 1e-9);
            // the x2 generator already attains the maximum when r >= 1
            assert!(proximity_curve(&f, &a, r, &q).unwrap().abs() < 1e-9);
        }
        let inside = PolynomialCurve::new(vec![p(&[1]), p(&[0, 1]), Polynomial::zero()]).unwrap();
        let x2 = hideal(vec![vec![0, 0, 1]]);
        assert_eq!(proximity_curve(&inside, &x2, 2.0, &q), Err(Error::CurveInZeroLocus));
    }

    #[test]
    fn first_main_theorem_smoke() {
        let f = curve(&[&[1], &[1, 1], &[1, 0, 1]]);
        let q = Quadrature::default();
        for j in 0..3 {
            let mut e = vec![0; 3];
            e[j] = 1;
            let h = hideal(vec![e]);
            for r in [2.0, 13.0, 100.0] {
                let t = characteristic(&f, r, &q).unwrap();
                let s = ideal_characteristic(&f, &h, r, &q).unwrap();
                assert!((s - t).abs() <= 1.0, "H_{j}, r = {r}: {s} vs {t}");
            }
        }
    }
}
