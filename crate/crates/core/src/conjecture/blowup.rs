//! The blow-up `μ: X' → P²` of the point `[1:0:0]`, in two affine charts over
//! `x_0 ≠ 0`, and the numerical check of the inequality chain that pulls
//! `a = (x, y)^m` back to the divisor `F = mE`.
//!
//! Chart 1 has coordinates `(x, t)` with `y = x t` and `E = {x = 0}`;
//! chart 2 has `(s, y)` with `x = s y` and `E = {y = 0}`. The Weil function
//! of `E` is `log(max(1,|x|,|t|)/|x|)` on chart 1 and
//! `log(max(1,|s|,|y|)/|y|)` on chart 2, glued by the minimum.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::check_curve;
use crate::arithmetic::{proximity, weil_height, weil_local, LogSum, Place, PlaceSet, RationalPoint};
use crate::error::{Error, Result};
use crate::multiplier::{jumping_numbers, left_limit_sheaf, multiplier_sheaf};
use crate::nevanlinna::{
    characteristic, proximity_curve, PolynomialCurve, PulledBackZeros, Quadrature, RadiusGrid,
};
use crate::polyhedra::{homogenize, HomogeneousMonomialIdeal, MonomialIdeal};
use crate::rational::{format_rational, Rational};

/// Pinned constant for the bounded-difference checks.
pub const BLOWUP_CONSTANT: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChartIndex {
    First,
    Second,
}

/// A point of one chart: `(x, t)` on the first, `(s, y)` on the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChartPoint {
    pub chart: ChartIndex,
    pub u: Rational,
    pub v: Rational,
}

/// The blow-up together with the pullback data of `a = (x, y)^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupChart {
    m: u32,
}

impl BlowupChart {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("multiplicity m must be at least 1".into()));
        }
        Ok(Self { m })
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    /// `a = (x, y)^m` in the affine coordinates of `x_0 ≠ 0`.
    pub fn affine_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_vecs(vec![vec![1, 0], vec![0, 1]])
            .expect("nonzero")
            .power(self.m)
    }

    /// `a` as an ideal sheaf on `P²`.
    pub fn ideal(&self) -> HomogeneousMonomialIdeal {
        homogenize(&self.affine_ideal())
    }

    /// Coefficient of `E` in `F = μ^*a`.
    pub fn pullback_coefficient(&self) -> i64 {
        i64::from(self.m)
    }

    /// Coefficient of `E` in `K_{X'/X}`.
    pub fn relative_canonical_coefficient(&self) -> i64 {
        1
    }

    /// Coefficient of `E` in `-K_{X'/X} + ⌊(1-η)F⌋`.
    pub fn chain_divisor_coefficient(&self, eta: &EtaParameter) -> i64 {
        let c = (Rational::one() - eta.value()) * Rational::from_integer(self.m.into());
        c.floor().to_integer().to_i64().expect("small") - self.relative_canonical_coefficient()
    }

    /// `ord_E μ^*(x^i y^j) = i + j` in either chart.
    pub fn exceptional_order(i: u32, j: u32) -> u32 {
        i + j
    }

    /// The point of `X'` over `(x, y) ≠ (0, 0)`, on chart 1 when `x ≠ 0`.
    pub fn lift(x: &Rational, y: &Rational) -> Result<ChartPoint> {
        if !x.is_zero() {
            Ok(ChartPoint {
                chart: ChartIndex::First,
                u: x.clone(),
                v: y / x,
            })
        } else if !y.is_zero() {
            Ok(ChartPoint {
                chart: ChartIndex::Second,
                u: x / y,
                v: y.clone(),
            })
        } else {
            Err(Error::PointInZeroLocus)
        }
    }

    /// `μ` in chart coordinates.
    pub fn project(p: &ChartPoint) -> (Rational, Rational) {
        match p.chart {
            ChartIndex::First => (p.u.clone(), &p.u * &p.v),
            ChartIndex::Second => (&p.u * &p.v, p.v.clone()),
        }
    }

    /// The same point in the other chart; `None` where the charts do not overlap.
    pub fn transition(p: &ChartPoint) -> Option<ChartPoint> {
        match p.chart {
            // (x, t) ↦ (s, y) = (1/t, x t)
            ChartIndex::First if !p.v.is_zero() => Some(ChartPoint {
                chart: ChartIndex::Second,
                u: p.v.recip(),
                v: &p.u * &p.v,
            }),
            // (s, y) ↦ (x, t) = (s y, 1/s)
            ChartIndex::Second if !p.u.is_zero() => Some(ChartPoint {
                chart: ChartIndex::First,
                u: &p.u * &p.v,
                v: p.u.recip(),
            }),
            _ => None,
        }
    }
}

/// `η ∈ (0, 1)` with `I(a^{1-η}) = I^-(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaParameter(Rational);

impl EtaParameter {
    pub fn new(eta: Rational) -> Result<Self> {
        if !eta.is_positive() || eta >= Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "eta = {} must lie in (0, 1)",
                format_rational(&eta)
            )));
        }
        Ok(Self(eta))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// Half the distance from 1 to the largest jumping number below 1.
    pub fn default_for(a: &MonomialIdeal) -> Result<Self> {
        let below = jumping_numbers(a, &Rational::one())?
            .thresholds
            .into_iter()
            .filter(|t| *t < Rational::one())
            .max()
            .unwrap_or_else(Rational::zero);
        Self::new((Rational::one() - below) / Rational::from_integer(2.into()))
    }

    /// Checks that no jumping number lies in `(1-η, 1)` and that the two
    /// ideal sheaves agree exactly.
    pub fn validate(&self, a: &HomogeneousMonomialIdeal, affine: &MonomialIdeal) -> Result<()> {
        let c = Rational::one() - &self.0;
        let bad = jumping_numbers(affine, &Rational::one())?
            .thresholds
            .into_iter()
            .find(|t| *t > c && *t < Rational::one());
        if let Some(t) = bad {
            return Err(Error::InvalidParameter(format!(
                "eta = {} too large: jumping number {} lies in (1 - eta, 1)",
                format_rational(&self.0),
                format_rational(&t)
            )));
        }
        if multiplier_sheaf(a, &c)? != left_limit_sheaf(a, &Rational::one())? {
            return Err(Error::InvalidParameter(format!(
                "I(a^(1-eta)) differs from I^-(a) for eta = {}",
                format_rational(&self.0)
            )));
        }
        Ok(())
    }
}

/// `λ_E ∘ g` from `log|x_0|, log|x_1|, log|x_2|`.
pub fn exceptional_weil_from_logs(l: &[f64]) -> f64 {
    let chart = |pivot: usize, other: usize| {
        if l[pivot] == f64::NEG_INFINITY {
            return f64::INFINITY;
        }
        // max(|x_0 x_p|, |x_p|^2, |x_0 x_o|) / |x_p|^2
        let top = (l[0] + l[pivot]).max(2.0 * l[pivot]).max(l[0] + l[other]);
        top - 2.0 * l[pivot]
    };
    chart(1, 2).min(chart(2, 1))
}

fn valuation(x: i64, p: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let mut y = x.unsigned_abs();
    let mut k = 0;
    while y.is_multiple_of(p) {
        y /= p;
        k += 1;
    }
    Some(k)
}

/// Exact local value of the chart Weil function with the given pivot
/// coordinate; `None` off the chart.
fn chart_value(c: &[i64], pivot: usize, other: usize, v: Place) -> Option<(LogSum, BigInt, BigInt)> {
    if c[pivot] == 0 {
        return None;
    }
    let products = [(0, pivot), (pivot, pivot), (0, other)];
    let log_abs = |i: usize| LogSum::log_integer(c[i].unsigned_abs());
    match v {
        Place::Infinite => {
            let value = |(i, j): (usize, usize)| BigInt::from(c[i]).abs() * BigInt::from(c[j]).abs();
            let (i, j) = products
                .into_iter()
                .max_by(|&x, &y| value(x).cmp(&value(y)))
                .expect("three products");
            let num = value((i, j));
            let den = BigInt::from(c[pivot]).pow(2u32);
            Some((log_abs(i) + log_abs(j) - log_abs(pivot).scale_int(2), num, den))
        }
        Place::Finite(p) => {
            let vp = |i: usize| valuation(c[i], p);
            let low = products
                .into_iter()
                .filter_map(|(i, j)| Some(vp(i)? + vp(j)?))
                .min()
                .expect("pivot product is nonzero");
            let k = 2 * vp(pivot).expect("nonzero") as i64 - low as i64;
            Some((LogSum::log_prime(p, k), BigInt::zero(), BigInt::one()))
        }
    }
}

/// `λ_E(P', v)` for the point `P'` over `P = [x_0 : x_1 : x_2]`, `x_0 ≠ 0`.
pub fn exceptional_weil(point: &RationalPoint, v: Place) -> Result<LogSum> {
    let c = point.coords();
    if c.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: c.len() });
    }
    if c[0] == 0 {
        return Err(Error::InvalidPoint("the charts cover only x0 != 0".into()));
    }
    let first = chart_value(c, 1, 2, v);
    let second = chart_value(c, 2, 1, v);
    match (first, second) {
        (None, None) => Err(Error::PointInZeroLocus),
        (Some((a, ..)), None) | (None, Some((a, ..))) => Ok(a),
        (Some((a, an, ad)), Some((b, bn, bd))) => Ok(match v {
            Place::Infinite => {
                if an * &bd <= bn * &ad {
                    a
                } else {
                    b
                }
            }
            Place::Finite(p) => {
                if a.coefficient(p) <= b.coefficient(p) {
                    a
                } else {
                    b
                }
            }
        }),
    }
}

/// `Σ_{v∈S} λ_E(P', v)`.
pub fn exceptional_proximity(point: &RationalPoint, s: &PlaceSet) -> Result<LogSum> {
    s.iter().map(|&v| exceptional_weil(point, v)).sum()
}

/// `h_E(P')`: `λ_E` summed over every place.
pub fn exceptional_height(point: &RationalPoint) -> Result<LogSum> {
    let mut total = exceptional_weil(point, Place::Infinite)?;
    for p in point.prime_support() {
        total += exceptional_weil(point, Place::Finite(p))?;
    }
    Ok(total)
}

/// Height of the projection `[x_1 : x_2]` from the blown-up point.
pub fn projection_height(point: &RationalPoint) -> Result<LogSum> {
    let (x1, x2) = (point.coords()[1], point.coords()[2]);
    if x1 == 0 && x2 == 0 {
        return Err(Error::PointInZeroLocus);
    }
    let g = x1.unsigned_abs().gcd(&x2.unsigned_abs());
    Ok(LogSum::log_integer(x1.unsigned_abs().max(x2.unsigned_abs())) - LogSum::log_integer(g))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupRow {
    pub r: f64,
    pub m_f_a: f64,
    pub m_g_e: f64,
    /// `m_f(a) - m_g(mE)`.
    pub functoriality_gap: f64,
    /// `m_f(I(a^{1-η}))`.
    pub m_f_multiplier: f64,
    /// `m_g(-K_{X'/X} + ⌊(1-η)F⌋)`.
    pub m_g_chain_divisor: f64,
    /// Left minus right side of the chain inequality; must be `>= -C`.
    pub chain_difference: f64,
    pub t_f: f64,
    pub t_projection: f64,
    pub n_g_e: f64,
    /// `(-2T_f - T_L) - (-3T_f + m_g(E) + N_g(E))`.
    pub canonical_gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupCurveReport {
    pub curve: String,
    pub rows: Vec<BlowupRow>,
    pub functoriality_ok: bool,
    pub chain_ok: bool,
    pub canonical_ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupArithmeticRow {
    pub point: RationalPoint,
    pub m_a: LogSum,
    pub m_e: LogSum,
    /// `m_S(a, P) - m·m_S(E, P')`, exact.
    pub functoriality_gap: LogSum,
    /// The part of the gap coming from the finite places of `S`.
    pub functoriality_gap_finite: LogSum,
    pub m_multiplier: LogSum,
    pub m_chain_divisor: LogSum,
    pub chain_difference: LogSum,
    /// `(-2h - h_L) - (-3h + h_E)`, exact.
    pub canonical_gap: LogSum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupReport {
    pub m: u32,
    pub eta: Rational,
    pub constant: f64,
    pub chain_divisor_coefficient: i64,
    pub multiplier_ideal: HomogeneousMonomialIdeal,
    pub curves: Vec<BlowupCurveReport>,
    pub places: PlaceSet,
    pub points: Vec<BlowupArithmeticRow>,
    /// Largest `|functoriality gap|` over the points.
    pub arithmetic_sup_gap: f64,
    pub arithmetic_exact_ok: bool,
    pub arithmetic_chain_ok: bool,
    pub passed: bool,
}

fn curve_rows(
    chart: &BlowupChart,
    a: &HomogeneousMonomialIdeal,
    mult: &HomogeneousMonomialIdeal,
    coef: i64,
    f: &PolynomialCurve,
    grid: &RadiusGrid,
    q: &Quadrature,
) -> Result<BlowupCurveReport> {
    if f.n() != 2 {
        return Err(Error::DimensionMismatch { expected: 3, got: f.components().len() });
    }
    check_curve(a, f)?;
    let comps = f.components();
    let h = comps[1].gcd(&comps[2]);
    let projection = PolynomialCurve::new(vec![comps[1].exact_div(&h), comps[2].exact_div(&h)]).ok();
    let maximal = homogenize(&BlowupChart::new(1)?.affine_ideal());
    let zeros_e = PulledBackZeros::compute(f, &maximal)?;
    let m = f64::from(chart.multiplicity());
    let mut rows = Vec::new();
    for &r in grid.radii() {
        let m_f_a = proximity_curve(f, a, r, q)?;
        let m_g_e = q.circle_mean(r, |z| exceptional_weil_from_logs(&f.log_abs(z)))?;
        let m_f_multiplier = proximity_curve(f, mult, r, q)?;
        let m_g_chain_divisor = coef as f64 * m_g_e;
        let t_f = characteristic(f, r, q)?;
        let t_projection = match &projection {
            Some(p) => characteristic(p, r, q)?,
            None => 0.0,
        };
        let n_g_e = zeros_e.counting(r)?;
        rows.push(BlowupRow {
            r,
            m_f_a,
            m_g_e,
            functoriality_gap: m_f_a - m * m_g_e,
            m_f_multiplier,
            m_g_chain_divisor,
            chain_difference: m_f_multiplier - m_g_chain_divisor,
            t_f,
            t_projection,
            n_g_e,
            canonical_gap: (-2.0 * t_f - t_projection) - (-3.0 * t_f + m_g_e + n_g_e),
        });
    }
    Ok(BlowupCurveReport {
        curve: comps.iter().map(|c| format!("[{c}]")).collect::<Vec<_>>().join(", "),
        functoriality_ok: rows.iter().all(|w| w.functoriality_gap.abs() <= BLOWUP_CONSTANT),
        chain_ok: rows.iter().all(|w| w.chain_difference >= -BLOWUP_CONSTANT),
        canonical_ok: rows.iter().all(|w| w.canonical_gap.abs() <= BLOWUP_CONSTANT),
        rows,
    })
}

fn point_row(
    chart: &BlowupChart,
    a: &HomogeneousMonomialIdeal,
    mult: &HomogeneousMonomialIdeal,
    coef: i64,
    p: &RationalPoint,
    s: &PlaceSet,
) -> Result<BlowupArithmeticRow> {
    let m_a = proximity(a, p, s)?;
    let m_e = exceptional_proximity(p, s)?;
    let m_multiplier = proximity(mult, p, s)?;
    let m_chain_divisor = m_e.scale_int(coef);
    let m = i64::from(chart.multiplicity());
    let mut functoriality_gap_finite = LogSum::zero();
    for q in s.primes() {
        let v = Place::Finite(q);
        functoriality_gap_finite += weil_local(a, p, v)?.value - exceptional_weil(p, v)?.scale_int(m);
    }
    let h = weil_height(p);
    let lhs = h.scale_int(-2) - projection_height(p)?;
    let rhs = h.scale_int(-3) + exceptional_height(p)?;
    Ok(BlowupArithmeticRow {
        point: p.clone(),
        functoriality_gap: m_a.clone() - m_e.scale_int(m),
        functoriality_gap_finite,
        chain_difference: m_multiplier.clone() - m_chain_divisor.clone(),
        m_a,
        m_e,
        m_multiplier,
        m_chain_divisor,
        canonical_gap: lhs - rhs,
    })
}

/// Evaluates, for `a = (x, y)^m` on `P²` and the blow-up of `[1:0:0]`:
/// (i) `|m_f(a) - m_g(mE)| <= C`,
/// (ii) `m_f(I(a^{1-η})) >= m_g(-K_{X'/X} + ⌊(1-η)F⌋) - C`,
/// (iii) `K_{X'} = μ^*K + E` at the level of characteristic functions,
/// on each curve over the grid and at each point (places `s`).
#[allow(clippy::too_many_arguments)]
pub fn blowup_chain_check(
    m: u32,
    eta: Option<Rational>,
    curves: &[PolynomialCurve],
    grid: &RadiusGrid,
    q: &Quadrature,
    points: &[RationalPoint],
    s: &PlaceSet,
) -> Result<BlowupReport> {
    let chart = BlowupChart::new(m)?;
    let affine = chart.affine_ideal();
    let a = chart.ideal();
    let eta = match eta {
        Some(e) => EtaParameter::new(e)?,
        None => EtaParameter::default_for(&affine)?,
    };
    eta.validate(&a, &affine)?;
    let c = Rational::one() - eta.value();
    let mult = multiplier_sheaf(&a, &c)?;
    let coef = chart.chain_divisor_coefficient(&eta);

    let curve_reports = curves
        .iter()
        .map(|f| curve_rows(&chart, &a, &mult, coef, f, grid, q))
        .collect::<Result<Vec<_>>>()?;
    let rows = points
        .iter()
        .map(|p| point_row(&chart, &a, &mult, coef, p, s))
        .collect::<Result<Vec<_>>>()?;

    let arithmetic_sup_gap = rows
        .iter()
        .map(|r| r.functoriality_gap.to_f64().abs())
        .fold(0.0, f64::max);
    let arithmetic_exact_ok = rows.iter().all(|r| {
        r.functoriality_gap.to_f64().abs() <= BLOWUP_CONSTANT
            && r.functoriality_gap_finite.is_zero()
            && r.canonical_gap.is_zero()
    });
    let arithmetic_chain_ok = rows
        .iter()
        .all(|r| r.chain_difference.to_f64() >= -BLOWUP_CONSTANT);
    let passed = arithmetic_exact_ok
        && arithmetic_chain_ok
        && curve_reports
            .iter()
            .all(|c| c.functoriality_ok && c.chain_ok && c.canonical_ok);
    Ok(BlowupReport {
        m,
        eta: eta.value().clone(),
        constant: BLOWUP_CONSTANT,
        chain_divisor_coefficient: coef,
        multiplier_ideal: mult,
        curves: curve_reports,
        places: s.clone(),
        points: rows,
        arithmetic_sup_gap,
        arithmetic_exact_ok,
        arithmetic_chain_ok,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::sample_points_where;
    use crate::nevanlinna::Polynomial;
    use crate::rational::{int, rat};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_real(c.iter().map(|&x| int(x)).collect())
    }

    fn pinned_curves() -> Vec<PolynomialCurve> {
        [
            vec![poly(&[1]), poly(&[1, 1]), poly(&[1, 0, 1])],
            vec![poly(&[1]), poly(&[0, 1]), poly(&[0, 0, 1])],
            vec![poly(&[1]), poly(&[-1, 0, 1]), poly(&[0, -1, 0, 1])],
        ]
        .into_iter()
        .map(|c| PolynomialCurve::new(c).unwrap())
        .collect()
    }

    #[test]
    fn chart_geometry() {
        let p = BlowupChart::lift(&rat(2, 3), &rat(5, 7)).unwrap();
        assert_eq!(p.chart, ChartIndex::First);
        assert_eq!(BlowupChart::project(&p), (rat(2, 3), rat(5, 7)));
        let q = BlowupChart::transition(&p).unwrap();
        assert_eq!(q.chart, ChartIndex::Second);
        assert_eq!(BlowupChart::project(&q), (rat(2, 3), rat(5, 7)));
        assert_eq!(BlowupChart::transition(&q).unwrap(), p);
        let on_axis = BlowupChart::lift(&int(0), &int(4)).unwrap();
        assert_eq!(on_axis.chart, ChartIndex::Second);
        assert!(BlowupChart::transition(&on_axis).is_none());
        assert!(BlowupChart::lift(&int(0), &int(0)).is_err());
        assert_eq!(BlowupChart::exceptional_order(1, 0), 1);
        assert_eq!(BlowupChart::exceptional_order(0, 1), 1);
    }

    #[test]
    fn eta_and_coefficients() {
        let c2 = BlowupChart::new(2).unwrap();
        let eta = EtaParameter::new(rat(1, 4)).unwrap();
        eta.validate(&c2.ideal(), &c2.affine_ideal()).unwrap();
        assert_eq!(c2.chain_divisor_coefficient(&eta), 0);
        let c1 = BlowupChart::new(1).unwrap();
        assert_eq!(c1.chain_divisor_coefficient(&EtaParameter::new(rat(1, 2)).unwrap()), -1);
        let c3 = BlowupChart::new(3).unwrap();
        assert_eq!(EtaParameter::default_for(&c3.affine_ideal()).unwrap().value(), &rat(1, 6));
        assert!(EtaParameter::new(rat(1, 2))
            .unwrap()
            .validate(&c3.ideal(), &c3.affine_ideal())
            .is_err());
        assert!(EtaParameter::new(int(1)).is_err());
    }

    #[test]
    fn exceptional_weil_matches_pullback() {
        let maximal = homogenize(&BlowupChart::new(1).unwrap().affine_ideal());
        let pts = sample_points_where(2, 300, 200, 11, |p| p.coords()[0] != 0 && p.coords()[1..] != [0, 0]).unwrap();
        for p in &pts {
            for v in [Place::Infinite, Place::Finite(2), Place::Finite(3), Place::Finite(5)] {
                assert_eq!(exceptional_weil(p, v).unwrap(), weil_local(&maximal, p, v).unwrap().value, "{p} at {v}");
            }
        }
    }

    #[test]
    fn analytic_chain_on_pinned_curves() {
        let grid = RadiusGrid::parse("2:100:7").unwrap();
        let q = Quadrature::default();
        let pts = sample_points_where(2, 1000, 50, 5, |p| p.coords()[0] != 0 && p.coords()[1..] != [0, 0]).unwrap();
        let s = PlaceSet::parse("inf,2,3").unwrap();
        for m in 1..=3 {
            let rep = blowup_chain_check(m, None, &pinned_curves(), &grid, &q, &pts, &s).unwrap();
            assert!(rep.passed, "m = {m}: {rep:?}");
            assert_eq!(rep.arithmetic_sup_gap, 0.0);
        }
        let rep = blowup_chain_check(2, Some(rat(1, 4)), &pinned_curves(), &grid, &q, &[], &s).unwrap();
        assert!(rep.multiplier_ideal.is_unit());
    }
}
