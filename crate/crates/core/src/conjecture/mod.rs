//! Margin tables for the ideal-sheaf proximity and truncated-counting
//! inequalities, over `Q` and along polynomial curves, plus the reduction to
//! the classical divisor case and the blow-up chain checks.
//!
//! On `P^n` the big class is the hyperplane class and the canonical class is
//! `O(-(n+1))`. Margins are "right side minus left side"; a row is flagged
//! when its margin falls below `-slack`. Flagged rows are candidate
//! exceptional behavior, not counterexamples: the inequalities only hold up
//! to unquantified constants and outside an exceptional set.

pub mod blowup;

use std::fmt;

use num_traits::{One, Signed};

use crate::arithmetic::{
    height_class, height_ideal, proximity, truncated_counting, weil_height, LogSum, Place,
    PlaceSet, RationalPoint,
};
use crate::error::{Error, Result};
use crate::multiplier::left_limit_sheaf;
use crate::nevanlinna::{
    characteristic, proximity_curve, PolynomialCurve, PulledBackZeros, Quadrature, RadiusGrid,
    IDEAL_CHARACTERISTIC_NOTE,
};
use crate::polyhedra::{ExponentVector, HomogeneousMonomialIdeal, MonomialIdeal};
use crate::rational::{to_f64, Rational};

pub use blowup::{
    blowup_chain_check, BlowupArithmeticRow, BlowupChart, BlowupCurveReport, BlowupReport,
    BlowupRow, ChartIndex, ChartPoint, EtaParameter, BLOWUP_CONSTANT,
};

/// Tolerance for float parts of the self-consistency check.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-9;

pub const FLAG_NOTE: &str =
    "flagged rows have margin < -slack; the inequalities hold only up to O(1) and outside an exceptional set, so flags are not counterexamples";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Setting {
    Arithmetic,
    Nevanlinna,
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Setting::Arithmetic => "arithmetic",
            Setting::Nevanlinna => "nevanlinna",
        })
    }
}

/// Which inequality a report evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// `h_K + m(a) - m(I^-(a)) <= ε h_A + d + O(1)`.
    Proximity,
    /// `N^(1)(a) + d >= h_K + h_a - h_{I^-(a)} - ε h_A - O(1)`.
    TruncatedCounting,
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inequality::Proximity => "proximity",
            Inequality::TruncatedCounting => "truncated_counting",
        })
    }
}

/// A report entry: exact `Σ c_p log p`, or a float from quadrature.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Exact(LogSum),
    Approx(f64),
}

impl Quantity {
    pub fn to_f64(&self) -> f64 {
        match self {
            Quantity::Exact(s) => s.to_f64(),
            Quantity::Approx(x) => *x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Column {
    pub name: &'static str,
    /// Coefficient of the column in the margin.
    pub sign: i8,
}

const fn col(name: &'static str, sign: i8) -> Column {
    Column { name, sign }
}

pub const ARITHMETIC_PROXIMITY_COLUMNS: [Column; 5] = [
    col("h_K", -1),
    col("m_a", -1),
    col("m_left_limit", 1),
    col("eps_h_A", 1),
    col("d_P", 1),
];

pub const ARITHMETIC_TRUNCATED_COLUMNS: [Column; 6] = [
    col("N1_a", 1),
    col("d_P", 1),
    col("h_K", -1),
    col("h_a", -1),
    col("h_left_limit", 1),
    col("eps_h_A", 1),
];

pub const NEVANLINNA_PROXIMITY_COLUMNS: [Column; 4] = [
    col("T_K", -1),
    col("m_a", -1),
    col("m_left_limit", 1),
    col("eps_T_A", 1),
];

pub const NEVANLINNA_TRUNCATED_COLUMNS: [Column; 6] = [
    col("N1_a", 1),
    col("N_ram", 1),
    col("T_K", -1),
    col("T_a", -1),
    col("T_left_limit", 1),
    col("eps_T_A", 1),
];

#[derive(Debug, Clone, PartialEq)]
pub struct MarginRow {
    /// The point (`1,3,6`) or the radius.
    pub label: String,
    /// Aligned with the report columns; empty when `error` is set.
    pub values: Vec<Quantity>,
    pub margin: Option<Quantity>,
    pub flagged: bool,
    pub error: Option<Error>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarginReport {
    pub setting: Setting,
    pub inequality: Inequality,
    pub n: usize,
    pub ideal: HomogeneousMonomialIdeal,
    pub left_limit: HomogeneousMonomialIdeal,
    pub epsilon: Rational,
    pub slack: f64,
    pub places: Option<PlaceSet>,
    pub columns: Vec<Column>,
    pub rows: Vec<MarginRow>,
    pub notes: Vec<String>,
}

impl MarginReport {
    /// The signed column sum for a row.
    pub fn recomputed_margin(&self, row: &MarginRow) -> Option<Quantity> {
        if row.error.is_some() {
            return None;
        }
        if row.values.iter().all(|v| matches!(v, Quantity::Exact(_))) {
            let mut acc = LogSum::zero();
            for (c, v) in self.columns.iter().zip(&row.values) {
                if let Quantity::Exact(s) = v {
                    acc += s.scale_int(i64::from(c.sign));
                }
            }
            Some(Quantity::Exact(acc))
        } else {
            Some(Quantity::Approx(
                self.columns
                    .iter()
                    .zip(&row.values)
                    .map(|(c, v)| f64::from(c.sign) * v.to_f64())
                    .sum(),
            ))
        }
    }

    /// Every margin equals the signed sum of its own terms: exactly for
    /// exact rows, within [`CONSISTENCY_TOLERANCE`] otherwise.
    pub fn is_self_consistent(&self) -> bool {
        self.rows.iter().all(|row| match (&row.margin, self.recomputed_margin(row)) {
            (None, None) => true,
            (Some(Quantity::Exact(a)), Some(Quantity::Exact(b))) => *a == b,
            (Some(a), Some(b)) => (a.to_f64() - b.to_f64()).abs() <= CONSISTENCY_TOLERANCE,
            _ => false,
        })
    }

    pub fn flagged_count(&self) -> usize {
        self.rows.iter().filter(|r| r.flagged).count()
    }

    pub fn error_count(&self) -> usize {
        self.rows.iter().filter(|r| r.error.is_some()).count()
    }

    fn finish_row(&self, label: String, values: Result<Vec<Quantity>>) -> MarginRow {
        match values {
            Ok(values) => {
                let mut row = MarginRow {
                    label,
                    values,
                    margin: None,
                    flagged: false,
                    error: None,
                };
                let margin = self.recomputed_margin(&row).expect("row without error");
                row.flagged = margin.to_f64() < -self.slack;
                row.margin = Some(margin);
                row
            }
            Err(e) => MarginRow {
                label,
                values: Vec::new(),
                margin: None,
                flagged: true,
                error: Some(e),
            },
        }
    }
}

fn check_epsilon(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter("epsilon must be positive".into()))
    }
}

fn check_slack(slack: f64) -> Result<()> {
    if slack.is_finite() && slack >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter("slack must be a nonnegative number".into()))
    }
}

fn report_skeleton(
    setting: Setting,
    inequality: Inequality,
    a: &HomogeneousMonomialIdeal,
    eps: &Rational,
    slack: f64,
    places: Option<PlaceSet>,
    columns: &[Column],
) -> Result<MarginReport> {
    check_epsilon(eps)?;
    check_slack(slack)?;
    let left_limit = left_limit_sheaf(a, &Rational::one())?;
    let mut notes = vec![
        "A = O(1), K = O(-(n+1))".to_string(),
        "degree bound r = 1 and covering degree 1: d(P) and N_ram are identically 0".to_string(),
        FLAG_NOTE.to_string(),
    ];
    if setting == Setting::Nevanlinna && inequality == Inequality::TruncatedCounting {
        notes.push(IDEAL_CHARACTERISTIC_NOTE.to_string());
    }
    Ok(MarginReport {
        setting,
        inequality,
        n: a.n(),
        ideal: a.clone(),
        left_limit,
        epsilon: eps.clone(),
        slack,
        places,
        columns: columns.to_vec(),
        rows: Vec::new(),
        notes,
    })
}

fn check_point(a: &HomogeneousMonomialIdeal, p: &RationalPoint) -> Result<()> {
    if p.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n() + 1,
            got: p.coords().len(),
        });
    }
    Ok(())
}

/// Margins of `h_K + m(a) - m(I^-(a)) <= ε h_A + d(P)` at each point.
pub fn margin_arithmetic(
    a: &HomogeneousMonomialIdeal,
    eps: &Rational,
    s: &PlaceSet,
    points: &[RationalPoint],
    slack: f64,
) -> Result<MarginReport> {
    let mut report = report_skeleton(
        Setting::Arithmetic,
        Inequality::Proximity,
        a,
        eps,
        slack,
        Some(s.clone()),
        &ARITHMETIC_PROXIMITY_COLUMNS,
    )?;
    let k = -(a.n() as i64 + 1);
    for p in points {
        let values = check_point(a, p).and_then(|_| {
            Ok(vec![
                Quantity::Exact(height_class(k, p)),
                Quantity::Exact(proximity(a, p, s)?),
                Quantity::Exact(proximity(&report.left_limit, p, s)?),
                Quantity::Exact(weil_height(p).scale(eps)),
                Quantity::Exact(LogSum::zero()),
            ])
        });
        let row = report.finish_row(p.to_string(), values);
        report.rows.push(row);
    }
    Ok(report)
}

/// Margins of `N^(1)(a) + d(P) >= h_K + h_a - h_{I^-(a)} - ε h_A` at each point.
pub fn margin_truncated_arithmetic(
    a: &HomogeneousMonomialIdeal,
    eps: &Rational,
    s: &PlaceSet,
    points: &[RationalPoint],
    slack: f64,
) -> Result<MarginReport> {
    let mut report = report_skeleton(
        Setting::Arithmetic,
        Inequality::TruncatedCounting,
        a,
        eps,
        slack,
        Some(s.clone()),
        &ARITHMETIC_TRUNCATED_COLUMNS,
    )?;
    let k = -(a.n() as i64 + 1);
    for p in points {
        let values = check_point(a, p).and_then(|_| {
            Ok(vec![
                Quantity::Exact(truncated_counting(a, p, s)?),
                Quantity::Exact(LogSum::zero()),
                Quantity::Exact(height_class(k, p)),
                Quantity::Exact(height_ideal(a, p)?),
                Quantity::Exact(height_ideal(&report.left_limit, p)?),
                Quantity::Exact(weil_height(p).scale(eps)),
            ])
        });
        let row = report.finish_row(p.to_string(), values);
        report.rows.push(row);
    }
    Ok(report)
}

fn check_curve(a: &HomogeneousMonomialIdeal, f: &PolynomialCurve) -> Result<()> {
    if f.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n() + 1,
            got: f.components().len(),
        });
    }
    // rejects curves inside the zero locus of either ideal
    PulledBackZeros::compute(f, a)?;
    Ok(())
}

/// Margins of `T_{K,f} + m_f(a) - m_f(I^-(a)) <= ε T_{A,f}` on the grid.
pub fn margin_nevanlinna(
    a: &HomogeneousMonomialIdeal,
    eps: &Rational,
    f: &PolynomialCurve,
    grid: &RadiusGrid,
    q: &Quadrature,
    slack: f64,
) -> Result<MarginReport> {
    let mut report = report_skeleton(
        Setting::Nevanlinna,
        Inequality::Proximity,
        a,
        eps,
        slack,
        None,
        &NEVANLINNA_PROXIMITY_COLUMNS,
    )?;
    check_curve(a, f)?;
    check_curve(&report.left_limit, f)?;
    let k = -(a.n() as f64 + 1.0);
    let e = to_f64(eps);
    for &r in grid.radii() {
        let t = characteristic(f, r, q)?;
        let values = vec![
            Quantity::Approx(k * t),
            Quantity::Approx(proximity_curve(f, a, r, q)?),
            Quantity::Approx(proximity_curve(f, &report.left_limit, r, q)?),
            Quantity::Approx(e * t),
        ];
        let row = report.finish_row(format!("{r}"), Ok(values));
        report.rows.push(row);
    }
    Ok(report)
}

/// Margins of `N_f^(1)(a) + N_ram >= T_{K,f} + T_{a,f} - T_{I^-(a),f} - ε T_{A,f}`.
pub fn margin_truncated_nevanlinna(
    a: &HomogeneousMonomialIdeal,
    eps: &Rational,
    f: &PolynomialCurve,
    grid: &RadiusGrid,
    q: &Quadrature,
    slack: f64,
) -> Result<MarginReport> {
    let mut report = report_skeleton(
        Setting::Nevanlinna,
        Inequality::TruncatedCounting,
        a,
        eps,
        slack,
        None,
        &NEVANLINNA_TRUNCATED_COLUMNS,
    )?;
    check_curve(a, f)?;
    check_curve(&report.left_limit, f)?;
    let zeros_a = PulledBackZeros::compute(f, a)?;
    let zeros_ll = PulledBackZeros::compute(f, &report.left_limit)?;
    let k = -(a.n() as f64 + 1.0);
    let e = to_f64(eps);
    for &r in grid.radii() {
        let t = characteristic(f, r, q)?;
        let t_a = proximity_curve(f, a, r, q)? + zeros_a.counting(r)?;
        let t_ll = proximity_curve(f, &report.left_limit, r, q)? + zeros_ll.counting(r)?;
        let values = vec![
            Quantity::Approx(zeros_a.truncated_counting(r)?),
            Quantity::Approx(0.0),
            Quantity::Approx(k * t),
            Quantity::Approx(t_a),
            Quantity::Approx(t_ll),
            Quantity::Approx(e * t),
        ];
        let row = report.finish_row(format!("{r}"), Ok(values));
        report.rows.push(row);
    }
    Ok(report)
}

/// Reduced divisor `Σ_{i ∈ support} {x_i = 0}` on `P^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateDivisor {
    n: usize,
    support: Vec<usize>,
}

impl CoordinateDivisor {
    pub fn new(n: usize, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if support.iter().any(|&i| i > n) {
            return Err(Error::InvalidParameter(format!(
                "coordinate index out of range for P^{n}"
            )));
        }
        Ok(Self { n, support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `O(-D)` as the principal monomial ideal.
    pub fn ideal(&self) -> HomogeneousMonomialIdeal {
        let mut e = vec![0u32; self.n + 1];
        for &i in &self.support {
            e[i] = 1;
        }
        HomogeneousMonomialIdeal::new(MonomialIdeal::principal(ExponentVector::from(e)))
            .expect("n >= 1")
    }

    pub fn contains_point(&self, p: &RationalPoint) -> bool {
        self.support.iter().any(|&i| p.coords()[i] == 0)
    }

    /// Classical `m_S(D, P) = Σ_i Σ_{v∈S} λ_{H_i,v}(P)` with
    /// `λ_{H_i,∞} = log(max|x|/|x_i|)` and `λ_{H_i,p} = ord_p(x_i)·log p`.
    pub fn proximity(&self, p: &RationalPoint, s: &PlaceSet) -> Result<LogSum> {
        if self.contains_point(p) {
            return Err(Error::PointInZeroLocus);
        }
        let mut total = LogSum::zero();
        for &i in &self.support {
            let x = p.coords()[i].unsigned_abs();
            for v in s.iter() {
                total += match v {
                    Place::Infinite => {
                        LogSum::log_integer(p.max_abs()) - LogSum::log_integer(x)
                    }
                    Place::Finite(q) => {
                        let mut k = 0;
                        let mut y = x;
                        while y.is_multiple_of(*q) {
                            y /= q;
                            k += 1;
                        }
                        LogSum::log_prime(*q, k)
                    }
                };
            }
        }
        Ok(total)
    }

    /// Classical `m_f(D, r)`, one circle mean per hyperplane.
    pub fn proximity_curve(&self, f: &PolynomialCurve, r: f64, q: &Quadrature) -> Result<f64> {
        let mut total = 0.0;
        for &i in &self.support {
            total += q.circle_mean(r, |z| {
                let w = f.eval(z);
                let m = w.iter().map(|c| c.norm()).fold(0.0, f64::max);
                (m / w[i].norm()).ln()
            })?;
        }
        Ok(total)
    }
}

/// Outcome of [`reduction_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionReport {
    pub divisor: Vec<usize>,
    pub points_checked: usize,
    pub points_on_divisor: usize,
    /// Points where `m(I^-(O(-D)))` was not exactly 0.
    pub left_limit_failures: usize,
    /// Points where `m(O(-D)) ≠ m(D)` exactly.
    pub proximity_failures: usize,
    pub radii_checked: usize,
    pub max_left_limit_curve: f64,
    pub max_divisor_deviation_curve: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub const REDUCTION_TOLERANCE: f64 = 1e-6;

/// Checks that for a reduced coordinate divisor `D` the ideal-sheaf terms
/// collapse to the divisor terms: `m(I^-(O(-D))) = 0` and `m(O(-D)) = m(D)`,
/// exactly on points and within [`REDUCTION_TOLERANCE`] on the curve grid.
pub fn reduction_check(
    d: &CoordinateDivisor,
    s: &PlaceSet,
    points: &[RationalPoint],
    curve: Option<(&PolynomialCurve, &RadiusGrid)>,
    q: &Quadrature,
) -> Result<ReductionReport> {
    let a = d.ideal();
    let ll = left_limit_sheaf(&a, &Rational::one())?;
    let mut out = ReductionReport {
        divisor: d.support().to_vec(),
        points_checked: 0,
        points_on_divisor: 0,
        left_limit_failures: 0,
        proximity_failures: 0,
        radii_checked: 0,
        max_left_limit_curve: 0.0,
        max_divisor_deviation_curve: 0.0,
        tolerance: REDUCTION_TOLERANCE,
        passed: true,
    };
    for p in points {
        check_point(&a, p)?;
        if d.contains_point(p) {
            out.points_on_divisor += 1;
            continue;
        }
        out.points_checked += 1;
        if !proximity(&ll, p, s)?.is_zero() {
            out.left_limit_failures += 1;
        }
        if proximity(&a, p, s)? != d.proximity(p, s)? {
            out.proximity_failures += 1;
        }
    }
    if let Some((f, grid)) = curve {
        check_curve(&a, f)?;
        for &r in grid.radii() {
            out.radii_checked += 1;
            let ll_value = proximity_curve(f, &ll, r, q)?.abs();
            let dev = (proximity_curve(f, &a, r, q)? - d.proximity_curve(f, r, q)?).abs();
            out.max_left_limit_curve = out.max_left_limit_curve.max(ll_value);
            out.max_divisor_deviation_curve = out.max_divisor_deviation_curve.max(dev);
        }
    }
    out.passed = out.left_limit_failures == 0
        && out.proximity_failures == 0
        && out.max_left_limit_curve <= REDUCTION_TOLERANCE
        && out.max_divisor_deviation_curve <= REDUCTION_TOLERANCE;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::sample_points;
    use crate::nevanlinna::Polynomial;
    use crate::polyhedra::homogenize;
    use crate::rational::{int, rat};

    fn hideal(gens: Vec<Vec<u32>>) -> HomogeneousMonomialIdeal {
        HomogeneousMonomialIdeal::new(MonomialIdeal::from_vecs(gens).unwrap()).unwrap()
    }

    fn moment_curve() -> PolynomialCurve {
        PolynomialCurve::new(vec![
            Polynomial::from_real(vec![int(1)]),
            Polynomial::from_real(vec![int(0), int(1)]),
            Polynomial::from_real(vec![int(0), int(0), int(1)]),
        ])
        .unwrap()
    }

    #[test]
    fn unit_ideal_margins() {
        let u = HomogeneousMonomialIdeal::unit(2);
        let pts = sample_points(2, 100, 30, 1).unwrap();
        let s = PlaceSet::archimedean();
        let eps = rat(1, 10);
        let r = margin_arithmetic(&u, &eps, &s, &pts, 0.0).unwrap();
        for (row, p) in r.rows.iter().zip(&pts) {
            let want = weil_height(p).scale(&(eps.clone() + int(3)));
            assert_eq!(row.margin, Some(Quantity::Exact(want)));
            assert!(!row.flagged);
        }
        assert!(r.is_self_consistent());
        let t = margin_truncated_arithmetic(&u, &eps, &s, &pts, 0.0).unwrap();
        for (row, p) in t.rows.iter().zip(&pts) {
            let want = weil_height(p).scale(&(eps.clone() + int(3)));
            assert_eq!(row.margin, Some(Quantity::Exact(want)));
        }
        let grid = RadiusGrid::parse("2:20").unwrap();
        let q = Quadrature::default();
        let f = moment_curve();
        let n = margin_nevanlinna(&u, &eps, &f, &grid, &q, 0.0).unwrap();
        for row in &n.rows {
            let r: f64 = row.label.parse().unwrap();
            let t = characteristic(&f, r, &q).unwrap();
            assert!((row.margin.as_ref().unwrap().to_f64() - 3.1 * t).abs() < 1e-9);
        }
        assert!(n.is_self_consistent());
    }

    #[test]
    fn maximal_ideal_squared() {
        let a = homogenize(&MonomialIdeal::from_vecs(vec![vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap());
        let p = RationalPoint::new(vec![1, 6, 10]).unwrap();
        let r = margin_arithmetic(&a, &rat(1, 2), &PlaceSet::archimedean(), std::slice::from_ref(&p), 0.0).unwrap();
        assert!(r.left_limit.is_unit());
        let row = &r.rows[0];
        assert_eq!(row.values[2], Quantity::Exact(LogSum::zero()));
        assert_eq!(row.values[1], Quantity::Exact(LogSum::zero()));
        let on_y = RationalPoint::new(vec![1, 0, 0]).unwrap();
        let r = margin_arithmetic(&a, &rat(1, 2), &PlaceSet::archimedean(), &[on_y], 0.0).unwrap();
        assert_eq!(r.rows[0].error, Some(Error::PointInZeroLocus));
        assert!(r.rows[0].flagged);
        assert!(r.is_self_consistent());
    }

    #[test]
    fn reduced_divisor_collapses() {
        let d = CoordinateDivisor::new(2, vec![0, 1, 2]).unwrap();
        let pts = sample_points(2, 1000, 50, 3).unwrap();
        let s = PlaceSet::parse("inf,2,3").unwrap();
        let f = PolynomialCurve::new(vec![
            Polynomial::from_real(vec![int(1)]),
            Polynomial::from_real(vec![int(1), int(1)]),
            Polynomial::from_real(vec![int(1), int(0), int(1)]),
        ])
        .unwrap();
        let grid = RadiusGrid::parse("2:10").unwrap();
        let rep = reduction_check(&d, &s, &pts, Some((&f, &grid)), &Quadrature::default()).unwrap();
        assert!(rep.passed, "{rep:?}");
        let empty = CoordinateDivisor::new(2, vec![]).unwrap();
        assert!(reduction_check(&empty, &s, &pts, None, &Quadrature::default()).unwrap().passed);
    }

    #[test]
    fn truncated_nevanlinna_columns() {
        let a = hideal(vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let grid = RadiusGrid::parse("2,5,50").unwrap();
        let rep = margin_truncated_nevanlinna(&a, &rat(1, 4), &moment_curve(), &grid, &Quadrature::default(), 0.0)
            .unwrap();
        assert!(rep.is_self_consistent());
        assert!(rep.notes.iter().any(|n| n == IDEAL_CHARACTERISTIC_NOTE));
        for row in &rep.rows {
            assert_eq!(row.values[1], Quantity::Approx(0.0));
            let r: f64 = row.label.parse().unwrap();
            assert!((row.values[0].to_f64() - r.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let u = HomogeneousMonomialIdeal::unit(2);
        let s = PlaceSet::archimedean();
        assert!(margin_arithmetic(&u, &int(0), &s, &[], 0.0).is_err());
        assert!(margin_arithmetic(&u, &int(1), &s, &[], -1.0).is_err());
    }
}
