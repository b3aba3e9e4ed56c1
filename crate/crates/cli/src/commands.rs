use idealprox::arithmetic::{
    counting, height_class, height_ideal, proximity, sample_points, sample_points_where,
    truncated_counting, weil_height, weil_local, PlaceSet,
};
use idealprox::conjecture::{
    blowup_chain_check, margin_arithmetic, margin_nevanlinna, margin_truncated_arithmetic,
    margin_truncated_nevanlinna, reduction_check, CoordinateDivisor,
};
use idealprox::multiplier::{
    jumping_numbers, lct, lct_by_bisection, left_limit_by_sequence, left_limit_sheaf,
    multiplier_ideal, multiplier_ideal_minus, multiplier_sheaf, snc_identity_holds,
};
use idealprox::nevanlinna::{CurveFunctionTable, Polynomial, IDEAL_CHARACTERISTIC_NOTE};
use idealprox::polyhedra::lattice_points_box;
use idealprox::rational::{format_rational, int};
use idealprox::{
    HomogeneousMonomialIdeal, LogSum, PolynomialCurve, Quadrature, RadiusGrid,
    RationalPoint, SncMonomialDivisor,
};
use serde::{Deserialize, Serialize};

use crate::args::{Command, Format, IdealInput, Output};
use crate::input::{self, IdealFile};
use crate::output::{csv_line, float, ErrorOut, MarginOut, PlaceValueOut, QuantityOut};
use crate::CliError;

/// A finished command: JSON and CSV renderings.
pub struct Rendered {
    pub json: String,
    pub csv: String,
}

fn render<T: Serialize>(value: &T, csv: String) -> Result<Rendered, CliError> {
    let mut json = serde_json::to_string(value).map_err(|e| CliError::Io(e.to_string()))?;
    json.push('\n');
    Ok(Rendered { json, csv })
}

pub fn output_of(cmd: &Command) -> &Output {
    match cmd {
        Command::Mi { output, .. }
        | Command::MiMinus { output, .. }
        | Command::Lct { output, .. }
        | Command::Jump { output, .. }
        | Command::CheckExample13 { output, .. }
        | Command::Weil { output, .. }
        | Command::Prox { output, .. }
        | Command::Count { output, .. }
        | Command::Count1 { output, .. }
        | Command::Height { output, .. }
        | Command::Curve { output, .. }
        | Command::Margins32 { output, .. }
        | Command::Margins42 { output, .. }
        | Command::Margins31 { output, .. }
        | Command::Margins41 { output, .. }
        | Command::CheckReduction { output, .. }
        | Command::CheckBlowup { output, .. } => output,
    }
}

pub fn pick(r: Rendered, format: Format) -> String {
    match format {
        Format::Json => r.json,
        Format::Csv => r.csv,
    }
}

fn ideal_csv(a: &IdealFile) -> String {
    let mut s = csv_line((0..a.dim).map(|i| format!("e{i}")));
    for g in &a.generators {
        s.push_str(&csv_line(g.iter().map(|e| e.to_string())));
    }
    s
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IdealResult {
    pub command: String,
    pub input: IdealFile,
    pub projective: bool,
    pub c: String,
    pub result: IdealFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<SequenceOut>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SequenceOut {
    pub stable_from: u64,
    pub last_k: u64,
    pub guaranteed_from: u64,
    pub agrees: bool,
}

fn multiplier_command(ideal: &IdealInput, c: &str, minus: bool) -> Result<Rendered, CliError> {
    let c = input::rational("c", c)?;
    let command = if minus { "mi-minus" } else { "mi" };
    let (inp, result, sequence) = if ideal.projective {
        let a = input::sheaf(ideal)?;
        let r = if minus { left_limit_sheaf(&a, &c)? } else { multiplier_sheaf(&a, &c)? };
        (IdealFile::from_ideal(a.ideal()), IdealFile::from_ideal(r.ideal()), None)
    } else {
        let a = input::affine_ideal(ideal)?;
        if minus {
            let r = multiplier_ideal_minus(&a, &c)?;
            let s = left_limit_by_sequence(&a, &c)?;
            let seq = SequenceOut {
                stable_from: s.stable_from,
                last_k: s.last_k,
                guaranteed_from: s.guaranteed_from,
                agrees: s.ideal == r,
            };
            (IdealFile::from_ideal(&a), IdealFile::from_ideal(&r), Some(seq))
        } else {
            let r = multiplier_ideal(&a, &c)?;
            (IdealFile::from_ideal(&a), IdealFile::from_ideal(&r), None)
        }
    };
    let csv = ideal_csv(&result);
    render(
        &IdealResult {
            command: command.into(),
            input: inp,
            projective: ideal.projective,
            c: format_rational(&c),
            result,
            sequence,
        },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LctOut {
    pub command: String,
    pub input: IdealFile,
    pub lct: String,
    pub bisection: String,
    pub agree: bool,
}

fn lct_command(ideal: &IdealInput) -> Result<Rendered, CliError> {
    let a = input::affine_ideal(ideal)?;
    let t = lct(&a)?;
    let b = lct_by_bisection(&a, 4096)?;
    let out = LctOut {
        command: "lct".into(),
        input: IdealFile::from_ideal(&a),
        lct: t.to_string(),
        bisection: b.to_string(),
        agree: t == b,
    };
    let csv = csv_line(["lct", "bisection", "agree"].map(String::from))
        + &csv_line([out.lct.clone(), out.bisection.clone(), out.agree.to_string()]);
    render(&out, csv)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JumpStep {
    pub threshold: String,
    pub ideal: IdealFile,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JumpOut {
    pub command: String,
    pub input: IdealFile,
    pub cmax: String,
    pub thresholds: Vec<String>,
    /// `I(a^t)` at each jumping number `t`.
    pub steps: Vec<JumpStep>,
}

fn jump_command(ideal: &IdealInput, cmax: &str) -> Result<Rendered, CliError> {
    let a = input::affine_ideal(ideal)?;
    let cmax = input::rational("cmax", cmax)?;
    let spectrum = jumping_numbers(&a, &cmax)?;
    let steps: Vec<JumpStep> = spectrum
        .thresholds
        .iter()
        .zip(spectrum.ideals.iter().skip(1))
        .map(|(t, i)| JumpStep { threshold: format_rational(t), ideal: IdealFile::from_ideal(i) })
        .collect();
    let mut csv = csv_line(["threshold", "generators"].map(String::from));
    for s in &steps {
        let gens: Vec<String> = s
            .ideal
            .generators
            .iter()
            .map(|g| g.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        csv.push_str(&csv_line([s.threshold.clone(), gens.join(";")]));
    }
    render(
        &JumpOut {
            command: "jump".into(),
            input: IdealFile::from_ideal(&a),
            cmax: format_rational(&cmax),
            thresholds: spectrum.thresholds.iter().map(format_rational).collect(),
            steps,
        },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IdentityOut {
    pub command: String,
    pub max_mult: u32,
    pub max_dim: usize,
    pub checked: usize,
    pub failures: Vec<Vec<u32>>,
    pub status: String,
}

fn identity_command(max_mult: u32, max_dim: usize) -> Result<Rendered, CliError> {
    if max_dim == 0 || max_dim > idealprox::polyhedra::MAX_DIM {
        return Err(idealprox::Error::UnsupportedDimension(max_dim).into());
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=max_dim {
        for d in lattice_points_box(&vec![max_mult; n].into()) {
            checked += 1;
            if !snc_identity_holds(&SncMonomialDivisor::new(d.to_vec())?)? {
                failures.push(d.to_vec());
            }
        }
    }
    let status = if failures.is_empty() { "all passed" } else { "failed" };
    let csv = csv_line(["checked", "failures", "status"].map(String::from))
        + &csv_line([checked.to_string(), failures.len().to_string(), status.to_string()]);
    render(
        &IdentityOut {
            command: "check-example-1-3".into(),
            max_mult,
            max_dim,
            checked,
            failures,
            status: status.into(),
        },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeilRow {
    pub point: String,
    pub values: Vec<PlaceValueOut>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeilOut {
    pub command: String,
    pub ideal: IdealFile,
    pub places: String,
    pub rows: Vec<WeilRow>,
}

fn weil_command(a: &HomogeneousMonomialIdeal, pts: &[RationalPoint], s: &PlaceSet) -> Result<Rendered, CliError> {
    let mut rows = Vec::new();
    let mut csv = csv_line(["point", "place", "mult", "value"].map(String::from));
    for p in pts {
        let mut values = Vec::new();
        for &v in s.iter() {
            let pv = PlaceValueOut::new(&weil_local(a, p, v)?);
            csv.push_str(&csv_line([
                p.to_string(),
                pv.place.clone(),
                pv.mult.map(|m| m.to_string()).unwrap_or_default(),
                pv.value.to_string(),
            ]));
            values.push(pv);
        }
        rows.push(WeilRow { point: p.to_string(), values });
    }
    render(
        &WeilOut { command: "weil".into(), ideal: IdealFile::from_ideal(a.ideal()), places: s.to_string(), rows },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScalarRow {
    pub point: String,
    pub value: QuantityOut,
    /// Finite-place terms as `{"p", "mult"}` (counting functions only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<PrimeMult>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PrimeMult {
    pub p: u64,
    pub mult: i64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ScalarOut {
    pub command: String,
    pub ideal: IdealFile,
    pub places: String,
    pub rows: Vec<ScalarRow>,
}

fn prime_terms(s: &LogSum) -> Vec<PrimeMult> {
    s.terms()
        .map(|(p, c)| PrimeMult { p, mult: c.to_integer().try_into().unwrap_or(i64::MAX) })
        .collect()
}

fn scalar_command(
    name: &str,
    a: &HomogeneousMonomialIdeal,
    pts: &[RationalPoint],
    s: &PlaceSet,
) -> Result<Rendered, CliError> {
    let mut rows = Vec::new();
    let mut csv = csv_line(["point", "value"].map(String::from));
    for p in pts {
        let (value, terms) = match name {
            "prox" => (proximity(a, p, s)?, None),
            "count" => {
                let v = counting(a, p, s)?;
                let t = prime_terms(&v);
                (v, Some(t))
            }
            _ => {
                let v = truncated_counting(a, p, s)?;
                let t = prime_terms(&v);
                (v, Some(t))
            }
        };
        let q = QuantityOut::exact(&value);
        csv.push_str(&csv_line([p.to_string(), q.value.to_string()]));
        rows.push(ScalarRow { point: p.to_string(), value: q, terms });
    }
    render(
        &ScalarOut { command: name.into(), ideal: IdealFile::from_ideal(a.ideal()), places: s.to_string(), rows },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HeightRow {
    pub point: String,
    pub height_ideal: QuantityOut,
    pub weil_height: QuantityOut,
    pub height_class: QuantityOut,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HeightOut {
    pub command: String,
    pub ideal: IdealFile,
    pub deg: i64,
    pub rows: Vec<HeightRow>,
}

fn height_command(a: &HomogeneousMonomialIdeal, pts: &[RationalPoint], deg: Option<i64>) -> Result<Rendered, CliError> {
    let deg = deg.unwrap_or(-(a.n() as i64 + 1));
    let mut rows = Vec::new();
    let mut csv = csv_line(["point", "height_ideal", "weil_height", "height_class"].map(String::from));
    for p in pts {
        if p.n() != a.n() {
            return Err(idealprox::Error::DimensionMismatch { expected: a.n() + 1, got: p.coords().len() }.into());
        }
        let row = HeightRow {
            point: p.to_string(),
            height_ideal: QuantityOut::exact(&height_ideal(a, p)?),
            weil_height: QuantityOut::exact(&weil_height(p)),
            height_class: QuantityOut::exact(&height_class(deg, p)),
        };
        csv.push_str(&csv_line([
            row.point.clone(),
            row.height_ideal.value.to_string(),
            row.weil_height.value.to_string(),
            row.height_class.value.to_string(),
        ]));
        rows.push(row);
    }
    render(&HeightOut { command: "height".into(), ideal: IdealFile::from_ideal(a.ideal()), deg, rows }, csv)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveRowOut {
    pub r: f64,
    pub characteristic: f64,
    pub proximity: f64,
    pub counting: f64,
    pub truncated_counting: f64,
    pub ideal_characteristic: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveOut {
    pub command: String,
    pub curve: Vec<String>,
    pub ideal: IdealFile,
    pub nodes: usize,
    pub note: String,
    pub rows: Vec<CurveRowOut>,
}

fn curve_command(
    a: &HomogeneousMonomialIdeal,
    f: &PolynomialCurve,
    grid: &RadiusGrid,
    q: &Quadrature,
) -> Result<Rendered, CliError> {
    let table = CurveFunctionTable::compute(f, a, grid, q)?;
    let rows: Vec<CurveRowOut> = table
        .rows
        .iter()
        .map(|r| CurveRowOut {
            r: r.r,
            characteristic: float(r.characteristic),
            proximity: float(r.proximity),
            counting: float(r.counting),
            truncated_counting: float(r.truncated_counting),
            ideal_characteristic: float(r.ideal_characteristic),
        })
        .collect();
    let mut csv = csv_line(
        ["r", "T_f", "m_f", "N_f", "N1_f", "T_a_f"].map(String::from),
    );
    for r in &rows {
        csv.push_str(&csv_line([
            r.r.to_string(),
            r.characteristic.to_string(),
            r.proximity.to_string(),
            r.counting.to_string(),
            r.truncated_counting.to_string(),
            r.ideal_characteristic.to_string(),
        ]));
    }
    render(
        &CurveOut {
            command: "curve".into(),
            curve: f.components().iter().map(Polynomial::to_string).collect(),
            ideal: IdealFile::from_ideal(a.ideal()),
            nodes: q.nodes,
            note: IDEAL_CHARACTERISTIC_NOTE.into(),
            rows,
        },
        csv,
    )
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReductionOut {
    pub command: String,
    pub divisor: Vec<usize>,
    pub n: usize,
    pub places: String,
    pub points_checked: usize,
    pub points_on_divisor: usize,
    pub left_limit_failures: usize,
    pub proximity_failures: usize,
    pub radii_checked: usize,
    pub max_left_limit_curve: f64,
    pub max_divisor_deviation_curve: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlowupCurveOut {
    pub curve: String,
    pub functoriality_ok: bool,
    pub chain_ok: bool,
    pub canonical_ok: bool,
    pub max_functoriality_gap: f64,
    pub min_chain_difference: f64,
    pub max_canonical_gap: f64,
    pub rows: Vec<BlowupRowOut>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlowupRowOut {
    pub r: f64,
    pub m_f_a: f64,
    pub m_g_e: f64,
    pub functoriality_gap: f64,
    pub m_f_multiplier: f64,
    pub m_g_chain_divisor: f64,
    pub chain_difference: f64,
    pub t_f: f64,
    pub t_projection: f64,
    pub n_g_e: f64,
    pub canonical_gap: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlowupPointOut {
    pub point: String,
    pub m_a: QuantityOut,
    pub m_e: QuantityOut,
    pub functoriality_gap: QuantityOut,
    pub functoriality_gap_finite: QuantityOut,
    pub m_multiplier: QuantityOut,
    pub m_chain_divisor: QuantityOut,
    pub chain_difference: QuantityOut,
    pub canonical_gap: QuantityOut,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BlowupOut {
    pub command: String,
    pub m: u32,
    pub eta: String,
    pub constant: f64,
    pub relative_canonical: String,
    pub pullback: String,
    pub chain_divisor: String,
    pub multiplier_ideal: IdealFile,
    pub places: String,
    pub curves: Vec<BlowupCurveOut>,
    pub points: Vec<BlowupPointOut>,
    pub arithmetic_sup_gap: f64,
    pub arithmetic_exact_ok: bool,
    pub arithmetic_chain_ok: bool,
    pub passed: bool,
}

fn pinned_curves() -> Vec<PolynomialCurve> {
    let p = |c: &[i64]| Polynomial::from_real(c.iter().map(|&x| int(x)).collect());
    [
        vec![p(&[1]), p(&[1, 1]), p(&[1, 0, 1])],
        vec![p(&[1]), p(&[0, 1]), p(&[0, 0, 1])],
        vec![p(&[1]), p(&[-1, 0, 1]), p(&[0, -1, 0, 1])],
    ]
    .into_iter()
    .map(|c| PolynomialCurve::new(c).expect("pinned curves are valid"))
    .collect()
}

fn blowup_csv(out: &BlowupOut) -> String {
    let mut s = csv_line(
        [
            "curve", "r", "m_f_a", "m_g_E", "functoriality_gap", "m_f_multiplier",
            "m_g_chain_divisor", "chain_difference", "T_f", "T_L", "N_g_E", "canonical_gap",
        ]
        .map(String::from),
    );
    for c in &out.curves {
        for r in &c.rows {
            s.push_str(&csv_line(
                std::iter::once(c.curve.clone()).chain(
                    [
                        r.r, r.m_f_a, r.m_g_e, r.functoriality_gap, r.m_f_multiplier,
                        r.m_g_chain_divisor, r.chain_difference, r.t_f, r.t_projection, r.n_g_e,
                        r.canonical_gap,
                    ]
                    .map(|x| x.to_string()),
                ),
            ));
        }
    }
    s
}

fn grid_and_quadrature(grid: &str, nodes: usize) -> Result<(RadiusGrid, Quadrature), CliError> {
    Ok((RadiusGrid::parse(grid)?, Quadrature::with_nodes(nodes)?))
}

pub fn run(cmd: &Command) -> Result<Rendered, CliError> {
    match cmd {
        Command::Mi { ideal, c, .. } => multiplier_command(ideal, c, false),
        Command::MiMinus { ideal, c, .. } => multiplier_command(ideal, c, true),
        Command::Lct { ideal, .. } => lct_command(ideal),
        Command::Jump { ideal, cmax, .. } => jump_command(ideal, cmax),
        Command::CheckExample13 { max_mult, max_dim, .. } => identity_command(*max_mult, *max_dim),
        Command::Weil { ideal, points, places, .. } => {
            let a = input::sheaf(ideal)?;
            let s = PlaceSet::parse(&places.places)?;
            weil_command(&a, &input::require_points(points)?, &s)
        }
        Command::Prox { ideal, points, places, .. } => {
            scalar_command("prox", &input::sheaf(ideal)?, &input::require_points(points)?, &PlaceSet::parse(&places.places)?)
        }
        Command::Count { ideal, points, places, .. } => {
            scalar_command("count", &input::sheaf(ideal)?, &input::require_points(points)?, &PlaceSet::parse(&places.places)?)
        }
        Command::Count1 { ideal, points, places, .. } => {
            scalar_command("count1", &input::sheaf(ideal)?, &input::require_points(points)?, &PlaceSet::parse(&places.places)?)
        }
        Command::Height { ideal, points, deg, .. } => {
            height_command(&input::sheaf(ideal)?, &input::require_points(points)?, *deg)
        }
        Command::Curve { ideal, curve, .. } => {
            let (grid, q) = grid_and_quadrature(&curve.grid, curve.nodes)?;
            curve_command(&input::sheaf(ideal)?, &input::curve(&curve.curve)?, &grid, &q)
        }
        Command::Margins32 { ideal, points, places, eps, slack, .. }
        | Command::Margins42 { ideal, points, places, eps, slack, .. } => {
            let a = input::sheaf(ideal)?;
            let eps = input::rational("eps", eps)?;
            let s = PlaceSet::parse(&places.places)?;
            let pts = input::require_points(points)?;
            let (name, report) = if matches!(cmd, Command::Margins32 { .. }) {
                ("margins32", margin_arithmetic(&a, &eps, &s, &pts, *slack)?)
            } else {
                ("margins42", margin_truncated_arithmetic(&a, &eps, &s, &pts, *slack)?)
            };
            let out = MarginOut::new(name, &report);
            let csv = out.csv();
            render(&out, csv)
        }
        Command::Margins31 { ideal, curve, eps, slack, .. }
        | Command::Margins41 { ideal, curve, eps, slack, .. } => {
            let a = input::sheaf(ideal)?;
            let eps = input::rational("eps", eps)?;
            let f = input::curve(&curve.curve)?;
            let (grid, q) = grid_and_quadrature(&curve.grid, curve.nodes)?;
            let (name, report) = if matches!(cmd, Command::Margins31 { .. }) {
                ("margins31", margin_nevanlinna(&a, &eps, &f, &grid, &q, *slack)?)
            } else {
                ("margins41", margin_truncated_nevanlinna(&a, &eps, &f, &grid, &q, *slack)?)
            };
            let out = MarginOut::new(name, &report);
            let csv = out.csv();
            render(&out, csv)
        }
        Command::CheckReduction { divisor, n, points, samples, bound, seed, places, curve, grid, nodes, .. } => {
            let d = CoordinateDivisor::new(*n, input::indices(divisor)?)?;
            let s = PlaceSet::parse(&places.places)?;
            let mut pts = input::points(points)?;
            pts.extend(sample_points(*n, *bound, *samples, *seed)?);
            let (grid, q) = grid_and_quadrature(grid, *nodes)?;
            let f = curve.as_deref().map(input::curve).transpose()?;
            let rep = reduction_check(&d, &s, &pts, f.as_ref().map(|f| (f, &grid)), &q)?;
            let out = ReductionOut {
                command: "check-reduction".into(),
                divisor: rep.divisor,
                n: *n,
                places: s.to_string(),
                points_checked: rep.points_checked,
                points_on_divisor: rep.points_on_divisor,
                left_limit_failures: rep.left_limit_failures,
                proximity_failures: rep.proximity_failures,
                radii_checked: rep.radii_checked,
                max_left_limit_curve: float(rep.max_left_limit_curve),
                max_divisor_deviation_curve: float(rep.max_divisor_deviation_curve),
                tolerance: rep.tolerance,
                passed: rep.passed,
            };
            let csv = csv_line(["points_checked", "left_limit_failures", "proximity_failures", "radii_checked", "max_left_limit_curve", "max_divisor_deviation_curve", "passed"].map(String::from))
                + &csv_line([
                    out.points_checked.to_string(),
                    out.left_limit_failures.to_string(),
                    out.proximity_failures.to_string(),
                    out.radii_checked.to_string(),
                    out.max_left_limit_curve.to_string(),
                    out.max_divisor_deviation_curve.to_string(),
                    out.passed.to_string(),
                ]);
            render(&out, csv)
        }
        Command::CheckBlowup { m, eta, curve, grid, nodes, points, samples, bound, seed, places, .. } => {
            let eta = eta.as_deref().map(|e| input::rational("eta", e)).transpose()?;
            let curves = if curve.is_empty() {
                pinned_curves()
            } else {
                curve.iter().map(|p| input::curve(p)).collect::<Result<_, _>>()?
            };
            let (grid, q) = grid_and_quadrature(grid, *nodes)?;
            let s = PlaceSet::parse(&places.places)?;
            let mut pts = input::points(points)?;
            pts.extend(sample_points_where(2, *bound, *samples, *seed, |p| {
                p.coords()[0] != 0 && p.coords()[1..] != [0, 0]
            })?);
            let rep = blowup_chain_check(*m, eta, &curves, &grid, &q, &pts, &s)?;
            let coef = rep.chain_divisor_coefficient;
            let out = BlowupOut {
                command: "check-blowup".into(),
                m: rep.m,
                eta: format_rational(&rep.eta),
                constant: rep.constant,
                relative_canonical: "1*E".into(),
                pullback: format!("{}*E", rep.m),
                chain_divisor: format!("{coef}*E"),
                multiplier_ideal: IdealFile::from_ideal(rep.multiplier_ideal.ideal()),
                places: rep.places.to_string(),
                curves: rep
                    .curves
                    .iter()
                    .map(|c| BlowupCurveOut {
                        curve: c.curve.clone(),
                        functoriality_ok: c.functoriality_ok,
                        chain_ok: c.chain_ok,
                        canonical_ok: c.canonical_ok,
                        max_functoriality_gap: float(c.rows.iter().map(|r| r.functoriality_gap.abs()).fold(0.0, f64::max)),
                        min_chain_difference: float(c.rows.iter().map(|r| r.chain_difference).fold(f64::INFINITY, f64::min)),
                        max_canonical_gap: float(c.rows.iter().map(|r| r.canonical_gap.abs()).fold(0.0, f64::max)),
                        rows: c
                            .rows
                            .iter()
                            .map(|r| BlowupRowOut {
                                r: r.r,
                                m_f_a: float(r.m_f_a),
                                m_g_e: float(r.m_g_e),
                                functoriality_gap: float(r.functoriality_gap),
                                m_f_multiplier: float(r.m_f_multiplier),
                                m_g_chain_divisor: float(r.m_g_chain_divisor),
                                chain_difference: float(r.chain_difference),
                                t_f: float(r.t_f),
                                t_projection: float(r.t_projection),
                                n_g_e: float(r.n_g_e),
                                canonical_gap: float(r.canonical_gap),
                            })
                            .collect(),
                    })
                    .collect(),
                points: rep
                    .points
                    .iter()
                    .map(|p| BlowupPointOut {
                        point: p.point.to_string(),
                        m_a: QuantityOut::exact(&p.m_a),
                        m_e: QuantityOut::exact(&p.m_e),
                        functoriality_gap: QuantityOut::exact(&p.functoriality_gap),
                        functoriality_gap_finite: QuantityOut::exact(&p.functoriality_gap_finite),
                        m_multiplier: QuantityOut::exact(&p.m_multiplier),
                        m_chain_divisor: QuantityOut::exact(&p.m_chain_divisor),
                        chain_difference: QuantityOut::exact(&p.chain_difference),
                        canonical_gap: QuantityOut::exact(&p.canonical_gap),
                    })
                    .collect(),
                arithmetic_sup_gap: float(rep.arithmetic_sup_gap),
                arithmetic_exact_ok: rep.arithmetic_exact_ok,
                arithmetic_chain_ok: rep.arithmetic_chain_ok,
                passed: rep.passed,
            };
            let csv = blowup_csv(&out);
            render(&out, csv)
        }
    }
}

pub fn error_json(e: &idealprox::Error) -> String {
    let mut s = serde_json::to_string(&crate::output::ErrorReport { error: ErrorOut::new(e) })
        .expect("serializable");
    s.push('\n');
    s
}
