use idealprox::arithmetic::PlaceValue;
use idealprox::conjecture::{MarginReport, Quantity};
use idealprox::rational::{format_rational, round_sig12};
use idealprox::{Error, LogSum, Place};
use serde::{Deserialize, Serialize};

use crate::input::IdealFile;

pub fn float(x: f64) -> f64 {
    round_sig12(x)
}

/// `Σ coef·log p`, the exact form of a logarithmic quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogTerm {
    pub p: u64,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantityOut {
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<LogTerm>>,
}

impl QuantityOut {
    pub fn exact(s: &LogSum) -> Self {
        Self {
            value: float(s.to_f64()),
            exact: Some(
                s.terms()
                    .map(|(p, c)| LogTerm { p, coef: format_rational(c) })
                    .collect(),
            ),
        }
    }

    pub fn approx(x: f64) -> Self {
        Self { value: float(x), exact: None }
    }

    pub fn from_quantity(q: &Quantity) -> Self {
        match q {
            Quantity::Exact(s) => Self::exact(s),
            Quantity::Approx(x) => Self::approx(*x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub kind: String,
    pub message: String,
}

impl ErrorOut {
    pub fn new(e: &Error) -> Self {
        Self { kind: e.kind().to_string(), message: e.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorOut,
}

/// A local Weil value: `{"p": 3, "mult": 1}` at finite places.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaceValueOut {
    pub place: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<i64>,
    pub value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<LogTerm>>,
}

impl PlaceValueOut {
    pub fn new(v: &PlaceValue) -> Self {
        match v.place {
            Place::Finite(p) => Self {
                place: v.place.to_string(),
                p: Some(p),
                mult: v.multiplicity(),
                value: float(v.to_f64()),
                exact: None,
            },
            Place::Infinite => Self {
                place: v.place.to_string(),
                p: None,
                mult: None,
                value: float(v.to_f64()),
                exact: QuantityOut::exact(&v.value).exact,
            },
        }
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line<I: IntoIterator<Item = String>>(fields: I) -> String {
    let mut line = fields.into_iter().map(|f| csv_field(&f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnOut {
    pub name: String,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginRowOut {
    pub label: String,
    pub values: Vec<QuantityOut>,
    pub margin: Option<QuantityOut>,
    pub flagged: bool,
    pub error: Option<ErrorOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginOut {
    pub command: String,
    pub setting: String,
    pub inequality: String,
    pub n: usize,
    pub ideal: IdealFile,
    pub left_limit: IdealFile,
    pub epsilon: String,
    pub slack: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub places: Option<String>,
    pub columns: Vec<ColumnOut>,
    pub rows: Vec<MarginRowOut>,
    pub flagged: usize,
    pub self_consistent: bool,
    pub notes: Vec<String>,
}

impl MarginOut {
    pub fn new(command: &str, r: &MarginReport) -> Self {
        Self {
            command: command.to_string(),
            setting: r.setting.to_string(),
            inequality: r.inequality.to_string(),
            n: r.n,
            ideal: IdealFile::from_ideal(r.ideal.ideal()),
            left_limit: IdealFile::from_ideal(r.left_limit.ideal()),
            epsilon: format_rational(&r.epsilon),
            slack: r.slack,
            places: r.places.as_ref().map(|s| s.to_string()),
            columns: r
                .columns
                .iter()
                .map(|c| ColumnOut { name: c.name.to_string(), sign: c.sign })
                .collect(),
            rows: r
                .rows
                .iter()
                .map(|row| MarginRowOut {
                    label: row.label.clone(),
                    values: row.values.iter().map(QuantityOut::from_quantity).collect(),
                    margin: row.margin.as_ref().map(QuantityOut::from_quantity),
                    flagged: row.flagged,
                    error: row.error.as_ref().map(ErrorOut::new),
                })
                .collect(),
            flagged: r.flagged_count(),
            self_consistent: r.is_self_consistent(),
            notes: r.notes.clone(),
        }
    }

    pub fn csv(&self) -> String {
        let mut s = csv_line(
            std::iter::once("label".to_string())
                .chain(self.columns.iter().map(|c| c.name.clone()))
                .chain(["margin", "flagged", "error"].map(String::from)),
        );
        for row in &self.rows {
            let mut fields = vec![row.label.clone()];
            if row.values.is_empty() {
                fields.extend(self.columns.iter().map(|_| String::new()));
            } else {
                fields.extend(row.values.iter().map(|v| v.value.to_string()));
            }
            fields.push(row.margin.as_ref().map(|m| m.value.to_string()).unwrap_or_default());
            fields.push(row.flagged.to_string());
            fields.push(row.error.as_ref().map(|e| e.kind.clone()).unwrap_or_default());
            s.push_str(&csv_line(fields));
        }
        s
    }
}
