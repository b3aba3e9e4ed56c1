use std::fs;
use std::path::Path;

use idealprox::nevanlinna::{GaussianRational, Polynomial};
use idealprox::polyhedra::homogenize;
use idealprox::rational::parse_rational;
use idealprox::{
    Error, HomogeneousMonomialIdeal, MonomialIdeal, PolynomialCurve, RationalPoint,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::args::{IdealInput, PointInput};
use crate::CliError;

/// On-disk ideal schema; also used for ideals in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub dim: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn from_ideal(a: &MonomialIdeal) -> Self {
        Self {
            dim: a.dim(),
            generators: a.generators().iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, CliError> {
        if let Some(g) = self.generators.iter().find(|g| g.len() != self.dim) {
            return Err(CliError::Parse(format!(
                "generator {g:?} has {} entries, expected dim = {}",
                g.len(),
                self.dim
            )));
        }
        if self.dim == 0 {
            return Err(CliError::Parse("dim must be at least 1".into()));
        }
        Ok(MonomialIdeal::from_vecs(self.generators.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Real(String),
    Complex([String; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub components: Vec<Vec<Coefficient>>,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn affine_ideal(input: &IdealInput) -> Result<MonomialIdeal, CliError> {
    parse_json::<IdealFile>(&input.ideal)?.to_ideal()
}

/// The ideal sheaf on `P^n`: read as homogeneous with `--projective`,
/// otherwise homogenized with `x_0`.
pub fn sheaf(input: &IdealInput) -> Result<HomogeneousMonomialIdeal, CliError> {
    let a = affine_ideal(input)?;
    if input.projective {
        Ok(HomogeneousMonomialIdeal::new(a)?)
    } else {
        Ok(homogenize(&a))
    }
}

fn coefficient(c: &Coefficient) -> Result<GaussianRational, CliError> {
    let parse = |s: &str| parse_rational(s).map_err(CliError::from);
    Ok(match c {
        Coefficient::Real(re) => GaussianRational::new(parse(re)?, idealprox::Rational::zero()),
        Coefficient::Complex([re, im]) => GaussianRational::new(parse(re)?, parse(im)?),
    })
}

pub fn curve(path: &Path) -> Result<PolynomialCurve, CliError> {
    let file: CurveFile = parse_json(path)?;
    let components = file
        .components
        .iter()
        .map(|cs| Ok(Polynomial::new(cs.iter().map(coefficient).collect::<Result<_, CliError>>()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(PolynomialCurve::new(components)?)
}

pub fn points(input: &PointInput) -> Result<Vec<RationalPoint>, CliError> {
    let mut out = Vec::new();
    for s in &input.point {
        out.push(RationalPoint::parse(s)?);
    }
    if let Some(path) = &input.points {
        for line in read(path)?.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                out.push(RationalPoint::parse(line)?);
            }
        }
    }
    Ok(out)
}

pub fn require_points(input: &PointInput) -> Result<Vec<RationalPoint>, CliError> {
    let pts = points(input)?;
    if pts.is_empty() {
        return Err(CliError::Parse("no points given: use --point or --points".into()));
    }
    Ok(pts)
}

pub fn rational(flag: &str, s: &str) -> Result<idealprox::Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Parse(format!("--{flag}: {e}")))
}

pub fn indices(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Parse(format!("bad coordinate index `{t}`"))))
        .collect()
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Domain(e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_skip_blanks_and_reject_junk() {
        assert_eq!(indices("").unwrap(), Vec::<usize>::new());
        assert_eq!(indices("0, 2,").unwrap(), vec![0, 2]);
        assert!(matches!(indices("1,a"), Err(CliError::Parse(_))));
    }

    #[test]
    fn coefficients_accept_real_and_gaussian_forms() {
        let file: CurveFile = serde_json::from_str(r#"{"components": [["1/2", ["0", "-3"]]]}"#).unwrap();
        let c: Vec<_> = file.components[0].iter().map(|c| coefficient(c).unwrap()).collect();
        assert_eq!(c[0], GaussianRational::new(idealprox::rational::rat(1, 2), idealprox::Rational::zero()));
        assert_eq!(c[1], GaussianRational::new(idealprox::Rational::zero(), idealprox::rational::int(-3)));
        assert!(coefficient(&Coefficient::Real("1/0".into())).is_err());
    }

    #[test]
    fn ragged_generators_are_a_parse_error() {
        let f = IdealFile { dim: 2, generators: vec![vec![1, 0], vec![1]] };
        assert!(matches!(f.to_ideal(), Err(CliError::Parse(_))));
    }
}
