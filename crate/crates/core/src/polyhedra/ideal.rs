use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x^v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::UnsupportedDimension(0));
        }
        Ok(Self(entries))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Saturating componentwise difference.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Nonzero monomial ideal, stored by its minimal generators.
///
/// Generators are kept in descending lexicographic order so equal ideals
/// compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` into an antichain. Empty input is the zero ideal.
    pub fn minimalize(gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let mut gens: Vec<ExponentVector> = gens.into_iter().collect();
        let Some(first) = gens.first() else {
            return Err(Error::ZeroIdeal);
        };
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if let Some(bad) = gens.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        // ascending total degree first: a divisor always precedes what it divides
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<ExponentVector> = Vec::new();
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(Self {
            dim,
            generators: kept,
        })
    }

    pub fn from_vecs(gens: Vec<Vec<u32>>) -> Result<Self> {
        Self::minimalize(gens.into_iter().map(ExponentVector::from))
    }

    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            generators: vec![ExponentVector::zeros(dim)],
        }
    }

    pub fn principal(v: ExponentVector) -> Self {
        Self {
            dim: v.dim(),
            generators: vec![v],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub fn contains_monomial(&self, v: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(v))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        Self::minimalize(self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other)?;
        Self::minimalize(
            self.generators
                .iter()
                .flat_map(|a| other.generators.iter().map(move |b| a.add(b))),
        )
    }

    pub fn power(&self, m: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..m {
            acc = acc.product(self).expect("same dimension");
        }
        acc
    }

    pub fn max_entry(&self) -> u32 {
        self.generators
            .iter()
            .flat_map(|g| g.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    fn check_dim(&self, other: &MonomialIdeal) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Monomial ideal sheaf on `P^n`, given by monomials in `x_0, …, x_n`.
///
/// Every monomial is homogeneous of its own total degree; Weil functions
/// weight each generator by that degree, so generators of different degrees
/// are allowed (sums of ideals stay representable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousMonomialIdeal {
    ideal: MonomialIdeal,
}

impl HomogeneousMonomialIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.dim() < 2 {
            return Err(Error::UnsupportedDimension(ideal.dim().saturating_sub(1)));
        }
        Ok(Self { ideal })
    }

    pub fn unit(n: usize) -> Self {
        Self {
            ideal: MonomialIdeal::unit(n + 1),
        }
    }

    /// Ambient projective dimension `n`.
    pub fn n(&self) -> usize {
        self.ideal.dim() - 1
    }

    /// Largest generator degree.
    pub fn degree(&self) -> u64 {
        self.ideal.max_degree()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn generators(&self) -> &[ExponentVector] {
        self.ideal.generators()
    }

    pub fn is_unit(&self) -> bool {
        self.ideal.is_unit()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Self::new(self.ideal.sum(&other.ideal)?)
    }

    /// Restriction to the chart `x_i = 1`, as an ideal in the remaining `n` variables.
    pub fn dehomogenize(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.generators().iter().map(|g| drop_coordinate(g, i)))
            .expect("nonempty")
    }
}

pub(crate) fn drop_coordinate(v: &ExponentVector, i: usize) -> ExponentVector {
    ExponentVector::from(
        v.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &e)| e)
            .collect::<Vec<_>>(),
    )
}

/// Homogenizes an ideal in `n` affine variables to `P^n` with `x_0` as the
/// new coordinate: `x^v ↦ x_0^{d-|v|} x^v`, `d` the largest generator degree.
pub fn homogenize(a: &MonomialIdeal) -> HomogeneousMonomialIdeal {
    let d = a.max_degree();
    let gens = a.generators().iter().map(|g| {
        let mut v = Vec::with_capacity(g.dim() + 1);
        v.push((d - g.degree()) as u32);
        v.extend_from_slice(g);
        ExponentVector::from(v)
    });
    HomogeneousMonomialIdeal::new(MonomialIdeal::minimalize(gens).expect("nonempty"))
        .expect("dimension at least 2")
}

/// All lattice points `0 <= v <= bound`, in lexicographic order.
pub fn lattice_points_box(bound: &ExponentVector) -> LatticeBox {
    LatticeBox {
        bound: bound.to_vec(),
        next: Some(vec![0; bound.dim()]),
    }
}

#[derive(Debug, Clone)]
pub struct LatticeBox {
    bound: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for LatticeBox {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bound[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(ExponentVector::from(current))
    }
}
