use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ideal::{ExponentVector, MonomialIdeal};
use super::lp::{self, LpOutcome};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_DIM: usize = 6;

/// Exact rational point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self(entries)
    }

    pub fn from_integers(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl From<&ExponentVector> for RationalVector {
    fn from(v: &ExponentVector) -> Self {
        Self(
            v.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Membership {
    /// `u ∈ c·P`
    Closed,
    /// `u` in the topological interior of `c·P`
    Interior,
}

/// Half-space `⟨normal, u⟩ >= offset`; normal is primitive and nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    /// Offset zero: the facet passes through the origin and never bounds `c·P` away from it.
    pub fn is_trivial(&self) -> bool {
        self.offset == 0
    }

    pub fn is_coordinate(&self) -> bool {
        self.normal.iter().filter(|&&a| a != 0).count() == 1
    }

    pub fn eval(&self, u: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(u)
            .map(|(&a, &x)| i128::from(a) * i128::from(x))
            .sum()
    }

    fn eval_rational(&self, u: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(u)
            .map(|(&a, x)| x * Rational::from_integer(a.into()))
            .fold(Rational::zero(), |acc, t| acc + t)
    }
}

/// `conv(generators) + R^n_{>=0}` with its vertices and facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    generators: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
}

impl NewtonPolyhedron {
    pub fn new(a: &MonomialIdeal) -> Result<Self> {
        let n = a.dim();
        if n == 0 || n > MAX_DIM {
            return Err(Error::UnsupportedDimension(n));
        }
        let points: Vec<Vec<i64>> = a
            .generators()
            .iter()
            .map(|g| g.iter().map(|&e| i64::from(e)).collect())
            .collect();
        let facets = enumerate_facets(n, &points);
        let vertices = a
            .generators()
            .iter()
            .zip(&points)
            .filter(|(_, p)| {
                let tight: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| f.eval(p) == i128::from(f.offset))
                    .map(|f| f.normal.clone())
                    .collect();
                rank(&tight, n) == n
            })
            .map(|(g, _)| g.clone())
            .collect();
        Ok(Self {
            dim: n,
            generators: a.generators().to_vec(),
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with positive offset.
    pub fn nontrivial_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| !f.is_trivial())
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Membership of `u` in `c·P` (closed) or its interior, decided by the facets.
    pub fn contains(&self, u: &RationalVector, c: &Rational, mode: Membership) -> Result<bool> {
        self.check_args(u, c)?;
        let ok = self.facets.iter().all(|f| {
            let lhs = f.eval_rational(u.entries());
            let rhs = c * Rational::from_integer(f.offset.into());
            match mode {
                Membership::Closed => lhs >= rhs,
                Membership::Interior => lhs > rhs,
            }
        });
        Ok(ok)
    }

    /// Same test for an integer point.
    pub fn contains_lattice(&self, w: &[i64], c: &Rational, mode: Membership) -> bool {
        self.lattice_membership(c, mode).test(w)
    }

    /// Prepares repeated integer-point tests against a fixed `c·P`.
    pub fn lattice_membership(&self, c: &Rational, mode: Membership) -> LatticeMembership<'_> {
        let small = match (c.numer().to_i128(), c.denom().to_i128()) {
            (Some(p), Some(q)) if p.unsigned_abs() < (1 << 60) && q < (1 << 60) => Some((p, q)),
            _ => None,
        };
        LatticeMembership {
            poly: self,
            c: c.clone(),
            small,
            mode,
        }
    }

    /// Independent membership route: exact LP over convex combinations of
    /// the generators plus a slack vector, maximizing a uniform shift `δ`.
    ///
    /// `u ∈ c·P` iff the program is feasible; interior iff the optimal `δ > 0`.
    pub fn contains_via_lp(&self, u: &RationalVector, c: &Rational, mode: Membership) -> Result<bool> {
        self.check_args(u, c)?;
        let n = self.dim;
        let m = self.generators.len();
        // columns: λ_1..λ_m, s_1..s_n, δ
        let cols = m + n + 1;
        let mut a = Vec::with_capacity(n + 1);
        let mut b = Vec::with_capacity(n + 1);
        for i in 0..n {
            let mut row = vec![Rational::zero(); cols];
            for (k, g) in self.generators.iter().enumerate() {
                row[k] = Rational::from_integer(BigInt::from(g[i]));
            }
            row[m + i] = Rational::one();
            row[m + n] = Rational::one();
            a.push(row);
            b.push(&u.entries()[i] / c);
        }
        let mut row = vec![Rational::zero(); cols];
        for v in row.iter_mut().take(m) {
            *v = Rational::one();
        }
        a.push(row);
        b.push(Rational::one());
        let mut obj = vec![Rational::zero(); cols];
        obj[m + n] = Rational::one();
        match lp::maximize(&a, &b, &obj) {
            LpOutcome::Infeasible => Ok(false),
            LpOutcome::Optimal { value, .. } => Ok(match mode {
                Membership::Closed => true,
                Membership::Interior => value.is_positive(),
            }),
            LpOutcome::Unbounded => Err(Error::Internal("membership LP unbounded".into())),
        }
    }

    fn check_args(&self, u: &RationalVector, c: &Rational) -> Result<()> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.dim(),
            });
        }
        if u.entries().iter().any(|x| x.is_negative()) {
            return Err(Error::NegativeEntry);
        }
        Ok(())
    }
}

/// Membership test of integer points in a fixed `c·P`.
pub struct LatticeMembership<'a> {
    poly: &'a NewtonPolyhedron,
    c: Rational,
    /// `c = p/q` in machine integers
    small: Option<(i128, i128)>,
    mode: Membership,
}

impl LatticeMembership<'_> {
    pub fn test(&self, w: &[i64]) -> bool {
        debug_assert_eq!(w.len(), self.poly.dim);
        self.poly.facets.iter().all(|f| {
            if let Some((p, q)) = self.small {
                if let (Some(l), Some(r)) = (f.eval(w).checked_mul(q), p.checked_mul(i128::from(f.offset))) {
                    return match self.mode {
                        Membership::Closed => l >= r,
                        Membership::Interior => l > r,
                    };
                }
            }
            let lhs = Rational::from_integer(BigInt::from(f.eval(w)));
            let rhs = &self.c * Rational::from_integer(f.offset.into());
            match self.mode {
                Membership::Closed => lhs >= rhs,
                Membership::Interior => lhs > rhs,
            }
        })
    }
}

/// Facets from every choice of `k` generators and `n-k` coordinate
/// directions whose span has rank `n-1`, keeping nonnegative normals
/// that are tight on the chosen generators.
fn enumerate_facets(n: usize, points: &[Vec<i64>]) -> Vec<Facet> {
    let mut found = BTreeSet::new();
    for k in 1..=n.min(points.len()) {
        for gens in combinations(points.len(), k) {
            for dirs in combinations(n, n - k) {
                let base = &points[gens[0]];
                let mut rows: Vec<Vec<i64>> = gens[1..]
                    .iter()
                    .map(|&g| points[g].iter().zip(base).map(|(a, b)| a - b).collect())
                    .collect();
                for &d in &dirs {
                    let mut e = vec![0; n];
                    e[d] = 1;
                    rows.push(e);
                }
                let Some(normal) = kernel_line(&rows, n) else {
                    continue;
                };
                let Some(normal) = orient_nonnegative(normal) else {
                    continue;
                };
                let facet_offset = points
                    .iter()
                    .map(|p| dot(&normal, p))
                    .min()
                    .expect("nonempty");
                if gens.iter().any(|&g| dot(&normal, &points[g]) != facet_offset) {
                    continue;
                }
                found.insert(Facet {
                    normal,
                    offset: facet_offset,
                });
            }
        }
    }
    found.into_iter().collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn orient_nonnegative(v: Vec<i64>) -> Option<Vec<i64>> {
    if v.iter().all(|&x| x >= 0) {
        Some(v)
    } else if v.iter().all(|&x| x <= 0) {
        Some(v.into_iter().map(|x| -x).collect())
    } else {
        None
    }
}

/// Row-reduces over the rationals; returns the pivot columns and the reduced rows.
fn rref(rows: &[Vec<i64>], n: usize) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (pivots, m)
}

fn rank(rows: &[Vec<i64>], n: usize) -> usize {
    rref(rows, n).0.len()
}

/// Primitive integer generator of the kernel when it is one-dimensional.
fn kernel_line(rows: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let (pivots, m) = rref(rows, n);
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (row, &pc) in m.iter().zip(&pivots) {
        v[pc] = -row[free].clone();
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_i64()).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn newt(gens: &[&[u32]]) -> NewtonPolyhedron {
        let a = MonomialIdeal::from_vecs(gens.iter().map(|g| g.to_vec()).collect()).unwrap();
        NewtonPolyhedron::new(&a).unwrap()
    }

    fn facet(normal: &[i64], offset: i64) -> Facet {
        Facet {
            normal: normal.to_vec(),
            offset,
        }
    }

    #[test]
    fn maximal_ideal_facets() {
        let p = newt(&[&[1, 0], &[0, 1]]);
        let fs: BTreeSet<_> = p.facets().iter().cloned().collect();
        let expected: BTreeSet<_> =
            [facet(&[1, 0], 0), facet(&[0, 1], 0), facet(&[1, 1], 1)].into();
        assert_eq!(fs, expected);
        assert_eq!(p.vertices().len(), 2);
    }

    #[test]
    fn binomial_facet() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let nontrivial: Vec<_> = p.nontrivial_facets().cloned().collect();
        assert_eq!(nontrivial, vec![facet(&[3, 2], 6)]);
    }

    #[test]
    fn unit_ideal_is_orthant() {
        let p = newt(&[&[0, 0, 0]]);
        assert!(p.facets().iter().all(|f| f.is_coordinate() && f.is_trivial()));
        assert_eq!(p.facets().len(), 3);
    }

    #[test]
    fn principal_has_shifted_coordinate_facets() {
        let p = newt(&[&[3, 1]]);
        let fs: BTreeSet<_> = p.facets().iter().cloned().collect();
        assert_eq!(fs, [facet(&[1, 0], 3), facet(&[0, 1], 1)].into());
    }

    #[test]
    fn non_vertex_generator() {
        // (1,1) lies on the segment between (2,0) and (0,2)
        let p = newt(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.nontrivial_facets().count(), 1);
        // here (1,1) lies below the segment from (3,0) to (0,3)
        let q = newt(&[&[3, 0], &[1, 1], &[0, 3]]);
        assert_eq!(q.vertices().len(), 3);
        assert_eq!(q.nontrivial_facets().count(), 2);
    }

    #[test]
    fn membership_examples() {
        let p = newt(&[&[1, 0], &[0, 1]]);
        let u = RationalVector::from_integers(&[1, 1]);
        assert!(p.contains(&u, &int(1), Membership::Interior).unwrap());
        assert!(!p.contains(&u, &int(2), Membership::Interior).unwrap());
        assert!(p.contains(&u, &int(2), Membership::Closed).unwrap());
        assert!(p.contains_via_lp(&u, &int(1), Membership::Interior).unwrap());
        assert!(!p.contains_via_lp(&u, &int(2), Membership::Interior).unwrap());
        assert!(p.contains_via_lp(&u, &int(2), Membership::Closed).unwrap());
        let g = RationalVector::from_integers(&[1, 0]);
        assert!(p.contains(&g, &int(1), Membership::Closed).unwrap());
        assert!(p.contains_lattice(&[1, 0], &int(1), Membership::Closed));
        assert!(!p.contains_lattice(&[1, 0], &int(1), Membership::Interior));
        assert!(p.contains_lattice(&[1, 1], &rat(3, 2), Membership::Interior));
    }

    #[test]
    fn membership_errors() {
        let p = newt(&[&[1, 0], &[0, 1]]);
        let u = RationalVector::from_integers(&[1, 1]);
        assert_eq!(p.contains(&u, &int(0), Membership::Closed), Err(Error::NonPositiveScale));
        let neg = RationalVector::from_integers(&[-1, 1]);
        assert_eq!(p.contains(&neg, &int(1), Membership::Closed), Err(Error::NegativeEntry));
    }

    #[test]
    fn dimension_limit() {
        let a = MonomialIdeal::unit(7);
        assert_eq!(NewtonPolyhedron::new(&a), Err(Error::UnsupportedDimension(7)));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
