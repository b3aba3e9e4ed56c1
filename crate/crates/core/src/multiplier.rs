//! Multiplier ideals `I(a^c)`, left limits `I^-(a^c)`, jumping numbers and
//! log canonical thresholds of monomial ideals.
//!
//! For a monomial ideal `a`, `x^v ∈ I(a^c)` iff `v + 1` lies in the interior
//! of `c·Newt(a)`; the left limit uses closed membership instead. Both are
//! cross-checked against the definitions: the left limit against the
//! sequence `I(a^{c-1/k})`, the threshold against a bisection on the LP
//! membership route.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyhedra::{
    drop_coordinate, ExponentVector, HomogeneousMonomialIdeal, Membership, MonomialIdeal,
    NewtonPolyhedron, RationalVector,
};
use crate::rational::{ceil_to_i64, format_rational, simplest_between, Rational};

/// A log canonical threshold; the unit ideal has none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rational),
    Infinite,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(r) => f.write_str(&format_rational(r)),
            Threshold::Infinite => f.write_str("infinity"),
        }
    }
}

/// Effective divisor `Σ d_i {x_i = 0}` on affine space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SncMonomialDivisor(ExponentVector);

impl SncMonomialDivisor {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        Ok(Self(ExponentVector::new(multiplicities)?))
    }

    pub fn multiplicities(&self) -> &ExponentVector {
        &self.0
    }

    /// `D_red`: every positive multiplicity replaced by 1.
    pub fn reduced(&self) -> SncMonomialDivisor {
        Self(self.0.iter().map(|&d| d.min(1)).collect::<Vec<_>>().into())
    }

    /// `O(-D)` as the principal ideal `(x^D)`.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::principal(self.0.clone())
    }
}

/// Thresholds in `(0, cmax]` and the multiplier ideal on each interval.
///
/// `ideals[0]` is the unit ideal (`c` below the first threshold);
/// `ideals[i]` is `I(a^c)` for `c ∈ [thresholds[i-1], thresholds[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingSpectrum {
    pub thresholds: Vec<Rational>,
    pub ideals: Vec<MonomialIdeal>,
}

/// Result of evaluating `I(a^{c-1/k})` along `k = k0, k0+1, …, last_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub ideal: MonomialIdeal,
    /// first `k` after which the sequence is constant
    pub stable_from: u64,
    pub last_k: u64,
    /// `k` beyond which no candidate jump lies in `(c - 1/k, c)`
    pub guaranteed_from: u64,
}

fn check_coefficient(c: &Rational) -> Result<()> {
    if c.is_negative() {
        return Err(Error::NegativeCoefficient);
    }
    Ok(())
}

/// Componentwise bound `⌈c·max entry⌉ + n` on minimal generators of
/// `I(a^c)` and `I^-(a^c)`; zero when `c = 0`.
pub fn generator_bound(a: &MonomialIdeal, c: &Rational) -> Result<ExponentVector> {
    check_coefficient(c)?;
    let n = a.dim();
    if c.is_zero() {
        return Ok(ExponentVector::zeros(n));
    }
    let top = c * Rational::from_integer(BigInt::from(a.max_entry()));
    let b = ceil_to_i64(&top)? + n as i64;
    let b = u32::try_from(b).map_err(|_| Error::InvalidParameter("coefficient too large".into()))?;
    Ok(ExponentVector::from(vec![b; n]))
}

/// Minimal generators of `{x^v : v + 1 ∈ c·P}` (closed or interior) inside the box.
fn ideal_from_membership(
    poly: &NewtonPolyhedron,
    c: &Rational,
    bound: &ExponentVector,
    mode: Membership,
) -> Result<MonomialIdeal> {
    let n = poly.dim();
    let test = poly.lattice_membership(c, mode);
    let limit: Vec<i64> = bound.iter().map(|&b| i64::from(b) + 1).collect();
    // w = v + 1, walked as an odometer over the box
    let mut w = vec![1i64; n];
    let mut gens = Vec::new();
    'outer: loop {
        if test.test(&w) {
            let mut minimal = true;
            for i in 0..n {
                if w[i] > 1 {
                    w[i] -= 1;
                    let below = test.test(&w);
                    w[i] += 1;
                    if below {
                        minimal = false;
                        break;
                    }
                }
            }
            if minimal {
                gens.push(ExponentVector::from(
                    w.iter().map(|&x| (x - 1) as u32).collect::<Vec<_>>(),
                ));
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            if w[i] < limit[i] {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
    if gens.is_empty() {
        return Err(Error::Internal(
            "generator search box contains no member".into(),
        ));
    }
    MonomialIdeal::minimalize(gens)
}

fn multiplier_with(poly: &NewtonPolyhedron, a: &MonomialIdeal, c: &Rational, mode: Membership) -> Result<MonomialIdeal> {
    check_coefficient(c)?;
    if c.is_zero() || a.is_unit() {
        return Ok(MonomialIdeal::unit(a.dim()));
    }
    ideal_from_membership(poly, c, &generator_bound(a, c)?, mode)
}

/// `I(a^c)`: monomials `x^v` with `v + 1` in the interior of `c·Newt(a)`.
pub fn multiplier_ideal(a: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::new(a)?;
    multiplier_with(&poly, a, c, Membership::Interior)
}

/// `I^-(a^c) = lim_{ε→0+} I(a^{c-ε})`, via closed membership of `v + 1` in `c·Newt(a)`.
pub fn multiplier_ideal_minus(a: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    let poly = NewtonPolyhedron::new(a)?;
    multiplier_with(&poly, a, c, Membership::Closed)
}

/// `I^-(a^c)` from the limit itself: evaluates `I(a^{c-1/k})` for growing
/// `k` until past every candidate jump below `c`, and reports where the
/// sequence became constant.
pub fn left_limit_by_sequence(a: &MonomialIdeal, c: &Rational) -> Result<Stabilization> {
    check_coefficient(c)?;
    let poly = NewtonPolyhedron::new(a)?;
    if c.is_zero() {
        return Ok(Stabilization {
            ideal: MonomialIdeal::unit(a.dim()),
            stable_from: 2,
            last_k: 2,
            guaranteed_from: 2,
        });
    }
    let candidates = candidates_with(&poly, a, c)?;
    let previous = candidates
        .iter()
        .filter(|x| *x < c)
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let gap = c - &previous;
    let guaranteed_from = (gap.recip().floor().to_integer() + 1u32)
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("gap too small".into()))?
        .max(2);
    let max_den = candidates
        .iter()
        .map(|x| x.denom().to_u64().unwrap_or(u64::MAX))
        .max()
        .unwrap_or(1);
    let last_k = guaranteed_from.max(max_den.saturating_add(1)) + 2;
    // c - 1/k must stay positive
    let first_k = (c.recip().floor().to_integer() + 1u32)
        .to_u64()
        .unwrap_or(u64::MAX)
        .max(2);
    let mut seq = Vec::new();
    for k in first_k..=last_k.max(first_k) {
        let ck = c - Rational::new(BigInt::one(), BigInt::from(k));
        seq.push((k, multiplier_with(&poly, a, &ck, Membership::Interior)?));
    }
    let last = seq.last().expect("nonempty").1.clone();
    let stable_from = seq
        .iter()
        .rev()
        .take_while(|(_, ideal)| *ideal == last)
        .last()
        .map(|(k, _)| *k)
        .expect("nonempty");
    Ok(Stabilization {
        ideal: last,
        stable_from,
        last_k: seq.last().expect("nonempty").0,
        guaranteed_from,
    })
}

/// Log canonical threshold: the least `⟨normal, 1⟩ / offset` over facets with positive offset.
pub fn lct(a: &MonomialIdeal) -> Result<Threshold> {
    let poly = NewtonPolyhedron::new(a)?;
    Ok(poly
        .nontrivial_facets()
        .map(|f| {
            Rational::new(
                BigInt::from(f.normal.iter().sum::<i64>()),
                BigInt::from(f.offset),
            )
        })
        .min()
        .map_or(Threshold::Infinite, Threshold::Finite))
}

/// Log canonical threshold by bisection on `1 ∈ interior(c·Newt(a))`,
/// using the LP membership route, then snapped to the unique rational of
/// denominator at most `max_den` in the final bracket and verified exactly.
pub fn lct_by_bisection(a: &MonomialIdeal, max_den: u64) -> Result<Threshold> {
    let poly = NewtonPolyhedron::new(a)?;
    if a.is_unit() {
        return Ok(Threshold::Infinite);
    }
    let ones = RationalVector::from_integers(&vec![1; a.dim()]);
    let strict = |c: &Rational| poly.contains_via_lp(&ones, c, Membership::Interior);
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    while strict(&hi)? {
        lo = hi.clone();
        hi = &hi * Rational::from_integer(2.into());
    }
    let d = Rational::from_integer(BigInt::from(max_den));
    let width = (Rational::from_integer(2.into()) * &d * &d).recip();
    while &hi - &lo >= width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if strict(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let candidate = simplest_between(&lo, &hi);
    let on_boundary = poly.contains_via_lp(&ones, &candidate, Membership::Closed)?
        && !strict(&candidate)?;
    if !on_boundary {
        return Err(Error::InvalidParameter(format!(
            "threshold denominator exceeds {max_den}"
        )));
    }
    Ok(Threshold::Finite(candidate))
}

fn candidates_with(poly: &NewtonPolyhedron, a: &MonomialIdeal, cmax: &Rational) -> Result<Vec<Rational>> {
    let bound = generator_bound(a, cmax)?;
    let mut out = BTreeSet::new();
    for f in poly.nontrivial_facets() {
        let base: i64 = f.normal.iter().sum();
        // ⟨normal, v + 1⟩ over the box is base + every achievable ⟨normal, v⟩;
        // collect the achievable sums by a small subset-sum sweep
        let top = (cmax * Rational::from_integer(f.offset.into())).floor().to_integer();
        let top = top.to_i64().unwrap_or(i64::MAX) - base;
        if top < 0 {
            continue;
        }
        let mut reachable = vec![false; top as usize + 1];
        reachable[0] = true;
        for (i, &a_i) in f.normal.iter().enumerate() {
            if a_i == 0 {
                continue;
            }
            let mut next = reachable.clone();
            for (s, _) in reachable.iter().enumerate().filter(|(_, r)| **r) {
                for t in 1..=i64::from(bound[i]) {
                    let v = s as i64 + t * a_i;
                    if v > top {
                        break;
                    }
                    next[v as usize] = true;
                }
            }
            reachable = next;
        }
        for (s, _) in reachable.iter().enumerate().filter(|(_, r)| **r) {
            let x = Rational::new(BigInt::from(base + s as i64), BigInt::from(f.offset));
            if x.is_positive() && &x <= cmax {
                out.insert(x);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Candidate jumping numbers `⟨normal, v + 1⟩ / offset` in `(0, cmax]`.
pub fn candidate_jumps(a: &MonomialIdeal, cmax: &Rational) -> Result<Vec<Rational>> {
    if !cmax.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    let poly = NewtonPolyhedron::new(a)?;
    candidates_with(&poly, a, cmax)
}

/// Jumping numbers in `(0, cmax]`, each verified by `I^-(a^ξ) ⊋ I(a^ξ)`.
pub fn jumping_numbers(a: &MonomialIdeal, cmax: &Rational) -> Result<JumpingSpectrum> {
    if !cmax.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    let poly = NewtonPolyhedron::new(a)?;
    let mut thresholds = Vec::new();
    let mut ideals = vec![MonomialIdeal::unit(a.dim())];
    for xi in candidates_with(&poly, a, cmax)? {
        let at = multiplier_with(&poly, a, &xi, Membership::Interior)?;
        let left = multiplier_with(&poly, a, &xi, Membership::Closed)?;
        if left != at {
            debug_assert!(left.contains_ideal(&at));
            thresholds.push(xi);
            ideals.push(at);
        }
    }
    Ok(JumpingSpectrum { thresholds, ideals })
}

/// `I^-(O(-D)) = O(-(D - D_red))` for the principal ideal of `D`.
pub fn snc_identity_holds(d: &SncMonomialDivisor) -> Result<bool> {
    let lhs = multiplier_ideal_minus(&d.ideal(), &Rational::one())?;
    let rhs = MonomialIdeal::principal(d.multiplicities().saturating_sub(d.reduced().multiplicities()));
    Ok(lhs == rhs)
}

/// `I(a^c)` as an ideal sheaf on `P^n`, computed on each standard chart and glued.
pub fn multiplier_sheaf(a: &HomogeneousMonomialIdeal, c: &Rational) -> Result<HomogeneousMonomialIdeal> {
    let charts = (0..=a.n())
        .map(|i| multiplier_ideal(&a.dehomogenize(i), c))
        .collect::<Result<Vec<_>>>()?;
    glue_charts(a.n(), &charts)
}

/// `I^-(a^c)` as an ideal sheaf on `P^n`, computed on each standard chart and glued.
pub fn left_limit_sheaf(a: &HomogeneousMonomialIdeal, c: &Rational) -> Result<HomogeneousMonomialIdeal> {
    let charts = (0..=a.n())
        .map(|i| multiplier_ideal_minus(&a.dehomogenize(i), c))
        .collect::<Result<Vec<_>>>()?;
    glue_charts(a.n(), &charts)
}

/// Smallest degree `D` whose monomials lying in every chart ideal
/// restrict back to exactly those chart ideals.
fn glue_charts(n: usize, charts: &[MonomialIdeal]) -> Result<HomogeneousMonomialIdeal> {
    if charts.iter().all(MonomialIdeal::is_unit) {
        return Ok(HomogeneousMonomialIdeal::unit(n));
    }
    let d0 = charts.iter().map(MonomialIdeal::max_degree).max().unwrap_or(0);
    let dmax = d0 * (n as u64 + 1) + 8;
    for d in d0..=dmax {
        let gens: Vec<ExponentVector> = monomials_of_degree(n + 1, d as u32)
            .into_iter()
            .filter(|w| (0..=n).all(|i| charts[i].contains_monomial(&drop_coordinate(w, i))))
            .collect();
        if gens.is_empty() {
            continue;
        }
        let h = HomogeneousMonomialIdeal::new(MonomialIdeal::minimalize(gens)?)?;
        if (0..=n).all(|i| h.dehomogenize(i) == charts[i]) {
            return Ok(h);
        }
    }
    Err(Error::Internal(format!(
        "chart ideals do not glue in degree <= {dmax}"
    )))
}

fn monomials_of_degree(vars: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(vars: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if cur.len() + 1 == vars {
            cur.push(d);
            out.push(ExponentVector::from(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e);
            rec(vars, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::with_capacity(vars), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn maximal() -> MonomialIdeal {
        ideal(&[&[1, 0], &[0, 1]])
    }

    /// Direct lattice enumeration of `{v : v+1 strictly inside c·Newt(a)}`,
    /// by testing each lattice point against the convex-combination LP.
    fn oracle(a: &MonomialIdeal, c: &Rational, bound: u32, mode: Membership) -> MonomialIdeal {
        let p = NewtonPolyhedron::new(a).unwrap();
        let n = a.dim();
        let gens: Vec<ExponentVector> = crate::polyhedra::lattice_points_box(&vec![bound; n].into())
            .filter(|v| {
                let w: Vec<i64> = v.iter().map(|&x| i64::from(x) + 1).collect();
                p.contains_via_lp(&RationalVector::from_integers(&w), c, mode).unwrap()
            })
            .collect();
        MonomialIdeal::minimalize(gens).unwrap()
    }

    #[test]
    fn multiplier_examples() {
        assert!(multiplier_ideal(&maximal(), &int(1)).unwrap().is_unit());
        let m2 = maximal().power(2);
        assert_eq!(multiplier_ideal(&m2, &int(1)).unwrap(), maximal());
        assert_eq!(oracle(&m2, &int(1), 4, Membership::Interior), maximal());
        assert!(multiplier_ideal(&ideal(&[&[7, 3]]), &int(0)).unwrap().is_unit());
    }

    #[test]
    fn left_limit_examples() {
        let m2 = maximal().power(2);
        assert!(multiplier_ideal_minus(&m2, &int(1)).unwrap().is_unit());
        assert_eq!(
            multiplier_ideal_minus(&ideal(&[&[3, 1]]), &int(1)).unwrap(),
            ideal(&[&[2, 0]])
        );
        assert!(multiplier_ideal_minus(&maximal(), &int(1)).unwrap().is_unit());
        assert!(multiplier_ideal_minus(&m2, &int(0)).unwrap().is_unit());
    }

    #[test]
    fn negative_coefficient_rejected() {
        assert_eq!(
            multiplier_ideal(&maximal(), &int(-1)),
            Err(Error::NegativeCoefficient)
        );
    }

    #[test]
    fn lct_examples() {
        assert_eq!(lct(&maximal()).unwrap(), Threshold::Finite(int(2)));
        assert_eq!(lct(&ideal(&[&[2, 0], &[0, 3]])).unwrap(), Threshold::Finite(rat(5, 6)));
        assert_eq!(lct(&MonomialIdeal::unit(2)).unwrap(), Threshold::Infinite);
        assert_eq!(lct_by_bisection(&ideal(&[&[2, 0], &[0, 3]]), 100).unwrap(), Threshold::Finite(rat(5, 6)));
        assert_eq!(lct_by_bisection(&maximal(), 100).unwrap(), Threshold::Finite(int(2)));
        assert_eq!(lct_by_bisection(&MonomialIdeal::unit(3), 100).unwrap(), Threshold::Infinite);
    }

    #[test]
    fn jumping_examples() {
        let s = jumping_numbers(&maximal(), &int(2)).unwrap();
        assert_eq!(s.thresholds, vec![int(2)]);
        assert_eq!(s.ideals, vec![MonomialIdeal::unit(2), maximal()]);
        // jumps of (x,y)^2 sit at (|v|+2)/2, so only c = 1 lies in (0, 1]
        let s = jumping_numbers(&maximal().power(2), &int(1)).unwrap();
        assert_eq!(s.thresholds, vec![int(1)]);
        let s = jumping_numbers(&MonomialIdeal::unit(2), &int(5)).unwrap();
        assert!(s.thresholds.is_empty());
        assert_eq!(s.ideals.len(), 1);
        assert_eq!(jumping_numbers(&maximal(), &int(0)), Err(Error::NonPositiveScale));
    }

    #[test]
    fn binomial_spectrum_matches_oracle() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let s = jumping_numbers(&a, &int(2)).unwrap();
        assert_eq!(s.thresholds[0], rat(5, 6));
        for (i, xi) in s.thresholds.iter().enumerate() {
            assert_eq!(s.ideals[i + 1], oracle(&a, xi, 8, Membership::Interior));
            assert_eq!(
                multiplier_ideal_minus(&a, xi).unwrap(),
                oracle(&a, xi, 8, Membership::Closed)
            );
        }
    }

    #[test]
    fn bounds() {
        let b = generator_bound(&maximal(), &int(1)).unwrap();
        assert!(b.iter().all(|&x| x >= 1));
        let b = generator_bound(&ideal(&[&[2, 0], &[0, 3]]), &rat(5, 6)).unwrap();
        assert!(b.iter().all(|&x| x >= 3));
        assert!(generator_bound(&maximal(), &int(0)).unwrap().is_zero());
    }

    #[test]
    fn enlarging_the_box_finds_nothing_new() {
        for (a, c) in [
            (maximal(), int(1)),
            (ideal(&[&[2, 0], &[0, 3]]), rat(5, 6)),
            (ideal(&[&[4, 1], &[1, 3]]), rat(7, 5)),
        ] {
            let p = NewtonPolyhedron::new(&a).unwrap();
            let b = generator_bound(&a, &c).unwrap();
            let big: ExponentVector = b.iter().map(|x| x * 2 + 3).collect::<Vec<_>>().into();
            for mode in [Membership::Interior, Membership::Closed] {
                assert_eq!(
                    ideal_from_membership(&p, &c, &b, mode).unwrap(),
                    ideal_from_membership(&p, &c, &big, mode).unwrap()
                );
            }
        }
    }

    #[test]
    fn sequence_agrees_with_closed_membership() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        for xi in candidate_jumps(&a, &int(2)).unwrap() {
            let st = left_limit_by_sequence(&a, &xi).unwrap();
            assert_eq!(st.ideal, multiplier_ideal_minus(&a, &xi).unwrap());
            assert!(st.stable_from <= st.guaranteed_from);
        }
    }

    #[test]
    fn snc_identity() {
        for d in [vec![1, 1, 1], vec![3, 1], vec![0, 5], vec![0, 0]] {
            assert!(snc_identity_holds(&SncMonomialDivisor::new(d).unwrap()).unwrap());
        }
        let d = SncMonomialDivisor::new(vec![0, 5]).unwrap();
        assert_eq!(multiplier_ideal_minus(&d.ideal(), &int(1)).unwrap(), ideal(&[&[0, 4]]));
    }

    #[test]
    fn sheaf_gluing() {
        // (x,y)^2 on P^2: every chart left limit is the unit ideal
        let a = crate::polyhedra::homogenize(&maximal().power(2));
        assert!(left_limit_sheaf(&a, &int(1)).unwrap().is_unit());
        // (x,y)^3 at c = 1: I = (x,y)^2 in the origin chart, unit elsewhere
        let a = crate::polyhedra::homogenize(&maximal().power(3));
        let i = multiplier_sheaf(&a, &int(1)).unwrap();
        assert_eq!(i.ideal(), &ideal(&[&[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]));
        // homogenizing (x^3, y) creates base locus at [0:0:1]
        let a = crate::polyhedra::homogenize(&ideal(&[&[3, 0], &[0, 1]]));
        let i = left_limit_sheaf(&a, &int(1)).unwrap();
        assert!(!i.is_unit());
        assert!(i.dehomogenize(0).is_unit());
        assert!(!i.dehomogenize(2).is_unit());
    }

    #[test]
    fn degree_monomials() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(2, 0), vec![ExponentVector::zeros(2)]);
    }
}
