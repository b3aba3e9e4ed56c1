//! Weil functions, proximity, counting and heights for monomial ideal
//! sheaves on `P^n` over `Q`.
//!
//! Local values use the generator-minimum representative: at a prime `p`,
//! `min_g ord_p(g(x))·log p`; at the real place,
//! `min_g log(max_j|x_j|^{deg g} / |g(x)|)`. Every value is the logarithm of
//! a positive rational and is kept exactly as a [`LogSum`].

mod factor;
mod logsum;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use factor::{factorize, is_prime};
pub use logsum::LogSum;

use crate::error::{Error, Result};
use crate::polyhedra::{ExponentVector, HomogeneousMonomialIdeal};
use crate::rational::{gcd_i64, Rational};

/// A place of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Finite(_))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => f.write_str("inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Place::Infinite);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("place `{s}` is neither `inf` nor a prime")))?;
        Place::finite(p)
    }
}

/// Finite set of places containing the real place.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaceSet(BTreeSet<Place>);

impl PlaceSet {
    pub fn new(places: impl IntoIterator<Item = Place>) -> Result<Self> {
        let set: BTreeSet<Place> = places.into_iter().collect();
        if !set.contains(&Place::Infinite) {
            return Err(Error::MissingArchimedean);
        }
        Ok(Self(set))
    }

    pub fn archimedean() -> Self {
        Self([Place::Infinite].into_iter().collect())
    }

    /// Comma-separated list such as `inf,3,5`.
    pub fn parse(s: &str) -> Result<Self> {
        let places = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(Place::from_str)
            .collect::<Result<Vec<_>>>()?;
        Self::new(places)
    }

    pub fn contains(&self, v: &Place) -> bool {
        self.0.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.0.iter()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().filter_map(|v| match v {
            Place::Finite(p) => Some(*p),
            Place::Infinite => None,
        })
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A point of `P^n(Q)` in primitive integer coordinates, first nonzero
/// coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<i64>,
}

impl RationalPoint {
    /// Rejects the zero vector and non-primitive coordinates; fixes the sign.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        let g = Self::content(&coords)?;
        if g != 1 {
            return Err(Error::InvalidPoint(format!(
                "coordinates {coords:?} have common factor {g}"
            )));
        }
        Ok(Self::with_sign_fixed(coords))
    }

    /// Divides out the content first.
    pub fn normalized(coords: Vec<i64>) -> Result<Self> {
        let g = Self::content(&coords)?;
        Ok(Self::with_sign_fixed(coords.into_iter().map(|x| x / g).collect()))
    }

    fn content(coords: &[i64]) -> Result<i64> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint("need at least two coordinates".into()));
        }
        if coords.contains(&i64::MIN) {
            return Err(Error::InvalidPoint("coordinate out of range".into()));
        }
        let g = coords.iter().fold(0, |g, &x| gcd_i64(g, x));
        if g == 0 {
            return Err(Error::InvalidPoint("all coordinates are zero".into()));
        }
        Ok(g)
    }

    fn with_sign_fixed(mut coords: Vec<i64>) -> Self {
        if coords.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            coords.iter_mut().for_each(|x| *x = -*x);
        }
        Self { coords }
    }

    /// Parses `1,3,6`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}` in `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn max_abs(&self) -> u64 {
        self.coords.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Primes dividing some coordinate.
    pub fn prime_support(&self) -> BTreeSet<u64> {
        self.coords
            .iter()
            .filter(|&&x| x != 0)
            .flat_map(|x| factorize(x.unsigned_abs()).into_iter().map(|(p, _)| p))
            .collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A local Weil value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceValue {
    pub place: Place,
    pub value: LogSum,
}

impl PlaceValue {
    /// Integer `k` with value `k·log p` at a finite place.
    pub fn multiplicity(&self) -> Option<i64> {
        match self.place {
            Place::Finite(p) => {
                let c = self.value.coefficient(p);
                Some(c.to_integer().try_into().unwrap_or(i64::MAX))
            }
            Place::Infinite => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

fn check_dims(a: &HomogeneousMonomialIdeal, point: &RationalPoint) -> Result<()> {
    if a.n() != point.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n() + 1,
            got: point.coords.len(),
        });
    }
    Ok(())
}

fn vanishes(g: &ExponentVector, coords: &[i64]) -> bool {
    g.iter().zip(coords).any(|(&e, &x)| e > 0 && x == 0)
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    k
}

/// `ord_p` of the monomials that do not vanish at the point, or `None` if
/// all of them vanish.
fn min_order(a: &HomogeneousMonomialIdeal, coords: &[i64], p: u64) -> Option<u64> {
    let ords: Vec<u64> = coords
        .iter()
        .map(|&x| if x == 0 { 0 } else { u64::from(valuation(x.unsigned_abs(), p)) })
        .collect();
    a.generators()
        .iter()
        .filter(|g| !vanishes(g, coords))
        .map(|g| g.iter().zip(&ords).map(|(&e, &o)| u64::from(e) * o).sum())
        .min()
}

fn archimedean(a: &HomogeneousMonomialIdeal, point: &RationalPoint) -> Result<LogSum> {
    let coords = point.coords();
    let m = BigInt::from(point.max_abs());
    let mut best: Option<(Rational, &ExponentVector)> = None;
    for g in a.generators().iter().filter(|g| !vanishes(g, coords)) {
        let mut gx = BigInt::one();
        for (&e, &x) in g.iter().zip(coords) {
            if e > 0 {
                gx *= num_traits::pow(BigInt::from(x.unsigned_abs()), e as usize);
            }
        }
        let ratio = Rational::new(num_traits::pow(m.clone(), g.degree() as usize), gx);
        if best.as_ref().is_none_or(|(r, _)| ratio < *r) {
            best = Some((ratio, g));
        }
    }
    let (_, g) = best.ok_or(Error::PointInZeroLocus)?;
    let mut out = LogSum::log_integer(point.max_abs()).scale_int(g.degree() as i64);
    for (&e, &x) in g.iter().zip(coords) {
        if e > 0 {
            out -= LogSum::log_integer(x.unsigned_abs()).scale_int(i64::from(e));
        }
    }
    Ok(out)
}

/// `λ_a(P, v)`.
pub fn weil_local(a: &HomogeneousMonomialIdeal, point: &RationalPoint, v: Place) -> Result<PlaceValue> {
    check_dims(a, point)?;
    let value = match v {
        Place::Infinite => archimedean(a, point)?,
        Place::Finite(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let k = min_order(a, point.coords(), p).ok_or(Error::PointInZeroLocus)?;
            LogSum::log_prime(p, k as i64)
        }
    };
    Ok(PlaceValue { place: v, value })
}

/// All finite places with a nonzero local value, as `(p, k)` with value `k·log p`.
pub fn finite_support(a: &HomogeneousMonomialIdeal, point: &RationalPoint) -> Result<BTreeMap<u64, u64>> {
    check_dims(a, point)?;
    let coords = point.coords();
    if a.generators().iter().all(|g| vanishes(g, coords)) {
        return Err(Error::PointInZeroLocus);
    }
    let mut out = BTreeMap::new();
    for p in point.prime_support() {
        let k = min_order(a, coords, p).expect("some generator is nonzero");
        if k > 0 {
            out.insert(p, k);
        }
    }
    Ok(out)
}

/// `m_S(a, P) = Σ_{v ∈ S} λ_a(P, v)`.
pub fn proximity(a: &HomogeneousMonomialIdeal, point: &RationalPoint, s: &PlaceSet) -> Result<LogSum> {
    s.iter().map(|&v| weil_local(a, point, v).map(|pv| pv.value)).sum()
}

/// `N_S(a, P) = Σ_{v ∉ S} λ_a(P, v)`.
pub fn counting(a: &HomogeneousMonomialIdeal, point: &RationalPoint, s: &PlaceSet) -> Result<LogSum> {
    Ok(finite_support(a, point)?
        .into_iter()
        .filter(|&(p, _)| !s.contains(&Place::Finite(p)))
        .map(|(p, k)| LogSum::log_prime(p, k as i64))
        .sum())
}

/// `N^(1)_S(a, P)`: each prime outside `S` with a positive local value counts once.
pub fn truncated_counting(
    a: &HomogeneousMonomialIdeal,
    point: &RationalPoint,
    s: &PlaceSet,
) -> Result<LogSum> {
    Ok(finite_support(a, point)?
        .into_keys()
        .filter(|&p| !s.contains(&Place::Finite(p)))
        .map(|p| LogSum::log_prime(p, 1))
        .sum())
}

/// `h_a(P)`: the local values summed over every place.
pub fn height_ideal(a: &HomogeneousMonomialIdeal, point: &RationalPoint) -> Result<LogSum> {
    let s = PlaceSet::archimedean();
    Ok(proximity(a, point, &s)? + counting(a, point, &s)?)
}

/// `log max_j |x_j|`.
pub fn weil_height(point: &RationalPoint) -> LogSum {
    LogSum::log_integer(point.max_abs())
}

/// Height for `O(e)`: `e·h(P)`. The canonical class of `P^n` is `e = -(n+1)`.
pub fn height_class(e: i64, point: &RationalPoint) -> LogSum {
    weil_height(point).scale_int(e)
}

/// `count` primitive points of `P^n` with coordinates in `[-bound, bound]`,
/// reproducible from `seed`.
pub fn sample_points(n: usize, bound: i64, count: usize, seed: u64) -> Result<Vec<RationalPoint>> {
    sample_points_where(n, bound, count, seed, |_| true)
}

/// As [`sample_points`], keeping only points accepted by `keep`.
pub fn sample_points_where(
    n: usize,
    bound: i64,
    count: usize,
    seed: u64,
    keep: impl Fn(&RationalPoint) -> bool,
) -> Result<Vec<RationalPoint>> {
    if bound < 1 || bound == i64::MAX {
        return Err(Error::InvalidParameter(format!("coordinate bound {bound} out of range")));
    }
    if n == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * (count + 1) {
            return Err(Error::InvalidParameter("sampling predicate rejects too many points".into()));
        }
        let coords: Vec<i64> = (0..=n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if let Ok(p) = RationalPoint::new(coords) {
            if keep(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Whether `λ` is zero at every place (unit ideal or a point far from its zero set).
pub fn is_zero_everywhere(a: &HomogeneousMonomialIdeal, point: &RationalPoint) -> Result<bool> {
    Ok(height_ideal(a, point)?.is_zero())
}
