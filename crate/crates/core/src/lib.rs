//! Multiplier ideals of monomial ideals, Weil functions for ideal sheaves on
//! projective space (over `Q` and along polynomial entire curves), and
//! margin evaluation for the ideal-sheaf forms of the proximity and
//! truncated-counting inequalities of diophantine approximation and
//! Nevanlinna theory.

pub mod arithmetic;
pub mod conjecture;
pub mod error;
pub mod multiplier;
pub mod nevanlinna;
pub mod polyhedra;
pub mod rational;

pub use arithmetic::{LogSum, Place, PlaceSet, PlaceValue, RationalPoint};
pub use conjecture::{MarginReport, Quantity};
pub use error::{Error, Result};
pub use multiplier::{JumpingSpectrum, SncMonomialDivisor, Threshold};
pub use nevanlinna::{PolynomialCurve, Quadrature, RadiusGrid};
pub use polyhedra::{
    homogenize, ExponentVector, HomogeneousMonomialIdeal, Membership, MonomialIdeal,
    NewtonPolyhedron, RationalVector,
};
pub use rational::Rational;
