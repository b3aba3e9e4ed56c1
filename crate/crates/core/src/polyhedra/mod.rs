//! Exact convex geometry of Newton polyhedra of monomial ideals.

mod ideal;
pub mod lp;
mod newton;

pub use ideal::{
    homogenize, lattice_points_box, ExponentVector, HomogeneousMonomialIdeal, LatticeBox,
    MonomialIdeal,
};
pub(crate) use ideal::drop_coordinate;
pub use newton::{Facet, LatticeMembership, Membership, NewtonPolyhedron, RationalVector, MAX_DIM};
