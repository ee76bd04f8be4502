//! Exact linear algebra over polynomial coefficient vectors: cone
//! membership, projection, point lattices and integer hulls.

mod cone;
mod hull;
mod lattice;
pub mod simplex;

pub use cone::{cone_additive_unit, cone_member, fm_project, has_zero_combination, prune, PolyCone};
pub use hull::{
    cutbar, cutbar_with_limit, double_description, integer_hull, ConeGenerators, HULL_POINT_LIMIT,
};
pub use lattice::{lattice_basis, LatticeBasis};
