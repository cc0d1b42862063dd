//! Symmetric Laurent polynomials in the monomial symmetric basis, with the
//! constructors used by every character formula in the crate.

mod generators;
mod json;
mod poly;

pub use generators::{
    complete_h, for_each_partition, nim_poly, nim_sum, phi, schur2, truncated_h, truncated_schur,
};
pub use json::{coefficient_from_json, coefficient_to_json};
pub(crate) use poly::write_terms;
pub use poly::{for_each_in_orbit, is_dominant, make_dominant, orbit_size, ExponentVector, SymPoly};
