//! Characters `h^i(D^d R(e))` of the cohomology of twisted divided powers of
//! the tautological subsheaf `R` on `P^{n−1}`.

mod closed;
mod engine;

pub use closed::{
    coh_char2_nonrecursive, coh_small_weights, euler_characteristic, genfunc_residual, incidence_bidegree,
    incidence_translate, IncidenceIndex, Series,
};
pub use engine::{coh_base_small_d, coh_char, CohQuery, CohomologyEngine};
