//! Brute-force ground truth over prime fields: the bigraded model with
//! multiplication by `ω`, per-weight Artinian blocks, Jordan ranks of
//! monomial complete intersections, and splitting-type recovery.

mod fpmatrix;
mod jordan;
pub mod model;
mod split;

pub use fpmatrix::{FpMatrix, Modulus};
pub use jordan::{artinian_mult_ranks, jordan_ranks, ArtinianRanks, RankTable};
pub use model::{
    block_kernel_cokernel, bounded_compositions, kernel_bichar, omega_block, omega_power_matrix,
    omega_power_matrix_multinomial, sheaf_coh_char, MBasis,
};
pub use split::split_type_oracle;
