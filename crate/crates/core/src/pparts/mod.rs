//! The rank-two engine: equivariant splitting types of `F^d_r` on the
//! projective line and the characters of the ideals `I(d,r)`, `J(d,r)`.

mod bichar;
mod ideals;
mod split;

pub use bichar::BiPoly;
pub use ideals::{bc_char, c_char_by_frobenius_step, nc_member, quot_char, quot_char_char2};
pub use split::{
    applicable_cases, split_fdr, split_fdr_with_case, split_window, SplitCase, SplitType, Summand,
};
