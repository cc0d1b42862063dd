//! Exact characters of the cohomology of twisted divided powers of the
//! tautological subsheaf on projective space over a field of characteristic
//! `p`, together with the structures that feed on them: splitting types of
//! `F^d_r` on the projective line, products in the graded Han–Monsky ring,
//! and Weak Lefschetz tests for monomial complete intersections.
//!
//! The [`oracle`] module recomputes everything by brute-force linear algebra
//! over `F_p` and is what the formulas are tested against.
//!
//! ```
//! use incidence::cohomology::coh_char;
//! let h1 = coh_char(5, 2, 1, 3, 2).unwrap(); // n, p, i, d, e
//! assert_eq!(h1.dimension(), 24.into());
//! ```

pub mod arith;
pub mod coeff;
pub mod cohomology;
pub mod error;
pub mod hanmonsky;
pub mod lefschetz;
pub mod oracle;
pub mod pparts;
pub mod symfunc;
pub mod verify;

pub use coeff::Coefficient;
pub use error::{Error, Result};

/// Engine version reported by front ends.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

use num_bigint::BigInt;

/// Symmetric Laurent polynomial with arbitrary-precision coefficients.
pub type SymLaurent = symfunc::SymPoly<BigInt>;

/// Bivariate character with arbitrary-precision coefficients.
pub type BiChar = pparts::BiPoly<BigInt>;
