//! Exact integer coefficient rings for characters.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed integer ring usable as the coefficient type of a character.
///
/// Implemented for [`BigInt`] (the default everywhere) and for the machine
/// integers `i64`/`i128`, which are handy in tests where overflow is ruled out.
pub trait Coefficient:
    Signed + Clone + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Ord + Send + Sync + 'static
{
    fn from_u64_lossless(x: u64) -> Self {
        Self::from_u64(x).expect("coefficient ring cannot hold u64 value")
    }
}

impl Coefficient for BigInt {}
impl Coefficient for i64 {}
impl Coefficient for i128 {}
