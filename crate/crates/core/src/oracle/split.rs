//! Recovers the equivariant splitting type of `F^d_r` on the projective line
//! from kernels of `×ω^r` in the two-variable model.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::oracle::model::kernel_bichar;
use crate::pparts::SplitType;

/// Peels summands off the section characters `H^0(F^d_r(e))`, `e = 0, 1, …`.
/// At each `e` the part of the kernel not explained by summands found so far
/// consists of the generators of new summands `L_{u,v}(−e)`.
pub fn split_type_oracle(p: u64, d: i64, r: i64) -> Result<SplitType> {
    if d < 0 || r < 0 {
        return Err(Error::Precondition(format!("need d, r ≥ 0, got d={d}, r={r}")));
    }
    let expected = if d >= r { r } else { d + 1 } as usize;
    let mut found = SplitType::new();
    for e in 0..=(d + r) {
        let kernel = kernel_bichar(p as u32, d, r, e)?;
        let residual = &kernel - &found.h0_character(e);
        for (&(u, v), c) in residual.terms() {
            if c.is_negative() {
                return Err(Error::Invariant(format!(
                    "F^{d}_{r} over F_{p}: sections at e={e} drop below the peeled summands at ({u}, {v})"
                )));
            }
            found.insert(u, v, -e, c.to_usize().expect("small multiplicity"));
        }
        if found.count() > expected {
            return Err(Error::Invariant(format!("F^{d}_{r} over F_{p}: more than {expected} summands")));
        }
        if found.count() == expected {
            // a full set of summands fixes every later section space
            break;
        }
    }
    if found.count() != expected {
        return Err(Error::Invariant(format!(
            "F^{d}_{r} over F_{p}: recovered {} summands, expected {expected}",
            found.count()
        )));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let mut want = SplitType::new();
        want.insert(2, 2, -2, 1);
        want.insert(1, 1, 0, 1);
        assert_eq!(split_type_oracle(2, 2, 2).unwrap(), want);
        let free = split_type_oracle(3, 2, 5).unwrap();
        assert_eq!(free.count(), 3);
        assert!(free.iter().all(|s| s.i == 0));
    }
}
