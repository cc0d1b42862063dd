//! Characters of the quotients `B(d,r) = S/I(d,r)` and `C(d,r) = S/J(d,r)`,
//! where `I(d,r)` and `J(d,r)` are the monomial ideals cutting out the
//! images of the principal-parts maps on the affine charts.

use crate::arith::{power_above, require_prime};
use crate::error::{Error, Result};
use crate::BiChar;

/// `(q, q')` with `q' ≤ r < q`, `q` a power of `p`.
fn ideal_window(p: i64, r: i64) -> (i64, i64) {
    let q = power_above(p, r);
    (q, q / p)
}

fn b_char(p: i64, d: i64, r: i64) -> BiChar {
    if r == 0 {
        return BiChar::zero();
    }
    if d <= r {
        return BiChar::staircase(d);
    }
    let (q, qp) = ideal_window(p, r);
    if d >= q {
        return b_char(p, d - q, r);
    }
    frobenius_step(p, d, r, qp, true)
}

fn c_char(p: i64, d: i64, r: i64) -> BiChar {
    if r == 0 {
        return BiChar::zero();
    }
    let (q, _) = ideal_window(p, r);
    // periodic in d with period q once d ≥ r; lift or reduce into [r, q + r − 1]
    let d = r + (d - r).rem_euclid(q);
    b_char(p, q + r - 1 - d, r)
}

/// The shared step for `r ≤ d < q`, with `a` chosen by `a q' ≤ r < (a+1) q'`:
/// `X(d,r) = F^{q'}(h_a) X(d−aq', r−aq') − F^{q'}(h_{a−1}) (z1z2)^{q'−1} Y(·,·)^∨ + [S/m^{[aq']}]`
/// where `(X, Y)` is `(B, C)` or `(C, B)`.
fn frobenius_step(p: i64, d: i64, r: i64, qp: i64, for_b: bool) -> BiChar {
    let a = r / qp;
    let (same, other): (fn(i64, i64, i64) -> BiChar, fn(i64, i64, i64) -> BiChar) =
        if for_b { (b_char, c_char) } else { (c_char, b_char) };
    let other_d = if for_b { d - r - 1 + qp } else { d - r + qp };
    let first = &BiChar::complete_h(a).frobenius(qp) * &same(p, d - a * qp, r - a * qp);
    let second = &BiChar::complete_h(a - 1).frobenius(qp)
        * &other(p, other_d, (a + 1) * qp - r - 1).dualize().shift(qp - 1);
    &(&first - &second) + &BiChar::frobenius_staircase(a, qp)
}

/// `([B(d,r)], [C(d,r)])`. For `d < r`, `J(d,r)` is taken from its periodic
/// continuation.
pub fn bc_char(p: u64, d: i64, r: i64) -> Result<(BiChar, BiChar)> {
    require_prime(p)?;
    if r < 0 {
        return Err(Error::Precondition(format!("r = {r} < 0")));
    }
    let d_b = d.max(0);
    Ok((b_char(p as i64, d_b, r), c_char(p as i64, d, r)))
}

/// `[C(d,r)]` computed with the Frobenius-step recursion instead of the
/// reflection `J(d,r) = I(q+r−1−d, r)`; defined for `r ≤ d < q`.
pub fn c_char_by_frobenius_step(p: u64, d: i64, r: i64) -> Result<BiChar> {
    require_prime(p)?;
    let p = p as i64;
    let (q, qp) = ideal_window(p, r);
    if r < 1 || d < r || d >= q {
        return Err(Error::Precondition(format!("need 1 ≤ r ≤ d < q, got d={d}, r={r}, q={q}")));
    }
    Ok(frobenius_step(p, d, r, qp, false))
}

/// `[J(d−1, r−1) / J(d, r)] = [C(d,r)] − [C(d−1,r−1)]`.
pub fn quot_char(p: u64, d: i64, r: i64) -> Result<BiChar> {
    require_prime(p)?;
    if r < 1 {
        return Err(Error::Precondition(format!("quotient needs r ≥ 1, got {r}")));
    }
    let p = p as i64;
    Ok(&c_char(p, d, r) - &c_char(p, d - 1, r - 1))
}

/// No carries when adding `a` and `b` in base 2.
pub fn nc_member(a: u64, b: u64) -> bool {
    a & b == 0
}

/// Characteristic-2 closed form of [`quot_char`] for odd `r`:
/// `∏_j F^{2^{r_j}}(h_1)` when `(r, d−r)` has no carries, else zero.
pub fn quot_char_char2(d: i64, r: i64) -> Result<BiChar> {
    if r < 1 || r % 2 == 0 {
        return Err(Error::Precondition(format!("r = {r} must be odd and positive")));
    }
    let (q, _) = ideal_window(2, r);
    let d = r + (d - r).rem_euclid(q);
    if !nc_member(r as u64, (d - r) as u64) {
        return Ok(BiChar::zero());
    }
    let mut out = BiChar::one();
    let rest = (r - 1) as u64;
    for bit in 0..63 {
        if rest >> bit & 1 == 1 {
            out = &out * &BiChar::complete_h(1).frobenius(1 << bit);
        }
    }
    Ok(out)
}
