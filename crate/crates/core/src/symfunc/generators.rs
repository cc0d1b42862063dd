//! Constructors for the generating families: complete, truncated complete,
//! two-row Schur, Nim polynomials and Φ.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::symfunc::SymPoly;

/// Calls `f` on every partition of `d` with at most `parts` parts, each part
/// at most `max_part`, padded with zeros to length `parts`.
pub fn for_each_partition(d: i64, parts: usize, max_part: i64, mut f: impl FnMut(&[i64])) {
    if d < 0 {
        return;
    }
    let mut buf = vec![0i64; parts];
    fn rec(buf: &mut Vec<i64>, pos: usize, rem: i64, cap: i64, f: &mut dyn FnMut(&[i64])) {
        if rem == 0 {
            for x in buf[pos..].iter_mut() {
                *x = 0;
            }
            f(buf);
            return;
        }
        let slots = (buf.len() - pos) as i64;
        if slots == 0 || cap * slots < rem {
            return;
        }
        let top = cap.min(rem);
        let mut part = top;
        while part >= 1 {
            buf[pos] = part;
            rec(buf, pos + 1, rem - part, part, f);
            part -= 1;
        }
    }
    rec(&mut buf, 0, d, max_part.min(d), &mut f);
}

/// Complete homogeneous symmetric polynomial `h_d`; zero for `d < 0`.
pub fn complete_h<C: Coefficient>(n: usize, d: i64) -> SymPoly<C> {
    bounded_h(n, d, d.max(0))
}

/// `h_d^{(q)}`: degree-`d` monomials with every exponent below `q`.
pub fn truncated_h<C: Coefficient>(n: usize, d: i64, q: i64) -> SymPoly<C> {
    assert!(q >= 1, "truncation bound must be positive");
    bounded_h(n, d, q - 1)
}

fn bounded_h<C: Coefficient>(n: usize, d: i64, max_part: i64) -> SymPoly<C> {
    let mut raw = Vec::new();
    for_each_partition(d, n, max_part, |lam| raw.push((lam.to_vec(), C::one())));
    SymPoly::canonicalize(n, raw).expect("partitions have length n")
}

/// `s_{(a,b)} = h_a h_b − h_{a+1} h_{b−1}`, applied for all integers.
pub fn schur2<C: Coefficient>(n: usize, a: i64, b: i64) -> SymPoly<C> {
    let h = |d| complete_h::<C>(n, d);
    &(&h(a) * &h(b)) - &(&h(a + 1) * &h(b - 1))
}

/// `s^{(q)}_{(a,b)}`, the same determinant built from `h^{(q)}`.
pub fn truncated_schur<C: Coefficient>(n: usize, a: i64, b: i64, q: i64) -> SymPoly<C> {
    let h = |d| truncated_h::<C>(n, d, q);
    &(&h(a) * &h(b)) - &(&h(a + 1) * &h(b - 1))
}

/// Bitwise XOR of the inputs.
pub fn nim_sum(xs: &[u64]) -> u64 {
    xs.iter().fold(0, |acc, x| acc ^ x)
}

/// `N_m = Σ z^i` over exponent vectors of total degree `2m` whose entries
/// have Nim-sum zero.
///
/// Partitions are generated in decreasing order and pruned with a reachability
/// table over (remaining slots, remaining sum, XOR still needed).
pub fn nim_poly<C: Coefficient>(n: usize, m: i64) -> Result<SymPoly<C>> {
    if m < 0 {
        return Err(Error::Precondition(format!("Nim polynomial index {m} < 0")));
    }
    let total = (2 * m) as usize;
    let width = (total + 1).next_power_of_two();
    // reach[k][s][x]: k entries summing to s can have XOR x
    let mut reach = vec![vec![vec![false; width]; total + 1]; n + 1];
    reach[0][0][0] = true;
    for k in 1..=n {
        for s in 0..=total {
            for x in 0..width {
                if !reach[k - 1][s][x] {
                    continue;
                }
                for part in 0..=(total - s) {
                    reach[k][s + part][x ^ part] = true;
                }
            }
        }
    }
    let mut raw = Vec::new();
    let mut buf = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        buf: &mut Vec<i64>,
        pos: usize,
        rem: usize,
        cap: usize,
        xor: usize,
        reach: &[Vec<Vec<bool>>],
        out: &mut Vec<Vec<i64>>,
    ) {
        let slots = buf.len() - pos;
        if !reach[slots][rem][xor] {
            return;
        }
        if slots == 0 {
            out.push(buf.clone());
            return;
        }
        if cap * slots < rem {
            return;
        }
        for part in (0..=cap.min(rem)).rev() {
            buf[pos] = part as i64;
            rec(buf, pos + 1, rem - part, part, xor ^ part, reach, out);
        }
    }
    let mut found = Vec::new();
    rec(&mut buf, 0, total, total, 0, &reach, &mut found);
    raw.extend(found.into_iter().map(|v| (v, C::one())));
    SymPoly::canonicalize(n, raw)
}

/// `Φ_{d,e} = Σ_{j≥0} (h'_{e+jp} h'_{d−jp} − h'_{e+1+jp} h'_{d−1−jp})` with
/// `h' = h^{(p)}`.
pub fn phi<C: Coefficient>(n: usize, p: i64, d: i64, e: i64) -> SymPoly<C> {
    let h = |k| truncated_h::<C>(n, k, p);
    let mut out = SymPoly::zero(n);
    let mut j = 0;
    while d - j * p >= 0 {
        let plus = &h(e + j * p) * &h(d - j * p);
        let minus = &h(e + 1 + j * p) * &h(d - 1 - j * p);
        out = &(&out + &plus) - &minus;
        j += 1;
    }
    out
}
