use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use crate::arith::{power_at_least, require_prime};
use crate::error::{Error, Result};
use crate::BiChar;

/// Multiset of equivariant line bundles `L_{u,v} ⊗ O(i)` on the projective line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitType {
    summands: BTreeMap<(i64, i64, i64), usize>,
}

/// One line of the JSON form of a [`SplitType`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub u: i64,
    pub v: i64,
    pub i: i64,
    pub mult: usize,
}

#[derive(Serialize, Deserialize)]
struct SplitRepr {
    summands: Vec<Summand>,
}

impl Serialize for SplitType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SplitRepr { summands: self.iter().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SplitType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SplitRepr::deserialize(d)?;
        let mut out = SplitType::new();
        for s in repr.summands {
            out.insert(s.u, s.v, s.i, s.mult);
        }
        Ok(out)
    }
}

impl SplitType {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, u: i64, v: i64, i: i64, mult: usize) {
        if mult > 0 {
            *self.summands.entry((u, v, i)).or_insert(0) += mult;
        }
    }

    /// Summands in lexicographic order of `(u, v, i)`.
    pub fn iter(&self) -> impl Iterator<Item = Summand> + '_ {
        self.summands.iter().map(|(&(u, v, i), &mult)| Summand { u, v, i, mult })
    }

    /// Rank: the number of line bundles counted with multiplicity.
    pub fn count(&self) -> usize {
        self.summands.values().sum()
    }

    fn extend(&mut self, other: &SplitType) {
        for (&(u, v, i), &m) in &other.summands {
            self.insert(u, v, i, m);
        }
    }

    fn translated(&self, du: i64, dv: i64, di: i64) -> SplitType {
        let mut out = SplitType::new();
        for (&(u, v, i), &m) in &self.summands {
            out.insert(u + du, v + dv, i + di, m);
        }
        out
    }

    /// Sections in degree `e`: `Σ z1^u z2^v · h_{i+e}(z1, z2)`.
    pub fn h0_character(&self, e: i64) -> BiChar {
        let mut out = BiChar::zero();
        for (&(u, v, i), &m) in &self.summands {
            for (&(a, b), _) in BiChar::complete_h(i + e).terms() {
                out.add_term(u + a, v + b, BigInt::from(m));
            }
        }
        out
    }

    /// Checks rank, determinant and weight-window constraints for `F^d_r`.
    pub fn check_invariants(&self, d: i64, r: i64) -> Result<()> {
        let fail = |what: String| Err(Error::Invariant(format!("F^{d}_{r}: {what}")));
        let expected = if d >= r { r } else { d + 1 };
        if self.count() as i64 != expected {
            return fail(format!("rank {} != {}", self.count(), expected));
        }
        if d < r {
            if self.summands.keys().any(|&(_, _, i)| i != 0) {
                return fail("nonzero twist below the rank".into());
            }
            return Ok(());
        }
        let weighted = |f: fn(&(i64, i64, i64)) -> i64| -> i64 {
            self.summands.iter().map(|(k, &m)| f(k) * m as i64).sum()
        };
        let su = weighted(|k| k.0);
        let sv = weighted(|k| k.1);
        let si = weighted(|k| k.2);
        let want_uv = d * r - r * (r - 1) / 2;
        if su != want_uv || sv != want_uv {
            return fail(format!("weight sums ({su}, {sv}) != {want_uv}"));
        }
        if si != -r * (d - r + 1) {
            return fail(format!("twist sum {si} != {}", -r * (d - r + 1)));
        }
        for &(u, v, _) in self.summands.keys() {
            if u < d - r + 1 || u > d || v < d - r + 1 || v > d {
                return fail(format!("weight ({u}, {v}) outside [{}, {d}]", d - r + 1));
            }
        }
        Ok(())
    }
}

/// `H_{a,b} = ⊕_{i=b}^{a} L_{a+b−i, i}`; empty when `a < b`.
fn h_block(a: i64, b: i64, twist: i64) -> SplitType {
    let mut out = SplitType::new();
    for i in b..=a {
        out.insert(a + b - i, i, twist, 1);
    }
    out
}

/// `F^{q'}(H_{a,0}) ⊗ inner`.
fn frobenius_h_tensor(a: i64, qp: i64, inner: &SplitType) -> SplitType {
    let mut out = SplitType::new();
    for k in 0..=a {
        out.extend(&inner.translated(qp * (a - k), qp * k, 0));
    }
    out
}

/// Which branch of the splitting recursion to take at the top level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitCase {
    /// `d < r`: free module `H_{d,0} ⊗ O`.
    Free,
    /// `d ≥ q + r − 1`: peel off `L_{q,q}(−q)`.
    Periodic,
    /// `q − 1 ≤ d ≤ q + r − 1`: two `H` blocks.
    Boundary,
    /// `r ≤ d ≤ q − 1`: Frobenius-twisted blocks around `q'`.
    Frobenius,
}

/// The window `q' < r ≤ q` used for `F^d_r` (for `r = 1`, `q = p`).
pub fn split_window(p: i64, r: i64) -> (i64, i64) {
    let q = power_at_least(p, r);
    (q, q / p)
}

/// Applicable branches for `(p, d, r)`, in dispatch order.
pub fn applicable_cases(p: i64, d: i64, r: i64) -> Vec<SplitCase> {
    let (q, _) = split_window(p, r);
    let mut out = Vec::new();
    if d < r {
        out.push(SplitCase::Free);
        return out;
    }
    if d >= q + r - 1 {
        out.push(SplitCase::Periodic);
    }
    if q - 1 <= d && d <= q + r - 1 {
        out.push(SplitCase::Boundary);
    }
    if r <= d && d <= q - 1 {
        out.push(SplitCase::Frobenius);
    }
    out
}

/// Equivariant splitting type of `F^d_r`, the dual of the bundle of principal
/// parts of order `r − 1` of `O(d)` on the projective line, in characteristic `p`.
pub fn split_fdr(p: u64, d: i64, r: i64) -> Result<SplitType> {
    require_prime(p)?;
    if d < 0 || r < 0 {
        return Err(Error::Precondition(format!("split type needs d, r ≥ 0, got d={d}, r={r}")));
    }
    Ok(split_rec(p as i64, d, r, None))
}

/// As [`split_fdr`] with a forced top-level branch, for overlap checks.
pub fn split_fdr_with_case(p: u64, d: i64, r: i64, case: SplitCase) -> Result<SplitType> {
    require_prime(p)?;
    if !applicable_cases(p as i64, d, r).contains(&case) || r < 2 {
        return Err(Error::Precondition(format!("branch {case:?} does not apply to d={d}, r={r}")));
    }
    Ok(split_rec(p as i64, d, r, Some(case)))
}

fn split_rec(p: i64, d: i64, r: i64, forced: Option<SplitCase>) -> SplitType {
    if r == 0 {
        return SplitType::new();
    }
    if d < r {
        return h_block(d, 0, 0);
    }
    if r == 1 {
        // F^d_1 = D^d R = L_{d,d}(−d); the Frobenius branch would be circular here
        return h_block(d, d, -d);
    }
    let (q, qp) = split_window(p, r);
    let case = forced.unwrap_or_else(|| applicable_cases(p, d, r)[0]);
    match case {
        SplitCase::Free => h_block(d, 0, 0),
        SplitCase::Periodic => split_rec(p, d - q, r, None).translated(q, q, -q),
        SplitCase::Boundary => {
            let mut out = h_block(d, q, -q);
            out.extend(&h_block(q - 1, d - r + 1, r - q));
            out
        }
        SplitCase::Frobenius => {
            let a = r / qp;
            let first = frobenius_h_tensor(a, qp, &split_rec(p, d - a * qp, r - a * qp, None));
            let second = frobenius_h_tensor(
                a - 1,
                qp,
                &split_rec(p, d - r + qp, (a + 1) * qp - r, None).translated(0, 0, r - a * qp),
            );
            let mut out = first;
            out.extend(&second);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(items: &[(i64, i64, i64)]) -> SplitType {
        let mut s = SplitType::new();
        for &(u, v, i) in items {
            s.insert(u, v, i, 1);
        }
        s
    }

    #[test]
    fn free_case() {
        let s = split_fdr(5, 3, 7).unwrap();
        assert_eq!(s, st(&[(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0)]));
    }

    #[test]
    fn small_examples() {
        assert_eq!(split_fdr(2, 2, 2).unwrap(), st(&[(2, 2, -2), (1, 1, 0)]));
        let s = split_fdr(3, 7, 2).unwrap();
        s.check_invariants(7, 2).unwrap();
        assert_eq!(s.iter().map(|x| x.i * x.mult as i64).sum::<i64>(), -12);
    }

    #[test]
    fn invariants_on_a_grid() {
        for p in [2u64, 3, 5] {
            for r in 0..=12 {
                for d in 0..=40 {
                    split_fdr(p, d, r).unwrap().check_invariants(d, r).unwrap();
                }
            }
        }
    }

    #[test]
    fn overlapping_branches_agree() {
        for p in [2u64, 3] {
            for r in 2..=(p * p) as i64 {
                let (q, _) = split_window(p as i64, r);
                let d = q + r - 1;
                let a = split_fdr_with_case(p, d, r, SplitCase::Periodic).unwrap();
                let b = split_fdr_with_case(p, d, r, SplitCase::Boundary).unwrap();
                assert_eq!(a, b, "p={p} d={d} r={r}");
            }
        }
    }

    #[test]
    fn json_schema() {
        let s = split_fdr(2, 2, 2).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"summands":[{"u":1,"v":1,"i":0,"mult":1},{"u":2,"v":2,"i":-2,"mult":1}]}"#);
        assert_eq!(serde_json::from_str::<SplitType>(&j).unwrap(), s);
    }
}
