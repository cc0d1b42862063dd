//! Products `δ_{ℓ_1} ⋯ δ_{ℓ_n}` in the graded Han–Monsky representation ring,
//! read off from the graded Jordan type of `T = T_1 + ⋯ + T_n` acting on
//! `k[T_1..T_n]/(T_i^{ℓ_i})`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::arith::require_prime;
use crate::error::{Error, Result};
use crate::oracle::jordan_ranks;
use crate::pparts::quot_char;

/// A graded class `⊕ δ_c(−j)^{mult}`, the generator of `δ_c(−j)` sitting in degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HmClass {
    summands: BTreeMap<(i64, i64), usize>,
}

/// One summand in the JSON form of an [`HmClass`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HmSummand {
    pub c: i64,
    pub j: i64,
    pub mult: usize,
}

#[derive(Serialize, Deserialize)]
struct HmRepr {
    summands: Vec<HmSummand>,
    dim: i64,
}

impl Serialize for HmClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HmRepr { summands: self.iter().collect(), dim: self.dim() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HmClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HmRepr::deserialize(d)?;
        let mut out = HmClass::new();
        for s in repr.summands {
            out.insert(s.c, s.j, s.mult);
        }
        if out.dim() != repr.dim {
            return Err(serde::de::Error::custom(format!("dim {} does not match summands ({})", repr.dim, out.dim())));
        }
        Ok(out)
    }
}

impl HmClass {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single summand `δ_c(−j)`.
    pub fn delta(c: i64, j: i64) -> Self {
        let mut out = Self::new();
        out.insert(c, j, 1);
        out
    }

    pub fn insert(&mut self, c: i64, j: i64, mult: usize) {
        if mult > 0 {
            *self.summands.entry((j, c)).or_insert(0) += mult;
        }
    }

    /// Summands ordered by shift `j`, then length `c`.
    pub fn iter(&self) -> impl Iterator<Item = HmSummand> + '_ {
        self.summands.iter().map(|(&(j, c), &mult)| HmSummand { c, j, mult })
    }

    pub fn multiplicity(&self, c: i64, j: i64) -> usize {
        self.summands.get(&(j, c)).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: i64, j: i64) -> bool {
        self.multiplicity(c, j) > 0
    }

    /// `Σ c · mult`.
    pub fn dim(&self) -> i64 {
        self.iter().map(|s| s.c * s.mult as i64).sum()
    }

    /// Product of classes, distributing shifts:
    /// `δ_c(−j) · δ_{c'}(−j') = (δ_c δ_{c'})(−j−j')`.
    pub fn product(&self, other: &HmClass, pairs: &mut PairTable) -> Result<HmClass> {
        let mut out = HmClass::new();
        for x in self.iter() {
            for y in other.iter() {
                let base = pairs.get(x.c, y.c)?;
                for z in base.iter() {
                    out.insert(z.c, z.j + x.j + y.j, z.mult * x.mult * y.mult);
                }
            }
        }
        Ok(out)
    }
}

/// Memoized products `δ_a δ_b` in a fixed characteristic.
#[derive(Debug)]
pub struct PairTable {
    p: u64,
    memo: HashMap<(i64, i64), HmClass>,
}

impl PairTable {
    pub fn new(p: u64) -> Result<Self> {
        require_prime(p)?;
        Ok(PairTable { p, memo: HashMap::new() })
    }

    pub fn get(&mut self, a: i64, b: i64) -> Result<HmClass> {
        let key = (a.min(b), a.max(b));
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let value = hm_product_direct(self.p, &[key.0, key.1])?;
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

fn validate(p: u64, lengths: &[i64]) -> Result<()> {
    require_prime(p)?;
    if lengths.is_empty() {
        return Err(Error::Precondition("empty list of lengths".into()));
    }
    if let Some(bad) = lengths.iter().find(|&&l| l < 1) {
        return Err(Error::Precondition(format!("length {bad} is not positive")));
    }
    Ok(())
}

/// Decomposition from the rank table of `T` on the full algebra:
/// `N(j,c) = (r_{j,c−1} − r_{j,c}) − (r_{j−1,c} − r_{j−1,c+1})`.
pub fn hm_product_direct(p: u64, lengths: &[i64]) -> Result<HmClass> {
    validate(p, lengths)?;
    let table = jordan_ranks(p, lengths)?;
    let top = table.socle_degree() as i64;
    let r = |j: i64, k: i64| table.rank(j, k) as i64;
    let mut out = HmClass::new();
    for j in 0..=top {
        for c in 1..=(top - j + 1) {
            let count = (r(j, c - 1) - r(j, c)) - (r(j - 1, c) - r(j - 1, c + 1));
            if count < 0 {
                return Err(Error::Invariant(format!("negative string count at j={j}, c={c}")));
            }
            out.insert(c, j, count as usize);
        }
    }
    Ok(out)
}

/// `δ_{ℓ_1} ⋯ δ_{ℓ_n}` over `F_p`, folding pairwise products for `n ≥ 3`.
pub fn hm_product(p: u64, lengths: &[i64]) -> Result<HmClass> {
    hm_product_with(&mut PairTable::new(p)?, lengths)
}

/// As [`hm_product`], reusing a caller-owned table of pairwise products.
pub fn hm_product_with(pairs: &mut PairTable, lengths: &[i64]) -> Result<HmClass> {
    validate(pairs.p, lengths)?;
    if lengths.len() <= 2 {
        return hm_product_direct(pairs.p, lengths);
    }
    let mut acc = HmClass::delta(lengths[0], 0);
    for &l in &lengths[1..] {
        acc = acc.product(&HmClass::delta(l, 0), pairs)?;
    }
    Ok(acc)
}

/// Every summand `δ_c(−j)` with `p ∤ c` satisfies `c + 2j = Σℓ − (n−1)`.
pub fn check_prime_shift_constraint(p: u64, lengths: &[i64], result: &HmClass) -> Result<bool> {
    validate(p, lengths)?;
    let target = lengths.iter().sum::<i64>() - (lengths.len() as i64 - 1);
    Ok(result.iter().filter(|s| s.c % p as i64 != 0).all(|s| s.c + 2 * s.j == target))
}

/// For odd lengths `2a_i + 1`, the unique odd summand of the characteristic-2
/// product is `δ_{2c+1}(−j)` with `c = ⊕a_i` and `j = Σa_i − c`; returns
/// `(2c+1, j)`.
pub fn odd_summand_char2(odd_lengths: &[i64]) -> Result<(i64, i64)> {
    validate(2, odd_lengths)?;
    if let Some(bad) = odd_lengths.iter().find(|&&l| l % 2 == 0) {
        return Err(Error::Precondition(format!("length {bad} is even")));
    }
    let halves: Vec<i64> = odd_lengths.iter().map(|l| (l - 1) / 2).collect();
    let c = halves.iter().fold(0, |acc, x| acc ^ x);
    Ok((2 * c + 1, halves.iter().sum::<i64>() - c))
}

/// `δ_r(−j) ∈ δ_a δ_b`, decided by the bidegree `(a−1+r−d, b−1+r−d)` entry of
/// `[J(d−1,r−1)/J(d,r)]` with `d = a+b−1−j`.
pub fn summand_test_via_ideals(p: u64, a: i64, b: i64, r: i64, j: i64) -> Result<bool> {
    require_prime(p)?;
    if a < 1 || b < 1 || r < 1 || j < 0 {
        return Err(Error::Precondition(format!("need a, b, r ≥ 1 and j ≥ 0, got a={a}, b={b}, r={r}, j={j}")));
    }
    let d = a + b - 1 - j;
    let q = quot_char(p, d, r)?;
    Ok(q.coeff(a - 1 + r - d, b - 1 + r - d) != 0.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(items: &[(i64, i64)]) -> HmClass {
        let mut out = HmClass::new();
        for &(c, j) in items {
            out.insert(c, j, 1);
        }
        out
    }

    #[test]
    fn delta3_delta5_table() {
        let rows = [
            (2, class(&[(7, 0), (4, 1), (4, 2)])),
            (3, class(&[(6, 0), (6, 1), (3, 2)])),
            (5, class(&[(5, 0), (5, 1), (5, 2)])),
            (7, class(&[(7, 0), (5, 1), (3, 2)])),
        ];
        for (p, want) in rows {
            let got = hm_product(p, &[3, 5]).unwrap();
            assert_eq!(got, want, "p={p}");
            assert!(check_prime_shift_constraint(p, &[3, 5], &got).unwrap());
        }
        assert_eq!(hm_product(3, &[1, 4]).unwrap(), class(&[(4, 0)]));
    }

    #[test]
    fn fold_agrees_with_direct() {
        for p in [2u64, 3] {
            for lengths in [[2, 3, 4], [3, 3, 3], [1, 5, 2], [4, 4, 2]] {
                assert_eq!(hm_product(p, &lengths).unwrap(), hm_product_direct(p, &lengths).unwrap());
            }
        }
    }

    #[test]
    fn odd_summand() {
        assert_eq!(odd_summand_char2(&[3, 5]).unwrap(), (7, 0));
        assert_eq!(odd_summand_char2(&[9]).unwrap(), (9, 0));
        assert_eq!(odd_summand_char2(&[3, 3]).unwrap(), (1, 2));
        assert!(hm_product(2, &[3, 3]).unwrap().contains(1, 2));
        assert!(odd_summand_char2(&[3, 4]).is_err());
    }

    #[test]
    fn ideal_bridge_examples() {
        assert!(summand_test_via_ideals(2, 3, 5, 7, 0).unwrap());
        assert!(!summand_test_via_ideals(2, 3, 5, 5, 1).unwrap());
        assert!(summand_test_via_ideals(3, 3, 5, 6, 1).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let c = hm_product(2, &[3, 5]).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"summands":[{"c":7,"j":0,"mult":1},{"c":4,"j":1,"mult":1},{"c":4,"j":2,"mult":1}],"dim":15}"#
        );
        assert_eq!(serde_json::from_str::<HmClass>(&text).unwrap(), c);
        assert!(serde_json::from_str::<HmClass>(r#"{"summands":[{"c":7,"j":0,"mult":1}],"dim":8}"#).is_err());
    }
}
