use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use crate::coeff::Coefficient;
use crate::symfunc::{coefficient_from_json, coefficient_to_json, write_terms};

/// A finite integer combination of torus weights `z1^u z2^v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly<C> {
    terms: BTreeMap<(i64, i64), C>,
}

impl<C: Coefficient> Default for BiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, C::one())
    }

    pub fn monomial(u: i64, v: i64, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(u, v, c);
        out
    }

    pub fn from_terms(raw: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut out = Self::zero();
        for ((u, v), c) in raw {
            out.add_term(u, v, c);
        }
        out
    }

    pub fn add_term(&mut self, u: i64, v: i64, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((u, v)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `h_m(z1, z2)`; zero for `m < 0`.
    pub fn complete_h(m: i64) -> Self {
        Self::from_terms((0..=m).map(|u| ((u, m - u), C::one())))
    }

    /// `[S/m^d]`: monomials strictly below the staircase `u + v < d`.
    pub fn staircase(d: i64) -> Self {
        let mut out = Self::zero();
        for s in 0..d {
            for u in 0..=s {
                out.add_term(u, s - u, C::one());
            }
        }
        out
    }

    /// `[S/m^{[a q']}]`: monomials `z1^u z2^v` with `⌊u/q'⌋ + ⌊v/q'⌋ < a`.
    pub fn frobenius_staircase(a: i64, qp: i64) -> Self {
        let mut out = Self::zero();
        for bu in 0..a {
            for bv in 0..(a - bu) {
                for du in 0..qp {
                    for dv in 0..qp {
                        out.add_term(bu * qp + du, bv * qp + dv, C::one());
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(i64, i64), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: i64, v: i64) -> C {
        self.terms.get(&(u, v)).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (*k, x.clone() * c.clone())))
    }

    pub fn frobenius(&self, q: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|((u, v), c)| ((u * q, v * q), c.clone())))
    }

    /// The involution `z_i ↦ z_i^{-1}`.
    pub fn dualize(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((u, v), c)| ((-u, -v), c.clone())))
    }

    /// Multiplies by `(z1 z2)^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|((u, v), c)| ((u + k, v + k), c.clone())))
    }

    pub fn dimension(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Invariant under `(u, v) ↦ (v, u)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(u, v), c)| self.terms.get(&(v, u)) == Some(c))
    }

    /// Distinct total degrees `u + v` carrying a nonzero coefficient.
    pub fn total_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|(u, v)| u + v).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Divides by `(1 − z1)(1 − z2)` when the quotient is a polynomial.
    pub fn divide_by_denominator(&self) -> Option<Self> {
        // multiply by Σ z1^i, then Σ z2^j, truncating where the partial sums
        // must vanish for the quotient to be finite
        let along = |f: &Self, first: bool| -> Option<Self> {
            let mut out = Self::zero();
            let mut lines: BTreeMap<i64, Vec<(i64, C)>> = BTreeMap::new();
            for (&(u, v), c) in &f.terms {
                let (line, pos) = if first { (v, u) } else { (u, v) };
                lines.entry(line).or_default().push((pos, c.clone()));
            }
            for (line, entries) in lines {
                let mut running = C::zero();
                let lo = entries.first()?.0;
                let hi = entries.last()?.0;
                let mut it = entries.into_iter().peekable();
                for pos in lo..=hi {
                    if let Some((_, c)) = it.next_if(|(p, _)| *p == pos) {
                        running = running + c;
                    }
                    if pos == hi {
                        if !running.is_zero() {
                            return None;
                        }
                    } else if first {
                        out.add_term(pos, line, running.clone());
                    } else {
                        out.add_term(line, pos, running.clone());
                    }
                }
            }
            Some(out)
        };
        let once = along(self, true)?;
        along(&once, false)
    }
}

/// `c·z1^u z2^v` terms in ascending `(u, v)` order.
impl<C: Coefficient> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(&(u, v), c)| (format!("z1^{u} z2^{v}"), c)))
    }
}

impl<'a, C: Coefficient> Add<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(u, v), c) in &rhs.terms {
            out.add_term(u, v, c.clone());
        }
        out
    }
}

impl<'a, C: Coefficient> Sub<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&(u, v), c) in &rhs.terms {
            out.add_term(u, v, -c.clone());
        }
        out
    }
}

impl<'a, C: Coefficient> Mul<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(u1, v1), c1) in &self.terms {
            for (&(u2, v2), c2) in &rhs.terms {
                out.add_term(u1 + u2, v1 + v2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, -c.clone())))
    }
}

#[derive(Serialize, Deserialize)]
struct BiTermRepr {
    u: i64,
    v: i64,
    coeff: Number,
}

#[derive(Serialize, Deserialize)]
struct BiPolyRepr {
    terms: Vec<BiTermRepr>,
}

impl<C: Coefficient> Serialize for BiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&(u, v), c)| BiTermRepr { u, v, coeff: coefficient_to_json(c) })
            .collect();
        BiPolyRepr { terms }.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for BiPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = BiPolyRepr::deserialize(d)?;
        let mut out = BiPoly::zero();
        for t in repr.terms {
            let c = coefficient_from_json::<C>(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("coefficient {} is not an integer", t.coeff)))?;
            out.add_term(t.u, t.v, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type B = BiPoly<i64>;

    #[test]
    fn staircases() {
        assert_eq!(B::staircase(2), B::from_terms([((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]));
        assert!(B::staircase(0).is_zero());
        assert_eq!(B::frobenius_staircase(2, 1), B::staircase(2));
        // ⌊u/2⌋ + ⌊v/2⌋ < 1 is the 2x2 box
        assert_eq!(B::frobenius_staircase(1, 2).dimension(), 4);
        assert_eq!(B::frobenius_staircase(2, 2).dimension(), 12);
    }

    #[test]
    fn denominator_division() {
        let den = B::from_terms([((0, 0), 1), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)]);
        let f = B::staircase(4);
        assert_eq!((&f * &den).divide_by_denominator(), Some(f));
        assert_eq!(B::one().divide_by_denominator(), None);
    }

    #[test]
    fn json_round_trip() {
        let f = B::from_terms([((2, 0), 1), ((0, 2), 1), ((-1, 3), -4)]);
        let s = serde_json::to_string(&f).unwrap();
        let back: B = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
