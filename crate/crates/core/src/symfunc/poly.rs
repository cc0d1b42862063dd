use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// A torus weight or multidegree: one integer per variable.
pub type ExponentVector = Vec<i64>;

/// Symmetric Laurent polynomial in `n` variables, stored in the monomial
/// symmetric basis: `Σ coeff(λ) · m_λ` over dominant (weakly decreasing) `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

/// Sorts into dominant (weakly decreasing) order in place.
pub fn make_dominant(v: &mut [i64]) {
    v.sort_unstable_by(|a, b| b.cmp(a));
}

pub fn is_dominant(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Number of distinct permutations of `lambda`.
pub fn orbit_size(lambda: &[i64]) -> u128 {
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable();
    let mut size: u128 = 1;
    let mut run = 0u128;
    for (k, w) in sorted.iter().enumerate() {
        if k > 0 && sorted[k - 1] == *w {
            run += 1;
        } else {
            run = 1;
        }
        // size = k!/prod(run!) built incrementally
        size = size * (k as u128 + 1) / run;
    }
    size
}

/// Advances `v` to the next permutation in ascending lexicographic order.
/// Returns false (leaving `v` sorted ascending) after the last one.
pub(crate) fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `f` on every distinct permutation of `lambda`.
pub fn for_each_in_orbit(lambda: &[i64], mut f: impl FnMut(&[i64])) {
    let mut v = lambda.to_vec();
    v.sort_unstable();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

impl<C: Coefficient> SymPoly<C> {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial_symmetric(n, vec![0; n], C::one())
    }

    /// `c · m_λ`; `lambda` need not be dominant.
    pub fn monomial_symmetric(n: usize, mut lambda: ExponentVector, c: C) -> Self {
        assert_eq!(lambda.len(), n, "exponent vector length");
        make_dominant(&mut lambda);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        SymPoly { n, terms }
    }

    /// Builds a polynomial from orbit representatives, merging equal orbits.
    pub fn canonicalize(n: usize, raw: impl IntoIterator<Item = (ExponentVector, C)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (mut v, c) in raw {
            if v.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: v.len() });
            }
            make_dominant(&mut v);
            out.add_term(v, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, key: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomial-symmetric terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the dominant key.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())).collect(),
        }
    }

    fn total_orbit_elements(&self) -> u128 {
        self.terms.keys().map(|k| orbit_size(k)).sum()
    }

    /// Exact product. The operand with fewer expanded monomials is enumerated
    /// orbit by orbit and translated by each key of the other; the symmetric
    /// result is read off at dominant weights and rescaled by orbit sizes.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let (keys, expand) = if self.total_orbit_elements() <= other.total_orbit_elements() {
            (other, self)
        } else {
            (self, other)
        };
        let n = self.n;
        // acc[ν] collects |orbit(ν)| · coeff(ν)
        let mut acc: FxHashMap<ExponentVector, C> = FxHashMap::default();
        let mut counts: FxHashMap<ExponentVector, u64> = FxHashMap::default();
        let mut buf = vec![0i64; n];
        for (lambda, c_lambda) in &keys.terms {
            let o_lambda = C::from_u128(orbit_size(lambda)).expect("orbit size fits");
            for (mu, d_mu) in &expand.terms {
                counts.clear();
                for_each_in_orbit(mu, |beta| {
                    for t in 0..n {
                        buf[t] = lambda[t] + beta[t];
                    }
                    make_dominant(&mut buf);
                    if let Some(x) = counts.get_mut(buf.as_slice()) {
                        *x += 1;
                    } else {
                        counts.insert(buf.clone(), 1);
                    }
                });
                let weight = c_lambda.clone() * d_mu.clone() * o_lambda.clone();
                for (nu, cnt) in counts.drain() {
                    let add = weight.clone() * C::from_u64_lossless(cnt);
                    match acc.get_mut(&nu) {
                        Some(x) => *x = x.clone() + add,
                        None => {
                            acc.insert(nu, add);
                        }
                    }
                }
            }
        }
        let mut out = Self::zero(n);
        for (nu, total) in acc {
            if total.is_zero() {
                continue;
            }
            let o_nu = C::from_u128(orbit_size(&nu)).expect("orbit size fits");
            debug_assert!((total.clone() % o_nu.clone()).is_zero());
            out.terms.insert(nu, total / o_nu);
        }
        Ok(out)
    }

    /// The Frobenius twist `z_i ↦ z_i^q`.
    pub fn frobenius(&self, q: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::Precondition(format!("Frobenius factor {q} < 1")));
        }
        Ok(SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().map(|x| x * q).collect(), c.clone()))
                .collect(),
        })
    }

    /// The involution `z_i ↦ z_i^{-1}`.
    pub fn dualize(&self) -> Self {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut v: ExponentVector = k.iter().map(|x| -x).collect();
                    make_dominant(&mut v);
                    (v, c.clone())
                })
                .collect(),
        }
    }

    /// Multiplies by `(z_1 ⋯ z_n)^k`.
    pub fn shift(&self, k: i64) -> Self {
        SymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (v.iter().map(|x| x + k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Value at `z_1 = ⋯ = z_n = 1`.
    pub fn dimension(&self) -> C {
        let mut total = C::zero();
        for (k, c) in &self.terms {
            total = total + c.clone() * C::from_u128(orbit_size(k)).expect("orbit size fits");
        }
        total
    }

    /// Coefficient of the monomial `z^a` (any ordering of `a`).
    pub fn coeff_of(&self, a: &[i64]) -> Result<C> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: a.len() });
        }
        let mut key = a.to_vec();
        make_dominant(&mut key);
        Ok(self.terms.get(&key).cloned().unwrap_or_else(C::zero))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Converts the coefficient ring.
    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        let mut out = SymPoly::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

/// Writes `c·term` pairs joined by signs, or `0` when there are none.
pub(crate) fn write_terms<'a, C: Coefficient + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a C)>,
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        let sign = if c.is_negative() { "-" } else { "+" };
        let abs = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        if abs.is_one() {
            write!(f, "{label}")?;
        } else {
            write!(f, "{abs}·{label}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `c·m_(λ)` terms, largest `λ` first.
impl<C: Coefficient> fmt::Display for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |lam: &ExponentVector| {
            let parts: Vec<String> = lam.iter().map(|x| x.to_string()).collect();
            format!("m_({})", parts.join(","))
        };
        write_terms(f, self.terms.iter().rev().map(|(lam, c)| (label(lam), c)))
    }
}

impl<'a, C: Coefficient> Add<&'a SymPoly<C>> for &'a SymPoly<C> {
    type Output = SymPoly<C>;
    fn add(self, rhs: &'a SymPoly<C>) -> SymPoly<C> {
        self.try_add(rhs).expect("SymPoly addition")
    }
}

impl<'a, C: Coefficient> Sub<&'a SymPoly<C>> for &'a SymPoly<C> {
    type Output = SymPoly<C>;
    fn sub(self, rhs: &'a SymPoly<C>) -> SymPoly<C> {
        self.try_sub(rhs).expect("SymPoly subtraction")
    }
}

impl<'a, C: Coefficient> Mul<&'a SymPoly<C>> for &'a SymPoly<C> {
    type Output = SymPoly<C>;
    fn mul(self, rhs: &'a SymPoly<C>) -> SymPoly<C> {
        self.try_mul(rhs).expect("SymPoly multiplication")
    }
}

impl<C: Coefficient> Neg for &SymPoly<C> {
    type Output = SymPoly<C>;
    fn neg(self) -> SymPoly<C> {
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SymPoly<i64>;

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[2, 1, 1, 1, 0]), 20);
        assert_eq!(orbit_size(&[1, 1, 1, 1, 1]), 1);
        assert_eq!(orbit_size(&[3, 2, 1]), 6);
        assert_eq!(orbit_size(&[]), 1);
    }

    #[test]
    fn orbit_enumeration_counts_match() {
        for lam in [vec![2, 2, 1, 0], vec![0, 0, 0], vec![3, -1, -1, 2, 2]] {
            let mut seen = std::collections::BTreeSet::new();
            for_each_in_orbit(&lam, |v| {
                seen.insert(v.to_vec());
            });
            assert_eq!(seen.len() as u128, orbit_size(&lam));
        }
    }

    #[test]
    fn canonicalize_merges_and_cancels() {
        let p = P::canonicalize(5, vec![(vec![2, 1, 0, 0, 0], 1), (vec![0, 1, 2, 0, 0], 1)]).unwrap();
        assert_eq!(p.coeff_of(&[2, 1, 0, 0, 0]).unwrap(), 2);
        assert_eq!(p.len(), 1);
        assert!(P::canonicalize(2, vec![(vec![1, 1], 3), (vec![1, 1], -3)]).unwrap().is_zero());
        assert!(P::canonicalize(3, vec![]).unwrap().is_zero());
        assert!(P::canonicalize(3, vec![(vec![1, 1], 3)]).is_err());
    }

    #[test]
    fn mismatched_n_is_an_error() {
        assert_eq!(P::one(2).try_mul(&P::one(3)), Err(Error::VariableMismatch(2, 3)));
    }

    #[test]
    fn dualize_examples() {
        let m10 = P::monomial_symmetric(2, vec![1, 0], 1);
        assert_eq!(m10.dualize(), P::monomial_symmetric(2, vec![0, -1], 1));
        assert_eq!(m10.dualize().dualize(), m10);
    }

    #[test]
    fn frobenius_scales() {
        let m10 = P::monomial_symmetric(2, vec![1, 0], 1);
        assert_eq!(m10.frobenius(2).unwrap(), P::monomial_symmetric(2, vec![2, 0], 1));
        assert_eq!(m10.frobenius(1).unwrap(), m10);
        assert!(m10.frobenius(0).is_err());
    }

    #[test]
    fn laurent_product() {
        // (z1 + z2)(1/z1 + 1/z2) = 2 + z1/z2 + z2/z1
        let a = P::monomial_symmetric(2, vec![1, 0], 1);
        let b = a.dualize();
        let prod = &a * &b;
        assert_eq!(prod.coeff_of(&[0, 0]).unwrap(), 2);
        assert_eq!(prod.coeff_of(&[1, -1]).unwrap(), 1);
        assert_eq!(prod.len(), 2);
    }
}
