use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::symfunc::{phi, schur2, SymPoly};

/// A request for `h^i(D^d R(e))` on `P^{n−1}` in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CohQuery {
    pub n: usize,
    pub p: u64,
    pub i: u8,
    pub d: i64,
    pub e: i64,
}

impl CohQuery {
    pub fn new(n: usize, p: u64, i: u8, d: i64, e: i64) -> Result<Self> {
        let q = CohQuery { n, p, i, d, e };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Precondition(format!("need n ≥ 2 variables, got {}", self.n)));
        }
        if self.p != 0 && !is_prime(self.p) {
            return Err(Error::NotPrime(self.p));
        }
        if self.i > 1 {
            return Err(Error::Precondition(format!("cohomological degree {} is not 0 or 1", self.i)));
        }
        if self.d < 0 {
            return Err(Error::Precondition(format!("divided power d = {} < 0", self.d)));
        }
        if self.e < -1 {
            return Err(Error::TwistOutOfRange(self.e));
        }
        Ok(())
    }

    /// `h^{1−i}(D^{e+1} R(d−1))`, the partner under the duality swap.
    pub fn swapped(&self) -> CohQuery {
        CohQuery { n: self.n, p: self.p, i: 1 - self.i, d: self.e + 1, e: self.d - 1 }
    }
}

/// Borel–Weil–Bott values, valid for `p = 0` or `d < p`:
/// `h^0 = s_{(e,d)}` when `e ≥ d`, `h^1 = s_{(d−1,e+1)}` when `−1 ≤ e ≤ d−2`.
pub fn coh_base_small_d<C: Coefficient>(q: CohQuery) -> Result<SymPoly<C>> {
    q.validate()?;
    if q.p != 0 && q.d >= q.p as i64 {
        return Err(Error::Precondition(format!("base formula needs d < p, got d={}, p={}", q.d, q.p)));
    }
    let (d, e) = (q.d, q.e);
    Ok(match q.i {
        0 if e >= d => schur2(q.n, e, d),
        1 if e <= d - 2 => schur2(q.n, d - 1, e + 1),
        _ => SymPoly::zero(q.n),
    })
}

/// Memoizing evaluator of the recursive character formula.
#[derive(Debug)]
pub struct CohomologyEngine<C = BigInt> {
    memo: HashMap<CohQuery, SymPoly<C>>,
    phi_cache: HashMap<(usize, u64, i64, i64), SymPoly<C>>,
}

impl<C: Coefficient> Default for CohomologyEngine<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coefficient> CohomologyEngine<C> {
    pub fn new() -> Self {
        CohomologyEngine { memo: HashMap::new(), phi_cache: HashMap::new() }
    }

    /// Number of memoized characters.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn phi(&mut self, n: usize, p: u64, d: i64, e: i64) -> SymPoly<C> {
        self.phi_cache.entry((n, p, d, e)).or_insert_with(|| phi(n, p as i64, d, e)).clone()
    }

    /// `h^i(D^d R(e))` for any `e ≥ −1`.
    pub fn coh_char(&mut self, q: CohQuery) -> Result<SymPoly<C>> {
        q.validate()?;
        if let Some(hit) = self.memo.get(&q) {
            return Ok(hit.clone());
        }
        let p = q.p as i64;
        let value = if q.p == 0 || q.d < p {
            coh_base_small_d(q)?
        } else if q.e >= q.d - 1 {
            self.recursion(q)?
        } else {
            self.coh_char(q.swapped())?
        };
        self.memo.insert(q, value.clone());
        Ok(value)
    }

    /// `h^i(D^d R(e)) = h^{1−i}(D^{e+1} R(d−1))` for `−1 ≤ e ≤ d−2`.
    pub fn coh_dual_swap(&mut self, q: CohQuery) -> Result<SymPoly<C>> {
        q.validate()?;
        if q.e > q.d - 2 {
            return Err(Error::Precondition(format!("swap needs e ≤ d − 2, got d={}, e={}", q.d, q.e)));
        }
        self.coh_char(q.swapped())
    }

    /// `Σ_{a,b} Φ_{d−ap, e−bp} · F^p(h^i(D^a R(b)))` over `0 ≤ a ≤ d/p`,
    /// `−1 ≤ b ≤ (d+e)/p`.
    fn recursion(&mut self, q: CohQuery) -> Result<SymPoly<C>> {
        let p = q.p as i64;
        let mut total = SymPoly::zero(q.n);
        for a in 0..=(q.d / p) {
            for b in -1..=((q.d + q.e) / p) {
                let (dd, ee) = (q.d - a * p, q.e - b * p);
                if dd + ee < 0 {
                    continue;
                }
                let weight = self.phi(q.n, q.p, dd, ee);
                if weight.is_zero() {
                    continue;
                }
                let inner = self.coh_char(CohQuery { n: q.n, p: q.p, i: q.i, d: a, e: b })?;
                if inner.is_zero() {
                    continue;
                }
                total = &total + &(&weight * &inner.frobenius(p)?);
            }
        }
        Ok(total)
    }
}

/// `h^i(D^d R(e))` with a throwaway engine.
pub fn coh_char(n: usize, p: u64, i: u8, d: i64, e: i64) -> Result<SymPoly<BigInt>> {
    CohomologyEngine::new().coh_char(CohQuery::new(n, p, i, d, e)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::truncated_h;

    fn m(n: usize, lam: &[i64], c: i64) -> SymPoly<BigInt> {
        SymPoly::monomial_symmetric(n, lam.to_vec(), BigInt::from(c))
    }

    #[test]
    fn base_examples() {
        let q = CohQuery::new(5, 2, 1, 1, -1).unwrap();
        assert_eq!(coh_base_small_d::<BigInt>(q).unwrap(), SymPoly::one(5));
        for p in [2u64, 3, 5] {
            for d in 1..p as i64 {
                let q = CohQuery::new(4, p, 1, d, d - 1).unwrap();
                assert!(coh_base_small_d::<BigInt>(q).unwrap().is_zero());
            }
        }
        let q = CohQuery::new(3, 5, 0, 2, 3).unwrap();
        assert_eq!(coh_base_small_d::<BigInt>(q).unwrap(), schur2(3, 3, 2));
        assert!(coh_base_small_d::<BigInt>(CohQuery::new(3, 2, 0, 2, 3).unwrap()).is_err());
    }

    #[test]
    fn worked_example() {
        let want = &m(5, &[2, 1, 1, 1, 0], 1) + &m(5, &[1, 1, 1, 1, 1], 4);
        assert_eq!(coh_char(5, 2, 1, 3, 2).unwrap(), want);
        assert_eq!(coh_char(5, 2, 1, 2, 3).unwrap(), m(5, &[1, 1, 1, 1, 1], 1));
        assert_eq!(coh_char(5, 3, 1, 3, 2).unwrap(), truncated_h(5, 5, 3));
        assert!(coh_char(5, 3, 1, 2, 3).unwrap().is_zero());
        assert!(coh_char(5, 5, 1, 3, 2).unwrap().is_zero());
        assert!(coh_char(5, 7, 1, 3, 2).unwrap().is_zero());
    }

    #[test]
    fn domain_errors() {
        assert_eq!(coh_char(3, 2, 1, 2, -2), Err(Error::TwistOutOfRange(-2)));
        assert_eq!(coh_char(3, 4, 1, 2, 2), Err(Error::NotPrime(4)));
        assert!(coh_char(1, 2, 1, 2, 2).is_err());
        assert!(coh_char(3, 2, 2, 2, 2).is_err());
    }

    #[test]
    fn swap_is_an_involution() {
        let mut eng = CohomologyEngine::<BigInt>::new();
        let q = CohQuery::new(3, 2, 1, 3, 0).unwrap();
        assert_eq!(q.swapped().swapped(), q);
        let once = eng.coh_dual_swap(q).unwrap();
        assert_eq!(once, eng.coh_char(q).unwrap());
        assert!(eng.coh_dual_swap(CohQuery::new(3, 2, 1, 3, 2).unwrap()).is_err());
        let zero = eng.coh_dual_swap(CohQuery::new(4, 3, 0, 2, -1).unwrap()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn machine_integers_agree_with_bigints() {
        let mut small = CohomologyEngine::<i64>::new();
        let mut big = CohomologyEngine::<BigInt>::new();
        for d in 0..=6 {
            for e in (d - 1).max(-1)..=7 {
                let q = CohQuery::new(4, 2, 1, d, e).unwrap();
                let a = small.coh_char(q).unwrap().map_coefficients(|c| BigInt::from(*c));
                assert_eq!(a, big.coh_char(q).unwrap());
            }
        }
    }
}
