use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{binomial, require_prime};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::symfunc::{nim_poly, schur2, truncated_h, truncated_schur, SymPoly};
use crate::SymLaurent;

use super::engine::{CohQuery, CohomologyEngine};

/// Closed form of `h^1(D^d R(e))` for `p ≤ d < p²`, `e ≥ d−1`:
/// `Σ (h'_{e+(B−J)p} h'_{d−Ap} − h'_{e+(B−J)p+1} h'_{d−Ap−1}) F^p(s_{(A−B,J)})`
/// over `1 ≤ B ≤ A ≤ t`, `0 ≤ J ≤ A−B`, where `t = ⌊d/p⌋`.
pub fn coh_small_weights<C: Coefficient>(n: usize, p: u64, d: i64, e: i64) -> Result<SymPoly<C>> {
    require_prime(p)?;
    let p = p as i64;
    if d < p || d >= p * p || e < d - 1 {
        return Err(Error::Precondition(format!("need p ≤ d < p² and e ≥ d−1, got p={p}, d={d}, e={e}")));
    }
    let h = |k| truncated_h::<C>(n, k, p);
    let t = d / p;
    let mut out = SymPoly::zero(n);
    for a in 1..=t {
        for b in 1..=a {
            for j in 0..=(a - b) {
                let s = e + (b - j) * p;
                let weight = &(&h(s) * &h(d - a * p)) - &(&h(s + 1) * &h(d - a * p - 1));
                if weight.is_zero() {
                    continue;
                }
                out = &out + &(&weight * &schur2::<C>(n, a - b, j).frobenius(p)?);
            }
        }
    }
    Ok(out)
}

/// Non-recursive characteristic-2 form of `h^1(D^d R(e))` for `e ≥ d−1`:
/// `Σ F^{2q}(N_m) · s^{(q)}_{(e−(2m−2j−1)q, d−(2m+2j+1)q)}` over powers
/// `q ≥ 2` of two and `m, j ≥ 0` with `(2m+2j+1) q ≤ d`.
pub fn coh_char2_nonrecursive<C: Coefficient>(n: usize, d: i64, e: i64) -> Result<SymPoly<C>> {
    if d < 0 || e < d - 1 {
        return Err(Error::Precondition(format!("need d ≥ 0 and e ≥ d−1, got d={d}, e={e}")));
    }
    let mut out = SymPoly::zero(n);
    let mut q = 2;
    while q <= d {
        for m in 0..=((d / q - 1) / 2) {
            let nim = nim_poly::<C>(n, m)?.frobenius(2 * q)?;
            if nim.is_zero() {
                continue;
            }
            for j in 0.. {
                let k = 2 * m + 2 * j + 1;
                if k * q > d {
                    break;
                }
                let s = truncated_schur::<C>(n, e - (2 * m - 2 * j - 1) * q, d - k * q, q);
                out = &out + &(&nim * &s);
            }
        }
        q *= 2;
    }
    Ok(out)
}

/// Index bookkeeping between `D^d R(e)` on projective space and line bundles
/// `O_X(a, b)` on the incidence correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncidenceIndex {
    /// Added to the cohomological degree when passing to the incidence side.
    pub offset: usize,
    pub d: i64,
    pub e: i64,
}

/// `O_X(a, b) ↦ (n−2, d = −b−n+1, e = a−1)`; no determinant twist applied.
pub fn incidence_translate(n: usize, a: i64, b: i64) -> Result<IncidenceIndex> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n ≥ 2, got {n}")));
    }
    Ok(IncidenceIndex { offset: n - 2, d: -b - n as i64 + 1, e: a - 1 })
}

/// Inverse of [`incidence_translate`]: `(d, e) ↦ (e+1, −d−n+1)`.
pub fn incidence_bidegree(n: usize, d: i64, e: i64) -> (i64, i64) {
    (e + 1, -d - n as i64 + 1)
}

fn sym_dim(n: usize, k: i64) -> BigInt {
    if k < 0 {
        BigInt::from(0)
    } else {
        BigInt::from(binomial(k + n as i64 - 1, n as i64 - 1))
    }
}

/// `dim D^d V · dim Sym^e V − dim D^{d−1} V · dim Sym^{e+1} V`.
pub fn euler_characteristic(n: usize, d: i64, e: i64) -> BigInt {
    sym_dim(n, d) * sym_dim(n, e) - sym_dim(n, d - 1) * sym_dim(n, e + 1)
}

/// Truncated bivariate series in `u, v` with symmetric coefficients; absent
/// keys are zero.
pub type Series = BTreeMap<(i64, i64), SymLaurent>;

/// `(1+u)·G − h'(uv)·h'(v)·F²(G) − u·F²(N(uv²))` through `u^{max_u} v^{max_v}`
/// in characteristic 2, where `G = Σ h^1(D^d R(e)) u^d v^{d+e}` over `e ≥ −1`.
pub fn genfunc_residual(n: usize, max_u: i64, max_v: i64) -> Result<Series> {
    if max_u < 0 || max_v < 0 {
        return Err(Error::Precondition(format!("truncation orders must be ≥ 0, got ({max_u}, {max_v})")));
    }
    let mut engine = CohomologyEngine::<BigInt>::new();
    let mut g = BTreeMap::new();
    for d in 0..=max_u {
        for w in 0..=max_v {
            let e = w - d;
            if e >= -1 {
                let c = engine.coh_char(CohQuery::new(n, 2, 1, d, e)?)?;
                if !c.is_zero() {
                    g.insert((d, w), c);
                }
            }
        }
    }
    let zero = SymLaurent::zero(n);
    let at = |key: (i64, i64)| g.get(&key).unwrap_or(&zero);
    let h: Vec<SymLaurent> = (0..=max_v).map(|k| truncated_h(n, k, 2)).collect();
    let mut nims = Vec::new();
    let mut residual = Series::new();
    for a in 0..=max_u {
        for b in 0..=max_v {
            let mut total = at((a, b)) + at((a - 1, b));
            // h'_k (uv)^k · h'_l v^l · F²(G_{d,w}) u^{2d} v^{2w}
            for k in 0..=a.min(b) {
                if (a - k) % 2 != 0 {
                    continue;
                }
                let d = (a - k) / 2;
                for l in 0..=(b - k) {
                    if (b - k - l) % 2 != 0 {
                        continue;
                    }
                    let w = (b - k - l) / 2;
                    let gv = at((d, w));
                    if gv.is_zero() {
                        continue;
                    }
                    let term = &(&h[k as usize] * &h[l as usize]) * &gv.frobenius(2)?;
                    total = &total - &term;
                }
            }
            // u · F²(N_m) u^{2m} v^{4m}
            if a % 2 == 1 && b == 2 * (a - 1) {
                let m = (a - 1) / 2;
                while nims.len() <= m as usize {
                    let next = nims.len() as i64;
                    nims.push(nim_poly::<BigInt>(n, next)?.frobenius(2)?);
                }
                total = &total - &nims[m as usize];
            }
            if !total.is_zero() {
                residual.insert((a, b), total);
            }
        }
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::coh_char;

    #[test]
    fn small_weights_example() {
        let closed: SymLaurent = coh_small_weights(5, 2, 3, 2).unwrap();
        assert_eq!(closed, coh_char(5, 2, 1, 3, 2).unwrap());
        let closed: SymLaurent = coh_small_weights(3, 3, 4, 3).unwrap();
        assert_eq!(closed, coh_char(3, 3, 1, 4, 3).unwrap());
        assert!(coh_small_weights::<BigInt>(3, 3, 2, 3).is_err());
        assert!(coh_small_weights::<BigInt>(3, 3, 9, 9).is_err());
    }

    #[test]
    fn char2_examples() {
        let want = truncated_schur::<BigInt>(5, 4, 1, 2);
        assert_eq!(coh_char2_nonrecursive::<BigInt>(5, 3, 2).unwrap(), want);
        for e in 0..6 {
            assert!(coh_char2_nonrecursive::<BigInt>(4, 1, e).unwrap().is_zero());
        }
        for n in 2..=6 {
            for e in 5..=8 {
                let s = |a, b, q| truncated_schur::<BigInt>(n, a, b, q);
                let nim = nim_poly::<BigInt>(n, 1).unwrap().frobenius(4).unwrap();
                let want = &(&(&s(e + 4, 2, 4) + &s(e + 2, 4, 2)) + &s(e + 6, 0, 2)) + &(&nim * &s(e - 2, 0, 2));
                assert_eq!(coh_char2_nonrecursive::<BigInt>(n, 6, e).unwrap(), want, "n={n} e={e}");
            }
        }
    }

    #[test]
    fn incidence_indices() {
        assert_eq!(incidence_translate(5, 3, -6).unwrap(), IncidenceIndex { offset: 3, d: 2, e: 2 });
        assert_eq!(incidence_translate(3, 0, -2).unwrap(), IncidenceIndex { offset: 1, d: 0, e: -1 });
        for (d, e) in [(0, -1), (3, 2), (7, 11)] {
            let (a, b) = incidence_bidegree(2, d, e);
            let back = incidence_translate(2, a, b).unwrap();
            assert_eq!((back.d, back.e), (d, e));
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_characteristic(3, 0, 2), BigInt::from(6));
        assert_eq!(euler_characteristic(5, 3, 2), BigInt::from(35 * 15 - 15 * 35));
    }

    #[test]
    fn residual_small() {
        assert!(genfunc_residual(3, 0, 0).unwrap().is_empty());
        assert!(genfunc_residual(3, 4, 6).unwrap().is_empty());
    }
}
