//! The bigraded model `M = ⊕ M_{d,e}`, `M_{d,e} = D^d V ⊗ Sym^e V`, with
//! multiplication by `ω = Σ x_i y_i` lowering `d` and raising `e`.
//!
//! A basis element is a pair `(D, E)` standing for `x^E / y^{1+D}`; its torus
//! weight is `D + E`. Multiplication by `ω` sends it to
//! `Σ_{i : D_i ≥ 1} (D − ε_i, E + ε_i)`, so the matrix is block diagonal over
//! weights, and the block at weight `a` is multiplication by `T = ΣT_i` on
//! `k[T]/(T_i^{1+a_i})` in degree `|E|`.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{binomial, require_prime};
use crate::error::{Error, Result};
use crate::oracle::FpMatrix;
use crate::symfunc::{for_each_partition, SymPoly};
use crate::{BiChar, SymLaurent};

/// All `v` with `0 ≤ v_i ≤ bound_i` and `Σ v = total`, in lexicographic order.
pub fn bounded_compositions(total: i64, bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if total < 0 {
        return out;
    }
    let mut suffix_cap = vec![0i64; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + bounds[i].max(0);
    }
    let mut buf = vec![0i64; bounds.len()];
    fn rec(pos: usize, rem: i64, bounds: &[i64], cap: &[i64], buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == bounds.len() {
            if rem == 0 {
                out.push(buf.clone());
            }
            return;
        }
        let lo = (rem - cap[pos + 1]).max(0);
        let hi = rem.min(bounds[pos]);
        for x in lo..=hi {
            buf[pos] = x;
            rec(pos + 1, rem - x, bounds, cap, buf, out);
        }
    }
    rec(0, total, bounds, &suffix_cap, &mut buf, &mut out);
    out
}

/// Ordered basis of `M_{d,e}`: pairs `(D, E)` with `|D| = d`, `|E| = e`,
/// lexicographic on `(D, E)`.
#[derive(Clone, Debug)]
pub struct MBasis {
    pub n: usize,
    pub d: i64,
    pub e: i64,
    elems: Vec<(Vec<i64>, Vec<i64>)>,
    index: HashMap<(Vec<i64>, Vec<i64>), usize>,
}

impl MBasis {
    pub fn new(n: usize, d: i64, e: i64) -> Self {
        let unbounded = vec![i64::MAX / 4; n];
        let ds = bounded_compositions(d, &unbounded);
        let es = bounded_compositions(e, &unbounded);
        let mut elems = Vec::with_capacity(ds.len() * es.len());
        for dv in &ds {
            for ev in &es {
                elems.push((dv.clone(), ev.clone()));
            }
        }
        let index = elems.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        MBasis { n, d, e, elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[(Vec<i64>, Vec<i64>)] {
        &self.elems
    }

    pub fn index_of(&self, dv: &[i64], ev: &[i64]) -> Option<usize> {
        self.index.get(&(dv.to_vec(), ev.to_vec())).copied()
    }
}

fn single_step(n: usize, p: u32, d: i64, e: i64) -> Result<FpMatrix> {
    let src = MBasis::new(n, d, e);
    let tgt = MBasis::new(n, d - 1, e + 1);
    let mut m = FpMatrix::zeros(p, tgt.len(), src.len())?;
    for (col, (dv, ev)) in src.elements().iter().enumerate() {
        for i in 0..n {
            if dv[i] >= 1 {
                let mut d2 = dv.clone();
                let mut e2 = ev.clone();
                d2[i] -= 1;
                e2[i] += 1;
                let row = tgt.index_of(&d2, &e2).expect("target basis element");
                m.add_to(row, col, 1);
            }
        }
    }
    Ok(m)
}

/// Matrix of `×ω^r : M_{d,e} → M_{d−r,e+r}` (rows index the target), built by
/// composing `r` single steps.
pub fn omega_power_matrix(n: usize, p: u32, d: i64, e: i64, r: i64) -> Result<FpMatrix> {
    require_prime(p as u64)?;
    if r < 0 || d < r {
        return Err(Error::Precondition(format!("need 0 ≤ r ≤ d, got d={d}, r={r}")));
    }
    let mut acc = FpMatrix::identity(p, MBasis::new(n, d, e).len())?;
    for k in 0..r {
        acc = single_step(n, p, d - k, e + k)?.mul(&acc)?;
    }
    Ok(acc)
}

/// The same matrix from multinomial coefficients `r! / ∏ c_i!`; a test double.
pub fn omega_power_matrix_multinomial(n: usize, p: u32, d: i64, e: i64, r: i64) -> Result<FpMatrix> {
    require_prime(p as u64)?;
    if r < 0 || d < r {
        return Err(Error::Precondition(format!("need 0 ≤ r ≤ d, got d={d}, r={r}")));
    }
    let src = MBasis::new(n, d, e);
    let tgt = MBasis::new(n, d - r, e + r);
    let mut m = FpMatrix::zeros(p, tgt.len(), src.len())?;
    for (col, (dv, ev)) in src.elements().iter().enumerate() {
        for c in bounded_compositions(r, dv) {
            let d2: Vec<i64> = dv.iter().zip(&c).map(|(x, y)| x - y).collect();
            let e2: Vec<i64> = ev.iter().zip(&c).map(|(x, y)| x + y).collect();
            let row = tgt.index_of(&d2, &e2).expect("target basis element");
            let mut coeff: u128 = 1;
            let mut placed = 0i64;
            for &ci in &c {
                placed += ci;
                coeff *= binomial(placed, ci);
            }
            m.add_to(row, col, (coeff % p as u128) as u32);
        }
    }
    Ok(m)
}

/// The weight-`a` block of `×ω^r` on `M_{d, |a|−d}` (rows index the target).
pub fn omega_block(p: u32, d: i64, r: i64, a: &[i64]) -> Result<FpMatrix> {
    require_prime(p as u64)?;
    let sources = bounded_compositions(d, a);
    let mut level = sources.clone();
    // cur[s][j]: coefficient of level element j in ω^k applied to source s
    let mut cur: Vec<Vec<u32>> = (0..sources.len())
        .map(|s| {
            let mut v = vec![0u32; sources.len()];
            v[s] = 1;
            v
        })
        .collect();
    let mut level_sum = d;
    for _ in 0..r {
        level_sum -= 1;
        let next_level = bounded_compositions(level_sum, a);
        let index: HashMap<&[i64], usize> =
            next_level.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
        let mut next = vec![vec![0u32; next_level.len()]; sources.len()];
        let mut moved = vec![0i64; a.len()];
        for (j, dv) in level.iter().enumerate() {
            for i in 0..a.len() {
                if dv[i] == 0 {
                    continue;
                }
                moved.copy_from_slice(dv);
                moved[i] -= 1;
                let t = index[moved.as_slice()];
                for s in 0..sources.len() {
                    let x = cur[s][j];
                    if x != 0 {
                        next[s][t] = ((next[s][t] as u64 + x as u64) % p as u64) as u32;
                    }
                }
            }
        }
        level = next_level;
        cur = next;
    }
    let mut m = FpMatrix::zeros(p, level.len(), sources.len())?;
    for (s, col) in cur.iter().enumerate() {
        for (t, &x) in col.iter().enumerate() {
            if x != 0 {
                m.set(t, s, x);
            }
        }
    }
    Ok(m)
}

/// `(dim ker, dim coker)` of the weight-`a` block of `×ω^r` out of `M_{d,·}`.
pub fn block_kernel_cokernel(p: u32, d: i64, r: i64, a: &[i64]) -> Result<(usize, usize)> {
    let m = omega_block(p, d, r, a)?;
    let rank = m.rank();
    Ok((m.cols() - rank, m.rows() - rank))
}

/// Characters of kernel and cokernel of `×ω^r : M_{d,e} → M_{d−r,e+r}` over
/// `F_p`. For `r = 1` and `e ≥ −1` these are `h^0` and `h^1` of `D^d R(e)`.
pub fn sheaf_coh_char(n: usize, p: u32, d: i64, r: i64, e: i64) -> Result<(SymLaurent, SymLaurent)> {
    require_prime(p as u64)?;
    if n == 0 || d < 0 || r < 0 {
        return Err(Error::Precondition(format!("need n ≥ 1, d ≥ 0, r ≥ 0; got n={n}, d={d}, r={r}")));
    }
    let mut weights = Vec::new();
    for_each_partition(d + e, n, d + e, |lam| weights.push(lam.to_vec()));
    let dims: Vec<(usize, usize)> = weights
        .par_iter()
        .map(|a| block_kernel_cokernel(p, d, r, a))
        .collect::<Result<_>>()?;
    let mut ker = Vec::new();
    let mut coker = Vec::new();
    for (a, (k, c)) in weights.into_iter().zip(dims) {
        ker.push((a.clone(), BigInt::from(k)));
        coker.push((a, BigInt::from(c)));
    }
    Ok((SymPoly::canonicalize(n, ker)?, SymPoly::canonicalize(n, coker)?))
}

/// Kernel character of `×ω^r` on `M_{d,e}` for two variables, unsymmetrized.
pub fn kernel_bichar(p: u32, d: i64, r: i64, e: i64) -> Result<BiChar> {
    require_prime(p as u64)?;
    let mut out = BiChar::zero();
    if e < 0 || d < 0 {
        return Ok(out);
    }
    for a1 in 0..=(d + e) {
        let a = [a1, d + e - a1];
        let (k, _) = block_kernel_cokernel(p, d, r, &a)?;
        out.add_term(a[0], a[1], BigInt::from(k));
    }
    Ok(out)
}
