//! Graded Jordan data of `T = T_1 + ⋯ + T_n` on monomial complete
//! intersections `k[T_1..T_n]/(T_i^{ℓ_i})`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arith::require_prime;
use crate::error::{Error, Result};
use crate::oracle::model::bounded_compositions;
use crate::oracle::FpMatrix;

/// `r_{j,k} = rank(T^k : A_j → A_{j+k})` for the algebra with the given
/// generator lengths (exponents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    dims: Vec<usize>,
    ranks: Vec<Vec<usize>>,
}

impl RankTable {
    /// Socle degree `Σ (ℓ_i − 1)`.
    pub fn socle_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// `dim A_j`, zero outside `[0, socle]`.
    pub fn dim(&self, j: i64) -> usize {
        usize::try_from(j).ok().and_then(|j| self.dims.get(j).copied()).unwrap_or(0)
    }

    /// `r_{j,k}`, with `r_{j,0} = dim A_j` and zero outside the table.
    pub fn rank(&self, j: i64, k: i64) -> usize {
        if j < 0 || k < 0 {
            return 0;
        }
        self.ranks.get(j as usize).and_then(|row| row.get(k as usize)).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

fn graded_basis(lengths: &[i64], j: i64) -> Vec<Vec<i64>> {
    let bounds: Vec<i64> = lengths.iter().map(|l| l - 1).collect();
    bounded_compositions(j, &bounds)
}

fn validate(p: u64, lengths: &[i64]) -> Result<()> {
    require_prime(p)?;
    if lengths.is_empty() || lengths.iter().any(|&l| l < 1) {
        return Err(Error::Precondition(format!("lengths must be nonempty and positive: {lengths:?}")));
    }
    Ok(())
}

/// Images of `A_j` under successive powers of `T`, returning
/// `[rank T^0, rank T^1, …]` until the image dies or the top degree is reached.
fn powers_from(p: u32, lengths: &[i64], socle: i64, j: i64, max_k: Option<i64>) -> Result<Vec<usize>> {
    let sources = graded_basis(lengths, j);
    let mut ranks = vec![sources.len()];
    let mut level = sources.clone();
    let mut cur: Vec<Vec<u32>> = (0..sources.len())
        .map(|s| {
            let mut v = vec![0u32; sources.len()];
            v[s] = 1;
            v
        })
        .collect();
    let mut k = 0;
    while j + k < socle && max_k.is_none_or(|m| k < m) {
        k += 1;
        let next_level = graded_basis(lengths, j + k);
        let index: HashMap<&[i64], usize> =
            next_level.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
        let mut next = vec![vec![0u32; next_level.len()]; sources.len()];
        let mut moved = vec![0i64; lengths.len()];
        for (t, mono) in level.iter().enumerate() {
            for i in 0..lengths.len() {
                if mono[i] + 1 >= lengths[i] {
                    continue;
                }
                moved.copy_from_slice(mono);
                moved[i] += 1;
                let target = index[moved.as_slice()];
                for s in 0..sources.len() {
                    let x = cur[s][t];
                    if x != 0 {
                        next[s][target] = ((next[s][target] as u64 + x as u64) % p as u64) as u32;
                    }
                }
            }
        }
        level = next_level;
        cur = next;
        let mut m = FpMatrix::zeros(p, sources.len(), level.len())?;
        for (s, row) in cur.iter().enumerate() {
            for (t, &x) in row.iter().enumerate() {
                if x != 0 {
                    m.set(s, t, x);
                }
            }
        }
        let rank = m.rank();
        ranks.push(rank);
        if rank == 0 {
            break;
        }
    }
    Ok(ranks)
}

/// Full rank table of `T` on `k[T_1..T_n]/(T_i^{ℓ_i})` over `F_p`.
pub fn jordan_ranks(p: u64, lengths: &[i64]) -> Result<RankTable> {
    validate(p, lengths)?;
    let socle: i64 = lengths.iter().map(|l| l - 1).sum();
    let ranks: Vec<Vec<usize>> = (0..=socle)
        .into_par_iter()
        .map(|j| powers_from(p as u32, lengths, socle, j, None))
        .collect::<Result<_>>()?;
    let dims = ranks.iter().map(|r| r[0]).collect();
    Ok(RankTable { dims, ranks })
}

/// Hilbert function and ranks of `×T` on `M_ā = k[T]/(T_i^{1+a_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianRanks {
    /// `dim (M_ā)_e` for `e = 0..=s`.
    pub dims: Vec<usize>,
    /// `rank(×T : (M_ā)_e → (M_ā)_{e+1})` for `e = 0..s`.
    pub ranks: Vec<usize>,
}

impl ArtinianRanks {
    /// Degrees `e` where `×T` fails to have maximal rank.
    pub fn deficient_degrees(&self) -> Vec<usize> {
        (0..self.ranks.len())
            .filter(|&e| self.ranks[e] < self.dims[e].min(self.dims[e + 1]))
            .collect()
    }
}

/// Ranks of multiplication by `T` in each degree of `M_ā` over `F_p`.
pub fn artinian_mult_ranks(p: u64, a: &[i64]) -> Result<ArtinianRanks> {
    let lengths: Vec<i64> = a.iter().map(|x| x + 1).collect();
    validate(p, &lengths)?;
    let socle: i64 = a.iter().sum();
    let per_degree: Vec<Vec<usize>> = (0..=socle)
        .into_par_iter()
        .map(|j| powers_from(p as u32, &lengths, socle, j, Some(1)))
        .collect::<Result<_>>()?;
    let dims = per_degree.iter().map(|r| r[0]).collect();
    let ranks = per_degree[..socle as usize].iter().map(|r| r.get(1).copied().unwrap_or(0)).collect();
    Ok(ArtinianRanks { dims, ranks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_function_is_a_product() {
        let t = jordan_ranks(2, &[3, 5]).unwrap();
        assert_eq!(t.dims(), &[1, 2, 3, 3, 3, 2, 1]);
        for j in 0..=6 {
            for k in 0..=6 {
                assert!(t.rank(j, k) <= t.dim(j).min(t.dim(j + k)));
            }
        }
        assert_eq!(t.rank(-1, 2), 0);
    }

    #[test]
    fn top_power_detects_longest_string() {
        // T^6 = binom(6,2) T1^2 T2^4 and binom(6,2) = 15
        for p in [2u64, 7, 11] {
            assert_eq!(jordan_ranks(p, &[3, 5]).unwrap().rank(0, 6), 1);
        }
        for p in [3u64, 5] {
            assert_eq!(jordan_ranks(p, &[3, 5]).unwrap().rank(0, 6), 0);
        }
    }

    #[test]
    fn mult_ranks_examples() {
        let r = artinian_mult_ranks(7, &[1, 1]).unwrap();
        assert_eq!(r.ranks, vec![1, 1]);
        assert!(r.deficient_degrees().is_empty());
        assert!(!artinian_mult_ranks(2, &[1, 1, 1, 1, 1]).unwrap().deficient_degrees().is_empty());
        assert!(!artinian_mult_ranks(3, &[2, 2, 1]).unwrap().deficient_degrees().is_empty());
        assert!(artinian_mult_ranks(5, &[2, 2, 1]).unwrap().deficient_degrees().is_empty());
    }
}
