//! Dense matrices over a prime field.

use crate::arith::require_prime;
use crate::error::Result;

/// Reduction modulo a fixed prime `p < 2^32` by Barrett's method.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modulus {
    p: u64,
    m: u128,
}

impl Modulus {
    pub fn new(p: u32) -> Self {
        Modulus { p: p as u64, m: (1u128 << 64) / p as u128 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.m) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p { s - self.p } else { s }) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            (self.p - a as u64) as u32
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let mut base = a;
        let mut exp = self.p - 2;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Store {
    /// Characteristic 2: each row packed into `words` machine words.
    Bits { words: usize, data: Vec<u64> },
    /// Odd characteristic: row-major reduced residues.
    Dense(Vec<u32>),
}

/// A dense `rows × cols` matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    store: Store,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self> {
        require_prime(p as u64)?;
        let store = if p == 2 {
            let words = cols.div_ceil(64);
            Store::Bits { words, data: vec![0; rows * words] }
        } else {
            Store::Dense(vec![0; rows * cols])
        };
        Ok(FpMatrix { modulus: Modulus::new(p), rows, cols, store })
    }

    pub fn identity(p: u32, size: usize) -> Result<Self> {
        let mut m = Self::zeros(p, size, size)?;
        for i in 0..size {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Builds from integer rows, reducing every entry modulo `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(p, rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.rem_euclid(p as i64) as u32);
            }
        }
        Ok(m)
    }

    pub fn p(&self) -> u32 {
        self.modulus.p as u32
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        match &self.store {
            Store::Bits { words, data } => ((data[i * words + j / 64] >> (j % 64)) & 1) as u32,
            Store::Dense(data) => data[i * self.cols + j],
        }
    }

    /// Sets an entry; `x` must already be reduced.
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        debug_assert!((x as u64) < self.modulus.p);
        match &mut self.store {
            Store::Bits { words, data } => {
                let w = &mut data[i * *words + j / 64];
                if x == 1 {
                    *w |= 1 << (j % 64);
                } else {
                    *w &= !(1 << (j % 64));
                }
            }
            Store::Dense(data) => data[i * self.cols + j] = x,
        }
    }

    /// Adds `x` to an entry.
    pub fn add_to(&mut self, i: usize, j: usize, x: u32) {
        let cur = self.get(i, j);
        let m = self.modulus;
        self.set(i, j, m.add(cur, x % m.p as u32));
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = FpMatrix::zeros(self.p(), self.rows, other.cols)?;
        let m = self.modulus;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_to(i, j, m.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reorders rows and columns: entry `(i, j)` of the result is entry
    /// `(row_perm[i], col_perm[j])` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p(), self.rows, self.cols).expect("prime already checked");
        for (i, &ri) in row_perm.iter().enumerate() {
            for (j, &cj) in col_perm.iter().enumerate() {
                out.set(i, j, self.get(ri, cj));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        match &mut self.store {
            Store::Bits { words, data } => rref_bits(self.rows, self.cols, *words, data),
            Store::Dense(data) => rref_dense(self.modulus, self.rows, self.cols, data),
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of `{x : self · x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let mut red = self.clone();
        let pivots = red.rref();
        let m = red.modulus;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m.neg(red.get(row, free));
            }
            basis.push(v);
        }
        basis
    }
}

fn rref_bits(rows: usize, cols: usize, words: usize, data: &mut [u64]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..rows).find(|&r| data[r * words + w] & bit != 0) else {
            continue;
        };
        if piv != rank {
            for k in 0..words {
                data.swap(piv * words + k, rank * words + k);
            }
        }
        let (head, tail) = data.split_at_mut(rank * words);
        let (prow, tail) = tail.split_at_mut(words);
        for r in 0..rank {
            let row = &mut head[r * words..(r + 1) * words];
            if row[w] & bit != 0 {
                for k in w..words {
                    row[k] ^= prow[k];
                }
            }
        }
        for row in tail.chunks_exact_mut(words) {
            if row[w] & bit != 0 {
                for k in w..words {
                    row[k] ^= prow[k];
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

fn rref_dense(m: Modulus, rows: usize, cols: usize, data: &mut [u32]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for k in 0..cols {
                data.swap(piv * cols + k, rank * cols + k);
            }
        }
        let inv = m.inv(data[rank * cols + col]);
        for k in col..cols {
            data[rank * cols + k] = m.mul(data[rank * cols + k], inv);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            let nf = m.neg(f);
            for k in col..cols {
                let sub = m.mul(nf, data[rank * cols + k]);
                data[r * cols + k] = m.add(data[r * cols + k], sub);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barrett_matches_remainder() {
        for p in [2u32, 3, 5, 251, 65_521, 2_147_483_647] {
            let m = Modulus::new(p);
            for x in [0u64, 1, 7, 1 << 40, u64::MAX / 3, (p as u64 - 1) * (p as u64 - 1)] {
                assert_eq!(m.reduce(x), x % p as u64);
            }
            if p > 2 {
                assert_eq!(m.mul(m.inv(2), 2), 1);
            }
        }
    }

    #[test]
    fn small_ranks() {
        let a = FpMatrix::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(a.rank(), 2);
        let b = FpMatrix::from_rows(3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(b.rank(), 3);
        let c = FpMatrix::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(c.rank(), 1);
        assert!(FpMatrix::zeros(4, 1, 1).is_err());
    }

    #[test]
    fn kernel_vectors_are_killed() {
        for p in [2u32, 3, 7] {
            let a = FpMatrix::from_rows(p, &[vec![1, 2, 3, 4, 5], vec![2, 4, 6, 8, 10], vec![0, 1, 1, 0, 1]]).unwrap();
            let ker = a.kernel_basis();
            assert_eq!(ker.len(), a.nullity());
            for v in ker {
                let col: Vec<Vec<i64>> = v.iter().map(|&x| vec![x as i64]).collect();
                let prod = a.mul(&FpMatrix::from_rows(p, &col).unwrap()).unwrap();
                assert_eq!(prod.rank(), 0);
            }
        }
    }
}
