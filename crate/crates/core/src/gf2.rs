//! Bit-packed matrices over GF(2).
//!
//! Rows are stored as runs of `u64` words so that row additions (the only
//! operation pivoting and elimination need) are word-parallel XORs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Gf2Matrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from dense 0/1 rows. All rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<bool>], cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::input(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            for (j, &bit) in row.iter().enumerate() {
                m.set(i, j, bit);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.words[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / WORD];
        if bit {
            *w |= 1 << (c % WORD);
        } else {
            *w &= !(1 << (c % WORD));
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.words[r * self.stride + c / WORD] ^= 1 << (c % WORD);
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cols).filter(move |&c| self.get(r, c))
    }

    pub fn col_ones(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows).filter(move |&r| self.get(r, c))
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `row[dst] ^= row[src] & mask`, word by word.
    fn xor_row_masked(&mut self, dst: usize, src: usize, mask: &[u64]) {
        let s = self.stride;
        for k in 0..s {
            let v = self.words[src * s + k] & mask[k];
            self.words[dst * s + k] ^= v;
        }
    }

    /// GF(2) pivot on the nonzero entry `(r, c)`: every other row with a one in
    /// column `c` receives row `r` restricted to the columns other than `c`.
    /// Row `r` and column `c` are left unchanged, which is the block update
    /// `D -> D + b a` on the complement of the pivot row and column.
    pub fn pivot(&mut self, r: usize, c: usize) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::input(format!("pivot ({r},{c}) out of range")));
        }
        if !self.get(r, c) {
            return Err(Error::precondition(format!("entry ({r},{c}) is zero")));
        }
        let mut mask = vec![!0u64; self.stride];
        mask[c / WORD] &= !(1 << (c % WORD));
        for i in 0..self.rows {
            if i != r && self.get(i, c) {
                self.xor_row_masked(i, r, &mask);
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Gf2Matrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::input("row counts differ in concatenation"));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                m.set(r, c, true);
            }
            for c in other.row_ones(r) {
                m.set(r, self.cols + c, true);
            }
        }
        Ok(m)
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row_words(r).to_vec()).collect();
        rank_of_rows(&mut rows, self.cols)
    }

    /// `"0101..."` in row-major order.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
        }
        s
    }

    pub fn from_bit_string(rows: usize, cols: usize, bits: &str) -> Result<Self> {
        if bits.len() != rows * cols {
            return Err(Error::input(format!(
                "bit string has length {}, expected {}",
                bits.len(),
                rows * cols
            )));
        }
        let mut m = Self::zeros(rows, cols);
        for (k, ch) in bits.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(k / cols.max(1), k % cols.max(1), true),
                other => return Err(Error::input(format!("invalid bit character {other:?}"))),
            }
        }
        Ok(m)
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Rank over GF(2) of a set of bit-vectors `width` bits wide. Destroys `rows`.
pub fn rank_of_rows(rows: &mut [Vec<u64>], width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let (w, b) = (col / WORD, 1u64 << (col % WORD));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                for (d, s) in row.iter_mut().zip(pivot_row.iter()) {
                    *d ^= *s;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over GF(2) of at most 64-bit-wide vectors.
pub fn rank_u64(vectors: &[u64]) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for &v in vectors {
        let mut x = v;
        while x != 0 {
            let top = 63 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                rank += 1;
                break;
            }
            x ^= basis[top];
        }
    }
    rank
}

/// Serialized form `{"rows": r, "cols": c, "bits": "0101..."}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Gf2MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub bits: String,
}

impl From<&Gf2Matrix> for Gf2MatrixJson {
    fn from(m: &Gf2Matrix) -> Self {
        Gf2MatrixJson {
            rows: m.rows,
            cols: m.cols,
            bits: m.to_bit_string(),
        }
    }
}

impl TryFrom<Gf2MatrixJson> for Gf2Matrix {
    type Error = Error;

    fn try_from(j: Gf2MatrixJson) -> Result<Self> {
        Gf2Matrix::from_bit_string(j.rows, j.cols, &j.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivot_matches_block_formula() {
        // [[1,1,0],[1,0,1],[0,1,1]] pivot on (0,0): D + b a with a=(1,0), b=(1,0)^T
        let mut m = Gf2Matrix::from_rows(
            &[
                vec![true, true, false],
                vec![true, false, true],
                vec![false, true, true],
            ],
            3,
        )
        .unwrap();
        m.pivot(0, 0).unwrap();
        assert_eq!(m.to_bit_string(), "110111011");
    }

    #[test]
    fn pivot_rejects_zero_entry() {
        let mut m = Gf2Matrix::zeros(2, 2);
        assert!(matches!(m.pivot(0, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank_of_wide_rows() {
        let mut m = Gf2Matrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 3, true);
        m.set(2, 3, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_u64(&[0b011, 0b110, 0b101]), 2);
    }

    #[test]
    fn bit_string_round_trip() {
        let m = Gf2Matrix::from_bit_string(2, 3, "101011").unwrap();
        assert!(m.get(0, 0) && !m.get(0, 1) && m.get(1, 2));
        assert_eq!(m.to_bit_string(), "101011");
        assert!(Gf2Matrix::from_bit_string(2, 3, "10101").is_err());
    }
}
