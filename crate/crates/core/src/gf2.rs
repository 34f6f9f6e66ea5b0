//! Dense matrices over GF(2), one `u64` word per row.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<u64>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if cols > 64 {
            return Err(Error::Dimension(format!("{cols} columns exceeds the 64-bit row width")));
        }
        Ok(Gf2Matrix { rows: vec![0; rows], cols })
    }

    /// Builds from `0/1` rows.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension("ragged GF(2) rows".into()));
            }
            for (c, &bit) in row.iter().enumerate() {
                m.set(r, c, bit & 1 == 1);
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> c & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        if bit {
            self.rows[r] |= 1 << c;
        } else {
            self.rows[r] &= !(1 << c);
        }
    }

    /// Submatrix on the given 0-based rows and columns, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Gf2Matrix { rows: vec![0; rows.len()], cols: cols.len() };
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                out.set(ri, ci, self.get(r, c));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let bit = 1u64 << c;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<bool> {
        if self.nrows() != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(self.rank() == self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let m = Gf2Matrix::from_rows(&[vec![1, 1, 1], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert!(m.det().unwrap());
        let s = Gf2Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(s.rank(), 2);
        assert!(!s.det().unwrap());
        assert_eq!(Gf2Matrix::zeros(3, 3).unwrap().rank(), 0);
        assert!(Gf2Matrix::zeros(2, 65).is_err());
    }

    #[test]
    fn select_submatrix() {
        let m = Gf2Matrix::from_rows(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let s = m.select(&[2, 0], &[1]);
        assert_eq!((s.nrows(), s.ncols()), (2, 1));
        assert!(s.get(0, 0) && !s.get(1, 0));
    }
}
