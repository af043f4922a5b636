//! Dense matrices over an exact field, with Gaussian elimination.

use alloc::vec::Vec;

use super::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: alloc::vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            data.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
            }
            acc
        })
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).add(other.get(r, c)))
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).mul(s))
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).neg())
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for c in 0..self.cols {
                    acc = acc.add(&self.get(r, c).mul(&v[c]));
                }
                acc
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<F>) -> Matrix<F> {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self.get(r, c).clone()
            } else if r >= self.rows && c >= self.cols {
                other.get(r - self.rows, c - self.cols).clone()
            } else {
                F::zero()
            }
        })
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for k in 0..self.cols {
                    self.data.swap(r * self.cols + k, pr * self.cols + k);
                }
            }
            let inv = self.get(r, c).inv();
            for k in c..self.cols {
                let v = self.get(r, k).mul(&inv);
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for k in c..self.cols {
                        let v = self.get(i, k).sub(&factor.mul(self.get(r, k)));
                        self.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = alloc::vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let rhs = Matrix::from_fn(self.rows, 1, |r, _| b[r].clone());
        let mut aug = self.hstack(&rhs);
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Indices of a maximal set of rows completing `span_rows` to a basis
    /// of the full row space F^cols (the rows of `self` are candidates in
    /// order; `self` is usually the identity).
    pub fn complement_of_rowspace(span_rows: &Matrix<F>) -> Vec<usize> {
        let cols = span_rows.cols;
        let mut m = span_rows.clone();
        let mut chosen = Vec::new();
        for i in 0..cols {
            let mut unit = alloc::vec![F::zero(); cols];
            unit[i] = F::one();
            let cand = m.vstack(&Matrix::from_rows(alloc::vec![unit]));
            if cand.rank() > m.rank() {
                chosen.push(i);
                m = cand;
            }
        }
        chosen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::Rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(a.apply(&ker[0]).iter().all(Field::is_zero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let x = a.solve(&[Rat::from_int(3), Rat::from_int(1)]).unwrap();
        assert_eq!(a.apply(&x), alloc::vec![Rat::from_int(3), Rat::from_int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[Rat::from_int(0), Rat::from_int(1)]).is_none());
    }

    #[test]
    fn complement() {
        let a = m(&[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(Matrix::complement_of_rowspace(&a), alloc::vec![1]);
    }
}
