//! Small dense matrices over an exact field. Only what the realization
//! oracle needs: products, row reduction, kernels and subspace intersection.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::field::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; panics on ragged input.
    pub fn from_rows(field: Field, rows: Vec<Vec<Elem>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, n: usize, cols: &[Vec<Elem>]) -> Matrix {
        let mut m = Matrix::zero(field, n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    /// `self - c I`.
    pub fn shift(&self, c: &Elem) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let x = m.get(i, i) - c;
            m.set(i, i, x);
        }
        m
    }

    pub fn pow(&self, e: u32) -> Matrix {
        (0..e).fold(Matrix::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let x = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// A basis of the column space, taken from the original columns.
    pub fn column_basis(&self) -> Vec<Vec<Elem>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }
}

/// A basis of `span(u) ∩ span(w)` in an `n`-dimensional space.
pub fn intersect(field: Field, n: usize, u: &[Vec<Elem>], w: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let u = Matrix::from_columns(field, n, u).column_basis();
    let w = Matrix::from_columns(field, n, w).column_basis();
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    let neg_w: Vec<Vec<Elem>> = w.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
    let stacked: Vec<Vec<Elem>> = u.iter().chain(neg_w.iter()).cloned().collect();
    let joint = Matrix::from_columns(field, n, &stacked);
    let um = Matrix::from_columns(field, n, &u);
    let vectors: Vec<Vec<Elem>> = joint
        .kernel()
        .into_iter()
        .map(|k| um.apply(&k[..u.len()]))
        .collect();
    if vectors.is_empty() {
        return vectors;
    }
    Matrix::from_columns(field, n, &vectors).column_basis()
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let x = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;

    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| Field::Rationals.from_i64(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(Elem::is_zero));
    }

    #[test]
    fn product_and_display() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &Matrix::identity(Field::Rationals, 2), a);
        assert_eq!((&a * &a).to_string(), "[[7, 10], [15, 22]]");
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rationals;
        let xy = [v(&[1, 0, 0]), v(&[0, 1, 0])];
        let yz = [v(&[0, 1, 0]), v(&[0, 0, 1])];
        let meet = intersect(f, 3, &xy, &yz);
        assert_eq!(meet.len(), 1);
        assert!(meet[0][0].is_zero() && meet[0][2].is_zero() && !meet[0][1].is_zero());
        assert!(intersect(f, 3, &xy[..1], &yz).is_empty());
    }
}
