//! Small dense matrices over any [`Ring`].

use std::fmt;

use crate::field::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R: Ring> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Matrix with entries in a field.
pub type FieldMatrix<F> = Matrix<F>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(ctx: &R::Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![R::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &R::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, R::one(ctx));
        }
        m
    }

    /// Row-major entries. Panics if `data.len() != rows * cols`.
    pub fn from_vec(ctx: &R::Ctx, rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix shape");
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(ctx: &R::Ctx, rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(ctx, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<R> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Self::from_vec(&self.ctx, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &R) -> Self {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Self::from_vec(&self.ctx, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| a.neg()).collect();
        Self::from_vec(&self.ctx, self.rows, self.cols, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix::from_vec(ctx, self.rows, self.cols, self.data.iter().map(f).collect())
    }
}

impl<F: Field> Matrix<F> {
    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.ctx, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.get(col, col).inv().expect("nonzero pivot");
            for c in 0..n {
                let v = a.get(col, c).mul(&p);
                a.set(col, c, v);
                let v = inv.get(col, c).mul(&p);
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let v = a.get(r, c).sub(&f.mul(a.get(col, c)));
                    a.set(r, c, v);
                    let v = inv.get(r, c).sub(&f.mul(inv.get(col, c)));
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    /// Determinant by Gaussian elimination; panics unless square.
    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = F::one(&self.ctx);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return F::zero(&self.ctx);
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                }
                det = det.neg();
            }
            let p = a.get(col, col).clone();
            det = det.mul(&p);
            let p_inv = p.inv().expect("nonzero pivot");
            for r in (col + 1)..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).mul(&p_inv);
                for c in col..n {
                    let v = a.get(r, c).sub(&f.mul(a.get(col, c)));
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(F::zero(&self.ctx), |acc, c| acc.add(&self.get(r, c).mul(&v[c])))
            })
            .collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).neg())
            })
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}
