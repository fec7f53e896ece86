//! Brute-force reference computations used to cross-check the engine.
//!
//! Nothing here touches the elimination code in [`crate::generic`].

use thiserror::Error;

use crate::field::{Field, Ring};
use crate::matrix::Matrix;
use crate::upoly::UPoly;

pub const LEIBNIZ_MAX: usize = 8;
pub const COFACTOR_MAX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix size {n} exceeds the oracle limit {max}")]
    TooLarge { n: usize, max: usize },
}

/// A permutation of `0..n` with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    mapping: Vec<usize>,
    parity: i8,
}

impl Permutation {
    /// `None` unless `mapping` is a bijection on `0..n`.
    pub fn new(mapping: Vec<usize>) -> Option<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        let mut inversions = 0usize;
        for i in 0..n {
            for j in (i + 1)..n {
                if mapping[i] > mapping[j] {
                    inversions += 1;
                }
            }
        }
        let parity = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some(Permutation { mapping, parity })
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    /// `1` for even, `-1` for odd.
    pub fn parity(&self) -> i8 {
        self.parity
    }

    /// All `n!` permutations in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation::new(current.clone()).expect("bijection"));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

fn check_square<R: Ring>(a: &Matrix<R>, max: usize) -> Result<usize, OracleError> {
    if !a.is_square() {
        return Err(OracleError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > max {
        return Err(OracleError::TooLarge { n: a.rows(), max });
    }
    Ok(a.rows())
}

fn permutation_sum<R: Ring>(a: &Matrix<R>) -> R {
    let n = a.rows();
    let ctx = a.ctx();
    let mut acc = R::zero(ctx);
    for p in Permutation::all(n) {
        let mut term = R::one(ctx);
        for (i, &j) in p.mapping().iter().enumerate() {
            term = term.mul(a.get(i, j));
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        acc = if p.parity() > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Alternating sum over all permutations.
pub fn leibniz_det<R: Ring>(a: &Matrix<R>) -> Result<R, OracleError> {
    check_square(a, LEIBNIZ_MAX)?;
    Ok(permutation_sum(a))
}

/// `det(x*I - a)` expanded by permutations over `F[x]`.
pub fn cofactor_charpoly<F: Field>(a: &Matrix<F>) -> Result<UPoly<F>, OracleError> {
    let n = check_square(a, COFACTOR_MAX)?;
    let ctx = a.ctx();
    let mut m = Matrix::zeros(ctx, n, n);
    for i in 0..n {
        for j in 0..n {
            let entry = UPoly::constant(ctx, a.get(i, j).neg());
            let entry = if i == j { entry.add(&UPoly::x(ctx)) } else { entry };
            m.set(i, j, entry);
        }
    }
    Ok(permutation_sum(&m).monic())
}

/// Least-degree monic annihilating polynomial of a square matrix, found by
/// Gauss-Jordan reduction of the flattened powers `I, a, a^2, ...`.
pub fn naive_minpoly<F: Field>(a: &Matrix<F>) -> Result<UPoly<F>, OracleError> {
    let n = check_square(a, usize::MAX)?;
    let ctx = a.ctx();
    // reduced rows: (vector, combination of powers, pivot index)
    let mut basis: Vec<(Vec<F>, Vec<F>, usize)> = Vec::new();
    let mut power: Matrix<F> = Matrix::identity(ctx, n);
    for k in 0..=n * n {
        let mut v = power.entries().to_vec();
        let mut combo = vec![F::zero(ctx); k + 1];
        combo[k] = F::one(ctx);
        for (row, row_combo, p) in &basis {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = x.sub(&f.mul(y));
            }
            for (x, y) in combo.iter_mut().zip(row_combo) {
                *x = x.sub(&f.mul(y));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return Ok(UPoly::new(ctx, combo)),
            Some(p) => {
                let inv = v[p].inv().expect("nonzero");
                let v: Vec<F> = v.iter().map(|x| x.mul(&inv)).collect();
                let combo: Vec<F> = combo.iter().map(|x| x.mul(&inv)).collect();
                for (row, row_combo, _) in basis.iter_mut() {
                    let f = row[p].clone();
                    if f.is_zero() {
                        continue;
                    }
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = x.sub(&f.mul(y));
                    }
                    row_combo.resize(combo.len(), F::zero(ctx));
                    for (x, y) in row_combo.iter_mut().zip(&combo) {
                        *x = x.sub(&f.mul(y));
                    }
                }
                basis.push((v, combo, p));
            }
        }
        power = power.mul(a);
    }
    unreachable!("n^2 + 1 powers are always dependent")
}
