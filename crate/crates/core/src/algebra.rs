//! Finite-dimensional algebras presented by structure constants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::field::{Field, Ring};
use crate::generic::{GenericData, GenericError};
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Shape(String),
    #[error("the unit element must be nonzero")]
    ZeroUnit,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("the algebra is not associative")]
    NotAssociative,
    #[error("value does not lie in the algebra's base field")]
    FieldMismatch,
    #[error("basis change matrix is singular")]
    SingularBasisChange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Associative,
    Jordan,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Jordan => "jordan",
        })
    }
}

pub(crate) type GenericMemo<F> = OnceLock<Result<Arc<GenericData<F>>, GenericError>>;

/// An algebra `A` over `F` with basis `a_1..a_m`; `table[(i*m + j)*m + k]` is
/// the `a_k` coordinate of `a_i * a_j`.
pub struct AlgebraSpec<F: Field> {
    name: String,
    field: F::Ctx,
    basis: Vec<String>,
    unit: Vec<F>,
    kind: AlgebraKind,
    table: Vec<F>,
    pub(crate) generic: GenericMemo<F>,
}

impl<F: Field> AlgebraSpec<F> {
    /// `table[i][j]` lists the coordinates of `a_i * a_j`.
    pub fn new(
        name: impl Into<String>,
        field: F::Ctx,
        basis: Vec<String>,
        unit: Vec<F>,
        kind: AlgebraKind,
        table: Vec<Vec<Vec<F>>>,
    ) -> Result<Arc<Self>, AlgebraError> {
        let m = basis.len();
        if m == 0 {
            return Err(AlgebraError::Shape("dimension must be at least 1".into()));
        }
        if unit.len() != m {
            return Err(AlgebraError::Shape(format!("unit has {} coordinates, expected {m}", unit.len())));
        }
        if table.len() != m {
            return Err(AlgebraError::Shape(format!("table has {} rows, expected {m}", table.len())));
        }
        let mut flat = Vec::with_capacity(m * m * m);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != m {
                return Err(AlgebraError::Shape(format!("table row {i} has {} entries", row.len())));
            }
            for (j, coords) in row.into_iter().enumerate() {
                if coords.len() != m {
                    return Err(AlgebraError::Shape(format!(
                        "product ({i}, {j}) has {} coordinates",
                        coords.len()
                    )));
                }
                flat.extend(coords);
            }
        }
        if flat.iter().chain(unit.iter()).any(|v| v.ctx() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        if unit.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::ZeroUnit);
        }
        Ok(Arc::new(AlgebraSpec {
            name: name.into(),
            field,
            basis,
            unit,
            kind,
            table: flat,
            generic: OnceLock::new(),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &F::Ctx {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn unit_coords(&self) -> &[F] {
        &self.unit
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Coordinates of `a_i * a_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        let m = self.dim();
        &self.table[(i * m + j) * m..(i * m + j + 1) * m]
    }

    /// Same algebra data under another name (the generic memo is not shared).
    pub fn renamed(&self, name: impl Into<String>) -> Arc<Self> {
        Arc::new(AlgebraSpec {
            name: name.into(),
            field: self.field.clone(),
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            kind: self.kind,
            table: self.table.clone(),
            generic: OnceLock::new(),
        })
    }

    /// Same structure with a single structure constant replaced.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: F) -> Arc<Self> {
        let m = self.dim();
        let mut table = self.table.clone();
        table[(i * m + j) * m + k] = value;
        Arc::new(AlgebraSpec {
            name: self.name.clone(),
            field: self.field.clone(),
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            kind: self.kind,
            table,
            generic: OnceLock::new(),
        })
    }

    /// Structural equality, ignoring the generic memo.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.field == other.field
            && self.kind == other.kind
            && self.basis == other.basis
            && self.unit == other.unit
            && self.table == other.table
    }

    /// Bilinear product of coordinate vectors over any ring carrying the
    /// structure constants through `lift`.
    pub fn mul_with<R: Ring>(&self, a: &[R], b: &[R], lift: impl Fn(&F) -> R, zero: &R) -> Vec<R> {
        bilinear(self.dim(), &self.table, a, b, lift, zero)
    }

    pub(crate) fn table(&self) -> &[F] {
        &self.table
    }

    pub fn mul_coords(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.mul_with(a, b, |c| c.clone(), &F::zero(&self.field))
    }

    /// Checks the unit axiom on every basis element, associativity on all
    /// `m^3` basis triples (associative kind) or commutativity on all pairs
    /// (Jordan kind).
    pub fn validate(&self) -> ValidationReport {
        let m = self.dim();
        let mut report = ValidationReport {
            algebra: self.name.clone(),
            kind: self.kind,
            dim: m,
            violations: Vec::new(),
        };
        let basis_vec = |i: usize| -> Vec<F> {
            (0..m)
                .map(|k| if k == i { F::one(&self.field) } else { F::zero(&self.field) })
                .collect()
        };
        for i in 0..m {
            let e = basis_vec(i);
            if self.mul_coords(&self.unit, &e) != e {
                report.violations.push(Violation::LeftUnit(i));
            }
            if self.mul_coords(&e, &self.unit) != e {
                report.violations.push(Violation::RightUnit(i));
            }
        }
        match self.kind {
            AlgebraKind::Associative => {
                for i in 0..m {
                    for j in 0..m {
                        let ij = self.product(i, j).to_vec();
                        for k in 0..m {
                            let left = self.mul_coords(&ij, &basis_vec(k));
                            let jk = self.product(j, k).to_vec();
                            let right = self.mul_coords(&basis_vec(i), &jk);
                            if left != right {
                                report.violations.push(Violation::Associativity(i, j, k));
                            }
                        }
                    }
                }
            }
            AlgebraKind::Jordan => {
                for i in 0..m {
                    for j in (i + 1)..m {
                        if self.product(i, j) != self.product(j, i) {
                            report.violations.push(Violation::Commutativity(i, j));
                        }
                    }
                }
            }
        }
        report
    }

    pub fn zero_element(self: &Arc<Self>) -> AlgElement<F> {
        AlgElement {
            algebra: Arc::clone(self),
            coords: vec![F::zero(&self.field); self.dim()],
        }
    }

    pub fn unit_element(self: &Arc<Self>) -> AlgElement<F> {
        AlgElement {
            algebra: Arc::clone(self),
            coords: self.unit.clone(),
        }
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> AlgElement<F> {
        let mut e = self.zero_element();
        e.coords[i] = F::one(&self.field);
        e
    }

    pub fn element(self: &Arc<Self>, coords: Vec<F>) -> Result<AlgElement<F>, AlgebraError> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::Shape(format!(
                "element has {} coordinates, expected {}",
                coords.len(),
                self.dim()
            )));
        }
        if coords.iter().any(|c| c.ctx() != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(AlgElement {
            algebra: Arc::clone(self),
            coords,
        })
    }

    /// Re-present the algebra in the basis `b_j = sum_i p[i][j] a_i`
    /// (columns of `p` are the new basis vectors in old coordinates).
    pub fn change_basis(&self, p: &Matrix<F>, labels: Vec<String>) -> Result<Arc<Self>, AlgebraError> {
        let m = self.dim();
        if p.rows() != m || p.cols() != m || labels.len() != m {
            return Err(AlgebraError::Shape("basis change must be m x m".into()));
        }
        let p_inv = p.inverse().ok_or(AlgebraError::SingularBasisChange)?;
        let cols: Vec<Vec<F>> = (0..m).map(|j| p.column(j)).collect();
        let table = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| p_inv.apply(&self.mul_coords(&cols[i], &cols[j])))
                    .collect()
            })
            .collect();
        let unit = p_inv.apply(&self.unit);
        Self::new(self.name.clone(), self.field.clone(), labels, unit, self.kind, table)
    }
}

impl<F: Field> fmt::Debug for AlgebraSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraSpec")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("kind", &self.kind)
            .field("basis", &self.basis)
            .finish()
    }
}

/// A failed axiom, in basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    LeftUnit(usize),
    RightUnit(usize),
    Associativity(usize, usize, usize),
    Commutativity(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub algebra: String,
    pub kind: AlgebraKind,
    pub dim: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// One human-readable line per violation, with basis labels.
    pub fn describe(&self, labels: &[String]) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| match v {
                Violation::LeftUnit(i) => format!("unit axiom fails: 1*{} != {}", labels[*i], labels[*i]),
                Violation::RightUnit(i) => format!("unit axiom fails: {}*1 != {}", labels[*i], labels[*i]),
                Violation::Associativity(i, j, k) => format!(
                    "associativity fails at ({}, {}, {})",
                    labels[*i], labels[*j], labels[*k]
                ),
                Violation::Commutativity(i, j) => {
                    format!("commutativity fails at ({}, {})", labels[*i], labels[*j])
                }
            })
            .collect()
    }
}

pub fn validate_algebra<F: Field>(spec: &AlgebraSpec<F>) -> ValidationReport {
    spec.validate()
}

/// An element of an algebra in basis coordinates.
#[derive(Clone)]
pub struct AlgElement<F: Field> {
    algebra: Arc<AlgebraSpec<F>>,
    coords: Vec<F>,
}

impl<F: Field> PartialEq for AlgElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coords == other.coords
    }
}

impl<F: Field> Eq for AlgElement<F> {}

impl<F: Field> AlgElement<F> {
    pub fn algebra(&self) -> &Arc<AlgebraSpec<F>> {
        &self.algebra
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn field(&self) -> &F::Ctx {
        self.algebra.field()
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.same_structure(&other.algebra)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    fn with_coords(&self, coords: Vec<F>) -> Self {
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.with_coords(self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.with_coords(self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect()))
    }

    pub fn neg(&self) -> Self {
        self.with_coords(self.coords.iter().map(|a| a.neg()).collect())
    }

    pub fn scale(&self, c: &F) -> Result<Self, AlgebraError> {
        if c.ctx() != *self.field() {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(self.with_coords(self.coords.iter().map(|a| a.mul(c)).collect()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.with_coords(self.algebra.mul_coords(&self.coords, &other.coords)))
    }

    /// Left powers: `a^0 = 1`, `a^k = a * a^(k-1)`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = self.algebra.unit_element();
        for _ in 0..k {
            acc = self.with_coords(self.algebra.mul_coords(&self.coords, &acc.coords));
        }
        acc
    }

    /// Matrix of `b -> a*b` (left) or `b -> b*a` (right); column `j` holds the
    /// coordinates of the image of `a_j`.
    pub fn regular_representation(&self, side: Side) -> Matrix<F> {
        let m = self.algebra.dim();
        let field = self.field().clone();
        let mut out = Matrix::zeros(&field, m, m);
        for j in 0..m {
            let e = self.algebra.basis_element(j);
            let img = match side {
                Side::Left => self.algebra.mul_coords(&self.coords, &e.coords),
                Side::Right => self.algebra.mul_coords(&e.coords, &self.coords),
            };
            for (i, v) in img.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for AlgElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", coords.join(", "))
    }
}

impl<F: Field> fmt::Debug for AlgElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.algebra.name(), self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Operation selector for [`elem_arith`].
#[derive(Clone, Debug)]
pub enum ElemOp<'a, F: Field> {
    Add(&'a AlgElement<F>),
    Sub(&'a AlgElement<F>),
    Scale(&'a F),
    Mul(&'a AlgElement<F>),
}

pub fn elem_arith<F: Field>(a: &AlgElement<F>, op: ElemOp<'_, F>) -> Result<AlgElement<F>, AlgebraError> {
    match op {
        ElemOp::Add(b) => a.add(b),
        ElemOp::Sub(b) => a.sub(b),
        ElemOp::Scale(c) => a.scale(c),
        ElemOp::Mul(b) => a.mul(b),
    }
}

pub fn regular_representation<F: Field>(a: &AlgElement<F>, side: Side) -> Matrix<F> {
    a.regular_representation(side)
}

/// `M_r(inner)`: basis `E_kl (x) a_i` at index `(k*r + l)*m + i`, with
/// `(E_kl (x) a_i)(E_pq (x) a_j) = delta_lp E_kq (x) a_i a_j`.
pub fn matrix_algebra_over<F: Field>(inner: &AlgebraSpec<F>, r: usize) -> Result<Arc<AlgebraSpec<F>>, AlgebraError> {
    if r == 0 {
        return Err(AlgebraError::Shape("matrix size must be at least 1".into()));
    }
    if inner.kind() != AlgebraKind::Associative || !inner.validate().is_valid() {
        return Err(AlgebraError::NotAssociative);
    }
    let m = inner.dim();
    let dim = r * r * m;
    let field = inner.field().clone();
    let zero = F::zero(&field);
    let index = |k: usize, l: usize, i: usize| (k * r + l) * m + i;
    let mut basis = Vec::with_capacity(dim);
    for k in 0..r {
        for l in 0..r {
            for i in 0..m {
                basis.push(if m == 1 {
                    format!("E{}{}", k + 1, l + 1)
                } else {
                    format!("E{}{}*{}", k + 1, l + 1, inner.basis_labels()[i])
                });
            }
        }
    }
    let mut table = vec![vec![vec![zero.clone(); dim]; dim]; dim];
    for k in 0..r {
        for l in 0..r {
            for i in 0..m {
                for q in 0..r {
                    for j in 0..m {
                        // only p == l contributes
                        let coords = inner.product(i, j);
                        let target = &mut table[index(k, l, i)][index(l, q, j)];
                        for (s, c) in coords.iter().enumerate() {
                            target[index(k, q, s)] = c.clone();
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![zero; dim];
    for k in 0..r {
        for (s, c) in inner.unit_coords().iter().enumerate() {
            unit[index(k, k, s)] = c.clone();
        }
    }
    let name = format!("M{}({})", r, inner.name());
    AlgebraSpec::new(name, field, basis, unit, AlgebraKind::Associative, table)
}

/// Product through a flat structure-constant table.
pub(crate) fn bilinear<F: Field, R: Ring>(
    m: usize,
    table: &[F],
    a: &[R],
    b: &[R],
    lift: impl Fn(&F) -> R,
    zero: &R,
) -> Vec<R> {
    let mut out = vec![zero.clone(); m];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let coords = &table[(i * m + j) * m..(i * m + j + 1) * m];
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            let p = ai.mul(bj);
            for (k, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                out[k] = if c.is_one() {
                    out[k].add(&p)
                } else if c.neg().is_one() {
                    out[k].sub(&p)
                } else {
                    out[k].add(&p.mul(&lift(c)))
                };
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{FieldDescriptor, FieldValue};

    fn q(n: i64) -> FieldValue {
        FieldValue::rational(n, 1)
    }

    /// Quaternions over ℚ with basis (1, i, j, k), built by hand.
    fn quaternions() -> Arc<AlgebraSpec<FieldValue>> {
        let signs: [[(usize, i64); 4]; 4] = [
            [(0, 1), (1, 1), (2, 1), (3, 1)],
            [(1, 1), (0, -1), (3, 1), (2, -1)],
            [(2, 1), (3, -1), (0, -1), (1, 1)],
            [(3, 1), (2, 1), (1, -1), (0, -1)],
        ];
        let table = signs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(k, s)| (0..4).map(|t| if t == k { q(s) } else { q(0) }).collect())
                    .collect()
            })
            .collect();
        AlgebraSpec::new(
            "H",
            FieldDescriptor::Rationals,
            ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect(),
            vec![q(1), q(0), q(0), q(0)],
            AlgebraKind::Associative,
            table,
        )
        .unwrap()
    }

    #[test]
    fn quaternion_products() {
        let h = quaternions();
        let i = h.basis_element(1);
        let j = h.basis_element(2);
        assert_eq!(i.mul(&j).unwrap(), h.basis_element(3));
        assert_eq!(j.mul(&i).unwrap(), h.basis_element(3).neg());
        let a = h.element(vec![q(2), q(-1), q(3), q(5)]).unwrap();
        assert_eq!(h.unit_element().mul(&a).unwrap(), a);
        assert!(h.validate().is_valid());
    }

    #[test]
    fn broken_sign_reports_triples() {
        let h = quaternions();
        // i*j = -k instead of k
        let broken = h.with_constant(1, 2, 3, q(-1));
        let report = broken.validate();
        assert!(report.violations.contains(&Violation::Associativity(1, 1, 2)));
        // j*i = +k instead of -k
        let broken = h.with_constant(2, 1, 3, q(1));
        let report = broken.validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&Violation::Associativity(2, 1, 1)));
        assert!(!report.violations.contains(&Violation::Associativity(1, 1, 2)));
        let lines = report.describe(h.basis_labels());
        assert!(lines.iter().any(|l| l == "associativity fails at (j, i, i)"));
    }

    #[test]
    fn left_regular_representation_of_i() {
        let h = quaternions();
        let li = h.basis_element(1).regular_representation(Side::Left);
        // columns: i*1 = i, i*i = -1, i*j = k, i*k = -j
        assert_eq!(li.column(0), vec![q(0), q(1), q(0), q(0)]);
        assert_eq!(li.column(1), vec![q(-1), q(0), q(0), q(0)]);
        assert_eq!(li.column(2), vec![q(0), q(0), q(0), q(1)]);
        assert_eq!(li.column(3), vec![q(0), q(0), q(-1), q(0)]);
        let one = h.unit_element().regular_representation(Side::Left);
        assert_eq!(one, Matrix::identity(&FieldDescriptor::Rationals, 4));
    }

    #[test]
    fn regular_representation_is_multiplicative() {
        let h = quaternions();
        let a = h.element(vec![q(1), q(2), q(-1), q(3)]).unwrap();
        let b = h.element(vec![q(0), q(1), q(4), q(-2)]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab.regular_representation(Side::Left),
            a.regular_representation(Side::Left).mul(&b.regular_representation(Side::Left))
        );
        assert_eq!(
            ab.regular_representation(Side::Right),
            b.regular_representation(Side::Right).mul(&a.regular_representation(Side::Right))
        );
        // L_a(1) = a
        let la = a.regular_representation(Side::Left);
        assert_eq!(la.apply(h.unit_coords()), a.coords());
    }

    #[test]
    fn matrices_over_quaternions() {
        let h = quaternions();
        let m2h = matrix_algebra_over(&h, 2).unwrap();
        assert_eq!(m2h.dim(), 16);
        assert!(m2h.validate().is_valid());
        assert_eq!(m2h.basis_labels()[5], "E12*i");
    }

    #[test]
    fn mismatch_errors() {
        let h = quaternions();
        let h2 = h.with_constant(1, 2, 3, q(-1));
        let a = h.unit_element();
        let b = h2.unit_element();
        assert_eq!(a.mul(&b), Err(AlgebraError::AlgebraMismatch));
        assert!(h.element(vec![q(1)]).is_err());
        let f2 = FieldDescriptor::PrimeField(2);
        assert_eq!(a.scale(&f2.one()), Err(AlgebraError::FieldMismatch));
    }

    #[test]
    fn basis_change_preserves_structure() {
        let h = quaternions();
        let p = Matrix::from_rows(
            &FieldDescriptor::Rationals,
            vec![
                vec![q(1), q(1), q(0), q(0)],
                vec![q(0), q(1), q(2), q(0)],
                vec![q(0), q(0), q(1), q(-1)],
                vec![q(1), q(0), q(0), q(1)],
            ],
        );
        let labels = (1..=4).map(|i| format!("b{i}")).collect();
        let h2 = h.change_basis(&p, labels).unwrap();
        assert!(h2.validate().is_valid());
        assert_eq!(p.apply(h2.unit_coords()), h.unit_coords());
    }
}
