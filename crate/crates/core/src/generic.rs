//! Generic minimal polynomial of `t1*a1 + ... + tm*am` and its specializations.
//!
//! Powers of the generic element are reduced row by row with fraction-free
//! (Bareiss) elimination over `F[t1..tm]`, carrying an identity block so that
//! the first dependency directly yields the relation between powers.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{bilinear, AlgElement, AlgebraKind, AlgebraSpec, Side};
use crate::field::{binomial, Field, Ring};
use crate::matrix::Matrix;
use crate::mpoly::{MPoly, PolyRing};
use crate::upoly::UPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenericError {
    #[error("powers of the generic element are ambiguous: g^{i} * g^{j} differs from g^{sum}", sum = i + j)]
    PowerAssociativityViolated { i: usize, j: usize },
    #[error("a minimal polynomial coefficient failed to divide exactly (invalid algebra or internal error)")]
    InternalNonPolynomialCoefficient,
    #[error("element does not belong to this algebra")]
    AlgebraMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("value does not lie in the algebra's base field")]
    FieldMismatch,
    #[error("matrix shape does not match the matrix algebra")]
    ShapeMismatch,
}

/// A reduced row together with its combination of the input rows.
struct PivotRow<R> {
    left: Vec<R>,
    aug: Vec<R>,
    col: usize,
}

/// Incremental fraction-free row reduction. Rows are pushed one at a time;
/// the first row that reduces to zero is reported with its combination.
pub(crate) struct Eliminator<R: Ring> {
    ctx: R::Ctx,
    pivots: Vec<PivotRow<R>>,
}

impl<R: Ring> Eliminator<R> {
    pub(crate) fn new(ctx: &R::Ctx) -> Self {
        Eliminator {
            ctx: ctx.clone(),
            pivots: Vec::new(),
        }
    }

    fn exact(a: R, d: &R) -> Result<R, GenericError> {
        if d.is_one() || a.is_zero() {
            Ok(a)
        } else {
            a.exact_div(d).ok_or(GenericError::InternalNonPolynomialCoefficient)
        }
    }

    /// Returns the coefficients `mu_0..mu_k` of a vanishing combination of
    /// the pushed rows when `row` (the `k`-th) depends on the previous ones.
    pub(crate) fn push(&mut self, row: Vec<R>) -> Result<Option<Vec<R>>, GenericError> {
        let k = self.pivots.len();
        let zero = R::zero(&self.ctx);
        let mut left = row;
        let mut aug = vec![zero.clone(); k + 1];
        aug[k] = R::one(&self.ctx);
        let one = R::one(&self.ctx);
        for s in 0..k {
            let prev = if s == 0 {
                one.clone()
            } else {
                let p = &self.pivots[s - 1];
                p.left[p.col].clone()
            };
            let piv = &self.pivots[s];
            let p = piv.left[piv.col].clone();
            let f = left[piv.col].clone();
            let combine = |x: &R, y: Option<&R>| -> Result<R, GenericError> {
                let mut v = if x.is_zero() { zero.clone() } else { p.mul(x) };
                if !f.is_zero() {
                    if let Some(y) = y {
                        if !y.is_zero() {
                            v = v.sub(&f.mul(y));
                        }
                    }
                }
                Self::exact(v, &prev)
            };
            let mut new_left = Vec::with_capacity(left.len());
            for (j, x) in left.iter().enumerate() {
                new_left.push(combine(x, Some(&piv.left[j]))?);
            }
            let mut new_aug = Vec::with_capacity(aug.len());
            for (j, x) in aug.iter().enumerate() {
                new_aug.push(combine(x, piv.aug.get(j))?);
            }
            left = new_left;
            aug = new_aug;
        }
        let col = left
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .min_by_key(|(j, v)| (v.weight(), *j))
            .map(|(j, _)| j);
        match col {
            None => Ok(Some(aug)),
            Some(col) => {
                self.pivots.push(PivotRow { left, aug, col });
                Ok(None)
            }
        }
    }
}

/// Divide a dependency by its top coefficient; returns `a_0..a_k` with
/// `a_k = 1`.
fn monic_relation<R: Ring>(mu: Vec<R>) -> Result<Vec<R>, GenericError> {
    let top = mu.last().cloned().filter(|v| !v.is_zero()).ok_or(GenericError::InternalNonPolynomialCoefficient)?;
    mu.iter()
        .map(|v| {
            if v.is_zero() {
                Ok(v.clone())
            } else {
                v.exact_div(&top).ok_or(GenericError::InternalNonPolynomialCoefficient)
            }
        })
        .collect()
}

/// Memoized result of the generic computation.
#[derive(Debug)]
pub struct GenericData<F: Field> {
    ring: PolyRing<F>,
    coeffs: Vec<MPoly<F>>,
}

/// Names `t1..tm`, or another letter if the field already uses one of them.
pub fn generic_variable_names<F: Field>(field: &F::Ctx, m: usize) -> Vec<String> {
    let taken = F::variable_names(field);
    for prefix in ["t", "s", "w", "z", "gen_t"] {
        let names: Vec<String> = (1..=m).map(|i| format!("{prefix}{i}")).collect();
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
    }
    (1..=m).map(|i| format!("gen_t{i}_")).collect()
}

/// The ring `F[t1..tm]` holding the coefficients for `spec`.
pub fn generic_ring<F: Field>(spec: &AlgebraSpec<F>) -> PolyRing<F> {
    PolyRing::new(spec.field().clone(), generic_variable_names::<F>(spec.field(), spec.dim()))
}

fn compute<F: Field>(
    m: usize,
    table: &[F],
    unit: &[F],
    kind: AlgebraKind,
    ring: &PolyRing<F>,
) -> Result<Vec<MPoly<F>>, GenericError> {
    let lift = |c: &F| MPoly::constant(ring, c.clone());
    let zero = MPoly::zero(ring);
    let mul = |a: &[MPoly<F>], b: &[MPoly<F>]| bilinear(m, table, a, b, lift, &zero);
    let gamma: Vec<MPoly<F>> = (0..m).map(|i| MPoly::var(ring, i)).collect();
    let mut powers: Vec<Vec<MPoly<F>>> = vec![unit.iter().map(lift).collect()];
    let mut elim = Eliminator::new(ring);
    let relation = loop {
        let last = powers.last().unwrap().clone();
        if let Some(mu) = elim.push(last)? {
            break monic_relation(mu)?;
        }
        let next = mul(&gamma, powers.last().unwrap());
        powers.push(next);
    };
    let n = relation.len() - 1;
    if kind == AlgebraKind::Jordan {
        while powers.len() <= n + 1 {
            let next = mul(&gamma, powers.last().unwrap());
            powers.push(next);
        }
        for i in 1..=n {
            for j in 1..=(n + 1 - i) {
                if i == 1 {
                    // gamma * gamma^j is the definition of gamma^(j+1)
                    continue;
                }
                if mul(&powers[i], &powers[j]) != powers[i + j] {
                    return Err(GenericError::PowerAssociativityViolated { i, j });
                }
            }
        }
    }
    // relation[k] is the coefficient of x^k; c_i = (-1)^i * relation[n - i]
    Ok((1..=n)
        .map(|i| {
            let a = relation[n - i].clone();
            if i % 2 == 1 {
                a.neg()
            } else {
                a
            }
        })
        .collect())
}

fn compute_for<F: Field>(spec: &AlgebraSpec<F>) -> Result<GenericData<F>, GenericError> {
    let ring = generic_ring(spec);
    let field = spec.field();
    let prime = F::prime_ctx(field);
    if prime != *field {
        let table: Option<Vec<F>> = spec.table().iter().map(|c| c.to_prime()).collect();
        let unit: Option<Vec<F>> = spec.unit_coords().iter().map(|c| c.to_prime()).collect();
        if let (Some(table), Some(unit)) = (table, unit) {
            let prime_ring = PolyRing::new(prime, ring.vars().to_vec());
            let coeffs = compute(spec.dim(), &table, &unit, spec.kind(), &prime_ring)?;
            let coeffs = coeffs
                .iter()
                .map(|c| c.map_coeffs(&ring, |v| F::from_prime(field, v)))
                .collect();
            return Ok(GenericData { ring, coeffs });
        }
    }
    let coeffs = compute(spec.dim(), spec.table(), spec.unit_coords(), spec.kind(), &ring)?;
    Ok(GenericData { ring, coeffs })
}

/// The generic minimal polynomial `x^n - c1 x^(n-1) + ... + (-1)^n cn` of an
/// algebra. Computed once per [`AlgebraSpec`] and shared afterwards.
#[derive(Clone)]
pub struct GenericCharPoly<F: Field> {
    algebra: Arc<AlgebraSpec<F>>,
    data: Arc<GenericData<F>>,
}

pub fn generic_minimal_polynomial<F: Field>(spec: &Arc<AlgebraSpec<F>>) -> Result<GenericCharPoly<F>, GenericError> {
    let data = spec.generic.get_or_init(|| compute_for(spec).map(Arc::new)).clone()?;
    Ok(GenericCharPoly {
        algebra: Arc::clone(spec),
        data,
    })
}

impl<F: Field> GenericCharPoly<F> {
    pub fn algebra(&self) -> &Arc<AlgebraSpec<F>> {
        &self.algebra
    }

    pub fn degree(&self) -> usize {
        self.data.coeffs.len()
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.data.ring
    }

    /// `c1..cn`.
    pub fn coeff_polys(&self) -> &[MPoly<F>] {
        &self.data.coeffs
    }

    /// `ci`, with `c0 = 1`.
    pub fn coeff_poly(&self, i: usize) -> MPoly<F> {
        if i == 0 {
            MPoly::one(&self.data.ring)
        } else {
            self.data.coeffs[i - 1].clone()
        }
    }

    /// Coefficients of `x^0..x^n` of the generic polynomial.
    pub fn polynomial_coeffs(&self) -> Vec<MPoly<F>> {
        signed_to_coeffs(&self.data.coeffs, &MPoly::one(&self.data.ring))
    }

    pub fn render(&self) -> String {
        render_generic(&self.polynomial_coeffs(), "x")
    }

    fn check(&self, a: &AlgElement<F>) -> Result<(), GenericError> {
        if Arc::ptr_eq(a.algebra(), &self.algebra) || a.algebra().same_structure(&self.algebra) {
            Ok(())
        } else {
            Err(GenericError::AlgebraMismatch)
        }
    }

    /// `c1(a)..cn(a)`.
    pub fn coefficients(&self, a: &AlgElement<F>) -> Result<Vec<F>, GenericError> {
        self.check(a)?;
        Ok(self.coefficients_at(a.coords(), |c| c.clone(), &F::one(a.field())))
    }

    /// `c1..cn` evaluated at a point of any ring receiving `F` through `lift`.
    pub fn coefficients_at<R: Ring>(&self, point: &[R], lift: impl Fn(&F) -> R, one: &R) -> Vec<R> {
        self.data
            .coeffs
            .iter()
            .map(|c| c.eval_with(point, &lift, one))
            .collect()
    }

    pub fn coefficient(&self, i: usize, a: &AlgElement<F>) -> Result<F, GenericError> {
        self.check(a)?;
        if i == 0 {
            return Ok(F::one(a.field()));
        }
        Ok(self.data.coeffs[i - 1].eval_with(a.coords(), |c| c.clone(), &F::one(a.field())))
    }

    pub fn char_poly(&self, a: &AlgElement<F>) -> Result<UPoly<F>, GenericError> {
        let cs = self.coefficients(a)?;
        let ctx = a.field();
        Ok(UPoly::new(ctx, signed_to_coeffs(&cs, &F::one(ctx))))
    }

    pub fn trace(&self, a: &AlgElement<F>) -> Result<F, GenericError> {
        self.coefficient(1, a)
    }

    pub fn det(&self, a: &AlgElement<F>) -> Result<F, GenericError> {
        self.coefficient(self.degree(), a)
    }

    /// `(-1)^(n+1) (a^(n-1) - c1 a^(n-2) + ... + (-1)^(n-1) c_(n-1))`, so that
    /// `a * adj(a) = det(a) 1`.
    pub fn adjoint(&self, a: &AlgElement<F>) -> Result<AlgElement<F>, GenericError> {
        let cs = self.coefficients(a)?;
        let n = self.degree();
        let ctx = a.field();
        // coefficients of x^0..x^(n-1) of the cofactor polynomial
        // x^k carries (-1)^(n-1-k) c_(n-1-k)
        let coeffs = (0..n)
            .map(|k| {
                let i = n - 1 - k;
                let c = if i == 0 { F::one(ctx) } else { cs[i - 1].clone() };
                if i % 2 == 1 {
                    c.neg()
                } else {
                    c
                }
            })
            .collect();
        let poly = UPoly::new(ctx, coeffs);
        let poly = if n.is_multiple_of(2) { poly.neg() } else { poly };
        eval_upoly_at_element(&poly, a)
    }

    pub fn inverse(&self, a: &AlgElement<F>) -> Result<AlgElement<F>, GenericError> {
        let det = self.det(a)?;
        let inv = det.inv().ok_or(GenericError::NotInvertible)?;
        let adj = self.adjoint(a)?;
        adj.scale(&inv).map_err(|_| GenericError::FieldMismatch)
    }

    /// `cn` evaluated at the coordinates of `x*1 - a` in `F[x]`.
    pub fn char_poly_via_det(&self, a: &AlgElement<F>) -> Result<UPoly<F>, GenericError> {
        self.check(a)?;
        let ctx = a.field();
        let x = UPoly::x(ctx);
        let point: Vec<UPoly<F>> = self
            .algebra
            .unit_coords()
            .iter()
            .zip(a.coords())
            .map(|(u, c)| x.scale(u).sub(&UPoly::constant(ctx, c.clone())))
            .collect();
        let det = self.data.coeffs[self.degree() - 1].eval_with(&point, |c| UPoly::constant(ctx, c.clone()), &UPoly::one(ctx));
        Ok(det.monic())
    }

    pub fn is_nilpotent(&self, a: &AlgElement<F>) -> Result<bool, GenericError> {
        Ok(self.coefficients(a)?.iter().all(|c| c.is_zero()))
    }

    /// Characteristic polynomial of a square matrix, for the generic
    /// polynomial of a full matrix algebra with row-major basis `E_ij`.
    pub fn char_poly_of_matrix(&self, mat: &Matrix<F>) -> Result<UPoly<F>, GenericError> {
        if !mat.is_square() || mat.rows() * mat.rows() != self.algebra.dim() {
            return Err(GenericError::ShapeMismatch);
        }
        let ctx = mat.ctx();
        let cs = self.coefficients_at(mat.entries(), |c| c.clone(), &F::one(ctx));
        Ok(UPoly::new(ctx, signed_to_coeffs(&cs, &F::one(ctx))))
    }

    /// Generic characteristic polynomial of `L_g` (or `R_g`) for the generic
    /// element `g` of `spec`, using `self` as the generic polynomial of the
    /// full matrix algebra of size `spec.dim()`. Returns coefficients of
    /// `x^0..x^dim` in the generic ring of `spec`.
    pub fn regular_generic_char_poly(&self, spec: &AlgebraSpec<F>, side: Side) -> Result<Vec<MPoly<F>>, GenericError> {
        let m = spec.dim();
        if m * m != self.algebra.dim() {
            return Err(GenericError::ShapeMismatch);
        }
        let ring = generic_ring(spec);
        let zero = MPoly::zero(&ring);
        let mut entries = vec![zero; m * m];
        for j in 0..m {
            for i in 0..m {
                let coords = match side {
                    Side::Left => spec.product(i, j),
                    Side::Right => spec.product(j, i),
                };
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        let term = MPoly::var(&ring, i).scale(c);
                        entries[k * m + j] = entries[k * m + j].add(&term);
                    }
                }
            }
        }
        let one = MPoly::one(&ring);
        let cs = self.coefficients_at(&entries, |c| MPoly::constant(&ring, c.clone()), &one);
        Ok(signed_to_coeffs(&cs, &one))
    }
}

impl<F: Field> fmt::Display for GenericCharPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> fmt::Debug for GenericCharPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenericCharPoly({}: {})", self.algebra.name(), self.render())
    }
}

/// From `c1..cn` to the coefficients of `x^0..x^n` of
/// `x^n - c1 x^(n-1) + ... + (-1)^n cn`.
pub fn signed_to_coeffs<R: Ring>(cs: &[R], one: &R) -> Vec<R> {
    let n = cs.len();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..n {
        let i = n - k;
        let c = &cs[i - 1];
        out.push(if i % 2 == 1 { c.neg() } else { c.clone() });
    }
    out.push(one.clone());
    out
}

/// Canonical text of a polynomial in `var` whose coefficients are
/// multivariate: non-constant coefficients are parenthesized with the sign
/// of their leading term pulled outside.
pub fn render_generic<F: Field>(coeffs: &[MPoly<F>], var: &str) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match k {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{k}")),
        };
        let shown = c.display_parts();
        let negative = shown[0].0;
        let body = if c.is_constant() && shown.len() == 1 {
            let scalar = &shown[0].1;
            match &power {
                Some(p) if scalar == "1" => p.clone(),
                Some(p) => format!("{scalar}*{p}"),
                None => scalar.clone(),
            }
        } else {
            let inner = if negative { c.neg().to_string() } else { c.to_string() };
            match &power {
                Some(p) => format!("({inner})*{p}"),
                None => format!("({inner})"),
            }
        };
        parts.push((negative, body));
    }
    crate::field::join_parts(parts)
}

/// `sum f_k a^k` by Horner's rule, multiplying the accumulator by `a` on the
/// right. For associative or commutative algebras this agrees with left
/// powers; for a corrupted table it usually does not, which makes
/// Cayley-Hamilton checks sensitive to non-associativity.
pub fn eval_upoly_at_element<F: Field>(f: &UPoly<F>, a: &AlgElement<F>) -> Result<AlgElement<F>, GenericError> {
    if f.field() != a.field() {
        return Err(GenericError::FieldMismatch);
    }
    let unit = a.algebra().unit_element();
    let mut acc = a.algebra().zero_element();
    for c in f.coeffs().iter().rev() {
        let prod = acc.mul(a).map_err(|_| GenericError::AlgebraMismatch)?;
        let shift = unit.scale(c).map_err(|_| GenericError::FieldMismatch)?;
        acc = prod.add(&shift).map_err(|_| GenericError::AlgebraMismatch)?;
    }
    Ok(acc)
}

/// Least-degree monic `f` in `F[x]` with `f(a) = 0`, by elimination over `F`
/// on the left powers of `a`.
pub fn minimal_polynomial_of<F: Field>(a: &AlgElement<F>) -> UPoly<F> {
    let ctx = a.field();
    let mut elim = Eliminator::new(ctx);
    let mut power = a.algebra().unit_element();
    loop {
        if let Some(mu) = elim.push(power.coords().to_vec()).expect("field division is exact") {
            let rel = monic_relation(mu).expect("field division is exact");
            return UPoly::new(ctx, rel);
        }
        power = a.mul(&power).expect("same algebra");
    }
}

/// `ci(1) = C(n, i)` for every `i`.
pub fn unit_coefficients_are_binomial<F: Field>(g: &GenericCharPoly<F>) -> bool {
    let unit = g.algebra().unit_element();
    let n = g.degree() as u64;
    match g.coefficients(&unit) {
        Ok(cs) => cs
            .iter()
            .enumerate()
            .all(|(i, c)| *c == binomial::<F>(unit.field(), n, i as u64 + 1)),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{FieldDescriptor, FieldValue};

    fn q(n: i64) -> FieldValue {
        FieldValue::rational(n, 1)
    }

    /// Commutative algebra 1, a, b, c with a^2 = b, b^2 = c, other products 0.
    fn non_power_associative() -> Arc<AlgebraSpec<FieldValue>> {
        let m = 4;
        let e = |k: usize| -> Vec<FieldValue> { (0..m).map(|t| if t == k { q(1) } else { q(0) }).collect() };
        let z = vec![q(0); m];
        let mut table = vec![vec![z.clone(); m]; m];
        for (i, row) in table.iter_mut().enumerate() {
            row[0] = e(i);
        }
        table[0] = (0..m).map(e).collect();
        table[1][1] = e(2);
        table[2][2] = e(3);
        AlgebraSpec::new(
            "npa",
            FieldDescriptor::Rationals,
            ["1", "a", "b", "c"].iter().map(|s| s.to_string()).collect(),
            e(0),
            AlgebraKind::Jordan,
            table,
        )
        .unwrap()
    }

    #[test]
    fn power_associativity_certificate() {
        let a = non_power_associative();
        assert!(a.validate().is_valid());
        assert!(matches!(
            generic_minimal_polynomial(&a),
            Err(GenericError::PowerAssociativityViolated { .. })
        ));
    }

    #[test]
    fn rendering() {
        let ring = PolyRing::new(FieldDescriptor::Rationals, vec!["t1".into(), "t2".into()]);
        let t1 = MPoly::var(&ring, 0);
        let t2 = MPoly::var(&ring, 1);
        let two = MPoly::constant(&ring, q(2));
        let coeffs = vec![&(&t1 * &t1) + &(&t2 * &t2), (&two * &t1).neg(), MPoly::one(&ring)];
        assert_eq!(render_generic(&coeffs, "x"), "x^2 - (2*t1)*x + (t1^2 + t2^2)");
        let coeffs = vec![MPoly::constant(&ring, q(-3)), MPoly::zero(&ring), MPoly::one(&ring)];
        assert_eq!(render_generic(&coeffs, "x"), "x^2 - 3");
    }

    #[test]
    fn names_avoid_tower_variables() {
        let f = FieldDescriptor::rational_functions(FieldDescriptor::Rationals, &["t2"]).unwrap();
        assert_eq!(generic_variable_names::<FieldValue>(&f, 2), vec!["s1", "s2"]);
        assert_eq!(generic_variable_names::<FieldValue>(&FieldDescriptor::Rationals, 1), vec!["t1"]);
    }
}
