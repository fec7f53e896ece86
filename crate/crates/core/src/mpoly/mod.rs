//! Sparse multivariate polynomials `F[v1, ..., vk]` over any [`Field`].
//!
//! Terms are kept sorted in graded-lex descending order with the first
//! variable most significant; no stored coefficient is zero.

mod gcd;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use smallvec::SmallVec;
use thiserror::Error;

use crate::field::{join_parts, Field, Ring, TermPart};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MPolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
}

/// Exponent vector. The derived order is graded-lex: total degree first,
/// then lexicographic with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if b > a {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }

    fn with_exp(&self, var: usize, exp: u16) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[var] as u32 + exp as u32;
        m.exps[var] = exp;
        m
    }

    /// `v1^2*v3` style rendering; empty for the unit monomial.
    pub fn render(&self, vars: &[String]) -> String {
        let mut pieces = Vec::new();
        for (name, &e) in vars.iter().zip(self.exps.iter()) {
            match e {
                0 => {}
                1 => pieces.push(name.clone()),
                _ => pieces.push(format!("{name}^{e}")),
            }
        }
        pieces.join("*")
    }
}

struct RingInner<F: Field> {
    field: F::Ctx,
    vars: Vec<String>,
}

/// The ring `F[vars]`: a coefficient-field context plus ordered variable names.
pub struct PolyRing<F: Field> {
    inner: Arc<RingInner<F>>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F::Ctx, vars: Vec<String>) -> Self {
        PolyRing {
            inner: Arc::new(RingInner { field, vars }),
        }
    }

    pub fn field(&self) -> &F::Ctx {
        &self.inner.field
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }
}

impl<F: Field> Clone for PolyRing<F> {
    fn clone(&self) -> Self {
        PolyRing {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.vars == other.inner.vars && self.inner.field == other.inner.field)
    }
}

impl<F: Field> Eq for PolyRing<F> {}

impl<F: Field> Hash for PolyRing<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.field.hash(state);
        self.inner.vars.hash(state);
    }
}

impl<F: Field> fmt::Debug for PolyRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.inner.field, self.inner.vars)
    }
}

/// Sparse multivariate polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<F: Field> {
    ring: PolyRing<F>,
    terms: Vec<(Monomial, F)>,
}

/// Output of [`MPoly::degree_info`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeInfo {
    pub total_degree: u32,
    pub is_homogeneous: bool,
    pub homogeneous_degree: Option<u32>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(ring: &PolyRing<F>) -> Self {
        MPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &PolyRing<F>) -> Self {
        Self::constant(ring, F::one(ring.field()))
    }

    pub fn constant(ring: &PolyRing<F>, c: F) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        MPoly {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    /// The variable at `index`.
    pub fn var(ring: &PolyRing<F>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index, 1), F::one(ring.field()))
    }

    pub fn monomial(ring: &PolyRing<F>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.exps.len(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        MPoly {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &PolyRing<F>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exps.len(), ring.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &PolyRing<F>, map: HashMap<Monomial, F>) -> Self {
        let mut terms: Vec<(Monomial, F)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F::Ctx {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Terms in graded-lex descending order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value if the polynomial has no variables in it.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.as_slice() {
            [] => Some(F::zero(self.field())),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|probe| m.cmp(&probe.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero(self.field()))
    }

    pub fn total_degree(&self) -> Result<u32, MPolyError> {
        self.terms.first().map(|t| t.0.degree).ok_or(MPolyError::ZeroPolynomial)
    }

    pub fn degree_info(&self) -> Result<DegreeInfo, MPolyError> {
        let total_degree = self.total_degree()?;
        let is_homogeneous = self.terms.iter().all(|t| t.0.degree == total_degree);
        Ok(DegreeInfo {
            total_degree,
            is_homogeneous,
            homogeneous_degree: is_homogeneous.then_some(total_degree),
        })
    }

    /// True iff every monomial has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.iter().all(|t| t.0.degree == d)
    }

    fn same_ring(&self, other: &Self) -> Result<(), MPolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(MPolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MPolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MPolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MPolyError> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        use std::cmp::Ordering;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { b[j].1.neg() } else { b[j].1.clone() };
                    terms.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { t.1.neg() } else { t.1.clone() };
            terms.push((t.0.clone(), c));
        }
        MPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, F> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        Self::from_map(&self.ring, acc)
    }

    /// Multiply by the single term `c * m`. Monomial orders are preserved
    /// under multiplication, so no re-sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, cc)| {
                let p = cc.mul(c);
                (!p.is_zero()).then(|| (mm.mul(m), p))
            })
            .collect();
        MPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_one() {
            return self.clone();
        }
        self.mul_term(&Monomial::one(self.nvars()), c)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Substitute `vars[i] -> point[i]` in the coefficient field.
    pub fn evaluate(&self, point: &[F]) -> Result<F, MPolyError> {
        if point.len() != self.nvars() {
            return Err(MPolyError::ArityMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        Ok(self.eval_with(point, |c| c.clone(), &F::one(self.field())))
    }

    /// Evaluate in any ring `R` that receives the coefficients through `lift`.
    pub fn eval_with<R: Ring>(&self, point: &[R], lift: impl Fn(&F) -> R, one: &R) -> R {
        assert_eq!(point.len(), self.nvars(), "evaluation arity");
        let mut powers: Vec<Vec<R>> = point.iter().map(|p| vec![one.clone(), p.clone()]).collect();
        let mut acc = R::zero(&one.ctx());
        for (m, c) in &self.terms {
            let mut term = lift(c);
            for (v, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[v];
                while table.len() <= e as usize {
                    let next = table.last().unwrap().mul(&table[1]);
                    table.push(next);
                }
                term = term.mul(&table[e as usize]);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact quotient `self / divisor` by graded-lex leading-term reduction.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, MPolyError> {
        self.same_ring(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(MPolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let lc_inv = lc.inv().expect("nonzero leading coefficient");
        if divisor.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let q = m.div(lm).ok_or(MPolyError::NotDivisible)?;
                terms.push((q, c.mul(&lc_inv)));
            }
            return Ok(MPoly {
                ring: self.ring.clone(),
                terms,
            });
        }
        if self.terms[0].0.degree < lm.degree
            || self.terms.last().unwrap().0.degree < divisor.terms.last().unwrap().0.degree
        {
            return Err(MPolyError::NotDivisible);
        }
        let mut rem: BTreeMap<Monomial, F> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm).ok_or(MPolyError::NotDivisible)?;
            let qc = c.mul(&lc_inv);
            for (dm, dc) in &divisor.terms[1..] {
                let key = qm.mul(dm);
                let delta = qc.mul(dc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().sub(&delta);
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.neg());
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(MPoly {
            ring: self.ring.clone(),
            terms: quotient,
        })
    }

    /// Divide through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Re-home the coefficients in another field through `f`.
    pub fn map_coeffs<G: Field>(&self, ring: &PolyRing<G>, f: impl Fn(&F) -> G) -> MPoly<G> {
        assert_eq!(ring.nvars(), self.nvars());
        MPoly {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let g = f(c);
                    (!g.is_zero()).then(|| (m.clone(), g))
                })
                .collect(),
        }
    }

    /// Canonical text parts: each term contributes one or more signed parts.
    pub fn display_parts(&self) -> Vec<(bool, String)> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let mono = m.render(self.ring.vars());
            let factor = (!mono.is_empty()).then_some(mono.as_str());
            for part in c.display_parts() {
                out.push((part.negative, part.body_with(factor)));
            }
        }
        out
    }

    /// Flattened [`TermPart`]s, so that a polynomial can itself act as a
    /// coefficient in an outer structure.
    pub fn term_parts(&self) -> Vec<TermPart> {
        self.display_parts()
            .into_iter()
            .map(|(negative, body)| TermPart::numeric(negative, body))
            .collect()
    }

    fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|t| t.0.exps[var]).max().unwrap_or(0)
    }

    /// Coefficients with respect to `var`, index = exponent; each coefficient
    /// has `var` exponent zero.
    fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exps[var] as usize].push((m.with_exp(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut terms| {
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly {
                    ring: self.ring.clone(),
                    terms,
                }
            })
            .collect()
    }

    fn mul_var_pow(&self, var: usize, exp: u16) -> Self {
        if exp == 0 {
            return self.clone();
        }
        self.mul_term(&Monomial::var(self.nvars(), var, exp), &F::one(self.field()))
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(self.display_parts()))
    }
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<F: Field> Ring for MPoly<F> {
    type Ctx = PolyRing<F>;

    fn ctx(&self) -> PolyRing<F> {
        self.ring.clone()
    }
    fn zero(ctx: &PolyRing<F>) -> Self {
        MPoly::zero(ctx)
    }
    fn one(ctx: &PolyRing<F>) -> Self {
        MPoly::one(ctx)
    }
    fn from_bigint(ctx: &PolyRing<F>, n: &BigInt) -> Self {
        MPoly::constant(ctx, F::from_bigint(ctx.field(), n))
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        MPoly::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("ring mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("ring mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("ring mismatch")
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_divide(rhs).ok()
    }
    fn weight(&self) -> (usize, u32) {
        (self.nterms(), self.terms.first().map_or(0, |(m, _)| m.degree()))
    }
    fn pow(&self, exp: u32) -> Self {
        MPoly::pow(self, exp)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a, F: Field> std::ops::$trait<&'a MPoly<F>> for &'a MPoly<F> {
            type Output = MPoly<F>;
            fn $method(self, rhs: &'a MPoly<F>) -> MPoly<F> {
                self.$inner(rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly::neg(self)
    }
}

/// Arithmetic selector for [`mpoly_arith`].
#[derive(Clone, Debug)]
pub enum MPolyOp<'a, F: Field> {
    Add(&'a MPoly<F>),
    Sub(&'a MPoly<F>),
    Mul(&'a MPoly<F>),
    Neg,
    Pow(u32),
}

/// Checked ring arithmetic entry point.
pub fn mpoly_arith<F: Field>(a: &MPoly<F>, op: MPolyOp<'_, F>) -> Result<MPoly<F>, MPolyError> {
    match op {
        MPolyOp::Add(b) => a.try_add(b),
        MPolyOp::Sub(b) => a.try_sub(b),
        MPolyOp::Mul(b) => a.try_mul(b),
        MPolyOp::Neg => Ok(a.neg()),
        MPolyOp::Pow(e) => Ok(a.pow(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    fn qring(n: usize) -> PolyRing<Rational> {
        PolyRing::new((), (1..=n).map(|i| format!("t{i}")).collect())
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(2);
        let t1 = MPoly::var(&r, 0);
        let t2 = MPoly::var(&r, 1);
        let p = &(&t1 + &t2) * &(&t1 - &t2);
        assert_eq!(p.to_string(), "t1^2 - t2^2");
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r: PolyRing<Fp> = PolyRing::new(2, vec!["t1".into(), "t2".into()]);
        let s = &MPoly::var(&r, 0) + &MPoly::var(&r, 1);
        assert_eq!(s.pow(2).to_string(), "t1^2 + t2^2");
        assert!(MPoly::var(&r, 0).pow(0).is_one());
    }

    #[test]
    fn graded_lex_printing() {
        let r = qring(3);
        let t = |i| MPoly::var(&r, i);
        let p = &(&(&t(2) + &t(0).pow(2)) + &(&t(0) * &t(1))) - &MPoly::constant(&r, q(7));
        assert_eq!(p.to_string(), "t1^2 + t1*t2 + t3 - 7");
        let half = MPoly::constant(&r, Rational::new((-1).into(), 2.into()));
        assert_eq!((&half * &t(1)).to_string(), "-1/2*t2");
    }

    #[test]
    fn evaluation() {
        let r = qring(2);
        let p = &MPoly::var(&r, 0).pow(2) + &MPoly::var(&r, 1).pow(2);
        assert_eq!(p.evaluate(&[q(3), q(4)]).unwrap(), q(25));
        assert!(MPoly::one(&r).evaluate(&[q(9), q(-2)]).unwrap().is_one());
        assert_eq!(
            p.evaluate(&[q(1)]),
            Err(MPolyError::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn exact_division_cases() {
        let r = qring(2);
        let t1 = MPoly::var(&r, 0);
        let t2 = MPoly::var(&r, 1);
        let a = &t1.pow(2) - &t2.pow(2);
        assert_eq!(a.exact_divide(&(&t1 - &t2)).unwrap(), &t1 + &t2);
        assert_eq!(t1.exact_divide(&t2), Err(MPolyError::NotDivisible));
        let z = MPoly::zero(&r);
        assert!(z.exact_divide(&(&t1 + &MPoly::one(&r))).unwrap().is_zero());
        assert_eq!(t1.exact_divide(&z), Err(MPolyError::DivisionByZero));
        // remainder nonzero only after several reduction steps
        let b = &(&t1.pow(2) + &t2) + &MPoly::one(&r);
        assert_eq!(b.exact_divide(&(&t1 + &t2)), Err(MPolyError::NotDivisible));
    }

    #[test]
    fn degree_queries() {
        let r = qring(2);
        let t1 = MPoly::var(&r, 0);
        let t2 = MPoly::var(&r, 1);
        let info = (&t1 + &t2.pow(2)).degree_info().unwrap();
        assert!(!info.is_homogeneous);
        assert_eq!(info.total_degree, 2);
        let seven = MPoly::constant(&r, q(7)).degree_info().unwrap();
        assert_eq!(seven.homogeneous_degree, Some(0));
        assert_eq!(MPoly::zero(&r).degree_info(), Err(MPolyError::ZeroPolynomial));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = MPoly::var(&qring(2), 0);
        let b = MPoly::var(&qring(3), 0);
        assert_eq!(mpoly_arith(&a, MPolyOp::Add(&b)), Err(MPolyError::RingMismatch));
        assert_eq!(mpoly_arith(&a, MPolyOp::Pow(3)).unwrap(), a.pow(3));
    }
}
