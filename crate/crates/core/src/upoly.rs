//! Dense univariate polynomials over a field. Minimal and characteristic
//! polynomials of concrete elements live here.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::{join_parts, Field, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UPolyError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomials have different coefficient fields")]
    FieldMismatch,
}

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(ctx: &F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Self::new(ctx, Vec::new())
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(ctx, F::one(ctx))
    }

    pub fn constant(ctx: &F::Ctx, c: F) -> Self {
        Self::new(ctx, vec![c])
    }

    pub fn x(ctx: &F::Ctx) -> Self {
        Self::new(ctx, vec![F::zero(ctx), F::one(ctx)])
    }

    /// `x - root`.
    pub fn linear(root: &F) -> Self {
        let ctx = root.ctx();
        Self::new(&ctx, vec![root.neg(), F::one(&ctx)])
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots<'a>(ctx: &F::Ctx, roots: impl IntoIterator<Item = &'a F>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(ctx), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn field(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    fn same_field(&self, other: &Self) -> Result<(), UPolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(UPolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Self::new(&self.ctx, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Self::new(&self.ctx, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut coeffs = vec![F::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.ctx), |acc, _| acc.mul(self))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, UPolyError> {
        self.same_field(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, UPolyError> {
        self.same_field(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, UPolyError> {
        self.same_field(other)?;
        Ok(self.mul(other))
    }

    /// `(q, r)` with `self = divisor * q + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), UPolyError> {
        self.same_field(divisor)?;
        let d = divisor.degree().ok_or(UPolyError::DivisionByZero)?;
        let lc_inv = divisor.leading_coeff().unwrap().inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![F::zero(&self.ctx); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].mul(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(&self.ctx, quot), Self::new(&self.ctx, rem)))
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Self) -> Result<bool, UPolyError> {
        let (_, r) = other.divrem(self)?;
        Ok(r.is_zero())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_i64(&self.ctx, i as i64)))
            .collect();
        Self::new(&self.ctx, coeffs)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `a / gcd(a, a')`, made monic. Over characteristic zero this is the
    /// product of the distinct irreducible factors. In characteristic p the
    /// derivative can vanish (e.g. `x^2 + u` over 𝔽₂(u)); then
    /// `gcd(a, 0) = a` and the result degenerates to `1`.
    pub fn squarefree_part(&self) -> Result<Self, UPolyError> {
        if self.is_zero() {
            return Err(UPolyError::DivisionByZero);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divrem(&g)?;
        Ok(q.monic())
    }

    pub fn evaluate(&self, at: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Canonical text with `var` as the indeterminate, descending powers.
    pub fn render(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match i {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{i}")),
            };
            let cparts = c.display_parts();
            if cparts.len() == 1 {
                let p = &cparts[0];
                parts.push((p.negative, p.body_with(None).to_string()));
                if let Some(pw) = power {
                    let body = if p.scalar == "1" && p.symbol.is_none() {
                        pw
                    } else {
                        format!("{}*{pw}", p.body_with(None))
                    };
                    parts.last_mut().unwrap().1 = body;
                }
            } else {
                let inner = join_parts(cparts.iter().map(|p| (p.negative, p.body_with(None))));
                let body = match power {
                    Some(pw) => format!("({inner})*{pw}"),
                    None => format!("({inner})"),
                };
                parts.push((false, body));
            }
        }
        join_parts(parts)
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<F: Field> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl<F: Field> Ring for UPoly<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.ctx.clone()
    }
    fn zero(ctx: &F::Ctx) -> Self {
        UPoly::zero(ctx)
    }
    fn one(ctx: &F::Ctx) -> Self {
        UPoly::one(ctx)
    }
    fn from_bigint(ctx: &F::Ctx, n: &BigInt) -> Self {
        UPoly::constant(ctx, F::from_bigint(ctx, n))
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        UPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.divrem(rhs).ok()?;
        r.is_zero().then_some(q)
    }
}

/// Selector for [`upoly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UPolyOp {
    Add,
    Sub,
    Mul,
    DivRem,
}

/// Checked arithmetic; `DivRem` yields `(q, r)`, others `(result, 0)`.
pub fn upoly_arith<F: Field>(op: UPolyOp, a: &UPoly<F>, b: &UPoly<F>) -> Result<(UPoly<F>, UPoly<F>), UPolyError> {
    let zero = UPoly::zero(a.field());
    Ok(match op {
        UPolyOp::Add => (a.try_add(b)?, zero),
        UPolyOp::Sub => (a.try_sub(b)?, zero),
        UPolyOp::Mul => (a.try_mul(b)?, zero),
        UPolyOp::DivRem => a.divrem(b)?,
    })
}
