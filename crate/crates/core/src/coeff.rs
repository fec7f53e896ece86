//! Composable exact coefficient fields: ℚ, 𝔽_p and rational-function towers
//! `Frac(F[v1, ..., vk])` over any field already built.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{is_prime, join_parts, Field, Fp, Ring, TermPart};
use crate::mpoly::{MPoly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("variable `{0}` is already used in this field tower")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    InvalidVariable(String),
    #[error("a rational-function field needs at least one variable")]
    NoVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

/// A rational function `num / den` over `F`, kept reduced with a monic
/// (graded-lex) denominator. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<F: Field> {
    num: MPoly<F>,
    den: MPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn from_poly(num: MPoly<F>) -> Self {
        let den = MPoly::one(num.ring());
        RatFunc { num, den }
    }

    /// Reduce to canonical form. `den` must be nonzero.
    pub fn new(num: MPoly<F>, den: MPoly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(MPoly::zero(num.ring())));
        }
        if den.is_constant() {
            let c = den.leading_coeff().unwrap().inv().unwrap();
            return Some(Self::from_poly(num.scale(&c)));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_divide(&g).expect("gcd divides"),
                den.exact_divide(&g).expect("gcd divides"),
            )
        };
        let c = den.leading_coeff().unwrap().inv().unwrap();
        Some(RatFunc {
            num: num.scale(&c),
            den: den.scale(&c),
        })
    }

    pub fn numerator(&self) -> &MPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly<F> {
        &self.den
    }

    pub fn ring(&self) -> &PolyRing<F> {
        self.num.ring()
    }

    fn parts(&self) -> Vec<TermPart> {
        if self.den.is_one() {
            let vars = self.ring().vars();
            let mut out = Vec::new();
            for (m, c) in self.num.terms() {
                let mono = m.render(vars);
                for p in c.display_parts() {
                    let symbol = match (mono.is_empty(), p.symbol) {
                        (true, s) => s,
                        (false, None) => Some(mono.clone()),
                        (false, Some(s)) => Some(format!("{mono}*{s}")),
                    };
                    out.push(TermPart {
                        negative: p.negative,
                        scalar: p.scalar,
                        symbol,
                    });
                }
            }
            return out;
        }
        let negative = self.num.leading_coeff().is_some_and(|c| c.is_negative());
        let num = if negative { self.num.neg() } else { self.num.clone() };
        let num_s = num.to_string();
        let den_s = self.den.to_string();
        let num_s = if num_s.contains(' ') { format!("({num_s})") } else { num_s };
        let den_s = if den_s.contains([' ', '*', '/']) {
            format!("({den_s})")
        } else {
            den_s
        };
        vec![TermPart {
            negative,
            scalar: "1".into(),
            symbol: Some(format!("{num_s}/{den_s}")),
        }]
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.parts();
        f.write_str(&join_parts(parts.iter().map(|p| (p.negative, p.body_with(None)))))
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl<F: Field> Ring for RatFunc<F> {
    type Ctx = PolyRing<F>;

    fn ctx(&self) -> PolyRing<F> {
        self.ring().clone()
    }
    fn zero(ctx: &PolyRing<F>) -> Self {
        Self::from_poly(MPoly::zero(ctx))
    }
    fn one(ctx: &PolyRing<F>) -> Self {
        Self::from_poly(MPoly::one(ctx))
    }
    fn from_bigint(ctx: &PolyRing<F>, n: &BigInt) -> Self {
        Self::from_poly(MPoly::constant(ctx, F::from_bigint(ctx.field(), n)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(num, &self.den * &rhs.den).unwrap()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_divide(&g1).unwrap();
        let d = rhs.den.exact_divide(&g1).unwrap();
        let c = rhs.num.exact_divide(&g2).unwrap();
        let b = self.den.exact_divide(&g2).unwrap();
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading_coeff().unwrap().inv().unwrap();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let lc = self.num.leading_coeff().unwrap().inv().unwrap();
        Some(RatFunc {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }
    fn characteristic(ctx: &PolyRing<F>) -> u64 {
        F::characteristic(ctx.field())
    }
    fn prime_ctx(ctx: &PolyRing<F>) -> PolyRing<F> {
        // the prime subfield is not a RatFunc<F>; constants over the prime
        // subfield of F stand in for it
        PolyRing::new(F::prime_ctx(ctx.field()), ctx.vars().to_vec())
    }
    fn to_prime(&self) -> Option<Self> {
        let c = self.num.as_constant()?;
        if !self.den.is_one() {
            return None;
        }
        let ring = Self::prime_ctx(&self.ctx());
        Some(Self::from_poly(MPoly::constant(&ring, c.to_prime()?)))
    }
    fn from_prime(ctx: &PolyRing<F>, x: &Self) -> Self {
        let c = x.num.as_constant().expect("prime-subfield value");
        Self::from_poly(MPoly::constant(ctx, F::from_prime(ctx.field(), &c)))
    }
    fn display_parts(&self) -> Vec<TermPart> {
        self.parts()
    }
    fn variable_names(ctx: &PolyRing<F>) -> Vec<String> {
        let mut v = F::variable_names(ctx.field());
        v.extend(ctx.vars().iter().cloned());
        v
    }
}

/// Runtime description of a coefficient field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    RationalFunctions(PolyRing<FieldValue>),
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Result<Self, CoeffError> {
        if is_prime(p) {
            Ok(FieldDescriptor::PrimeField(p))
        } else {
            Err(CoeffError::NotPrime(p))
        }
    }

    /// `Frac(base[vars])`; names must be identifiers unused anywhere in the tower.
    pub fn rational_functions(base: FieldDescriptor, vars: &[&str]) -> Result<Self, CoeffError> {
        make_ratfunc_field(base, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn characteristic(&self) -> u64 {
        FieldValue::characteristic(self)
    }

    pub fn base(&self) -> Option<&FieldDescriptor> {
        match self {
            FieldDescriptor::RationalFunctions(r) => Some(r.field()),
            _ => None,
        }
    }

    /// Variables of this level only.
    pub fn vars(&self) -> &[String] {
        match self {
            FieldDescriptor::RationalFunctions(r) => r.vars(),
            _ => &[],
        }
    }

    /// Every variable name in the tower, innermost level first.
    pub fn tower_vars(&self) -> Vec<String> {
        match self {
            FieldDescriptor::RationalFunctions(r) => {
                let mut v = r.field().tower_vars();
                v.extend(r.vars().iter().cloned());
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn zero(&self) -> FieldValue {
        FieldValue::zero(self)
    }

    pub fn one(&self) -> FieldValue {
        FieldValue::one(self)
    }

    pub fn int(&self, n: i64) -> FieldValue {
        FieldValue::from_i64(self, n)
    }

    /// The tower variable `name` as an element of this field.
    pub fn var(&self, name: &str) -> Result<FieldValue, CoeffError> {
        match self {
            FieldDescriptor::RationalFunctions(r) => {
                if let Some(i) = r.vars().iter().position(|v| v == name) {
                    return Ok(FieldValue::RatFunc(Box::new(RatFunc::from_poly(MPoly::var(r, i)))));
                }
                let inner = r.field().var(name)?;
                Ok(self.lift(&inner))
            }
            _ => Err(CoeffError::UnknownVariable(name.to_string())),
        }
    }

    /// Embed an element of the base field one level down.
    pub fn lift(&self, base_value: &FieldValue) -> FieldValue {
        match self {
            FieldDescriptor::RationalFunctions(r) => {
                assert_eq!(&base_value.ctx(), r.field(), "lift from the wrong base");
                FieldValue::RatFunc(Box::new(RatFunc::from_poly(MPoly::constant(
                    r,
                    base_value.clone(),
                ))))
            }
            _ => panic!("lift into a field without a base"),
        }
    }

    pub fn is_prime_field(&self) -> bool {
        !matches!(self, FieldDescriptor::RationalFunctions(_))
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "F{p}"),
            FieldDescriptor::RationalFunctions(r) => write!(f, "{}({})", r.field(), r.vars().join(",")),
        }
    }
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn make_ratfunc_field(base: FieldDescriptor, vars: Vec<String>) -> Result<FieldDescriptor, CoeffError> {
    if vars.is_empty() {
        return Err(CoeffError::NoVariables);
    }
    let mut seen = base.tower_vars();
    for v in &vars {
        if !valid_identifier(v) {
            return Err(CoeffError::InvalidVariable(v.clone()));
        }
        if seen.contains(v) {
            return Err(CoeffError::DuplicateVariable(v.clone()));
        }
        seen.push(v.clone());
    }
    Ok(FieldDescriptor::RationalFunctions(PolyRing::new(base, vars)))
}

/// An element of a field described by a [`FieldDescriptor`], in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Rational(BigRational),
    Prime(Fp),
    RatFunc(Box<RatFunc<FieldValue>>),
}

impl FieldValue {
    pub fn rational(num: i64, den: i64) -> FieldValue {
        FieldValue::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc<FieldValue>> {
        match self {
            FieldValue::RatFunc(r) => Some(r),
            _ => None,
        }
    }

    fn mismatch(&self, other: &Self) -> ! {
        panic!("field mismatch: {:?} vs {:?}", self.ctx(), other.ctx())
    }

    pub fn same_field(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldValue::Rational(_), FieldValue::Rational(_)) => true,
            (FieldValue::Prime(a), FieldValue::Prime(b)) => a.modulus() == b.modulus(),
            (FieldValue::RatFunc(a), FieldValue::RatFunc(b)) => a.ring() == b.ring(),
            _ => false,
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.display_parts();
        f.write_str(&join_parts(parts.iter().map(|p| (p.negative, p.body_with(None)))))
    }
}

impl fmt::Debug for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! dispatch_binary {
    ($self:ident, $rhs:ident, $method:ident) => {
        match ($self, $rhs) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => FieldValue::Rational(Ring::$method(a, b)),
            (FieldValue::Prime(a), FieldValue::Prime(b)) => FieldValue::Prime(Ring::$method(a, b)),
            (FieldValue::RatFunc(a), FieldValue::RatFunc(b)) => {
                FieldValue::RatFunc(Box::new(Ring::$method(a.as_ref(), b.as_ref())))
            }
            _ => $self.mismatch($rhs),
        }
    };
}

impl Ring for FieldValue {
    type Ctx = FieldDescriptor;

    fn ctx(&self) -> FieldDescriptor {
        match self {
            FieldValue::Rational(_) => FieldDescriptor::Rationals,
            FieldValue::Prime(x) => FieldDescriptor::PrimeField(x.modulus()),
            FieldValue::RatFunc(r) => FieldDescriptor::RationalFunctions(r.ring().clone()),
        }
    }
    fn zero(ctx: &FieldDescriptor) -> Self {
        Self::from_i64(ctx, 0)
    }
    fn one(ctx: &FieldDescriptor) -> Self {
        Self::from_i64(ctx, 1)
    }
    fn from_bigint(ctx: &FieldDescriptor, n: &BigInt) -> Self {
        match ctx {
            FieldDescriptor::Rationals => FieldValue::Rational(BigRational::from_integer(n.clone())),
            FieldDescriptor::PrimeField(p) => FieldValue::Prime(Fp::from_signed(n, *p)),
            FieldDescriptor::RationalFunctions(r) => FieldValue::RatFunc(Box::new(RatFunc::from_bigint(r, n))),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(a) => Zero::is_zero(a),
            FieldValue::Prime(a) => Ring::is_zero(a),
            FieldValue::RatFunc(a) => Ring::is_zero(a.as_ref()),
        }
    }
    fn is_one(&self) -> bool {
        match self {
            FieldValue::Rational(a) => One::is_one(a),
            FieldValue::Prime(a) => Ring::is_one(a),
            FieldValue::RatFunc(a) => Ring::is_one(a.as_ref()),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        dispatch_binary!(self, rhs, add)
    }
    fn sub(&self, rhs: &Self) -> Self {
        dispatch_binary!(self, rhs, sub)
    }
    fn mul(&self, rhs: &Self) -> Self {
        dispatch_binary!(self, rhs, mul)
    }
    fn neg(&self) -> Self {
        match self {
            FieldValue::Rational(a) => FieldValue::Rational(-a),
            FieldValue::Prime(a) => FieldValue::Prime(Ring::neg(a)),
            FieldValue::RatFunc(a) => FieldValue::RatFunc(Box::new(Ring::neg(a.as_ref()))),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for FieldValue {
    fn inv(&self) -> Option<Self> {
        Some(match self {
            FieldValue::Rational(a) => FieldValue::Rational(Field::inv(a)?),
            FieldValue::Prime(a) => FieldValue::Prime(Field::inv(a)?),
            FieldValue::RatFunc(a) => FieldValue::RatFunc(Box::new(Field::inv(a.as_ref())?)),
        })
    }
    fn characteristic(ctx: &FieldDescriptor) -> u64 {
        match ctx {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
            FieldDescriptor::RationalFunctions(r) => Self::characteristic(r.field()),
        }
    }
    fn prime_ctx(ctx: &FieldDescriptor) -> FieldDescriptor {
        match ctx {
            FieldDescriptor::RationalFunctions(r) => Self::prime_ctx(r.field()),
            other => other.clone(),
        }
    }
    fn to_prime(&self) -> Option<Self> {
        match self {
            FieldValue::RatFunc(r) => {
                if !r.denominator().is_one() {
                    return None;
                }
                r.numerator().as_constant()?.to_prime()
            }
            other => Some(other.clone()),
        }
    }
    fn from_prime(ctx: &FieldDescriptor, x: &Self) -> Self {
        match ctx {
            FieldDescriptor::RationalFunctions(r) => {
                ctx.lift(&Self::from_prime(r.field(), x))
            }
            _ => {
                assert!(x.ctx() == *ctx, "prime field mismatch");
                x.clone()
            }
        }
    }
    fn display_parts(&self) -> Vec<TermPart> {
        match self {
            FieldValue::Rational(a) => a.display_parts(),
            FieldValue::Prime(a) => a.display_parts(),
            FieldValue::RatFunc(a) => a.display_parts(),
        }
    }
    fn variable_names(ctx: &FieldDescriptor) -> Vec<String> {
        ctx.tower_vars()
    }
}

macro_rules! forward_value_op {
    ($trait:ident, $method:ident) => {
        impl<'a> std::ops::$trait<&'a FieldValue> for &'a FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: &'a FieldValue) -> FieldValue {
                Ring::$method(self, rhs)
            }
        }
    };
}

forward_value_op!(Add, add);
forward_value_op!(Sub, sub);
forward_value_op!(Mul, mul);

impl std::ops::Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        Ring::neg(self)
    }
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
    IsZero,
}

/// Result of [`field_arith`]: a value, or a truth value for `Eq`/`IsZero`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithResult {
    Value(FieldValue),
    Bool(bool),
}

/// Checked field arithmetic. Binary operations require `b`.
pub fn field_arith(op: FieldOp, a: &FieldValue, b: Option<&FieldValue>) -> Result<ArithResult, CoeffError> {
    let rhs = || -> Result<&FieldValue, CoeffError> {
        let b = b.ok_or(CoeffError::FieldMismatch)?;
        if a.same_field(b) {
            Ok(b)
        } else {
            Err(CoeffError::FieldMismatch)
        }
    };
    Ok(match op {
        FieldOp::Add => ArithResult::Value(Ring::add(a, rhs()?)),
        FieldOp::Sub => ArithResult::Value(Ring::sub(a, rhs()?)),
        FieldOp::Mul => ArithResult::Value(Ring::mul(a, rhs()?)),
        FieldOp::Div => ArithResult::Value(Field::div(a, rhs()?).ok_or(CoeffError::DivisionByZero)?),
        FieldOp::Neg => ArithResult::Value(Ring::neg(a)),
        FieldOp::Inv => ArithResult::Value(Field::inv(a).ok_or(CoeffError::DivisionByZero)?),
        FieldOp::Eq => ArithResult::Bool(a == rhs()?),
        FieldOp::IsZero => ArithResult::Bool(Ring::is_zero(a)),
    })
}

/// The ring homomorphism ℤ → F.
pub fn embed_integer(n: &BigInt, field: &FieldDescriptor) -> FieldValue {
    FieldValue::from_bigint(field, n)
}
