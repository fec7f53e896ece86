//! Scalar traits shared by every layer of the crate.
//!
//! Coefficient domains carry a runtime context (`Ctx`) instead of relying on
//! context-free `zero()`/`one()` constructors, because a prime field or a
//! rational-function tower is only known once a spec file has been read.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with identity, with exact division where it exists.
pub trait Ring: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_bigint(ctx, &BigInt::from(n))
    }

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `Some(q)` with `q * rhs == self`, or `None` if `rhs` does not divide `self`
    /// (including `rhs == 0`).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Rough cost of the value (term count, degree), used for pivot choice.
    fn weight(&self) -> (usize, u32) {
        (1, 0)
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// One signed summand of a value in canonical printed form.
///
/// `scalar` is the absolute numeric factor (`"1"` when there is none to show)
/// and `symbol` the product of tower variables or a parenthesized fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermPart {
    pub negative: bool,
    pub scalar: String,
    pub symbol: Option<String>,
}

impl TermPart {
    pub fn numeric(negative: bool, scalar: String) -> Self {
        TermPart {
            negative,
            scalar,
            symbol: None,
        }
    }

    /// Render the unsigned body with an optional extra factor placed between
    /// the numeric scalar and the symbol.
    pub fn body_with(&self, factor: Option<&str>) -> String {
        let mut pieces: Vec<&str> = Vec::with_capacity(3);
        let unit = self.scalar == "1";
        if !unit || (factor.is_none() && self.symbol.is_none()) {
            pieces.push(&self.scalar);
        }
        if let Some(f) = factor {
            pieces.push(f);
        }
        if let Some(s) = &self.symbol {
            pieces.push(s);
        }
        pieces.join("*")
    }
}

/// Join signed parts as `a + b - c`.
pub fn join_parts<'a>(parts: impl IntoIterator<Item = (bool, String)> + 'a) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in parts.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring + fmt::Display {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// 0 for characteristic zero.
    fn characteristic(ctx: &Self::Ctx) -> u64;

    /// Context of the prime subfield (ℚ or 𝔽_p).
    fn prime_ctx(ctx: &Self::Ctx) -> Self::Ctx;

    /// This value re-expressed over [`Field::prime_ctx`], if it lies there.
    fn to_prime(&self) -> Option<Self>;

    /// Lift a prime-subfield value into the field described by `ctx`.
    fn from_prime(ctx: &Self::Ctx, x: &Self) -> Self;

    fn display_parts(&self) -> Vec<TermPart>;

    /// Names of the indeterminates already used inside the field.
    fn variable_names(_ctx: &Self::Ctx) -> Vec<String> {
        Vec::new()
    }

    /// True when the canonical form starts with a minus sign.
    fn is_negative(&self) -> bool {
        self.display_parts().first().is_some_and(|p| p.negative)
    }
}

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

impl Ring for BigRational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn from_bigint(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn prime_ctx(_: &()) {}
    fn to_prime(&self) -> Option<Self> {
        Some(self.clone())
    }
    fn from_prime(_: &(), x: &Self) -> Self {
        x.clone()
    }
    fn display_parts(&self) -> Vec<TermPart> {
        if Zero::is_zero(self) {
            return Vec::new();
        }
        vec![TermPart::numeric(Signed::is_negative(self), self.abs().to_string())]
    }
}

/// Residue class modulo a machine-word prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// `modulus` must already be known prime; see [`is_prime`].
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_signed(n: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let r = ((n % &m) + &m) % &m;
        let value: u64 = r.try_into().expect("residue fits in u64");
        Fp { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "prime field mismatch");
    }

    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.modulus
    }
    fn zero(p: &u64) -> Self {
        Fp::new(0, *p)
    }
    fn one(p: &u64) -> Self {
        Fp::new(1, *p)
    }
    fn from_bigint(p: &u64, n: &BigInt) -> Self {
        Fp::from_signed(n, *p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value as u128 + rhs.value as u128;
        Fp::new((s % self.modulus as u128) as u64, self.modulus)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Fp::new(Self::mulmod(self.value, rhs.value, self.modulus), self.modulus)
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp::new(self.modulus - self.value, self.modulus)
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = self.modulus;
        let mut base = self.value;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Self::mulmod(acc, base, p);
            }
            base = Self::mulmod(base, base, p);
            exp >>= 1;
        }
        Some(Fp::new(acc, p))
    }
    fn characteristic(p: &u64) -> u64 {
        *p
    }
    fn prime_ctx(p: &u64) -> u64 {
        *p
    }
    fn to_prime(&self) -> Option<Self> {
        Some(*self)
    }
    fn from_prime(_: &u64, x: &Self) -> Self {
        *x
    }
    fn display_parts(&self) -> Vec<TermPart> {
        if self.value == 0 {
            return Vec::new();
        }
        vec![TermPart::numeric(false, self.value.to_string())]
    }
}

/// Trial division up to √n.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Binomial coefficient as a ring element.
pub fn binomial<R: Ring>(ctx: &R::Ctx, n: u64, k: u64) -> R {
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    R::from_bigint(ctx, &acc)
}
