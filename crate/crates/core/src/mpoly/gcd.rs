//! Multivariate GCD by primitive polynomial remainder sequences, recursing on
//! the last variable that occurs in either argument.

use super::{MPoly, Monomial};
use crate::field::Field;

impl<F: Field> MPoly<F> {
    /// Greatest common divisor, normalized to graded-lex leading coefficient 1.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(self.ring == other.ring, "ring mismatch");
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return MPoly::one(&self.ring);
        }
        if self == other {
            return self.monic();
        }
        // fast path for monomials
        if self.nterms() == 1 && other.nterms() == 1 {
            let a = &self.terms[0].0;
            let b = &other.terms[0].0;
            let exps: Vec<u16> = a
                .exponents()
                .iter()
                .zip(b.exponents())
                .map(|(x, y)| *x.min(y))
                .collect();
            return MPoly::monomial(&self.ring, Monomial::from_exponents(&exps), F::one(self.field()));
        }
        let var = (0..self.nvars())
            .rev()
            .find(|&v| self.degree_in(v) > 0 || other.degree_in(v) > 0)
            .expect("non-constant polynomial has a variable");
        if self.degree_in(var) == 0 {
            return self.gcd(&other.content_in(var));
        }
        if other.degree_in(var) == 0 {
            return other.gcd(&self.content_in(var));
        }
        let ca = self.content_in(var);
        let cb = other.content_in(var);
        let content = ca.gcd(&cb);
        let mut r0 = self.exact_divide(&ca).expect("content divides");
        let mut r1 = other.exact_divide(&cb).expect("content divides");
        if r0.degree_in(var) < r1.degree_in(var) {
            std::mem::swap(&mut r0, &mut r1);
        }
        loop {
            let r = r0.pseudo_rem(&r1, var);
            if r.is_zero() {
                break;
            }
            if r.degree_in(var) == 0 {
                r1 = MPoly::one(&self.ring);
                break;
            }
            r0 = r1;
            r1 = r.primitive_part(var);
        }
        let g = r1.primitive_part(var);
        (&content * &g).monic()
    }

    /// GCD of the coefficients with respect to `var`.
    fn content_in(&self, var: usize) -> Self {
        let mut acc = MPoly::zero(&self.ring);
        for c in self.coeffs_in(var) {
            if c.is_zero() {
                continue;
            }
            acc = acc.gcd(&c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    fn primitive_part(&self, var: usize) -> Self {
        let c = self.content_in(var);
        self.exact_divide(&c).expect("content divides").monic()
    }

    /// `lc^k * self mod other` with respect to `var`.
    fn pseudo_rem(&self, other: &Self, var: usize) -> Self {
        let db = other.degree_in(var);
        let coeffs_b = other.coeffs_in(var);
        let lc = coeffs_b[db as usize].clone();
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(var);
            if dr < db {
                break;
            }
            let lr = r.coeffs_in(var).swap_remove(dr as usize);
            let shifted = (&lr * other).mul_var_pow(var, dr - db);
            r = &(&r * &lc) - &shifted;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::super::PolyRing;
    use super::*;
    use crate::field::Rational;

    fn ring() -> PolyRing<Rational> {
        PolyRing::new((), vec!["t1".into(), "t2".into(), "t3".into()])
    }

    #[test]
    fn gcd_of_square_differences() {
        let r = ring();
        let t1 = MPoly::var(&r, 0);
        let t2 = MPoly::var(&r, 1);
        let a = &t1.pow(2) - &t2.pow(2);
        let b = (&t1 + &t2).pow(2);
        let g = a.gcd(&b);
        assert_eq!(g, &t1 + &t2);
        assert!(a.exact_divide(&g).is_ok());
        assert!(b.exact_divide(&g).is_ok());
    }

    #[test]
    fn gcd_edge_cases() {
        let r = ring();
        let t1 = MPoly::var(&r, 0);
        let t2 = MPoly::var(&r, 1);
        let two = MPoly::constant(&r, Rational::from_integer(2.into()));
        let p = &(&t1 * &two) + &t2;
        assert_eq!(p.gcd(&MPoly::zero(&r)), p.monic());
        assert!(t1.gcd(&t2).is_one());
        assert_eq!(p.gcd(&MPoly::zero(&r)).leading_coeff().unwrap(), &Rational::from_integer(1.into()));
    }

    #[test]
    fn gcd_with_content_in_lower_variables() {
        let r = ring();
        let t = |i| MPoly::var(&r, i);
        // (t1 + 1) * (t3 * t2 + t1) and (t1 + 1) * (t3 - t2)
        let common = &t(0) + &MPoly::one(&r);
        let a = &common * &(&(&t(2) * &t(1)) + &t(0));
        let b = &common * &(&t(2) - &t(1));
        assert_eq!(a.gcd(&b), common);
        let c = &common * &t(1);
        assert_eq!(c.gcd(&(&common * &common)), common);
    }
}
