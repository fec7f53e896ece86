//! Seeded random field values and algebra elements (ChaCha8 stream).

use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElement, AlgebraSpec};
use crate::coeff::{FieldDescriptor, FieldValue};
use crate::field::Ring;

pub const DEFAULT_HEIGHT: u32 = 9;

pub struct RandomSource {
    rng: ChaCha8Rng,
    height: i64,
}

impl RandomSource {
    pub fn new(seed: u64, height: u32) -> Self {
        RandomSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height: height.max(1) as i64,
        }
    }

    /// Over Q: `n/d` with `n, d` uniform in `[-h, h]`, `d != 0`. Over F_p:
    /// a uniform residue. Over a rational-function field: a polynomial of
    /// degree at most 1 in the field's own variables with random base
    /// coefficients.
    pub fn value(&mut self, field: &FieldDescriptor) -> FieldValue {
        match field {
            FieldDescriptor::Rationals => {
                let h = self.height;
                let n = self.rng.gen_range(-h..=h);
                let mut d = 0;
                while d == 0 {
                    d = self.rng.gen_range(-h..=h);
                }
                FieldValue::rational(n, d)
            }
            FieldDescriptor::PrimeField(p) => {
                let r = self.rng.gen_range(0..*p);
                FieldValue::from_bigint(field, &BigInt::from(r))
            }
            FieldDescriptor::RationalFunctions(ring) => {
                let base = ring.field().clone();
                let mut acc = field.lift(&self.value(&base));
                for name in ring.vars() {
                    let c = field.lift(&self.value(&base));
                    acc = acc.add(&c.mul(&field.var(name).expect("own variable")));
                }
                acc
            }
        }
    }

    pub fn nonzero_value(&mut self, field: &FieldDescriptor) -> FieldValue {
        loop {
            let v = self.value(field);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn element(&mut self, spec: &Arc<AlgebraSpec<FieldValue>>) -> AlgElement<FieldValue> {
        let coords = (0..spec.dim()).map(|_| self.value(spec.field())).collect();
        spec.element(coords).expect("coordinates in the base field")
    }
}
