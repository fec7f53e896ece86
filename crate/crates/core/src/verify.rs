//! Randomized identity checks on a single algebra.

use std::sync::Arc;

use crate::algebra::{AlgElement, AlgebraKind, AlgebraSpec, ValidationReport};
use crate::coeff::{FieldDescriptor, FieldValue};
use crate::field::{binomial, Ring};
use crate::generic::{eval_upoly_at_element, generic_minimal_polynomial, minimal_polynomial_of, GenericCharPoly, GenericError};
use crate::random::{RandomSource, DEFAULT_HEIGHT};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub height: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 25,
            seed: 0,
            height: DEFAULT_HEIGHT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    /// First failing sample with a human-readable witness.
    Failed { sample: usize, witness: Vec<String> },
    Skipped(String),
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub description: &'static str,
    pub status: CheckStatus,
}

impl CheckOutcome {
    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Failed { .. } | CheckStatus::Error(_))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub algebra: String,
    pub samples: usize,
    pub seed: u64,
    pub degree: Option<usize>,
    pub structure: ValidationReport,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.failed())
    }
}

struct Sample {
    a: AlgElement<FieldValue>,
    b: AlgElement<FieldValue>,
    alpha: FieldValue,
    beta: FieldValue,
}

type Elem = AlgElement<FieldValue>;
type Witness = Vec<String>;

fn show(label: &str, e: &Elem) -> String {
    format!("{label} = {e}")
}

fn run(
    samples: &[Sample],
    mut check: impl FnMut(&Sample) -> Result<Option<Witness>, GenericError>,
) -> CheckStatus {
    for (i, s) in samples.iter().enumerate() {
        match check(s) {
            Ok(None) => {}
            Ok(Some(witness)) => return CheckStatus::Failed { sample: i, witness },
            Err(e) => return CheckStatus::Error(format!("sample {i}: {e}")),
        }
    }
    CheckStatus::Passed
}

fn cayley_hamilton(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let f = g.char_poly(&s.a)?;
    let v = eval_upoly_at_element(&f, &s.a)?;
    Ok((!v.is_zero()).then(|| vec![show("a", &s.a), format!("charpoly(a) = {f}"), format!("charpoly(a)(a) = {v}")]))
}

fn jordan_u(a: &Elem, b: &Elem) -> Result<Elem, GenericError> {
    let mm = |x: &Elem, y: &Elem| x.mul(y).map_err(|_| GenericError::AlgebraMismatch);
    let ab = mm(a, b)?;
    let two = FieldValue::from_i64(a.field(), 2);
    let left = mm(a, &ab)?.scale(&two).map_err(|_| GenericError::FieldMismatch)?;
    let right = mm(&mm(a, a)?, b)?;
    left.sub(&right).map_err(|_| GenericError::AlgebraMismatch)
}

fn det_multiplicative(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let da = g.det(&s.a)?;
    let db = g.det(&s.b)?;
    let (prod, expected, label) = match g.algebra().kind() {
        AlgebraKind::Associative => {
            let ab = s.a.mul(&s.b).map_err(|_| GenericError::AlgebraMismatch)?;
            (ab, da.mul(&db), "det(a*b)")
        }
        AlgebraKind::Jordan => (jordan_u(&s.a, &s.b)?, da.mul(&da).mul(&db), "det(U_a b)"),
    };
    let got = g.det(&prod)?;
    Ok((got != expected).then(|| {
        vec![
            show("a", &s.a),
            show("b", &s.b),
            format!("{label} = {got}"),
            format!("expected {expected}"),
        ]
    }))
}

fn homogeneity(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let scaled = s.a.scale(&s.alpha).map_err(|_| GenericError::FieldMismatch)?;
    let cs = g.coefficients(&s.a)?;
    let cs_scaled = g.coefficients(&scaled)?;
    for (i, (c, cs)) in cs.iter().zip(&cs_scaled).enumerate() {
        let expected = s.alpha.pow(i as u32 + 1).mul(c);
        if *cs != expected {
            return Ok(Some(vec![
                show("a", &s.a),
                format!("alpha = {}", s.alpha),
                format!("c{}(alpha*a) = {cs}", i + 1),
                format!("expected {expected}"),
            ]));
        }
    }
    Ok(None)
}

fn trace_linearity(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let err = |_| GenericError::AlgebraMismatch;
    let combo = s.a.scale(&s.alpha).map_err(err)?.add(&s.b.scale(&s.beta).map_err(err)?).map_err(err)?;
    let got = g.trace(&combo)?;
    let expected = s.alpha.mul(&g.trace(&s.a)?).add(&s.beta.mul(&g.trace(&s.b)?));
    Ok((got != expected).then(|| {
        vec![
            show("a", &s.a),
            show("b", &s.b),
            format!("alpha = {}, beta = {}", s.alpha, s.beta),
            format!("tr(alpha*a + beta*b) = {got}"),
            format!("expected {expected}"),
        ]
    }))
}

fn swap_invariance(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let ab = s.a.mul(&s.b).map_err(|_| GenericError::AlgebraMismatch)?;
    let ba = s.b.mul(&s.a).map_err(|_| GenericError::AlgebraMismatch)?;
    let x = g.coefficients(&ab)?;
    let y = g.coefficients(&ba)?;
    for (i, (p, q)) in x.iter().zip(&y).enumerate() {
        if p != q {
            return Ok(Some(vec![
                show("a", &s.a),
                show("b", &s.b),
                format!("c{}(a*b) = {p}", i + 1),
                format!("c{}(b*a) = {q}", i + 1),
            ]));
        }
    }
    Ok(None)
}

fn minpoly_divides(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let min = minimal_polynomial_of(&s.a);
    let ch = g.char_poly(&s.a)?;
    let divides = min.divides(&ch).unwrap_or(false);
    Ok((!divides).then(|| vec![show("a", &s.a), format!("minpoly(a) = {min}"), format!("charpoly(a) = {ch}")]))
}

fn adjoint_identity(g: &GenericCharPoly<FieldValue>, s: &Sample) -> Result<Option<Witness>, GenericError> {
    let adj = g.adjoint(&s.a)?;
    let lhs = s.a.mul(&adj).map_err(|_| GenericError::AlgebraMismatch)?;
    let det = g.det(&s.a)?;
    let rhs = s.a.algebra().unit_element().scale(&det).map_err(|_| GenericError::FieldMismatch)?;
    Ok((lhs != rhs).then(|| vec![show("a", &s.a), show("adj(a)", &adj), show("a*adj(a)", &lhs), format!("det(a) = {det}")]))
}

fn unit_binomial(g: &GenericCharPoly<FieldValue>, field: &FieldDescriptor) -> Result<Option<Witness>, GenericError> {
    let unit = g.algebra().unit_element();
    let n = g.degree() as u64;
    for (i, c) in g.coefficients(&unit)?.iter().enumerate() {
        let expected: FieldValue = binomial(field, n, i as u64 + 1);
        if *c != expected {
            return Ok(Some(vec![format!("c{}(1) = {c}", i + 1), format!("expected {expected}")]));
        }
    }
    Ok(None)
}

/// Run every check on `samples` seeded random elements and pairs.
type SampleCheck = fn(&GenericCharPoly<FieldValue>, &Sample) -> Result<Option<Witness>, GenericError>;

pub fn verify_algebra(spec: &Arc<AlgebraSpec<FieldValue>>, opts: &VerifyOptions) -> VerifyReport {
    let structure = spec.validate();
    let mut report = VerifyReport {
        algebra: spec.name().to_string(),
        samples: opts.samples,
        seed: opts.seed,
        degree: None,
        structure: structure.clone(),
        checks: Vec::new(),
    };
    report.checks.push(CheckOutcome {
        name: "structure",
        description: "unit axiom and associativity (commutativity for Jordan) on the basis",
        status: if structure.is_valid() {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed {
                sample: 0,
                witness: structure.describe(spec.basis_labels()),
            }
        },
    });
    let g = match generic_minimal_polynomial(spec) {
        Ok(g) => g,
        Err(e) => {
            report.checks.push(CheckOutcome {
                name: "generic",
                description: "generic minimal polynomial with polynomial coefficients",
                status: CheckStatus::Error(e.to_string()),
            });
            return report;
        }
    };
    report.degree = Some(g.degree());
    let field = spec.field().clone();
    let mut rng = RandomSource::new(opts.seed, opts.height);
    let samples: Vec<Sample> = (0..opts.samples)
        .map(|_| Sample {
            a: rng.element(spec),
            b: rng.element(spec),
            alpha: rng.nonzero_value(&field),
            beta: rng.value(&field),
        })
        .collect();

    let unit_status = match unit_binomial(&g, &field) {
        Ok(None) => CheckStatus::Passed,
        Ok(Some(witness)) => CheckStatus::Failed { sample: 0, witness },
        Err(e) => CheckStatus::Error(e.to_string()),
    };
    report.checks.push(CheckOutcome {
        name: "unit-binomial",
        description: "c_i(1) = C(n, i)",
        status: unit_status,
    });
    let checks: [(&'static str, &'static str, SampleCheck); 7] = [
        ("cayley-hamilton", "charpoly(a)(a) = 0", cayley_hamilton),
        (
            "det-multiplicative",
            if spec.kind() == AlgebraKind::Jordan {
                "det(2a(ab) - (aa)b) = det(a)^2 det(b)"
            } else {
                "det(ab) = det(a) det(b)"
            },
            det_multiplicative,
        ),
        ("homogeneity", "c_i(alpha a) = alpha^i c_i(a)", homogeneity),
        ("trace-linearity", "tr(alpha a + beta b) = alpha tr(a) + beta tr(b)", trace_linearity),
        ("swap-invariance", "c_i(ab) = c_i(ba)", swap_invariance),
        ("minpoly-divides-charpoly", "minpoly(a) divides charpoly(a)", minpoly_divides),
        ("adjoint", "a adj(a) = det(a) 1", adjoint_identity),
    ];
    for (name, description, f) in checks {
        let status = if name == "swap-invariance" && spec.kind() == AlgebraKind::Jordan {
            CheckStatus::Skipped("commutative product".into())
        } else {
            run(&samples, |s| f(&g, s))
        };
        report.checks.push(CheckOutcome {
            name,
            description,
            status,
        });
    }
    report
}
