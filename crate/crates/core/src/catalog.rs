//! Constructors for the standard example algebras.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{matrix_algebra_over, AlgebraError, AlgebraKind, AlgebraSpec};
use crate::coeff::{FieldDescriptor, FieldValue};
use crate::field::{Field, Ring};
use crate::generic::{generic_minimal_polynomial, GenericError};
use crate::matrix::Matrix;
use crate::oracle::{leibniz_det, OracleError};
use crate::upoly::UPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("characteristic 2 is not allowed here")]
    BadCharacteristic,
    #[error("size must be even")]
    OddDimension,
    #[error("size must be odd")]
    EvenDimension,
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("modulus must be monic of degree at least 1")]
    NotMonic,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Generic(#[from] GenericError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

type Spec = Arc<AlgebraSpec<FieldValue>>;
type Table = Vec<Vec<Vec<FieldValue>>>;

fn unit_vector(f: &FieldDescriptor, m: usize, k: usize) -> Vec<FieldValue> {
    (0..m).map(|i| if i == k { f.one() } else { f.zero() }).collect()
}

fn zero_table(f: &FieldDescriptor, m: usize) -> Table {
    vec![vec![vec![f.zero(); m]; m]; m]
}

/// The field itself as a one-dimensional algebra.
pub fn scalar_algebra(f: &FieldDescriptor) -> Spec {
    AlgebraSpec::new(
        f.to_string(),
        f.clone(),
        vec!["1".into()],
        vec![f.one()],
        AlgebraKind::Associative,
        vec![vec![vec![f.one()]]],
    )
    .expect("well-formed")
}

/// `M_n(F)` with basis `E_ij` in row-major order.
pub fn full_matrix_algebra(f: &FieldDescriptor, n: usize) -> Result<Spec, CatalogError> {
    if n == 0 {
        return Err(CatalogError::ZeroSize);
    }
    Ok(matrix_algebra_over(&scalar_algebra(f), n)?)
}

/// Upper triangular `n x n` matrices; basis `E_11..E_nn` first, then `E_ij`
/// for `i < j` in row-major order.
pub fn upper_triangular_algebra(f: &FieldDescriptor, n: usize) -> Result<Spec, CatalogError> {
    if n == 0 {
        return Err(CatalogError::ZeroSize);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let m = pairs.len();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
    let mut table = zero_table(f, m);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                table[a][b][index((i, l))] = f.one();
            }
        }
    }
    let mut unit = vec![f.zero(); m];
    for u in unit.iter_mut().take(n) {
        *u = f.one();
    }
    let labels = pairs.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    Ok(AlgebraSpec::new(format!("T{n}({f})"), f.clone(), labels, unit, AlgebraKind::Associative, table)?)
}

/// Hamilton quaternions with basis `1, i, j, k`.
pub fn quaternion_algebra(f: &FieldDescriptor) -> Result<Spec, CatalogError> {
    if f.characteristic() == 2 {
        return Err(CatalogError::BadCharacteristic);
    }
    // products[a][b] = (sign, target)
    const PRODUCTS: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let mut table = zero_table(f, 4);
    for a in 0..4 {
        for b in 0..4 {
            let (sign, k) = PRODUCTS[a][b];
            table[a][b][k] = f.int(sign);
        }
    }
    let labels = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
    Ok(AlgebraSpec::new(
        format!("H({f})"),
        f.clone(),
        labels,
        unit_vector(f, 4, 0),
        AlgebraKind::Associative,
        table,
    )?)
}

/// `F[x]/(modulus)` with basis `1, th, th^2, ...`. Irreducibility of the
/// modulus is not checked.
pub fn field_extension_algebra(f: &FieldDescriptor, modulus: &UPoly<FieldValue>) -> Result<Spec, CatalogError> {
    let d = match modulus.degree() {
        Some(d) if d >= 1 && modulus.is_monic() => d,
        _ => return Err(CatalogError::NotMonic),
    };
    if modulus.field() != f {
        return Err(AlgebraError::FieldMismatch.into());
    }
    let mut table = zero_table(f, d);
    for i in 0..d {
        for j in 0..d {
            let mut coeffs = vec![f.zero(); i + j + 1];
            coeffs[i + j] = f.one();
            let (_, r) = UPoly::new(f, coeffs).divrem(modulus).expect("nonzero modulus");
            table[i][j] = (0..d).map(|k| r.coeff(k)).collect();
        }
    }
    let labels = (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "th".to_string(),
            _ => format!("th^{k}"),
        })
        .collect();
    let name = format!("{f}[x]/({})", modulus);
    Ok(AlgebraSpec::new(name, f.clone(), labels, unit_vector(f, d, 0), AlgebraKind::Associative, table)?)
}

/// `F(su, sv)` over `F = F2(u, v)` with `su^2 = u`, `sv^2 = v`; basis
/// `1, su, sv, suv`.
pub fn inseparable_demo_algebra() -> Spec {
    let f = FieldDescriptor::rational_functions(FieldDescriptor::prime(2).expect("2 is prime"), &["u", "v"])
        .expect("fresh variables");
    let u = f.var("u").unwrap();
    let v = f.var("v").unwrap();
    let uv = u.mul(&v);
    let e = |k: usize, c: &FieldValue| -> Vec<FieldValue> {
        (0..4).map(|i| if i == k { c.clone() } else { f.zero() }).collect()
    };
    let one = f.one();
    let mut table = zero_table(&f, 4);
    let mut set = |a: usize, b: usize, coords: Vec<FieldValue>| {
        table[a][b] = coords.clone();
        table[b][a] = coords;
    };
    for k in 0..4 {
        set(0, k, e(k, &one));
    }
    set(1, 1, e(0, &u));
    set(2, 2, e(0, &v));
    set(3, 3, e(0, &uv));
    set(1, 2, e(3, &one));
    set(1, 3, e(2, &u));
    set(2, 3, e(1, &v));
    let labels = ["1", "su", "sv", "suv"].iter().map(|s| s.to_string()).collect();
    AlgebraSpec::new(
        "F2(u,v)(sqrt u, sqrt v)",
        f.clone(),
        labels,
        e(0, &one),
        AlgebraKind::Associative,
        table,
    )
    .expect("well-formed")
}

/// Block-diagonal `n x n` matrix with blocks `[[0, 1], [-1, 0]]`.
pub fn standard_symplectic(f: &FieldDescriptor, n: usize) -> Matrix<FieldValue> {
    let mut s = Matrix::zeros(f, n, n);
    for k in 0..n / 2 {
        s.set(2 * k, 2 * k + 1, f.one());
        s.set(2 * k + 1, 2 * k, f.int(-1));
    }
    s
}

fn skew_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Skew-symmetric `n x n` matrices under `a.b = (a S^-1 b + b S^-1 a)/2`,
/// basis `E_ij - E_ji` for `i < j`, unit `S`.
pub fn jordan_skew_algebra(f: &FieldDescriptor, n: usize) -> Result<Spec, CatalogError> {
    if f.characteristic() == 2 {
        return Err(CatalogError::BadCharacteristic);
    }
    if n == 0 {
        return Err(CatalogError::ZeroSize);
    }
    if n % 2 == 1 {
        return Err(CatalogError::OddDimension);
    }
    let pairs = skew_pairs(n);
    let m = pairs.len();
    let s_inv = standard_symplectic(f, n).neg();
    let half = f.int(2).inv().expect("characteristic is not 2");
    let basis_matrix = |(i, j): (usize, usize)| {
        let mut e = Matrix::zeros(f, n, n);
        e.set(i, j, f.one());
        e.set(j, i, f.int(-1));
        e
    };
    let mats: Vec<Matrix<FieldValue>> = pairs.iter().map(|&p| basis_matrix(p)).collect();
    let mut table = zero_table(f, m);
    for a in 0..m {
        for b in 0..m {
            let prod = mats[a].mul(&s_inv).mul(&mats[b]).add(&mats[b].mul(&s_inv).mul(&mats[a])).scale(&half);
            table[a][b] = pairs.iter().map(|&(i, j)| prod.get(i, j).clone()).collect();
        }
    }
    let unit = pairs
        .iter()
        .map(|&(i, j)| if j == i + 1 && i % 2 == 0 { f.one() } else { f.zero() })
        .collect();
    let labels = pairs.iter().map(|(i, j)| format!("A{}{}", i + 1, j + 1)).collect();
    Ok(AlgebraSpec::new(format!("Skew{n}({f})"), f.clone(), labels, unit, AlgebraKind::Jordan, table)?)
}

/// Coordinates of a skew-symmetric matrix in the basis of
/// [`jordan_skew_algebra`].
pub fn skew_coordinates(a: &Matrix<FieldValue>) -> Result<Vec<FieldValue>, CatalogError> {
    if !a.is_skew_symmetric() {
        return Err(CatalogError::NotSkewSymmetric);
    }
    Ok(skew_pairs(a.rows()).into_iter().map(|(i, j)| a.get(i, j).clone()).collect())
}

/// Determinant of `a` as an element of the skew Jordan algebra.
pub fn pfaffian(f: &FieldDescriptor, a: &Matrix<FieldValue>) -> Result<FieldValue, CatalogError> {
    let coords = skew_coordinates(a)?;
    let spec = jordan_skew_algebra(f, a.rows())?;
    let g = generic_minimal_polynomial(&spec)?;
    let elem = spec.element(coords)?;
    Ok(g.det(&elem)?)
}

/// Leibniz determinant of an odd-size skew-symmetric matrix (always zero).
pub fn odd_skew_det_check(f: &FieldDescriptor, a: &Matrix<FieldValue>) -> Result<FieldValue, CatalogError> {
    if f.characteristic() == 2 {
        return Err(CatalogError::BadCharacteristic);
    }
    if !a.is_skew_symmetric() {
        return Err(CatalogError::NotSkewSymmetric);
    }
    if a.rows().is_multiple_of(2) {
        return Err(CatalogError::EvenDimension);
    }
    Ok(leibniz_det(a)?)
}

/// A named catalog algebra with its documented degree.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub spec: Spec,
    pub expected_degree: usize,
    pub notes: &'static str,
}

/// Every catalog algebra. `m2h` (dimension 16) is included but its generic
/// polynomial is expensive.
pub fn catalog() -> Vec<CatalogEntry> {
    let q = FieldDescriptor::Rationals;
    let quaternions = quaternion_algebra(&q).expect("char 0");
    let x2m2 = UPoly::new(&q, vec![q.int(-2), q.zero(), q.one()]);
    let entry = |id, spec, expected_degree, notes| CatalogEntry {
        id,
        spec,
        expected_degree,
        notes,
    };
    vec![
        entry("quaternions", quaternions.clone(), 2, "Hamilton quaternions over Q, basis 1, i, j, k"),
        entry("m2q", full_matrix_algebra(&q, 2).unwrap(), 2, "2x2 matrices over Q"),
        entry("m3q", full_matrix_algebra(&q, 3).unwrap(), 3, "3x3 matrices over Q"),
        entry("ut2", upper_triangular_algebra(&q, 2).unwrap(), 2, "upper triangular 2x2 over Q"),
        entry("ut3", upper_triangular_algebra(&q, 3).unwrap(), 3, "upper triangular 3x3 over Q"),
        entry("ut4", upper_triangular_algebra(&q, 4).unwrap(), 4, "upper triangular 4x4 over Q"),
        entry("sqrt2", field_extension_algebra(&q, &x2m2).unwrap(), 2, "Q[x]/(x^2 - 2)"),
        entry("inseparable", inseparable_demo_algebra(), 2, "purely inseparable extension of F2(u,v) of degree 4"),
        entry("skew2", jordan_skew_algebra(&q, 2).unwrap(), 1, "Jordan algebra of 2x2 skew matrices over Q"),
        entry("skew4", jordan_skew_algebra(&q, 4).unwrap(), 2, "Jordan algebra of 4x4 skew matrices over Q"),
        entry(
            "m2h",
            matrix_algebra_over(&quaternions, 2).unwrap().renamed("M2(H(Q))"),
            4,
            "2x2 matrices over the quaternions, 16-dimensional over Q",
        ),
    ]
}

pub fn catalog_entry(id: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> FieldValue {
        FieldValue::rational(n, 1)
    }

    #[test]
    fn every_entry_validates() {
        for e in catalog() {
            let r = e.spec.validate();
            assert!(r.is_valid(), "{}: {:?}", e.id, r.violations);
        }
    }

    #[test]
    fn small_entries_have_expected_degree() {
        for e in catalog().into_iter().filter(|e| e.id != "m2h") {
            let g = generic_minimal_polynomial(&e.spec).unwrap();
            assert_eq!(g.degree(), e.expected_degree, "{}", e.id);
        }
    }

    #[test]
    fn quaternion_generic() {
        let h = quaternion_algebra(&FieldDescriptor::Rationals).unwrap();
        let g = generic_minimal_polynomial(&h).unwrap();
        assert_eq!(g.render(), "x^2 - (2*t1)*x + (t1^2 + t2^2 + t3^2 + t4^2)");
        let k = h.basis_element(3);
        assert_eq!(k.mul(&k).unwrap(), h.unit_element().neg());
        assert_eq!(
            quaternion_algebra(&FieldDescriptor::prime(2).unwrap()).unwrap_err(),
            CatalogError::BadCharacteristic
        );
    }

    #[test]
    fn matrix_generic_determinant() {
        let m2 = full_matrix_algebra(&FieldDescriptor::Rationals, 2).unwrap();
        let g = generic_minimal_polynomial(&m2).unwrap();
        assert_eq!(g.coeff_poly(2).to_string(), "t1*t4 - t2*t3");
        assert_eq!(g.coeff_poly(1).to_string(), "t1 + t4");
        let m1 = full_matrix_algebra(&FieldDescriptor::Rationals, 1).unwrap();
        assert_eq!(generic_minimal_polynomial(&m1).unwrap().render(), "x - (t1)");
    }

    #[test]
    fn upper_triangular_generic() {
        let t2 = upper_triangular_algebra(&FieldDescriptor::Rationals, 2).unwrap();
        let g = generic_minimal_polynomial(&t2).unwrap();
        assert_eq!(g.render(), "x^2 - (t1 + t2)*x + (t1*t2)");
        assert_eq!(upper_triangular_algebra(&FieldDescriptor::Rationals, 4).unwrap().dim(), 10);
    }

    #[test]
    fn inseparable_generic() {
        let a = inseparable_demo_algebra();
        let g = generic_minimal_polynomial(&a).unwrap();
        assert_eq!(g.render(), "x^2 + (t1^2 + t2^2*u + t3^2*v + t4^2*u*v)");
        let su = a.basis_element(1);
        assert_eq!(g.char_poly(&su).unwrap().to_string(), "x^2 + u");
        assert_eq!(g.det(&su).unwrap().to_string(), "u");
    }

    #[test]
    fn sqrt2_extension() {
        let f = FieldDescriptor::Rationals;
        let modulus = UPoly::new(&f, vec![q(-2), q(0), q(1)]);
        let a = field_extension_algebra(&f, &modulus).unwrap();
        let g = generic_minimal_polynomial(&a).unwrap();
        let th = a.basis_element(1);
        assert_eq!(g.char_poly(&th).unwrap(), modulus);
        assert_eq!(g.det(&th).unwrap(), q(-2));
        assert_eq!(g.trace(&th).unwrap(), q(0));
        let one_plus = a.element(vec![q(1), q(1)]).unwrap();
        assert_eq!(g.det(&one_plus).unwrap(), q(-1));
        let bad = UPoly::new(&f, vec![q(1), q(2)]);
        assert_eq!(field_extension_algebra(&f, &bad).unwrap_err(), CatalogError::NotMonic);
        let linear = UPoly::new(&f, vec![q(-5), q(1)]);
        let a = field_extension_algebra(&f, &linear).unwrap();
        let g = generic_minimal_polynomial(&a).unwrap();
        assert_eq!(g.det(&a.element(vec![q(7)]).unwrap()).unwrap(), q(7));
    }

    #[test]
    fn skew_algebras() {
        let f = FieldDescriptor::Rationals;
        let s2 = jordan_skew_algebra(&f, 2).unwrap();
        assert_eq!(generic_minimal_polynomial(&s2).unwrap().render(), "x - (t1)");
        let s4 = jordan_skew_algebra(&f, 4).unwrap();
        assert_eq!(s4.dim(), 6);
        assert_eq!(pfaffian(&f, &standard_symplectic(&f, 4)).unwrap(), q(1));
        assert_eq!(pfaffian(&f, &standard_symplectic(&f, 2)).unwrap(), q(1));
        let a = Matrix::from_rows(&f, vec![vec![q(0), q(7)], vec![q(-7), q(0)]]);
        assert_eq!(pfaffian(&f, &a).unwrap(), q(7));
        assert_eq!(jordan_skew_algebra(&f, 3).unwrap_err(), CatalogError::OddDimension);
        let not_skew = Matrix::from_rows(&f, vec![vec![q(1), q(7)], vec![q(-7), q(0)]]);
        assert_eq!(pfaffian(&f, &not_skew).unwrap_err(), CatalogError::NotSkewSymmetric);
        let zero1 = Matrix::from_rows(&f, vec![vec![q(0)]]);
        assert_eq!(odd_skew_det_check(&f, &zero1).unwrap(), q(0));
    }
}
