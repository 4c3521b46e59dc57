//! 2x2 matrices over an exact field.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldKind};
use crate::fmat::FMat2;

/// `[[a, b], [c, d]]` over one field, with the determinant cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
    det: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Mat2> {
        let det = a.try_mul(&d)?.try_sub(&b.try_mul(&c)?)?;
        Ok(Mat2 { a, b, c, d, det })
    }

    /// A matrix in SL2: rejects any determinant other than 1.
    pub fn sl2(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Mat2> {
        let m = Mat2::new(a, b, c, d)?;
        if !m.det.is_one() {
            return Err(Error::NotUnimodular(m.det.to_string()));
        }
        Ok(m)
    }

    /// A matrix in GL2: rejects determinant 0.
    pub fn gl2(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Mat2> {
        let m = Mat2::new(a, b, c, d)?;
        if m.det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn from_ints(kind: &FieldKind, rows: [[i64; 2]; 2]) -> Mat2 {
        let e = |v| FieldElement::from_int(v, kind);
        Mat2::new(e(rows[0][0]), e(rows[0][1]), e(rows[1][0]), e(rows[1][1])).expect("one field")
    }

    pub fn identity(kind: &FieldKind) -> Mat2 {
        Mat2::from_ints(kind, [[1, 0], [0, 1]])
    }

    pub fn diag(x: FieldElement, y: FieldElement) -> Result<Mat2> {
        let z = FieldElement::zero(&x.kind());
        Mat2::new(x, z.clone(), z, y)
    }

    pub fn kind(&self) -> FieldKind {
        self.a.kind()
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }
    pub fn b(&self) -> &FieldElement {
        &self.b
    }
    pub fn c(&self) -> &FieldElement {
        &self.c
    }
    pub fn d(&self) -> &FieldElement {
        &self.d
    }

    pub fn entries(&self) -> [&FieldElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> &FieldElement {
        &self.det
    }

    pub fn trace(&self) -> FieldElement {
        &self.a + &self.d
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.is_one()
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.is_one() && self.d.is_one()
    }

    pub fn is_minus_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a.negated().is_one() && self.d.negated().is_one()
    }

    pub fn checked_mul(&self, o: &Mat2) -> Result<Mat2> {
        if !self.a.same_field(&o.a) {
            return Err(Error::MixedFields(self.kind().to_string(), o.kind().to_string()));
        }
        Ok(self * o)
    }

    /// `[[d, -b], [-c, a]]`; the inverse whenever `det = 1`.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 {
            a: self.d.clone(),
            b: self.b.negated(),
            c: self.c.negated(),
            d: self.a.clone(),
            det: self.det.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Mat2> {
        if self.det.is_one() {
            return Ok(self.adjugate());
        }
        let inv = self.det.try_inv().map_err(|_| Error::SingularMatrix)?;
        self.adjugate().scale(&inv)
    }

    pub fn scale(&self, s: &FieldElement) -> Result<Mat2> {
        Mat2::new(self.a.try_mul(s)?, self.b.try_mul(s)?, self.c.try_mul(s)?, self.d.try_mul(s)?)
    }

    pub fn negated(&self) -> Mat2 {
        Mat2 {
            a: self.a.negated(),
            b: self.b.negated(),
            c: self.c.negated(),
            d: self.d.negated(),
            det: self.det.clone(),
        }
    }

    pub fn add(&self, o: &Mat2) -> Result<Mat2> {
        Mat2::new(self.a.try_add(&o.a)?, self.b.try_add(&o.b)?, self.c.try_add(&o.c)?, self.d.try_add(&o.d)?)
    }

    pub fn sub(&self, o: &Mat2) -> Result<Mat2> {
        self.add(&o.negated())
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Mat2) -> Result<Mat2> {
        g.checked_mul(self)?.checked_mul(&g.inverse()?)
    }

    pub fn embed_into(&self, kind: &FieldKind) -> Result<Mat2> {
        if self.kind() == *kind {
            return Ok(self.clone());
        }
        Mat2::new(
            self.a.embed_into(kind)?,
            self.b.embed_into(kind)?,
            self.c.embed_into(kind)?,
            self.d.embed_into(kind)?,
        )
    }

    /// Real embedding, if the field has one.
    pub fn to_f64(&self) -> Option<FMat2> {
        Some(FMat2::new(self.a.to_f64()?, self.b.to_f64()?, self.c.to_f64()?, self.d.to_f64()?))
    }
}

/// `a b a^-1 b^-1` for unimodular `a`, `b`.
pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    &(&(a * b) * &a.adjugate()) * &b.adjugate()
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    /// Panics if the operands live in different fields; see [`Mat2::checked_mul`].
    fn mul(self, o: &Mat2) -> Mat2 {
        let a = &self.a * &o.a + &self.b * &o.c;
        let b = &self.a * &o.b + &self.b * &o.d;
        let c = &self.c * &o.a + &self.d * &o.c;
        let d = &self.c * &o.b + &self.d * &o.d;
        let det = &self.det * &o.det;
        Mat2 { a, b, c, d, det }
    }
}

impl fmt::Display for Mat2 {
    /// Row-major, whitespace separated: the matrix line syntax of the file formats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}
