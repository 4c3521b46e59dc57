//! The projective line P^1(K) of an ordered field, its cyclic order, and the
//! Moebius action.
//!
//! Orientation convention: `psi([0:1], [1:1], [1:0]) = +1`, i.e. `0 -> 1 -> infinity`
//! runs in the positive direction, and on finite points `psi(u, v, w)` is the sign of
//! `(v - u)(w - v)(w - u)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldKind, Sign};
use crate::matrix::Mat2;

/// A point `[x : y]` in canonical form: `y = 1`, or `[1 : 0]` for infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    x: FieldElement,
    y: FieldElement,
}

impl ProjPoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<ProjPoint> {
        if !x.same_field(&y) {
            return Err(Error::MixedFields(x.kind().to_string(), y.kind().to_string()));
        }
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::ZeroPoint);
            }
            return Ok(ProjPoint::infinity(&x.kind()));
        }
        let x = x.try_div(&y)?;
        let y = FieldElement::one(&x.kind());
        Ok(ProjPoint { x, y })
    }

    /// The affine point `[x : 1]`.
    pub fn finite(x: FieldElement) -> ProjPoint {
        let y = FieldElement::one(&x.kind());
        ProjPoint { x, y }
    }

    pub fn infinity(kind: &FieldKind) -> ProjPoint {
        ProjPoint { x: FieldElement::one(kind), y: FieldElement::zero(kind) }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }

    pub fn kind(&self) -> FieldKind {
        self.x.kind()
    }

    pub fn embed_into(&self, kind: &FieldKind) -> Result<ProjPoint> {
        Ok(ProjPoint { x: self.x.embed_into(kind)?, y: self.y.embed_into(kind)? })
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

/// Value of the orientation function: `-1`, `0` or `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i64", try_from = "i64")]
pub enum Orientation {
    Negative,
    Degenerate,
    Positive,
}

impl Orientation {
    pub fn value(self) -> i64 {
        match self {
            Orientation::Negative => -1,
            Orientation::Degenerate => 0,
            Orientation::Positive => 1,
        }
    }
}

impl From<Sign> for Orientation {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Negative => Orientation::Negative,
            Sign::Zero => Orientation::Degenerate,
            Sign::Positive => Orientation::Positive,
        }
    }
}

impl From<Orientation> for i64 {
    fn from(o: Orientation) -> i64 {
        o.value()
    }
}

impl TryFrom<i64> for Orientation {
    type Error = String;
    fn try_from(v: i64) -> std::result::Result<Self, String> {
        match v {
            -1 => Ok(Orientation::Negative),
            0 => Ok(Orientation::Degenerate),
            1 => Ok(Orientation::Positive),
            _ => Err(format!("orientation must be -1, 0 or 1, got {v}")),
        }
    }
}

/// `x_p y_q - x_q y_p`. Panics if the points live in different fields.
pub fn pair_det(p: &ProjPoint, q: &ProjPoint) -> FieldElement {
    &p.x * &q.y - &q.x * &p.y
}

/// The cyclic orientation of three points: `+1` on positively ordered triples,
/// `-1` on negatively ordered ones and `0` when two points coincide.
///
/// Computed as the sign of `pair_det(u,v) pair_det(v,w) pair_det(w,u)`; rescaling a
/// representative multiplies the product by a square, so no case split on infinity
/// is needed.
pub fn psi(u: &ProjPoint, v: &ProjPoint, w: &ProjPoint) -> Orientation {
    let s = pair_det(u, v).sign().mul(pair_det(v, w).sign()).mul(pair_det(w, u).sign());
    s.into()
}

/// `g . p`, the Moebius action `[a x + b y : c x + d y]`.
pub fn moebius_apply(g: &Mat2, p: &ProjPoint) -> Result<ProjPoint> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !g.a().same_field(&p.x) {
        return Err(Error::MixedFields(g.kind().to_string(), p.kind().to_string()));
    }
    let x = g.a() * &p.x + g.b() * &p.y;
    let y = g.c() * &p.x + g.d() * &p.y;
    ProjPoint::new(x, y)
}
