//! Exact ordered fields: Q, real quadratic extensions Q(sqrt d), and the
//! non-Archimedean rational function field Q(t).
//!
//! Every element carries its field. Arithmetic between elements of different
//! fields is an error ([`Error::MixedFields`]); the `try_*` methods report it, while
//! the operator impls on references panic, and are meant for code that has already
//! checked that all operands share one field (as [`crate::Mat2`] does).

mod arith;
mod parse;
mod poly;
mod quad;
mod ratfunc;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use arith::{rational_sqrt, rational_squarefree, squarefree_split};
pub use parse::parse_element;
pub use poly::Poly;
pub use quad::QuadExt;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &BigRational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn from_i64(v: i64) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        Sign::from_i64(self.value() * other.value())
    }

    pub fn negate(self) -> Sign {
        Sign::from_i64(-self.value())
    }
}

/// Which field an element lives in. `Quad(d)` is Q(sqrt d).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Quad(BigInt),
    RatFunc,
}

impl FieldKind {
    pub fn quad(d: i64) -> FieldKind {
        FieldKind::Quad(BigInt::from(d))
    }

    /// Whether elements have a real (float) embedding.
    pub fn is_archimedean(&self) -> bool {
        !matches!(self, FieldKind::RatFunc)
    }

    /// Parses the header syntax `rational`, `quad d` or `ratfunc`.
    pub fn parse_words(words: &[&str]) -> Option<FieldKind> {
        match words {
            ["rational"] => Some(FieldKind::Rational),
            ["ratfunc"] => Some(FieldKind::RatFunc),
            ["quad", d] => {
                let d: BigInt = d.parse().ok()?;
                (d >= BigInt::from(2) && arith::exact_sqrt_int(&d).is_none())
                    .then_some(FieldKind::Quad(d))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Quad(d) => write!(f, "quad {d}"),
            FieldKind::RatFunc => write!(f, "ratfunc"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Quad(QuadExt),
    RatFunc(RatFunc),
}

fn mixed(a: &FieldElement, b: &FieldElement) -> Error {
    Error::MixedFields(a.kind().to_string(), b.kind().to_string())
}

impl FieldElement {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rational(_) => FieldKind::Rational,
            FieldElement::Quad(q) => FieldKind::Quad(q.d.clone()),
            FieldElement::RatFunc(_) => FieldKind::RatFunc,
        }
    }

    pub fn same_field(&self, other: &FieldElement) -> bool {
        match (self, other) {
            (FieldElement::Rational(_), FieldElement::Rational(_)) => true,
            (FieldElement::Quad(a), FieldElement::Quad(b)) => a.d == b.d,
            (FieldElement::RatFunc(_), FieldElement::RatFunc(_)) => true,
            _ => false,
        }
    }

    /// The canonical image of a rational number in `kind`.
    pub fn from_rational(q: BigRational, kind: &FieldKind) -> FieldElement {
        match kind {
            FieldKind::Rational => FieldElement::Rational(q),
            FieldKind::Quad(d) => FieldElement::Quad(QuadExt::new(q, BigRational::zero(), d.clone())),
            FieldKind::RatFunc => FieldElement::RatFunc(RatFunc::from_poly(Poly::constant(q))),
        }
    }

    pub fn from_int(n: i64, kind: &FieldKind) -> FieldElement {
        Self::from_rational(BigRational::from_integer(n.into()), kind)
    }

    pub fn from_ratio(n: i64, d: i64, kind: &FieldKind) -> FieldElement {
        Self::from_rational(BigRational::new(n.into(), d.into()), kind)
    }

    pub fn zero(kind: &FieldKind) -> FieldElement {
        Self::from_int(0, kind)
    }

    pub fn one(kind: &FieldKind) -> FieldElement {
        Self::from_int(1, kind)
    }

    /// `a + b*sqrt(d)`.
    pub fn quad(a: BigRational, b: BigRational, d: BigInt) -> FieldElement {
        FieldElement::Quad(QuadExt::new(a, b, d))
    }

    /// The indeterminate `t` of Q(t).
    pub fn indeterminate() -> FieldElement {
        FieldElement::RatFunc(RatFunc::from_poly(Poly::t()))
    }

    pub fn ratfunc(num: Poly, den: Poly) -> Result<FieldElement> {
        RatFunc::new(num, den).map(FieldElement::RatFunc).ok_or(Error::DivisionByZero)
    }

    pub fn sign(&self) -> Sign {
        match self {
            FieldElement::Rational(q) => Sign::of_rational(q),
            FieldElement::Quad(q) => q.sign(),
            FieldElement::RatFunc(r) => r.sign(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Quad(q) => q.is_zero(),
            FieldElement::RatFunc(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The element as a rational number, when it is one (in any of the fields).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Quad(q) => q.b.is_zero().then(|| q.a.clone()),
            FieldElement::RatFunc(r) => r.constant(),
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Quad(a), FieldElement::Quad(b)) if a.d == b.d => FieldElement::Quad(a.add(b)),
            (FieldElement::RatFunc(a), FieldElement::RatFunc(b)) => FieldElement::RatFunc(a.add(b)),
            _ => return Err(mixed(self, other)),
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Quad(a), FieldElement::Quad(b)) if a.d == b.d => FieldElement::Quad(a.mul(b)),
            (FieldElement::RatFunc(a), FieldElement::RatFunc(b)) => FieldElement::RatFunc(a.mul(b)),
            _ => return Err(mixed(self, other)),
        })
    }

    pub fn try_inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Quad(a) => FieldElement::Quad(a.inv()),
            FieldElement::RatFunc(a) => FieldElement::RatFunc(a.inv().ok_or(Error::DivisionByZero)?),
        })
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        if !self.same_field(other) {
            return Err(mixed(self, other));
        }
        self.try_mul(&other.try_inv()?)
    }

    pub fn negated(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Quad(a) => FieldElement::Quad(a.neg()),
            FieldElement::RatFunc(a) => FieldElement::RatFunc(a.neg()),
        }
    }

    /// Compares two elements of the same field in the field order.
    pub fn try_cmp(&self, other: &FieldElement) -> Result<Ordering> {
        Ok(match self.try_sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// The nonnegative square root, if it exists in this field.
    pub fn sqrt(&self) -> Option<FieldElement> {
        match self {
            FieldElement::Rational(q) => rational_sqrt(q).map(FieldElement::Rational),
            FieldElement::Quad(q) => q.sqrt().map(FieldElement::Quad),
            FieldElement::RatFunc(r) => {
                if r.sign() == Sign::Negative {
                    return None;
                }
                r.sqrt().map(FieldElement::RatFunc)
            }
        }
    }

    /// Moves the element into `kind`. Only the identity and Q -> Q(sqrt d) are allowed.
    pub fn embed_into(&self, kind: &FieldKind) -> Result<FieldElement> {
        match (self, kind) {
            (FieldElement::Rational(q), k) if *k != FieldKind::RatFunc => Ok(Self::from_rational(q.clone(), k)),
            _ if self.kind() == *kind => Ok(self.clone()),
            _ => Err(Error::MixedFields(self.kind().to_string(), kind.to_string())),
        }
    }

    /// Real embedding; `None` for Q(t), which has no Archimedean place compatible with its order.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            FieldElement::Rational(q) => q.to_f64(),
            FieldElement::Quad(q) => Some(q.to_f64()),
            FieldElement::RatFunc(_) => None,
        }
    }

}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{}", poly::fmt_rational(q)),
            FieldElement::Quad(q) => {
                let sep = if q.b.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{}{sep}{}*sqrt({})",
                    poly::fmt_rational(&q.a),
                    poly::fmt_rational(&q.b.abs()),
                    q.d
                )
            }
            FieldElement::RatFunc(r) => {
                if r.den.is_constant() {
                    write!(f, "{}", r.num)
                } else if r.num.is_constant() && !r.num.constant_term().is_negative() {
                    write!(f, "{}/({})", r.num, r.den)
                } else {
                    write!(f, "({})/({})", r.num, r.den)
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.negated()
    }
}
