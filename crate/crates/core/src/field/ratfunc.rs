//! The rational function field Q(t), ordered with `t` above every rational.

use num_rational::BigRational;
use num_traits::One;

use super::poly::Poly;
use super::Sign;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub(crate) num: Poly,
    pub(crate) den: Poly,
}

impl RatFunc {
    /// Canonicalizes `num / den`. Returns `None` when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc { num, den: Poly::one() });
        }
        // A constant on either side makes the fraction already reduced.
        if num.is_constant() || den.is_constant() {
            return Some(Self::monic_den(num, den));
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            return Some(Self::monic_den(num, den));
        }
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        Some(Self::monic_den(num, den))
    }

    /// Scales a reduced fraction so the denominator is monic.
    fn monic_den(num: Poly, den: Poly) -> Self {
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            return RatFunc { num, den };
        }
        let inv = lead.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    /// `a / gcd(a, b)` and `b / gcd(a, b)`, skipping the gcd when either is constant.
    fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if a.is_constant() || b.is_constant() {
            return (a.clone(), b.clone());
        }
        let g = a.gcd(b);
        if g.is_constant() {
            return (a.clone(), b.clone());
        }
        (a.div_rem(&g).0, b.div_rem(&g).0)
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order at +infinity: the sign of the numerator's leading coefficient
    /// (the denominator is monic).
    pub fn sign(&self) -> Sign {
        match self.num.leading() {
            None => Sign::Zero,
            Some(l) => Sign::of_rational(l),
        }
    }

    pub(crate) fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        // With d = gcd(den1, den2): n1 (den2/d) + n2 (den1/d) over den1 den2 / d, and
        // only a factor of d can cancel.
        let (d1, d2) = Self::cancel(&self.den, &o.den);
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        if d1 == self.den {
            return Self::monic_den(num, self.den.mul(&o.den));
        }
        RatFunc::new(num, d1.mul(&o.den)).expect("nonzero den")
    }

    pub(crate) fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub(crate) fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::from_poly(Poly::zero());
        }
        // Both inputs are reduced, so cross-cancelling leaves a reduced product.
        let (n1, d2) = Self::cancel(&self.num, &o.den);
        let (n2, d1) = Self::cancel(&o.num, &self.den);
        Self::monic_den(n1.mul(&n2), d1.mul(&d2))
    }

    pub(crate) fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub(crate) fn sqrt(&self) -> Option<RatFunc> {
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        RatFunc::new(n, d)
    }

    pub(crate) fn constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.constant_term())
    }
}
