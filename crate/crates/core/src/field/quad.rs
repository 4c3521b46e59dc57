//! Real quadratic extensions Q(sqrt d).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::arith::rational_sqrt;
use super::Sign;

/// `a + b*sqrt(d)` with `d >= 2` a fixed non-square integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub(crate) a: BigRational,
    pub(crate) b: BigRational,
    pub(crate) d: BigInt,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        QuadExt { a, b, d }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `a^2 - d b^2`
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        if sa == sb || sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero {
            return sb;
        }
        // Opposite signs: |a| vs |b| sqrt(d) decided by a^2 - b^2 d.
        sa.mul(Sign::of_rational(&self.norm()))
    }

    pub(crate) fn add(&self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &o.a, &self.b + &o.b, self.d.clone())
    }

    pub(crate) fn neg(&self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, self.d.clone())
    }

    pub(crate) fn mul(&self, o: &QuadExt) -> QuadExt {
        let d = BigRational::from_integer(self.d.clone());
        QuadExt::new(
            &self.a * &o.a + &self.b * &o.b * d,
            &self.a * &o.b + &self.b * &o.a,
            self.d.clone(),
        )
    }

    /// Inverse of a nonzero element via the conjugate.
    pub(crate) fn inv(&self) -> QuadExt {
        let n = self.norm();
        QuadExt::new(&self.a / &n, -&self.b / &n, self.d.clone())
    }

    /// Nonnegative square root inside Q(sqrt d), if there is one.
    pub(crate) fn sqrt(&self) -> Option<QuadExt> {
        if self.sign() == Sign::Negative {
            return None;
        }
        let d = BigRational::from_integer(self.d.clone());
        let root = if self.b.is_zero() {
            if let Some(x) = rational_sqrt(&self.a) {
                QuadExt::new(x, BigRational::zero(), self.d.clone())
            } else {
                let y = rational_sqrt(&(&self.a / &d))?;
                QuadExt::new(BigRational::zero(), y, self.d.clone())
            }
        } else {
            // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(norm)) / 2, y = b / 2x
            let n = rational_sqrt(&self.norm())?;
            let two = BigRational::from_integer(2.into());
            [&self.a + &n, &self.a - &n]
                .into_iter()
                .filter_map(|s| rational_sqrt(&(s / &two)))
                .find(|x| !x.is_zero())
                .map(|x| {
                    let y = &self.b / (&x * &two);
                    QuadExt::new(x, y, self.d.clone())
                })?
        };
        debug_assert_eq!(root.mul(&root), *self);
        Some(if root.sign() == Sign::Negative { root.neg() } else { root })
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        let root = b * d.sqrt();
        if (a > 0.0) != (root > 0.0) && a != 0.0 && root != 0.0 {
            // opposite signs: divide the exact norm by the conjugate to avoid cancellation
            let norm = self.norm().to_f64().unwrap_or(f64::NAN);
            return norm / (a - root);
        }
        a + root
    }

}
