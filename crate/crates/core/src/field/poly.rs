//! Dense univariate polynomials over Q in the indeterminate `t`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::rational_sqrt;

/// Coefficients are stored lowest degree first with no trailing zeros;
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dlead = divisor.leading().expect("polynomial division by zero");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if !self.is_zero() && !other.is_zero() && coprime_mod_p(self, other) {
            return Poly::one();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square root in Q[t] when `self` is a perfect square, normalized to a
    /// positive leading coefficient.
    pub fn sqrt(&self) -> Option<Poly> {
        let Some(deg) = self.degree() else {
            return Some(Poly::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let m = deg / 2;
        let lead = rational_sqrt(&self.coeffs[deg])?;
        // Root coefficients r_m, r_{m-1}, ..., r_0 from the top coefficients of self.
        let mut root = vec![BigRational::zero(); m + 1];
        root[m] = lead.clone();
        let two_lead = &lead + &lead;
        for k in (0..m).rev() {
            // coefficient of t^{m+k} in root^2 = 2 r_m r_k + sum_{i+j=m+k, i,j in (k,m)} r_i r_j
            let mut acc = BigRational::zero();
            for i in (k + 1)..m {
                let j = m + k - i;
                if j > k && j < m {
                    acc += &root[i] * &root[j];
                }
            }
            root[k] = (&self.coeffs[m + k] - acc) / &two_lead;
        }
        let r = Poly::from_coeffs(root);
        (r.mul(&r) == *self).then_some(r)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

const PRIME: u64 = 2_147_483_647;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

fn inv_mod(x: u64) -> u64 {
    pow_mod(x, PRIME - 2)
}

/// Coefficients mod `PRIME`, or `None` if a denominator or the leading
/// coefficient vanishes there.
fn reduce_mod_p(p: &Poly) -> Option<Vec<u64>> {
    let m = BigInt::from(PRIME);
    let to_u64 = |x: &BigInt| -> u64 {
        let r = ((x % &m) + &m) % &m;
        r.try_into().expect("reduced below PRIME")
    };
    let mut out = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        let d = to_u64(c.denom());
        if d == 0 {
            return None;
        }
        out.push(to_u64(c.numer()) * inv_mod(d) % PRIME);
    }
    (out.last() != Some(&0)).then_some(out)
}

/// True when the images mod `PRIME` are coprime. Leading coefficients survive the
/// reduction, so the rational gcd has degree at most that of the modular one; a
/// constant modular gcd therefore proves coprimality. `false` is inconclusive.
fn coprime_mod_p(a: &Poly, b: &Poly) -> bool {
    let (Some(mut a), Some(mut b)) = (reduce_mod_p(a), reduce_mod_p(b)) else {
        return false;
    };
    while !b.is_empty() {
        let inv = inv_mod(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let c = a.last().copied().expect("nonempty") * inv % PRIME;
            let shift = a.len() - b.len();
            for (i, bc) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + PRIME - c * bc % PRIME) % PRIME;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

impl fmt::Display for Poly {
    /// Writes terms from the highest degree down, e.g. `3/2*t^2-t+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[2, -2])), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[-1, 1])), p(&[1]));
        // t and t + PRIME agree mod PRIME, so only the full Euclid run can see they are coprime.
        assert_eq!(p(&[0, 1]).gcd(&p(&[PRIME as i64, 1])), p(&[1]));
        assert_eq!(p(&[0, PRIME as i64]).gcd(&p(&[0, 0, 1])), p(&[0, 1]));
    }

    proptest::proptest! {
        #[test]
        fn gcd_divides_and_is_divisible_by_common_factor(
            f in proptest::collection::vec(-9i64..=9, 1..5),
            g in proptest::collection::vec(-9i64..=9, 1..5),
            h in proptest::collection::vec(-9i64..=9, 1..4),
        ) {
            let (f, g, h) = (p(&f), p(&g), p(&h));
            proptest::prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let (a, b) = (f.mul(&h), g.mul(&h));
            let d = a.gcd(&b);
            proptest::prop_assert!(a.div_rem(&d).1.is_zero());
            proptest::prop_assert!(b.div_rem(&d).1.is_zero());
            proptest::prop_assert!(d.div_rem(&h).1.is_zero());
        }
    }

    #[test]
    fn sqrt_of_square() {
        let r = p(&[3, -2, 5]);
        assert_eq!(r.mul(&r).sqrt(), Some(r.clone()));
        assert_eq!(r.neg().mul(&r.neg()).sqrt(), Some(r));
        assert_eq!(p(&[1, 0, 2]).sqrt(), None);
        assert_eq!(p(&[1, 1]).sqrt(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "2*t^3-t+1");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }
}
