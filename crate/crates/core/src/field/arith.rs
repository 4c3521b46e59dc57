//! Integer and rational helpers: exact square roots and square-free parts.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Trial division stops here; see [`squarefree_split`].
const TRIAL_DIVISION_LIMIT: u64 = 1 << 16;

pub fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    exact_sqrt_uint(n.magnitude()).map(|r| BigInt::from_biguint(Sign::Plus, r))
}

/// Square root in Q, if `q` is the square of a rational. Returns the nonnegative root.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt_int(q.numer())?;
    let d = exact_sqrt_int(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Splits `n = s^2 * d` with `d` free of squares of primes up to `min(cbrt(n), 2^16)`.
///
/// After removing every prime below the cube root, the cofactor has at most two prime
/// factors, so it is square-free unless it is a perfect square. Above the trial limit
/// the returned `d` is guaranteed non-square (when `n` is) but may keep a square factor
/// of a large prime.
pub fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    if let Some(small) = n.to_u128() {
        let (d, s) = squarefree_split_u128(small);
        return (BigUint::from(d), BigUint::from(s));
    }
    let limit = n.cbrt().to_u64().unwrap_or(u64::MAX).min(TRIAL_DIVISION_LIMIT);
    let mut rest = n.clone();
    let mut d = BigUint::one();
    let mut s = BigUint::one();
    let mut p = 2u64;
    while p <= limit {
        let bp = BigUint::from(p);
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            s *= bp.pow(e / 2);
            if e % 2 == 1 {
                d *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    match exact_sqrt_uint(&rest) {
        Some(r) => s *= r,
        None => d *= rest,
    }
    (d, s)
}

fn squarefree_split_u128(n: u128) -> (u128, u128) {
    let cbrt = {
        let mut c = (n as f64).cbrt() as u128;
        let cube = |x: u128| x.checked_mul(x).and_then(|y| y.checked_mul(x));
        while cube(c).is_none_or(|v| v > n) {
            c -= 1;
        }
        while cube(c + 1).is_some_and(|v| v <= n) {
            c += 1;
        }
        c
    };
    let limit = cbrt.min(TRIAL_DIVISION_LIMIT as u128);
    let mut rest = n;
    let (mut d, mut s) = (1u128, 1u128);
    let mut p = 2u128;
    while p <= limit {
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if r * r == rest {
        s *= r;
    } else {
        d *= rest;
    }
    (d, s)
}

/// For a positive rational `q` that is not a square, returns `(d, c)` with
/// `q = c^2 * d`, `d` a non-square integer >= 2 (square-free up to the trial bound)
/// and `c` a positive rational.
pub fn rational_squarefree(q: &BigRational) -> Option<(BigInt, BigRational)> {
    if !q.is_positive() {
        return None;
    }
    let prod = (q.numer() * q.denom()).to_biguint()?;
    let (d, s) = squarefree_split(&prod);
    if d.is_one() {
        return None;
    }
    let c = BigRational::new(BigInt::from(s), q.denom().clone());
    Some((BigInt::from(d), c))
}
