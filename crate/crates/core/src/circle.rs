//! Floating-point circle oracle: lifts of the `P^1(R)` action to `R`, translation
//! numbers, the lifted-relator Euler number and quasimorphism genus bounds.
//!
//! Angle coordinate: `[cos(pi s) : sin(pi s)]` has coordinate `s`, so one unit is a
//! full turn of `P^1`. Nothing here feeds a certificate.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmat::{FMat2, FloatRep};
use crate::projline::{moebius_apply, ProjPoint};
use crate::surfrep::SurfaceRep;

/// Defect of the translation-number quasimorphism in these units.
pub const QUASIMORPHISM_DEFECT: f64 = 1.0;

/// Relator tolerance for [`milnor_euler`].
pub const RELATOR_TOLERANCE: f64 = 1e-9;

/// Monotone lift `F` of `x -> g.x` with `F(0)` in `[k, k+1)`, stored as
/// `F(x) = x + (alpha + h(pi x)) / pi + shift`.
///
/// `g = R(alpha) P` with `P` symmetric positive definite, so `h`, the angle from `v`
/// to `P v`, stays in `(-pi/2, pi/2)` and is continuous.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftedMap {
    m: FMat2,
    alpha: f64,
    p: FMat2,
    shift: i64,
}

fn rotation(theta: f64) -> FMat2 {
    let (s, c) = theta.sin_cos();
    FMat2::new(c, -s, s, c)
}

impl LiftedMap {
    fn base(m: FMat2) -> Result<LiftedMap> {
        let det = m.det();
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::SingularMatrix);
        }
        Ok(LiftedMap::unimodular(m.scale(1.0 / det.sqrt())))
    }

    fn unimodular(m: FMat2) -> LiftedMap {
        let [[a, b], [c, d]] = m.0;
        let alpha = (c - b).atan2(a + d);
        let p = rotation(-alpha) * m;
        LiftedMap { m, alpha, p, shift: 0 }
    }

    fn with_shift(mut self, shift: i64) -> LiftedMap {
        self.shift = shift;
        self
    }

    pub fn matrix(&self) -> FMat2 {
        self.m
    }

    /// The integer `k` with `F(0)` in `[k, k+1)`.
    pub fn offset(&self) -> i64 {
        self.eval(0.0).floor() as i64
    }

    fn displacement(&self, x: f64) -> f64 {
        let (s, c) = (PI * x).sin_cos();
        let [[p11, p12], [p21, p22]] = self.p.0;
        let (px, py) = (p11 * c + p12 * s, p21 * c + p22 * s);
        let h = (c * py - s * px).atan2(c * px + s * py);
        (self.alpha + h) / PI
    }

    pub fn eval(&self, x: f64) -> f64 {
        x + self.displacement(x) + self.shift as f64
    }

    /// The lift of `g^-1` inverse to this one.
    pub fn inverse(&self) -> LiftedMap {
        let inv = LiftedMap::unimodular(self.m.inverse());
        let y = self.eval(0.0);
        let shift = (-inv.eval(y)).round() as i64;
        inv.with_shift(shift)
    }

    /// `self o other`. Both factors have det 1, so the product is taken as det 1
    /// without recomputing it.
    pub fn compose(&self, other: &LiftedMap) -> LiftedMap {
        let prod = LiftedMap::unimodular(self.m * other.m);
        let target = self.eval(other.eval(0.0));
        let shift = (target - prod.eval(0.0)).round() as i64;
        prod.with_shift(shift)
    }

    pub fn pow(&self, n: u32) -> LiftedMap {
        let mut acc = lift(&FMat2::IDENTITY, 0).expect("identity");
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Translation number from the closed-form rotation number, pinned to the right
    /// integer by a short orbit.
    pub fn tau(&self) -> f64 {
        let est = translation_number(self, 16).estimate;
        let r = rot(&self.m);
        r + (est - r).round()
    }
}

/// The lift of `g` with `F(0)` in `[k, k+1)`.
pub fn lift(g: &FMat2, k: i64) -> Result<LiftedMap> {
    let base = LiftedMap::base(*g)?;
    let shift = k - base.eval(0.0).floor() as i64;
    Ok(base.with_shift(shift))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TranslationEstimate {
    pub estimate: f64,
    pub error_bound: f64,
}

/// `(F^n(0) - 0) / n`, within `1/n` of the translation number.
pub fn translation_number(f: &LiftedMap, iters: u32) -> TranslationEstimate {
    let iters = iters.max(1);
    let mut x = 0.0;
    for _ in 0..iters {
        x = f.eval(x);
    }
    TranslationEstimate { estimate: x / iters as f64, error_bound: 1.0 / iters as f64 }
}

/// Rotation number of the `k = 0` lift, in `[0, 1)`.
pub fn rot(g: &FMat2) -> f64 {
    let g = g.normalized();
    let half = g.trace() / 2.0;
    if half.abs() >= 1.0 {
        return 0.0;
    }
    let base = half.acos();
    let theta = if g.0[1][0] > 0.0 { base } else { 2.0 * PI - base };
    (theta / PI).rem_euclid(1.0)
}

fn round_translation(value: f64, uncertainty: f64) -> Result<i64> {
    let e = value.round();
    let residue = (value - e).abs() + uncertainty;
    if !(residue <= 0.1) {
        return Err(Error::PrecisionLoss(residue));
    }
    Ok(e as i64)
}

/// The lifted relator word, rightmost letter first: `B_g^-1, A_g^-1, B_g, A_g, ...`.
fn relator_letters(pairs: &[(FMat2, FMat2)]) -> Result<Vec<LiftedMap>> {
    let mut letters = Vec::with_capacity(4 * pairs.len());
    for (a, b) in pairs.iter().rev() {
        let la = lift(a, 0)?;
        let lb = lift(b, 0)?;
        letters.extend([lb.inverse(), la.inverse(), lb, la]);
    }
    Ok(letters)
}

/// Euler number of the action on `P^1(R)`: the lifted relator
/// `[A~_1, B~_1]...[A~_g, B~_g]` is translation by an integer `e`, read off at 0.
///
/// The word is applied to the point letter by letter. A first-order bound on the
/// accumulated rounding error is carried along; the derivative of a unimodular map
/// at the unit vector `v` is `1/|g v|^2`, so long chains of strongly contracting
/// and expanding letters inflate it. `PrecisionLoss` is raised when the bound plus
/// the distance to the nearest integer exceeds 0.1, rather than guessing.
pub fn milnor_euler(rep: &FloatRep) -> Result<i64> {
    let residual = rep.relator_residual();
    if !(residual <= RELATOR_TOLERANCE) {
        return Err(Error::NotARepresentation(format!("float relator residual {residual:e}")));
    }
    let mut value: f64 = 0.0;
    let mut err = 0.0;
    for f in relator_letters(&rep.pairs)? {
        let m = f.matrix();
        let (s, c) = (PI * value).sin_cos();
        let [[a, b], [cc, d]] = m.0;
        let (wx, wy) = (a * c + b * s, cc * c + d * s);
        let local = 8.0 * f64::EPSILON * (a * a + b * b + cc * cc + d * d) + f64::EPSILON * value.abs();
        err = err / (wx * wx + wy * wy) + local;
        value = f.eval(value);
    }
    round_translation(value, err)
}

/// Angle coordinate in `[0, 1)` of an exact point of `P^1`.
fn point_angle(p: &ProjPoint) -> Option<f64> {
    let (x, y) = (p.x().to_f64()?, p.y().to_f64()?);
    Some((y.atan2(x) / PI).rem_euclid(1.0))
}

/// [`milnor_euler`] for an exact representation over a real field, with the orbit
/// of the base point computed exactly.
///
/// `F(x0) - x0` is the sum of the displacements `F_k(x_k) - x_k` of the letters
/// along the orbit, and each displacement is 1-periodic, so it only needs the
/// orbit point mod 1. Those come from exact Mobius images, so rounding errors add
/// up instead of being amplified by the dynamics.
pub fn milnor_euler_exact_orbit(rep: &SurfaceRep) -> Result<i64> {
    let kind = rep.kind().clone();
    if !kind.is_archimedean() {
        return Err(Error::NonRationalField(kind.to_string()));
    }
    let float = rep.to_float().ok_or_else(|| Error::NonRationalField(kind.to_string()))?;
    let letters = relator_letters(&float.pairs)?;
    let mut exact = Vec::with_capacity(letters.len());
    for (a, b) in rep.pairs().iter().rev() {
        exact.extend([b.inverse()?, a.inverse()?, b.clone(), a.clone()]);
    }
    let mut point = ProjPoint::infinity(&kind);
    let mut total = 0.0;
    for (f, g) in letters.iter().zip(&exact) {
        let s = point_angle(&point).ok_or_else(|| Error::NonRationalField(kind.to_string()))?;
        total += f.eval(s) - s;
        point = moebius_apply(g, &point)?;
    }
    round_translation(total, 1e-6 * letters.len() as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenusBound {
    pub tau: f64,
    pub n: u64,
    pub defect: f64,
    pub lower_bound: u64,
}

/// `g >= n |tau| / (4 C)` for `z^n` written as a product of `g` commutators, when a
/// homogeneous quasimorphism of defect `C` takes the value `tau` on `z`.
pub fn genus_lower_bound(tau: f64, n: u64, defect: f64) -> Result<GenusBound> {
    if !(defect > 0.0) || !defect.is_finite() {
        return Err(Error::NonPositiveDefect(defect));
    }
    let lower_bound = (n as f64 * tau.abs() / (4.0 * defect)).ceil() as u64;
    Ok(GenusBound { tau, n, defect, lower_bound })
}
