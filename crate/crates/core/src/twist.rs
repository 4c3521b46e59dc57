//! Goldman twists along the separating curve `gamma = [A_1,B_1]...[A_kappa,B_kappa]`.
//!
//! Both twists keep the first `kappa` pairs and conjugate every later pair by an
//! element commuting with `gamma`, so the relator is untouched. The twist starts
//! strictly after pair `kappa`; starting one generator earlier would break the
//! relation.

use serde::{Deserialize, Serialize};

use crate::doubling::{classify, reflection, ElementClass};
use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::fmat::{FMat2, FloatRep};
use crate::matrix::Mat2;
use crate::surfrep::{partial_products, SurfaceRep};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum TwistMode {
    Discrete,
    Flow(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub kappa: usize,
    pub mode: TwistMode,
}

fn check_kappa(kappa: usize, genus: usize) -> Result<()> {
    if kappa == 0 || kappa >= genus {
        return Err(Error::KappaOutOfRange { kappa, genus });
    }
    Ok(())
}

/// `gamma = I_kappa`, the product of the first `kappa` commutators.
pub fn separating_element(rep: &SurfaceRep, kappa: usize) -> Result<Mat2> {
    check_kappa(kappa, rep.genus())?;
    Ok(partial_products(rep.pairs())[kappa].clone())
}

/// Reglue by the reflection `r` of `gamma`: pairs after `kappa` become `r X r^-1`.
/// The result lives over `Q(sqrt d)` when the eigenlines of `gamma` need it.
pub fn discrete_twist(rep: &SurfaceRep, kappa: usize) -> Result<SurfaceRep> {
    let gamma = separating_element(rep, kappa)?;
    let r = reflection(&gamma)?.r;
    let kind = r.kind();
    let pairs = rep
        .pairs()
        .iter()
        .enumerate()
        .map(|(j, (a, b))| {
            let (a, b) = (a.embed_into(&kind)?, b.embed_into(&kind)?);
            if j < kappa {
                Ok((a, b))
            } else {
                Ok((a.conjugate_by(&r)?, b.conjugate_by(&r)?))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SurfaceRep::new(pairs)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowTwist {
    pub rep: FloatRep,
    /// `true` when `tr gamma < -2` and the logarithm was taken of `-gamma`.
    pub negated_gamma: bool,
    pub log_lambda: f64,
}

/// `exp(-t log g)` for `g` with `tr g > 2`, via spectral projectors.
fn flow_element(g: &FMat2, t: f64) -> (FMat2, f64) {
    let tr = g.trace();
    let s = (tr * tr - 4.0).sqrt();
    let lambda = (tr + s) / 2.0;
    let inv = 1.0 / lambda;
    let p_plus = g.add(&FMat2::IDENTITY.scale(-inv)).scale(1.0 / (lambda - inv));
    let p_minus = g.add(&FMat2::IDENTITY.scale(-lambda)).scale(1.0 / (inv - lambda));
    let e = p_plus.scale(lambda.powf(-t)).add(&p_minus.scale(lambda.powf(t)));
    (e, lambda.ln())
}

/// Trace-Hamiltonian flow on a float representation. `gamma` must be hyperbolic.
pub fn flow_twist_float(rep: &FloatRep, kappa: usize, t: f64) -> Result<FlowTwist> {
    check_kappa(kappa, rep.genus())?;
    if !t.is_finite() {
        return Err(Error::InvalidConfig(format!("flow time must be finite, got {t}")));
    }
    let gamma = rep.pairs[..kappa]
        .iter()
        .fold(FMat2::IDENTITY, |acc, (a, b)| acc * FMat2::commutator(a, b));
    let tr = gamma.trace();
    if tr.abs() <= 2.0 {
        let class = if tr.abs() < 2.0 { ElementClass::Elliptic } else { ElementClass::Parabolic };
        return Err(Error::NotHyperbolic(class));
    }
    let negated_gamma = tr < 0.0;
    let g = if negated_gamma { gamma.neg() } else { gamma };
    let (e, log_lambda) = flow_element(&g, t);
    let e_inv = e.inverse();
    let pairs = rep
        .pairs
        .iter()
        .enumerate()
        .map(|(j, (a, b))| if j < kappa { (*a, *b) } else { (e * *a * e_inv, e * *b * e_inv) })
        .collect();
    Ok(FlowTwist { rep: FloatRep { pairs }, negated_gamma, log_lambda })
}

/// Flow twist of an exact representation: hyperbolicity is decided exactly, the flow
/// itself runs in floating point.
pub fn flow_twist(rep: &SurfaceRep, kappa: usize, t: f64) -> Result<FlowTwist> {
    if !rep.kind().is_archimedean() {
        return Err(Error::NonRationalField(rep.kind().to_string()));
    }
    let gamma = separating_element(rep, kappa)?;
    let class = classify(&gamma);
    if class != ElementClass::Hyperbolic {
        return Err(Error::NotHyperbolic(class));
    }
    let float = rep.to_float().ok_or_else(|| Error::NonRationalField(FieldKind::RatFunc.to_string()))?;
    flow_twist_float(&float, kappa, t)
}
