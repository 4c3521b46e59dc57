//! The doubling construction: from `n` pairs `(a_i, b_i)` with hyperbolic
//! `h = [a_1,b_1]...[a_n,b_n]`, build a genus-`2n` surface-group representation
//! and read off its Euler number.
//!
//! With `r` the involution commuting with `h` that acts as `+1` and `-1` on its
//! eigenlines, the second half is `a_i = r b_{2n+1-i} r^-1`, `b_i = r a_{2n+1-i} r^-1`
//! for `n < i <= 2n`. Then `[a_i, b_i] = r [a_j, b_j]^-1 r^-1`, so the second half
//! multiplies to `r h^-1 r^-1 = h^-1` and the full relator is exactly `I`.
//!
//! When the Euler number is maximal the pairs generate a free discrete group; this
//! module checks the premise exactly. The implication itself is a theorem resting
//! on Goldman's characterization of maximal representations and is not re-proved.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cocycle::BasePoint;
use crate::error::{Error, Result};
use crate::field::{rational_squarefree, FieldElement, FieldKind, Sign};
use crate::matrix::Mat2;
use crate::projline::ProjPoint;
use crate::surfrep::{check_pairs, euler_number, milnor_wood_bound, relator, Pair, SurfaceRep};
use crate::words::{word_heuristic, WordCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementClass {
    Hyperbolic,
    Parabolic,
    Elliptic,
    CentralPM,
}

/// Conjugacy type of a unimodular matrix from `tr^2 - 4`.
pub fn classify(h: &Mat2) -> ElementClass {
    if h.is_identity() || h.is_minus_identity() {
        return ElementClass::CentralPM;
    }
    let t = h.trace();
    let disc = &t * &t - FieldElement::from_int(4, &h.kind());
    match disc.sign() {
        Sign::Positive => ElementClass::Hyperbolic,
        Sign::Zero => ElementClass::Parabolic,
        Sign::Negative => ElementClass::Elliptic,
    }
}

/// `n >= 1` unimodular pairs over one field: the input of the doubling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTuple {
    pairs: Vec<Pair>,
    kind: FieldKind,
}

impl PairTuple {
    pub fn new(pairs: Vec<Pair>) -> Result<PairTuple> {
        let kind = check_pairs(&pairs)?;
        Ok(PairTuple { pairs, kind })
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// `h = [a_1, b_1] ... [a_n, b_n]`.
    pub fn commutator_product(&self) -> Mat2 {
        relator(&self.pairs)
    }

    pub fn conjugated(&self, g: &Mat2) -> Result<PairTuple> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.conjugate_by(g)?, b.conjugate_by(g)?)))
            .collect::<Result<Vec<_>>>()?;
        PairTuple::new(pairs)
    }

    /// Generators `a_1, b_1, ..., a_n, b_n` as floats, when the field is Archimedean.
    pub fn float_generators(&self) -> Option<Vec<crate::FMat2>> {
        self.pairs.iter().flat_map(|(a, b)| [a.to_f64(), b.to_f64()]).collect()
    }
}

/// `sqrt(tr^2 - 4)` for a hyperbolic `h`, in its field or in `Q(sqrt d)` when `h` is
/// rational and the discriminant is not a square.
#[derive(Clone, Debug)]
struct DiscriminantRoot {
    root: FieldElement,
    extension: Option<BigInt>,
}

fn discriminant_root(h: &Mat2) -> Result<DiscriminantRoot> {
    let class = classify(h);
    if class != ElementClass::Hyperbolic {
        return Err(Error::NotHyperbolic(class));
    }
    let t = h.trace();
    let disc = &t * &t - FieldElement::from_int(4, &h.kind());
    if let Some(root) = disc.sqrt() {
        return Ok(DiscriminantRoot { root, extension: None });
    }
    match &disc {
        FieldElement::Rational(q) => {
            let (d, c) = rational_squarefree(q).expect("positive non-square");
            let root = FieldElement::quad(num_rational::BigRational::from_integer(0.into()), c, d.clone());
            Ok(DiscriminantRoot { root, extension: Some(d) })
        }
        other => Err(Error::UnsupportedExtension(format!(
            "tr^2 - 4 = {other} is not a square in the {} field; towers of extensions are not built",
            other.kind()
        ))),
    }
}

/// The field the eigenvectors of `h` live in.
pub fn splitting_kind(h: &Mat2) -> Result<FieldKind> {
    Ok(discriminant_root(h)?.root.kind())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSplit {
    /// Eigenline of the eigenvalue `lambda` with `sign(lambda - 1/lambda) = sign(tr h)`.
    pub x1: ProjPoint,
    pub x2: ProjPoint,
    /// `Some(d)` when the split needed `Q(sqrt d)`.
    pub extension: Option<BigInt>,
}

fn eigenline(h: &Mat2, lambda: &FieldElement) -> Result<ProjPoint> {
    if !h.b().is_zero() {
        ProjPoint::new(h.b().clone(), lambda - h.a())
    } else if !h.c().is_zero() {
        ProjPoint::new(lambda - h.d(), h.c().clone())
    } else if lambda == h.a() {
        Ok(ProjPoint::infinity(&h.kind()))
    } else {
        Ok(ProjPoint::finite(FieldElement::zero(&h.kind())))
    }
}

pub fn eigen_split(h: &Mat2) -> Result<EigenSplit> {
    let DiscriminantRoot { root, extension } = discriminant_root(h)?;
    let kind = root.kind();
    let h = h.embed_into(&kind)?;
    let t = h.trace();
    let half = FieldElement::from_ratio(1, 2, &kind);
    let signed_root = if t.sign() == Sign::Negative { root.negated() } else { root };
    let lambda1 = &(&t + &signed_root) * &half;
    let lambda2 = &(&t - &signed_root) * &half;
    Ok(EigenSplit { x1: eigenline(&h, &lambda1)?, x2: eigenline(&h, &lambda2)?, extension })
}

/// Chooses between `r` and `-r`: entry (1,1) positive, or zero with entry (1,2) positive.
fn normalize_sign(r: Mat2) -> Mat2 {
    match r.a().sign() {
        Sign::Negative => r.negated(),
        Sign::Zero if r.b().sign() == Sign::Negative => r.negated(),
        _ => r,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub r: Mat2,
    pub extension: Option<BigInt>,
}

/// The involution commuting with hyperbolic `h` with eigenvalues `+1`, `-1` on the
/// eigenlines of `h`: `r = (2h - tr(h) I) / sqrt(tr^2 - 4)`, sign-normalized.
pub fn reflection(h: &Mat2) -> Result<Reflection> {
    let DiscriminantRoot { root, extension } = discriminant_root(h)?;
    let kind = root.kind();
    let h = h.embed_into(&kind)?;
    let two_h = h.scale(&FieldElement::from_int(2, &kind))?;
    let shifted = two_h.sub(&Mat2::identity(&kind).scale(&h.trace())?)?;
    let r = shifted.scale(&root.try_inv()?)?;
    Ok(Reflection { r: normalize_sign(r), extension })
}

/// `S diag(1, -1) S^-1` with `S = [x1 | x2]`, sign-normalized. Independent route to
/// [`reflection`], used to cross-check it.
pub fn reflection_from_eigenvectors(x1: &ProjPoint, x2: &ProjPoint) -> Result<Mat2> {
    let s = Mat2::gl2(x1.x().clone(), x2.x().clone(), x1.y().clone(), x2.y().clone())?;
    let kind = s.kind();
    let diag = Mat2::diag(FieldElement::one(&kind), FieldElement::from_int(-1, &kind))?;
    let r = s.checked_mul(&diag)?.checked_mul(&s.inverse()?)?;
    Ok(normalize_sign(r))
}

/// The mirrored second half of the doubling.
fn mirrored_pairs(pairs: &[Pair], r: &Mat2) -> Result<Vec<Pair>> {
    pairs
        .iter()
        .rev()
        .map(|(a, b)| Ok((b.conjugate_by(r)?, a.conjugate_by(r)?)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Maximal,
    NonMaximal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingResult {
    pub input: PairTuple,
    pub h: Mat2,
    pub trace_h: FieldElement,
    pub extension: Option<BigInt>,
    pub x1: ProjPoint,
    pub x2: ProjPoint,
    pub r: Mat2,
    pub doubled: SurfaceRep,
    pub base_point: BasePoint,
    pub f_value: i64,
    pub bound: i64,
    pub status: Status,
}

/// Runs the full construction and evaluates the Euler number at `[0:1]`.
pub fn run_doubling(tuple: &PairTuple) -> Result<DoublingResult> {
    let h = tuple.commutator_product();
    let split = eigen_split(&h)?;
    let Reflection { r, extension } = reflection(&h)?;
    let kind = r.kind();
    let input_ext = tuple
        .pairs
        .iter()
        .map(|(a, b)| Ok((a.embed_into(&kind)?, b.embed_into(&kind)?)))
        .collect::<Result<Vec<_>>>()?;
    let h_ext = h.embed_into(&kind)?;
    debug_assert_eq!(r.checked_mul(&h_ext)?, h_ext.checked_mul(&r)?);

    let mut pairs = input_ext.clone();
    pairs.extend(mirrored_pairs(&input_ext, &r)?);
    let doubled = SurfaceRep::new(pairs).map_err(|e| match e {
        Error::NotARepresentation(m) => Error::NotARepresentation(format!("doubling identity failed: {m}")),
        e => e,
    })?;
    let base_point = BasePoint::zero(&kind);
    let f_value = euler_number(&doubled, &base_point)?;
    let bound = milnor_wood_bound(doubled.genus());
    let status = if f_value.abs() == bound { Status::Maximal } else { Status::NonMaximal };
    Ok(DoublingResult {
        input: tuple.clone(),
        trace_h: h.trace(),
        h,
        extension,
        x1: split.x1,
        x2: split.x2,
        r,
        doubled,
        base_point,
        f_value,
        bound,
        status,
    })
}

/// The genus-`2n` representation obtained by doubling `tuple`.
pub fn double(tuple: &PairTuple) -> Result<SurfaceRep> {
    Ok(run_doubling(tuple)?.doubled)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeuristicParams {
    pub max_word_length: usize,
    pub epsilon: f64,
    pub word_cap: u64,
}

impl Default for HeuristicParams {
    fn default() -> Self {
        HeuristicParams { max_word_length: 8, epsilon: 1e-6, word_cap: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HeuristicReport {
    Checked {
        #[serde(flatten)]
        check: WordCheck,
        max_word_length: usize,
        epsilon: f64,
    },
    NotApplicable { reason: String },
}

pub const VERDICT_MAXIMAL: &str =
    "certified free discrete (conditional on the maximal-Euler-number theorem and the frozen normalization)";
pub const VERDICT_NON_MAXIMAL: &str =
    "no certificate (the maximality condition is sufficient, not necessary; this is not a proof of non-freeness)";

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub result: DoublingResult,
    pub heuristic: HeuristicReport,
    pub verdict: String,
}

pub fn heuristic_report(tuple: &PairTuple, params: &HeuristicParams) -> HeuristicReport {
    let Some(gens) = tuple.float_generators() else {
        return HeuristicReport::NotApplicable { reason: "field has no Archimedean embedding".into() };
    };
    match word_heuristic(&gens, params.max_word_length, params.epsilon, params.word_cap) {
        Ok(check) => HeuristicReport::Checked {
            check,
            max_word_length: params.max_word_length,
            epsilon: params.epsilon,
        },
        Err(e) => HeuristicReport::NotApplicable { reason: e.to_string() },
    }
}

/// Doubling, Euler number, maximality verdict and the numerical word check.
pub fn certify(tuple: &PairTuple, params: &HeuristicParams) -> Result<Certificate> {
    let result = run_doubling(tuple)?;
    let heuristic = heuristic_report(tuple, params);
    let verdict = match result.status {
        Status::Maximal => VERDICT_MAXIMAL,
        Status::NonMaximal => VERDICT_NON_MAXIMAL,
    }
    .to_string();
    Ok(Certificate { result, heuristic, verdict })
}
