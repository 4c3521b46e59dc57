//! Seeded scans: certificate campaigns over random pair tuples, Milnor-Wood scans
//! over random valid representations, and the cocycle self-check.
//!
//! Trial `i` draws from its own ChaCha stream `(seed, i)`, so results do not depend
//! on scheduling and reports are byte-identical for identical configs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cocycle::{cocycle_defect, BasePoint};
use crate::doubling::{certify, classify, double, ElementClass, HeuristicParams, HeuristicReport, PairTuple, Status};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldKind, Poly};
use crate::io::{parse_field_kind, rep_to_text, tuple_to_text, RepRecord, TupleRecord};
use crate::matrix::Mat2;
use crate::projline::ProjPoint;
use crate::surfrep::{milnor_wood_check, relator, Pair, SurfaceRep};
use crate::twist::discrete_twist;

fn default_height() -> u32 {
    3
}
fn default_field() -> String {
    "rational".into()
}
fn default_word_length() -> usize {
    HeuristicParams::default().max_word_length
}
fn default_epsilon() -> f64 {
    HeuristicParams::default().epsilon
}
fn default_word_cap() -> u64 {
    HeuristicParams::default().word_cap
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    /// Pairs per tuple; Milnor-Wood scans use genus `2n`.
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    #[serde(default = "default_height")]
    pub entry_height: u32,
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default = "default_word_length")]
    pub max_word_length: usize,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_word_cap")]
    pub word_cap: u64,
}

impl ScanConfig {
    pub fn new(n: usize, trials: u64, seed: u64) -> ScanConfig {
        ScanConfig {
            n,
            trials,
            seed,
            entry_height: default_height(),
            field: default_field(),
            max_word_length: default_word_length(),
            epsilon: default_epsilon(),
            word_cap: default_word_cap(),
        }
    }

    pub fn with_field(mut self, field: &str) -> ScanConfig {
        self.field = field.to_string();
        self
    }

    pub fn validate(&self) -> Result<FieldKind> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.entry_height == 0 {
            return bad("entry_height must be at least 1");
        }
        if self.max_word_length == 0 {
            return bad("max_word_length must be at least 1");
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return bad("epsilon must be positive");
        }
        parse_field_kind(&self.field).ok_or_else(|| Error::InvalidConfig(format!("unknown field `{}`", self.field)))
    }

    pub fn heuristic(&self) -> HeuristicParams {
        HeuristicParams { max_word_length: self.max_word_length, epsilon: self.epsilon, word_cap: self.word_cap }
    }
}

/// The RNG for trial `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn small_rational<R: Rng>(rng: &mut R, height: u32) -> BigRational {
    let h = height as i64;
    BigRational::new(BigInt::from(rng.random_range(-h..=h)), BigInt::from(rng.random_range(1..=h)))
}

/// A random element of height at most `height`: `p/q` over the rationals,
/// `p/q + (p'/q') sqrt d` in a quadratic field, `c0 + c1 t` for rational functions.
pub fn sample_scalar<R: Rng>(rng: &mut R, height: u32, kind: &FieldKind) -> FieldElement {
    match kind {
        FieldKind::Rational => FieldElement::Rational(small_rational(rng, height)),
        FieldKind::Quad(d) => FieldElement::quad(small_rational(rng, height), small_rational(rng, height), d.clone()),
        FieldKind::RatFunc => {
            let p = Poly::from_coeffs(vec![small_rational(rng, height), small_rational(rng, height)]);
            FieldElement::ratfunc(p, Poly::one()).expect("denominator 1")
        }
    }
}

fn elementary(m: FieldElement, upper: bool) -> Mat2 {
    let k = m.kind();
    let (one, zero) = (FieldElement::one(&k), FieldElement::zero(&k));
    let (b, c) = if upper { (m, zero.clone()) } else { (zero.clone(), m) };
    Mat2::sl2(one.clone(), b, c, one).expect("elementary matrices are unimodular")
}

/// Product of `len` elementary factors `[[1,m],[0,1]]` / `[[1,0],[m,1]]`.
pub fn sample_sl2_with_len<R: Rng>(rng: &mut R, height: u32, len: usize, kind: &FieldKind) -> Mat2 {
    (0..len).fold(Mat2::identity(kind), |acc, _| {
        let upper = rng.random_bool(0.5);
        &acc * &elementary(sample_scalar(rng, height, kind), upper)
    })
}

/// A determinant-one matrix: between one and four elementary factors.
pub fn sample_sl2<R: Rng>(rng: &mut R, height: u32, kind: &FieldKind) -> Mat2 {
    let len = rng.random_range(1..=4);
    sample_sl2_with_len(rng, height, len, kind)
}

pub fn sample_tuple<R: Rng>(rng: &mut R, n: usize, height: u32, kind: &FieldKind) -> PairTuple {
    let pairs = (0..n).map(|_| (sample_sl2(rng, height, kind), sample_sl2(rng, height, kind))).collect();
    PairTuple::new(pairs).expect("sampled pairs are unimodular")
}

/// `pairs` followed by their mirror `(g b_j g^-1, g a_j g^-1)` in reverse order.
/// A representation whenever `g` commutes with `h = [a_1,b_1]...[a_n,b_n]`.
pub fn mirror_rep(pairs: &[Pair], g: &Mat2) -> Result<SurfaceRep> {
    let mut all = pairs.to_vec();
    for (a, b) in pairs.iter().rev() {
        all.push((b.conjugate_by(g)?, a.conjugate_by(g)?));
    }
    SurfaceRep::new(all)
}

/// `x I + y h` for random `x, y`, nonsingular; it commutes with `h`.
fn sample_centralizer<R: Rng>(rng: &mut R, h: &Mat2, height: u32) -> Mat2 {
    let k = h.kind();
    let x = sample_scalar(rng, height, &k);
    let y = sample_scalar(rng, height, &k);
    let candidate = Mat2::identity(&k).scale(&x).and_then(|m| m.add(&h.scale(&y)?));
    match candidate.and_then(|m| Mat2::gl2(m.a().clone(), m.b().clone(), m.c().clone(), m.d().clone())) {
        Ok(g) => g,
        Err(_) => Mat2::identity(&k),
    }
}

fn upper_triangular<R: Rng>(rng: &mut R, height: u32, kind: &FieldKind) -> Mat2 {
    let lambda = FieldElement::from_int(rng.random_range(1..=height.max(1) as i64 + 1), kind);
    let d = Mat2::diag(lambda.clone(), lambda.try_inv().expect("nonzero")).expect("det 1");
    &d * &elementary(sample_scalar(rng, height, kind), true)
}

/// How a scan representation was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepVariant {
    Trivial,
    Reducible,
    Mirror,
    Doubled,
    Twisted,
    Reversed,
}

/// A random valid genus-`2n` representation over `kind` (possibly extended to a
/// quadratic field by doubling or twisting), conjugated half of the time.
pub fn sample_rep<R: Rng>(rng: &mut R, n: usize, height: u32, kind: &FieldKind) -> Result<(SurfaceRep, RepVariant)> {
    let choice = rng.random_range(0..8u32);
    let (rep, variant) = match choice {
        0 => (SurfaceRep::trivial(2 * n, kind), RepVariant::Trivial),
        1 => {
            let pairs: Vec<Pair> = (0..n)
                .map(|_| (upper_triangular(rng, height, kind), upper_triangular(rng, height, kind)))
                .collect();
            (mirror_rep(&pairs, &Mat2::identity(kind))?, RepVariant::Reducible)
        }
        _ => {
            let tuple = sample_tuple(rng, n, height, kind);
            let h = tuple.commutator_product();
            let g = sample_centralizer(rng, &h, height);
            let mirror = mirror_rep(tuple.pairs(), &g)?;
            match choice {
                5 => match double(&tuple) {
                    Ok(rep) => (rep, RepVariant::Doubled),
                    Err(_) => (mirror, RepVariant::Mirror),
                },
                6 => match discrete_twist(&mirror, n) {
                    Ok(rep) => (rep, RepVariant::Twisted),
                    Err(_) => (mirror, RepVariant::Mirror),
                },
                7 => (mirror.reversed()?, RepVariant::Reversed),
                _ => (mirror, RepVariant::Mirror),
            }
        }
    };
    if rng.random_bool(0.5) {
        let c = sample_sl2(rng, height, rep.kind());
        return Ok((rep.conjugated(&c)?, variant));
    }
    Ok((rep, variant))
}

/// First 16 hex digits of the SHA-256 of the text form.
pub fn text_hash(text: &str) -> String {
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        ErrorInfo { code: e.code().to_string(), message: e.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub hash: String,
    pub field: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub planted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<RepVariant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ElementClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heuristic_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub trial: u64,
    pub tuple: TupleRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    pub seed: u64,
    pub value: i64,
    pub bound: i64,
    pub rep: RepRecord,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    Cert,
    Mw,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub mode: ScanMode,
    pub config: ScanConfig,
    pub records: Vec<TrialRecord>,
    /// `value -> count` over trials that produced a value.
    pub histogram: BTreeMap<i64, u64>,
    /// `error code -> count`.
    pub errors: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
    pub violations: Vec<Violation>,
    pub note: Option<String>,
}

/// One line of the JSONL report.
#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ReportLine<'a> {
    ScanHeader { mode: ScanMode, config: &'a ScanConfig },
    Trial(&'a TrialRecord),
    Witness(&'a Witness),
    Violation(&'a Violation),
    ScanSummary {
        trials: u64,
        histogram: &'a BTreeMap<i64, u64>,
        errors: &'a BTreeMap<String, u64>,
        witnesses: usize,
        violations: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        note: &'a Option<String>,
    },
}

impl ScanReport {
    fn assemble(mode: ScanMode, config: ScanConfig, records: Vec<TrialRecord>, note: Option<String>) -> ScanReport {
        let mut histogram = BTreeMap::new();
        let mut errors = BTreeMap::new();
        for r in &records {
            match (&r.value, &r.error) {
                (Some(v), _) => *histogram.entry(*v).or_insert(0) += 1,
                (None, Some(e)) => *errors.entry(e.code.clone()).or_insert(0) += 1,
                (None, None) => {}
            }
        }
        ScanReport { mode, config, records, histogram, errors, witnesses: Vec::new(), violations: Vec::new(), note }
    }

    pub fn to_jsonl(&self) -> String {
        let mut lines = vec![ReportLine::ScanHeader { mode: self.mode, config: &self.config }];
        lines.extend(self.records.iter().map(ReportLine::Trial));
        lines.extend(self.witnesses.iter().map(ReportLine::Witness));
        lines.extend(self.violations.iter().map(ReportLine::Violation));
        lines.push(ReportLine::ScanSummary {
            trials: self.records.len() as u64,
            histogram: &self.histogram,
            errors: &self.errors,
            witnesses: self.witnesses.len(),
            violations: self.violations.len(),
            note: &self.note,
        });
        let mut out = String::new();
        for l in &lines {
            out.push_str(&serde_json::to_string(l).expect("report lines serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary_table(&self) -> String {
        let mode = match self.mode {
            ScanMode::Cert => "cert",
            ScanMode::Mw => "mw",
        };
        let mut out = format!(
            "mode {mode}  trials {}  seed {}  field {}  n {}\n",
            self.records.len(),
            self.config.seed,
            self.config.field,
            self.config.n
        );
        out.push_str(&format!("{:>8}  {:>8}\n", "value", "count"));
        for (v, c) in &self.histogram {
            out.push_str(&format!("{v:>8}  {c:>8}\n"));
        }
        for (code, c) in &self.errors {
            out.push_str(&format!("{code:>24}  {c:>8}\n"));
        }
        out.push_str(&format!("witnesses {}  violations {}\n", self.witnesses.len(), self.violations.len()));
        if let Some(note) = &self.note {
            out.push_str(note);
            out.push('\n');
        }
        out
    }
}

fn certificate_trial(index: u64, tuple: &PairTuple, planted: bool, params: &HeuristicParams) -> (TrialRecord, Option<Witness>) {
    let text = tuple_to_text(tuple);
    let mut rec = TrialRecord {
        trial: index,
        hash: text_hash(&text),
        field: tuple.kind().to_string(),
        planted,
        variant: None,
        class: Some(classify(&tuple.commutator_product())),
        value: None,
        bound: None,
        status: None,
        heuristic_ok: None,
        error: None,
    };
    match certify(tuple, params) {
        Ok(cert) => {
            rec.value = Some(cert.result.f_value);
            rec.bound = Some(cert.result.bound);
            rec.status = Some(format!("{:?}", cert.result.status));
            if let HeuristicReport::Checked { check, .. } = &cert.heuristic {
                rec.heuristic_ok = Some(check.ok);
            }
            let witness = (cert.result.status == Status::Maximal)
                .then(|| Witness { trial: index, tuple: TupleRecord::from_tuple(tuple) });
            (rec, witness)
        }
        Err(e) => {
            rec.error = Some(ErrorInfo::from(&e));
            (rec, None)
        }
    }
}

/// Certifies `config.trials` tuples. The first trials are the `planted` tuples,
/// the rest are sampled.
pub fn scan_certificates(config: &ScanConfig, planted: &[PairTuple]) -> Result<ScanReport> {
    let kind = config.validate()?;
    if planted.len() as u64 > config.trials {
        return Err(Error::InvalidConfig(format!("{} planted tuples but only {} trials", planted.len(), config.trials)));
    }
    let params = config.heuristic();
    let results: Vec<(TrialRecord, Option<Witness>)> = (0..config.trials)
        .into_par_iter()
        .map(|i| match planted.get(i as usize) {
            Some(t) => certificate_trial(i, t, true, &params),
            None => {
                let mut rng = trial_rng(config.seed, i);
                let tuple = sample_tuple(&mut rng, config.n, config.entry_height, &kind);
                certificate_trial(i, &tuple, false, &params)
            }
        })
        .collect();
    let (records, witnesses): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let mut report = ScanReport::assemble(ScanMode::Cert, config.clone(), records, None);
    report.witnesses = witnesses.into_iter().flatten().collect();
    Ok(report)
}

/// Checks `|euler_number| <= NORM_CONST (2g - 2)` on random valid genus-`2n` reps.
pub fn scan_milnor_wood(config: &ScanConfig) -> Result<ScanReport> {
    let kind = config.validate()?;
    let results: Vec<(TrialRecord, Option<Violation>)> = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(config.seed, i);
            let sampled = sample_rep(&mut rng, config.n, config.entry_height, &kind);
            let mut rec = TrialRecord {
                trial: i,
                hash: String::new(),
                field: kind.to_string(),
                planted: false,
                variant: None,
                class: None,
                value: None,
                bound: None,
                status: None,
                heuristic_ok: None,
                error: None,
            };
            let (rep, variant) = match sampled {
                Ok(x) => x,
                Err(e) => {
                    rec.error = Some(ErrorInfo::from(&e));
                    return (rec, None);
                }
            };
            rec.hash = text_hash(&rep_to_text(&rep));
            rec.field = rep.kind().to_string();
            rec.variant = Some(variant);
            match milnor_wood_check(&rep, &BasePoint::zero(rep.kind())) {
                Ok(mw) => {
                    rec.value = Some(mw.value);
                    rec.bound = Some(mw.bound);
                    rec.status = Some(if mw.ok { "ok" } else { "violation" }.into());
                    let violation = (!mw.ok).then(|| Violation {
                        trial: i,
                        seed: config.seed,
                        value: mw.value,
                        bound: mw.bound,
                        rep: RepRecord::from_rep(&rep),
                    });
                    (rec, violation)
                }
                Err(e) => {
                    rec.error = Some(ErrorInfo::from(&e));
                    (rec, None)
                }
            }
        })
        .collect();
    let (records, violations): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let note = (!kind.is_archimedean())
        .then(|| "non-Archimedean field: Milnor-Wood evidence only, no discreteness heuristic".to_string());
    let mut report = ScanReport::assemble(ScanMode::Mw, config.clone(), records, note);
    report.violations = violations.into_iter().flatten().collect();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleCheck {
    pub trials: u64,
    pub seed: u64,
    /// Trial indices with a nonzero defect.
    pub failures: Vec<u64>,
}

/// A random point of `P^1(Q)`, infinity included.
pub fn sample_point<R: Rng>(rng: &mut R, height: u32, kind: &FieldKind) -> ProjPoint {
    if rng.random_range(0..8) == 0 {
        ProjPoint::infinity(kind)
    } else {
        ProjPoint::finite(sample_scalar(rng, height, kind))
    }
}

/// Exact cocycle identity on `trials` random rational triples and base points.
pub fn check_cocycle(trials: u64, seed: u64, height: u32) -> CocycleCheck {
    let kind = FieldKind::Rational;
    let mut failures: Vec<u64> = (0..trials)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = trial_rng(seed, i);
            let g: Vec<Mat2> = (0..3).map(|_| sample_sl2(&mut rng, height, &kind)).collect();
            let p = BasePoint::new(sample_point(&mut rng, height, &kind));
            cocycle_defect(&g[0], &g[1], &g[2], &p) != Ok(0)
        })
        .collect();
    failures.sort_unstable();
    CocycleCheck { trials, seed, failures }
}

/// Recomputes the relator of a record, for re-verification of scan output.
pub fn relator_of(record: &RepRecord) -> Result<Mat2> {
    Ok(relator(record.to_rep()?.pairs()))
}
