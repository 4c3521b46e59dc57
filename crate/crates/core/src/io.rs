//! Text and JSON formats for representations, pair tuples and certificates.
//!
//! Text format: a header line, then one matrix per line as four field elements
//! (row-major, no spaces inside an element). `#` starts a comment.
//!
//! ```text
//! genus 2 field quad 5
//! 1 2 0 1
//! ...
//! ```
//!
//! A tuple file uses the header `pairs n field ...` instead. JSON records carry
//! the same exact element strings; loaders accept either form, and a certificate
//! record can be loaded as its input tuple or as its doubled representation.

use serde::{Deserialize, Serialize};

use crate::doubling::{Certificate, HeuristicReport, PairTuple, Status};
use crate::error::{Error, Result};
use crate::field::{parse_element, FieldElement, FieldKind};
use crate::matrix::Mat2;
use crate::projline::ProjPoint;
use crate::surfrep::{Pair, RelatorSign, SurfaceRep, NORM_CONST};

pub type MatrixStrings = [String; 4];

pub fn matrix_strings(m: &Mat2) -> MatrixStrings {
    m.entries().map(|e| e.to_string())
}

pub fn point_strings(p: &ProjPoint) -> [String; 2] {
    [p.x().to_string(), p.y().to_string()]
}

fn pair_strings(pairs: &[Pair]) -> Vec<[MatrixStrings; 2]> {
    pairs.iter().map(|(a, b)| [matrix_strings(a), matrix_strings(b)]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRecord {
    pub field: String,
    pub genus: usize,
    pub pairs: Vec<[MatrixStrings; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relator_sign: Option<RelatorSign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub field: String,
    pub n: usize,
    pub pairs: Vec<[MatrixStrings; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub input: TupleRecord,
    pub h: MatrixStrings,
    pub trace_h: String,
    pub extension: Option<String>,
    pub working_field: String,
    pub x1: [String; 2],
    pub x2: [String; 2],
    pub r: MatrixStrings,
    pub doubled: RepRecord,
    pub base_point: [String; 2],
    pub f_value: i64,
    pub bound: i64,
    pub norm_const: i64,
    pub status: Status,
    pub heuristic: HeuristicReport,
    pub verdict: String,
}

/// Every structured record, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Rep(RepRecord),
    Tuple(TupleRecord),
    Certificate(Box<CertificateRecord>),
}

impl RepRecord {
    pub fn from_rep(rep: &SurfaceRep) -> RepRecord {
        RepRecord {
            field: rep.kind().to_string(),
            genus: rep.genus(),
            pairs: pair_strings(rep.pairs()),
            relator_sign: Some(rep.relator_sign()),
        }
    }

    pub fn to_rep(&self) -> Result<SurfaceRep> {
        let pairs = pairs_from_strings(&self.field, &self.pairs)?;
        if pairs.len() != self.genus {
            return Err(Error::parse(0, format!("genus {} but {} pairs", self.genus, pairs.len())));
        }
        SurfaceRep::new(pairs)
    }
}

impl TupleRecord {
    pub fn from_tuple(t: &PairTuple) -> TupleRecord {
        TupleRecord { field: t.kind().to_string(), n: t.len(), pairs: pair_strings(t.pairs()) }
    }

    pub fn to_tuple(&self) -> Result<PairTuple> {
        let pairs = pairs_from_strings(&self.field, &self.pairs)?;
        if pairs.len() != self.n {
            return Err(Error::parse(0, format!("n = {} but {} pairs", self.n, pairs.len())));
        }
        PairTuple::new(pairs)
    }
}

impl CertificateRecord {
    pub fn from_certificate(c: &Certificate) -> CertificateRecord {
        let r = &c.result;
        CertificateRecord {
            input: TupleRecord::from_tuple(&r.input),
            h: matrix_strings(&r.h),
            trace_h: r.trace_h.to_string(),
            extension: r.extension.as_ref().map(|d| d.to_string()),
            working_field: r.doubled.kind().to_string(),
            x1: point_strings(&r.x1),
            x2: point_strings(&r.x2),
            r: matrix_strings(&r.r),
            doubled: RepRecord::from_rep(&r.doubled),
            base_point: point_strings(r.base_point.point()),
            f_value: r.f_value,
            bound: r.bound,
            norm_const: NORM_CONST,
            status: r.status,
            heuristic: c.heuristic.clone(),
            verdict: c.verdict.clone(),
        }
    }
}

pub fn parse_field_kind(text: &str) -> Option<FieldKind> {
    FieldKind::parse_words(&text.split_whitespace().collect::<Vec<_>>())
}

fn field_from_str(text: &str) -> Result<FieldKind> {
    parse_field_kind(text).ok_or_else(|| Error::parse(0, format!("unknown field `{text}`")))
}

fn element(text: &str, kind: &FieldKind, line: usize) -> Result<FieldElement> {
    parse_element(text, kind).map_err(|m| Error::parse(line, format!("`{text}`: {m}")))
}

fn matrix_from(entries: &[&str], kind: &FieldKind, line: usize) -> Result<Mat2> {
    if entries.len() != 4 {
        return Err(Error::parse(line, format!("expected 4 matrix entries, found {}", entries.len())));
    }
    let e = entries
        .iter()
        .map(|t| element(t, kind, line))
        .collect::<Result<Vec<_>>>()?;
    let [a, b, c, d]: [FieldElement; 4] = e.try_into().expect("four entries");
    Mat2::sl2(a, b, c, d).map_err(|err| match err {
        Error::NotUnimodular(det) => Error::parse(line, format!("determinant is {det}, not 1")),
        other => other,
    })
}

fn pairs_from_strings(field: &str, pairs: &[[MatrixStrings; 2]]) -> Result<Vec<Pair>> {
    let kind = field_from_str(field)?;
    pairs
        .iter()
        .map(|[a, b]| {
            let a: Vec<&str> = a.iter().map(String::as_str).collect();
            let b: Vec<&str> = b.iter().map(String::as_str).collect();
            Ok((matrix_from(&a, &kind, 0)?, matrix_from(&b, &kind, 0)?))
        })
        .collect()
}

/// Parses a field element string in the given field.
pub fn parse_field_element(text: &str, kind: &FieldKind) -> Result<FieldElement> {
    element(text, kind, 0)
}

struct TextFile {
    keyword: String,
    header_line: usize,
    pairs: Vec<Pair>,
}

fn parse_text(text: &str) -> Result<TextFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (keyword, count, kind) = match words.as_slice() {
        [kw @ ("genus" | "pairs"), n, "field", rest @ ..] => {
            let count: usize = n
                .parse()
                .map_err(|_| Error::parse(hline, format!("`{n}` is not a count")))?;
            if count == 0 {
                return Err(Error::parse(hline, "count must be at least 1"));
            }
            let kind = FieldKind::parse_words(rest)
                .ok_or_else(|| Error::parse(hline, format!("unknown field `{}`", rest.join(" "))))?;
            (kw.to_string(), count, kind)
        }
        _ => return Err(Error::parse(hline, "expected `genus g field ...` or `pairs n field ...`")),
    };
    let mut mats = Vec::with_capacity(2 * count);
    let mut last = hline;
    for (i, line) in lines {
        last = i;
        if mats.len() == 2 * count {
            return Err(Error::parse(i, format!("more than {} matrix lines", 2 * count)));
        }
        let entries: Vec<&str> = line.split_whitespace().collect();
        mats.push(matrix_from(&entries, &kind, i)?);
    }
    if mats.len() != 2 * count {
        return Err(Error::parse(last, format!("expected {} matrix lines, found {}", 2 * count, mats.len())));
    }
    let mut it = mats.into_iter();
    let pairs = (0..count).map(|_| (it.next().unwrap(), it.next().unwrap())).collect();
    Ok(TextFile { keyword, header_line: hline, pairs })
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

pub fn parse_record(text: &str) -> Result<Record> {
    serde_json::from_str(text.trim()).map_err(|e| Error::parse(e.line(), e.to_string()))
}

/// Loads a representation from the text format or from a `rep` / `certificate` record.
pub fn load_rep(text: &str) -> Result<SurfaceRep> {
    if is_json(text) {
        return match parse_record(text)? {
            Record::Rep(r) => r.to_rep(),
            Record::Certificate(c) => c.doubled.to_rep(),
            Record::Tuple(_) => Err(Error::parse(1, "expected a representation, found a pair tuple")),
        };
    }
    let file = parse_text(text)?;
    if file.keyword != "genus" {
        return Err(Error::parse(file.header_line, "expected a `genus g field ...` header"));
    }
    SurfaceRep::new(file.pairs)
}

/// Loads a pair tuple from the text format or from a `tuple` / `certificate` record.
pub fn load_tuple(text: &str) -> Result<PairTuple> {
    if is_json(text) {
        return match parse_record(text)? {
            Record::Tuple(t) => t.to_tuple(),
            Record::Certificate(c) => c.input.to_tuple(),
            Record::Rep(_) => Err(Error::parse(1, "expected a pair tuple, found a representation")),
        };
    }
    let file = parse_text(text)?;
    if file.keyword != "pairs" {
        return Err(Error::parse(file.header_line, "expected a `pairs n field ...` header"));
    }
    PairTuple::new(file.pairs)
}

fn write_pairs(out: &mut String, pairs: &[Pair]) {
    for (a, b) in pairs {
        for m in [a, b] {
            out.push_str(&matrix_strings(m).join(" "));
            out.push('\n');
        }
    }
}

pub fn rep_to_text(rep: &SurfaceRep) -> String {
    let mut out = format!("genus {} field {}\n", rep.genus(), rep.kind());
    write_pairs(&mut out, rep.pairs());
    out
}

pub fn tuple_to_text(t: &PairTuple) -> String {
    let mut out = format!("pairs {} field {}\n", t.len(), t.kind());
    write_pairs(&mut out, t.pairs());
    out
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::{certify, HeuristicParams};

    const TR18: &str = "# a classical free pair\npairs 1 field rational\n1 2 0 1\n1 0 2 1\n";

    #[test]
    fn text_round_trip() {
        let t = load_tuple(TR18).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(load_tuple(&tuple_to_text(&t)).unwrap(), t);
        let rep = crate::double(&t).unwrap();
        let text = rep_to_text(&rep);
        assert!(text.starts_with("genus 2 field quad 5\n"));
        assert_eq!(load_rep(&text).unwrap(), rep);
    }

    #[test]
    fn json_round_trip() {
        let t = load_tuple(TR18).unwrap();
        let cert = certify(&t, &HeuristicParams::default()).unwrap();
        let rec = Record::Certificate(Box::new(CertificateRecord::from_certificate(&cert)));
        let line = to_json_line(&rec);
        assert_eq!(parse_record(&line).unwrap(), rec);
        assert_eq!(load_tuple(&line).unwrap(), t);
        assert_eq!(load_rep(&line).unwrap(), cert.result.doubled);
        let again = certify(&load_tuple(&line).unwrap(), &HeuristicParams::default()).unwrap();
        assert_eq!(CertificateRecord::from_certificate(&again), CertificateRecord::from_certificate(&cert));

        let rep_line = to_json_line(&Record::Rep(RepRecord::from_rep(&cert.result.doubled)));
        assert_eq!(load_rep(&rep_line).unwrap(), cert.result.doubled);
        assert!(load_tuple(&rep_line).is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let cases = [
            ("", 1),
            ("genus x field rational\n", 1),
            ("genus 1 field cubic\n", 1),
            ("genus 1 field rational\n1 0 0 1\n1 0 0 2.5\n", 3),
            ("genus 1 field rational\n1 0 0 1\n\n# c\n2 0 0 1\n", 5),
            ("genus 1 field rational\n1 0 0 1\n", 2),
            ("genus 1 field rational\n1 0 0 1\n1 0 0 1\n1 0 0 1\n", 4),
            ("genus 1 field rational\n1 0 0\n", 2),
        ];
        for (text, line) in cases {
            match load_rep(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(load_rep("{\"kind\": \"rep\",\n \"field\": 3}"), Err(Error::Parse { .. })));
        assert!(matches!(load_rep("{\"kind\": \"rep\",\n \"field\": }"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn non_representation_is_a_domain_error() {
        let text = "genus 1 field rational\n1 2 0 1\n1 0 2 1\n";
        assert!(matches!(load_rep(text), Err(Error::NotARepresentation(_))));
    }

    #[test]
    fn ratfunc_and_quad_files() {
        let text = "genus 1 field ratfunc\n1 t 0 1\n1 0 0 1\n";
        let rep = load_rep(text).unwrap();
        assert_eq!(load_rep(&rep_to_text(&rep)).unwrap(), rep);
        let text = "genus 1 field quad 2\n1 sqrt(2) 0 1\n1 0 0 1\n";
        let rep = load_rep(text).unwrap();
        assert_eq!(load_rep(&rep_to_text(&rep)).unwrap(), rep);
    }
}
