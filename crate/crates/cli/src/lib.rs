//! The `eulercert` command-line tool. [`run`] does everything; `main` only wires
//! up the process streams and exit code.
//!
//! Exit codes: 0 success, 1 domain error (a JSON error record goes to stdout),
//! 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eulercert::circle::{lift, milnor_euler, milnor_euler_exact_orbit, rot, translation_number};
use eulercert::doubling::{certify, HeuristicParams};
use eulercert::explore::{check_cocycle, scan_certificates, scan_milnor_wood, ScanConfig, ScanReport};
use eulercert::io::{
    load_rep, load_tuple, parse_field_element, rep_to_text, to_json_line, tuple_to_text, CertificateRecord, Record,
    RepRecord,
};
use eulercert::surfrep::milnor_wood_check;
use eulercert::twist::{discrete_twist, flow_twist};
use eulercert::{BasePoint, Error, FMat2, ProjPoint, NORM_CONST, VERSION};

#[derive(Parser, Debug)]
#[command(name = "eulercert", version, about = "Exact Euler numbers and freeness certificates for SL2 representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanModeArg {
    Cert,
    Mw,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler number of a representation file
    Euler {
        file: PathBuf,
        /// base point [X:Y], default [0:1]
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        basepoint: Option<Vec<String>>,
        /// print a JSON record instead of the bare integer
        #[arg(long)]
        json: bool,
    },
    /// Double a pair tuple and print its certificate record
    Certify {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        word_depth: usize,
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        #[arg(long, default_value_t = HeuristicParams::default().word_cap)]
        word_cap: u64,
    },
    /// Discrete reflection twist, or the flow twist at time T
    Twist {
        file: PathBuf,
        #[arg(long)]
        kappa: usize,
        #[arg(long, allow_negative_numbers = true)]
        flow: Option<f64>,
    },
    /// Rotation number of a matrix: four entries row-major, separate or in one quoted string
    Rot {
        #[arg(num_args = 1..=4, value_name = "MATRIX", allow_negative_numbers = true, required = true)]
        matrix: Vec<String>,
        /// also estimate the translation number of the k = 0 lift
        #[arg(long)]
        iters: Option<u32>,
    },
    /// Float lifted-relator Euler number of a representation file
    Oracle {
        file: PathBuf,
        /// track the base-point orbit exactly (real fields only)
        #[arg(long)]
        exact_orbit: bool,
    },
    /// Seeded certificate or Milnor-Wood scan
    Scan {
        #[arg(long, value_enum)]
        mode: ScanModeArg,
        #[arg(long)]
        config: PathBuf,
        /// tuple files certified as the first trials (cert mode)
        #[arg(long)]
        plant: Vec<PathBuf>,
        /// write the JSONL report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// write witness and violation files into this directory
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Check the cocycle identity on random rational triples
    CheckCocycle {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        height: u32,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io { path: PathBuf, message: String },
    Finding(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    kind: &'static str,
    error: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
}

impl Failure {
    fn record(&self) -> String {
        let rec = match self {
            Failure::Domain(e) => ErrorRecord {
                kind: "error",
                error: e.code(),
                message: e.to_string(),
                line: match e {
                    Error::Parse { line, .. } => Some(*line),
                    _ => None,
                },
                path: None,
            },
            Failure::Io { path, message } => ErrorRecord {
                kind: "error",
                error: "IoError",
                message: message.clone(),
                line: None,
                path: Some(path.display().to_string()),
            },
            Failure::Finding(m) => {
                ErrorRecord { kind: "error", error: "CheckFailed", message: m.clone(), line: None, path: None }
            }
        };
        to_json_line(&rec)
    }
}

type Out<'a> = &'a mut dyn Write;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn emit(out: Out, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::Io { path: PathBuf::from("<stdout>"), message: e.to_string() })
}

#[derive(Serialize)]
struct EulerRecord {
    kind: &'static str,
    genus: usize,
    field: String,
    base_point: [String; 2],
    value: i64,
    bound: i64,
    ok: bool,
    norm_const: i64,
}

#[derive(Serialize)]
struct FlowRecord {
    kind: &'static str,
    inexact: bool,
    kappa: usize,
    t: f64,
    negated_gamma: bool,
    log_lambda: f64,
    relator_residual: f64,
    pairs: Vec<[[f64; 4]; 2]>,
}

#[derive(Serialize)]
struct RotRecord {
    kind: &'static str,
    inexact: bool,
    matrix: [f64; 4],
    rot: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    translation_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_bound: Option<f64>,
}

#[derive(Serialize)]
struct OracleRecord {
    kind: &'static str,
    inexact: bool,
    method: &'static str,
    genus: usize,
    milnor_euler: i64,
    relator_residual: f64,
}

fn flat(m: &FMat2) -> [f64; 4] {
    [m.0[0][0], m.0[0][1], m.0[1][0], m.0[1][1]]
}

fn parse_float_entry(text: &str) -> Result<f64, Failure> {
    if let Ok(v) = text.parse::<f64>() {
        return Ok(v);
    }
    // exact syntax, including sqrt(d) with any d
    let words: Vec<&str> = text.split("sqrt(").collect();
    let kind = match words.get(1).and_then(|w| w.split(')').next()) {
        Some(d) => eulercert::io::parse_field_kind(&format!("quad {d}")),
        None => Some(eulercert::FieldKind::Rational),
    };
    kind.and_then(|k| parse_field_element(text, &k).ok())
        .and_then(|e| e.to_f64())
        .ok_or_else(|| Failure::Domain(Error::Parse { line: 0, message: format!("`{text}` is not a real number") }))
}

fn dispatch(cli: Cli, out: Out, err: Out) -> Result<(), Failure> {
    match cli.command {
        Command::Euler { file, basepoint, json } => {
            let rep = load_rep(&read(&file)?)?;
            let kind = rep.kind().clone();
            let p = match basepoint {
                Some(xy) => BasePoint::new(ProjPoint::new(
                    parse_field_element(&xy[0], &kind)?,
                    parse_field_element(&xy[1], &kind)?,
                )?),
                None => BasePoint::zero(&kind),
            };
            let mw = milnor_wood_check(&rep, &p)?;
            if json {
                let rec = EulerRecord {
                    kind: "euler",
                    genus: rep.genus(),
                    field: kind.to_string(),
                    base_point: eulercert::io::point_strings(p.point()),
                    value: mw.value,
                    bound: mw.bound,
                    ok: mw.ok,
                    norm_const: NORM_CONST,
                };
                emit(out, &to_json_line(&rec))
            } else {
                emit(out, &mw.value.to_string())
            }
        }
        Command::Certify { file, word_depth, epsilon, word_cap } => {
            let tuple = load_tuple(&read(&file)?)?;
            if word_depth == 0 || !(epsilon > 0.0) {
                return Err(Error::InvalidConfig("--word-depth must be >= 1 and --epsilon > 0".into()).into());
            }
            let params = HeuristicParams { max_word_length: word_depth, epsilon, word_cap };
            let cert = certify(&tuple, &params)?;
            let _ = writeln!(err, "{:?}: f = {}, bound = {}", cert.result.status, cert.result.f_value, cert.result.bound);
            emit(out, &to_json_line(&Record::Certificate(Box::new(CertificateRecord::from_certificate(&cert)))))
        }
        Command::Twist { file, kappa, flow } => {
            let rep = load_rep(&read(&file)?)?;
            match flow {
                None => {
                    let twisted = discrete_twist(&rep, kappa)?;
                    emit(out, &to_json_line(&Record::Rep(RepRecord::from_rep(&twisted))))
                }
                Some(t) => {
                    let f = flow_twist(&rep, kappa, t)?;
                    let rec = FlowRecord {
                        kind: "flow_twist",
                        inexact: true,
                        kappa,
                        t,
                        negated_gamma: f.negated_gamma,
                        log_lambda: f.log_lambda,
                        relator_residual: f.rep.relator_residual(),
                        pairs: f.rep.pairs.iter().map(|(a, b)| [flat(a), flat(b)]).collect(),
                    };
                    emit(out, &to_json_line(&rec))
                }
            }
        }
        Command::Rot { matrix, iters } => {
            let entries: Vec<&str> = matrix.iter().flat_map(|s| s.split_whitespace()).collect();
            if entries.len() != 4 {
                return Err(Error::Parse { line: 0, message: format!("a matrix needs 4 entries, got {}", entries.len()) }.into());
            }
            let v = entries.iter().map(|s| parse_float_entry(s)).collect::<Result<Vec<_>, _>>()?;
            let m = FMat2::new(v[0], v[1], v[2], v[3]);
            let det = m.det();
            if !((det - 1.0).abs() <= 1e-12) {
                return Err(Error::NotUnimodular(format!("{det}")).into());
            }
            let est = iters.map(|n| translation_number(&lift(&m, 0).expect("det 1"), n));
            let rec = RotRecord {
                kind: "rot",
                inexact: true,
                matrix: flat(&m),
                rot: rot(&m),
                translation_estimate: est.map(|e| e.estimate),
                error_bound: est.map(|e| e.error_bound),
            };
            emit(out, &to_json_line(&rec))
        }
        Command::Oracle { file, exact_orbit } => {
            let rep = load_rep(&read(&file)?)?;
            let float = rep.to_float().ok_or_else(|| Error::NonRationalField(rep.kind().to_string()))?;
            let (method, e) = if exact_orbit {
                ("exact_orbit", milnor_euler_exact_orbit(&rep)?)
            } else {
                ("float", milnor_euler(&float)?)
            };
            let rec = OracleRecord {
                kind: "oracle",
                inexact: true,
                method,
                genus: rep.genus(),
                milnor_euler: e,
                relator_residual: float.relator_residual(),
            };
            emit(out, &to_json_line(&rec))
        }
        Command::Scan { mode, config, plant, out: out_path, witness_dir } => {
            let cfg = parse_config(&read(&config)?)?;
            let report = match mode {
                ScanModeArg::Cert => {
                    let planted = plant
                        .iter()
                        .map(|p| Ok(load_tuple(&read(p)?)?))
                        .collect::<Result<Vec<_>, Failure>>()?;
                    scan_certificates(&cfg, &planted)?
                }
                ScanModeArg::Mw => {
                    if !plant.is_empty() {
                        return Err(Error::InvalidConfig("--plant applies to cert scans only".into()).into());
                    }
                    scan_milnor_wood(&cfg)?
                }
            };
            if let Some(dir) = witness_dir {
                write_witnesses(&dir, &report)?;
            }
            let _ = write!(err, "{}", report.summary_table());
            match out_path {
                Some(p) => write_file(&p, &report.to_jsonl()),
                None => {
                    write!(out, "{}", report.to_jsonl())
                        .map_err(|e| Failure::Io { path: PathBuf::from("<stdout>"), message: e.to_string() })
                }
            }
        }
        Command::CheckCocycle { trials, seed, height } => {
            if trials == 0 || height == 0 {
                return Err(Error::InvalidConfig("--trials and --height must be at least 1".into()).into());
            }
            let check = check_cocycle(trials, seed, height);
            let mut rec = serde_json::to_value(&check).expect("serializable");
            rec["kind"] = "cocycle_check".into();
            emit(out, &rec.to_string())?;
            if check.failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Finding(format!("nonzero cocycle defect on {} trials", check.failures.len())))
            }
        }
    }
}

/// Parses a TOML scan configuration and validates it.
pub fn parse_config(text: &str) -> Result<ScanConfig, Error> {
    let cfg: ScanConfig = toml::from_str(text).map_err(|e| {
        let line = e.span().map(|s| text[..s.start.min(text.len())].matches('\n').count() + 1).unwrap_or(0);
        Error::Parse { line, message: e.message().to_string() }
    })?;
    cfg.validate()?;
    Ok(cfg)
}

fn write_witnesses(dir: &Path, report: &ScanReport) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Io { path: dir.to_path_buf(), message: e.to_string() })?;
    for w in &report.witnesses {
        let tuple = w.tuple.to_tuple()?;
        write_file(&dir.join(format!("witness-{}.txt", w.trial)), &tuple_to_text(&tuple))?;
    }
    for v in &report.violations {
        let rep = v.rep.to_rep()?;
        let text = format!("# violation: value {} bound {} seed {} trial {}\n{}", v.value, v.bound, v.seed, v.trial, rep_to_text(&rep));
        write_file(&dir.join(format!("violation-{}.txt", v.trial)), &text)?;
    }
    Ok(())
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = writeln!(err, "eulercert {VERSION} (NORM_CONST = {NORM_CONST})");
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let record = f.record();
            let _ = writeln!(out, "{record}");
            let _ = writeln!(err, "error: {}", match &f {
                Failure::Domain(e) => e.to_string(),
                Failure::Io { path, message } => format!("{}: {message}", path.display()),
                Failure::Finding(m) => m.clone(),
            });
            1
        }
    }
}
