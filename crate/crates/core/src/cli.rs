//! Command-line front end.
//!
//! Flags and JSONL batch lines are both turned into a [`Request`] before any
//! computation runs, so the two modes share one execution path and one set of
//! result types. Text output is a rendering of the same [`Output`] value.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{all_surfaces, surface_params, SurfaceData};
use crate::error::{Error, Result};
use crate::lattice::rational::{self, serde_bigint};
use crate::lattice::{intersect, DivisorClass};
use crate::oracle::{verify_global_witness, verify_multipoint_formula, verify_single_point_chain, OracleReport};
use crate::positivity::{decide_ample, AmpleStatus, AmpleVerdict, Outcome};
use crate::seshadri::{
    global_constant, multipoint_general, multipoint_special, point_on_locus, very_general_point, Certificate, Locus,
    PointConfig, SeshadriResult, SeshadriStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATIONS: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyperell", version, about = "Ampleness and Seshadri constants on blown-up hyperelliptic surfaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Read JSONL queries from this file (`-` for stdin).
    #[arg(long)]
    pub batch: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The table of the seven surface types.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Intersection number of two classes.
    Intersect {
        #[arg(long = "type")]
        surface_type: Option<i64>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Tri-state ampleness verdict with criterion trace.
    Ample(BundleArgs),
    /// Seshadri constants.
    Seshadri {
        #[command(subcommand)]
        which: SeshadriCommand,
    },
    /// Brute-force verification of the closed forms.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    Show {
        #[arg(long = "type")]
        surface_type: Option<i64>,
    },
}

#[derive(Debug, Args)]
pub struct BundleArgs {
    #[arg(long = "type")]
    pub surface_type: i64,
    #[arg(long)]
    pub r: Option<usize>,
    /// `a,b,d` (uniform, with --r) or `a,b,d1,...,dR`.
    #[arg(long, allow_hyphen_values = true)]
    pub bundle: String,
}

#[derive(Debug, Subcommand)]
pub enum SeshadriCommand {
    /// Multi-point constant on X; special configuration with --config, else r general points.
    Multi {
        #[arg(long = "type")]
        surface_type: Option<i64>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        bundle: String,
        /// `r,s0,t0,lA,lB`
        #[arg(long)]
        config: Option<String>,
        /// The s0 points lie on a Singular A (odd types) or on singular fibres (even types).
        #[arg(long)]
        singular_a: bool,
    },
    /// Single-point constant on X_r.
    Point {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, value_enum)]
        locus: LocusArg,
        #[arg(long)]
        on_b_minus_e: bool,
    },
    /// Global constant on X_r with certificate.
    Global(BundleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusArg {
    SmoothA,
    AMinusE,
    SingularA,
    VeryGeneral,
}

#[derive(Debug, Subcommand)]
pub enum OracleAction {
    Verify {
        #[arg(long, value_enum)]
        prop: Prop,
        #[arg(long = "type")]
        surface_type: i64,
        #[arg(long)]
        grid_max: u32,
        #[arg(long = "box", default_value_t = 16)]
        box_size: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prop {
    Multipoint,
    SingleChain,
    GlobalWitness,
}

// ---------------------------------------------------------------------------
// Requests
// ---------------------------------------------------------------------------

/// A bundle either as `"a,b,d..."` or as a class object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BundleSpec {
    Text(String),
    Class(DivisorClass),
}

impl BundleSpec {
    /// Resolves the uniform shorthand and the `--r` consistency rule.
    pub fn resolve(&self, r: Option<usize>) -> Result<DivisorClass> {
        let c = match self {
            BundleSpec::Class(c) => return check_r(c.clone(), r, &format!("{c}")),
            BundleSpec::Text(s) => DivisorClass::parse_list(s)?,
        };
        match (c.r(), r) {
            (0, Some(r)) => Ok(c.padded(r)?),
            (1, Some(r)) => Ok(DivisorClass::uniform(c.a, c.b, c.d[0].clone(), r)),
            (_, r) => check_r(c, r, self.token()),
        }
    }

    fn token(&self) -> &str {
        match self {
            BundleSpec::Text(s) => s,
            BundleSpec::Class(_) => "class",
        }
    }
}

fn check_r(c: DivisorClass, r: Option<usize>, token: &str) -> Result<DivisorClass> {
    match r {
        Some(r) if r != c.r() => Err(Error::InvalidInput(format!(
            "r mismatch: --r {r} but bundle {token:?} has {} multiplicities",
            c.r()
        ))),
        _ => Ok(c),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogPayload {
    #[serde(rename = "type", default)]
    pub surface_type: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectPayload {
    #[serde(rename = "type", default)]
    pub surface_type: Option<i64>,
    #[serde(default)]
    pub r: Option<usize>,
    pub lhs: BundleSpec,
    pub rhs: BundleSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundlePayload {
    #[serde(rename = "type")]
    pub surface_type: i64,
    #[serde(default)]
    pub r: Option<usize>,
    pub bundle: BundleSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiPayload {
    #[serde(rename = "type", default)]
    pub surface_type: Option<i64>,
    #[serde(default)]
    pub r: Option<usize>,
    pub bundle: BundleSpec,
    #[serde(default)]
    pub config: Option<PointConfig>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointPayload {
    #[serde(rename = "type")]
    pub surface_type: i64,
    #[serde(default)]
    pub r: Option<usize>,
    pub bundle: BundleSpec,
    pub locus: LocusArg,
    #[serde(default)]
    pub on_b_minus_e: bool,
}

fn default_box() -> u32 {
    16
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OraclePayload {
    pub prop: Prop,
    #[serde(rename = "type")]
    pub surface_type: i64,
    pub grid_max: u32,
    #[serde(rename = "box", default = "default_box")]
    pub box_size: u32,
    #[serde(default)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Catalog(CatalogPayload),
    Intersect(IntersectPayload),
    Ample(BundlePayload),
    SeshadriMulti(MultiPayload),
    SeshadriPoint(PointPayload),
    SeshadriGlobal(BundlePayload),
    OracleVerify(OraclePayload),
}

/// One JSONL batch line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    #[serde(default)]
    pub id: Option<String>,
    pub command: String,
    #[serde(default)]
    pub payload: serde_json::Value,
}

impl Query {
    pub fn into_request(self) -> Result<Request> {
        fn p<T: for<'de> Deserialize<'de>>(v: serde_json::Value) -> Result<T> {
            let v = if v.is_null() { serde_json::Value::Object(Default::default()) } else { v };
            serde_json::from_value(v).map_err(|e| Error::InvalidInput(format!("payload: {e}")))
        }
        Ok(match self.command.as_str() {
            "catalog" => Request::Catalog(p(self.payload)?),
            "intersect" => Request::Intersect(p(self.payload)?),
            "ample" => Request::Ample(p(self.payload)?),
            "seshadri-multi" => Request::SeshadriMulti(p(self.payload)?),
            "seshadri-point" => Request::SeshadriPoint(p(self.payload)?),
            "seshadri-global" => Request::SeshadriGlobal(p(self.payload)?),
            "oracle-verify" => Request::OracleVerify(p(self.payload)?),
            other => return Err(Error::InvalidInput(format!("unknown command {other:?}"))),
        })
    }
}

fn parse_config(s: &str, singular: bool) -> Result<PointConfig> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("malformed config entry {t:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    match v[..] {
        [r, s0, t0, l_a, l_b] => PointConfig::new(r, s0, t0, l_a, l_b, singular),
        _ => Err(Error::InvalidInput(format!("config {s:?} must be r,s0,t0,lA,lB"))),
    }
}

impl Command {
    pub fn into_request(self) -> Result<Request> {
        let bundle = |b: BundleArgs| BundlePayload {
            surface_type: b.surface_type,
            r: b.r,
            bundle: BundleSpec::Text(b.bundle),
        };
        Ok(match self {
            Command::Catalog { action: CatalogAction::Show { surface_type } } => {
                Request::Catalog(CatalogPayload { surface_type })
            }
            Command::Intersect { surface_type, r, lhs, rhs } => Request::Intersect(IntersectPayload {
                surface_type,
                r,
                lhs: BundleSpec::Text(lhs),
                rhs: BundleSpec::Text(rhs),
            }),
            Command::Ample(b) => Request::Ample(bundle(b)),
            Command::Seshadri { which } => match which {
                SeshadriCommand::Multi { surface_type, r, bundle, config, singular_a } => {
                    Request::SeshadriMulti(MultiPayload {
                        surface_type,
                        r,
                        bundle: BundleSpec::Text(bundle),
                        config: config.map(|c| parse_config(&c, singular_a)).transpose()?,
                    })
                }
                SeshadriCommand::Point { bundle: b, locus, on_b_minus_e } => Request::SeshadriPoint(PointPayload {
                    surface_type: b.surface_type,
                    r: b.r,
                    bundle: BundleSpec::Text(b.bundle),
                    locus,
                    on_b_minus_e,
                }),
                SeshadriCommand::Global(b) => Request::SeshadriGlobal(bundle(b)),
            },
            Command::Oracle { action: OracleAction::Verify { prop, surface_type, grid_max, box_size, jobs } } => {
                Request::OracleVerify(OraclePayload { prop, surface_type, grid_max, box_size, jobs })
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Outputs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectOutput {
    #[serde(with = "serde_bigint")]
    pub value: num_bigint::BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriReport {
    #[serde(flatten)]
    pub result: SeshadriResult,
    #[serde(default)]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Output {
    Catalog(Vec<SurfaceData>),
    CatalogRow(SurfaceData),
    Intersect(IntersectOutput),
    Ample(AmpleVerdict),
    Seshadri(SeshadriReport),
    Oracle(OracleReport),
}

impl Output {
    pub fn has_violations(&self) -> bool {
        matches!(self, Output::Oracle(r) if !r.passed())
    }
}

pub fn execute(req: Request) -> Result<Output> {
    Ok(match req {
        Request::Catalog(p) => match p.surface_type {
            Some(t) => Output::CatalogRow(surface_params(t)?),
            None => Output::Catalog(all_surfaces()),
        },
        Request::Intersect(p) => {
            if let Some(t) = p.surface_type {
                surface_params(t)?;
            }
            let lhs = p.lhs.resolve(p.r)?;
            let rhs = p.rhs.resolve(p.r.or(Some(lhs.r())))?;
            Output::Intersect(IntersectOutput { value: intersect(&lhs, &rhs)? })
        }
        Request::Ample(p) => {
            let s = surface_params(p.surface_type)?;
            Output::Ample(decide_ample(&p.bundle.resolve(p.r)?, &s))
        }
        Request::SeshadriMulti(p) => {
            let l = p.bundle.resolve(Some(0))?;
            let result = match p.config {
                Some(cfg) => {
                    let t = p.surface_type.ok_or_else(|| Error::InvalidInput("--type is required with --config".into()))?;
                    if p.r.is_some_and(|r| r != cfg.r) {
                        return Err(Error::InvalidInput(format!("r mismatch: --r {} but config has r = {}", p.r.unwrap(), cfg.r)));
                    }
                    multipoint_special(&l, &surface_params(t)?, &cfg)?
                }
                None => {
                    if let Some(t) = p.surface_type {
                        surface_params(t)?;
                    }
                    let r = p.r.ok_or_else(|| Error::InvalidInput("--r or --config is required".into()))?;
                    multipoint_general(&l, r)?
                }
            };
            Output::Seshadri(SeshadriReport { result, certificate: None })
        }
        Request::SeshadriPoint(p) => {
            let s = surface_params(p.surface_type)?;
            let l = p.bundle.resolve(p.r)?;
            let result = match p.locus {
                LocusArg::VeryGeneral => very_general_point(&l, &s)?,
                LocusArg::SmoothA => point_on_locus(&l, &s, Locus::SmoothA, p.on_b_minus_e)?,
                LocusArg::AMinusE => point_on_locus(&l, &s, Locus::AMinusE, p.on_b_minus_e)?,
                LocusArg::SingularA => point_on_locus(&l, &s, Locus::SingularA, p.on_b_minus_e)?,
            };
            Output::Seshadri(SeshadriReport { result, certificate: None })
        }
        Request::SeshadriGlobal(p) => {
            let s = surface_params(p.surface_type)?;
            let (result, certificate) = global_constant(&p.bundle.resolve(p.r)?, &s)?;
            Output::Seshadri(SeshadriReport { result, certificate })
        }
        Request::OracleVerify(p) => {
            let s = surface_params(p.surface_type)?;
            Output::Oracle(match p.prop {
                Prop::Multipoint => verify_multipoint_formula(&s, p.grid_max, p.box_size, p.jobs)?,
                Prop::SingleChain => verify_single_point_chain(&s, p.grid_max, p.box_size, p.jobs)?,
                Prop::GlobalWitness => verify_global_witness(&s, p.grid_max, p.jobs)?,
            })
        }
    })
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn catalog_line(s: &SurfaceData) -> String {
    format!(
        "type {}  {:<8} gamma={} multiplicities={:?} mu={} gamma/mu={}",
        s.type_id, s.group_label, s.gamma, s.multiplicities, s.mu, s.fibre_b_coeff
    )
}

pub fn render_text(out: &Output) -> String {
    let mut t = String::new();
    match out {
        Output::Catalog(rows) => {
            for s in rows {
                let _ = writeln!(t, "{}", catalog_line(s));
            }
        }
        Output::CatalogRow(s) => {
            let _ = writeln!(t, "{}", catalog_line(s));
        }
        Output::Intersect(v) => {
            let _ = writeln!(t, "value: {}", v.value);
        }
        Output::Ample(v) => {
            let status = match v.status {
                AmpleStatus::Proven => "proven",
                AmpleStatus::Refuted => "refuted",
                AmpleStatus::Unknown => "unknown",
            };
            let _ = writeln!(t, "ample: {status}");
            for c in &v.criteria {
                let mark = match c.outcome {
                    Outcome::Passed => "pass",
                    Outcome::Failed => "FAIL",
                    Outcome::NotApplicable => "n/a ",
                };
                let _ = writeln!(t, "  [{mark}] {}: {}", c.name, c.detail);
            }
            for w in &v.witnesses {
                let _ = writeln!(t, "  witness {w}");
            }
        }
        Output::Seshadri(rep) => render_seshadri(&mut t, rep),
        Output::Oracle(rep) => {
            let _ = writeln!(t, "oracle {} on type {}: {}", rep.property, rep.surface_type, rep.grid);
            let _ = writeln!(t, "  instances checked: {}", rep.instances_checked);
            let _ = writeln!(t, "  violations: {}", rep.violations.len());
            for v in rep.violations.iter().take(10) {
                let _ = writeln!(t, "    {}: found {} vs claimed {} ({})", v.parameters, rational::to_string(&v.found), v.claimed, v.note);
            }
            if let Some(g) = &rep.min_gap {
                let _ = writeln!(t, "  min gap: {}", rational::to_string(g));
            }
            for (k, n) in &rep.tallies {
                let _ = writeln!(t, "  {k}: {n}");
            }
        }
    }
    t
}

fn render_seshadri(t: &mut String, rep: &SeshadriReport) {
    let r = &rep.result;
    let _ = match r.status {
        SeshadriStatus::Exact => writeln!(t, "epsilon = {}", rational::to_string(r.value.as_ref().expect("exact"))),
        SeshadriStatus::Bounds => writeln!(t, "{} <= epsilon <= {}", rational::to_string(&r.lower), r.upper),
        SeshadriStatus::HypothesesNotMet => writeln!(t, "hypotheses not met; 0 < epsilon <= {}", r.upper),
    };
    for h in &r.hypotheses {
        let _ = writeln!(t, "  [{}] {}: {}", if h.holds { "ok" } else { "no" }, h.name, h.detail);
    }
    for a in &r.attaining {
        let _ = writeln!(t, "  curve {} {} mult {}: ratio {}", a.curve, a.class, a.multiplicity, rational::to_string(&a.ratio));
    }
    if let Some(c) = &rep.certificate {
        let _ = writeln!(t, "  certificate at {}: {} (verified: {})", c.witness_point, c.comparison.statement, c.verify());
    }
}

fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(out).expect("outputs serialize") + "\n",
        Format::Text => render_text(out),
    }
}

// ---------------------------------------------------------------------------
// Drivers
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BatchLine<'a> {
    id: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a Output>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Answers each JSONL line in order; malformed lines yield error objects.
/// Returns whether every line succeeded.
pub fn run_batch(input: impl BufRead, out: &mut dyn Write) -> std::io::Result<bool> {
    let mut clean = true;
    for line in input.lines() {
        let line = line?;
        let parsed = serde_json::from_str::<Query>(&line).map_err(|e| Error::InvalidInput(format!("malformed query: {e}")));
        let id = parsed.as_ref().ok().and_then(|q| q.id.clone()).or_else(|| loose_id(&line));
        let result = parsed.and_then(Query::into_request).and_then(execute);
        let entry = match &result {
            Ok(o) => BatchLine { id: id.as_deref(), result: Some(o), error: None },
            Err(e) => {
                clean = false;
                BatchLine { id: id.as_deref(), result: None, error: Some(e.to_string()) }
            }
        };
        writeln!(out, "{}", serde_json::to_string(&entry).expect("batch line serializes"))?;
    }
    Ok(clean)
}

/// Best-effort id recovery from a line that failed to parse as a query.
fn loose_id(line: &str) -> Option<String> {
    let v: serde_json::Value = serde_json::from_str(line).ok()?;
    v.get("id")?.as_str().map(str::to_string)
}

/// Parses `argv`, runs one query or a batch, and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let mut file;
    let sink: &mut dyn Write = match &cli.output {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => {
                file = std::io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        },
        None => out,
    };
    let code = match (&cli.batch, cli.command) {
        (Some(_), Some(_)) => {
            let _ = writeln!(err, "error: --batch cannot be combined with a subcommand");
            EXIT_INPUT
        }
        (None, None) => {
            let _ = writeln!(err, "error: a subcommand or --batch is required");
            EXIT_INPUT
        }
        (Some(path), None) => batch_from(path, sink, err),
        (None, Some(cmd)) => match cmd.into_request().and_then(execute) {
            Ok(o) => match sink.write_all(render(&o, cli.format).as_bytes()) {
                Ok(()) if o.has_violations() => EXIT_VIOLATIONS,
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_INPUT
                }
            },
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
    };
    let _ = sink.flush();
    code
}

fn batch_from(path: &std::path::Path, sink: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = if path.as_os_str() == "-" {
        run_batch(std::io::stdin().lock(), sink)
    } else {
        match std::fs::File::open(path) {
            Ok(f) => run_batch(std::io::BufReader::new(f), sink),
            Err(e) => Err(e),
        }
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_INPUT,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            EXIT_INPUT
        }
    }
}
