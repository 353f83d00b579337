//! The `weylcalc` command line: one JSON document per query on stdout,
//! diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 hypothesis violated,
//! 3 exploration budget exceeded, 4 internal consistency failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::affweyl::{AffineWeyl, AffineWeylElt, ElementSpec, DEFAULT_BUDGET};
use crate::classes::StraightClass;
use crate::cyclic::Step;
use crate::dims::{CacheStats, DimEngine, DimValue, GammaDescriptor};
use crate::error::{Error, Result};
use crate::finiteweyl::FiniteWeylElt;
use crate::oracle;
use crate::rational::QVec;
use crate::rootdata::{build_root_datum, Kappa, RootDatum};

pub const CACHE_DIR_ENV: &str = "WEYLCALC_CACHE_DIR";

#[derive(Parser, Debug, Serialize)]
#[command(name = "weylcalc", version, about = "Exact combinatorics of affine Weyl groups and dimensions of affine Deligne-Lusztig and affine Lusztig varieties")]
pub struct Cli {
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub timing: bool,

    /// Directory for the memo cache (default: $WEYLCALC_CACHE_DIR).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,

    /// Node cap for closures and ball searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Root datum, simple reflections, Ω and π_1.
    Describe(GroupArg),
    /// Finite Weyl group queries.
    Finite {
        #[command(flatten)]
        #[serde(flatten)]
        group: GroupArg,
        #[command(subcommand)]
        op: FiniteOp,
    },
    /// Conjugacy classes in the extended affine Weyl group.
    Classes {
        #[command(flatten)]
        #[serde(flatten)]
        group: GroupArg,
        #[command(subcommand)]
        op: ClassesOp,
    },
    /// Dimensions of X_w(b), X_μ(b), Y_w(γ), Y_μ(γ).
    #[command(subcommand)]
    Dim(DimOp),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Emit a table of (w, C) -> (nonempty, dim, d_w(C)).
    Table(TableArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct GroupArg {
    /// Preset name (SL2, PGL2, GL2, SL3, PGL3, Sp4, SL4, A2-twisted,
    /// A3-twisted) or path to a JSON config.
    #[arg(long)]
    pub group: String,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiniteOp {
    /// Twisted cyclic-shift reduction to minimal length.
    Reduce {
        /// Word in 1-based simple indices, e.g. "1,2,1".
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Support and twisted support.
    Supp {
        #[arg(long, default_value = "")]
        word: String,
    },
    /// All elements of W_0.
    Enumerate,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassesOp {
    /// Reduce to a minimal length element of the conjugacy class.
    Min {
        #[arg(long)]
        w: String,
    },
    /// Straight classes met by elements of bounded length.
    StraightClasses {
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
    /// The u·x decomposition of the reduced element.
    Ux {
        #[arg(long)]
        w: String,
    },
    /// P_ν-alcove test (ν defaults to ν_w).
    PAlcove {
        #[arg(long)]
        w: String,
        #[arg(long)]
        nu: Option<String>,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimOp {
    /// dim X_w(b) in the affine flag variety.
    XFlag(DimArgs),
    /// dim X_μ(b) in the affine Grassmannian.
    XGr(DimArgs),
    /// dim Y_w(γ) in the affine flag variety.
    YFlag(DimArgs),
    /// dim Y_μ(γ) in the affine Grassmannian.
    YGr(DimArgs),
    /// dim Y_{x t^μ y}(γ) for superregular μ.
    YSuper(DimArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct DimArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArg,
    /// Element as {"lambda":[...],"word":[...]}.
    #[arg(long)]
    pub w: Option<String>,
    /// Straight class as {"kappa":[...],"nu":[...]}.
    #[arg(long)]
    pub class: String,
    /// Dominant coweight, e.g. "2,0".
    #[arg(long)]
    pub mu: Option<String>,
    /// Finite word for x (y-super).
    #[arg(long)]
    pub x: Option<String>,
    /// Finite word for y (y-super).
    #[arg(long)]
    pub y: Option<String>,
    /// dim Y_γ.
    #[arg(long)]
    pub springer_dim: Option<u64>,
    /// Discriminant valuation d(γ).
    #[arg(long, requires = "c")]
    pub d: Option<i64>,
    /// Rank drop c(γ).
    #[arg(long, requires = "d")]
    pub c: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Oracle,
    Classes,
    Dims,
    Finite,
    All,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArg,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Cayley ball radius for the oracle suite.
    #[arg(long, default_value_t = 6)]
    pub radius: usize,
    /// Length bound for element scans.
    #[arg(long, default_value_t = 8)]
    pub max_length: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug, Serialize)]
pub struct TableArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub group: GroupArg,
    /// Elements of length at most this.
    #[arg(long, default_value_t = 4)]
    pub max_length: usize,
    /// JSON array of {"kappa","nu"}; overrides --class-max-length.
    #[arg(long)]
    pub classes: Option<String>,
    /// Use every straight class of length at most this (default: --max-length).
    #[arg(long)]
    pub class_max_length: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    /// Output file; the table goes to stdout when absent.
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

/// The JSON document written for every query.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryReport {
    pub query: Value,
    #[serde(flatten)]
    pub result: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache: Option<CacheStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// What a run writes and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Requested table: elements of bounded length against a list of classes.
#[derive(Clone, Debug)]
pub struct TableSpec {
    pub max_length: usize,
    pub classes: Vec<StraightClass>,
}

#[derive(Clone, Debug, Serialize)]
struct Row {
    lambda: Vec<i64>,
    word: Vec<usize>,
    length: usize,
    kappa: Kappa,
    nu: QVec,
    nonempty: bool,
    dim: Option<u64>,
    virtual_dim: String,
}

#[derive(Deserialize)]
struct ClassSpec {
    kappa: Kappa,
    nu: QVec,
}

pub fn main() -> i32 {
    let inv = run(std::env::args_os());
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    inv.code
}

/// Parses and runs one command line.
pub fn run<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Invocation { stdout: text, stderr: String::new(), code }
            } else {
                Invocation { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let query = serde_json::to_value(&cli.command).unwrap_or(Value::Null);
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(Output::Report(mut report)) => {
            report.query = query;
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            Invocation { stdout: to_json_line(&report), stderr: String::new(), code: 0 }
        }
        Ok(Output::Text(text)) => Invocation { stdout: text, stderr: String::new(), code: 0 },
        Ok(Output::Failed(mut report)) => {
            report.query = query;
            Invocation { stdout: to_json_line(&report), stderr: "verification failed\n".into(), code: 4 }
        }
        Err(e) => {
            let doc = json!({
                "query": query,
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            Invocation { stdout: to_json_line(&doc), stderr: format!("weylcalc: {e}\n"), code: e.exit_code() }
        }
    }
}

/// [`run`], returning the parsed JSON document and the exit code.
pub fn run_query<I, T>(argv: I) -> (Value, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = run(argv);
    (serde_json::from_str(&inv.stdout).unwrap_or(Value::Null), inv.code)
}

fn to_json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report serializes");
    s.push('\n');
    s
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

enum Output {
    Report(QueryReport),
    Text(String),
    Failed(QueryReport),
}

fn report(result: Value) -> QueryReport {
    let result = match result {
        Value::Object(m) => m,
        other => Map::from_iter([("result".to_string(), other)]),
    };
    QueryReport { query: Value::Null, result, witnesses: None, cache: None, timing_ms: None }
}

/// Loads a preset or a JSON config file.
pub fn load_group(arg: &str, budget: usize) -> Result<AffineWeyl> {
    let path = Path::new(arg);
    let datum = if path.is_file() {
        build_root_datum(&std::fs::read_to_string(path)?)?
    } else {
        build_root_datum(arg)?
    };
    Ok(AffineWeyl::new(datum).with_budget(budget))
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir.clone().or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Describe(g) => Ok(Output::Report(report(describe(&load_group(&g.group, cli.budget)?)?))),
        Command::Finite { group, op } => {
            let g = load_group(&group.group, cli.budget)?;
            Ok(Output::Report(report(finite(g.datum(), op)?)))
        }
        Command::Classes { group, op } => {
            let g = load_group(&group.group, cli.budget)?;
            Ok(Output::Report(classes(&g, op)?))
        }
        Command::Dim(op) => {
            let args = match op {
                DimOp::XFlag(a) | DimOp::XGr(a) | DimOp::YFlag(a) | DimOp::YGr(a) | DimOp::YSuper(a) => a,
            };
            let engine = DimEngine::new(load_group(&args.group.group, cli.budget)?);
            let dir = cache_dir(cli);
            if let Some(dir) = &dir {
                engine.load_cache(dir)?;
            }
            let mut rep = dim(&engine, op, args)?;
            if let Some(dir) = &dir {
                engine.save_cache(dir)?;
            }
            rep.cache = Some(engine.stats());
            Ok(Output::Report(rep))
        }
        Command::Verify(args) => {
            let g = load_group(&args.group.group, cli.budget)?;
            let rep = verify(&g, args)?;
            let passed = rep.result.get("passed") == Some(&Value::Bool(true));
            Ok(if passed { Output::Report(rep) } else { Output::Failed(rep) })
        }
        Command::Table(args) => {
            let engine = DimEngine::new(load_group(&args.group.group, cli.budget)?);
            let dir = cache_dir(cli);
            if let Some(dir) = &dir {
                engine.load_cache(dir)?;
            }
            let classes = match &args.classes {
                Some(text) => parse_class_list(engine.group(), text)?,
                None => engine.group().enumerate_straight_classes(args.class_max_length.unwrap_or(args.max_length))?,
            };
            let spec = TableSpec { max_length: args.max_length, classes };
            let (text, rows) = emit_table(&engine, &spec, args.format)?;
            if let Some(dir) = &dir {
                engine.save_cache(dir)?;
            }
            match &args.out {
                None => Ok(Output::Text(text)),
                Some(path) => {
                    std::fs::write(path, &text)?;
                    let mut rep = report(json!({ "path": path, "rows": rows, "bytes": text.len() }));
                    rep.cache = Some(engine.stats());
                    Ok(Output::Report(rep))
                }
            }
        }
    }
}

// ---- element and argument helpers ----

fn elt_json(g: &AffineWeyl, w: &AffineWeylElt) -> Value {
    let spec = g.to_spec(w);
    json!({ "lambda": spec.lambda, "word": spec.word, "length": g.length(w) })
}

fn word_json(d: &RootDatum, w: &FiniteWeylElt) -> Vec<usize> {
    d.fw_reduced_word(w).into_iter().map(|i| i + 1).collect()
}

fn one_based(set: impl IntoIterator<Item = usize>) -> Vec<usize> {
    set.into_iter().map(|i| i + 1).collect()
}

/// Accepts "1,2,1", "1 2 1", "[1,2,1]" or "".
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::InvalidElement(format!("not an integer: {t:?}"))))
        .collect()
}

fn parse_finite_word(d: &RootDatum, s: &str) -> Result<FiniteWeylElt> {
    let word = parse_int_list(s)?
        .into_iter()
        .map(|i| usize::try_from(i - 1).map_err(|_| Error::InvalidElement("finite word indices are 1-based".into())))
        .collect::<Result<Vec<_>>>()?;
    d.fw_from_word(&word)
}

fn parse_element(g: &AffineWeyl, s: &str) -> Result<AffineWeylElt> {
    let spec: ElementSpec =
        serde_json::from_str(s).map_err(|e| Error::InvalidElement(format!("{e}: expected {{\"lambda\":[..],\"word\":[..]}}")))?;
    g.from_spec(&spec)
}

fn parse_qvec(s: &str) -> Result<QVec> {
    let text = if s.trim_start().starts_with('[') { s.to_string() } else { format!("[{s}]") };
    serde_json::from_str(&text).map_err(|e| Error::InvalidElement(format!("bad coweight {s:?}: {e}")))
}

fn parse_class(g: &AffineWeyl, s: &str) -> Result<StraightClass> {
    let spec: ClassSpec = serde_json::from_str(s)
        .map_err(|e| Error::UnknownClass(format!("{e}: expected {{\"kappa\":[..],\"nu\":[..]}}")))?;
    g.resolve_class(&spec.kappa, &spec.nu)
}

fn parse_class_list(g: &AffineWeyl, s: &str) -> Result<Vec<StraightClass>> {
    let specs: Vec<ClassSpec> =
        serde_json::from_str(s).map_err(|e| Error::UnknownClass(format!("{e}: expected a JSON array")))?;
    let mut classes = specs.iter().map(|c| g.resolve_class(&c.kappa, &c.nu)).collect::<Result<Vec<_>>>()?;
    classes.sort();
    classes.dedup();
    Ok(classes)
}

fn path_json(g: &AffineWeyl, path: &[Step<AffineWeylElt>]) -> Value {
    Value::Array(
        path.iter()
            .map(|st| {
                json!({
                    "s": g.simple_reflections()[st.generator].label,
                    "before": elt_json(g, &st.before),
                    "after": elt_json(g, &st.after),
                })
            })
            .collect(),
    )
}

fn class_json(c: &StraightClass) -> Value {
    serde_json::to_value(c).expect("class serializes")
}

fn dim_json(v: DimValue) -> Value {
    match v {
        DimValue::Empty => json!({ "nonempty": false, "dim": null }),
        DimValue::Finite(d) => json!({ "nonempty": true, "dim": d }),
    }
}

fn merge(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Object(mut x), Value::Object(y)) => {
            x.extend(y);
            Value::Object(x)
        }
        (a, _) => a,
    }
}

// ---- subcommands ----

fn describe(g: &AffineWeyl) -> Result<Value> {
    let d = g.datum();
    let omega = match g.omega_elements() {
        Ok(om) => Value::Array(om.iter().map(|t| json!({ "element": elt_json(g, t), "kappa": g.kappa_w(t) })).collect()),
        Err(Error::InfinitePi1) => Value::Null,
        Err(e) => return Err(e),
    };
    let omega_order = omega.as_array().map(Vec::len);
    let gens: Vec<Value> = g
        .simple_reflections()
        .iter()
        .map(|s| json!({ "label": s.label, "element": elt_json(g, &s.element) }))
        .collect();
    Ok(json!({
        "name": d.name(),
        "rank": d.rank(),
        "semisimple_rank": d.semisimple_rank(),
        "datum_hash": d.hash(),
        "cartan": d.cartan(),
        "positive_roots": d.positive_roots().len(),
        "w0_order": d.enumerate_w0()?.len(),
        "simple_reflections": gens,
        "affine_generators": g.simple_reflections().len(),
        "pi1": d.pi1_description(),
        "omega_order": omega_order,
        "omega": omega,
        "delta": d.delta().map(|a| one_based(a.perm.iter().copied())),
    }))
}

fn finite(d: &RootDatum, op: &FiniteOp) -> Result<Value> {
    match op {
        FiniteOp::Reduce { word } => {
            let w = parse_finite_word(d, word)?;
            let (m, path) = d.delta_reduce_to_min(&w);
            let steps: Vec<Value> = path
                .iter()
                .map(|st| json!({ "s": st.generator + 1, "before": word_json(d, &st.before), "after": word_json(d, &st.after) }))
                .collect();
            Ok(json!({
                "w": word_json(d, &w),
                "length": d.fw_length(&w),
                "w_min": word_json(d, &m),
                "min_length": d.fw_length(&m),
                "path": steps,
            }))
        }
        FiniteOp::Supp { word } => {
            let w = parse_finite_word(d, word)?;
            Ok(json!({
                "w": word_json(d, &w),
                "supp": one_based(d.supp(&w)),
                "supp_delta": one_based(d.supp_delta(&w)),
                "elliptic": d.is_elliptic_delta(&w),
            }))
        }
        FiniteOp::Enumerate => {
            let mut all: Vec<(usize, Vec<usize>)> =
                d.enumerate_w0()?.iter().map(|w| (d.fw_length(w), word_json(d, w))).collect();
            all.sort();
            Ok(json!({
                "order": all.len(),
                "longest": word_json(d, &d.fw_longest()),
                "max_length": all.last().map_or(0, |e| e.0),
                "elements": all.into_iter().map(|e| e.1).collect::<Vec<_>>(),
            }))
        }
    }
}

fn classes(g: &AffineWeyl, op: &ClassesOp) -> Result<QueryReport> {
    match op {
        ClassesOp::Min { w } => {
            let w = parse_element(g, w)?;
            let (m, path) = g.reduce_to_min(&w)?;
            let mut rep = report(json!({ "w": elt_json(g, &w), "w_min": elt_json(g, &m), "min_length": g.length(&m) }));
            rep.witnesses = Some(json!({ "path": path_json(g, &path) }));
            Ok(rep)
        }
        ClassesOp::StraightClasses { max_len } => {
            let cs = g.enumerate_straight_classes(*max_len)?;
            Ok(report(json!({ "count": cs.len(), "classes": cs.iter().map(class_json).collect::<Vec<_>>() })))
        }
        ClassesOp::Ux { w } => {
            let w = parse_element(g, w)?;
            let (m, path) = g.reduce_to_min(&w)?;
            let d = g.ux_decompose(&m)?;
            let mut rep = report(json!({
                "w_min": elt_json(g, &d.w_min),
                "u": elt_json(g, &d.u),
                "x": elt_json(g, &d.x),
                "K": d.k,
                "class": class_json(&d.class),
            }));
            rep.witnesses = Some(json!({ "path": path_json(g, &path), "witness": elt_json(g, &d.witness) }));
            Ok(rep)
        }
        ClassesOp::PAlcove { w, nu } => {
            let w = parse_element(g, w)?;
            let nu = match nu {
                Some(s) => parse_qvec(s)?,
                None => g.newton_point(&w).0,
            };
            if nu.len() != g.rank() {
                return Err(Error::InvalidElement(format!("ν has {} coordinates", nu.len())));
            }
            Ok(report(json!({ "w": elt_json(g, &w), "nu": nu, "p_alcove": g.p_alcove_test(&w, &nu) })))
        }
    }
}

fn gamma(class: StraightClass, args: &DimArgs) -> GammaDescriptor {
    GammaDescriptor { straight_class: class, springer_dim: args.springer_dim, d_gamma: args.d, c_gamma: args.c }
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::InvalidElement(format!("--{flag} is required for this query")))
}

fn flag_witnesses(engine: &DimEngine, w: &AffineWeylElt) -> Result<Value> {
    let g = engine.group();
    let d = g.datum();
    let eta = g.eta_decomposition(w)?;
    let (m, path) = g.reduce_to_min(w)?;
    let ux = g.ux_decompose(&m)?;
    Ok(json!({
        "w": elt_json(g, w),
        "eta": { "x": word_json(d, &eta.x), "mu": eta.mu, "y": word_json(d, &eta.y), "eta": word_json(d, &eta.eta) },
        "reduction": { "w_min": elt_json(g, &m), "path": path_json(g, &path) },
        "ux": {
            "witness": elt_json(g, &ux.witness),
            "u": elt_json(g, &ux.u),
            "x": elt_json(g, &ux.x),
            "K": ux.k,
            "class": class_json(&ux.class),
        },
    }))
}

fn dim(engine: &DimEngine, op: &DimOp, args: &DimArgs) -> Result<QueryReport> {
    let g = engine.group();
    let class = parse_class(g, &args.class)?;
    let mut extra = json!({ "class": class_json(&class) });
    let (value, witnesses) = match op {
        DimOp::XFlag(_) | DimOp::YFlag(_) => {
            let w = parse_element(g, required(&args.w, "w")?)?;
            let vd = engine.virtual_dimension(&w, &class)?;
            extra = merge(extra, json!({ "virtual_dim": vd }));
            let v = if matches!(op, DimOp::XFlag(_)) {
                engine.dim_x_flag(&w, &class)?
            } else {
                let gd = gamma(class.clone(), args);
                extra = merge(extra, json!({ "springer_dim": gd.resolve_springer_dim()? }));
                engine.dim_y_flag(&w, &gd)?
            };
            (v, Some(flag_witnesses(engine, &w)?))
        }
        DimOp::XGr(_) | DimOp::YGr(_) => {
            let mu = parse_int_list(required(&args.mu, "mu")?)?;
            let v = if matches!(op, DimOp::XGr(_)) {
                engine.dim_x_grass(&mu, &class)?
            } else {
                let gd = gamma(class.clone(), args);
                extra = merge(extra, json!({ "springer_dim": gd.resolve_springer_dim()? }));
                engine.dim_y_grass(&mu, &gd)?
            };
            extra = merge(extra, json!({ "mu": mu }));
            (v, None)
        }
        DimOp::YSuper(_) => {
            let d = g.datum();
            let mu = parse_int_list(required(&args.mu, "mu")?)?;
            let x = parse_finite_word(d, args.x.as_deref().unwrap_or(""))?;
            let y = parse_finite_word(d, args.y.as_deref().unwrap_or(""))?;
            let gd = gamma(class.clone(), args);
            let v = engine.dim_y_superregular(&x, &mu, &y, &gd)?;
            let w = g.mul(&g.mul(&g.from_finite(&x), &g.translation(&mu)?), &g.from_finite(&y));
            let vd = engine.virtual_dimension(&w, &class)?;
            extra = merge(extra, json!({ "virtual_dim": vd, "springer_dim": gd.resolve_springer_dim()?, "mu": mu }));
            (v, Some(flag_witnesses(engine, &w)?))
        }
    };
    let mut rep = report(merge(dim_json(value), extra));
    rep.witnesses = witnesses;
    Ok(rep)
}

// ---- verification suites ----

#[derive(Debug, Default, Serialize)]
struct SuiteReport {
    passed: bool,
    checked: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    notes: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_counterexample: Option<Value>,
}

impl SuiteReport {
    fn new() -> Self {
        SuiteReport { passed: true, ..Default::default() }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.first_counterexample = Some(counterexample());
        }
    }

    fn note(&mut self, key: &str) {
        *self.notes.entry(key.to_string()).or_default() += 1;
    }
}

fn verify(g: &AffineWeyl, args: &VerifyArgs) -> Result<QueryReport> {
    let suites: &[Suite] = match args.suite {
        Suite::All => &[Suite::Finite, Suite::Oracle, Suite::Classes, Suite::Dims],
        ref s => std::slice::from_ref(s),
    };
    let mut out = Map::new();
    let mut passed = true;
    for s in suites {
        let rep = match s {
            Suite::Oracle => verify_oracle(g, args.radius, args.max_length)?,
            Suite::Classes => verify_classes(g, args.max_length)?,
            Suite::Dims => verify_dims(g, args.max_length)?,
            Suite::Finite => verify_finite(g.datum())?,
            Suite::All => unreachable!(),
        };
        passed &= rep.passed;
        let key = serde_json::to_value(s).expect("suite name").as_str().unwrap_or_default().to_string();
        out.insert(key, serde_json::to_value(rep).expect("report serializes"));
    }
    Ok(report(json!({ "passed": passed, "suites": out })))
}

fn verify_oracle(g: &AffineWeyl, radius: usize, max_length: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new();
    let ball = oracle::cayley_ball(g, radius)?;
    for (w, &d) in &ball.distances {
        rep.check(g.length(w) == d, || json!({ "check": "length = distance", "w": elt_json(g, w), "distance": d }));
        let brute = oracle::brute_straight_check(g, w, 12);
        rep.check(g.is_straight(w) == brute, || json!({ "check": "straightness", "w": elt_json(g, w) }));
    }
    let conj_ball = oracle::cayley_ball(g, max_length.max(radius))?;
    for layer in g.elements_by_length(max_length)? {
        for w in layer {
            let (m, _) = g.reduce_to_min(&w)?;
            match oracle::brute_min_length_in(g, &w, &conj_ball) {
                Ok(l) => rep.check(l == g.length(&m), || {
                    json!({ "check": "class minimum", "w": elt_json(g, &w), "reduced": g.length(&m), "oracle": l })
                }),
                Err(Error::Inconclusive { .. }) => rep.note("inconclusive"),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rep)
}

fn verify_classes(g: &AffineWeyl, max_length: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new();
    let mut straight: BTreeMap<StraightClass, Vec<AffineWeylElt>> = BTreeMap::new();
    for layer in g.elements_by_length(max_length)? {
        for w in layer {
            let (m, _) = g.reduce_to_min(&w)?;
            let (nu, _) = g.newton_point(&m);
            rep.check(g.p_alcove_test(&m, &nu), || json!({ "check": "P-alcove", "w_min": elt_json(g, &m) }));
            let d = g.ux_decompose(&m)?;
            rep.check(g.length(&d.u) + g.length(&d.x) == g.length(&m), || {
                json!({ "check": "ℓ(u) + ℓ(x) = ℓ(w_min)", "w_min": elt_json(g, &m) })
            });
            if g.is_straight(&w) && g.length(&w) <= 6 {
                straight.entry(g.class_of_straight(&w)).or_default().push(w);
            }
        }
    }
    for (c, members) in &straight {
        let closure = g.approx_closure(&members[0])?;
        for w in members {
            rep.check(closure.contains(w), || json!({ "check": "straight elements ≈", "class": class_json(c), "w": elt_json(g, w) }));
        }
    }
    Ok(rep)
}

fn verify_dims(g: &AffineWeyl, max_length: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new();
    let engine = DimEngine::new(AffineWeyl::from_arc(g.datum_arc()).with_budget(g.budget()));
    let classes = g.enumerate_straight_classes(max_length.min(6))?;
    for layer in g.elements_by_length(max_length)? {
        for w in layer {
            for c in &classes {
                if let DimValue::Finite(d) = engine.dim_x_flag(&w, c)? {
                    let vd = engine.virtual_dimension(&w, c)?;
                    rep.check(2 * d as i64 <= vd.twice, || {
                        json!({ "check": "dim ≤ d_w(C)", "w": elt_json(g, &w), "class": class_json(c), "dim": d, "virtual_dim": vd })
                    });
                }
            }
            if let Some(alts) = engine.alternative_profiles(&w)? {
                let base = engine.profile(&w)?;
                rep.check(alts.iter().all(|p| *p == *base), || json!({ "check": "choice independence", "w": elt_json(g, &w) }));
            }
        }
    }
    Ok(rep)
}

fn verify_finite(d: &RootDatum) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new();
    for w in d.enumerate_w0()? {
        let (m, path) = d.delta_reduce_to_min(&w);
        let class = oracle::twisted_class(d, &w)?;
        let min = class.iter().map(|c| d.fw_length(c)).min().unwrap_or(0);
        rep.check(class.contains(&m) && d.fw_length(&m) == min, || {
            json!({ "check": "twisted reduction reaches O_min", "w": word_json(d, &w), "w_min": word_json(d, &m) })
        });
        rep.check(path.iter().all(|st| d.fw_length(&st.after) <= d.fw_length(&st.before)), || {
            json!({ "check": "path is non-increasing", "w": word_json(d, &w) })
        });
        for i in 0..d.semisimple_rank() {
            let diff = d.fw_length(&d.delta_conjugate(&w, i)) as i64 - d.fw_length(&w) as i64;
            rep.check([-2, 0, 2].contains(&diff), || json!({ "check": "length change", "w": word_json(d, &w), "s": i + 1 }));
        }
    }
    Ok(rep)
}

// ---- tables ----

/// Renders the table; returns the text and the number of rows. Row order
/// is by element (length, then key) and then by class.
pub fn emit_table(engine: &DimEngine, spec: &TableSpec, format: TableFormat) -> Result<(String, usize)> {
    let g = engine.group();
    let elements: Vec<AffineWeylElt> = g.elements_by_length(spec.max_length)?.into_iter().flatten().collect();
    let rows: Vec<Vec<Row>> = elements
        .par_iter()
        .map(|w| {
            let ws = g.to_spec(w);
            spec.classes
                .iter()
                .map(|c| {
                    let v = engine.dim_x_flag(w, c)?;
                    Ok(Row {
                        lambda: ws.lambda.clone(),
                        word: ws.word.clone(),
                        length: g.length(w),
                        kappa: c.kappa.clone(),
                        nu: c.nu_bar.clone(),
                        nonempty: !v.is_empty(),
                        dim: v.finite(),
                        virtual_dim: engine.virtual_dimension(w, c)?.to_string(),
                    })
                })
                .collect::<Result<Vec<Row>>>()
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Row> = rows.into_iter().flatten().collect();
    let n = rows.len();
    let text = match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&json!({
                "group": g.datum().name(),
                "datum_hash": g.datum().hash(),
                "max_length": spec.max_length,
                "rows": rows,
            }))
            .expect("table serializes");
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["lambda", "word", "length", "kappa", "nu", "nonempty", "dim", "virtual_dim"])
                .map_err(|e| Error::Io(e.to_string()))?;
            let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
            for r in &rows {
                let word: Vec<i64> = r.word.iter().map(|&i| i as i64).collect();
                let nu = serde_json::to_value(&r.nu).expect("qvec serializes");
                let nu = nu.as_array().map(|a| a.iter().map(|x| x.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(" "));
                wtr.write_record([
                    join(&r.lambda),
                    join(&word),
                    r.length.to_string(),
                    join(&r.kappa.0),
                    nu.unwrap_or_default(),
                    r.nonempty.to_string(),
                    r.dim.map_or(String::new(), |d| d.to_string()),
                    r.virtual_dim.clone(),
                ])
                .map_err(|e| Error::Io(e.to_string()))?;
            }
            String::from_utf8(wtr.into_inner().map_err(|e| Error::Io(e.to_string()))?).expect("utf-8 csv")
        }
    };
    Ok((text, n))
}
