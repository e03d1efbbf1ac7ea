use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lpdm_core::matroid::{
    classify_elements, contract, delete, direct_sum, dual, envelope_bases, envelope_matroid, gale_interval_of,
    homogeneous_component, project_element, verify_exchange, Label,
};
use lpdm_core::oracle;
use lpdm_core::order::{count_maximal_chains, cover_successors, gale_leq, gale_rank, interval, maximal_chains};
use lpdm_core::paths::{catalan_spec, path_from_subset, path_leq, render_svg, subset_from_path};
use lpdm_core::polytope::{contains, dimension, face, hrep, intersect, is_linked, vertex_set};
use lpdm_core::rational::format_rational;
use lpdm_core::selftest::{run_all, SelftestConfig};
use lpdm_core::triangulation::{cell_label, subdivide, triangulate_toric, volume};
use lpdm_core::{Error, Facet, PathWord, SymmetricPathWord};
use serde_json::{json, Value};

mod input;

#[derive(Parser)]
#[command(name = "lpdm", version, about = "Lattice path delta matroids and their polytopes")]
struct Cli {
    /// Wrap the payload as {"status", "payload", "timing_ms"}.
    #[arg(long, global = true)]
    envelope: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Specs are JSON like '{"n":3,"S":[1],"T":[1,3]}'; `-` reads stdin, `@file` a file.
#[derive(Subcommand)]
enum Cmd {
    /// Gale order queries on subsets of [n].
    #[command(subcommand)]
    Order(OrderCmd),
    /// Symmetric lattice paths.
    #[command(subcommand)]
    Path(PathCmd),
    /// Feasible sets and matroid operations.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// The feasible polytope.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Triangulations, subdivisions and volumes.
    #[command(subcommand)]
    Tri(TriCmd),
    /// Independent brute-force checks.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// The Catalan delta matroid on [2n].
    Catalan { n: usize },
    /// Draw the skew diagram of a spec as SVG.
    Render {
        spec: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the acceptance criteria and print a pass/fail table.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        /// Print the reports as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Is S below T?
    Leq { pair: String },
    Rank { subset: String },
    /// All sets between S and T.
    Interval { pair: String },
    /// Maximal chains from S to T.
    Chains {
        pair: String,
        /// List the chains instead of counting them.
        #[arg(long)]
        list: bool,
    },
    Covers { subset: String },
}

#[derive(Subcommand)]
enum PathCmd {
    /// Subset to path word.
    Encode { subset: String },
    /// Path word to subset.
    Decode { word: String },
    Leq { p: String, q: String },
}

#[derive(Subcommand)]
enum MatroidCmd {
    Feasible { spec: String },
    /// Check the symmetric exchange axiom.
    Axiom { spec: String },
    Loops { spec: String },
    Dual { spec: String },
    Delete {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        label: Label,
    },
    Contract {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        label: Label,
    },
    Sum { first: String, second: String },
    /// The size-k feasible sets as a type A interval.
    Component { spec: String, k: usize },
    Envelope { spec: String },
    /// Project out one element and test whether the result is an interval.
    Project {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        label: Label,
    },
}

#[derive(Subcommand)]
enum PolytopeCmd {
    Hrep { spec: String },
    Dim { spec: String },
    Contains { spec: String, point: String },
    Intersect { first: String, second: String },
    /// Facet as x3=0, x3=1, suffix3=a or suffix3=b.
    Face { spec: String, facet: String },
    Vertices { spec: String },
}

#[derive(Subcommand)]
enum TriCmd {
    Simplices { spec: String },
    /// The cell containing the simplex of a permutation.
    Label { perm: String },
    Subdivide { spec: String },
    Volume { spec: String },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Volume from the Ehrhart polynomial.
    Volume { spec: String },
    /// Lattice points in the t-th dilate.
    Count {
        spec: String,
        #[arg(long)]
        t: u64,
    },
    /// Exact convex hull membership over the vertices.
    Member { spec: String, point: String },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Core(Error),
    /// Selftest rows failed; the table is already printed.
    Failed(usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn reason(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Core(e) => e.reason_code(),
            CliError::Failed(_) => "selftest",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Core(Error::Argument(_)) => 2,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Parse(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
            CliError::Failed(k) => format!("{k} selftest rows failed"),
        }
    }
}

enum Output {
    Json(Value),
    /// Already printed or written.
    Raw(String),
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn count(c: &num_bigint::BigUint) -> Value {
    match u64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn order(cmd: OrderCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        OrderCmd::Leq { pair } => {
            let (s, t) = input::pair(&pair)?;
            json!(gale_leq(&s, &t)?)
        }
        OrderCmd::Rank { subset } => json!(gale_rank(&input::subset(&subset)?)),
        OrderCmd::Interval { pair } => {
            let (s, t) = input::pair(&pair)?;
            to_json(&interval(&s, &t)?)
        }
        OrderCmd::Chains { pair, list } => {
            let (s, t) = input::pair(&pair)?;
            if list {
                to_json(&maximal_chains(&s, &t)?)
            } else {
                count(&count_maximal_chains(&s, &t)?)
            }
        }
        OrderCmd::Covers { subset } => to_json(&cover_successors(&input::subset(&subset)?)),
    })
}

fn path(cmd: PathCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        PathCmd::Encode { subset } => to_json(&path_from_subset(&input::subset(&subset)?)),
        PathCmd::Decode { word } => {
            let p: SymmetricPathWord = word.parse()?;
            let s = subset_from_path(&p);
            json!({ "n": s.n(), "S": s })
        }
        PathCmd::Leq { p, q } => {
            let (p, q): (PathWord, PathWord) = (p.parse()?, q.parse()?);
            json!(path_leq(&p, &q)?)
        }
    })
}

fn matroid(cmd: MatroidCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        MatroidCmd::Feasible { spec } => to_json(&input::spec(&spec)?.feasible_sets()),
        MatroidCmd::Axiom { spec } => to_json(&verify_exchange(&input::spec(&spec)?.feasible_sets())?),
        MatroidCmd::Loops { spec } => {
            let m = input::spec(&spec)?;
            let (loops, coloops) = classify_elements(&m);
            json!({ "loops": m.labels_of(&loops), "coloops": m.labels_of(&coloops) })
        }
        MatroidCmd::Dual { spec } => to_json(&dual(&input::spec(&spec)?)),
        MatroidCmd::Delete { spec, label } => to_json(&delete(&input::spec(&spec)?, label)?),
        MatroidCmd::Contract { spec, label } => to_json(&contract(&input::spec(&spec)?, label)?),
        MatroidCmd::Sum { first, second } => to_json(&direct_sum(&input::spec(&first)?, &input::spec(&second)?)?),
        MatroidCmd::Component { spec, k } => to_json(&homogeneous_component(&input::spec(&spec)?, k)),
        MatroidCmd::Envelope { spec } => {
            let m = input::spec(&spec)?;
            json!({ "matroid": to_json(&envelope_matroid(&m)?), "bases": to_json(&envelope_bases(&m)?) })
        }
        MatroidCmd::Project { spec, label } => {
            let family = project_element(&input::spec(&spec)?.feasible_sets(), label)?;
            json!({ "family": to_json(&family), "interval": to_json(&gale_interval_of(&family)?) })
        }
    })
}

fn polytope(cmd: PolytopeCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        PolytopeCmd::Hrep { spec } => to_json(&hrep(&input::spec(&spec)?)),
        PolytopeCmd::Dim { spec } => {
            let m = input::spec(&spec)?;
            json!({ "dimension": dimension(&m), "linked": is_linked(&m) })
        }
        PolytopeCmd::Contains { spec, point } => json!(contains(&hrep(&input::spec(&spec)?), &input::point(&point)?)?),
        PolytopeCmd::Intersect { first, second } => to_json(&intersect(&input::spec(&first)?, &input::spec(&second)?)?),
        PolytopeCmd::Face { spec, facet } => {
            let facet: Facet = facet.parse()?;
            to_json(&face(&input::spec(&spec)?, facet)?)
        }
        PolytopeCmd::Vertices { spec } => to_json(&vertex_set(&input::spec(&spec)?)),
    })
}

fn tri(cmd: TriCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        TriCmd::Simplices { spec } => to_json(&triangulate_toric(&input::spec(&spec)?)?),
        TriCmd::Label { perm } => to_json(&cell_label(&input::permutation(&perm)?)),
        TriCmd::Subdivide { spec } => to_json(&subdivide(&input::spec(&spec)?)?),
        TriCmd::Volume { spec } => json!(format_rational(&volume(&input::spec(&spec)?)?)),
    })
}

fn oracle_cmd(cmd: OracleCmd) -> Result<Value, CliError> {
    Ok(match cmd {
        OracleCmd::Volume { spec } => json!(format_rational(&oracle::ehrhart_volume(&hrep(&input::spec(&spec)?)))),
        OracleCmd::Count { spec, t } => count(&oracle::count_lattice_points(&hrep(&input::spec(&spec)?), t)),
        OracleCmd::Member { spec, point } => {
            json!(oracle::hull_membership(&vertex_set(&input::spec(&spec)?), &input::point(&point)?)?)
        }
    })
}

fn selftest(max_n: usize, seed: u64, as_json: bool) -> Result<Output, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let reports = run_all(&SelftestConfig { max_n, seed });
    let failed = reports.iter().filter(|r| !r.passed).count();
    if as_json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        for r in &reports {
            println!("{}", r.line());
        }
        println!("{} of {} rows passed", reports.len() - failed, reports.len());
    }
    if failed > 0 {
        return Err(CliError::Failed(failed));
    }
    Ok(Output::Raw(String::new()))
}

fn dispatch(cmd: Cmd) -> Result<Output, CliError> {
    Ok(Output::Json(match cmd {
        Cmd::Order(c) => order(c)?,
        Cmd::Path(c) => path(c)?,
        Cmd::Matroid(c) => matroid(c)?,
        Cmd::Polytope(c) => polytope(c)?,
        Cmd::Tri(c) => tri(c)?,
        Cmd::Oracle(c) => oracle_cmd(c)?,
        Cmd::Catalan { n } => {
            let m = catalan_spec(n)?;
            json!({ "spec": to_json(&m), "feasible_count": m.feasible_masks().len() })
        }
        Cmd::Render { spec, svg } => {
            let m = input::spec(&spec)?;
            let text = render_svg(&m.lower(), &m.upper())?;
            match svg {
                None => return Ok(Output::Raw(text)),
                Some(file) => {
                    std::fs::write(&file, &text).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
                    json!({ "svg": file.display().to_string(), "bytes": text.len() })
                }
            }
        }
        Cmd::Selftest { max_n, seed, json } => return selftest(max_n, seed, json),
    }))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("LPDM_THREADS") else { return Ok(()) };
    let k: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| CliError::Usage(format!("LPDM_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = configure_threads().and_then(|_| dispatch(cli.cmd));
    let millis = start.elapsed().as_millis() as u64;
    match result {
        Ok(Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(payload)) => {
            let doc = if cli.envelope {
                json!({ "status": "ok", "payload": payload, "timing_ms": millis })
            } else {
                payload
            };
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let mut doc = json!({ "status": "error", "reason": e.reason(), "message": e.message() });
            if cli.envelope {
                doc["timing_ms"] = json!(millis);
            }
            if !matches!(e, CliError::Failed(_)) {
                println!("{doc}");
            }
            eprintln!("lpdm: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
