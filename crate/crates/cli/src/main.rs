//! `peritwist` — build chains of twists from JSON parameter files, run the
//! verification suites and the three worked examples, write JSON reports.
//!
//! Exit codes: 0 every selected check passed, 1 some check failed,
//! 2 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use peritwist::exactring::{fmt_rational, int};
use peritwist::hopfverify::r_matrix;
use peritwist::liealg::build_sl;
use peritwist::report::{VerificationReport, REPRESENTATION_CAVEAT};
use peritwist::suites::{self, RepKind, Suite};
use peritwist::tensorexpr::TensorOp;
use peritwist::twistlib::{spec::SCHEMA, ChainSpec};

const DEFAULT_MAX_N: usize = 8;

#[derive(Parser)]
#[command(name = "peritwist", version, about = "Exact verification of peripheric chains of twists for U(sl(N))")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump the basis and structure constants of sl(N).
    Algebra {
        #[arg(long = "n")]
        n: usize,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a check suite against a chain parameter file.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        /// all | drinfeld | counit | qybe | coproducts | matreshka | carrier |
        /// cybe | semiclassical | omega | cohomology | examples
        #[arg(long, default_value = "all")]
        suite: String,
        /// defining | adjoint
        #[arg(long, default_value = "defining")]
        rep: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        /// Also write F and R as sparse triplets to this file.
        #[arg(long)]
        dump_ops: Option<PathBuf>,
    },
    /// Reproduce one of the worked examples (sl3, sl4, sl7).
    Example {
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A usage or input problem: exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<bool, InputError>;

fn max_n() -> Result<usize, InputError> {
    match std::env::var("TWIST_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| InputError(format!("TWIST_MAX_N must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_n(n: usize) -> Result<(), InputError> {
    if n < 2 {
        return Err(InputError(format!("N must be at least 2, got {n}")));
    }
    let cap = max_n()?;
    if n > cap {
        return Err(InputError(format!("N = {n} exceeds TWIST_MAX_N = {cap}")));
    }
    Ok(())
}

fn write_json(path: &Path, v: &Value) -> Result<(), InputError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
    }
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    fs::write(path, s).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn document(command: Value, reports: &[VerificationReport]) -> Value {
    let failed = reports.iter().filter(|r| !r.pass).count();
    json!({
        "schema": SCHEMA,
        "caveat": REPRESENTATION_CAVEAT,
        "command": command,
        "pass": failed == 0,
        "summary": {"total": reports.len(), "passed": reports.len() - failed, "failed": failed},
        "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
    })
}

fn error_document(command: Value, msg: &str) -> Value {
    json!({
        "schema": SCHEMA,
        "caveat": REPRESENTATION_CAVEAT,
        "command": command,
        "pass": false,
        "error": msg,
    })
}

fn summarize(reports: &[VerificationReport]) {
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!("FAIL {} (residual_support = {})", r.check, r.residual_support);
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
}

fn cmd_algebra(n: usize, out: Option<&Path>) -> Run {
    check_n(n)?;
    let g = build_sl(n)?;
    let mut v = g.to_json();
    v["schema"] = json!(SCHEMA);
    match out {
        Some(p) => {
            write_json(p, &v)?;
            println!("sl({n}): {} basis elements -> {}", g.dim(), p.display());
        }
        None => println!("{}", serde_json::to_string_pretty(&v)?),
    }
    Ok(true)
}

fn op_json(op: &TensorOp<peritwist::exactring::Rational>) -> Value {
    let triplets: Vec<Value> =
        op.matrix.triplets().map(|(r, c, v)| json!([r, c, fmt_rational(v)])).collect();
    json!({"legs": op.legs, "leg_dim": op.leg_dim, "rep": op.rep, "triplets": triplets})
}

fn dump_ops(spec: &ChainSpec, kind: RepKind, path: &Path) -> Result<(), InputError> {
    let g = Arc::new(build_sl(spec.n)?);
    let rep = kind.build(&g)?;
    let f = spec.build(&g, &int(1))?;
    let v = json!({
        "schema": SCHEMA,
        "caveat": REPRESENTATION_CAVEAT,
        "F": op_json(&f.eval(&rep)?),
        "R": op_json(&r_matrix(&f, &rep)?),
    });
    write_json(path, &v)
}

fn cmd_verify(spec_path: &Path, suite: &str, rep: &str, seed: Option<u64>, out: &Path, dump: Option<&Path>) -> Run {
    let command = json!({
        "name": "verify",
        "spec": spec_path.display().to_string(),
        "suite": suite,
        "rep": rep,
        "seed": seed,
    });
    let prepared = (|| -> Result<(ChainSpec, Suite, RepKind), InputError> {
        let suite: Suite = suite.parse()?;
        let kind: RepKind = rep.parse()?;
        let text = fs::read_to_string(spec_path).map_err(|e| InputError(format!("{}: {e}", spec_path.display())))?;
        let spec = ChainSpec::from_json_str(&text)?;
        check_n(spec.n)?;
        Ok((spec, suite, kind))
    })();
    let (spec, suite, kind) = match prepared {
        Ok(x) => x,
        Err(e) => {
            // the report is written even for unusable input
            write_json(out, &error_document(command, &e.0))?;
            return Err(e);
        }
    };
    let reports = match suites::verify(&spec, suite, kind, seed) {
        Ok(r) => r,
        Err(e) => {
            let msg = e.to_string();
            write_json(out, &error_document(command, &msg))?;
            return Err(InputError(msg));
        }
    };
    let mut doc = document(command, &reports);
    doc["input"] = spec.to_json();
    write_json(out, &doc)?;
    if let Some(p) = dump {
        dump_ops(&spec, kind, p)?;
    }
    summarize(&reports);
    Ok(reports.iter().all(|r| r.pass))
}

fn cmd_example(name: &str, dir: &Path) -> Run {
    let reports = suites::example(name)?;
    let doc = document(json!({"name": "example", "example": name}), &reports);
    let path = dir.join(format!("{name}.json"));
    write_json(&path, &doc)?;
    summarize(&reports);
    println!("report -> {}", path.display());
    Ok(reports.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let run = match &cli.cmd {
        Cmd::Algebra { n, json } => cmd_algebra(*n, json.as_deref()),
        Cmd::Verify { spec, suite, rep, seed, out, dump_ops } => {
            cmd_verify(spec, suite, rep, *seed, out, dump_ops.as_deref())
        }
        Cmd::Example { name, out } => cmd_example(name, out),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
