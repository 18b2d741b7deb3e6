//! Command-line front end. Exit codes: 0 pass, 1 failed check, 2 input error.
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hadamard_simplex::absorption::check_xi_inequalities;
use hadamard_simplex::ball_norm::ball_projector_norm;
use hadamard_simplex::bounds::{certify_h, maxdet01_bruteforce, BoundsRow, DEFAULT_BRUTE_FORCE_LIMIT};
use hadamard_simplex::absorption::xi_from_report;
use hadamard_simplex::cube_norm::ScanOptions;
use hadamard_simplex::hadamard::{paley, sylvester};
use hadamard_simplex::report::{
    ball_sweep, hadamard_norm, ingest, reproduce, write_json, AbsorbJson, CubeKind, NormJson,
    ReproduceOptions, RunManifest, Target,
};
use hadamard_simplex::{Error, HadamardMatrix, Result, SignMatrix};

#[derive(Parser)]
#[command(name = "hsimplex", version, about = "Regular simplices in the cube from Hadamard matrices")]
struct Cli {
    /// Write a run manifest (inputs, digests, timings) to this path
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate, verify or normalize Hadamard matrices
    Hadamard {
        #[command(subcommand)]
        action: HadamardAction,
    },
    /// Exact projector norm over the cube vertices
    Norm {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = CubeArg::Sym)]
        cube: CubeArg,
        /// Print the μ-census
        #[arg(long)]
        census: bool,
        /// Include maximizing vertices in the JSON report
        #[arg(long)]
        maximizers: bool,
        /// Include elapsed_ms in the JSON report
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Absorption index and its estimates through the norm
    Absorb {
        #[arg(long)]
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Projector norm for the regular simplex in the ball
    BallNorm {
        #[arg(long)]
        n: u64,
        /// Also sweep 1..=MAX
        #[arg(long)]
        sweep: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Maximal determinant of an n×n 0/1 matrix
    Maxdet {
        #[arg(long)]
        n: usize,
        /// Force exhaustive search
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Determinant and norm bounds for dimension n
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_LIMIT)]
        brute_force_limit: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Norm and absorption for every matrix file in a directory
    Ingest {
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a fixed reproduction target with embedded checks
    Reproduce {
        /// n3, n15-sylvester, n23-paley, ball-sweep, bounds-table or all
        target: String,
        /// Directory for per-target reports and manifest.json
        #[arg(long, default_value = "reports")]
        out: PathBuf,
        /// Extra Hadamard matrices of order 16 or 24
        #[arg(long)]
        matrices: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        sweep_max: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum HadamardAction {
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    Normalize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sylvester,
    Paley,
}

#[derive(Clone, Copy, ValueEnum)]
enum CubeArg {
    Sym,
    Unit,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    match run(cli, argv) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(Error::InvariantViolation(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn emit<T: serde::Serialize>(json: Option<&Path>, value: &T, manifest: &mut RunManifest) -> Result<()> {
    if let Some(path) = json {
        write_json(path, value)?;
        manifest.add_output(path);
    }
    Ok(())
}

fn load_matrix(path: &Path, manifest: &mut RunManifest) -> Result<HadamardMatrix> {
    let bytes = manifest.add_input(path)?;
    let text = String::from_utf8(bytes).map_err(|_| Error::Parse {
        line: 0,
        message: "file is not UTF-8".into(),
    })?;
    HadamardMatrix::parse(&text)
}

fn run(cli: Cli, argv: Vec<String>) -> Result<Outcome> {
    let workers = match &cli.command {
        Command::Norm { common, .. }
        | Command::Absorb { common, .. }
        | Command::Ingest { common, .. }
        | Command::Reproduce { common, .. } => common.workers,
        _ => 1,
    };
    if workers == 0 {
        return Err(Error::InvalidParameter("--workers must be at least 1".into()));
    }
    let mut manifest = RunManifest::new(argv, workers);
    let start = Instant::now();
    let outcome = dispatch(cli.command, &mut manifest)?;
    manifest.record_time("total", start);
    if let Some(path) = &cli.manifest {
        write_json(path, &manifest)?;
    }
    Ok(outcome)
}

fn dispatch(command: Command, manifest: &mut RunManifest) -> Result<Outcome> {
    match command {
        Command::Hadamard { action } => hadamard(action, manifest),
        Command::Norm {
            matrix,
            cube,
            census,
            maximizers,
            timing,
            common,
        } => {
            let h = load_matrix(&matrix, manifest)?;
            let kind = match cube {
                CubeArg::Sym => CubeKind::Symmetric,
                CubeArg::Unit => CubeKind::Unit,
            };
            let start = Instant::now();
            let report = hadamard_norm(&h, kind, &ScanOptions::with_workers(common.workers))?;
            manifest.record_time("norm", start);
            println!("n = {}  norm = {}", report.n, NormJson::new(&report, false, false).norm);
            if census {
                for (mu, count) in &report.census {
                    println!("  μ = {mu}: {count}");
                }
            }
            emit(common.json.as_deref(), &NormJson::new(&report, maximizers, timing), manifest)?;
            Ok(Outcome::Pass)
        }
        Command::Absorb { matrix, common } => {
            let h = load_matrix(&matrix, manifest)?;
            let report = hadamard_norm(&h, CubeKind::Symmetric, &ScanOptions::with_workers(common.workers))?;
            let xi = xi_from_report(&report);
            let absorption = check_xi_inequalities(&report, &xi)?;
            let out = AbsorbJson::from(&absorption);
            println!(
                "ξ = {}  in [{}, {}]  tight_right = {}",
                out.xi, out.lower, out.upper, out.tight_right
            );
            emit(common.json.as_deref(), &out, manifest)?;
            Ok(Outcome::Pass)
        }
        Command::BallNorm { n, sweep, json } => {
            let r = ball_projector_norm(n)?;
            println!("n = {n}  a = {}  norm = {:.12}", r.a, r.norm);
            match sweep {
                None => emit(json.as_deref(), &r, manifest)?,
                Some(max) => {
                    let s = ball_sweep(max)?;
                    println!(
                        "sweep 1..={max}: {} out of range, {} non-square n within tolerance of √(n+1)",
                        s.out_of_range.len(),
                        s.non_squares_within_tolerance.len()
                    );
                    emit(json.as_deref(), &json!({ "value": r, "sweep": s }), manifest)?;
                }
            }
            Ok(Outcome::Pass)
        }
        Command::Maxdet { n, brute_force, json } => {
            let (value, provenance) = if brute_force {
                (maxdet01_bruteforce(n)?.to_string(), "bruteforce".to_string())
            } else {
                match certify_h(n, DEFAULT_BRUTE_FORCE_LIMIT)? {
                    Some(c) => (c.value.to_string(), c.provenance.to_string()),
                    None => {
                        return Err(Error::Capacity(format!(
                            "no certified h_{n}; pass --brute-force for n ≤ 6"
                        )))
                    }
                }
            };
            println!("h_{n} = {value} ({provenance})");
            emit(json.as_deref(), &json!({ "n": n, "h_n": value, "provenance": provenance }), manifest)?;
            Ok(Outcome::Pass)
        }
        Command::Bounds { n, brute_force_limit, json } => {
            let row = BoundsRow::compute(n, brute_force_limit)?.to_json();
            println!("{}", serde_json::to_string_pretty(&row)?);
            emit(json.as_deref(), &row, manifest)?;
            Ok(Outcome::Pass)
        }
        Command::Ingest { dir, common } => {
            let start = Instant::now();
            let batch = ingest(&dir, &ScanOptions::with_workers(common.workers), Some(manifest))?;
            manifest.record_time("ingest", start);
            for row in &batch.rows {
                println!(
                    "{:<32} order {:>3}  norm {:>8}  census {:?}",
                    row.file, row.order, row.norm.norm, row.norm.mu_census
                );
            }
            for e in &batch.errors {
                eprintln!("{}: {}", e.file, e.error);
            }
            emit(common.json.as_deref(), &batch, manifest)?;
            Ok(if batch.errors.is_empty() { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Reproduce {
            target,
            out,
            matrices,
            sweep_max,
            common,
        } => {
            let targets = if target == "all" {
                Target::ALL.to_vec()
            } else {
                vec![Target::parse(&target)?]
            };
            let opts = ReproduceOptions {
                scan: ScanOptions::with_workers(common.workers),
                sweep_max,
                matrices,
            };
            let mut all_passed = true;
            let mut results = Vec::new();
            for t in targets {
                let start = Instant::now();
                let r = reproduce(t, &opts)?;
                manifest.record_time(t.name(), start);
                let path = out.join(format!("{}.json", t.name()));
                write_json(&path, &r)?;
                manifest.add_output(&path);
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    println!("{mark} {}::{}  {}", t.name(), c.name, c.detail);
                }
                all_passed &= r.passed;
                results.push(r);
            }
            emit(common.json.as_deref(), &results, manifest)?;
            let manifest_path = out.join("manifest.json");
            manifest.add_output(&manifest_path);
            write_json(&manifest_path, manifest)?;
            Ok(if all_passed { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn hadamard(action: HadamardAction, manifest: &mut RunManifest) -> Result<Outcome> {
    match action {
        HadamardAction::Gen {
            order,
            method,
            output,
            json,
        } => {
            let h = match method {
                Method::Sylvester => {
                    if !order.is_power_of_two() {
                        return Err(Error::InvalidParameter(format!(
                            "Sylvester order must be a power of two, got {order}"
                        )));
                    }
                    sylvester(order.trailing_zeros())?
                }
                Method::Paley => {
                    if order < 4 {
                        return Err(Error::InvalidParameter(format!("Paley order {order} too small")));
                    }
                    paley(order as u64 - 1)?
                }
            };
            match &output {
                Some(path) => {
                    write_text(path, &h.serialize())?;
                    manifest.add_output(path);
                }
                None => print!("{}", h.serialize()),
            }
            emit(json.as_deref(), &json!({ "order": h.order(), "is_hadamard": true }), manifest)?;
            Ok(Outcome::Pass)
        }
        HadamardAction::Verify { file, json } => {
            let bytes = manifest.add_input(&file)?;
            let text = String::from_utf8_lossy(&bytes);
            let m = SignMatrix::parse(&text)?;
            let ok = m.is_hadamard();
            println!(
                "{}: order {} {}",
                file.display(),
                m.order(),
                if ok { "is Hadamard" } else { "is not Hadamard" }
            );
            emit(json.as_deref(), &json!({ "order": m.order(), "is_hadamard": ok }), manifest)?;
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        HadamardAction::Normalize { file, output, json } => {
            let h = load_matrix(&file, manifest)?.normalize_last_column();
            match &output {
                Some(path) => {
                    write_text(path, &h.serialize())?;
                    manifest.add_output(path);
                }
                None => print!("{}", h.serialize()),
            }
            emit(json.as_deref(), &json!({ "order": h.order(), "is_hadamard": true }), manifest)?;
            Ok(Outcome::Pass)
        }
    }
}
