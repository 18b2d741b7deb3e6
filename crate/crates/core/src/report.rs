//! JSON reports, run manifests, batch ingestion of matrix files and the
//! fixed reproduction targets.
//!
//! Exact rationals are always written as canonical `"p/q"` strings; the
//! `*_decimal` fields are for display. Reports carry no wall-clock data
//! unless timing is requested, so that repeated runs (and runs with different
//! worker counts) produce identical bytes. Timings and timestamps live in the
//! [`RunManifest`].

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::absorption::{check_xi_inequalities, xi_from_report, AbsorptionReport};
use crate::ball_norm::{ball_projector_norm, cube_ball_consistency, BallNormResult, TOLERANCE};
use crate::bounds::{
    corollary2_ratios, corollary3_bound, maxdet01_bruteforce, meets_barba_bound,
    meets_hadamard_bound, theorem1_bound, theta_lower, BoundsRow, DEFAULT_BRUTE_FORCE_LIMIT,
};
use crate::cube_norm::{
    hadamard_fast_path, mask_to_bits, projector_norm, verify_sqrt_bound, NormReport, ScanOptions,
};
use crate::error::{Error, Result};
use crate::hadamard::{paley, sylvester, HadamardMatrix};
use crate::rational::{int, ratio, to_f64, to_pq, Rational};
use crate::simplex::{Cube, LagrangeEvaluator, Simplex};

/// Which parameterisation of the cube a norm is computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubeKind {
    /// `[-1, 1]^n`
    Symmetric,
    /// `[0, 1]^n`
    Unit,
}

/// Normalizes `h` and computes the projector norm of its simplex. On the
/// symmetric cube the Gray-code route is used; on the unit cube the simplex
/// is mapped by `x ↦ (x + 1)/2` and the generic route is used.
pub fn hadamard_norm(h: &HadamardMatrix, cube: CubeKind, opts: &ScanOptions) -> Result<NormReport> {
    let h = h.normalize_last_column();
    match cube {
        CubeKind::Symmetric => hadamard_fast_path(&h, opts),
        CubeKind::Unit => {
            let simplex = Simplex::from_hadamard(&h)?.symmetric_to_unit()?;
            let ev = LagrangeEvaluator::build(&simplex)?;
            projector_norm(&ev, &Cube::unit(simplex.dimension()), opts)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormJson {
    pub n: usize,
    pub norm: String,
    pub norm_decimal: f64,
    pub mu_census: BTreeMap<usize, u64>,
    pub maximizer_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizers: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizer_sample: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl NormJson {
    pub fn new(report: &NormReport, list_maximizers: bool, timing: bool) -> Self {
        let bits: Vec<String> = report
            .maximizers
            .iter()
            .map(|&m| mask_to_bits(m, report.n))
            .collect();
        let (maximizers, maximizer_sample) = match (list_maximizers, report.maximizers_complete) {
            (false, _) => (None, None),
            (true, true) => (Some(bits), None),
            (true, false) => (None, Some(bits)),
        };
        NormJson {
            n: report.n,
            norm: to_pq(&report.norm),
            norm_decimal: to_f64(&report.norm),
            mu_census: report.census.clone(),
            maximizer_count: report.maximizer_count,
            maximizers,
            maximizer_sample,
            elapsed_ms: timing.then_some(report.elapsed.as_millis()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbsorbJson {
    pub n: usize,
    pub norm: String,
    pub xi: String,
    pub lower: String,
    pub upper: String,
    pub tight_right: bool,
    pub mu_bounds: BTreeMap<usize, String>,
}

impl From<&AbsorptionReport> for AbsorbJson {
    fn from(a: &AbsorptionReport) -> Self {
        AbsorbJson {
            n: a.n,
            norm: to_pq(&a.norm),
            xi: to_pq(&a.xi),
            lower: to_pq(&a.lower),
            upper: to_pq(&a.upper),
            tight_right: a.tight_right,
            mu_bounds: a.mu_lower_bounds.iter().map(|(k, v)| (*k, to_pq(v))).collect(),
        }
    }
}

/// Norm plus absorption for one Hadamard matrix on `[-1, 1]^n`.
pub fn analyse(h: &HadamardMatrix, opts: &ScanOptions) -> Result<(NormReport, AbsorptionReport)> {
    let report = hadamard_norm(h, CubeKind::Symmetric, opts)?;
    let xi = xi_from_report(&report);
    let absorption = check_xi_inequalities(&report, &xi)?;
    Ok((report, absorption))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Provenance of one command invocation. Inputs are digested when they are
/// registered, before any computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub library_version: String,
    pub workers: usize,
    pub timestamp_unix: u64,
    pub outputs: Vec<String>,
    pub elapsed_ms: BTreeMap<String, u128>,
}

impl RunManifest {
    pub fn new(command_line: Vec<String>, workers: usize) -> Self {
        RunManifest {
            command_line,
            inputs: Vec::new(),
            library_version: env!("CARGO_PKG_VERSION").to_string(),
            workers,
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            outputs: Vec::new(),
            elapsed_ms: BTreeMap::new(),
        }
    }

    /// Reads and digests `path`, returning its contents.
    pub fn add_input(&mut self, path: &Path) -> Result<Vec<u8>> {
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
        });
        Ok(bytes)
    }

    pub fn add_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn record_time(&mut self, label: &str, since: Instant) {
        self.elapsed_ms
            .insert(label.to_string(), since.elapsed().as_millis());
    }

    /// The manifest with run-specific fields cleared, for comparing runs.
    pub fn without_timing(&self) -> Self {
        RunManifest {
            timestamp_unix: 0,
            elapsed_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, to_json_bytes(value)?).map_err(|e| Error::io(path, e))
}

pub fn read_hadamard(path: &Path) -> Result<HadamardMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    HadamardMatrix::parse(&text)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngestRow {
    pub file: String,
    pub order: usize,
    #[serde(flatten)]
    pub norm: NormJson,
    pub absorption: AbsorbJson,
    #[serde(skip)]
    norm_exact: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IngestError {
    pub file: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngestReport {
    pub rows: Vec<IngestRow>,
    pub errors: Vec<IngestError>,
}

impl IngestReport {
    /// `(norm, census)` pairs in table order.
    pub fn profile(&self) -> Vec<(Rational, BTreeMap<usize, u64>)> {
        self.rows
            .iter()
            .map(|r| (r.norm_exact.clone(), r.norm.mu_census.clone()))
            .collect()
    }
}

/// Runs norm and absorption on every matrix file in `dir` (sorted by name,
/// dot-files skipped). Files that fail to parse or verify are collected as
/// errors and the batch continues. Rows are ordered by norm, then census,
/// then file name.
pub fn ingest(dir: &Path, opts: &ScanOptions, manifest: Option<&mut RunManifest>) -> Result<IngestReport> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| !n.starts_with('.'))
        })
        .collect();
    paths.sort();

    let mut local = RunManifest::new(Vec::new(), opts.workers);
    let manifest = manifest.unwrap_or(&mut local);
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for path in &paths {
        let file = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let outcome = manifest.add_input(path).and_then(|bytes| {
            let text = String::from_utf8(bytes).map_err(|_| Error::Parse {
                line: 0,
                message: "file is not UTF-8".into(),
            })?;
            let h = HadamardMatrix::parse(&text)?;
            let (report, absorption) = analyse(&h, opts)?;
            Ok(IngestRow {
                file: file.clone(),
                order: h.order(),
                norm: NormJson::new(&report, false, false),
                absorption: AbsorbJson::from(&absorption),
                norm_exact: report.norm,
            })
        });
        match outcome {
            Ok(row) => rows.push(row),
            Err(e) => errors.push(IngestError {
                file,
                error: e.to_string(),
            }),
        }
    }
    rows.sort_by(|a, b| {
        a.norm_exact
            .cmp(&b.norm_exact)
            .then_with(|| a.norm.mu_census.iter().cmp(b.norm.mu_census.iter()))
            .then_with(|| a.file.cmp(&b.file))
    });
    Ok(IngestReport { rows, errors })
}

/// The five `(norm, census)` rows known for order-16 Hadamard simplices.
pub fn order16_table() -> Vec<(Rational, BTreeMap<usize, u64>)> {
    let seven_halves = BTreeMap::from([(4, 896), (5, 1344), (6, 5376), (8, 1344)]);
    vec![
        (int(4), BTreeMap::from([(6, 448)])),
        (int(4), BTreeMap::from([(6, 192)])),
        (int(4), BTreeMap::from([(6, 64)])),
        (ratio(7, 2), seven_halves.clone()),
        (ratio(7, 2), seven_halves),
    ]
}

pub fn matches_order16_row(report: &NormReport) -> bool {
    order16_table()
        .iter()
        .any(|(norm, census)| *norm == report.norm && *census == report.census)
}

/// Sorted multiset comparison against the order-16 table.
pub fn matches_order16_table(profile: &[(Rational, BTreeMap<usize, u64>)]) -> bool {
    let key = |v: &[(Rational, BTreeMap<usize, u64>)]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.iter().cmp(b.1.iter())));
        v
    };
    key(profile) == key(&order16_table())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    N3,
    N15Sylvester,
    N23Paley,
    BallSweep,
    BoundsTable,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::N3,
        Target::N15Sylvester,
        Target::N23Paley,
        Target::BallSweep,
        Target::BoundsTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::N3 => "n3",
            Target::N15Sylvester => "n15-sylvester",
            Target::N23Paley => "n23-paley",
            Target::BallSweep => "ball-sweep",
            Target::BoundsTable => "bounds-table",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown target {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub target: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub results: Value,
}

impl Reproduction {
    fn new(target: Target, checks: Vec<Check>, results: Value) -> Self {
        Reproduction {
            target: target.name().to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
            results,
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproduceOptions {
    pub scan: ScanOptions,
    /// Largest `n` for the ball sweep.
    pub sweep_max: u64,
    /// Directory of extra Hadamard matrices. Order-16 files are compared
    /// with the five-row order-16 table, order-24 files with the 56/4 split.
    pub matrices: Option<PathBuf>,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            scan: ScanOptions::default(),
            sweep_max: 10_000,
            matrices: None,
        }
    }
}

pub fn reproduce(target: Target, opts: &ReproduceOptions) -> Result<Reproduction> {
    match target {
        Target::N3 => reproduce_n3(&opts.scan),
        Target::N15Sylvester => reproduce_n15(&opts.scan, opts.matrices.as_deref()),
        Target::N23Paley => reproduce_n23(&opts.scan, opts.matrices.as_deref()),
        Target::BallSweep => reproduce_ball_sweep(opts.sweep_max),
        Target::BoundsTable => reproduce_bounds_table(&opts.scan),
    }
}

fn hadamard_checks(checks: &mut Vec<Check>, report: &NormReport, absorption: &AbsorptionReport) -> Result<()> {
    let n = report.n;
    checks.push(Check::new(
        "norm-squared-at-most-n-plus-1",
        verify_sqrt_bound(report),
        format!("({})² ≤ {}", to_pq(&report.norm), n + 1),
    ));
    checks.push(Check::new(
        "cube-norm-at-most-ball-norm",
        cube_ball_consistency(report)?,
        format!(
            "{} ≤ {:.12}",
            to_pq(&report.norm),
            ball_projector_norm(n as u64)?.norm
        ),
    ));
    checks.push(Check::new(
        "absorption-estimates",
        absorption.lower <= absorption.xi && absorption.xi <= absorption.upper,
        format!(
            "{} ≤ ξ = {} ≤ {}",
            to_pq(&absorption.lower),
            to_pq(&absorption.xi),
            to_pq(&absorption.upper)
        ),
    ));
    checks.push(Check::new(
        "norm-at-most-sqrt-2n-plus-3-plus-1",
        to_f64(&report.norm) <= corollary3_bound(n) + TOLERANCE,
        format!("{} ≤ {:.6}", to_pq(&report.norm), corollary3_bound(n)),
    ));
    checks.push(Check::new(
        "norm-above-theta-lower",
        to_f64(&report.norm) > theta_lower(n),
        format!("{:.6} < {}", theta_lower(n), to_pq(&report.norm)),
    ));
    Ok(())
}

fn hadamard_results(report: &NormReport, absorption: &AbsorptionReport) -> Value {
    json!({
        "norm": NormJson::new(report, report.maximizer_count <= 64, false),
        "absorption": AbsorbJson::from(absorption),
    })
}

fn reproduce_n3(opts: &ScanOptions) -> Result<Reproduction> {
    let h = sylvester(2)?.normalize_last_column();
    let (fast, absorption) = analyse(&h, opts)?;
    let ev = LagrangeEvaluator::from_hadamard(&h)?;
    let generic = projector_norm(&ev, &Cube::symmetric(3), opts)?;
    let mut checks = vec![
        Check::new("norm-is-2", fast.norm == int(2), to_pq(&fast.norm)),
        Check::new(
            "census-is-{1:4}",
            fast.census == BTreeMap::from([(1, 4)]),
            format!("{:?}", fast.census),
        ),
        Check::new("xi-is-3", absorption.xi == int(3), to_pq(&absorption.xi)),
        Check::new(
            "right-equality-with-1-vertex",
            absorption.tight_right && absorption.has_one_vertex,
            format!("tight_right = {}", absorption.tight_right),
        ),
        Check::new("fast-path-equals-generic", fast == generic, ""),
    ];
    hadamard_checks(&mut checks, &fast, &absorption)?;
    Ok(Reproduction::new(Target::N3, checks, hadamard_results(&fast, &absorption)))
}

/// Ingests `dir` and keeps the rows of the given order. Unreadable or
/// non-Hadamard files fail the batch check rather than aborting.
fn supplied_rows(
    dir: &Path,
    order: usize,
    opts: &ScanOptions,
    checks: &mut Vec<Check>,
) -> Result<Vec<IngestRow>> {
    let batch = ingest(dir, opts, None)?;
    checks.push(Check::new(
        "supplied-matrices-parse",
        batch.errors.is_empty(),
        format!("{:?}", batch.errors),
    ));
    Ok(batch.rows.into_iter().filter(|r| r.order == order).collect())
}

fn reproduce_n15(opts: &ScanOptions, matrices: Option<&Path>) -> Result<Reproduction> {
    let h = sylvester(4)?;
    let (report, absorption) = analyse(&h, opts)?;
    let mut checks = vec![
        Check::new(
            "norm-in-{7/2,4}",
            report.norm == int(4) || report.norm == ratio(7, 2),
            to_pq(&report.norm),
        ),
        Check::new(
            "census-matches-order-16-table-row",
            matches_order16_row(&report),
            format!("{:?}", report.census),
        ),
        // Regression value for the Sylvester representative.
        Check::new(
            "sylvester-row-is-norm-4-m6-448",
            report.norm == int(4) && report.census == BTreeMap::from([(6, 448)]),
            format!("{} {:?}", to_pq(&report.norm), report.census),
        ),
    ];
    hadamard_checks(&mut checks, &report, &absorption)?;
    let mut results = hadamard_results(&report, &absorption);
    if let Some(dir) = matrices {
        let rows = supplied_rows(dir, 16, opts, &mut checks)?;
        let profile: Vec<_> = rows
            .iter()
            .map(|r| (r.norm_exact.clone(), r.norm.mu_census.clone()))
            .collect();
        checks.push(Check::new(
            "supplied-order-16-rows-equal-table",
            matches_order16_table(&profile),
            format!("{} order-16 files", rows.len()),
        ));
        results["supplied"] = serde_json::to_value(&rows)?;
    }
    Ok(Reproduction::new(Target::N15Sylvester, checks, results))
}

fn reproduce_n23(opts: &ScanOptions, matrices: Option<&Path>) -> Result<Reproduction> {
    let h = paley(23)?;
    let (report, absorption) = analyse(&h, opts)?;
    let mut checks = vec![Check::new(
        "norm-in-{14/3,9/2}",
        report.norm == ratio(14, 3) || report.norm == ratio(9, 2),
        to_pq(&report.norm),
    )];
    hadamard_checks(&mut checks, &report, &absorption)?;
    let mut results = hadamard_results(&report, &absorption);
    if let Some(dir) = matrices {
        let rows = supplied_rows(dir, 24, opts, &mut checks)?;
        let count = |v: Rational| rows.iter().filter(|r| r.norm_exact == v).count();
        let (low, high) = (count(ratio(14, 3)), count(ratio(9, 2)));
        checks.push(Check::new(
            "supplied-order-24-split-56-4",
            rows.len() == 60 && low == 56 && high == 4,
            format!("{} files: {low} at 14/3, {high} at 9/2", rows.len()),
        ));
        results["supplied"] = serde_json::to_value(&rows)?;
    }
    Ok(Reproduction::new(Target::N23Paley, checks, results))
}

/// Outcome of sweeping the ball norm over `1..=max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallSweep {
    pub max: u64,
    /// `n` with `‖P‖_B` outside `[√n - tol, √(n+1) + tol]`.
    pub out_of_range: Vec<u64>,
    /// `n + 1` a perfect square but `|‖P‖_B - √(n+1)| > tol`.
    pub squares_missing_equality: Vec<u64>,
    /// `n + 1` not a square yet `‖P‖_B ≥ √(n+1)` in binary64.
    pub non_squares_reaching_bound: Vec<u64>,
    /// `n + 1` not a square with `0 < √(n+1) - ‖P‖_B ≤ tol`.
    pub non_squares_within_tolerance: Vec<u64>,
    /// Smallest `√(n+1) - ‖P‖_B` over non-square `n + 1`, with its `n`.
    pub smallest_non_square_gap: Option<(u64, f64)>,
}

pub fn ball_sweep(max: u64) -> Result<BallSweep> {
    let mut sweep = BallSweep {
        max,
        out_of_range: Vec::new(),
        squares_missing_equality: Vec::new(),
        non_squares_reaching_bound: Vec::new(),
        non_squares_within_tolerance: Vec::new(),
        smallest_non_square_gap: None,
    };
    for n in 1..=max {
        let r = ball_projector_norm(n)?;
        let lo = (n as f64).sqrt();
        let hi = ((n + 1) as f64).sqrt();
        if r.norm < lo - TOLERANCE || r.norm > hi + TOLERANCE {
            sweep.out_of_range.push(n);
        }
        let gap = hi - r.norm;
        if r.exact_sqrt_flag {
            if gap.abs() > TOLERANCE {
                sweep.squares_missing_equality.push(n);
            }
        } else {
            if gap <= 0.0 {
                sweep.non_squares_reaching_bound.push(n);
            } else if gap <= TOLERANCE {
                sweep.non_squares_within_tolerance.push(n);
            }
            if sweep.smallest_non_square_gap.is_none_or(|(_, g)| gap < g) {
                sweep.smallest_non_square_gap = Some((n, gap));
            }
        }
    }
    Ok(sweep)
}

fn reproduce_ball_sweep(max: u64) -> Result<Reproduction> {
    let named: Vec<(u64, f64)> = vec![(1, 1.0), (2, 5.0 / 3.0), (3, 2.0), (15, 4.0)];
    let mut checks = Vec::new();
    let mut values = Vec::new();
    for (n, expected) in named {
        let r: BallNormResult = ball_projector_norm(n)?;
        checks.push(Check::new(
            &format!("ball-norm-n{n}"),
            (r.norm - expected).abs() <= TOLERANCE,
            format!("{:.12} vs {expected:.12}", r.norm),
        ));
        values.push(r);
    }
    let sweep = ball_sweep(max)?;
    checks.push(Check::new(
        "sqrt-n-to-sqrt-n-plus-1",
        sweep.out_of_range.is_empty(),
        format!("{} violations", sweep.out_of_range.len()),
    ));
    checks.push(Check::new(
        "upper-equality-at-every-square",
        sweep.squares_missing_equality.is_empty(),
        format!("{:?}", sweep.squares_missing_equality),
    ));
    checks.push(Check::new(
        "non-squares-strictly-below-bound",
        sweep.non_squares_reaching_bound.is_empty(),
        format!("{:?}", sweep.non_squares_reaching_bound),
    ));
    checks.push(Check::new(
        "tolerance-window-only-at-squares",
        sweep.non_squares_within_tolerance.is_empty(),
        format!(
            "{} non-square n within {TOLERANCE:e} of √(n+1), first {:?}; smallest gap {:?}",
            sweep.non_squares_within_tolerance.len(),
            sweep.non_squares_within_tolerance.first(),
            sweep.smallest_non_square_gap
        ),
    ));
    Ok(Reproduction::new(
        Target::BallSweep,
        checks,
        json!({ "named": values, "sweep": sweep }),
    ))
}

fn reproduce_bounds_table(opts: &ScanOptions) -> Result<Reproduction> {
    let h: Vec<u64> = (1..=5)
        .map(maxdet01_bruteforce)
        .collect::<Result<_>>()?;
    let big = |v: u64| num_bigint::BigUint::from(v);
    let mut checks = vec![
        Check::new("h1-to-h5", h == [1, 1, 2, 3, 5], format!("{h:?}")),
        Check::new(
            "h3-meets-hadamard-bound",
            h[2] == 2 && meets_hadamard_bound(3, &big(h[2])),
            format!("h3 = {}", h[2]),
        ),
        Check::new(
            "h4-meets-barba-bound",
            h[3] == 3 && meets_barba_bound(4, &big(h[3]))?,
            format!("h4 = {}", h[3]),
        ),
    ];
    let t1 = theorem1_bound(&big(h[2]), &big(h[3]))?;
    let n3 = hadamard_norm(&sylvester(2)?, CubeKind::Symmetric, opts)?;
    let n3_unit = hadamard_norm(&sylvester(2)?, CubeKind::Unit, opts)?;
    checks.push(Check::new(
        "ratio-bound-at-n3-is-4-and-dominates-norm",
        t1 == int(4) && n3.norm <= t1 && n3_unit.norm == n3.norm,
        format!("{} ≥ {}", to_pq(&t1), to_pq(&n3.norm)),
    ));
    let mut ratio_ok = true;
    for n in 1..=4usize {
        ratio_ok &= corollary2_ratios(&big(h[n - 1]), &big(h[n]), n).is_ok();
    }
    checks.push(Check::new("h-ratio-lower-bounds", ratio_ok, "n = 1..4"));
    let rows: Vec<Value> = (1..=24)
        .map(|n| BoundsRow::compute(n, DEFAULT_BRUTE_FORCE_LIMIT).map(|r| r.to_json()))
        .collect::<Result<_>>()?;
    Ok(Reproduction::new(
        Target::BoundsTable,
        checks,
        json!({ "rows": rows }),
    ))
}
