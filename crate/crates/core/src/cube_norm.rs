//! Exact projector norms over a cube by enumerating all `2^n` vertices.
//!
//! `‖P‖_Q = max_{x ∈ ver Q} Σ_j |λ_j(x)|`. Two independent routes compute it:
//!
//! * [`projector_norm`] takes any [`LagrangeEvaluator`] and [`Cube`], lifts
//!   the affine maps `σ ↦ λ_j(center + half·σ)` to integers over a common
//!   denominator, and recomputes every `λ_j` from scratch at each vertex.
//! * [`hadamard_fast_path`] works straight from a normalized Hadamard matrix,
//!   where `λ_j(x) = (h^{(j)}, (x, 1))/(n+1)`, and walks the cube in Gray
//!   order so that each step changes every dot product by `±2·h_ji`.
//!
//! Both split the vertex index space `[0, 2^n)` into contiguous blocks that
//! are scanned independently and merged; the merge is associative and
//! commutative, so reports do not depend on the worker count.
//!
//! A vertex is an `n`-bit mask; bit `i` set means coordinate `i` sits at the
//! upper end of its interval (`+1` on `[-1, 1]^n`, `1` on `[0, 1]^n`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::Range;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::rational::{common_denominator, int, Rational};
use crate::simplex::{Cube, LagrangeEvaluator};

pub const MAX_SCAN_DIMENSION: usize = 30;
pub const DEFAULT_MAXIMIZER_CAP: usize = 1 << 16;
/// Number of maximizers kept when the full list exceeds the cap.
pub const MAXIMIZER_SAMPLE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub workers: usize,
    pub maximizer_cap: usize,
    /// Number of contiguous blocks; defaults to `8 × workers`.
    pub blocks: Option<usize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 1,
            maximizer_cap: DEFAULT_MAXIMIZER_CAP,
            blocks: None,
        }
    }
}

impl ScanOptions {
    pub fn with_workers(workers: usize) -> Self {
        ScanOptions {
            workers,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct NormReport {
    pub n: usize,
    pub norm: Rational,
    pub maximizer_count: u64,
    /// Ascending masks. The full set when `maximizers_complete`, otherwise the
    /// [`MAXIMIZER_SAMPLE`] smallest.
    pub maximizers: Vec<u32>,
    pub maximizers_complete: bool,
    /// `μ ↦ m_μ`: maximizers with exactly `μ` strictly negative `λ_j`.
    pub census: BTreeMap<usize, u64>,
    /// `min_{j, x ∈ ver Q} λ_j(x)`, shared with the absorption index.
    pub min_barycentric: Rational,
    pub elapsed: Duration,
}

/// Equality of everything except wall time.
impl PartialEq for NormReport {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.norm == other.norm
            && self.maximizer_count == other.maximizer_count
            && self.maximizers == other.maximizers
            && self.maximizers_complete == other.maximizers_complete
            && self.census == other.census
            && self.min_barycentric == other.min_barycentric
    }
}

impl NormReport {
    /// Renders a mask as `n` characters, coordinate 0 first.
    pub fn mask_to_bits(&self, mask: u32) -> String {
        mask_to_bits(mask, self.n)
    }
}

pub fn mask_to_bits(mask: u32, n: usize) -> String {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// `‖P‖² ≤ n + 1`, compared exactly.
pub fn verify_sqrt_bound(report: &NormReport) -> bool {
    &report.norm * &report.norm <= int(report.n as i64 + 1)
}

struct Accumulator<T> {
    best: Option<T>,
    count: u64,
    census: Vec<u64>,
    maximizers: Vec<u32>,
    min_value: Option<T>,
    cap: usize,
}

impl<T: Ord + Clone> Accumulator<T> {
    fn new(n: usize, cap: usize) -> Self {
        Accumulator {
            best: None,
            count: 0,
            census: vec![0; n + 2],
            maximizers: Vec::new(),
            min_value: None,
            cap,
        }
    }

    fn visit(&mut self, mask: u32, sum: T, negatives: usize, smallest: T) {
        if self.min_value.as_ref().is_none_or(|m| smallest < *m) {
            self.min_value = Some(smallest);
        }
        let ord = match &self.best {
            None => Ordering::Greater,
            Some(b) => sum.cmp(b),
        };
        match ord {
            Ordering::Less => return,
            Ordering::Greater => {
                self.best = Some(sum);
                self.count = 0;
                self.census.iter_mut().for_each(|c| *c = 0);
                self.maximizers.clear();
            }
            Ordering::Equal => {}
        }
        self.count += 1;
        self.census[negatives] += 1;
        self.maximizers.push(mask);
        if self.maximizers.len() > 2 * self.cap.max(MAXIMIZER_SAMPLE) {
            self.prune();
        }
    }

    fn prune(&mut self) {
        self.maximizers.sort_unstable();
        self.maximizers.truncate(self.cap.max(MAXIMIZER_SAMPLE));
    }

    fn merge(mut self, mut other: Self) -> Self {
        let min_value = match (self.min_value.take(), other.min_value.take()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let ord = match (&self.best, &other.best) {
            (_, None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(a), Some(b)) => a.cmp(b),
        };
        let mut out = match ord {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal => {
                self.count += other.count;
                self.census
                    .iter_mut()
                    .zip(&other.census)
                    .for_each(|(a, b)| *a += b);
                self.maximizers.append(&mut other.maximizers);
                self.prune();
                self
            }
        };
        out.min_value = min_value;
        out
    }

    fn finish(mut self, n: usize, denominator: &BigInt, elapsed: Duration) -> NormReport
    where
        T: Into<BigInt>,
    {
        self.maximizers.sort_unstable();
        let complete = self.count as usize <= self.cap;
        if complete {
            debug_assert_eq!(self.maximizers.len() as u64, self.count);
        } else {
            self.maximizers.truncate(MAXIMIZER_SAMPLE);
        }
        let census = self
            .census
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(mu, &c)| (mu, c))
            .collect();
        let best: BigInt = self.best.expect("scan visited no vertex").into();
        let min: BigInt = self.min_value.expect("scan visited no vertex").into();
        NormReport {
            n,
            norm: Rational::new(best, denominator.clone()),
            maximizer_count: self.count,
            maximizers: self.maximizers,
            maximizers_complete: complete,
            census,
            min_barycentric: Rational::new(min, denominator.clone()),
            elapsed,
        }
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if n > MAX_SCAN_DIMENSION {
        return Err(Error::Capacity(format!(
            "dimension {n} exceeds the 2^{MAX_SCAN_DIMENSION} vertex enumeration budget"
        )));
    }
    Ok(())
}

/// Even split of `[0, total)` into `count` contiguous ranges.
pub fn partition(total: u64, count: usize) -> Vec<Range<u64>> {
    let count = (count.max(1) as u64).min(total.max(1));
    (0..count)
        .map(|k| (total * k / count)..(total * (k + 1) / count))
        .collect()
}

fn check_partition(ranges: &[Range<u64>], total: u64) -> Result<()> {
    let mut sorted: Vec<_> = ranges.iter().filter(|r| !r.is_empty()).cloned().collect();
    sorted.sort_by_key(|r| r.start);
    let mut next = 0;
    for r in &sorted {
        if r.start != next {
            return Err(Error::InvalidParameter(format!(
                "ranges do not partition [0, {total}): gap or overlap at {next}"
            )));
        }
        next = r.end;
    }
    if next != total {
        return Err(Error::InvalidParameter(format!(
            "ranges do not partition [0, {total}): stop at {next}"
        )));
    }
    Ok(())
}

fn run_blocks<T, F>(ranges: &[Range<u64>], workers: usize, scan: F) -> Result<Accumulator<T>>
where
    T: Ord + Clone + Send,
    F: Fn(Range<u64>) -> Accumulator<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let parts: Vec<Accumulator<T>> =
        pool.install(|| ranges.par_iter().cloned().map(&scan).collect());
    let mut it = parts.into_iter();
    let first = it.next().expect("at least one block");
    Ok(it.fold(first, Accumulator::merge))
}

#[inline]
fn gray(i: u64) -> u32 {
    (i ^ (i >> 1)) as u32
}

/// Integer form of `σ ↦ λ_j(center + half·σ)`: numerator
/// `base_j + Σ_i coeff_j[i]·σ_i` over a common positive denominator.
struct IntegerAffine<N> {
    base: Vec<N>,
    coeff: Vec<Vec<N>>,
}

impl<N> IntegerAffine<N>
where
    N: Signed + Ord + Clone,
{
    fn scan(&self, n: usize, range: Range<u64>, cap: usize) -> Accumulator<N> {
        let mut acc = Accumulator::new(n, cap);
        let mut nums: Vec<N> = Vec::with_capacity(self.base.len());
        for v in range {
            let mask = v as u32;
            nums.clear();
            for (b, row) in self.base.iter().zip(&self.coeff) {
                let mut t = b.clone();
                for (i, a) in row.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        t = t + a.clone();
                    } else {
                        t = t - a.clone();
                    }
                }
                nums.push(t);
            }
            let sum = nums.iter().fold(N::zero(), |s, t| s + t.abs());
            let negatives = nums.iter().filter(|t| t.is_negative()).count();
            let smallest = nums.iter().min().cloned().unwrap_or_else(N::zero);
            acc.visit(mask, sum, negatives, smallest);
        }
        acc
    }
}

fn affine_numerators(ev: &LagrangeEvaluator, cube: &Cube) -> (IntegerAffine<BigInt>, BigInt) {
    let n = ev.dimension();
    let l = ev.coefficients();
    let centre = ev
        .barycentric(cube.center())
        .expect("dimension checked by caller");
    let slopes: Vec<Vec<Rational>> = (0..=n)
        .map(|j| (0..n).map(|i| &l[i][j] * cube.half_side()).collect())
        .collect();
    let denominator = common_denominator(centre.iter().chain(slopes.iter().flatten()));
    let lift = |r: &Rational| (r * &denominator).to_integer();
    let base = centre.iter().map(lift).collect();
    let coeff = slopes.iter().map(|row| row.iter().map(lift).collect()).collect();
    (IntegerAffine { base, coeff }, denominator)
}

/// Generic exact route; see the module docs.
pub fn projector_norm(
    ev: &LagrangeEvaluator,
    cube: &Cube,
    opts: &ScanOptions,
) -> Result<NormReport> {
    let start = Instant::now();
    let n = ev.dimension();
    check_dimension(n)?;
    if cube.dimension() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: cube.dimension(),
        });
    }
    let (affine, denominator) = affine_numerators(ev, cube);
    let total = 1u64 << n;
    let ranges = partition(total, opts.blocks.unwrap_or(8 * opts.workers.max(1)));

    // Largest possible |Σ_j |numerator_j||; if it fits comfortably in i128 the
    // scan runs on machine integers, otherwise on big integers.
    let bound: BigInt = affine
        .base
        .iter()
        .zip(&affine.coeff)
        .map(|(b, row)| b.abs() + row.iter().map(Signed::abs).sum::<BigInt>())
        .sum();
    let fits = bound.to_i128().is_some_and(|b| b < i128::MAX / 4);
    let acc = if fits {
        let narrow = IntegerAffine {
            base: affine.base.iter().map(|v| v.to_i128().unwrap()).collect(),
            coeff: affine
                .coeff
                .iter()
                .map(|row| row.iter().map(|v| v.to_i128().unwrap()).collect())
                .collect(),
        };
        run_blocks(&ranges, opts.workers, |r| {
            narrow.scan(n, r, opts.maximizer_cap)
        })?
        .map_into()
    } else {
        run_blocks(&ranges, opts.workers, |r| {
            affine.scan(n, r, opts.maximizer_cap)
        })?
    };
    Ok(acc.finish(n, &denominator, start.elapsed()))
}

impl Accumulator<i128> {
    fn map_into(self) -> Accumulator<BigInt> {
        Accumulator {
            best: self.best.map(BigInt::from),
            count: self.count,
            census: self.census,
            maximizers: self.maximizers,
            min_value: self.min_value.map(BigInt::from),
            cap: self.cap,
        }
    }
}

/// Gray-code walker over the vertices of `[-1, 1]^n` for the simplex of a
/// normalized Hadamard matrix, maintaining the integer dot products
/// `d_j = (h^{(j)}, (x, 1)) = (n+1)·λ_j(x)`.
pub struct HadamardScan {
    n: usize,
    /// `columns[i][j] = h_ji`, column-major for the flip update.
    columns: Vec<Vec<i32>>,
    last: Vec<i32>,
}

impl HadamardScan {
    pub fn new(h: &HadamardMatrix) -> Result<Self> {
        if !h.has_unit_last_column() {
            return Err(Error::NormalizationRequired);
        }
        let m = h.order();
        let n = m - 1;
        check_dimension(n)?;
        let columns = (0..n)
            .map(|i| (0..m).map(|j| i32::from(h.get(j, i))).collect())
            .collect();
        let last = (0..m).map(|j| i32::from(h.get(j, n))).collect();
        Ok(HadamardScan { n, columns, last })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    fn seed(&self, mask: u32, dots: &mut [i32]) {
        dots.copy_from_slice(&self.last);
        for (i, col) in self.columns.iter().enumerate() {
            let up = mask >> i & 1 == 1;
            for (d, &h) in dots.iter_mut().zip(col) {
                *d += if up { h } else { -h };
            }
        }
    }

    /// Calls `visit(mask, dots)` for the Gray-code vertices with indices in
    /// `range`.
    pub fn walk<F: FnMut(u32, &[i32])>(&self, range: Range<u64>, mut visit: F) {
        if range.is_empty() {
            return;
        }
        let mut dots = vec![0i32; self.n + 1];
        let mut mask = gray(range.start);
        self.seed(mask, &mut dots);
        for i in range.clone() {
            visit(mask, &dots);
            if i + 1 < range.end {
                let bit = (i + 1).trailing_zeros() as usize;
                mask ^= 1 << bit;
                let col = &self.columns[bit];
                if mask >> bit & 1 == 1 {
                    dots.iter_mut().zip(col).for_each(|(d, &h)| *d += 2 * h);
                } else {
                    dots.iter_mut().zip(col).for_each(|(d, &h)| *d -= 2 * h);
                }
            }
        }
    }

    /// Every vertex of the cube, in Gray order.
    pub fn for_each_vertex<F: FnMut(u32, &[i32])>(&self, visit: F) {
        self.walk(0..1u64 << self.n, visit)
    }

    fn scan(&self, range: Range<u64>, cap: usize) -> Accumulator<i64> {
        let mut acc = Accumulator::new(self.n, cap);
        self.walk(range, |mask, dots| {
            let mut sum = 0i64;
            let mut negatives = 0usize;
            let mut smallest = i32::MAX;
            for &d in dots {
                sum += i64::from(d.abs());
                negatives += usize::from(d < 0);
                smallest = smallest.min(d);
            }
            acc.visit(mask, sum, negatives, i64::from(smallest));
        });
        acc
    }

    /// Scans an arbitrary partition of `[0, 2^n)` into Gray-index ranges.
    pub fn scan_ranges(
        &self,
        ranges: &[Range<u64>],
        workers: usize,
        maximizer_cap: usize,
    ) -> Result<NormReport> {
        let start = Instant::now();
        check_partition(ranges, 1u64 << self.n)?;
        let acc = run_blocks(ranges, workers, |r| self.scan(r, maximizer_cap))?;
        Ok(acc.finish(self.n, &BigInt::from(self.n + 1), start.elapsed()))
    }
}

/// Fast route for the simplex of a normalized Hadamard matrix on
/// `[-1, 1]^n`. Produces the same report as [`projector_norm`].
pub fn hadamard_fast_path(h: &HadamardMatrix, opts: &ScanOptions) -> Result<NormReport> {
    let scan = HadamardScan::new(h)?;
    let ranges = partition(
        1u64 << scan.n,
        opts.blocks.unwrap_or(8 * opts.workers.max(1)),
    );
    scan.scan_ranges(&ranges, opts.workers, opts.maximizer_cap)
}
