//! Absorption index `ξ(Q; S) = min{σ ≥ 1 : Q ⊂ σS}`, the homothety taken
//! about the centroid of `S`.
//!
//! A point lies in `σS` iff every barycentric coordinate is at least
//! `(1 - σ)/(n + 1)`. Since `σS` is convex it is enough to test the cube
//! vertices, so `ξ = max(1, 1 - (n + 1)·min_{j, x} λ_j(x))`, which reuses the
//! vertex scan of [`crate::cube_norm`].

use std::collections::BTreeMap;

use num_traits::One;

use crate::cube_norm::{projector_norm, NormReport, ScanOptions};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::simplex::{Cube, LagrangeEvaluator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsorptionReport {
    pub n: usize,
    pub norm: Rational,
    pub xi: Rational,
    /// `(n+1)/(2n)·(‖P‖ - 1) + 1`
    pub lower: Rational,
    /// `(n+1)/2·(‖P‖ - 1) + 1`
    pub upper: Rational,
    /// `μ ↦ (n+1)/(2μ)·(‖P‖ - 1) + 1` for every `μ` with a μ-vertex.
    pub mu_lower_bounds: BTreeMap<usize, Rational>,
    pub has_one_vertex: bool,
    /// `ξ` equals the upper estimate.
    pub tight_right: bool,
}

/// `ξ` from the smallest barycentric coordinate over the cube vertices.
pub fn xi_from_min_barycentric(n: usize, min_lambda: &Rational) -> Rational {
    let candidate = int(1) - int(n as i64 + 1) * min_lambda;
    candidate.max(Rational::one())
}

pub fn xi_from_report(report: &NormReport) -> Rational {
    xi_from_min_barycentric(report.n, &report.min_barycentric)
}

pub fn absorption_index(
    ev: &LagrangeEvaluator,
    cube: &Cube,
    opts: &ScanOptions,
) -> Result<Rational> {
    let report = projector_norm(ev, cube, opts)?;
    Ok(xi_from_report(&report))
}

fn estimate(n: usize, norm: &Rational, divisor: usize) -> Rational {
    Rational::new((n as i64 + 1).into(), (2 * divisor as i64).into()) * (norm - int(1)) + int(1)
}

/// Checks the two-sided estimate of `ξ` through the projector norm, the
/// characterisation of right-hand equality by 1-vertices (for norm above 1),
/// and the sharper lower bound for every `μ` present in the census. Assumes
/// the simplex lies in the cube.
pub fn check_xi_inequalities(report: &NormReport, xi: &Rational) -> Result<AbsorptionReport> {
    let n = report.n;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "absorption estimates need n ≥ 1".into(),
        ));
    }
    let fail = |what: String| Err(Error::InvariantViolation(what));
    let norm = &report.norm;
    let lower = estimate(n, norm, n);
    let upper = estimate(n, norm, 1);
    if *xi < Rational::one() {
        return fail(format!("ξ = {xi} < 1"));
    }
    if *xi < lower {
        return fail(format!("lower estimate {lower} > ξ = {xi}"));
    }
    if *xi > upper {
        return fail(format!("ξ = {xi} > upper estimate {upper}"));
    }
    let has_one_vertex = report.census.contains_key(&1);
    let tight_right = *xi == upper;
    // At norm 1 both estimates collapse to 1 and no vertex has a negative
    // coordinate, so the 1-vertex characterisation is vacuous there.
    if *norm > Rational::one() && tight_right != has_one_vertex {
        return fail(format!(
            "right-hand equality is {tight_right} but 1-vertex presence is {has_one_vertex}"
        ));
    }
    let mut mu_lower_bounds = BTreeMap::new();
    for &mu in report.census.keys().filter(|&&mu| mu >= 1) {
        let bound = estimate(n, norm, mu);
        if bound > *xi {
            return fail(format!("μ = {mu} estimate {bound} > ξ = {xi}"));
        }
        mu_lower_bounds.insert(mu, bound);
    }
    Ok(AbsorptionReport {
        n,
        norm: norm.clone(),
        xi: xi.clone(),
        lower,
        upper,
        mu_lower_bounds,
        has_one_vertex,
        tight_right,
    })
}
