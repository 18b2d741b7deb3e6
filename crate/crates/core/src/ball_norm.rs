//! Norm of the interpolation projector for a regular simplex inscribed in a
//! Euclidean ball. It depends on the dimension only:
//!
//! ```text
//! ψ(t) = 2√n/(n+1) · √(t(n+1-t)) + |1 - 2t/(n+1)|,   0 ≤ t ≤ n+1
//! a    = ⌊(n+1)/2 - √(n+1)/2⌋
//! ‖P‖_B = max{ψ(a), ψ(a+1)}
//! ```

use serde::Serialize;

use crate::cube_norm::NormReport;
use crate::error::{Error, Result};
use crate::rational::to_f64;

pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BallNormResult {
    pub n: u64,
    pub a: u64,
    pub psi_a: f64,
    pub psi_a1: f64,
    pub norm: f64,
    /// `n + 1` is a perfect square, decided in integers.
    #[serde(rename = "is_perfect_square")]
    pub exact_sqrt_flag: bool,
}

pub fn isqrt(v: u64) -> u64 {
    if v < 2 {
        return v;
    }
    let mut r = ((v as f64).sqrt() as u64).min(u32::MAX as u64);
    while r * r > v {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= v) {
        r += 1;
    }
    r
}

pub fn is_perfect_square(v: u64) -> bool {
    let r = isqrt(v);
    r * r == v
}

pub fn psi(t: f64, n: u64) -> Result<f64> {
    let m = n as f64 + 1.0;
    if !(0.0..=m).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "ψ argument {t} outside [0, {m}]"
        )));
    }
    Ok(2.0 * (n as f64).sqrt() / m * (t * (m - t)).sqrt() + (1.0 - 2.0 * t / m).abs())
}

/// `⌊(N - √N)/2⌋` with `N = n + 1`, evaluated in integers: for a perfect
/// square `N = s²` it is `⌊(N - s)/2⌋`, otherwise `√N ∈ (s, s+1)` and the
/// value is `⌊(N - s - 1)/2⌋`.
pub fn split_point(n: u64) -> u64 {
    let big_n = n + 1;
    let s = isqrt(big_n);
    if s * s == big_n {
        (big_n - s) / 2
    } else {
        (big_n - s - 1) / 2
    }
}

pub fn ball_projector_norm(n: u64) -> Result<BallNormResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("ball norm needs n ≥ 1".into()));
    }
    let a = split_point(n);
    let psi_a = psi(a as f64, n)?;
    let psi_a1 = psi((a + 1) as f64, n)?;
    Ok(BallNormResult {
        n,
        a,
        psi_a,
        psi_a1,
        norm: psi_a.max(psi_a1),
        exact_sqrt_flag: is_perfect_square(n + 1),
    })
}

/// `‖P‖_{Q'_n} ≤ ‖P‖_B + 1e-9` for the ball through the simplex vertices.
pub fn cube_ball_consistency(report: &NormReport) -> Result<bool> {
    let ball = ball_projector_norm(report.n as u64)?;
    Ok(to_f64(&report.norm) <= ball.norm + TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOLERANCE
    }

    #[test]
    fn psi_values() {
        for n in [1, 2, 3, 15, 100] {
            assert_eq!(psi(0.0, n).unwrap(), 1.0);
            assert!(close(psi((n + 1) as f64, n).unwrap(), 1.0));
        }
        assert!(close(psi(1.0, 3).unwrap(), 2.0));
        assert!(close(psi(2.0, 3).unwrap(), 3f64.sqrt()));
        assert!(close(psi(6.0, 15).unwrap(), 4.0));
        assert!(psi(-0.5, 3).is_err());
        assert!(psi(4.5, 3).is_err());
    }

    #[test]
    fn psi_first_term_is_symmetric() {
        let n = 10;
        for t in 0..=11 {
            let first = |t: f64| psi(t, n).unwrap() - (1.0 - 2.0 * t / 11.0).abs();
            assert!(close(first(t as f64), first((11 - t) as f64)));
        }
    }

    #[test]
    fn split_points() {
        assert_eq!(split_point(3), 1);
        assert_eq!(split_point(15), 6);
        assert_eq!(split_point(1), 0);
        assert_eq!(split_point(2), 0);
        // Floating-point oracle away from perfect squares.
        for n in 1..5000u64 {
            let m = (n + 1) as f64;
            let fl = ((m - m.sqrt()) / 2.0).floor() as u64;
            assert_eq!(split_point(n), fl, "n = {n}");
        }
    }

    #[test]
    fn isqrt_exact() {
        for v in 0..10_000u64 {
            let r = isqrt(v);
            assert!(r * r <= v && (r + 1) * (r + 1) > v);
        }
        assert_eq!(isqrt(u32::MAX as u64 * u32::MAX as u64), u32::MAX as u64);
    }

    #[test]
    fn named_dimensions() {
        assert!(close(ball_projector_norm(1).unwrap().norm, 1.0));
        let two = ball_projector_norm(2).unwrap();
        assert!(close(two.norm, 5.0 / 3.0));
        assert!(two.norm > 2f64.sqrt() && two.norm < 3f64.sqrt());
        assert!(close(ball_projector_norm(3).unwrap().norm, 2.0));
        let fifteen = ball_projector_norm(15).unwrap();
        assert_eq!(fifteen.a, 6);
        assert!(close(fifteen.norm, 4.0));
        assert!(fifteen.exact_sqrt_flag);
        assert!(ball_projector_norm(0).is_err());
    }
}
