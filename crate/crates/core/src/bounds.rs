//! Maximal determinants of 0/1 matrices and the projector-norm bounds that
//! are expressed through them.
//!
//! `h_n` is the largest determinant of an `n × n` matrix with entries in
//! `{0, 1}`; `ν_n = h_n/n!` is the largest volume of a simplex in `[0, 1]^n`.
//! Values are only ever recorded with a certificate: exhaustive search for
//! small `n`, or equality in the Hadamard bound when an Hadamard matrix of
//! order `n + 1` is available. A user-supplied witness matrix gives a lower
//! bound only.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hadamard::{construct, HadamardMatrix};
use crate::rational::{int, to_pq, Rational};
use crate::simplex::bareiss_integer;

pub const MAX_BRUTE_FORCE: usize = 6;
/// Largest `n` filled in by exhaustive search when building a [`BoundsRow`].
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Bruteforce,
    HadamardEquality,
    BoundOnly,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Bruteforce => "bruteforce",
            Provenance::HadamardEquality => "hadamard-equality",
            Provenance::BoundOnly => "bound-only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedH {
    pub n: usize,
    pub value: BigUint,
    pub provenance: Provenance,
}

fn det_i64(rows: &[u32], n: usize) -> i64 {
    let mut a = [[0i64; MAX_BRUTE_FORCE]; MAX_BRUTE_FORCE];
    for (i, &r) in rows.iter().enumerate() {
        for (j, v) in a[i].iter_mut().enumerate().take(n) {
            *v = i64::from(r >> j & 1);
        }
    }
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn best_completion(rows: &mut Vec<u32>, next: u32, limit: u32, skip: u32, n: usize) -> i64 {
    if rows.len() == n {
        return det_i64(rows, n).abs();
    }
    let mut best = 0;
    for r in next..limit {
        if r == skip {
            continue;
        }
        rows.push(r);
        best = best.max(best_completion(rows, r + 1, limit, skip, n));
        rows.pop();
    }
    best
}

/// Exhaustive search for `h_n`. Row and column permutations do not change
/// `|det|`, so the first row is fixed to `k` trailing ones (`k = 1..=n`) and
/// the remaining rows are taken as strictly increasing bit patterns.
pub fn maxdet01_bruteforce(n: usize) -> Result<u64> {
    if n > MAX_BRUTE_FORCE {
        return Err(Error::Capacity(format!(
            "brute-force h_n is limited to n ≤ {MAX_BRUTE_FORCE}, got {n}"
        )));
    }
    if n <= 1 {
        return Ok(1);
    }
    let limit = 1u32 << n;
    let seeds: Vec<(u32, u32)> = (1..=n)
        .flat_map(|k| {
            let first = (1u32 << k) - 1;
            (1..limit).filter(move |&s| s != first).map(move |s| (first, s))
        })
        .collect();
    let best = seeds
        .par_iter()
        .map(|&(first, second)| {
            let mut rows = vec![first, second];
            best_completion(&mut rows, second + 1, limit, first, n)
        })
        .max()
        .unwrap_or(0);
    Ok(best as u64)
}

/// `h_n = (n+1)^{(n+1)/2} / 2^n` for `n = order(h) - 1`, certified by the
/// Hadamard matrix `h`.
pub fn h_from_hadamard_equality(h: &HadamardMatrix) -> Result<CertifiedH> {
    let m = h.order();
    let n = m - 1;
    if m == 1 {
        return Ok(CertifiedH {
            n: 0,
            value: BigUint::one(),
            provenance: Provenance::HadamardEquality,
        });
    }
    if !m.is_multiple_of(2) {
        return Err(Error::InvariantViolation(format!(
            "order {m} cannot be an Hadamard order"
        )));
    }
    let numerator = BigUint::from(m).pow((m / 2) as u32);
    let denominator = BigUint::one() << n;
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "{m}^{} is not divisible by 2^{n}",
            m / 2
        )));
    }
    Ok(CertifiedH {
        n,
        value: q,
        provenance: Provenance::HadamardEquality,
    })
}

/// `|det|` of a 0/1 witness; a lower bound for `h_n`.
pub fn h_lower_bound_from_witness(rows: &[Vec<u8>]) -> Result<CertifiedH> {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedMatrix(format!(
                "witness row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        if row.iter().any(|&v| v > 1) {
            return Err(Error::MalformedMatrix(format!(
                "witness row {} has an entry outside {{0, 1}}",
                i + 1
            )));
        }
        a.push(row.iter().map(|&v| BigInt::from(v)).collect());
    }
    let det = if n == 0 { BigInt::one() } else { bareiss_integer(&mut a) };
    Ok(CertifiedH {
        n,
        value: det.abs().to_biguint().expect("absolute value"),
        provenance: Provenance::BoundOnly,
    })
}

/// Best certified value available without a witness: exhaustive search up to
/// `brute_force_limit`, then Hadamard equality when a matrix of order `n + 1`
/// can be constructed.
pub fn certify_h(n: usize, brute_force_limit: usize) -> Result<Option<CertifiedH>> {
    if n <= brute_force_limit.min(MAX_BRUTE_FORCE) {
        return Ok(Some(CertifiedH {
            n,
            value: BigUint::from(maxdet01_bruteforce(n)?),
            provenance: Provenance::Bruteforce,
        }));
    }
    match construct(n + 1) {
        Ok(h) => Ok(Some(h_from_hadamard_equality(&h)?)),
        Err(_) => Ok(None),
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `ν_n = h_n / n!`.
pub fn nu_from_h(n: usize, h: &BigUint) -> Rational {
    Rational::new(BigInt::from(h.clone()), BigInt::from(factorial(n)))
}

/// `2·h_{n+1}/h_n + 1`.
pub fn theorem1_bound(h_n: &BigUint, h_n1: &BigUint) -> Result<Rational> {
    if h_n.is_zero() {
        return Err(Error::InvalidParameter("h_n must be positive".into()));
    }
    Ok(Rational::new(
        BigInt::from(h_n1.clone()) * 2,
        BigInt::from(h_n.clone()),
    ) + int(1))
}

/// `(n+1)^{(n+1)/2} / 2^n`.
pub fn hadamard_bound(n: usize) -> f64 {
    let m = n as f64 + 1.0;
    (m.ln() * m / 2.0 - n as f64 * std::f64::consts::LN_2).exp()
}

/// `4^n·h² ≤ (n+1)^{n+1}`.
pub fn within_hadamard_bound(n: usize, h: &BigUint) -> bool {
    (h * h) << (2 * n) <= BigUint::from(n + 1).pow((n + 1) as u32)
}

/// `4^n·h² = (n+1)^{n+1}`.
pub fn meets_hadamard_bound(n: usize, h: &BigUint) -> bool {
    (h * h) << (2 * n) == BigUint::from(n + 1).pow((n + 1) as u32)
}

fn require_even(n: usize) -> Result<()> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "the Barba bound applies to even n only, got {n}"
        )));
    }
    Ok(())
}

/// `n^{n/2}·√(2n+1) / 2^n` for even `n`.
pub fn barba_bound(n: usize) -> Result<f64> {
    require_even(n)?;
    let nf = n as f64;
    Ok((nf.ln() * nf / 2.0 + (2.0 * nf + 1.0).ln() / 2.0 - nf * std::f64::consts::LN_2).exp())
}

/// `4^n·h² ≤ n^n·(2n+1)` for even `n`.
pub fn within_barba_bound(n: usize, h: &BigUint) -> Result<bool> {
    require_even(n)?;
    Ok((h * h) << (2 * n) <= BigUint::from(n).pow(n as u32) * BigUint::from(2 * n + 1))
}

/// `4^n·h² = n^n·(2n+1)` for even `n`.
pub fn meets_barba_bound(n: usize, h: &BigUint) -> Result<bool> {
    require_even(n)?;
    Ok((h * h) << (2 * n) == BigUint::from(n).pow(n as u32) * BigUint::from(2 * n + 1))
}

/// `√(2n+3) + 1`.
pub fn corollary3_bound(n: usize) -> f64 {
    ((2 * n + 3) as f64).sqrt() + 1.0
}

/// `√(n+1)`.
pub fn corollary5_bound(n: usize) -> f64 {
    ((n + 1) as f64).sqrt()
}

/// `√(n-1)/e`, zero at `n = 1`.
pub fn theta_lower(n: usize) -> f64 {
    (n.saturating_sub(1) as f64).sqrt() / std::f64::consts::E
}

/// `(h_{n+1}/h_n, ν_{n+1}/ν_n)`, checking `h_{n+1}/h_n > √(n-1)/(2e) - 1/2`.
pub fn corollary2_ratios(h_n: &BigUint, h_n1: &BigUint, n: usize) -> Result<(Rational, Rational)> {
    if h_n.is_zero() {
        return Err(Error::InvalidParameter("h_n must be positive".into()));
    }
    let ratio = Rational::new(BigInt::from(h_n1.clone()), BigInt::from(h_n.clone()));
    let nu_ratio = &ratio / int(n as i64 + 1);
    let floor = theta_lower(n) / 2.0 - 0.5;
    let value = ratio.to_f64().unwrap_or(f64::INFINITY);
    if value <= floor {
        return Err(Error::InvariantViolation(format!(
            "h_{{n+1}}/h_n = {value} does not exceed {floor}"
        )));
    }
    Ok((ratio, nu_ratio))
}

/// All bounds for one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub n: usize,
    pub h_n: Option<CertifiedH>,
    pub h_n1: Option<CertifiedH>,
    pub nu_n: Option<Rational>,
    pub hadamard_bound: f64,
    pub barba_bound: Option<f64>,
    pub theorem1_bound: Option<Rational>,
    pub corollary3_bound: f64,
    pub corollary5_bound: f64,
    pub theta_lower: f64,
}

impl BoundsRow {
    pub fn compute(n: usize, brute_force_limit: usize) -> Result<Self> {
        let h_n = certify_h(n, brute_force_limit)?;
        let h_n1 = certify_h(n + 1, brute_force_limit)?;
        Self::from_values(n, h_n, h_n1)
    }

    pub fn from_values(
        n: usize,
        h_n: Option<CertifiedH>,
        h_n1: Option<CertifiedH>,
    ) -> Result<Self> {
        if let Some(h) = &h_n {
            if !within_hadamard_bound(n, &h.value) {
                return Err(Error::InvariantViolation(format!(
                    "h_{n} = {} exceeds the Hadamard bound",
                    h.value
                )));
            }
            if n.is_multiple_of(2) && !within_barba_bound(n, &h.value)? {
                return Err(Error::InvariantViolation(format!(
                    "h_{n} = {} exceeds the Barba bound",
                    h.value
                )));
            }
        }
        // A lower-bound witness for h_{n+1} would make the bound unsound.
        let theorem1_bound = match (&h_n, &h_n1) {
            (Some(a), Some(b))
                if a.provenance != Provenance::BoundOnly
                    && b.provenance != Provenance::BoundOnly =>
            {
                Some(theorem1_bound(&a.value, &b.value)?)
            }
            _ => None,
        };
        Ok(BoundsRow {
            n,
            nu_n: h_n.as_ref().map(|h| nu_from_h(n, &h.value)),
            h_n,
            h_n1,
            hadamard_bound: hadamard_bound(n),
            barba_bound: barba_bound(n).ok(),
            theorem1_bound,
            corollary3_bound: corollary3_bound(n),
            corollary5_bound: corollary5_bound(n),
            theta_lower: theta_lower(n),
        })
    }

    pub fn to_json(&self) -> Value {
        let h = |c: &Option<CertifiedH>| match c {
            Some(c) => json!({ "value": c.value.to_string(), "provenance": c.provenance }),
            None => Value::Null,
        };
        json!({
            "n": self.n,
            "h_n": h(&self.h_n),
            "h_n1": h(&self.h_n1),
            "nu_n": self.nu_n.as_ref().map(to_pq),
            "hadamard_bound": self.hadamard_bound,
            "barba_bound": self.barba_bound,
            "theorem1_bound": self.theorem1_bound.as_ref().map(to_pq),
            "corollary3_bound": self.corollary3_bound,
            "corollary5_bound": self.corollary5_bound,
            "theta_lower": self.theta_lower,
            "provenance": {
                "h_n": self.h_n.as_ref().map_or(Provenance::BoundOnly, |c| c.provenance),
                "h_n1": self.h_n1.as_ref().map_or(Provenance::BoundOnly, |c| c.provenance),
                "hadamard_bound": Provenance::BoundOnly,
                "barba_bound": Provenance::BoundOnly,
            },
        })
    }
}
