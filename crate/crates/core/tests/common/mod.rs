//! Oracles shared by the integration tests. Barycentric coordinates here come
//! from Cramer's rule on the vertex matrix, independent of the evaluator.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hadamard_simplex::hadamard::{paley, sylvester};
use hadamard_simplex::rational::{int, ratio, Rational};
use hadamard_simplex::simplex::bareiss_determinant;
use hadamard_simplex::{Cube, HadamardMatrix, Simplex};
use num_traits::{Signed, Zero};
use rand::Rng;

/// A normalized Hadamard matrix of order 2, 4, 8, 16 (Sylvester) or `q + 1`
/// for a prime `q ≡ 3 mod 4` (Paley).
pub fn hadamard_of_order(order: usize) -> HadamardMatrix {
    let h = match order {
        2 => sylvester(1),
        4 => sylvester(2),
        8 => sylvester(3),
        16 => sylvester(4),
        m => paley(m as u64 - 1),
    };
    h.unwrap().normalize_last_column()
}

fn augmented(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(int(1));
            r
        })
        .collect()
}

/// `λ_j(x) = det S_j(x) / det S`, where `S_j(x)` has row `j` replaced by `(x, 1)`.
pub fn cramer_barycentric(simplex: &Simplex, x: &[Rational]) -> Vec<Rational> {
    let s = augmented(simplex.vertices());
    let det = bareiss_determinant(&s);
    let mut point = x.to_vec();
    point.push(int(1));
    (0..s.len())
        .map(|j| {
            let mut sj = s.clone();
            sj[j] = point.clone();
            bareiss_determinant(&sj) / &det
        })
        .collect()
}

pub struct BruteNorm {
    pub norm: Rational,
    pub maximizers: Vec<u32>,
    pub census: BTreeMap<usize, u64>,
    pub min_lambda: Rational,
}

/// Straight enumeration of every cube vertex with Cramer coordinates.
pub fn brute_norm(simplex: &Simplex, cube: &Cube) -> BruteNorm {
    let n = simplex.dimension();
    let mut best = BruteNorm {
        norm: int(-1),
        maximizers: Vec::new(),
        census: BTreeMap::new(),
        min_lambda: int(i64::MAX),
    };
    for mask in 0..1u32 << n {
        let lambda = cramer_barycentric(simplex, &cube.vertex(u64::from(mask)));
        let sum: Rational = lambda.iter().map(|l| l.abs()).sum();
        let negatives = lambda.iter().filter(|l| l.is_negative()).count();
        for l in &lambda {
            if *l < best.min_lambda {
                best.min_lambda = l.clone();
            }
        }
        if sum > best.norm {
            best.norm = sum.clone();
            best.maximizers.clear();
            best.census.clear();
        }
        if sum == best.norm {
            best.maximizers.push(mask);
            *best.census.entry(negatives).or_default() += 1;
        }
    }
    best
}

pub fn contains(simplex: &Simplex, x: &[Rational]) -> bool {
    cramer_barycentric(simplex, x).iter().all(|l| !l.is_negative())
}

pub fn cube_inside(simplex: &Simplex, cube: &Cube) -> bool {
    (0..1u64 << cube.dimension()).all(|mask| contains(simplex, &cube.vertex(mask)))
}

/// Brackets `ξ` by bisection on `σ` with exact containment tests, returning
/// `(lo, hi)` with the cube outside `lo·S` and inside `hi·S`.
pub fn xi_bracket(simplex: &Simplex, cube: &Cube, steps: usize) -> (Rational, Rational) {
    let scaled = |s: &Rational| simplex.scaled_about_centroid(s).unwrap();
    if cube_inside(simplex, cube) {
        return (int(1), int(1));
    }
    let mut lo = int(1);
    let mut hi = int(2);
    while !cube_inside(&scaled(&hi), cube) {
        lo = hi.clone();
        hi = &hi * int(2);
    }
    for _ in 0..steps {
        let mid = (&lo + &hi) / int(2);
        if cube_inside(&scaled(&mid), cube) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// A rational in `[-2, 2]` with denominator up to 12.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let den = rng.gen_range(1..=12);
    ratio(rng.gen_range(-2 * den..=2 * den), den)
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// A nondegenerate simplex with small integer vertices.
pub fn random_simplex<R: Rng>(rng: &mut R, n: usize) -> Simplex {
    loop {
        let vertices: Vec<Vec<i64>> = (0..=n)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        if let Ok(s) = Simplex::from_integer_vertices(&vertices) {
            if !s.determinant().is_zero() {
                return s;
            }
        }
    }
}
