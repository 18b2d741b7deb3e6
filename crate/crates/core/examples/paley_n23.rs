//! Projector norm of the Paley simplex in [-1, 1]^23 (2^23 vertices).
//! Usage: paley_n23 [WORKERS]
use hadamard_simplex::ball_norm::ball_projector_norm;
use hadamard_simplex::cube_norm::{hadamard_fast_path, verify_sqrt_bound, ScanOptions};
use hadamard_simplex::hadamard::paley;
use hadamard_simplex::rational::{to_f64, to_pq};
use hadamard_simplex::Result;

fn main() -> Result<()> {
    let workers = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let h = paley(23)?.normalize_last_column();
    let r = hadamard_fast_path(&h, &ScanOptions::with_workers(workers))?;
    println!("norm {} ≈ {:.6} with {workers} workers in {:?}", to_pq(&r.norm), to_f64(&r.norm), r.elapsed);
    println!("μ-census {:?}", r.census);
    println!("norm² ≤ 24: {}", verify_sqrt_bound(&r));
    println!("ball norm for n = 23: {:.6}", ball_projector_norm(23)?.norm);
    Ok(())
}
