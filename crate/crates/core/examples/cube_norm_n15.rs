//! Exact projector norm and μ-census for the Sylvester simplex in [-1, 1]^15.
//! Usage: cube_norm_n15 [WORKERS]
use hadamard_simplex::cube_norm::{hadamard_fast_path, projector_norm, verify_sqrt_bound, ScanOptions};
use hadamard_simplex::hadamard::sylvester;
use hadamard_simplex::rational::to_pq;
use hadamard_simplex::{Cube, LagrangeEvaluator, Result};

fn main() -> Result<()> {
    let workers = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1);
    let h = sylvester(4)?.normalize_last_column();
    let opts = ScanOptions::with_workers(workers);

    let fast = hadamard_fast_path(&h, &opts)?;
    println!("norm {} over {} vertices in {:?}", to_pq(&fast.norm), 1u64 << fast.n, fast.elapsed);
    println!("μ-census {:?}, {} maximizers", fast.census, fast.maximizer_count);
    println!("first maximizer {}", fast.mask_to_bits(fast.maximizers[0]));
    println!("norm² ≤ n + 1: {}", verify_sqrt_bound(&fast));

    let ev = LagrangeEvaluator::from_hadamard(&h)?;
    let generic = projector_norm(&ev, &Cube::symmetric(15), &opts)?;
    println!("generic rational path agrees: {} ({:?})", generic == fast, generic.elapsed);
    Ok(())
}
