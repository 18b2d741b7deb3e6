//! Projector norm for the regular simplex inscribed in a ball.
//! Usage: ball_norm_sweep [MAX]
use hadamard_simplex::ball_norm::ball_projector_norm;
use hadamard_simplex::report::ball_sweep;
use hadamard_simplex::Result;

fn main() -> Result<()> {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10_000);
    for n in [1, 2, 3, 8, 15, 23, 24, 99] {
        let r = ball_projector_norm(n)?;
        println!(
            "n = {n:>3}: a = {:>2}, ψ(a) = {:.9}, ψ(a+1) = {:.9}, norm = {:.9}, √(n+1) = {:.9}",
            r.a,
            r.psi_a,
            r.psi_a1,
            r.norm,
            ((n + 1) as f64).sqrt()
        );
    }
    let s = ball_sweep(max)?;
    println!("sweep 1..={max}");
    println!("  outside [√n, √(n+1)]: {}", s.out_of_range.len());
    println!("  perfect squares missing equality: {}", s.squares_missing_equality.len());
    println!("  non-squares within 1e-9 of √(n+1): {}", s.non_squares_within_tolerance.len());
    if let Some((n, gap)) = s.smallest_non_square_gap {
        println!("  smallest non-square gap {gap:.3e} at n = {n}");
    }
    Ok(())
}
