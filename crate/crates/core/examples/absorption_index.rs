//! Absorption index of the cube by Hadamard simplices and the two-sided
//! estimate through the projector norm.
use hadamard_simplex::hadamard::construct;
use hadamard_simplex::rational::to_pq;
use hadamard_simplex::report::analyse;
use hadamard_simplex::cube_norm::ScanOptions;
use hadamard_simplex::Result;

fn main() -> Result<()> {
    println!("{:>3} {:>6} {:>6} {:>8} {:>6}  tight  μ-bounds", "n", "norm", "ξ", "lower", "upper");
    for order in [2, 4, 8, 12, 16, 20] {
        let h = construct(order)?;
        let (_, a) = analyse(&h, &ScanOptions::default())?;
        let mu: Vec<String> = a.mu_lower_bounds.iter().map(|(m, b)| format!("{m}:{}", to_pq(b))).collect();
        println!(
            "{:>3} {:>6} {:>6} {:>8} {:>6}  {:<5}  {}",
            a.n,
            to_pq(&a.norm),
            to_pq(&a.xi),
            to_pq(&a.lower),
            to_pq(&a.upper),
            a.tight_right,
            mu.join(" ")
        );
    }
    Ok(())
}
