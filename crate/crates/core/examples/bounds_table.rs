//! Maximal 0/1 determinants, the Hadamard and Barba bounds, and the derived
//! norm bounds for n = 1..=24.
use hadamard_simplex::bounds::{BoundsRow, DEFAULT_BRUTE_FORCE_LIMIT};
use hadamard_simplex::rational::to_pq;
use hadamard_simplex::Result;

fn main() -> Result<()> {
    println!("{:>3} {:>10} {:>12} {:>10} {:>8} {:>9} {:>7}", "n", "h_n", "Hadamard", "Barba", "2h'/h+1", "√(2n+3)+1", "θ low");
    for n in 1..=24 {
        let r = BoundsRow::compute(n, DEFAULT_BRUTE_FORCE_LIMIT)?;
        let h = r.h_n.as_ref().map(|c| c.value.to_string()).unwrap_or_else(|| "?".into());
        let barba = r.barba_bound.map(|b| format!("{b:.3}")).unwrap_or_else(|| "-".into());
        let t1 = r.theorem1_bound.as_ref().map(to_pq).unwrap_or_else(|| "-".into());
        println!(
            "{n:>3} {h:>10} {:>12.3} {barba:>10} {t1:>8} {:>9.4} {:>7.4}",
            r.hadamard_bound, r.corollary3_bound, r.theta_lower
        );
    }
    Ok(())
}
