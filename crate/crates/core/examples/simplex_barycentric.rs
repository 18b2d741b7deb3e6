//! The regular simplex of a normalized Hadamard matrix and its barycentric
//! coordinates.
use hadamard_simplex::hadamard::sylvester;
use hadamard_simplex::rational::{ratio, to_pq};
use hadamard_simplex::{LagrangeEvaluator, Result, Simplex};

fn main() -> Result<()> {
    let h = sylvester(2)?.normalize_last_column();
    let s = Simplex::from_hadamard(&h)?;
    println!("vertices of the simplex in [-1, 1]^3:");
    for v in s.vertices() {
        println!("  {:?}", v.iter().map(to_pq).collect::<Vec<_>>());
    }
    println!("regular: {}, squared edges {:?}", s.is_regular(), s.squared_edges().iter().map(to_pq).collect::<Vec<_>>());
    println!("det of vertex matrix: {}", to_pq(s.determinant()));

    let ev = LagrangeEvaluator::from_hadamard(&h)?;
    let x = vec![ratio(1, 2), ratio(-1, 3), ratio(1, 1)];
    let lambda = ev.barycentric(&x)?;
    println!("λ(x) at x = (1/2, -1/3, 1): {:?}", lambda.iter().map(to_pq).collect::<Vec<_>>());

    let unit = s.symmetric_to_unit()?;
    let ev_unit = LagrangeEvaluator::build(&unit)?;
    let y: Vec<_> = x.iter().map(|c| (c + ratio(1, 1)) / ratio(2, 1)).collect();
    println!("same coordinates on [0, 1]^3: {}", ev_unit.barycentric(&y)? == lambda);
    Ok(())
}
