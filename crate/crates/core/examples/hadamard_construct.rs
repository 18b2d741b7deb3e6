//! Sylvester and Paley constructions, verification, and normalization.
use hadamard_simplex::hadamard::{construct, paley, sylvester};
use hadamard_simplex::{EquivalenceOp, Result};

fn main() -> Result<()> {
    let h8 = sylvester(3)?;
    println!("Sylvester order {}:\n{}", h8.order(), h8.serialize());

    let p12 = paley(11)?;
    println!("Paley q = 11, order {}:\n{}", p12.order(), p12.serialize());

    let shuffled = p12
        .apply_op(EquivalenceOp::SwapCols(1, 12))?
        .apply_op(EquivalenceOp::NegateRow(3))?;
    println!("after ops, last column all +1: {}", shuffled.has_unit_last_column());
    let normalized = shuffled.normalize_last_column();
    println!("after normalizing: {}", normalized.has_unit_last_column());

    for order in [1, 2, 4, 12, 20, 24, 28, 32] {
        match construct(order) {
            Ok(h) => println!("order {order:>2}: ok, H·Hᵀ = mI: {}", h.as_sign_matrix().is_hadamard()),
            Err(e) => println!("order {order:>2}: {e}"),
        }
    }
    Ok(())
}
