//! Norm and absorption for every matrix file in a directory, sorted by norm
//! then census. Usage: ingest_batch [DIR]
use std::path::PathBuf;

use hadamard_simplex::cube_norm::ScanOptions;
use hadamard_simplex::report::{ingest, matches_order16_table, order16_table};
use hadamard_simplex::Result;

fn main() -> Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/order16")));
    let batch = ingest(&dir, &ScanOptions::with_workers(4), None)?;
    for row in &batch.rows {
        println!(
            "{:<48} norm {:>5}  ξ {:>5}  census {:?}",
            row.file, row.norm.norm, row.absorption.xi, row.norm.mu_census
        );
    }
    for e in &batch.errors {
        println!("skipped {}: {}", e.file, e.error);
    }
    let profile = batch.profile();
    let covered = order16_table().iter().all(|row| profile.contains(row));
    println!("every order-16 table row realised: {covered}");
    println!("equal to the table as a multiset (one file per class): {}", matches_order16_table(&profile));
    Ok(())
}
