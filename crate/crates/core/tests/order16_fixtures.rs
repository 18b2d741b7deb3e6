//! The files in `data/order16` were found by randomized search and switching
//! from the Sylvester matrix. Together they realise every distinct
//! `(norm, census)` row of the order-16 table; they are not certified as
//! representatives of distinct equivalence classes.

use std::collections::BTreeSet;
use std::path::Path;

use hadamard_simplex::cube_norm::ScanOptions;
use hadamard_simplex::report::{ingest, order16_table};

#[test]
fn fixtures_cover_every_distinct_row() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/order16");
    let batch = ingest(&dir, &ScanOptions::with_workers(2), None).unwrap();
    assert!(batch.errors.is_empty(), "{:?}", batch.errors);
    assert_eq!(batch.rows.len(), 4);
    let found: BTreeSet<_> = batch.profile().into_iter().map(|(n, c)| (n, c.into_iter().collect::<Vec<_>>())).collect();
    let table: BTreeSet<_> = order16_table().into_iter().map(|(n, c)| (n, c.into_iter().collect::<Vec<_>>())).collect();
    assert_eq!(found, table);
    for row in &batch.rows {
        assert_eq!(row.order, 16);
        assert_eq!(row.absorption.xi, "15/1");
    }
}
