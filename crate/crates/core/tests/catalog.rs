use std::collections::HashSet;

use selfdual_core::catalog::{Catalog, CLAIM_COUNT};
use selfdual_core::freeoperad::sigma;
use selfdual_core::Scalar;

/// Claims the engine refutes; see the README section on known failures.
const REFUTED: [&str; 5] = [
    "pairing-pm-factor",
    "pairing-pm-equivalence",
    "a12-skew",
    "x1-sufficient",
    "x2-sufficient",
];

#[test]
fn claim_ids_are_unique() {
    let claims = Catalog::claims();
    assert_eq!(claims.len(), CLAIM_COUNT);
    let ids: HashSet<&str> = claims.iter().map(|c| c.0).collect();
    assert_eq!(ids.len(), CLAIM_COUNT);
    assert!(Catalog::new().run_claim("no-such-claim").is_none());
}

#[test]
fn scorecard_fails_exactly_the_refuted_claims() {
    let results = Catalog::new().run();
    assert_eq!(results.len(), CLAIM_COUNT);
    let failing: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert_eq!(failing, REFUTED);
    for r in &results {
        assert!(!r.detail.is_empty(), "{}", r.id);
    }
}

#[test]
fn corrupted_sigma_is_detected() {
    let mut bad = sigma();
    bad[(0, 0)] = Scalar::from_int(-1);
    let cat = Catalog::with_sigma(bad);
    let r = cat.run_claim("sigma").unwrap();
    assert!(!r.passed);
    let failing = cat.run().iter().filter(|r| !r.passed).count();
    assert!(failing > REFUTED.len());
}
