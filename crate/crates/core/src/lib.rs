//! Exact decision procedures for self-duality of binary quadratic operads
//! generated by a two-dimensional `S2`-module of binary operations.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, reports and the
//! command-line interface live in the `selfdual-cli` crate.
//!
//! Module map:
//! - [`exactmath`]: rationals and dense matrices with exact elimination.
//! - [`freeoperad`]: `F(3)`, the S3 action, the pairing matrices `Σ` and
//!   `Γ(a,b)`, Koszul complements and the duality check.
//! - [`reptheory`]: isotypic decomposition and the explicit embeddings of
//!   the irreducible S3-modules.
//! - [`polyring`]: sparse polynomials over `Q` with a Buchberger engine and
//!   the catalog of symbolic identities.
//! - [`classify`]: Plücker/Segre coordinates, class membership, witnesses
//!   and certificates.
//! - [`varieties`]: degree-3 identities to relation spaces, and presets.
//! - [`catalog`]: the full list of reproducible claims with their checks.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod classify;
pub mod exactmath;
pub mod freeoperad;
pub mod polyring;
pub mod reptheory;
pub mod varieties;

pub use exactmath::{Matrix, Scalar};
pub use freeoperad::{DualityParams, Perm3, RelationSpace, Vector12};
