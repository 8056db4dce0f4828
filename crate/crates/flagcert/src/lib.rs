//! Exact-arithmetic toolkit around the codegree threshold of the 3-graph
//! K4⁻ (four vertices, three edges).
//!
//! Everything here is finite and exact: 3-graphs on at most 9 vertices,
//! canonical forms by brute-force relabeling, flag densities as rationals,
//! tournaments and their cyclic-triangle constructions, skew Hadamard
//! matrices, and a verifier for rational sum-of-squares certificates of the
//! identity N − 3E = CODEGREE + TIGHT-PATH + POSITIVE-DEFINITE + SLACK over
//! the 8157 K4⁻-free 7-vertex 3-graphs. No floating point is used anywhere.
//!
//! The crate is organized along the pipeline:
//!
//! * [`hypergraph`] — 3-graphs, canonical forms, enumeration of 𝓕ₖ;
//! * [`flags`] — types, rooted flags, tight-path flag sets;
//! * [`density`] — subgraph and flag-pair densities, exact rationals;
//! * [`expressions`] — the codegree, tight-path and quadratic expressions
//!   as linear combinations over 𝓕₇;
//! * [`linalg`] — exact rational matrices and positive definiteness;
//! * [`certificate`] — certificate payloads, parsing, slack assembly and
//!   the verdict;
//! * [`tournaments`] — tournaments, C(T), codegree statistics, the
//!   skew-Hadamard bridge, Paley tournaments;
//! * [`constructions`] — the lower-bound constructions (H₆ blow-ups,
//!   seeded random tournaments, vertex deletion);
//! * [`io`] — the `#flagcert` text file formats shared by all tools.

pub mod certificate;
pub mod constructions;
pub mod density;
pub mod expressions;
pub mod flags;
pub mod hypergraph;
pub mod hadamard;
pub mod io;
pub mod linalg;
pub mod tournaments;

pub use hypergraph::{CanonicalForm, GraphError, ThreeGraph, Triple};



/// Exact rational scalar used across the crate.
pub type Rat = num::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    use num::BigInt;
    Rat::new(BigInt::from(num), BigInt::from(den))
}
