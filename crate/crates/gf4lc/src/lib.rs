//! Classification of self-dual additive codes over GF(4) up to equivalence.
//!
//! A self-dual additive code over GF(4) of length `n` is a GF(2)-linear
//! subgroup of GF(4)^n with 2^n elements that equals its dual under the
//! Hermitian trace inner product. Every such code is equivalent to a *graph
//! code*, generated by `Γ + ωI` for the adjacency matrix `Γ` of a simple
//! undirected graph, and two codes are equivalent exactly when their graphs
//! are related by local complementations and graph isomorphism. Classifying
//! codes therefore reduces to enumerating local-complementation orbits of
//! connected graphs.
//!
//! The crate provides:
//!
//! - exact GF(4) / GF(2)^2 arithmetic, codes as canonical binary row spaces,
//!   weight enumerators and distance bounds ([`gf4`], [`code`]);
//! - bit-packed graphs with local complementation, exact canonical forms and
//!   automorphism groups ([`graph`], [`canon`]);
//! - the standardization algorithm turning any self-dual code into a graph
//!   code, with a replayable transcript ([`standardize`]);
//! - orbit enumeration and the extension-based classification pipeline,
//!   including the Type II (anti-Eulerian) variant ([`orbit`], [`classify`]);
//! - mass-formula verification, Euler transforms, linearity tests and the
//!   binary / Z4 image maps ([`analytics`]);
//! - a line-oriented catalog format and report tables ([`catalog`],
//!   [`tables`]).
//!
//! With the default `parallel` feature, orbit generation and classification
//! distribute work over rayon; disabling it yields a fully sequential build
//! with identical results.

pub mod analytics;
pub mod canon;
pub mod catalog;
pub mod classify;
pub mod code;
pub mod error;
pub mod gf4;
pub mod graph;
pub mod orbit;
mod par;
pub mod standardize;
pub mod tables;
#[cfg(test)]
pub(crate) mod testutil;

/// Hard cap on vector length / vertex count. One machine word comfortably
/// holds both bit halves of a codeword and a full adjacency row.
pub const MAX_N: usize = 20;

pub use canon::{automorphism_count, canonical_form, is_isomorphic, CanonicalForm};
pub use classify::{classify, classify_type2, ClassifyOptions, ExecMode, OrbitRecord};
pub use code::{AdditiveCode, CodeType, WeightEnumerator};
pub use error::Error;
pub use gf4::{Gf4, Gf4Vec};
pub use graph::Graph;
pub use orbit::{lc_orbit, Orbit};
