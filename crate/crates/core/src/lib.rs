//! Exact computations with delta-matroids and ribbon graphs.
//!
//! A ribbon graph is described by a signed rotation system: a cyclic order of
//! half-edges at each vertex plus a sign per edge marking half-twisted edges.
//! The edge sets of its spanning quasi-trees form the feasible sets of a
//! delta-matroid, and the delta-matroid calculus (twists, minors, spreads,
//! rank functions) mirrors the ribbon-graph operations (partial duals, minors,
//! partial petrials). On top of both sit the Tutte, Las Vergnas,
//! Bollobas-Riordan and Krushkal polynomials, computed exactly.
//!
//! Ground sets are capped at 24 elements; subset-expansion polynomials at 16.
//! Everything here enumerates subsets, so costs are exponential in the number
//! of edges. That is intentional: the crate targets desk-scale exact
//! verification, not asymptotics.

pub mod dm;
pub mod elements;
pub mod poly;
pub mod rep;
pub mod ribbon;

pub use dm::{DeltaMatroid, ElementClass, Matroid};
pub use elements::{ElementMap, Subset};
pub use poly::LaurentPoly;
pub use rep::Gf2Matrix;
pub use ribbon::RibbonGraph;
