//! Exact multivariate Laurent polynomials and the four topological
//! polynomials of delta-matroids.

pub mod identities;
mod laurent;
mod topo;

pub use laurent::{rat_pow, sqrt_exact, EvalError, LaurentPoly, Mono, Var, VAR_COUNT, VAR_NAMES};
pub use topo::{
    bollobas_riordan, br_two_var, krushkal, krushkal_rank_route, las_vergnas, tutte, PolyError,
    SigmaCache, MAX_POLY_ELEMENTS,
};

#[cfg(test)]
mod tests;
