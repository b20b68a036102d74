//! Named excluded-minor delta-matroids.
//!
//! `S1..S5` are the excluded minors (up to twists) for binary
//! delta-matroids. `X0` is the excluded minor for evenness. `DG0`, `DG1`,
//! `DG2` are the delta-matroids of the three ribbon graphs excluded from
//! partial duals of plane graphs; the latter two are computed from their
//! rotation systems rather than written out.

use crate::dm::DeltaMatroid;
use crate::ribbon::{RibbonGraph, Sign};

fn dm(labels: &[&str], feasible: &[&[&str]]) -> DeltaMatroid {
    DeltaMatroid::new(labels.to_vec(), feasible.iter().copied()).expect("valid catalog entry")
}

pub fn s1() -> DeltaMatroid {
    dm(
        &["1", "2", "3"],
        &[&[], &["1", "2"], &["1", "3"], &["2", "3"], &["1", "2", "3"]],
    )
}

pub fn s2() -> DeltaMatroid {
    dm(
        &["1", "2", "3"],
        &[
            &[],
            &["1"],
            &["2"],
            &["3"],
            &["1", "2"],
            &["1", "3"],
            &["2", "3"],
        ],
    )
}

pub fn s3() -> DeltaMatroid {
    dm(
        &["1", "2", "3"],
        &[
            &[],
            &["2"],
            &["3"],
            &["1", "2"],
            &["1", "3"],
            &["1", "2", "3"],
        ],
    )
}

pub fn s4() -> DeltaMatroid {
    dm(
        &["1", "2", "3", "4"],
        &[
            &[],
            &["1", "2"],
            &["1", "3"],
            &["1", "4"],
            &["2", "3"],
            &["2", "4"],
            &["3", "4"],
        ],
    )
}

pub fn s5() -> DeltaMatroid {
    dm(
        &["1", "2", "3", "4"],
        &[
            &[],
            &["1", "2"],
            &["1", "4"],
            &["2", "3"],
            &["3", "4"],
            &["1", "2", "3", "4"],
        ],
    )
}

/// `X0 = ({a}, {∅, {a}})`, the excluded minor for even delta-matroids.
pub fn x0() -> DeltaMatroid {
    dm(&["a"], &[&[], &["a"]])
}

/// The single non-orientable loop.
pub fn g0() -> RibbonGraph {
    RibbonGraph::from_literals(&[("v", &["h1", "h2"])], &[("a", "h1", "h2", Sign::Minus)])
        .expect("valid fixture")
}

/// Two vertices joined by three parallel edges, cyclic order `a b c` at each
/// vertex.
pub fn g1() -> RibbonGraph {
    RibbonGraph::from_literals(
        &[("u", &["a1", "b1", "c1"]), ("v", &["a2", "b2", "c2"])],
        &[
            ("a", "a1", "a2", Sign::Plus),
            ("b", "b1", "b2", Sign::Plus),
            ("c", "c1", "c2", Sign::Plus),
        ],
    )
    .expect("valid fixture")
}

/// One vertex with three pairwise interlaced orientable loops, cyclic order
/// `a b c a b c`.
pub fn g2() -> RibbonGraph {
    RibbonGraph::from_literals(
        &[("v", &["a1", "b1", "c1", "a2", "b2", "c2"])],
        &[
            ("a", "a1", "a2", Sign::Plus),
            ("b", "b1", "b2", Sign::Plus),
            ("c", "c1", "c2", Sign::Plus),
        ],
    )
    .expect("valid fixture")
}

pub fn dg0() -> DeltaMatroid {
    g0().delta_matroid()
}

pub fn dg1() -> DeltaMatroid {
    g1().delta_matroid()
}

pub fn dg2() -> DeltaMatroid {
    g2().delta_matroid()
}

pub fn catalog_names() -> &'static [&'static str] {
    &["S1", "S2", "S3", "S4", "S5", "X0", "DG0", "DG1", "DG2"]
}

/// Looks up a catalog delta-matroid by name.
pub fn catalog_entry(name: &str) -> Option<DeltaMatroid> {
    match name {
        "S1" => Some(s1()),
        "S2" => Some(s2()),
        "S3" => Some(s3()),
        "S4" => Some(s4()),
        "S5" => Some(s5()),
        "X0" => Some(x0()),
        "DG0" => Some(dg0()),
        "DG1" => Some(dg1()),
        "DG2" => Some(dg2()),
        _ => None,
    }
}
