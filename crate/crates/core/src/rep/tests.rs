use super::catalog;
use super::*;
use crate::dm::DeltaMatroid;
use crate::ribbon::RibbonGraph;

fn matrix(rows: &[&str]) -> Gf2Matrix {
    let text = format!("{}\n{}\n", rows.len(), rows.join("\n"));
    Gf2Matrix::parse(&text).unwrap()
}

#[test]
fn nonsingular_small_cases() {
    let one = matrix(&["1"]);
    assert!(one.principal_nonsingular(0));
    assert!(one.principal_nonsingular(1));
    let zero = matrix(&["0"]);
    assert!(zero.principal_nonsingular(0));
    assert!(!zero.principal_nonsingular(1));
    let swap = matrix(&["01", "10"]);
    assert!(!swap.principal_nonsingular(0b01));
    assert!(!swap.principal_nonsingular(0b10));
    assert!(swap.principal_nonsingular(0b11));
}

#[test]
fn symmetry_is_enforced() {
    let labels = crate::elements::ElementMap::new(["a", "b"]).unwrap();
    assert_eq!(
        Gf2Matrix::new(labels.clone(), vec![0b10, 0b00]).unwrap_err(),
        RepError::NonSymmetric
    );
    assert_eq!(
        Gf2Matrix::new(labels, vec![0b00]).unwrap_err(),
        RepError::NotSquare
    );
}

#[test]
fn dm_from_matrix_examples() {
    // [1] gives X0.
    assert_eq!(matrix(&["1"]).delta_matroid().feasible(), &[0, 1]);
    // [0] gives the single trivial loop.
    assert_eq!(matrix(&["0"]).delta_matroid().feasible(), &[0]);
    // The swap matrix gives the interlaced-loop delta-matroid.
    assert_eq!(matrix(&["01", "10"]).delta_matroid().feasible(), &[0b00, 0b11]);
    // Outputs satisfy the exchange axiom.
    assert!(matrix(&["11", "10"]).delta_matroid().is_delta_matroid());
}

#[test]
fn interlacement_matrix_examples() {
    let g0 = catalog::g0();
    let m = interlacement_matrix(&g0).unwrap();
    assert!(m.entry(0, 0));
    assert_eq!(m.delta_matroid(), g0.delta_matroid());

    let il = RibbonGraph::from_literals(
        &[("v", &["h1", "h2", "h3", "h4"])],
        &[
            ("a", "h1", "h3", crate::ribbon::Sign::Plus),
            ("b", "h2", "h4", crate::ribbon::Sign::Plus),
        ],
    )
    .unwrap();
    let m = interlacement_matrix(&il).unwrap();
    assert!(!m.entry(0, 0) && !m.entry(1, 1));
    assert!(m.entry(0, 1) && m.entry(1, 0));
    assert_eq!(m.delta_matroid(), il.delta_matroid());

    // Two non-interlaced orientable loops: the zero matrix.
    let bouquet = RibbonGraph::from_literals(
        &[("v", &["h1", "h2", "h3", "h4"])],
        &[
            ("a", "h1", "h2", crate::ribbon::Sign::Plus),
            ("b", "h3", "h4", crate::ribbon::Sign::Plus),
        ],
    )
    .unwrap();
    let m = interlacement_matrix(&bouquet).unwrap();
    assert!(!m.entry(0, 1));
    assert_eq!(m.delta_matroid().feasible(), &[0]);

    let not_one_vertex = RibbonGraph::from_literals(
        &[("u", &["h1"]), ("v", &["h2"])],
        &[("e", "h1", "h2", crate::ribbon::Sign::Plus)],
    )
    .unwrap();
    assert_eq!(
        interlacement_matrix(&not_one_vertex).unwrap_err(),
        RepError::NotOneVertex(2)
    );
}

#[test]
fn ribbon_graphic_delta_matroids_are_binary() {
    for g in [catalog::g0(), catalog::g1(), catalog::g2()] {
        let w = binary_witness(&g.delta_matroid()).unwrap().expect("binary");
        assert_eq!(w.matrix.delta_matroid(), g.delta_matroid().twist(w.twist));
    }
}

#[test]
fn catalog_excluded_minors_are_not_binary() {
    for name in ["S1", "S2", "S3", "S4", "S5"] {
        let d = catalog_entry(name).unwrap();
        assert!(d.is_delta_matroid(), "{name} satisfies the axiom");
        assert!(!is_binary(&d).unwrap(), "{name} must not be binary");
    }
}

#[test]
fn catalog_lookup() {
    assert!(catalog_entry("X0").unwrap().is_isomorphic(&catalog::dg0()));
    assert!(catalog_entry("nope").is_none());
    assert_eq!(catalog_names().len(), 9);
    // DG1 computed from its rotation system.
    let dg1 = catalog::dg1();
    assert_eq!(dg1.size(), 3);
    assert_eq!(dg1.feasible().len(), 4);
}

#[test]
fn matrix_text_roundtrip() {
    let m = matrix(&["110", "101", "011"]);
    let again = Gf2Matrix::parse(&m.to_text()).unwrap();
    assert_eq!(m, again);
    assert!(Gf2Matrix::parse("2\n01\n1\n").is_err());
    assert!(Gf2Matrix::parse("1\nx\n").is_err());
}
