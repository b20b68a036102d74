use super::ops::{disjoint_union, join};
use super::*;

fn lo() -> RibbonGraph {
    RibbonGraph::from_literals(&[("v", &["h1", "h2"])], &[("e", "h1", "h2", Sign::Plus)]).unwrap()
}

fn g0() -> RibbonGraph {
    RibbonGraph::from_literals(&[("v", &["h1", "h2"])], &[("e", "h1", "h2", Sign::Minus)]).unwrap()
}

fn b1() -> RibbonGraph {
    RibbonGraph::from_literals(
        &[("u", &["h1"]), ("v", &["h2"])],
        &[("e", "h1", "h2", Sign::Plus)],
    )
    .unwrap()
}

fn il() -> RibbonGraph {
    RibbonGraph::from_literals(
        &[("v", &["h1", "h2", "h3", "h4"])],
        &[("a", "h1", "h3", Sign::Plus), ("b", "h2", "h4", Sign::Plus)],
    )
    .unwrap()
}

#[test]
fn build_validates() {
    assert!(matches!(
        RibbonGraph::from_literals(&[("v", &["h1"])], &[]),
        Err(RibbonError::DanglingHalfEdge(_))
    ));
    assert!(matches!(
        RibbonGraph::from_literals(
            &[("v", &["h1", "h2", "h3"])],
            &[("e", "h1", "h2", Sign::Plus), ("f", "h2", "h3", Sign::Plus)]
        ),
        Err(RibbonError::MalformedRotation(_))
    ));
    assert!(matches!(
        RibbonGraph::from_literals(&[("v", &["h1", "h2"])], &[("e", "h1", "hx", Sign::Plus)]),
        Err(RibbonError::DanglingHalfEdge(_))
    ));
}

#[test]
fn annulus_and_moebius_parameters() {
    // Orientable loop: the surface is an annulus.
    let p = lo().sub_params(1);
    assert_eq!((p.f, p.gamma, p.t), (2, 0, 0));
    // Non-orientable loop: a Moebius band.
    let p = g0().sub_params(1);
    assert_eq!((p.f, p.gamma, p.t), (1, 1, 1));
    // Bridge with no edges: two isolated vertex discs.
    let p = b1().sub_params(0);
    assert_eq!((p.f, p.k, p.r), (2, 2, 0));
}

#[test]
fn quasi_tree_families() {
    assert_eq!(g0().spanning_quasi_trees(), vec![0b0, 0b1]);
    assert_eq!(b1().spanning_quasi_trees(), vec![0b1]);
    assert_eq!(il().spanning_quasi_trees(), vec![0b00, 0b11]);
    // F_1(L_o) = {{e}}.
    let (_, f1) = lo().feasible_families_n(1);
    assert_eq!(f1, vec![0b1]);
}

#[test]
fn interlaced_loops_are_a_torus() {
    let p = il().params();
    assert_eq!((p.f, p.gamma, p.t), (1, 2, 0));
    assert!(il().is_orientable());
    assert!(!g0().is_orientable());
}

#[test]
fn delta_matroid_of_g0_is_x0() {
    let d = g0().delta_matroid();
    assert_eq!(
        d.to_dm_string(),
        "ground: e\nfeasible:\nfeasible: e\n"
    );
}

/// Profile of every spanning subgraph; partial duals are compared through
/// this rather than through graph structure.
fn profile(g: &RibbonGraph) -> Vec<(Subset, SubParams)> {
    (0..=g.full_edge_set()).map(|a| (a, g.sub_params(a))).collect()
}

#[test]
fn partial_dual_of_bridge_is_trivial_loop() {
    let d = b1().partial_dual(0b1);
    assert_eq!(d.vertex_count(), 1);
    assert_eq!(d.edge_count(), 1);
    assert_eq!(d.edge_sign("e").unwrap(), Sign::Plus);
    assert!(d.is_loop_edge("e").unwrap());
    // Trivial orientable loop: the annulus profile.
    assert_eq!(profile(&d), profile(&lo()));
}

#[test]
fn partial_dual_of_nonorientable_loop_is_itself() {
    let d = g0().partial_dual(0b1);
    assert_eq!(profile(&d), profile(&g0()));
}

#[test]
fn partial_dual_identity_and_group_law() {
    for g in [lo(), g0(), b1(), il()] {
        assert_eq!(profile(&g.partial_dual(0)), profile(&g));
        let full = g.full_edge_set();
        for a in 0..=full {
            for b in 0..=full {
                let lhs = g.partial_dual(a).partial_dual(b);
                let rhs = g.partial_dual(a ^ b);
                assert_eq!(profile(&lhs), profile(&rhs));
                assert_eq!(lhs.delta_matroid(), rhs.delta_matroid());
            }
        }
    }
}

#[test]
fn partial_dual_is_twist_on_delta_matroids() {
    for g in [lo(), g0(), b1(), il()] {
        for a in 0..=g.full_edge_set() {
            assert_eq!(g.partial_dual(a).delta_matroid(), g.delta_matroid().twist(a));
        }
    }
}

#[test]
fn petrial_flips_signs_and_is_involutive() {
    let p = lo().partial_petrial(0b1);
    assert_eq!(p.edge_sign("e").unwrap(), Sign::Minus);
    assert_eq!(profile(&p), profile(&g0()));
    assert_eq!(p.partial_petrial(0b1), lo());
}

#[test]
fn petrial_matches_plus_on_delta_matroids() {
    for g in [lo(), g0(), b1(), il()] {
        for a in 0..=g.full_edge_set() {
            assert_eq!(
                g.partial_petrial(a).delta_matroid(),
                g.delta_matroid().plus(a).unwrap()
            );
        }
    }
}

#[test]
fn contraction_examples() {
    // Contracting a bridge leaves one isolated vertex.
    let c = b1().contract_edge("e").unwrap();
    assert_eq!((c.vertex_count(), c.edge_count()), (1, 0));
    // Contracting a non-orientable loop also leaves a single vertex: the
    // boundary of its Moebius neighbourhood is one curve.
    let c = g0().contract_edge("e").unwrap();
    assert_eq!((c.vertex_count(), c.edge_count()), (1, 0));
    // Contracting one of two interlaced loops: b becomes a bridge, matching
    // D(IL)/a = {{b}}.
    let c = il().contract_edge("a").unwrap();
    assert_eq!(c.delta_matroid(), il().delta_matroid().contract("a").unwrap());
    assert_eq!((c.vertex_count(), c.edge_count()), (2, 1));
}

#[test]
fn deletion_and_minors_match_dm() {
    for g in [lo(), g0(), b1(), il()] {
        for label in g.edge_labels().map(str::to_string).collect::<Vec<_>>() {
            assert_eq!(
                g.delete_edge(&label).unwrap().delta_matroid(),
                g.delta_matroid().delete(&label).unwrap()
            );
            assert_eq!(
                g.contract_edge(&label).unwrap().delta_matroid(),
                g.delta_matroid().contract(&label).unwrap()
            );
        }
    }
}

#[test]
fn vertex_deletion() {
    let g = b1().delete_vertex("u").unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    assert!(matches!(
        b1().delete_vertex("zz"),
        Err(RibbonError::UnknownVertex(_))
    ));
}

#[test]
fn two_connectivity() {
    assert!(b1().is_2_connected());
    assert!(il().is_2_connected());
    let du = disjoint_union(&lo(), &lo());
    assert!(!du.is_2_connected());
    // Two trivial loops on one vertex form a join.
    let j = join(&lo(), "v", &lo(), "v").unwrap();
    assert_eq!(j.vertex_count(), 1);
    assert!(!j.is_2_connected());
    // A single vertex is 2-connected by convention.
    let dot = RibbonGraph::from_literals(&[("v", &[])], &[]).unwrap();
    assert!(dot.is_2_connected());
}

#[test]
fn quasi_tree_duality_lemma() {
    // A is a quasi-tree of G of genus gamma iff the complement is one of G*
    // of genus gamma(G) - gamma.
    for g in [lo(), g0(), b1(), il()] {
        let dual = g.geometric_dual();
        let full = g.full_edge_set();
        let total = g.params().gamma;
        let qts: std::collections::BTreeSet<Subset> =
            g.spanning_quasi_trees().into_iter().collect();
        let dual_qts: std::collections::BTreeSet<Subset> =
            dual.spanning_quasi_trees().into_iter().collect();
        for a in 0..=full {
            let in_g = qts.contains(&a);
            let in_dual = dual_qts.contains(&(full & !a));
            assert_eq!(in_g, in_dual);
            if in_g {
                let ga = g.sub_params(a).gamma;
                let gb = dual.sub_params(full & !a).gamma;
                assert_eq!(ga + gb, total);
                assert!(ga <= total);
            }
        }
    }
}

#[test]
fn disconnected_graphs_use_spanning_convention() {
    let du = disjoint_union(&lo(), &b1());
    let d = du.delta_matroid();
    // Quasi-trees must span both components: the loop contributes the empty
    // set, the bridge contributes its edge.
    assert_eq!(d.feasible().len(), 1);
    assert_eq!(du.params().k, 2);
}
