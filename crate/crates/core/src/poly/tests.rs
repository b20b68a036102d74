use super::identities::*;
use super::*;
use crate::dm::DeltaMatroid;

fn dm(labels: &[&str], feasible: &[&[&str]]) -> DeltaMatroid {
    DeltaMatroid::new(labels.to_vec(), feasible.iter().copied()).unwrap()
}

fn bridge() -> DeltaMatroid {
    dm(&["e"], &[&["e"]])
}

fn trivial_loop() -> DeltaMatroid {
    dm(&["e"], &[&[]])
}

fn x0() -> DeltaMatroid {
    dm(&["e"], &[&[], &["e"]])
}

fn il() -> DeltaMatroid {
    dm(&["a", "b"], &[&[], &["a", "b"]])
}

fn u12() -> DeltaMatroid {
    dm(&["1", "2"], &[&["1"], &["2"]])
}

#[test]
fn tutte_fixtures() {
    assert_eq!(tutte(&bridge()).unwrap().to_canonical_string(), "x");
    assert_eq!(tutte(&trivial_loop()).unwrap().to_canonical_string(), "y");
    // D(G0) = X0 has the single loop matroid below, so its Tutte polynomial
    // is y as well.
    assert_eq!(tutte(&x0()).unwrap().to_canonical_string(), "y");
}

#[test]
fn bollobas_riordan_fixtures() {
    assert_eq!(
        bollobas_riordan(&x0()).unwrap().to_canonical_string(),
        "1 + y*z*w"
    );
    assert_eq!(
        bollobas_riordan(&trivial_loop()).unwrap().to_canonical_string(),
        "1 + y"
    );
    assert_eq!(
        bollobas_riordan(&il()).unwrap().to_canonical_string(),
        "1 + 2*y + y^2*z^2"
    );
}

#[test]
fn las_vergnas_fixtures() {
    assert_eq!(las_vergnas(&x0()).unwrap().to_canonical_string(), "1 + z");
    // For matroids L = T with no z at all.
    assert_eq!(las_vergnas(&u12()).unwrap(), tutte(&u12()).unwrap());
}

#[test]
fn krushkal_fixture_bridge() {
    assert_eq!(krushkal(&bridge()).unwrap().to_canonical_string(), "x");
    assert_eq!(
        krushkal_rank_route(&bridge()).unwrap().to_canonical_string(),
        "x"
    );
}

#[test]
fn br2_shifted_form() {
    // Shifted form of X0: sigma(∅)=0, sigma({e})=1/2 give
    // x^(1/2) + y^(1/2) after the (x,y) -> (x+1,y+1) shift.
    assert_eq!(
        br_two_var(&x0()).unwrap().to_canonical_string(),
        "x^(1/2) + y^(1/2)"
    );
}

#[test]
fn sigma_cache_values() {
    let c = SigmaCache::new(&x0()).unwrap();
    assert_eq!(c.sigma2, vec![0, 1]);
    assert_eq!(c.width, vec![0, 1]);
    assert_eq!(c.odd, vec![0, 1]);
    assert_eq!(c.rho, vec![1, 1]);
}

#[test]
fn ground_size_cap() {
    let labels: Vec<String> = (0..17).map(|i| format!("e{i:02}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let sets = [refs.as_slice()];
    let d = DeltaMatroid::new(labels.clone(), sets.iter().copied()).unwrap();
    assert_eq!(tutte(&d).unwrap_err(), PolyError::GroundTooLarge(17));
}

#[test]
fn identity_suite_smoke() {
    for d in [bridge(), trivial_loop(), x0(), il(), u12()] {
        assert!(tutte_from_krushkal_holds(&d).unwrap(), "6.3(1) on {d:?}");
        assert!(lv_from_krushkal_holds(&d).unwrap(), "6.3(2) on {d:?}");
        assert!(br_from_krushkal_holds(&d).unwrap(), "6.3(3) on {d:?}");
        assert!(krushkal_duality_holds(&d).unwrap(), "6.4(1) on {d:?}");
        assert!(br_duality_holds(&d).unwrap(), "6.4(2) on {d:?}");
        assert!(lv_duality_holds(&d).unwrap(), "6.4(3) on {d:?}");
        assert!(lv_specialization_holds(&d).unwrap(), "LV spec on {d:?}");
        assert!(br2_normalization_holds(&d).unwrap(), "norm on {d:?}");
        assert!(br2_dual_swap_holds(&d).unwrap(), "6.2(2) on {d:?}");
        assert!(br2_counting_evaluations_hold(&d).unwrap(), "6.2(3-6) on {d:?}");
        assert!(krushkal_routes_agree(&d).unwrap(), "routes on {d:?}");
        let grid: &[i64] = if d.is_even() { &[-1, 2, 3] } else { &[1, 4, 9] };
        for &u in grid {
            for &v in grid {
                assert!(
                    br2_generating_identity_at(&d, u, v).unwrap(),
                    "6.2(1) on {d:?} at ({u}, {v})"
                );
            }
        }
    }
}

#[test]
fn matroid_collapse() {
    assert!(matroid_collapse_holds(&u12()).unwrap());
    assert!(matroid_collapse_holds(&bridge()).unwrap());
    assert!(matroid_collapse_holds(&DeltaMatroid::trivial()).unwrap());
}

#[test]
fn krushkal_numeric_specialization_at_squares() {
    // R(D; 3, 4, z, 1) = 4^(w/2) K(D; 3, 4, 4^(1/2) z, 4^(-1/2)) as
    // polynomials in z, checked coefficient-wise through evaluation at
    // several z values.
    use num::bigint::BigInt;
    use num::rational::BigRational;
    let d = x0();
    let r = bollobas_riordan(&d).unwrap().with_w_one();
    let k = krushkal(&d).unwrap();
    for z in [1i64, 2, 3, 5] {
        let rat = |n: i64| BigRational::from(BigInt::from(n));
        let mut vals: [Option<BigRational>; VAR_COUNT] = Default::default();
        vals[Var::X as usize] = Some(rat(3));
        vals[Var::Y as usize] = Some(rat(4));
        vals[Var::Z as usize] = Some(rat(z));
        let lhs = r.evaluate(&vals).unwrap();
        let mut kvals: [Option<BigRational>; VAR_COUNT] = Default::default();
        kvals[Var::X as usize] = Some(rat(3));
        kvals[Var::Y as usize] = Some(rat(4));
        kvals[Var::A as usize] = Some(rat(2 * z)); // 4^(1/2) z
        kvals[Var::B as usize] = Some(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let w = d.width() as i32;
        let rhs = rat_pow(&rat(2), w) * k.evaluate(&kvals).unwrap();
        assert_eq!(lhs, rhs, "at z = {z}");
    }
}
