use hls_core::hls::hls_series;
use hls_core::special::*;

#[test]
fn littlewood_products() {
    for n in 1..=3 {
        let r = littlewood_checks(&hls_series(n).unwrap()).unwrap();
        assert!(r.schur_identity && r.x1_product, "n = {n}: {r:?}");
    }
}

#[test]
fn reciprocity() {
    for n in 1..=3 {
        let r = reciprocity_checks(&hls_series(n).unwrap()).unwrap();
        assert!(r.affs_in && r.affs_pr && r.hecke, "n = {n}: {r:?}");
    }
}

#[test]
fn hecke_hyperoctahedral_invariance() {
    for n in 1..=3 {
        assert!(hecke_b_invariance(&hls_series(n).unwrap()).unwrap(), "n = {n}");
    }
}

#[test]
fn hecke_numerator_shape() {
    for n in 1..=4 {
        let s = hls_series(n).unwrap();
        let v = hecke_vanishing(&s).unwrap();
        assert!(v.degree_ok && v.linear_zero && v.second_highest_but_one_zero, "n = {n}: {v:?}");
        assert!(hecke_palindromic(&s).unwrap(), "n = {n}");
    }
}

#[test]
fn specializations() {
    for n in 1..=3 {
        let s = hls_series(n).unwrap();
        assert!(upsilon_check(&s).unwrap(), "upsilon n = {n}");
        assert!(bgs_check(&s).unwrap(), "bgs n = {n}");
        assert!(zeta_check(&s).unwrap(), "zeta n = {n}");
    }
}

#[test]
fn igusa_and_weak_order() {
    for n in 1..=4 {
        let s = hls_series(n).unwrap();
        assert!(igusa_check(&s).unwrap(), "igusa n = {n}");
        assert!(weak_order_check(&s).unwrap(), "weak order n = {n}");
    }
}

#[test]
fn perturbed_series_is_rejected() {
    use hls_core::algebra::parse_poly;
    let mut s = hls_series(2).unwrap();
    s.numerator = &s.numerator + &parse_poly("Y X_{1} X_{2}").unwrap();
    let r = reciprocity_checks(&s).unwrap();
    assert!(!(r.affs_in && r.affs_pr && r.hecke));
    assert!(!littlewood_checks(&s).unwrap().x1_product);
    assert!(!upsilon_check(&s).unwrap() || !bgs_check(&s).unwrap() || !zeta_check(&s).unwrap());
}
