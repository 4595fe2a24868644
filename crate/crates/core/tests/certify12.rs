//! End-to-end certification of the discriminant-12 Weierstrass curve from
//! the shipped data: the pointwise run, the Q(t) family run, specialization
//! consistency, the cuspidal polynomial and the stable limit.

mod common;

use genus2rm::ela::{self, Factorization};
use genus2rm::field::{big, bigfrac, Field, Rat};
use genus2rm::genus2::{self, QuinticModel};
use genus2rm::ratfun::RatFun;
use genus2rm::{cusps, modulardata, reports};

fn cert() -> modulardata::CertInput {
    modulardata::load_cert(&common::data_dir().join("cert").join("cert12.json")).unwrap()
}

#[test]
fn point_run_reproduces_the_eigenforms() {
    let cert = cert();
    assert_eq!(cert.point_a.to_vec(), vec![big(24), big(52), big(-8), big(-12), big(-2)]);
    assert_eq!(cert.point_b.to_vec(), vec![bigfrac(-3, 8), bigfrac(-1, 2)]);
    let model = QuinticModel::new(cert.point_a.clone());
    let record = ela::ela_run(&cert.ic, &model, &cert.point_b).unwrap();
    assert!(record.is_certified(), "{:?}", record.status);
    assert!(record.ela1_ok && record.ela2_ok);
    // kernel is exactly (0, 1, 0) with the deterministic pivot rule
    let x = record.x.as_ref().unwrap();
    assert_eq!(x.to_vec(), vec![big(0), big(1), big(0)]);
    match record.factorization.as_ref().unwrap() {
        Factorization::Pair { lambda, forms } => {
            assert_eq!(lambda, &big(1));
            // (1*w + 0) dw/z = w dw/z and (0*w + 1) dw/z = dw/z
            assert_eq!(forms[0], (big(1), big(0)));
            assert_eq!(forms[1], (big(0), big(1)));
        }
        other => panic!("expected a factored pair, got {other:?}"),
    }
    // determinism: a second run is identical
    let again = ela::ela_run(&cert.ic, &model, &cert.point_b).unwrap();
    assert_eq!(
        modulardata::record_to_json(&record),
        modulardata::record_to_json(&again)
    );
}

#[test]
fn point_run_rejects_a_wrong_surface_point() {
    let cert = cert();
    let model = QuinticModel::new(cert.point_a.clone());
    let record = ela::ela_run(&cert.ic, &model, &[big(0), big(0)]).unwrap();
    assert!(!record.is_certified());
    assert!(!record.ela1_ok);
}

#[test]
fn family_run_certifies_over_the_function_field() {
    let cert = cert();
    let registry =
        modulardata::load_registry(&common::data_dir().join("registry")).unwrap();
    let w12 = &registry[&12].w_poly;
    let (report, family) = reports::certify_family(&cert, Some(w12)).unwrap();
    assert_eq!(report.status, reports::Status::Pass, "{:?}", report.to_json());
    assert!(family.wd_identity_ok);
    assert!(family.nonconstant_ok);
    assert_eq!(family.fiber_degree, Some(1), "birationality probe");
    // the family kernel is the constant line (0 : 1 : 0)
    let x = family.record.x.as_ref().unwrap();
    assert!(x[0].is_zero() && x[2].is_zero() && !x[1].is_zero());
    // the bad set is reported
    assert!(family.record.bad_set.is_some());
}

#[test]
fn family_specializations_match_point_runs() {
    let cert = cert();
    let (_, family) = reports::certify_family(&cert, None).unwrap();
    let values: Vec<i64> = vec![1, 2, 3, 4, 5, -1, -3, -4, 7, 11, 13];
    let report = reports::specialization_report(&cert, &family.record, &values).unwrap();
    assert_eq!(report.status, reports::Status::Pass, "{:?}", report.to_json());
    // t = -2 specializes to the anchor point run
    let model = QuinticModel::new(cert.family_a.clone());
    let spec = ela::specialize_and_run(&cert.ic, &model, &cert.family_b, &big(-2))
        .unwrap()
        .unwrap();
    assert_eq!(spec.a.to_vec(), vec![big(24), big(52), big(-8), big(-12), big(-2)]);
    assert_eq!(spec.b.to_vec(), vec![bigfrac(-3, 8), bigfrac(-1, 2)]);
    assert!(spec.is_certified());
}

#[test]
fn perturbed_family_fails_ela1() {
    let cert = cert();
    // a(t) + (t, 0, 0, 0, 0) leaves the certified locus
    let mut a = cert.family_a.clone();
    let t = RatFun::var(Rat::from_int(0));
    a[0] = a[0].add(&t);
    let model = QuinticModel::new(a);
    let witness = RatFun::constant(Rat::from_int(0));
    let icd_t = cert.ic.lift(&witness, |c| RatFun::constant(c.clone()));
    let record = ela::ela_run(&icd_t, &model, &cert.family_b).unwrap();
    assert!(!record.is_certified());
    assert!(!record.ela1_ok);
}

#[test]
fn constant_family_has_no_cuspidal_polynomial() {
    let cert = cert();
    // freeze the family at t = 1: a constant family certifies pointwise
    // but has no cusps in the parameter line
    let a0: Vec<RatFun<Rat>> = cert
        .family_a
        .iter()
        .map(|f| RatFun::constant(f.eval_at(&big(1)).unwrap()))
        .collect();
    let b0 = [
        RatFun::constant(cert.family_b[0].eval_at(&big(1)).unwrap()),
        RatFun::constant(cert.family_b[1].eval_at(&big(1)).unwrap()),
    ];
    let witness = RatFun::constant(Rat::from_int(0));
    let icd_t = cert.ic.lift(&witness, |c| RatFun::constant(c.clone()));
    let model = QuinticModel::new([
        a0[0].clone(),
        a0[1].clone(),
        a0[2].clone(),
        a0[3].clone(),
        a0[4].clone(),
    ]);
    let record = ela::ela_run(&icd_t, &model, &b0).unwrap();
    assert!(cusps::cuspidal_polynomial(&record).is_err());
}

#[test]
fn cuspidal_polynomial_and_prime_support() {
    let cert = cert();
    let registry =
        modulardata::load_registry(&common::data_dir().join("registry")).unwrap();
    let report = reports::cusp_poly_report(&cert, &registry[&12]).unwrap();
    assert_eq!(report.status, reports::Status::Pass, "{:?}", report.to_json());
    // the polynomial itself: t^2 + 10t + 13, disc 48 = 2^4 * 3
    let witness = RatFun::constant(Rat::from_int(0));
    let icd_t = cert.ic.lift(&witness, |c| RatFun::constant(c.clone()));
    let model = QuinticModel::new(cert.family_a.clone());
    let record = ela::ela_run_family(&icd_t, &model, &cert.family_b).unwrap();
    let c = cusps::cuspidal_polynomial(&record).unwrap();
    assert_eq!(
        c.coeffs().to_vec(),
        vec![big(13), big(10), big(1)]
    );
    assert_eq!(c.discriminant().unwrap(), big(48));
}

#[test]
fn stable_limit_matches_the_prototype_formula_not_the_display() {
    let cert = cert();
    let report = reports::stable_limit_report(&cert).unwrap();
    assert_eq!(report.status, reports::Status::Pass, "{:?}", report.to_json());
    let detail = &report.checks[0].detail;
    assert_eq!(detail["matches_display_96_289_8092_0"], false);
    assert_eq!(detail["matches_prototype_formula_at_0_1_3_0"], true);
    // the exact limit representative
    let witness = RatFun::constant(Rat::from_int(0));
    let icd_t = cert.ic.lift(&witness, |c| RatFun::constant(c.clone()));
    let model = QuinticModel::new(cert.family_a.clone());
    let record = ela::ela_run_family(&icd_t, &model, &cert.family_b).unwrap();
    let limit = cusps::stable_limit_at_infinity(&record).unwrap();
    // representative (3072 : 147456 : 132120576 : 0) = 32-weighted scaling
    // of (96 : 144 : 4032 : 0)
    let expected = genus2::WeightedPoint::new(big(96), big(144), big(4032), big(0))
        .scale_by_mu(&big(32));
    assert_eq!(limit.i2, expected.i2);
    assert_eq!(limit.i4, expected.i4);
    assert_eq!(limit.i6, expected.i6);
    assert!(limit.i10.is_zero());
}

#[test]
fn chart_system_admits_the_known_tangent_solutions() {
    // the published deformation directions solve the chart-level system
    let cert = cert();
    let model = QuinticModel::new(cert.point_a.clone());
    let ja = genus2::ic_jacobian(&model).unwrap();
    let jb = cert.ic.chart_jacobian(&cert.point_b).unwrap();
    let vr: Vec<Rat> = [80, -32, 112, -16, -12].iter().map(|&v| big(v)).collect();
    let vs: Vec<Rat> = [36, -6, 76, 13, -9].iter().map(|&v| big(v)).collect();
    let ja_vr = ja.mul_vec(&vr);
    let ja_vs = ja.mul_vec(&vs);
    for i in 0..3 {
        assert_eq!(&ja_vr[i], jb.at(i, 0), "v_r component {i}");
        assert_eq!(&ja_vs[i], jb.at(i, 1), "v_s component {i}");
    }
}
