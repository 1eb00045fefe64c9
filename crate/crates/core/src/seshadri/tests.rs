use super::*;
use crate::catalog::surface_params;
use crate::lattice::rational::{int, rat};

fn t(n: i64) -> SurfaceData {
    surface_params(n).unwrap()
}

fn uni(a: i64, b: i64, d: i64, r: usize) -> DivisorClass {
    DivisorClass::uniform(a, b, d, r)
}

fn on_x(a: i64, b: i64) -> DivisorClass {
    DivisorClass::from_ints(a, b, &[])
}

fn assert_attained(res: &SeshadriResult) {
    let v = res.value.as_ref().unwrap();
    assert!(res.attaining.iter().any(|x| &x.ratio == v), "{res:?}");
}

#[test]
fn multipoint_general_examples() {
    let res = multipoint_general(&on_x(5, 5), 8).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(rat(5, 2)));

    let res = multipoint_general(&on_x(4, 6), 8).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    assert_eq!(res.lower, int(2));
    assert_eq!(res.upper, Bound::sqrt(int(6)));

    let res = multipoint_general(&on_x(3, 3), 7).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);
    assert!(!res.hypothesis("r >= 8").unwrap().holds);

    assert!(matches!(multipoint_general(&uni(3, 3, 1, 2), 8), Err(Error::UnsupportedShape(_))));
}

#[test]
fn multipoint_special_examples() {
    let cfg = PointConfig::new(6, 2, 3, 3, 2, true).unwrap();
    let res = multipoint_special(&on_x(6, 10), &t(5), &cfg).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(2)));
    assert_attained(&res);

    let cfg = PointConfig::new(8, 2, 4, 4, 2, true).unwrap();
    let res = multipoint_special(&on_x(3, 8), &t(2), &cfg).unwrap();
    assert_eq!(res.value, Some(rat(3, 2)));
    assert_attained(&res);

    let cfg = PointConfig::new(9, 3, 3, 3, 3, true).unwrap();
    let res = multipoint_special(&on_x(2, 9), &t(6), &cfg).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    assert_eq!(res.lower, rat(4, 3));
    assert_eq!(res.upper, Bound::rational(int(2)));

    let cfg = PointConfig::new(4, 2, 2, 2, 2, true).unwrap();
    let res = multipoint_special(&on_x(5, 7), &t(4), &cfg).unwrap();
    assert_eq!(res.value, Some(rat(7, 2)));
}

#[test]
fn multipoint_special_hypotheses() {
    // type 2 needs t0 = lA = 4
    let cfg = PointConfig::new(4, 2, 2, 2, 2, true).unwrap();
    let res = multipoint_special(&on_x(3, 8), &t(2), &cfg).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);
    assert!(!res.hypothesis("t0 = lA = 4").unwrap().holds);

    // odd types need the s0 points on a singular fibre
    let cfg = PointConfig::new(6, 2, 3, 3, 2, false).unwrap();
    let res = multipoint_special(&on_x(6, 10), &t(5), &cfg).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);

    // type 1 relaxation lB <= 2 s0
    let cfg = PointConfig::new(6, 2, 3, 3, 4, true).unwrap();
    let res = multipoint_special(&on_x(6, 10), &t(1), &cfg).unwrap();
    assert_eq!(res.value, Some(int(2)));
    let res = multipoint_special(&on_x(6, 10), &t(3), &cfg).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);
}

#[test]
fn point_config_invariants() {
    assert!(PointConfig::new(6, 2, 3, 3, 2, true).is_ok());
    assert!(PointConfig::new(6, 3, 3, 3, 2, true).is_err()); // lB < s0
    assert!(PointConfig::new(2, 3, 1, 1, 3, true).is_err()); // s0 > r
    assert!(PointConfig::new(7, 2, 3, 3, 2, true).is_err()); // r > lA*s0
    assert!(PointConfig::new(0, 1, 1, 1, 1, true).is_err());
}

#[test]
fn point_on_locus_examples() {
    let l = uni(4, 6, 1, 8);
    let res = point_on_locus(&l, &t(1), Locus::SingularA, true).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(3)));
    assert_attained(&res);

    let res = point_on_locus(&l, &t(1), Locus::SmoothA, false).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(4)));
    assert!(res.hypotheses.iter().all(|h| h.holds));

    let res = point_on_locus(&uni(36, 6, 1, 8), &t(1), Locus::SmoothA, false).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(12)));
    assert_attained(&res);

    let res = point_on_locus(&l, &t(1), Locus::SingularA, false).unwrap();
    assert_eq!(res.value, Some(int(4)));
}

#[test]
fn point_on_locus_bounds_and_errors() {
    // 3a = 15 > 12 = 2b and a < 36: no equality
    let res = point_on_locus(&uni(5, 6, 1, 8), &t(1), Locus::SmoothA, false).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    // a/(2μ) + b/2 = 5/4 + 3
    assert_eq!(res.lower, rat(17, 4));
    assert_eq!(res.upper, Bound::rational(int(5)));

    let res = point_on_locus(&uni(20, 6, 1, 8), &t(1), Locus::AMinusE, false).unwrap();
    // a >= 36 - 4 fails, 3a <= 12 fails
    assert_eq!(res.status, SeshadriStatus::Bounds);
    assert_eq!(res.upper, Bound::rational(int(11)));
    let res = point_on_locus(&uni(32, 6, 1, 8), &t(1), Locus::AMinusE, false).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(11)));
    let res = point_on_locus(&uni(32, 6, 1, 8), &t(1), Locus::AMinusE, true).unwrap();
    assert_eq!(res.value, Some(int(11)));
    assert_eq!(res.attaining[1].class, DivisorClass::from_ints(0, 1, &[0, 1, 0, 0, 0, 0, 0, 0]));

    let res = point_on_locus(&uni(3, 6, 1, 8), &t(1), Locus::SmoothA, false).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);
    assert!(!res.hypothesis("a >= 2kd").unwrap().holds);

    assert_eq!(
        point_on_locus(&uni(4, 6, 1, 8), &t(2), Locus::SmoothA, false),
        Err(Error::UnsupportedType(2))
    );
    assert!(matches!(
        point_on_locus(&DivisorClass::from_ints(4, 6, &[1, 2]), &t(1), Locus::SmoothA, false),
        Err(Error::UnsupportedShape(_))
    ));
}

#[test]
fn very_general_examples() {
    let res = very_general_point(&uni(4, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(4)));
    assert_attained(&res);

    let res = very_general_point(&uni(13, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    assert_eq!(res.lower, int(6));
    assert_eq!(res.upper, Bound::rational(int(12)));

    let res = very_general_point(&uni(5, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);

    // μb = 12 exceeds √(L²) = √136 at a = 12
    let res = very_general_point(&uni(12, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.upper, Bound::sqrt(int(136)));
}

#[test]
fn global_examples() {
    let (res, cert) = global_constant(&uni(4, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.status, SeshadriStatus::Exact);
    assert_eq!(res.value, Some(int(3)));
    let cert = cert.unwrap();
    assert_eq!(cert.kind, CertificateKind::GlobalExact);
    assert!(cert.verify());

    let (res, cert) = global_constant(&uni(4, 6, 1, 5), &t(6)).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    let cert = cert.unwrap();
    assert_eq!(cert.kind, CertificateKind::GlobalRationality);
    assert_eq!(cert.claimed, int(6));
    assert_eq!((cert.comparison.lhs.clone(), cert.comparison.rhs.clone()), (BigInt::from(36), BigInt::from(43)));
    assert!(cert.verify());

    let (_, cert) = global_constant(&uni(4, 6, 1, 5), &t(2)).unwrap();
    let cert = cert.unwrap();
    assert_eq!(cert.claimed, int(6));
    assert!(cert.verify());
}

#[test]
fn global_odd_rationality_branch() {
    // a = 9 lies in [2/3*6 + 4/3, 12], so only the rationality branch applies.
    let (res, cert) = global_constant(&uni(9, 6, 1, 8), &t(1)).unwrap();
    assert_eq!(res.status, SeshadriStatus::Bounds);
    let cert = cert.unwrap();
    assert_eq!(cert.kind, CertificateKind::GlobalRationality);
    assert!(cert.verify());
}

#[test]
fn global_not_met_and_errors() {
    let (res, cert) = global_constant(&uni(4, 5, 1, 5), &t(2)).unwrap();
    assert_eq!(res.status, SeshadriStatus::HypothesesNotMet);
    assert!(cert.is_none());
    assert!(matches!(
        global_constant(&DivisorClass::from_ints(4, 6, &[1, 2]), &t(1)),
        Err(Error::UnsupportedShape(_))
    ));
    assert!(matches!(global_constant(&on_x(4, 6), &t(1)), Err(Error::UnsupportedShape(_))));
}

#[test]
fn tampered_certificate_fails() {
    let (_, cert) = global_constant(&uni(4, 6, 1, 5), &t(6)).unwrap();
    let mut bad = cert.clone().unwrap();
    bad.claimed = int(5);
    assert!(!bad.verify());
    let mut bad = cert.clone().unwrap();
    bad.comparison.rhs = BigInt::from(30);
    assert!(!bad.verify());
    let mut bad = cert.unwrap();
    bad.witness_curves[0].ratio = int(1);
    assert!(!bad.verify());
}

#[test]
fn json_round_trip() {
    let (res, cert) = global_constant(&uni(4, 6, 1, 5), &t(6)).unwrap();
    let s = serde_json::to_string(&res).unwrap();
    assert!(s.contains(r#""status":"bounds""#));
    assert!(s.contains(r#""value":null"#));
    assert_eq!(serde_json::from_str::<SeshadriResult>(&s).unwrap(), res);
    let c = serde_json::to_string(&cert).unwrap();
    assert!(c.contains(r#""relation":"<""#));
    assert_eq!(serde_json::from_str::<Option<Certificate>>(&c).unwrap(), cert);
}
