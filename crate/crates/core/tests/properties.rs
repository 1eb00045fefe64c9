use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use hyperell::catalog::surface_params;
use hyperell::lattice::rational::{int, Rational};
use hyperell::lattice::{compare_bounds, self_intersection, Bound, DivisorClass};
use hyperell::oracle::{min_ratio_over_box, Cap, ConstraintSet, Weights};
use hyperell::positivity::{decide_ample, homogeneous_ample, AmpleStatus};
use hyperell::seshadri::{global_constant, multipoint_special, point_on_locus, Locus, PointConfig, SeshadriResult};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 1000, ..ProptestConfig::default() }
}

fn class(r: usize) -> impl Strategy<Value = DivisorClass> {
    (-40i64..40, -40i64..40, prop::collection::vec(-10i64..10, r))
        .prop_map(|(a, b, d)| DivisorClass::from_ints(a, b, &d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (0i64..100_000, 1i64..500).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn bound() -> impl Strategy<Value = Bound> {
    (any::<bool>(), rational()).prop_map(|(s, q)| if s { Bound::sqrt(q) } else { Bound::rational(q) })
}

/// Scales every reported number of a result by `t`.
fn scaled_result(r: &SeshadriResult, t: i64) -> (Option<Rational>, Rational, Bound) {
    let t = int(t);
    let upper = match &r.upper {
        Bound::Rational { q } => Bound::rational(q * &t),
        Bound::Sqrt { q } => Bound::sqrt(q * &t * &t),
    };
    (r.value.as_ref().map(|v| v * &t), &r.lower * &t, upper)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn class_json_round_trip(c in (0usize..6).prop_flat_map(class)) {
        let s = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<DivisorClass>(&s).unwrap(), c);
    }

    #[test]
    fn compare_bounds_is_a_total_order(x in bound(), y in bound(), z in bound()) {
        prop_assert_eq!(compare_bounds(&x, &y), compare_bounds(&y, &x).reverse());
        if compare_bounds(&x, &y) != Ordering::Greater && compare_bounds(&y, &z) != Ordering::Greater {
            prop_assert_ne!(compare_bounds(&x, &z), Ordering::Greater);
        }
        let m = x.clone().min(y.clone());
        prop_assert_ne!(compare_bounds(&m, &x), Ordering::Greater);
        prop_assert_ne!(compare_bounds(&m, &y), Ordering::Greater);
    }

    #[test]
    fn proven_implies_positive_square(t in 1i64..=7, c in (0usize..9).prop_flat_map(class)) {
        let v = decide_ample(&c, &surface_params(t).unwrap());
        if v.status == AmpleStatus::Proven {
            prop_assert!(self_intersection(&c).is_positive());
        }
    }

    #[test]
    fn homogeneous_scale_invariant(t in 1i64..=7, a in 1i64..40, b in 1i64..40, d in 1i64..5, r in 1usize..12, k in 1i64..6) {
        let s = surface_params(t).unwrap();
        let v1 = homogeneous_ample(&DivisorClass::uniform(a, b, d, r), &s).status;
        let v2 = homogeneous_ample(&DivisorClass::uniform(k * a, k * b, k * d, r), &s).status;
        prop_assert_eq!(v1, v2);
    }

    #[test]
    fn positive_square_has_a_large_side(a in 1i64..60, b in 1i64..60, d in 1i64..6, r in 1usize..20) {
        let l = DivisorClass::uniform(a, b, d, r);
        if self_intersection(&l).is_positive() {
            let m = BigInt::from(a.max(b));
            prop_assert!(BigInt::from(2) * &m * &m > BigInt::from(r as i64 * d * d));
        }
    }

    #[test]
    fn point_values_scale(t in prop::sample::select(vec![1i64, 3, 5, 7]), a in 1i64..40, b in 1i64..40,
                          d in 1i64..4, r in 1usize..9, k in 1i64..5, locus in 0usize..3, on_b in any::<bool>()) {
        let s = surface_params(t).unwrap();
        let locus = [Locus::SmoothA, Locus::AMinusE, Locus::SingularA][locus];
        let base = point_on_locus(&DivisorClass::uniform(a, b, d, r), &s, locus, on_b);
        let big = point_on_locus(&DivisorClass::uniform(k * a, k * b, k * d, r), &s, locus, on_b);
        if let (Ok(base), Ok(big)) = (base, big) {
            if base.status == big.status {
                let (v, lo, up) = scaled_result(&base, k);
                prop_assert_eq!(big.value, v);
                prop_assert_eq!(big.lower, lo);
                prop_assert_eq!(compare_bounds(&big.upper, &up), Ordering::Equal);
            }
        }
    }

    #[test]
    fn multipoint_values_scale(t in 1i64..=7, a in 1i64..30, b in 1i64..30, s0 in 1usize..5, k in 1i64..5) {
        let s = surface_params(t).unwrap();
        let t0 = match t { 2 => 4, 4 => 2, 6 => 3, _ => 2 };
        let cfg = PointConfig::new(s0 * t0, s0, t0, t0, s0, true).unwrap();
        let base = multipoint_special(&DivisorClass::from_ints(a, b, &[]), &s, &cfg).unwrap();
        let big = multipoint_special(&DivisorClass::from_ints(k * a, k * b, &[]), &s, &cfg).unwrap();
        prop_assert_eq!(base.status, big.status);
        let (v, lo, up) = scaled_result(&base, k);
        prop_assert_eq!(big.value, v);
        prop_assert_eq!(big.lower, lo);
        prop_assert_eq!(compare_bounds(&big.upper, &up), Ordering::Equal);
    }

    #[test]
    fn global_certificates_verify(t in 1i64..=7, a in 1i64..30, b in 1i64..30, d in 1i64..4, r in 1usize..12) {
        let l = DivisorClass::uniform(a, b, d, r);
        let (res, cert) = global_constant(&l, &surface_params(t).unwrap()).unwrap();
        if let Some(cert) = cert {
            prop_assert!(cert.verify());
            let json = serde_json::to_string(&cert).unwrap();
            prop_assert!(serde_json::from_str::<hyperell::seshadri::Certificate>(&json).unwrap().verify());
        }
        let json = serde_json::to_string(&res).unwrap();
        prop_assert_eq!(serde_json::from_str::<SeshadriResult>(&json).unwrap(), res);
    }
}

fn monotone_caps() -> impl Strategy<Value = ConstraintSet> {
    prop::collection::vec((0i64..6, 0i64..6), 1..4).prop_filter_map("needs a non-zero cap", |v| {
        if v.iter().any(|&(a, b)| a + b == 0) {
            return None;
        }
        ConstraintSet::new(v.into_iter().map(|(a, b)| Cap::new(a, b, 0)).collect(), "random").ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn box_min_antitone_in_box(cons in monotone_caps(), wa in 0i64..20, wb in 0i64..20, b in 1u32..10) {
        let w = Weights::new(int(wa), int(wb));
        let small = min_ratio_over_box(&w, &cons, b).unwrap();
        let large = min_ratio_over_box(&w, &cons, b + 3).unwrap();
        prop_assert!(large <= small);
    }

    #[test]
    fn box_min_homogeneous_in_weights(cons in monotone_caps(), wa in 0i64..20, wb in 0i64..20, t in 1i64..9) {
        let v = min_ratio_over_box(&Weights::new(int(wa), int(wb)), &cons, 8).unwrap();
        let vt = min_ratio_over_box(&Weights::new(int(t * wa), int(t * wb)), &cons, 8).unwrap();
        prop_assert_eq!(vt, v * int(t));
    }

    /// Caps shaped like the fibre bounds `m ≤ c₁α, m ≤ c₂β`: the minimum sits
    /// on the direction `(c₂, c₁)`, inside every box with `B ≥ max(c₁, c₂)`.
    #[test]
    fn box_min_stabilises_without_offsets(c1 in 1i64..=8, c2 in 1i64..=8, wa in 0i64..20, wb in 0i64..20) {
        let cons = ConstraintSet::new(vec![Cap::new(c1, 0, 0), Cap::new(0, c2, 0)], "fibre caps").unwrap();
        let w = Weights::new(int(wa), int(wb));
        prop_assert_eq!(min_ratio_over_box(&w, &cons, 8).unwrap(), min_ratio_over_box(&w, &cons, 16).unwrap());
    }
}
