use hurwitz_pia::quantize::{round_rational, round_real};
use hurwitz_pia::{divides, gcd_bezout, DivSide, HurwitzInt, RationalQuaternion, RealQuaternion, Reduce};
use proptest::prelude::*;

fn hurwitz(max_doubled: i64) -> impl Strategy<Value = HurwitzInt> {
    let half = max_doubled / 2;
    (any::<bool>(), prop::array::uniform4(-half..half))
        .prop_map(|(odd, x)| HurwitzInt::from_doubled(x.map(|v| 2 * v + odd as i64)).unwrap())
}

fn nonzero(max_doubled: i64) -> impl Strategy<Value = HurwitzInt> {
    hurwitz(max_doubled).prop_filter("nonzero", |h| !h.is_zero())
}

fn dist2(x: &RealQuaternion, h: &HurwitzInt) -> f64 {
    (*x - h.to_real()).norm_sq()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_operations_keep_parity(a in hurwitz(40), b in hurwitz(40)) {
        for r in [a + b, a - b, a * b, a.conj(), -a] {
            prop_assert!(HurwitzInt::from_doubled(r.doubled()).is_ok());
        }
    }

    #[test]
    fn norm_is_multiplicative(a in hurwitz(40), b in hurwitz(40)) {
        prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a * a.conj(), HurwitzInt::integer(a.norm()));
        prop_assert_eq!(a.conj() * a, HurwitzInt::integer(a.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Brute force over every Hurwitz point within distance 2 of `x`.
    #[test]
    fn rounding_is_a_nearest_point(raw in prop::array::uniform4(-400i64..400)) {
        let x = RationalQuaternion::new(raw, 40);
        let xr = x.to_real();
        let r = round_rational(&x);
        let best = dist2(&xr, &r);
        // The float path may break an exact tie the other way, but never loses distance.
        prop_assert!((dist2(&xr, &round_real(&xr)) - best).abs() < 1e-9);
        let c = raw.map(|v| (v as f64 / 20.0).round() as i64);
        for d0 in c[0] - 4..=c[0] + 4 {
            for d1 in c[1] - 4..=c[1] + 4 {
                for d2 in c[2] - 4..=c[2] + 4 {
                    for d3 in c[3] - 4..=c[3] + 4 {
                        let Ok(h) = HurwitzInt::from_doubled([d0, d1, d2, d3]) else { continue };
                        let d = dist2(&xr, &h);
                        prop_assert!(d >= best - 1e-12, "{h} closer to {xr:?} than {r}");
                        if (d - best).abs() < 1e-12 {
                            prop_assert!(r.doubled() <= h.doubled(), "tie not resolved to lex minimum");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ties_resolve_to_lex_minimum(raw in prop::array::uniform4(-8i64..8)) {
        // Quarter points contain every integer/half-integer tie.
        let x = RationalQuaternion::new(raw, 4);
        let r = round_rational(&x);
        let xr = x.to_real();
        let best = dist2(&xr, &r);
        let c = raw.map(|v| v / 2);
        for d0 in c[0] - 3..=c[0] + 3 {
            for d1 in c[1] - 3..=c[1] + 3 {
                for d2 in c[2] - 3..=c[2] + 3 {
                    for d3 in c[3] - 3..=c[3] + 3 {
                        let Ok(h) = HurwitzInt::from_doubled([d0, d1, d2, d3]) else { continue };
                        let d = dist2(&xr, &h);
                        prop_assert!(d >= best);
                        if d == best {
                            prop_assert!(r.doubled() <= h.doubled());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_sided_reduction_is_a_coset_function(x in hurwitz(400), h in hurwitz(20), q in prop::sample::select(vec![3i64, 5, 7, 15, 21])) {
        let r = x.mod_two_sided(q);
        prop_assert_eq!(r.mod_two_sided(q), r);
        prop_assert_eq!((x + h.scale(q)).mod_two_sided(q), r);
        prop_assert_eq!((h * HurwitzInt::integer(q)).mod_two_sided(q), HurwitzInt::ZERO);
    }

    #[test]
    fn left_ideal_reduction_is_a_coset_function(x in hurwitz(400), h in hurwitz(20), pi in nonzero(8)) {
        let r = x.mod_left_ideal(&pi);
        prop_assert_eq!(r.mod_left_ideal(&pi), r);
        prop_assert_eq!((x + h * pi).mod_left_ideal(&pi), r);
        prop_assert!(2 * r.norm() <= pi.norm(), "remainder outside the covering radius");
        let real = x.to_real().mod_left_ideal(&pi);
        prop_assert!((real.norm_sq() - r.norm() as f64).abs() < 1e-6);
    }

    #[test]
    fn bezout_identity_and_divisibility(a in hurwitz(60), b in hurwitz(60)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let out = gcd_bezout(&a, &b).unwrap();
        prop_assert_eq!(out.mu * a + out.nu * b, out.gcd);
        prop_assert!(divides(&out.gcd, &a, DivSide::Right).unwrap().is_some());
        prop_assert!(divides(&out.gcd, &b, DivSide::Right).unwrap().is_some());
        for w in out.remainder_norms[1..].windows(2) {
            prop_assert!(w[1] == 0 || 2 * w[1] <= w[0]);
        }
    }

    #[test]
    fn divisibility_witness_is_exact(a in nonzero(20), g in hurwitz(20)) {
        let right = g * a;
        let left = a * g;
        prop_assert_eq!(divides(&a, &right, DivSide::Right).unwrap(), Some(g));
        prop_assert_eq!(divides(&a, &left, DivSide::Left).unwrap(), Some(g));
    }

    #[test]
    fn text_and_json_roundtrip(a in hurwitz(200)) {
        prop_assert_eq!(a.to_string().parse::<HurwitzInt>().unwrap(), a);
        prop_assert_eq!(a.pretty().parse::<HurwitzInt>().unwrap(), a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<HurwitzInt>(&json).unwrap(), a);
    }
}
