use hurwitz_pia::decode::smd_decode_ordered;
use hurwitz_pia::{
    build_code, build_crt_context, fixtures, mld_decode, smd_decode, HurwitzInt, LatticePoint, LevelCodeSpec, PiACode,
    RealQuaternion, Side,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn noisy(x: &LatticePoint, sigma: f64, rng: &mut ChaCha8Rng) -> Vec<RealQuaternion> {
    let normal = Normal::new(0.0, sigma).unwrap();
    x.to_real().into_iter().map(|v| v + RealQuaternion(std::array::from_fn(|_| normal.sample(rng)))).collect()
}

fn shift(y: &[RealQuaternion], t: &LatticePoint) -> Vec<RealQuaternion> {
    y.iter().zip(&t.0).map(|(y, t)| *y + t.to_real()).collect()
}

fn add(a: &LatticePoint, b: &LatticePoint) -> LatticePoint {
    LatticePoint(a.0.iter().zip(&b.0).map(|(x, y)| *x + *y).collect())
}

#[test]
fn decoders_are_translation_equivariant() {
    let code = fixtures::rank_one(15, 2).unwrap();
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = code.random_point(&mut rng, 0);
        let t = code.random_point(&mut rng, 2);
        let y = noisy(&x, 0.4, &mut rng);
        let yt = shift(&y, &t);
        let (s, st) = (smd_decode(&y, &code).unwrap(), smd_decode(&yt, &code).unwrap());
        assert_eq!(st.point, add(&s.point, &t), "smd, seed {seed}");
        let (m, mt) = (mld_decode(&y, &code).unwrap(), mld_decode(&yt, &code).unwrap());
        assert_eq!(mt.point, add(&m.point, &t), "mld, seed {seed}");
        assert!(code.is_lattice_member(&s.point) && code.is_lattice_member(&m.point));
    }
}

#[test]
fn residual_is_exact_for_lattice_inputs() {
    let code = fixtures::rank_one(21, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let x = code.random_point(&mut rng, 3);
        for r in [smd_decode(&x.to_real(), &code).unwrap(), mld_decode(&x.to_real(), &code).unwrap()] {
            assert_eq!(r.point, x);
            assert!(r.residual_noise.iter().all(|w| w.norm_sq() == 0.0));
        }
    }
}

/// `q = 3`, `n = 1`, full `π` side and zero `π̄` side: 9 codewords.
fn small_code() -> PiACode {
    let ctx = build_crt_context(&[3]).unwrap();
    build_code(&ctx, vec![LevelCodeSpec::full(0, Side::Pi, 1), LevelCodeSpec::zero(0, Side::PiBar, 1)]).unwrap()
}

#[test]
fn mld_is_optimal_against_brute_force() {
    let code = small_code();
    assert_eq!(code.len(), 9);
    let q = code.q();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let y: Vec<RealQuaternion> = vec![RealQuaternion(std::array::from_fn(|_| rng.gen_range(-6.0..6.0)))];
        let got = mld_decode(&y, &code).unwrap().point;
        let best = (got.to_real()[0] - y[0]).norm_sq();
        let c = y[0].0.map(|v| (2.0 * v).round() as i64);
        let r = 4 * q;
        for d0 in c[0] - r..=c[0] + r {
            for d1 in c[1] - r..=c[1] + r {
                for d2 in c[2] - r..=c[2] + r {
                    for d3 in c[3] - r..=c[3] + r {
                        let Ok(h) = HurwitzInt::from_doubled([d0, d1, d2, d3]) else { continue };
                        let d = (h.to_real() - y[0]).norm_sq();
                        if d < best - 1e-9 {
                            assert!(!code.is_lattice_member(&LatticePoint(vec![h])), "{h} beats {:?}", got.0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn smd_level_order_is_configurable() {
    let code = fixtures::rank_one(15, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let x = code.random_point(&mut rng, 0);
        let y = noisy(&x, 0.02, &mut rng);
        let a = smd_decode_ordered(&y, &code, &[0, 1]).unwrap();
        let b = smd_decode_ordered(&y, &code, &[1, 0]).unwrap();
        assert_eq!(a.point, x);
        assert_eq!(b.point, x);
    }
}

#[test]
fn mld_never_worse_than_smd_in_distance() {
    let code = fixtures::q3_code().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..500 {
        let x = code.random_point(&mut rng, 0);
        let y = noisy(&x, 0.35, &mut rng);
        let d = |p: &LatticePoint| p.to_real().iter().zip(&y).map(|(a, b)| (*a - *b).norm_sq()).sum::<f64>();
        let (s, m) = (smd_decode(&y, &code).unwrap(), mld_decode(&y, &code).unwrap());
        assert!(d(&m.point) <= d(&s.point) + 1e-9);
    }
}
