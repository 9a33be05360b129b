//! Sends noisy lattice points through both decoders and reports what came back.

use hurwitz_pia::{fixtures, mld_decode, smd_decode, RealQuaternion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn main() -> hurwitz_pia::Result<()> {
    let code = fixtures::rank_one(15, 2)?;
    println!("q = 15, n = 2, |C| = {}", code.len());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for sigma in [0.1, 0.3, 0.5] {
        let noise = Normal::new(0.0, sigma).expect("sigma > 0");
        let (mut smd_ok, mut mld_ok) = (0, 0);
        let trials = 200;
        for _ in 0..trials {
            let x = code.random_point(&mut rng, 2);
            let y: Vec<RealQuaternion> = x
                .to_real()
                .into_iter()
                .map(|v| v + RealQuaternion(std::array::from_fn(|_| noise.sample(&mut rng))))
                .collect();
            smd_ok += (smd_decode(&y, &code)?.point == x) as u32;
            mld_ok += (mld_decode(&y, &code)?.point == x) as u32;
        }
        println!("sigma = {sigma}: smd {smd_ok}/{trials}, mld {mld_ok}/{trials}");
    }
    Ok(())
}
