//! Seeded random families.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`): seed `s` and stream
//! `n` give the same numbers on every platform and release of that crate, so
//! trial `n` of a run with seed `s` is reproducible on its own.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fields::{SolutionFamily, WaveContext};
use crate::sun_algebra::{make_generators, GeneratorKind};
use crate::Vec3;

/// Independent stream `stream` of seed `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn uniform_vector(rng: &mut impl Rng, lo: f64, hi: f64) -> Vec3 {
    Vec3::new(rng.random_range(lo..hi), rng.random_range(lo..hi), rng.random_range(lo..hi))
}

/// Uniform direction on the sphere.
pub fn random_unit_vector(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = uniform_vector(rng, -1.0, 1.0);
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

/// (k̂, û) orthonormal, û built from the axis least aligned with k.
pub fn orthonormal_pair(k: &Vec3) -> (Vec3, Vec3) {
    let kh = k.normalize();
    let axis = if kh.x.abs() <= kh.y.abs() && kh.x.abs() <= kh.z.abs() {
        Vec3::x()
    } else if kh.y.abs() <= kh.z.abs() {
        Vec3::y()
    } else {
        Vec3::z()
    };
    (kh, kh.cross(&axis).normalize())
}

/// Random direction, |k| = 1, c = 1, ħ = 1, coupling `g`.
pub fn random_wave_context(kind: GeneratorKind, g: f64, rng: &mut impl Rng) -> Result<Arc<WaveContext>> {
    let gens = make_generators(kind, 1.0)?;
    Ok(Arc::new(WaveContext::new(random_unit_vector(rng), 1.0, g, gens)?))
}

/// R_l = a_l k̂ + b_l û with a, b ~ U(−1, 1); R₀ ~ U(−1, 1)³.
pub fn random_coplanar_family(ctx: Arc<WaveContext>, rng: &mut impl Rng) -> SolutionFamily {
    let (kh, u) = orthonormal_pair(ctx.k());
    let n = ctx.generators().len();
    let mut r = vec![uniform_vector(rng, -1.0, 1.0)];
    for _ in 0..n {
        let a: f64 = rng.random_range(-1.0..1.0);
        let b: f64 = rng.random_range(-1.0..1.0);
        r.push(kh * a + u * b);
    }
    SolutionFamily::new(ctx, r).expect("coplanar by construction")
}

/// Every R ~ U(−1, 1)³; generically not coplanar.
pub fn random_candidate(ctx: Arc<WaveContext>, rng: &mut impl Rng) -> SolutionFamily {
    let n = ctx.generators().len();
    let r = (0..=n).map(|_| uniform_vector(rng, -1.0, 1.0)).collect();
    SolutionFamily::candidate(ctx, r).expect("length matches")
}

/// τ = R₀𝟙 + R (n̂·G): R_l = n_l R.
pub fn abelian_family(ctx: Arc<WaveContext>, r0: Vec3, r: Vec3, n: &[f64]) -> Result<SolutionFamily> {
    let mut vs = vec![r0];
    vs.extend(n.iter().map(|nl| r * *nl));
    SolutionFamily::new(ctx, vs)
}

pub fn random_abelian_family(ctx: Arc<WaveContext>, rng: &mut impl Rng) -> SolutionFamily {
    let n = ctx.generators().len();
    let dir: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    let len = dir.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
    let dir: Vec<f64> = dir.iter().map(|x| x / len).collect();
    let r0 = uniform_vector(rng, -1.0, 1.0);
    let r = uniform_vector(rng, -1.0, 1.0);
    abelian_family(ctx, r0, r, &dir).expect("parallel R vectors are coplanar")
}

/// k = ẑ, R₁ = x̂, R₃ = ẑ, spin-½, c = ħ = 1.
pub fn example_one(g: f64) -> SolutionFamily {
    let gens = make_generators(GeneratorKind::Su2SpinHalf, 1.0).expect("spin-1/2");
    let ctx = WaveContext::new(Vec3::z(), 1.0, g, gens).expect("valid context");
    SolutionFamily::new(ctx, vec![Vec3::zeros(), Vec3::x(), Vec3::zeros(), Vec3::z()]).expect("coplanar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<f64> = (0..4).map(|_| rng_for(42, 3).random::<f64>()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let x: f64 = rng_for(42, 3).random();
        let y: f64 = rng_for(42, 4).random();
        assert_ne!(x, y);
    }

    #[test]
    fn pair_is_orthonormal() {
        let mut rng = rng_for(1, 0);
        for _ in 0..50 {
            let k = random_unit_vector(&mut rng) * 3.0;
            let (kh, u) = orthonormal_pair(&k);
            assert!((kh.norm() - 1.0).abs() < 1e-14 && (u.norm() - 1.0).abs() < 1e-14);
            assert!(kh.dot(&u).abs() < 1e-14);
        }
    }
}
