//! Analytic derivatives against central differences, with the observed
//! convergence order.
use amwave::fields::{build_fields, fd_oracle_vector};
use amwave::sampling::{random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;
use amwave::Vec3;

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(1, 0);
    let ctx = random_wave_context(GeneratorKind::Su2SpinOne, 0.1, &mut rng)?;
    let (b, _) = build_fields(&random_coplanar_family(ctx.clone(), &mut rng));
    let (r, t) = (Vec3::new(0.2, 0.5, -0.3), 0.7);
    let exact = b.curl().eval_at(&r, t);
    let base = 2.0 * std::f64::consts::PI / ctx.k_mag();
    let mut prev: Option<f64> = None;
    for scale in [1e-2, 5e-3, 2.5e-3, 1.25e-3] {
        let h = scale * base;
        let err = (&fd_oracle_vector(&b, &r, t, h).curl - &exact).norm() / exact.norm();
        let order = prev.map(|p| (p / err).log2());
        println!("h = {h:.3e}: relative curl error {err:.3e}, order {order:.3?}");
        prev = Some(err);
    }
    Ok(())
}
