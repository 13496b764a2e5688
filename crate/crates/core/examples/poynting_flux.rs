//! Time-averaged Poynting flux: operator closed form, quadrature oracle and
//! the classical Abelian limit.
use amwave::fields::build_fields;
use amwave::poynting::{amw_flux, em_flux, flux_quadrature, DEFAULT_SAMPLES};
use amwave::sampling::{random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;
use amwave::Vec3;

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(9, 0);
    let ctx = random_wave_context(GeneratorKind::Su2SpinHalf, 0.3, &mut rng)?;
    let fam = random_coplanar_family(ctx.clone(), &mut rng);
    let closed = amw_flux(&fam);
    let (b, e) = build_fields(&fam);
    let q = flux_quadrature(&b, &e, &Vec3::zeros(), DEFAULT_SAMPLES)?;
    let dev = (&q.total - &closed.vector()).norm();
    println!("closed-form magnitude operator {:?}", closed.magnitude_operator);
    println!("quadrature vs closed form: {dev:.2e}; mixed block {:.2e}", q.mixed.norm());

    // g = 0, tau = R0 * 1 reproduces the Maxwell result
    let a01 = Vec3::new(0.4, -0.7, 0.0);
    let em_ctx = amwave::fields::WaveContext::unit(Vec3::z() * 2.0, amwave::sun_algebra::make_generators(GeneratorKind::Identity, 1.0)?)?;
    let em = em_flux(&a01, &em_ctx)?;
    println!("classical flux (c/8pi) k^2 |A01|^2 = {:?}", em.classical_magnitude);
    Ok(())
}
