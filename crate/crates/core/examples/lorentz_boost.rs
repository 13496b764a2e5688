//! Boost the field-strength tensor and re-check the tensor equations in the
//! moving frame.
use amwave::relativity::{add_velocities, max_abs_diff, boost_wavevector, boosted_residuals, wave_four_vector, BoostAxis, BoostMatrix, minkowski_interval};
use amwave::sampling::{random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(5, 0);
    let ctx = random_wave_context(GeneratorKind::Su2SpinOne, 0.1, &mut rng)?;
    let fam = random_coplanar_family(ctx.clone(), &mut rng);
    for v in [0.3, 0.9, -0.9] {
        let boost = BoostMatrix::new(v, 1.0, BoostAxis::Z)?;
        let k2 = boost_wavevector(&wave_four_vector(&ctx), &boost);
        let rep = boosted_residuals(&fam, &boost, 1e-10)?;
        println!("v = {v:+}: gamma {:.4}, k'^2 {:.1e}, max residual {:.2e}, pass {}", boost.gamma(), minkowski_interval(&k2), rep.max_residual(), rep.overall_pass);
    }
    let (a, b) = (0.6, 0.7);
    let composed = BoostMatrix::along_z(a, 1.0)?.compose(&BoostMatrix::along_z(b, 1.0)?);
    let direct = BoostMatrix::along_z(add_velocities(a, b, 1.0), 1.0)?;
    println!("0.6 (+) 0.7 = {:.12}, composition defect {:.1e}", direct.velocity(), max_abs_diff(&composed, direct.entries()));
    Ok(())
}
