//! Six weak-coupling conditions and the eight exact conditions on random
//! families, generic versus Abelian.
use amwave::residuals::{exact_conditions, wca_conditions, DEFAULT_TOL, ResidualReport};
use amwave::sampling::{random_abelian_family, random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;

fn show(rep: &ResidualReport) {
    println!("{} (scale {:.3}) pass={}", rep.label, rep.scale, rep.overall_pass);
    for it in &rep.per_item {
        println!("  {:8} {:>10.3e}  {}", it.name, it.residual_norm, if it.pass { "ok" } else { "FAIL" });
    }
}

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(7, 0);
    let ctx = random_wave_context(GeneratorKind::Su2SpinOne, 0.1, &mut rng)?;
    let generic = random_coplanar_family(ctx.clone(), &mut rng);
    show(&wca_conditions(&generic, DEFAULT_TOL));
    // stripped g² brackets survive for generic non-Abelian families
    show(&exact_conditions(&generic, DEFAULT_TOL));

    let abelian = random_abelian_family(ctx, &mut rng);
    show(&exact_conditions(&abelian, DEFAULT_TOL));
    Ok(())
}
