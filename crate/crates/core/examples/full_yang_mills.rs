//! Full Yang-Mills residuals per harmonic order. Abelian families solve the
//! equations exactly; generic ones leave a third-harmonic remainder.
use amwave::fields::build_potentials;
use amwave::residuals::full_ym_fields;
use amwave::sampling::{random_abelian_family, random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(3, 0);
    let ctx = random_wave_context(GeneratorKind::Su2SpinHalf, 0.2, &mut rng)?;
    for (label, fam) in [
        ("abelian", random_abelian_family(ctx.clone(), &mut rng)),
        ("generic", random_coplanar_family(ctx, &mut rng)),
    ] {
        let (a, phi) = build_potentials(&fam);
        println!("{label}");
        for r in full_ym_fields(&a, &phi) {
            println!("  {:7} total {:.3e}  per order {:?}", r.name, r.field.norm(), r.field.order_norms());
        }
    }
    Ok(())
}
