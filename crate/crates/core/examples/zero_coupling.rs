//! Zero-coupling battery: spatial conditions, Maxwell-type field equations,
//! potential conditions, W terms and the transversality properties.
use amwave::fields::{build_fields, build_potentials};
use amwave::residuals::{
    maxwell_type_residuals, potential_conditions, property_battery, w_terms, zca_conditions, DEFAULT_TOL,
};
use amwave::sampling::{random_coplanar_family, random_wave_context, rng_for};
use amwave::sun_algebra::GeneratorKind;

fn main() -> amwave::Result<()> {
    let mut rng = rng_for(11, 0);
    for kind in [GeneratorKind::Su2SpinHalf, GeneratorKind::Su2SpinOne, GeneratorKind::Su3Gellmann] {
        let ctx = random_wave_context(kind, 0.1, &mut rng)?;
        let fam = random_coplanar_family(ctx, &mut rng);
        let (a, phi) = build_potentials(&fam);
        let (b, e) = build_fields(&fam);
        let reps = [
            zca_conditions(&fam, DEFAULT_TOL),
            maxwell_type_residuals(&a, &phi, DEFAULT_TOL),
            potential_conditions(&a, &phi, DEFAULT_TOL),
            w_terms(&a, &phi, DEFAULT_TOL),
            property_battery(&b, &e, DEFAULT_TOL),
        ];
        println!("{kind}");
        for r in &reps {
            println!("  {:14} items {:2}  max {:.2e}  pass {}", r.label, r.per_item.len(), r.max_residual(), r.overall_pass);
        }
    }
    Ok(())
}
