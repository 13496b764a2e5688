//! Constant-U conjugation: residual norms and tensor structure survive
//! A -> U A U^dagger.
use amwave::fields::{build_fields, build_potentials};
use amwave::relativity::{assemble_tensor, gauge_conjugate, gauge_conjugate_tensor};
use amwave::residuals::full_ym_fields;
use amwave::sampling::example_one;

fn main() -> amwave::Result<()> {
    let fam = example_one(0.1);
    let sz = fam.ctx().generators().generators()[2].clone();
    let u = sz.exp_i_hermitian(0.7);
    let (a, phi) = build_potentials(&fam);
    let (a2, phi2) = (gauge_conjugate(&a, &u)?, gauge_conjugate(&phi, &u)?);
    for (pre, post) in full_ym_fields(&a, &phi).iter().zip(full_ym_fields(&a2, &phi2)) {
        println!("{:7} {:.6e} -> {:.6e}", pre.name, pre.field.norm(), post.field.norm());
    }
    let (b, e) = build_fields(&fam);
    let r = amwave::Vec3::new(0.1, 0.2, 0.3);
    let f = assemble_tensor(&b.eval_at(&r, 0.0), &e.eval_at(&r, 0.0))?;
    let g = gauge_conjugate_tensor(&f, &u)?;
    println!("tensor norm {:.6} -> {:.6}, antisymmetry {:.1e}", f.norm(), g.norm(), g.antisymmetry_defect());
    Ok(())
}
