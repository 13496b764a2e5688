//! Generator sets, the su(2) algebra check and trace-formula structure
//! constants.
use amwave::sun_algebra::{make_generators, structure_constants, GeneratorKind};

fn main() -> amwave::Result<()> {
    for kind in [GeneratorKind::Su2SpinHalf, GeneratorKind::Su2SpinOne] {
        let set = make_generators(kind, 1.0)?;
        println!("{kind}: dim {}, [S_x,S_y] - i hbar S_z defect {:.2e}", set.dim(), set.su2_algebra_defect().unwrap_or(f64::NAN));
        println!("  non-commuting pairs: {:?}", set.noncommuting_pairs());
    }

    let gm = make_generators(GeneratorKind::Su3Gellmann, 1.0)?;
    let f = structure_constants(&gm)?;
    println!("su3_gellmann nonzero f (a<b<c):");
    for (a, b, c, v) in f.nonzero_f(1e-12) {
        println!("  f[{a}{b}{c}] = {v:+.15}");
    }
    println!("  d[118] = {:+.15}", f.d(1, 1, 8));

    // identity basis is rejected by the traceless requirement
    let id = make_generators(GeneratorKind::Identity, 1.0)?;
    println!("identity basis: {}", structure_constants(&id).unwrap_err());
    Ok(())
}
