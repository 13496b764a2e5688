//! Position and spin Zitterbewegung of Dirac superpositions against their
//! closed forms, plus the SI scale of the effect.
use amwave::zitter::*;
use amwave::Vec3;

fn main() -> amwave::Result<()> {
    let ctx = DiracContext::natural(Vec3::new(0.3, -0.4, 0.8));
    let theta = 0.6;
    let (amp, freq) = amplitude_frequency(theta, &ctx);
    println!("E = {:.6}, amplitude {:.6}, frequency {:.6}", ctx.energy(), amp, freq);

    let pos = SuperpositionSpec::mix(1, 3, theta)?;
    let spin = SuperpositionSpec::mix(1, 4, theta)?;
    for t in [0.0, 0.5, 1.3, 4.0] {
        let zr = zitter_position_expectation(&pos, &ctx, t)?;
        let zs = zitter_spin_expectation(&spin, &ctx, t)?;
        let dr = (zr - position_closed_form(theta, &ctx, t)).norm();
        let ds = (zs - spin_closed_form(theta, &ctx, t)?).norm();
        println!("t = {t:4}: Zr {:+.6?} (dev {dr:.1e})  Zs {:+.6?} (dev {ds:.1e})", zr.as_slice(), zs.as_slice());
    }

    // same helicity: no spin oscillation
    let same = SuperpositionSpec::mix(1, 3, theta)?;
    println!("same-helicity spin zitter at t=1: {:.1e}", zitter_spin_expectation(&same, &ctx, 1.0)?.norm());

    let si = SiConstants::electron();
    println!("lambda_e = {:.6e} m, A_max = {:.5e} m, omega_min = {:.6e} 1/s", si.compton_wavelength(), si.max_amplitude(), si.min_frequency());
    Ok(())
}
