use std::sync::Arc;

use amwave::fields::*;
use amwave::sampling::{example_one, random_coplanar_family, random_wave_context, rng_for, uniform_vector};
use amwave::sun_algebra::{make_generators, GeneratorKind, OperatorMatrix, OperatorVector3};
use amwave::{Complex64, Vec3};
use proptest::prelude::*;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn family(seed: u64, kind: GeneratorKind) -> SolutionFamily {
    let mut rng = rng_for(seed, 0);
    let ctx = random_wave_context(kind, 0.1, &mut rng).unwrap();
    random_coplanar_family(ctx, &mut rng)
}

fn kinds() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![Just(GeneratorKind::Su2SpinHalf), Just(GeneratorKind::Su2SpinOne), Just(GeneratorKind::Su3Gellmann)]
}

#[test]
fn example_one_fields_match_potentials() {
    let fam = example_one(0.1);
    let (a, phi) = build_potentials(&fam);
    let (b, e) = build_fields(&fam);
    let (b2, e2) = fields_from_potentials(&a, &phi);
    assert!(b.distance(&b2) < 1e-12);
    assert!(e.distance(&e2) < 1e-12);
}

#[test]
fn example_one_b_at_origin() {
    // ŷ[ik S_x + g ħ S_y]
    let g = 0.1;
    let fam = example_one(g);
    let s = fam.ctx().generators().generators().to_vec();
    let (b, _) = build_fields(&fam);
    let v = b.eval_at(&Vec3::zeros(), 0.0);
    let want_y = &s[0].scale(I) + &s[1].scale_real(g);
    assert!(v.x().frobenius_norm() < 1e-15 && v.z().frobenius_norm() < 1e-15);
    assert!((v.y() - &want_y).frobenius_norm() < 1e-15);
}

#[test]
fn example_one_dt_b() {
    // ŷ[kω S_x e^{iθ} − 2iωgħ S_y e^{2iθ}]
    let g = 0.1;
    let fam = example_one(g);
    let ctx = fam.ctx().clone();
    let s = ctx.generators().generators().to_vec();
    let (b, _) = build_fields(&fam);
    let want = HarmonicVectorField::from_terms(
        ctx.clone(),
        [
            (1, OperatorVector3::from_real(&Vec3::y(), &s[0].scale_real(ctx.k_mag() * ctx.omega()))),
            (2, OperatorVector3::from_real(&Vec3::y(), &s[1].scale(I * (-2.0 * ctx.omega() * g)))),
        ],
    );
    assert!(b.dt().distance(&want) < 1e-14);
}

#[test]
fn abelian_zero_coupling_is_maxwell_plane_wave() {
    let gens = make_generators(GeneratorKind::Identity, 1.0).unwrap();
    let ctx = Arc::new(WaveContext::new(Vec3::new(0.3, -0.5, 0.8), 1.0, 0.0, gens).unwrap());
    let r0 = Vec3::new(0.4, 0.9, -0.2);
    let fam = SolutionFamily::new(ctx.clone(), vec![r0, Vec3::zeros()]).unwrap();
    let (b, _) = build_fields(&fam);
    let want = OperatorVector3::from_real_identity(&ctx.k().cross(&r0), 1).scale(I);
    assert_eq!(b.orders(), vec![1]);
    assert!((b.term(1).unwrap() - &want).norm() < 1e-15);
    // transverse amplitude A01 = −k̂×(k̂×R₀) gives the same curl
    let kh = ctx.k_hat();
    let a01 = -kh.cross(&kh.cross(&r0));
    assert!((ctx.k().cross(&a01) - ctx.k().cross(&r0)).norm() < 1e-15);
}

#[test]
fn div_of_potential_is_i_k_phi() {
    for seed in 0..20 {
        let fam = family(seed, GeneratorKind::Su2SpinOne);
        let (a, phi) = build_potentials(&fam);
        let want = phi.scale_real(fam.ctx().k_mag()).scale(I);
        assert!(a.div().distance(&want) < 1e-13);
    }
}

#[test]
fn curl_grad_vanishes() {
    let fam = family(1, GeneratorKind::Su3Gellmann);
    let (_, phi) = build_potentials(&fam);
    assert!(phi.grad().curl().norm() < 1e-14);
}

#[test]
fn spatial_periodicity() {
    let fam = family(2, GeneratorKind::Su2SpinHalf);
    let (b, _) = build_fields(&fam);
    let k = *fam.ctx().k();
    let r = Vec3::new(0.2, -0.7, 1.3);
    let shifted = r + k * (2.0 * PI / k.norm_squared());
    assert!((&b.eval_at(&r, 0.4) - &b.eval_at(&shifted, 0.4)).norm() < 1e-13);
}

#[test]
fn eval_matches_per_term_sum() {
    let fam = family(3, GeneratorKind::Su2SpinOne);
    let (b, _) = build_fields(&fam);
    let ctx = fam.ctx();
    let (r, t) = (Vec3::new(-0.4, 0.1, 0.9), 0.37);
    let mut acc = OperatorVector3::zeros(ctx.dim());
    for (m, amp) in b.terms() {
        let theta = m as f64 * (ctx.k().dot(&r) - ctx.omega() * t);
        acc = &acc + &amp.scale(Complex64::new(theta.cos(), theta.sin()));
    }
    assert!((&acc - &b.eval_at(&r, t)).norm() < 1e-15);
}

#[test]
fn second_harmonic_e_is_g_unit_xi() {
    let fam = family(4, GeneratorKind::Su2SpinHalf);
    let (_, e) = build_fields(&fam);
    let g = fam.ctx().g();
    let want = fam.xi().scale_real(g * fam.ctx().generators().bracket_unit());
    assert!((e.term(2).unwrap() - &want).norm() < 1e-15);
}

#[test]
fn wave_equations_hold_termwise() {
    let fam = family(5, GeneratorKind::Su3Gellmann);
    let (b, e) = build_fields(&fam);
    let c2 = fam.ctx().c().powi(2);
    for f in [&b, &e] {
        let w = f.laplacian().sub(&f.dt().dt().scale_real(1.0 / c2));
        assert!(w.norm() < 1e-13 * f.norm().max(1.0));
    }
}

#[test]
fn non_coplanar_family_rejected() {
    let gens = make_generators(GeneratorKind::Su2SpinHalf, 1.0).unwrap();
    let ctx = WaveContext::unit(Vec3::z(), gens).unwrap();
    let r = vec![Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::zeros()];
    assert!(matches!(SolutionFamily::new(ctx, r), Err(amwave::Error::NonCoplanar { .. })));
}

#[test]
fn wrong_dispersion_rejected() {
    let gens = make_generators(GeneratorKind::Su2SpinHalf, 1.0).unwrap();
    assert!(WaveContext::with_omega(Vec3::z(), 1.5, 1.0, 0.1, gens).is_err());
}

#[test]
fn constant_field_has_zero_fd_derivatives() {
    let gens = make_generators(GeneratorKind::Su2SpinHalf, 1.0).unwrap();
    let ctx = Arc::new(WaveContext::unit(Vec3::z(), gens).unwrap());
    let amp = OperatorVector3::from_real(&Vec3::new(1.0, 2.0, 3.0), &OperatorMatrix::identity(2));
    let f = HarmonicVectorField::single(ctx, 0, amp);
    let d = fd_oracle_vector(&f, &Vec3::new(0.1, 0.2, 0.3), 0.5, 1e-3);
    assert!(d.div.frobenius_norm() < 1e-12);
    assert!(d.curl.norm() < 1e-12 && d.dt.norm() < 1e-12 && d.laplacian.norm() < 1e-6);
}

/// Relative deviation of the four FD estimates from the analytic ones.
fn fd_errors(f: &HarmonicVectorField, r: &Vec3, t: f64, h: f64) -> [f64; 4] {
    let d = fd_oracle_vector(f, r, t, h);
    let rel = |a: f64, b: f64| a / b.max(f64::MIN_POSITIVE);
    let div = f.div().eval_at(r, t);
    let curl = f.curl().eval_at(r, t);
    let dt = f.dt().eval_at(r, t);
    let lap = f.laplacian().eval_at(r, t);
    [
        rel((&d.div - &div).frobenius_norm(), div.frobenius_norm()),
        rel((&d.curl - &curl).norm(), curl.norm()),
        rel((&d.dt - &dt).norm(), dt.norm()),
        rel((&d.laplacian - &lap).norm(), lap.norm()),
    ]
}

#[test]
fn fd_convergence_order_two() {
    let mut rng = rng_for(99, 0);
    for seed in 0..5 {
        let fam = family(seed, GeneratorKind::Su2SpinOne);
        let (a, _) = build_potentials(&fam);
        let (b, _) = build_fields(&fam);
        let r = uniform_vector(&mut rng, -1.0, 1.0);
        let base = 2.0 * PI / fam.ctx().k_mag();
        for f in [&a, &b] {
            let coarse = fd_errors(f, &r, 0.3, 1e-2 * base);
            let fine = fd_errors(f, &r, 0.3, 0.5e-2 * base);
            for (c, fi) in coarse.iter().zip(fine) {
                let ratio = c / fi;
                assert!((3.0..=5.0).contains(&ratio), "error ratio {ratio}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fields_match_potentials_any_family(seed in 0u64..10_000, kind in kinds(), g in 0.0..1.0f64) {
        let fam = family(seed, kind).with_coupling(g);
        let (a, phi) = build_potentials(&fam);
        let (b, e) = build_fields(&fam);
        let (b2, e2) = fields_from_potentials(&a, &phi);
        let scale = b.norm().max(1.0);
        prop_assert!(b.distance(&b2) < 1e-12 * scale);
        prop_assert!(e.distance(&e2) < 1e-12 * scale);
    }

    #[test]
    fn coplanar_sampler_is_coplanar(seed in 0u64..10_000, kind in kinds()) {
        prop_assert!(family(seed, kind).is_coplanar());
    }

    #[test]
    fn product_orders_add(seed in 0u64..1000) {
        let fam = family(seed, GeneratorKind::Su2SpinHalf);
        let (a, _) = build_potentials(&fam);
        let aa = a.cross(&a);
        prop_assert!(aa.orders().iter().all(|m| *m == 2));
    }
}
