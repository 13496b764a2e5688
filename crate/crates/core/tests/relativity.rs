use amwave::fields::build_fields;
use amwave::relativity::*;
use amwave::residuals::full_ym_fields;
use amwave::sampling::*;
use amwave::sun_algebra::{GeneratorKind, OperatorMatrix};
use amwave::Vec3;
use proptest::prelude::*;

#[test]
fn boost_inverse_and_interval() {
    for axis in [BoostAxis::X, BoostAxis::Y, BoostAxis::Z] {
        let b = BoostMatrix::new(0.63, 1.0, axis).unwrap();
        let id = b.compose(&b.inverse());
        let eye = {
            let mut m = [[0.0; 4]; 4];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1.0;
            }
            m
        };
        assert!(max_abs_diff(&id, &eye) < 1e-14);
        let x = [1.3, -0.2, 0.7, 2.1];
        assert!((minkowski_interval(&b.apply(&x)) - minkowski_interval(&x)).abs() < 1e-13);
    }
}

#[test]
fn superluminal_rejected() {
    assert!(matches!(BoostMatrix::new(1.0, 1.0, BoostAxis::Z), Err(amwave::Error::SuperluminalBoost { .. })));
    assert!(BoostMatrix::new(-1.2, 1.0, BoostAxis::X).is_err());
}

#[test]
fn velocity_addition_composes() {
    for (u, v) in [(0.3, 0.3), (0.9, 0.9), (-0.9, 0.3), (0.9, -0.3)] {
        let lhs = BoostMatrix::along_z(u, 1.0).unwrap().compose(&BoostMatrix::along_z(v, 1.0).unwrap());
        let rhs = BoostMatrix::along_z(add_velocities(u, v, 1.0), 1.0).unwrap();
        assert!(max_abs_diff(&lhs, rhs.entries()) < 1e-12);
    }
}

#[test]
fn assemble_then_extract_round_trips() {
    let fam = example_one(0.1);
    let (b, e) = build_fields(&fam);
    let r = Vec3::new(0.3, 0.1, -0.4);
    let (bv, ev) = (b.eval_at(&r, 0.2), e.eval_at(&r, 0.2));
    let f = assemble_tensor(&bv, &ev).unwrap();
    assert_eq!(f.magnetic(), bv);
    assert_eq!(f.electric(), ev);
    assert_eq!(f.antisymmetry_defect(), 0.0);
}

#[test]
fn boosted_families_pass_at_both_speeds() {
    for kind in [GeneratorKind::Su2SpinHalf, GeneratorKind::Su2SpinOne, GeneratorKind::Su3Gellmann] {
        for seed in 0..10 {
            let mut rng = rng_for(seed, 1);
            let ctx = random_wave_context(kind, 0.1, &mut rng).unwrap();
            let fam = random_coplanar_family(ctx, &mut rng);
            for v in [0.3, -0.3, 0.9, -0.9] {
                for axis in [BoostAxis::X, BoostAxis::Z] {
                    let rep = boosted_residuals(&fam, &BoostMatrix::new(v, 1.0, axis).unwrap(), 1e-10).unwrap();
                    assert!(rep.overall_pass, "{kind} {seed} {v}: {:?}", rep.failing());
                    assert!(rep.item("null_wavevector").unwrap().residual_norm <= 1e-12);
                }
            }
        }
    }
}

#[test]
fn gauge_conjugation_preserves_norms() {
    let fam = example_one(0.1);
    let s = fam.ctx().generators().generators().to_vec();
    let u = s[2].exp_i_hermitian(0.7);
    let (a, phi) = amwave::fields::build_potentials(&fam);
    let (a2, phi2) = (gauge_conjugate(&a, &u).unwrap(), gauge_conjugate(&phi, &u).unwrap());
    for (pre, post) in full_ym_fields(&a, &phi).iter().zip(full_ym_fields(&a2, &phi2)) {
        assert!((pre.field.norm() - post.field.norm()).abs() < 1e-12);
    }
}

#[test]
fn non_unitary_gauge_rejected() {
    let fam = example_one(0.1);
    let (a, _) = amwave::fields::build_potentials(&fam);
    let m = OperatorMatrix::identity(2).scale_real(1.1);
    assert!(matches!(gauge_conjugate(&a, &m), Err(amwave::Error::NonUnitary(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn null_wavevector_stays_null(seed in 0u64..100_000, v in -0.99..0.99f64) {
        let mut rng = rng_for(seed, 0);
        let ctx = random_wave_context(GeneratorKind::Su2SpinHalf, 0.1, &mut rng).unwrap();
        let k = boost_wavevector(&wave_four_vector(&ctx), &BoostMatrix::along_z(v, 1.0).unwrap());
        let n2: f64 = k.iter().map(|x| x * x).sum();
        prop_assert!(minkowski_interval(&k).abs() / n2 < 1e-12);
    }

    #[test]
    fn boosted_tensor_stays_antisymmetric(seed in 0u64..100_000, v in -0.95..0.95f64) {
        let mut rng = rng_for(seed, 0);
        let ctx = random_wave_context(GeneratorKind::Su2SpinOne, 0.2, &mut rng).unwrap();
        let fam = random_coplanar_family(ctx, &mut rng);
        let (b, e) = build_fields(&fam);
        for (_, f) in tensor_harmonics(&b, &e) {
            prop_assert!(boost_tensor(&f, &BoostMatrix::along_z(v, 1.0).unwrap()).antisymmetry_defect() < 1e-13 * f.norm().max(1.0));
        }
    }
}
