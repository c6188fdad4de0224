use nilcoh::almost_complex::{verdict, AlmostComplexStructure};
use nilcoh::catalog;
use nilcoh::cohomology::betti_numbers;
use nilcoh::deformation::{
    classify, curve_from_l, deformed_iwasawa, l_from_anti_invariant, semicontinuity_scan, NakamuraClass,
    NakamuraParameters,
};
use nilcoh::error::DeformationError;
use nilcoh::{GaussianRational, Matrix, Rational};

type G = GaussianRational;

fn params(entries: &[(&str, G)]) -> NakamuraParameters {
    entries.iter().fold(NakamuraParameters::zero(), |p, (k, v)| p.with(k, v.clone()))
}

#[test]
fn sigma_display_matches_structure_equations_in_class_ii() {
    let base = catalog::iwasawa();
    let samples = [
        params(&[("t21", G::from_fracs(1, 2, 0, 1))]),
        params(&[("t12", G::from_fracs(1, 2, 0, 1))]),
        params(&[("t11", G::from_fracs(1, 3, 0, 1)), ("t12", G::from_fracs(0, 1, 1, 4))]),
        params(&[("t21", G::from_fracs(1, 4, 1, 4)), ("t22", G::from_fracs(-1, 3, 0, 1)), ("t31", G::from_fracs(0, 1, 1, 2))]),
        params(&[("t11", G::from_fracs(1, 4, 0, 1)), ("t12", G::from_fracs(1, 4, 0, 1)), ("t21", G::from_fracs(1, 4, 0, 1)), ("t22", G::from_fracs(1, 4, 0, 1))]),
    ];
    for t in &samples {
        assert_eq!(classify(t), NakamuraClass::II, "{t:?}");
        let def = deformed_iwasawa(&base.spec, &base.j, t, Some(&NakamuraParameters::default_guard())).unwrap();
        assert_eq!(def.j.psi_spec(&def.spec).d_coframe(3), &def.coefficients.d_phi3(), "{t:?}");
        // σ₁₂ ≠ 0 and the (1,1)-part does not vanish in class (ii).
        assert!(!def.coefficients.sigma_12.is_zero());
        let s = &def.coefficients;
        assert!(![&s.sigma_1_1bar, &s.sigma_1_2bar, &s.sigma_2_1bar, &s.sigma_2_2bar].iter().all(|x| x.is_zero()));
    }
}

#[test]
fn t12_half_gives_sigma_22bar_minus_half() {
    let def = deformed_iwasawa(
        &catalog::iwasawa().spec,
        &catalog::iwasawa().j,
        &params(&[("t12", G::from_fracs(1, 2, 0, 1))]),
        None,
    )
    .unwrap();
    // α = γ = 1 and β = 0 here, so σ₂2̄ = -t₁₂ and σ₁₂ = -1.
    assert_eq!(def.coefficients.sigma_2_2bar, G::from_fracs(-1, 2, 0, 1));
    assert_eq!(def.coefficients.sigma_12, G::from_ints(-1, 0));
    assert!(def.coefficients.sigma_1_1bar.is_zero());
}

#[test]
fn class_i_keeps_iwasawa_equations() {
    let base = catalog::iwasawa();
    let def = deformed_iwasawa(&base.spec, &base.j, &params(&[("t31", G::from_fracs(1, 2, 1, 3)), ("t32", G::from_fracs(0, 1, -1, 2))]), None).unwrap();
    assert_eq!(def.class, NakamuraClass::I);
    assert_eq!(def.j.psi_spec(&def.spec), base.j.psi_spec(&base.spec));
}

#[test]
fn guard_and_singular_parameters() {
    let base = catalog::iwasawa();
    let big = params(&[("t11", G::from_fracs(3, 5, 0, 1))]);
    let err = deformed_iwasawa(&base.spec, &base.j, &big, Some(&NakamuraParameters::default_guard())).unwrap_err();
    assert!(matches!(err, DeformationError::OutsideGuard { .. }), "{err:?}");
    // |t22| = 1 makes α singular.
    let singular = params(&[("t22", G::one())]);
    let err = deformed_iwasawa(&base.spec, &base.j, &singular, None).unwrap_err();
    assert!(matches!(err, DeformationError::SingularParameter("alpha")), "{err:?}");
}

#[test]
fn n6c_curve_matrix_entries() {
    let n6 = catalog::n6c();
    let l = l_from_anti_invariant(&n6.j, &catalog::n6c_anti_invariant()).unwrap();
    let jt = curve_from_l(&n6.j, &l, &Rational::new(1, 2)).unwrap();
    let mut magnitudes: Vec<Rational> = jt.matrix().row_vectors().into_iter().flatten().filter(|x| !x.is_zero()).map(|x| x.re.abs()).collect();
    magnitudes.sort();
    magnitudes.dedup();
    // (4 - t²)/(4 + t²) = 15/17 and 4t/(4 + t²) = 8/17 at t = 1/2, beside the untouched ±1 entries.
    assert_eq!(magnitudes, vec![Rational::new(8, 17), Rational::new(15, 17), Rational::one()]);
}

#[test]
fn n6c_results_do_not_depend_on_c() {
    let n6 = catalog::n6c();
    let l = l_from_anti_invariant(&n6.j, &catalog::n6c_anti_invariant()).unwrap();
    let samples = [Rational::zero(), Rational::new(1, 4), Rational::new(1, 2)];
    let base = semicontinuity_scan(&n6.spec, &n6.j, &l, &samples, true).unwrap();
    for c in [Rational::new(2, 1), Rational::new(-3, 7)] {
        let spec = catalog::n6c_spec(&c);
        assert_eq!(betti_numbers(&spec), betti_numbers(&n6.spec));
        let scan = semicontinuity_scan(&spec, &n6.j, &l, &samples, true).unwrap();
        for (a, b) in scan.rows.iter().zip(&base.rows) {
            assert_eq!((a.h_plus(), a.h_minus()), (b.h_plus(), b.h_minus()), "c = {c}, t = {}", a.t);
        }
        assert!(scan.upper_semicontinuous);
    }
}

#[test]
fn anticommutation_is_enforced() {
    let j = AlmostComplexStructure::standard(4);
    let err = curve_from_l(&j, &Matrix::identity(4), &Rational::new(1, 3)).unwrap_err();
    assert!(matches!(err, DeformationError::AnticommutationFailure { .. }));
}

#[test]
fn four_dimensional_curves_stay_pure_and_full() {
    let kt = catalog::kt4();
    let gamma = nilcoh::KForm::monomial(4, &[1, 3], G::one()).sub(&nilcoh::KForm::monomial(4, &[2, 4], G::one()));
    let l = l_from_anti_invariant(&kt.j, &gamma).unwrap();
    for t in [Rational::new(1, 5), Rational::new(2, 3), Rational::new(-3, 2)] {
        let jt = curve_from_l(&kt.j, &l, &t).unwrap();
        let v = verdict(&kt.spec, &jt, 2);
        assert!(v.cinf_pure_and_full() && v.pure_and_full(), "t = {t}");
    }
}
