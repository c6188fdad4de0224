use nilcoh::almost_complex::{
    conjugated_standard, pure_type_subgroups, verdict, verdicts_all_stages, AlmostComplexStructure,
};
use nilcoh::catalog;
use nilcoh::cohomology::{betti_numbers, cohomology, pairing_matrix, poincare_pairing};
use nilcoh::deformation::{
    classify, curve_from_l, deformed_iwasawa, l_from_anti_invariant, NakamuraParameters,
};
use nilcoh::exterior::MonomialBasis;
use nilcoh::hodge::{codifferential, hodge_star};
use nilcoh::{GaussianRational, KForm, LieAlgebraSpec, Matrix, MultiIndex, Rational};
use proptest::prelude::*;

type G = GaussianRational;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = G> {
    (rational(), rational()).prop_map(|(a, b)| G::new(a, b))
}

fn form(dim: usize, degree: usize, real: bool) -> impl Strategy<Value = KForm> {
    let basis = MonomialBasis::new(dim, degree);
    let len = basis.len();
    proptest::collection::vec((rational(), rational(), 0u8..3), len).prop_map(move |cs| {
        let v: Vec<G> = cs
            .into_iter()
            .map(|(a, b, keep)| match (keep, real) {
                (0, _) => G::zero(),
                (_, true) => G::real(a),
                _ => G::new(a, b),
            })
            .collect();
        KForm::from_vector(&basis, &v)
    })
}

fn catalog_entry() -> impl Strategy<Value = &'static str> {
    proptest::sample::select(catalog::NAMES.to_vec())
}

fn spec_of(name: &str) -> LieAlgebraSpec {
    catalog::load(name).unwrap().spec
}

/// A random integer matrix shifted by `7·I`, so it is invertible with high probability.
fn shear(dim: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-2i64..=2, dim * dim).prop_map(move |v| {
        let rows: Vec<&[i64]> = v.chunks(dim).collect();
        Matrix::from_i64(&rows).add(&Matrix::identity(dim).scale(&G::from_ints(7, 0)))
    })
}

fn random_j(dim: usize) -> impl Strategy<Value = AlmostComplexStructure> {
    shear(dim).prop_filter_map("singular conjugator", move |p| conjugated_standard(dim, &p).ok())
}

fn sign_of_permutation(v: &[usize]) -> i8 {
    let mut inversions = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(a.modulus_squared(), (&a * &a.conj()).re.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn scalar_display_parses_back(a in gaussian()) {
        let back: G = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn normalization_sign_is_permutation_parity(v in proptest::collection::vec(1usize..=8, 0..6)) {
        let mut sorted = v.clone();
        sorted.sort_unstable();
        sorted.dedup();
        match MultiIndex::normalize(&v) {
            None => prop_assert!(sorted.len() < v.len()),
            Some((sign, m)) => {
                prop_assert_eq!(sorted.len(), v.len());
                prop_assert_eq!(m.indices(), sorted);
                prop_assert_eq!(sign, sign_of_permutation(&v));
            }
        }
    }

    #[test]
    fn graded_commutativity(a in form(6, 1, false), b in form(6, 2, false), c in form(6, 3, false), e in form(6, 1, false)) {
        prop_assert_eq!(a.wedge(&e), e.wedge(&a).neg());
        prop_assert_eq!(a.wedge(&b), b.wedge(&a));
        prop_assert_eq!(b.wedge(&c), c.wedge(&b));
        prop_assert_eq!(a.wedge(&c), c.wedge(&a).neg());
        prop_assert_eq!(c.wedge(&c.clone()).is_zero(), true);
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn d_is_an_anti_derivation_and_squares_to_zero(
        name in catalog_entry(),
        a in form(6, 2, false),
        b in form(6, 1, false),
    ) {
        let spec = spec_of(name);
        prop_assume!(spec.dim() == 6);
        let lhs = spec.differential(&a.wedge(&b));
        let rhs = spec.differential(&a).wedge(&b).add(&a.wedge(&spec.differential(&b)));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(spec.differential(&spec.differential(&a)).is_zero());
        prop_assert!(spec.check_d_squared().passed());
    }

    #[test]
    fn pairing_ignores_exact_changes(name in catalog_entry(), g1 in form(6, 1, false), g3 in form(6, 3, false), seed in 0usize..64) {
        let spec = spec_of(name);
        prop_assume!(spec.dim() == 6);
        let h2 = cohomology(&spec, 2);
        let h4 = cohomology(&spec, 4);
        prop_assume!(h2.dim() > 0 && h4.dim() > 0);
        let a = &h2.representatives()[seed % h2.dim()];
        let b = &h4.representatives()[(seed / 8) % h4.dim()];
        let base = poincare_pairing(&spec, a, b).unwrap();
        let shifted = poincare_pairing(&spec, &a.add(&spec.differential(&g1)), &b.add(&spec.differential(&g3))).unwrap();
        prop_assert_eq!(base, shifted);
    }

    #[test]
    fn codifferential_is_adjoint_and_star_is_isometry(name in catalog_entry(), a in form(6, 2, true), b in form(6, 3, true)) {
        let spec = spec_of(name);
        prop_assume!(spec.dim() == 6);
        prop_assert_eq!(spec.differential(&a).inner(&b), a.inner(&codifferential(&spec, &b)));
        prop_assert_eq!(hodge_star(&a).inner(&hodge_star(&a)), a.inner(&a));
        // ** = (-1)^{k(m-k)}, which is -1 on 3-forms in dimension 6.
        prop_assert_eq!(hodge_star(&hodge_star(&b)), b.neg());
        prop_assert_eq!(hodge_star(&hodge_star(&a)), a.clone());
    }

    #[test]
    fn bigrade_reassembles_and_is_idempotent(j in random_j(6), f in form(6, 3, false)) {
        let split = j.bigrade(&f);
        prop_assert_eq!(split.sum(), f);
        for (p, q) in split.types() {
            let piece = split.component(p, q);
            let again = j.bigrade(&piece);
            prop_assert_eq!(again.types(), vec![(p, q)]);
            prop_assert_eq!(again.component(p, q), piece);
        }
    }

    #[test]
    fn invariant_forms_have_no_pure_pair_part(j in random_j(4), f in form(4, 2, true)) {
        // A real 2-form is J-invariant exactly when it has no (2,0)+(0,2) part.
        let split = j.bigrade(&f);
        let invariant = j.pullback(&f) == f;
        prop_assert_eq!(invariant, split.component(2, 0).is_zero() && split.component(0, 2).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn four_manifolds_are_pure_and_full(base in proptest::sample::select(vec!["torus2", "kt4"]), j in random_j(4)) {
        let spec = spec_of(base);
        let v = verdict(&spec, &j, 2);
        prop_assert!(v.cinf_pure_and_full() && v.pure_and_full(), "{base}: {v:?}");
        let dims: usize = v.real_dims.iter().map(|(_, d)| d).sum();
        prop_assert_eq!(dims, v.betti);
    }

    #[test]
    fn real_groups_are_conjugation_stable(name in catalog_entry(), k in 1usize..=3) {
        let ex = catalog::load(name).unwrap();
        let groups = pure_type_subgroups(&ex.spec, &ex.j, k);
        for (_, g) in &groups.real {
            prop_assert!(g.coords().is_conj_stable());
        }
    }

    #[test]
    fn curves_stay_almost_complex(gamma in form(6, 2, true), t in rational()) {
        let n6 = catalog::n6c();
        let j = &n6.j;
        // Anti-invariant part of a random real 2-form.
        let anti = gamma.sub(&j.pullback(&gamma)).scale(&G::real(Rational::new(1, 2)));
        let l = l_from_anti_invariant(j, &anti).unwrap();
        let lj = l.mul(j.matrix()).add(&j.matrix().mul(&l));
        prop_assert!(lj.is_zero());
        if let Ok(jt) = curve_from_l(j, &l, &t) {
            let sq = jt.matrix().mul(jt.matrix());
            prop_assert_eq!(sq, Matrix::identity(6).scale(&G::from_ints(-1, 0)));
        }
    }

    #[test]
    fn class_ignores_t31_t32(
        t in proptest::collection::vec(proptest::sample::select(vec![G::zero(), G::from_fracs(1, 4, 0, 1), G::from_fracs(0, 1, -1, 4), G::from_fracs(1, 4, 1, 4)]), 6),
    ) {
        let mut p = NakamuraParameters::zero();
        for (name, v) in nilcoh::deformation::PARAMETER_NAMES.iter().zip(&t) {
            p = p.with(name, v.clone());
        }
        let class = classify(&p);
        let moved = p.clone().with("t31", G::from_ints(3, 1)).with("t32", G::from_fracs(-1, 2, 5, 1));
        prop_assert_eq!(classify(&moved), class);
    }

    #[test]
    fn deformations_keep_betti_numbers(
        t in proptest::collection::vec(proptest::sample::select(vec![G::zero(), G::from_fracs(1, 3, 0, 1), G::from_fracs(0, 1, 1, 3), G::from_fracs(-1, 4, 1, 4)]), 6),
    ) {
        let base = catalog::iwasawa();
        let mut p = NakamuraParameters::zero();
        for (name, v) in nilcoh::deformation::PARAMETER_NAMES.iter().zip(&t) {
            p = p.with(name, v.clone());
        }
        let def = deformed_iwasawa(&base.spec, &base.j, &p, Some(&NakamuraParameters::default_guard()));
        prop_assume!(def.is_ok());
        let def = def.unwrap();
        prop_assert_eq!(betti_numbers(&def.spec), vec![1, 4, 8, 10, 8, 4, 1]);
        prop_assert!(def.j.is_integrable(&def.spec));
        if p.d().is_zero() {
            let psi = def.j.psi_spec(&def.spec);
            prop_assert_eq!(psi.d_coframe(3), &def.coefficients.d_phi3());
        }
    }
}

#[test]
fn diagonal_class_iii_structure_equation() {
    // t11 = a, t22 = b: dφ³_t = -AB(1 - |ab|²) φ¹² + b B φ^{12̄} - a A φ^{21̄},
    // with A = 1/(1 - |a|²), B = 1/(1 - |b|²), worked out by hand from the coframe.
    let base = catalog::iwasawa();
    for (a, b) in [(G::from_fracs(0, 1, 1, 3), G::from_fracs(1, 3, 0, 1)), (G::from_fracs(1, 2, 0, 1), G::from_fracs(1, 2, 0, 1))] {
        let p = NakamuraParameters::zero().with("t11", a.clone()).with("t22", b.clone());
        let def = deformed_iwasawa(&base.spec, &base.j, &p, None).unwrap();
        let one = G::one();
        let big_a = (&one - &G::real(a.modulus_squared())).inv().unwrap();
        let big_b = (&one - &G::real(b.modulus_squared())).inv().unwrap();
        let ab = &a * &b;
        let s12 = -&(&(&big_a * &big_b) * &(&one - &G::real(ab.modulus_squared())));
        let expected = KForm::monomial(6, &[1, 2], s12)
            .add(&KForm::monomial(6, &[1, 5], &b * &big_b))
            .add(&KForm::monomial(6, &[2, 4], -&(&a * &big_a)));
        assert_eq!(def.j.psi_spec(&def.spec).d_coframe(3), &expected, "t11 = {a}, t22 = {b}");
    }
}

#[test]
fn implication_arrows_over_the_catalog() {
    for name in catalog::NAMES {
        let ex = catalog::load(name).unwrap();
        let integrable = ex.j.is_integrable(&ex.spec);
        for v in verdicts_all_stages(&ex.spec, &ex.j) {
            assert!(!v.cinf_full || v.pure, "{name} k={}", v.stage);
            assert!(!v.full || v.cinf_pure, "{name} k={}", v.stage);
            if integrable {
                assert!(!v.complex_cinf_pure || v.cinf_pure, "{name} k={}", v.stage);
            }
            if v.cinf_pure && v.cinf_full {
                assert_eq!(v.real_dims.iter().map(|(_, d)| d).sum::<usize>(), v.betti, "{name} k={}", v.stage);
            }
            let failed = [
                ("cinf_pure", v.cinf_pure),
                ("cinf_full", v.cinf_full),
                ("pure", v.pure),
                ("full", v.full),
                ("complex_cinf_pure", v.complex_cinf_pure),
                ("complex_cinf_full", v.complex_cinf_full),
            ];
            for (flag, ok) in failed {
                if !ok {
                    let w = v.witness(flag).unwrap_or_else(|| panic!("{name} k={} {flag} has no witness", v.stage));
                    let h = cohomology(&ex.spec, w.degree);
                    assert!(!h.is_exact(&w.form).unwrap(), "{name} k={} {flag} witness is exact", v.stage);
                }
            }
        }
    }
}

#[test]
fn pairing_is_nondegenerate_and_euler_characteristic_vanishes() {
    for name in catalog::NAMES {
        let spec = spec_of(name);
        let b = betti_numbers(&spec);
        let m = spec.dim();
        let euler: i64 = b.iter().enumerate().map(|(k, x)| if k % 2 == 0 { *x as i64 } else { -(*x as i64) }).sum();
        assert_eq!(euler, 0, "{name}");
        for k in 0..=m {
            assert_eq!(b[k], b[m - k], "{name} k={k}");
            let p = pairing_matrix(&cohomology(&spec, k), &cohomology(&spec, m - k)).unwrap();
            assert_eq!(p.rank(), b[k], "{name} k={k}");
        }
    }
}
