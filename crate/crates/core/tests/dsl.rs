use nilcoh::almost_complex::conjugated_standard;
use nilcoh::catalog;
use nilcoh::dsl::{parse, render, ComplexDecl};
use nilcoh::{GaussianRational, KForm, LieAlgebraSpec, Matrix, Rational};
use proptest::prelude::*;

#[test]
fn whole_catalog_round_trips() {
    for name in catalog::NAMES {
        let doc = parse(catalog::source(name).unwrap()).unwrap();
        assert_eq!(parse(&render(&doc)).unwrap(), doc, "{name}");
        assert!(doc.warnings.is_empty(), "{name}");
    }
}

#[test]
fn iwasawa_file_gives_d_phi3() {
    let ex = catalog::iwasawa();
    assert!(matches!(ex.document.complex, Some(ComplexDecl::Holomorphic(_))));
    let psi = ex.j.psi_spec(&ex.spec);
    // φ¹, φ², φ³ are coframe slots 1, 2, 3 of the ψ-spec.
    let expected = KForm::monomial(6, &[1, 2], -GaussianRational::one());
    assert_eq!(psi.d_coframe(3), &expected);
    assert!(psi.d_coframe(1).is_zero() && psi.d_coframe(2).is_zero());
}

#[test]
fn solv6_third_structure_equation() {
    let doc = parse("dim 6\nd e3 = -1*e1^e3 - 1*e2^e5\n").unwrap();
    let one = GaussianRational::one();
    let expected = KForm::monomial(6, &[1, 3], -one.clone()).sub(&KForm::monomial(6, &[2, 5], one));
    assert_eq!(doc.spec.d_coframe(3), &expected);
    assert_eq!(doc.spec.d_coframe(3), catalog::solv6().spec.d_coframe(3));
}

#[test]
fn empty_differentials_give_abelian_spec() {
    let doc = parse("dim 6\nd e1 =\nd e2 =\nd e3 =\nd e4 =\nd e5 =\nd e6 =\n").unwrap();
    assert_eq!(doc.spec, LieAlgebraSpec::abelian(6));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn random_two_form(dim: usize) -> impl Strategy<Value = KForm> {
    let pairs = dim * (dim - 1) / 2;
    proptest::collection::vec(small_rational(), pairs).prop_map(move |cs| {
        let mut f = KForm::zero(dim, 2);
        let mut it = cs.into_iter();
        for a in 1..=dim {
            for b in a + 1..=dim {
                let c = it.next().unwrap();
                if !c.is_zero() {
                    f = f.add(&KForm::monomial(dim, &[a, b], GaussianRational::real(c)));
                }
            }
        }
        f
    })
}

fn document_text() -> impl Strategy<Value = String> {
    (prop_oneof![Just(4usize), Just(6usize)]).prop_flat_map(|dim| {
        (
            proptest::collection::vec(random_two_form(dim), dim),
            proptest::collection::vec(-2i64..=2, dim * dim),
            random_two_form(dim),
        )
            .prop_map(move |(ds, p, omega)| {
                let names: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
                let spec = LieAlgebraSpec::new(names.clone(), ds).unwrap();
                let mut text = format!("dim {dim}\nbasis {}\n", names.join(" "));
                for i in 1..=dim {
                    text.push_str(&format!("d {} = {}\n", names[i - 1], nilcoh::dsl::render_expr(spec.d_coframe(i), &names)));
                }
                let rows: Vec<&[i64]> = p.chunks(dim).collect();
                let p = Matrix::from_i64(&rows).add(&Matrix::identity(dim).scale(&GaussianRational::from_ints(7, 0)));
                if let Ok(j) = conjugated_standard(dim, &p) {
                    for (i, row) in j.matrix().row_vectors().iter().enumerate() {
                        let form = KForm::from_terms(dim, 1, row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (nilcoh::MultiIndex::from_sorted(&[k + 1]).unwrap(), c.clone())));
                        text.push_str(&format!("J {} -> {}\n", names[i], nilcoh::dsl::render_expr(&form, &names)));
                    }
                }
                text.push_str(&format!("omega = {}\n", nilcoh::dsl::render_expr(&omega, &names)));
                text
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn parse_render_parse_is_identity(text in document_text()) {
        let doc = parse(&text).unwrap();
        let again = parse(&render(&doc)).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(render(&again), render(&doc));
    }
}
