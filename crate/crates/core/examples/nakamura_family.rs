// Nakamura deformations of the Iwasawa manifold: classes, coefficients, h±.

use nilcoh::almost_complex::verdict;
use nilcoh::catalog;
use nilcoh::deformation::{deformed_iwasawa, NakamuraParameters};
use nilcoh::{Error, GaussianRational, Rational};

pub fn run_example() -> Result<Vec<String>, Error> {
    let base = catalog::iwasawa();
    let half = GaussianRational::real(Rational::new(1, 2));
    let samples = [
        NakamuraParameters::zero().with("t31", half.clone()),
        NakamuraParameters::zero().with("t21", half.clone()),
        NakamuraParameters::zero().with("t11", half.clone()).with("t22", half),
    ];
    let mut lines = Vec::new();
    for t in &samples {
        let def = deformed_iwasawa(&base.spec, &base.j, t, Some(&NakamuraParameters::default_guard()))?;
        let v = verdict(&def.spec, &def.j, 2);
        lines.push(format!(
            "class {} D={} sigma12={} h+={} h-={} C-pure={} C-full={}",
            def.class,
            t.d(),
            def.coefficients.sigma_12,
            v.real_dim(1, 1),
            v.real_dim(2, 0),
            v.cinf_pure,
            v.cinf_full
        ));
    }
    Ok(lines)
}

fn main() -> Result<(), Error> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
