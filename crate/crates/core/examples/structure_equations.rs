// Build a Lie algebra from structure equations, extend d to all forms, check d² = 0.

use nilcoh::exterior::DSquared;
use nilcoh::{Error, GaussianRational, KForm, LieAlgebraSpec};

pub fn run_example() -> Result<(String, bool, bool), Error> {
    let one = GaussianRational::one();
    // Kodaira–Thurston: de4 = e1^e2.
    let mut d1 = vec![KForm::zero(4, 2); 4];
    d1[3] = KForm::monomial(4, &[1, 2], one.clone());
    let kt = LieAlgebraSpec::with_default_names(d1)?;

    let e34 = KForm::monomial(4, &[3, 4], one.clone());
    let d_e34 = kt.differential(&e34);
    let rendered = nilcoh::dsl::render_expr(&d_e34, kt.names());

    // de1 = e2^e3, de3 = e1^e3 is not a Lie algebra.
    let mut bad = vec![KForm::zero(4, 2); 4];
    bad[0] = KForm::monomial(4, &[2, 3], one.clone());
    bad[2] = KForm::monomial(4, &[1, 3], one);
    let broken = LieAlgebraSpec::with_default_names(bad)?;
    let broken_fails = matches!(broken.check_d_squared(), DSquared::Fail { index: 1, .. });
    Ok((rendered, kt.check_d_squared().passed(), broken_fails))
}

fn main() -> Result<(), Error> {
    let (d_e34, kt_ok, broken_fails) = run_example()?;
    println!("kt4: d(e3^e4) = {d_e34}");
    println!("kt4: d^2 = 0: {kt_ok}");
    println!("de1 = e2^e3, de3 = e1^e3: d^2 fails at e1: {broken_fails}");
    Ok(())
}
