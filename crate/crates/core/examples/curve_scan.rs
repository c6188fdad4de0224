// Curve of almost-complex structures from an anti-invariant 2-form; h⁻ along it.

use nilcoh::catalog;
use nilcoh::deformation::{l_from_anti_invariant, semicontinuity_scan};
use nilcoh::{Error, Rational};

/// `(t, h⁺, h⁻)`.
pub type Row = (String, usize, usize);

pub fn run_example() -> Result<(Vec<Row>, bool), Error> {
    let n6 = catalog::n6c();
    let l = l_from_anti_invariant(&n6.j, &catalog::n6c_anti_invariant())?;
    let samples = [Rational::zero(), Rational::new(1, 8), Rational::new(1, 4), Rational::new(1, 2)];
    let scan = semicontinuity_scan(&n6.spec, &n6.j, &l, &samples, false)?;
    let rows = scan.rows.iter().map(|r| (r.t.to_string(), r.h_plus(), r.h_minus())).collect();
    Ok((rows, scan.upper_semicontinuous))
}

fn main() -> Result<(), Error> {
    let (rows, usc) = run_example()?;
    for (t, plus, minus) in rows {
        println!("t = {t}: h+ = {plus}, h- = {minus}");
    }
    println!("h- upper-semicontinuous at 0: {usc}");
    Ok(())
}
