// Harmonic forms for the orthonormal invariant metric and the pure-degree criterion.

use nilcoh::almost_complex::AlmostComplexStructure;
use nilcoh::catalog;
use nilcoh::dsl::render_expr;
use nilcoh::hodge::{harmonic_basis, pure_degree_harmonic_criterion};
use nilcoh::Error;

pub fn run_example() -> Result<(Vec<String>, bool), Error> {
    let ex = catalog::solv6();
    let forms: Vec<String> = harmonic_basis(&ex.spec, 2).iter().map(|f| render_expr(f, ex.spec.names())).collect();
    let j: &AlmostComplexStructure = &ex.j;
    Ok((forms, pure_degree_harmonic_criterion(&ex.spec, j, 2).holds))
}

fn main() -> Result<(), Error> {
    let (forms, pure) = run_example()?;
    for f in &forms {
        println!("harmonic: {f}");
    }
    println!("every harmonic 2-form splits into pure-type harmonic pieces: {pure}");
    Ok(())
}
