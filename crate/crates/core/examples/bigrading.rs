// Split forms by (p,q)-type with respect to an almost-complex structure.

use nilcoh::catalog;
use nilcoh::{Error, GaussianRational, KForm};

/// A labelled form and the bidegrees it occupies.
pub type Row = (String, Vec<(usize, usize)>);

pub fn run_example() -> Result<Vec<Row>, Error> {
    let n6 = catalog::n6c();
    let one = GaussianRational::one();
    let forms = [
        ("e1^e2", KForm::monomial(6, &[1, 2], one.clone())),
        ("e3^e6 + e4^e5", KForm::monomial(6, &[3, 6], one.clone()).add(&KForm::monomial(6, &[4, 5], one.clone()))),
        ("e1^e3", KForm::monomial(6, &[1, 3], one)),
    ];
    Ok(forms
        .into_iter()
        .map(|(label, f)| {
            let split = n6.j.bigrade(&f);
            assert_eq!(split.sum(), f);
            (label.to_string(), split.types())
        })
        .collect())
}

fn main() -> Result<(), Error> {
    for (label, types) in run_example()? {
        println!("{label}: types {types:?}");
    }
    Ok(())
}
