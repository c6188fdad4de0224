// Hard Lefschetz condition for invariant symplectic forms.

use nilcoh::catalog;
use nilcoh::hodge::{hlc_check, SymplecticForm};
use nilcoh::Error;

pub fn run_example() -> Result<Vec<(String, bool, Option<usize>)>, Error> {
    ["torus2", "torus3", "kt4", "n6c"]
        .iter()
        .map(|name| {
            let ex = catalog::load(name)?;
            let omega = ex.omega.clone().expect("catalog entry declares omega");
            let report = hlc_check(&ex.spec, &SymplecticForm::new(&ex.spec, omega)?);
            Ok((name.to_string(), report.holds, report.first_failure()))
        })
        .collect()
}

fn main() -> Result<(), Error> {
    for (name, holds, failure) in run_example()? {
        match failure {
            None => println!("{name}: HLC holds = {holds}"),
            Some(k) => println!("{name}: HLC fails at k = {k}"),
        }
    }
    Ok(())
}
