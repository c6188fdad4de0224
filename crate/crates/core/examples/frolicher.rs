// Frölicher inequality per degree and E1 degeneration.

use nilcoh::almost_complex::frolicher_degenerate;
use nilcoh::catalog;
use nilcoh::Error;

pub fn run_example() -> Result<Vec<(String, bool)>, Error> {
    ["torus3", "iwasawa", "iwasawa-def-ii", "iwasawa-def-iii"]
        .iter()
        .map(|name| {
            let ex = catalog::load(name)?;
            Ok((name.to_string(), frolicher_degenerate(&ex.spec, &ex.j)?.degenerate))
        })
        .collect()
}

fn main() -> Result<(), Error> {
    for (name, degenerate) in run_example()? {
        println!("{name}: E1 degeneration {degenerate}");
    }
    Ok(())
}
