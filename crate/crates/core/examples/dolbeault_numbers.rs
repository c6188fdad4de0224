// Dolbeault numbers of the Iwasawa manifold and its Nakamura deformations.

use nilcoh::almost_complex::hodge_numbers;
use nilcoh::catalog;
use nilcoh::Error;

const ROW: [(usize, usize); 9] = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];

pub fn run_example() -> Result<Vec<(String, Vec<usize>)>, Error> {
    ["iwasawa", "iwasawa-def-i", "iwasawa-def-ii", "iwasawa-def-iii"]
        .iter()
        .map(|name| {
            let ex = catalog::load(name)?;
            let h = hodge_numbers(&ex.spec, &ex.j)?;
            Ok((name.to_string(), ROW.iter().map(|k| h[k]).collect()))
        })
        .collect()
}

fn main() -> Result<(), Error> {
    println!("{:>16}  h10 h01 h20 h11 h02 h30 h21 h12 h03", "");
    for (name, row) in run_example()? {
        let cells: Vec<String> = row.iter().map(|d| format!("{d:>3}")).collect();
        println!("{name:>16}  {}", cells.join(" "));
    }
    Ok(())
}
