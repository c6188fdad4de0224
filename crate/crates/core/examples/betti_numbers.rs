// Invariant Betti numbers of every catalog entry.

use nilcoh::catalog;
use nilcoh::cohomology::betti_numbers;
use nilcoh::Error;

pub fn run_example() -> Result<Vec<(String, Vec<usize>)>, Error> {
    catalog::NAMES
        .iter()
        .map(|name| Ok((name.to_string(), betti_numbers(&catalog::load(name)?.spec))))
        .collect()
}

fn main() -> Result<(), Error> {
    for (name, b) in run_example()? {
        println!("{name:>16}: {b:?}");
    }
    Ok(())
}
