// Poincaré pairing between H^k and H^{2n-k}; nondegeneracy on a nilmanifold.

use nilcoh::catalog;
use nilcoh::cohomology::{cohomology, pairing_matrix};
use nilcoh::Error;

pub fn run_example() -> Result<Vec<(usize, usize, usize)>, Error> {
    let spec = catalog::iwasawa().spec;
    let m = spec.dim();
    (0..=m)
        .map(|k| {
            let left = cohomology(&spec, k);
            let right = cohomology(&spec, m - k);
            let pairing = pairing_matrix(&left, &right)?;
            Ok((k, left.dim(), pairing.rank()))
        })
        .collect()
}

fn main() -> Result<(), Error> {
    for (k, b, rank) in run_example()? {
        println!("H^{k} x H^{}: b = {b}, pairing rank = {rank}", 6 - k);
    }
    Ok(())
}
