// Exact arithmetic in ℚ(i): parsing, field operations, division by zero.

use nilcoh::{Error, GaussianRational};

pub fn run_example() -> Result<Vec<String>, Error> {
    let a: GaussianRational = "1/2+3/4*i".parse()?;
    let b: GaussianRational = "-2/3*i".parse()?;
    let product = &a * &b;
    let quotient = a.checked_div(&b)?;
    let norm = a.modulus_squared();
    let failure = a.checked_div(&GaussianRational::zero()).unwrap_err();
    Ok(vec![
        format!("a = {a}"),
        format!("b = {b}"),
        format!("a * b = {product}"),
        format!("a / b = {quotient}"),
        format!("|a|^2 = {norm}"),
        format!("a / 0 -> {failure}"),
    ])
}

fn main() -> Result<(), Error> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
