// Read a structure-equation document, inspect it, write it back out.

use nilcoh::dsl::{parse, render};
use nilcoh::Error;

const SOURCE: &str = "\
# Kodaira–Thurston with a rotated J
dim 4
basis x y z w
d w = x^y
J x -> -1*y
J y -> x
J z -> -1*w
J w -> z
omega = x^z + y^w
";

pub fn run_example() -> Result<(String, bool), Error> {
    let doc = parse(SOURCE)?;
    let text = render(&doc);
    let again = parse(&text)?;
    Ok((text, again == doc))
}

fn main() -> Result<(), Error> {
    let (text, round_trip) = run_example()?;
    print!("{text}");
    println!("# round trip: {round_trip}");
    Ok(())
}
