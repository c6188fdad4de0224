// Drive the command-line front end in-process and read its JSON report.

use nilcoh::cli::run_cli;
use nilcoh::Error;

pub fn run_example() -> Result<(i32, serde_json::Value), Error> {
    let outcome = run_cli(["nilcoh", "verdict", "--stage", "2", "--catalog", "solv6"]);
    let json = serde_json::from_str(&outcome.stdout).map_err(|e| Error::Usage(e.to_string()))?;
    Ok((outcome.code, json))
}

fn main() -> Result<(), Error> {
    let (code, json) = run_example()?;
    println!("exit {code}");
    println!("{}", serde_json::to_string_pretty(&json).unwrap_or_default());
    Ok(())
}
