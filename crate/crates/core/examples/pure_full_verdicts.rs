// C∞-pure/full and pure/full at every stage, with witnesses for failures.

use nilcoh::almost_complex::verdicts_all_stages;
use nilcoh::catalog;
use nilcoh::dsl::render_expr;
use nilcoh::Error;

pub fn run_example() -> Result<Vec<String>, Error> {
    let mut lines = Vec::new();
    for name in ["iwasawa", "iwasawa-def-ii", "solv6"] {
        let ex = catalog::load(name)?;
        for v in verdicts_all_stages(&ex.spec, &ex.j) {
            lines.push(format!(
                "{name} k={}: b={} C-pure={} C-full={} pure={} full={}",
                v.stage, v.betti, v.cinf_pure, v.cinf_full, v.pure, v.full
            ));
            for w in &v.witnesses {
                lines.push(format!("    {} witness: {}", w.flag, render_expr(&w.form, ex.spec.names())));
            }
        }
    }
    Ok(lines)
}

fn main() -> Result<(), Error> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
