//! Runs every cross-check for a few (n, σ) and prints the reports.

use corrpop::verify::verify;
use corrpop::words::Budget;

fn main() -> corrpop::Result<()> {
    for (n, sigma) in [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3)] {
        let report = verify(n, sigma, &Budget::default())?;
        println!("n = {n}, sigma = {sigma}\n{report}\n");
    }
    Ok(())
}
