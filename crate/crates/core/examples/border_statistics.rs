//! How many pairs have a longest border of each length, and its expectation.

use corrpop::analytics::{expected_longest_border, longest_border_counts, DEFAULT_THRESHOLD};

fn main() -> corrpop::Result<()> {
    let sigma = 2;
    let table = longest_border_counts(6, sigma)?;
    println!("n = 6, sigma = {sigma}");
    for (j, count) in table.counts.iter().enumerate() {
        println!("  L_{j} = {count}");
    }
    println!("  u = v: {}", table.equal_pairs);
    println!("  L_[1..3] = {}", table.range(1, 3)?);
    println!("\n n  E(X)");
    for n in 1..=14 {
        let e = expected_longest_border(n, sigma, false, DEFAULT_THRESHOLD)?;
        println!("{n:>2}  {:.6}  ({})", e.value_f64, e.value);
    }
    let e = expected_longest_border(14, sigma, false, DEFAULT_THRESHOLD)?;
    println!("limit in [{:.4}, {}]", e.asymptotic_lower_bound, e.upper_bound);
    Ok(())
}
