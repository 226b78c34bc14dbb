//! Γₙ and Δₙ for small n, and how fast they grow.

use corrpop::sets::{cardinalities, decompose, enumerate_delta, enumerate_gamma};

fn main() -> corrpop::Result<()> {
    let n = 5;
    println!("Γ{n}:");
    for s in &enumerate_gamma(n)?.members {
        println!("  {s}");
    }
    println!("Δ{n} (leading zeros | autocorrelation suffix):");
    for t in &enumerate_delta(n)?.members {
        let d = decompose(t).expect("members are valid");
        println!("  {t}  = 0^{} | {:?}", n - d.j, d.suffix);
    }
    println!("\n n  kappa  delta  ln(kappa)/ln²n");
    for row in cardinalities(16)?.iter().skip(2) {
        println!(
            "{:>2} {:>6} {:>6}  {:.3}",
            row.n,
            row.kappa,
            row.delta,
            row.kappa_normalized.unwrap_or_default()
        );
    }
    Ok(())
}
