//! Limiting population ratios for short suffixes and how the exact ratios approach them.

use corrpop::analytics::{ratio_bounds, ratio_convergence_probe};
use corrpop::Correlation;

fn main() -> corrpop::Result<()> {
    println!("sigma  s     c·p(s)   bounds");
    for sigma in [2, 3, 24] {
        for s in ["", "1", "10", "11"] {
            let est = ratio_bounds(&s.parse()?, sigma)?;
            println!(
                "{sigma:>5}  {s:<4}  {:.6}  [{:.3}, {:.3})",
                est.lower, est.lower, est.upper
            );
        }
    }
    let s: Correlation = "1".parse()?;
    let probe = ratio_convergence_probe(&s, 2, 16)?;
    println!("\np(0^(n-1) 1) / 4^n:");
    for p in &probe.points {
        println!("  n={:>2}  {:.6}", p.n, p.ratio);
    }
    Ok(())
}
