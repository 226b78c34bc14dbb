//! Population sizes of Δ₄ for σ = 2..5, by each method, as CSV.

use corrpop::population::{population_table, Method};

fn main() -> corrpop::Result<()> {
    let reference = population_table(4, &[2, 3, 4, 5], Method::Rec1)?;
    for method in [Method::Rec2, Method::Nfc, Method::Brute] {
        let sigmas: &[u32] = if method == Method::Brute {
            &[2, 3]
        } else {
            &[2, 3, 4, 5]
        };
        let table = population_table(4, sigmas, method)?;
        for row in &table.rows {
            for (sigma, count) in sigmas.iter().zip(&row.counts) {
                assert_eq!(reference.get(&row.correlation, *sigma), Some(count));
            }
        }
    }
    print!("{}", reference.to_csv());
    Ok(())
}
