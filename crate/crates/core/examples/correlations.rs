//! Correlation, borders and periods of concrete words.
//!
//! cargo run --example correlations -- abab babb

use corrpop::words::{autocorrelation, borders, correlation, period_set, Word};

fn main() -> corrpop::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (u, v) = match args.as_slice() {
        [u, v] => (u.clone(), v.clone()),
        _ => ("abab".to_string(), "babb".to_string()),
    };
    let u = Word::parse(&u, 2)?;
    let v = Word::parse(&v, 2)?;
    println!("c({u}, {v}) = {}", correlation(&u, &v)?);
    for b in borders(&u, &v)? {
        println!("  border {b}");
    }
    for w in [&u, &v] {
        let periods = period_set(w);
        println!("c({w}, {w}) = {}, periods {:?}", autocorrelation(w), periods.periods());
    }
    Ok(())
}
