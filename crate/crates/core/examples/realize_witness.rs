//! Binary witnesses for every correlation of length 6.

use corrpop::realize::{realize_autocorrelation, realize_correlation, verify_realization};
use corrpop::sets::{enumerate_delta, enumerate_gamma};

fn main() -> corrpop::Result<()> {
    for t in &enumerate_delta(6)?.members {
        let pair = realize_correlation(t)?;
        assert!(verify_realization(t, &pair));
        println!("{t}  {}  {}", pair.u, pair.v);
    }
    println!();
    for s in &enumerate_gamma(9)?.members {
        println!("{s}  {}", realize_autocorrelation(s)?);
    }
    Ok(())
}
