//! Writes the Hasse diagram of Δₙ as Graphviz and reports its chains.
//!
//! cargo run --example lattice_dot -- 5 > delta5.dot

use corrpop::lattice::{check_jordan_dedekind, export_dot, hasse_delta, join, meet};

fn main() -> corrpop::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let diagram = hasse_delta(n)?;
    let jd = check_jordan_dedekind(&diagram)?;
    let (short, long) = jd.lengths();
    eprintln!(
        "{} nodes, {} covers; maximal chains of length {short} and {long}",
        diagram.nodes.len(),
        diagram.edges.len()
    );
    let (a, b) = (&diagram.nodes[1], &diagram.nodes[diagram.nodes.len() - 2]);
    eprintln!("{a} ∧ {b} = {}, {a} ∨ {b} = {}", meet(a, b)?, join(a, b)?);
    print!("{}", export_dot(&diagram));
    Ok(())
}
