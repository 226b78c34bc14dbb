//! Δₙ and Γₙ ordered by inclusion of their 1-bits.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{enumerate_delta, enumerate_gamma, is_valid_correlation};
use crate::words::Correlation;

fn require_pair(t: &Correlation, other: &Correlation) -> Result<()> {
    if t.len() != other.len() {
        return Err(Error::LengthMismatch(t.len(), other.len()));
    }
    for x in [t, other] {
        if !is_valid_correlation(x) {
            return Err(Error::InvalidCorrelation(x.to_string()));
        }
    }
    Ok(())
}

/// Bitwise AND; Δₙ is closed under it.
pub fn meet(t: &Correlation, other: &Correlation) -> Result<Correlation> {
    require_pair(t, other)?;
    let m = t.intersection(other);
    debug_assert!(is_valid_correlation(&m), "Δ not closed under meet at {m}");
    Ok(m)
}

/// Least member of Δₙ containing both, found as the intersection of every
/// member above the bitwise OR.
pub fn join(t: &Correlation, other: &Correlation) -> Result<Correlation> {
    require_pair(t, other)?;
    let lower = t.union(other);
    let delta = enumerate_delta(t.len())?;
    Ok(delta
        .members
        .iter()
        .filter(|m| lower.is_subset(m))
        .fold(Correlation::ones(t.len()), |acc, m| acc.intersection(m)))
}

/// Covering relation of a finite set of correlations ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub n: usize,
    /// Sorted lexicographically.
    pub nodes: Vec<Correlation>,
    /// Whether each node is an autocorrelation (leading 1).
    pub autocorrelation: Vec<bool>,
    /// `(lower, upper)` node indices, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Transitive reduction of `⊂` over `members` (all of the same length).
    pub fn build(members: &[Correlation]) -> Self {
        let mut nodes = members.to_vec();
        nodes.sort();
        nodes.dedup();
        let n = nodes.first().map_or(0, |c| c.len());
        let mut edges = Vec::new();
        for (i, low) in nodes.iter().enumerate() {
            for (k, high) in nodes.iter().enumerate() {
                if !low.is_strict_subset(high) {
                    continue;
                }
                let covered = !nodes
                    .iter()
                    .any(|mid| low.is_strict_subset(mid) && mid.is_strict_subset(high));
                if covered {
                    edges.push((i, k));
                }
            }
        }
        edges.sort();
        let autocorrelation = nodes.iter().map(|c| c.first_one() == Some(0)).collect();
        HasseDiagram {
            n,
            nodes,
            autocorrelation,
            edges,
        }
    }

    pub fn index_of(&self, t: &Correlation) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    /// Unique minimal element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        self.unique(|i| self.edges.iter().all(|&(_, hi)| hi != i))
    }

    /// Unique maximal element, if there is one.
    pub fn top(&self) -> Option<usize> {
        self.unique(|i| self.edges.iter().all(|&(lo, _)| lo != i))
    }

    fn unique(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        let mut found = (0..self.nodes.len()).filter(|&i| pred(i));
        match (found.next(), found.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.nodes.len()];
        for &(lo, hi) in &self.edges {
            succ[lo].push(hi);
        }
        succ
    }

    /// Graphviz text, bottom at the bottom; autocorrelations are filled green.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (node, &auto) in self.nodes.iter().zip(&self.autocorrelation) {
            if auto {
                let _ = writeln!(
                    out,
                    "  \"{node}\" [style=filled, fillcolor=green, autocorrelation=true];"
                );
            } else {
                let _ = writeln!(out, "  \"{node}\";");
            }
        }
        for &(lo, hi) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.nodes[lo], self.nodes[hi]);
        }
        out.push_str("}\n");
        out
    }
}

pub fn hasse_delta(n: usize) -> Result<HasseDiagram> {
    Ok(HasseDiagram::build(&enumerate_delta(n)?.members))
}

pub fn hasse_gamma(n: usize) -> Result<HasseDiagram> {
    Ok(HasseDiagram::build(&enumerate_gamma(n)?.members))
}

/// Graphviz text for a diagram; the graph is named after its size.
pub fn export_dot(diagram: &HasseDiagram) -> String {
    diagram.to_dot(&format!("lattice_{}", diagram.n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanDedekind {
    pub holds: bool,
    /// A shortest maximal chain from bottom to top.
    pub shortest: Vec<Correlation>,
    /// A longest maximal chain from bottom to top.
    pub longest: Vec<Correlation>,
}

impl JordanDedekind {
    /// Chain lengths counted in covering steps.
    pub fn lengths(&self) -> (usize, usize) {
        (
            self.shortest.len().saturating_sub(1),
            self.longest.len().saturating_sub(1),
        )
    }
}

/// Compares the shortest and longest maximal chains between bottom and top.
pub fn check_jordan_dedekind(diagram: &HasseDiagram) -> Result<JordanDedekind> {
    let (Some(bottom), Some(top)) = (diagram.bottom(), diagram.top()) else {
        return Err(Error::InvalidArgument("diagram has no unique bottom and top".into()));
    };
    let (shortest, longest) = extreme_chains(diagram, bottom, top).expect("top is above bottom");
    Ok(JordanDedekind {
        holds: shortest.len() == longest.len(),
        shortest,
        longest,
    })
}

/// A shortest and a longest maximal chain from node `from` to node `to`, or
/// `None` when `to` is not above `from`.
///
/// Maximal chains are exactly the paths of covering edges, so both come from
/// one pass over the nodes in decreasing size.
pub fn extreme_chains(diagram: &HasseDiagram, from: usize, to: usize) -> Option<(Vec<Correlation>, Vec<Correlation>)> {
    let succ = diagram.successors();
    let mut order: Vec<usize> = (0..diagram.nodes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(diagram.nodes[i].count_ones()));
    // (path length to `to`, next hop)
    let mut shortest: Vec<Option<(usize, usize)>> = vec![None; diagram.nodes.len()];
    let mut longest: Vec<Option<(usize, usize)>> = vec![None; diagram.nodes.len()];
    shortest[to] = Some((0, to));
    longest[to] = Some((0, to));
    for &i in &order {
        if i == to {
            continue;
        }
        for &k in &succ[i] {
            if let Some((len, _)) = shortest[k] {
                if shortest[i].is_none_or(|(cur, _)| len + 1 < cur) {
                    shortest[i] = Some((len + 1, k));
                }
            }
            if let Some((len, _)) = longest[k] {
                if longest[i].is_none_or(|(cur, _)| len + 1 > cur) {
                    longest[i] = Some((len + 1, k));
                }
            }
        }
    }
    shortest[from]?;
    let walk = |table: &[Option<(usize, usize)>]| {
        let mut chain = vec![diagram.nodes[from].clone()];
        let mut at = from;
        while at != to {
            at = table[at].expect("reachable").1;
            chain.push(diagram.nodes[at].clone());
        }
        chain
    };
    Some((walk(&shortest), walk(&longest)))
}

/// Every length (in covering steps) of a maximal chain from `from` to `to`.
pub fn chain_lengths(diagram: &HasseDiagram, from: usize, to: usize) -> BTreeSet<usize> {
    let succ = diagram.successors();
    let mut memo: Vec<Option<BTreeSet<usize>>> = vec![None; diagram.nodes.len()];
    fn visit(i: usize, to: usize, succ: &[Vec<usize>], memo: &mut Vec<Option<BTreeSet<usize>>>) -> BTreeSet<usize> {
        if i == to {
            return BTreeSet::from([0]);
        }
        if let Some(known) = &memo[i] {
            return known.clone();
        }
        let mut out = BTreeSet::new();
        for &k in &succ[i] {
            out.extend(visit(k, to, succ, memo).into_iter().map(|l| l + 1));
        }
        memo[i] = Some(out.clone());
        out
    }
    visit(from, to, &succ, &mut memo)
}

/// Exhaustive closure check of Δₙ under meet; returns the first violating pair.
pub fn closure_violation(n: usize) -> Result<Option<(Correlation, Correlation)>> {
    let delta = enumerate_delta(n)?;
    let members: HashSet<&Correlation> = delta.members.iter().collect();
    for (i, a) in delta.members.iter().enumerate() {
        for b in &delta.members[i..] {
            if !members.contains(&a.intersection(b)) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}
