//! Cross-checks of every counting route against the exhaustive oracles.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::population::{pop_corr, pop_right, Method};
use crate::realize::{realize_correlation, verify_realization};
use crate::sets::enumerate_delta;
use crate::words::{
    brute_autocorrelation_table, brute_population_table, brute_right_population, Budget, Correlation, PopCount,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First failure, if any.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub sigma: u32,
    pub correlations: usize,
    /// `Σ_t p(t)` by the first recurrence.
    pub sum: PopCount,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "ok" } else { "FAILED" };
            write!(f, "{:<24} {status}", check.name)?;
            if let Some(detail) = &check.detail {
                write!(f, "  ({detail})")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{} correlations checked", self.correlations)?;
        if self.passed() {
            write!(f, "all methods agree, sum = {}", self.sum)
        } else {
            write!(f, "verification failed, sum = {}", self.sum)
        }
    }
}

struct Tally {
    name: &'static str,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, failure: None }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name,
            passed: self.failure.is_none(),
            detail: self.failure,
        }
    }
}

/// Runs every identity over Δₙ at alphabet size `sigma`; brute-force
/// enumeration is limited by `budget`.
pub fn verify(n: usize, sigma: u32, budget: &Budget) -> Result<VerifyReport> {
    let delta = enumerate_delta(n)?;
    let brute = brute_population_table(n, sigma, budget)?;
    let doubled = brute_autocorrelation_table(2 * n, sigma, budget)?;

    let mut agree = Tally::new("methods agree");
    let mut g = Tally::new("p(t) = g(t)");
    let mut norm = Tally::new("normalization");
    let mut realize = Tally::new("realization round trip");
    let mut right = Tally::new("right population");
    let mut sum = PopCount::zero();

    for t in &delta.members {
        let p = pop_corr(t, sigma, Method::Rec1)?;
        let oracle = brute.get(t).cloned().unwrap_or_default();
        for method in [Method::Rec2, Method::Nfc] {
            let q = pop_corr(t, sigma, method)?;
            agree.expect(q == p, || format!("{t}: rec1 {p}, {method} {q}"));
        }
        agree.expect(oracle == p, || format!("{t}: rec1 {p}, brute {oracle}"));

        let g_t: PopCount = doubled.iter().filter(|(v, _)| v.ends_with(t)).map(|(_, c)| c).sum();
        g.expect(g_t == p, || format!("{t}: p {p}, g {g_t}"));

        let pair = realize_correlation(t)?;
        realize.expect(verify_realization(t, &pair), || format!("{t}: {pair}"));

        if t.first_one().is_some() {
            let fast = pop_right(t, sigma)?;
            let slow = brute_right_population(t, sigma, budget)?;
            right.expect(fast == slow, || format!("{t}: {fast} vs {slow}"));
        }
        sum += &p;
    }
    let total = PopCount::pow(sigma, 2 * n);
    norm.expect(sum == total, || format!("sum {sum}, expected {total}"));

    let mut checks = vec![
        agree.finish(),
        g.finish(),
        norm.finish(),
        realize.finish(),
        right.finish(),
    ];
    if (n, sigma) == (5, 2) {
        let t: Correlation = "01010".parse().expect("literal");
        let mut example = Tally::new("p(01010) = 8");
        let p = pop_corr(&t, sigma, Method::Rec1)?;
        example.expect(p == 8, || format!("got {p}"));
        checks.push(example.finish());
    }
    Ok(VerifyReport {
        n,
        sigma,
        correlations: delta.len(),
        sum,
        checks,
    })
}
