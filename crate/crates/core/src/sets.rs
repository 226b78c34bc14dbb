//! The sets Γₙ (autocorrelations) and Δₙ (correlations) of length `n`.
//!
//! Γₙ does not depend on the alphabet as long as it has two letters or more,
//! so it is enumerated once over binary words and memoized. Δₙ is assembled
//! from the Γⱼ as the disjoint union of the `0^(n-j) . Γⱼ`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{autocorrelation_bits, character_classes, Correlation};

/// Largest `n` enumerated unless a caller asks for more.
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaSet {
    pub n: usize,
    /// Sorted lexicographically.
    pub members: Vec<Correlation>,
}

impl GammaSet {
    pub fn contains(&self, s: &Correlation) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaSet {
    pub n: usize,
    /// Sorted lexicographically.
    pub members: Vec<Correlation>,
}

impl DeltaSet {
    pub fn contains(&self, t: &Correlation) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members with leading bit 1, i.e. Γₙ.
    pub fn autocorrelations(&self) -> impl Iterator<Item = &Correlation> {
        self.members.iter().filter(|t| t.first_one() == Some(0))
    }
}

/// `t = 0^(n-j) . suffix` with `suffix` in Γⱼ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub j: usize,
    pub suffix: Correlation,
}

fn gamma_cache() -> &'static Mutex<HashMap<usize, Arc<GammaSet>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GammaSet>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Γₙ with the default cap.
pub fn enumerate_gamma(n: usize) -> Result<Arc<GammaSet>> {
    enumerate_gamma_capped(n, DEFAULT_CAP)
}

pub fn enumerate_gamma_capped(n: usize, cap: usize) -> Result<Arc<GammaSet>> {
    check_cap(n, cap)?;
    if let Some(set) = gamma_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(set));
    }
    // Built outside the lock; racing builders produce identical sets.
    let set = Arc::new(build_gamma(n));
    Ok(Arc::clone(gamma_cache().lock().unwrap().entry(n).or_insert(set)))
}

fn build_gamma(n: usize) -> GammaSet {
    if n == 0 {
        return GammaSet {
            n,
            members: vec![Correlation::empty()],
        };
    }
    // Swapping the two letters leaves the autocorrelation unchanged, so the
    // first letter is pinned to `a`.
    let half = 1u64 << (n - 1);
    let found: BTreeSet<Correlation> = (0..half)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, i| {
            let word: Vec<u32> = (0..n).map(|k| (i >> (n - 1 - k) & 1) as u32).collect();
            acc.insert(Correlation::new(autocorrelation_bits(&word)));
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    GammaSet {
        n,
        members: found.into_iter().collect(),
    }
}

/// Δₙ with the default cap.
pub fn enumerate_delta(n: usize) -> Result<DeltaSet> {
    enumerate_delta_capped(n, DEFAULT_CAP)
}

pub fn enumerate_delta_capped(n: usize, cap: usize) -> Result<DeltaSet> {
    check_cap(n, cap)?;
    let mut members = Vec::new();
    for j in 0..=n {
        let gamma = enumerate_gamma_capped(j, cap)?;
        members.extend(gamma.members.iter().map(|s| s.with_leading_zeros(n - j)));
    }
    members.sort();
    Ok(DeltaSet { n, members })
}

/// Membership in Γ without enumeration.
///
/// The word that gives every class of forced-equal positions its own letter
/// has the fewest periods among all words satisfying the equations of `s`;
/// `s` is an autocorrelation exactly when that word has no extra period.
pub fn is_autocorrelation(s: &Correlation) -> bool {
    if s.is_empty() {
        return true;
    }
    if !s.bit(0) {
        return false;
    }
    let generic: Vec<u32> = character_classes(s).into_iter().map(|c| c as u32).collect();
    autocorrelation_bits(&generic) == s.bits()
}

/// Splits a correlation into its leading zeros and autocorrelation suffix,
/// or returns `None` when `t` is not in Δ.
pub fn decompose(t: &Correlation) -> Option<Decomposition> {
    let n = t.len();
    let j = match t.first_one() {
        Some(pos) => n - pos,
        None => 0,
    };
    let suffix = t.suffix(j);
    is_autocorrelation(&suffix).then_some(Decomposition { j, suffix })
}

pub fn is_valid_correlation(t: &Correlation) -> bool {
    decompose(t).is_some()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CardinalityRow {
    pub n: usize,
    pub kappa: usize,
    pub delta: usize,
    /// `ln κₙ / ln² n`, defined for `n >= 2`.
    pub kappa_normalized: Option<f64>,
    /// `ln δₙ / ln² n`, defined for `n >= 2`.
    pub delta_normalized: Option<f64>,
}

/// κₙ and δₙ for `n` in `0..=n_max`.
pub fn cardinalities(n_max: usize) -> Result<Vec<CardinalityRow>> {
    check_cap(n_max, DEFAULT_CAP)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut delta = 0;
    for n in 0..=n_max {
        let kappa = enumerate_gamma(n)?.len();
        delta += kappa;
        let ln2n = (n as f64).ln().powi(2);
        let norm = |x: usize| (n >= 2).then(|| (x as f64).ln() / ln2n);
        rows.push(CardinalityRow {
            n,
            kappa,
            delta,
            kappa_normalized: norm(kappa),
            delta_normalized: norm(delta),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{autocorrelation, Word};

    fn c(s: &str) -> Correlation {
        s.parse().unwrap()
    }

    fn strings(v: &[Correlation]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            strings(&enumerate_gamma(4).unwrap().members),
            ["1000", "1001", "1010", "1111"]
        );
        assert_eq!(strings(&enumerate_gamma(1).unwrap().members), ["1"]);
        assert_eq!(strings(&enumerate_gamma(2).unwrap().members), ["10", "11"]);
        assert_eq!(enumerate_gamma(0).unwrap().members, vec![Correlation::empty()]);
    }

    #[test]
    fn delta_examples() {
        let d4 = enumerate_delta(4).unwrap();
        assert_eq!(
            strings(&d4.members),
            ["0000", "0001", "0010", "0011", "0100", "0101", "0111", "1000", "1001", "1010", "1111"]
        );
        assert_eq!(strings(&enumerate_delta(1).unwrap().members), ["0", "1"]);
        assert!(enumerate_delta(5).unwrap().contains(&c("01010")));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate_gamma(21).unwrap_err(), Error::CapExceeded { n: 21, cap: 20 });
        assert!(enumerate_gamma_capped(5, 4).is_err());
        assert!(enumerate_delta(25).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose(&c("000101")), Some(Decomposition { j: 3, suffix: c("101") }));
        assert_eq!(decompose(&c("0110")), None);
        assert_eq!(decompose(&c("1011")), None);
        assert_eq!(
            decompose(&c("0000")),
            Some(Decomposition {
                j: 0,
                suffix: Correlation::empty()
            })
        );
    }

    #[test]
    fn validity_matches_enumeration() {
        for n in 1..=12 {
            let delta = enumerate_delta(n).unwrap();
            for mask in 0..1u128 << n {
                let t = Correlation::from_mask(mask, n);
                assert_eq!(is_valid_correlation(&t), delta.contains(&t), "{t}");
            }
        }
    }

    #[test]
    fn cardinality_examples() {
        let rows = cardinalities(8).unwrap();
        assert_eq!((rows[0].kappa, rows[0].delta), (1, 1));
        assert_eq!((rows[4].kappa, rows[4].delta), (4, 11));
        // brute force over the 2^8 binary words
        let distinct: BTreeSet<Correlation> = (0..256).map(|i| autocorrelation(&Word::from_index(i, 8, 2))).collect();
        assert_eq!(rows[8].kappa, distinct.len());
        for row in &rows {
            assert_eq!(row.delta, enumerate_delta(row.n).unwrap().len());
        }
    }

    #[test]
    fn partition_identity_and_gamma_inclusion() {
        for n in 1..=12 {
            let delta = enumerate_delta(n).unwrap();
            let sum: usize = (0..=n).map(|j| enumerate_gamma(j).unwrap().len()).sum();
            assert_eq!(delta.len(), sum);
            let gamma = enumerate_gamma(n).unwrap();
            let from_delta: Vec<_> = delta.autocorrelations().cloned().collect();
            assert_eq!(from_delta, gamma.members);
            assert!(gamma.len() < delta.len());
        }
    }

    #[test]
    fn gamma_is_alphabet_independent() {
        for n in 1..=8 {
            let ternary: BTreeSet<Correlation> = (0..3u64.pow(n as u32))
                .map(|i| autocorrelation(&Word::from_index(i, n, 3)))
                .collect();
            let ternary: Vec<_> = ternary.into_iter().collect();
            assert_eq!(ternary, enumerate_gamma(n).unwrap().members);
        }
    }

    #[test]
    fn gamma_members_satisfy_period_rules() {
        for n in 1..=14 {
            for s in &enumerate_gamma(n).unwrap().members {
                let periods: Vec<usize> = s.ones_positions().filter(|&p| p > 0).collect();
                for &p in &periods {
                    assert!((p..n).step_by(p).all(|kp| s.bit(kp)));
                }
                if let Some(&basic) = periods.first() {
                    for &p in &periods {
                        assert!(p % basic == 0 || p > n - basic, "{s}: {p} vs {basic}");
                    }
                }
            }
        }
    }
}
