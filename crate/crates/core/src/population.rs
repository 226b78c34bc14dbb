//! Exact population sizes of autocorrelations and correlations.
//!
//! Three independent routes are provided for a correlation `t = 0^(n-j) s`:
//!
//! * [`Method::Rec1`] sums populations of the extensions `s_m = 1 0^(m-j-1) s`
//!   produced by the autocorrelation recurrence driven by the ψ sequence;
//! * [`Method::Rec2`] substitutes that recurrence into the sum, so only the
//!   ψ sequence, `p(s)` and the lower extensions are needed;
//! * [`Method::Nfc`] partitions the words of length `2n` whose autocorrelation
//!   ends with `t` by their full autocorrelation and counts each block on the
//!   lattice Γ₂ₙ with free-character counts.
//!
//! [`Method::Brute`] is the exhaustive oracle. All arithmetic is exact.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::{decompose, enumerate_delta, enumerate_gamma, is_autocorrelation, Decomposition};
use crate::words::{brute_population, check_sigma, Budget, Correlation, PopCount};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Rec1,
    Rec2,
    Nfc,
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Rec1, Method::Rec2, Method::Nfc, Method::Brute];
    pub const RECURRENCES: [Method; 3] = [Method::Rec1, Method::Rec2, Method::Nfc];
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rec1" => Ok(Method::Rec1),
            "rec2" => Ok(Method::Rec2),
            "nfc" => Ok(Method::Nfc),
            "brute" => Ok(Method::Brute),
            _ => Err(Error::UnknownMethod(s.to_string())),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Rec1 => "rec1",
            Method::Rec2 => "rec2",
            Method::Nfc => "nfc",
            Method::Brute => "brute",
        })
    }
}

fn require_autocorrelation(s: &Correlation) -> Result<()> {
    if is_autocorrelation(s) {
        Ok(())
    } else {
        Err(Error::InvalidAutocorrelation(s.to_string()))
    }
}

fn require_correlation(t: &Correlation) -> Result<Decomposition> {
    decompose(t).ok_or_else(|| Error::InvalidCorrelation(t.to_string()))
}

/// The integer sequence ψ attached to a fixed autocorrelation `s` of length `j`:
/// `0` above `j`, the bit `s[j-k]` on `1..=j`, and `σ^(-k)` at and below zero.
#[derive(Debug, Clone)]
pub struct PsiSequence {
    s: Correlation,
    sigma: u32,
}

impl PsiSequence {
    pub fn new(s: &Correlation, sigma: u32) -> Result<Self> {
        check_sigma(sigma)?;
        require_autocorrelation(s)?;
        Ok(PsiSequence { s: s.clone(), sigma })
    }

    pub fn at(&self, k: i64) -> BigUint {
        psi_raw(&self.s, self.sigma, k)
    }
}

fn psi_raw(s: &Correlation, sigma: u32, k: i64) -> BigUint {
    let j = s.len() as i64;
    if k > j {
        BigUint::zero()
    } else if k >= 1 {
        if s.bit((j - k) as usize) {
            BigUint::one()
        } else {
            BigUint::zero()
        }
    } else {
        BigUint::from(sigma).pow((-k) as u32)
    }
}

pub fn psi(s: &Correlation, sigma: u32, k: i64) -> Result<BigUint> {
    Ok(PsiSequence::new(s, sigma)?.at(k))
}

/// Cached ψ values for one `(s, σ)` over a contiguous index range.
struct PsiTable {
    j: i64,
    bits: Vec<bool>,
    powers: Vec<BigInt>,
}

impl PsiTable {
    fn new(s: &Correlation, sigma: u32, max_neg: usize) -> Self {
        let mut powers = Vec::with_capacity(max_neg + 1);
        let mut p = BigInt::one();
        for _ in 0..=max_neg {
            powers.push(p.clone());
            p *= sigma;
        }
        PsiTable {
            j: s.len() as i64,
            bits: s.bits().to_vec(),
            powers,
        }
    }

    fn get(&self, k: i64) -> Option<&BigInt> {
        if k > self.j {
            None
        } else if k >= 1 {
            self.bits[(self.j - k) as usize].then(|| &self.powers[0])
        } else {
            Some(&self.powers[(-k) as usize])
        }
    }
}

type SeriesKey = (Correlation, u32);

fn series_cache() -> &'static Mutex<HashMap<SeriesKey, Vec<BigUint>>> {
    static CACHE: OnceLock<Mutex<HashMap<SeriesKey, Vec<BigUint>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `p(s)` from the decomposition `s = 1 0^(π-1) s'`, where `s'` is the tail
/// starting at the basic period `π`; `s` is then the length-`j` extension of `s'`.
fn base_population(s: &Correlation, sigma: u32) -> BigUint {
    let j = s.len();
    if j == 0 {
        return BigUint::one();
    }
    let tail = match s.second_one() {
        Some(p) => s.tail(p),
        None => Correlation::empty(),
    };
    series(&tail, sigma, j).swap_remove(j - tail.len())
}

/// `[p(s_j), p(s_(j+1)), …, p(s_m)]` for a valid autocorrelation `s` of length `j`.
///
/// Each `p(s_len)` is isolated from
/// `p(s_len) + Σ_k p(s_k) ψ[2k-len] = 2 ψ[2j-len] p(s)`,
/// with `p(s_k) = 0` below `j` and `ψ[2k-len] = 0` once `2k - len > j`.
fn series(s: &Correlation, sigma: u32, m: usize) -> Vec<BigUint> {
    let j = s.len();
    let key = (s.clone(), sigma);
    let cached = series_cache().lock().unwrap().get(&key).cloned();
    let mut vals = match cached {
        Some(v) if v.len() > m - j => return v[..=m - j].to_vec(),
        Some(v) => v,
        None => vec![base_population(s, sigma)],
    };
    let psi = PsiTable::new(s, sigma, m);
    let base = BigInt::from(vals[0].clone());
    let mut signed: Vec<BigInt> = vals.iter().cloned().map(BigInt::from).collect();
    for len in j + vals.len()..=m {
        let mut acc = match psi.get(2 * j as i64 - len as i64) {
            Some(v) => v * &base * 2u32,
            None => BigInt::zero(),
        };
        let k_max = (len - 1).min((len + j) / 2);
        for k in j..=k_max {
            if let Some(v) = psi.get(2 * k as i64 - len as i64) {
                acc -= &signed[k - j] * v;
            }
        }
        debug_assert!(acc.sign() != Sign::Minus, "negative population for {s:?} at {len}");
        vals.push(acc.to_biguint().unwrap_or_default());
        signed.push(acc);
    }
    let mut cache = series_cache().lock().unwrap();
    let entry = cache.entry(key).or_default();
    if entry.len() < vals.len() {
        *entry = vals.clone();
    }
    vals
}

/// `p(s_m)`: the number of length-`m` words with autocorrelation `1 0^(m-j-1) s`
/// (`m = j` gives `p(s)` itself).
pub fn pop_auto(s: &Correlation, m: usize, sigma: u32) -> Result<PopCount> {
    check_sigma(sigma)?;
    require_autocorrelation(s)?;
    let j = s.len();
    if m < j {
        return Err(Error::InvalidArgument(format!(
            "target length {m} is shorter than the suffix length {j}"
        )));
    }
    Ok(PopCount::from(series(s, sigma, m).swap_remove(m - j)))
}

/// All of `p(s_j), …, p(s_m)` at once.
pub fn pop_auto_series(s: &Correlation, m: usize, sigma: u32) -> Result<Vec<PopCount>> {
    check_sigma(sigma)?;
    require_autocorrelation(s)?;
    if m < s.len() {
        return Err(Error::InvalidArgument(format!(
            "target length {m} is shorter than the suffix length {}",
            s.len()
        )));
    }
    Ok(series(s, sigma, m).into_iter().map(PopCount::from).collect())
}

/// Number of free characters: how many position classes remain once every
/// period of `s` has imposed its character equations.
///
/// Linear: with basic period `π` and tail `s' = s[π..]`, the equations of `s`
/// are those of `s'` on positions `π..` plus `w[i] = w[i+π]`. For `2π <= n`
/// this folds the head onto the tail; otherwise positions `n-π..π` stay free.
pub fn nfc(s: &Correlation) -> Result<usize> {
    require_autocorrelation(s)?;
    Ok(nfc_unchecked(s))
}

pub(crate) fn nfc_unchecked(s: &Correlation) -> usize {
    let n = s.len();
    let bits = s.bits();
    let mut start = 0;
    let mut free = 0;
    while start < n {
        let len = n - start;
        match bits[start + 1..].iter().position(|&b| b) {
            None => {
                free += len;
                break;
            }
            Some(offset) => {
                let period = offset + 1;
                free += (2 * period).saturating_sub(len);
                start += period;
            }
        }
    }
    free
}

type LatticeKey = (usize, u32);
type LatticeTable = Arc<HashMap<Correlation, BigUint>>;

fn lattice_cache() -> &'static Mutex<HashMap<LatticeKey, LatticeTable>> {
    static CACHE: OnceLock<Mutex<HashMap<LatticeKey, LatticeTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Populations of all of Γₙ, top-down from `1^n`:
/// `p(v) = σ^nfc(v) - Σ_{w ⊋ v} p(w)`.
fn lattice_table(n: usize, sigma: u32) -> Result<LatticeTable> {
    if let Some(t) = lattice_cache().lock().unwrap().get(&(n, sigma)) {
        return Ok(Arc::clone(t));
    }
    let gamma = enumerate_gamma(n)?;
    let mut order: Vec<&Correlation> = gamma.members.iter().collect();
    order.sort_by_key(|v| std::cmp::Reverse(v.count_ones()));
    let mut done: Vec<(&Correlation, BigInt)> = Vec::with_capacity(order.len());
    for v in order {
        let mut p = BigInt::from(sigma).pow(nfc_unchecked(v) as u32);
        for (w, pw) in &done {
            if v.is_strict_subset(w) {
                p -= pw;
            }
        }
        done.push((v, p));
    }
    let table: HashMap<Correlation, BigUint> = done
        .into_iter()
        .map(|(v, p)| (v.clone(), p.to_biguint().expect("lattice populations are nonnegative")))
        .collect();
    let table = Arc::new(table);
    Ok(Arc::clone(
        lattice_cache().lock().unwrap().entry((n, sigma)).or_insert(table),
    ))
}

/// `p(s)` through the lattice recurrence on Γₙ.
pub fn pop_auto_lattice(s: &Correlation, sigma: u32) -> Result<PopCount> {
    check_sigma(sigma)?;
    require_autocorrelation(s)?;
    let table = lattice_table(s.len(), sigma)?;
    Ok(PopCount::from(table[s].clone()))
}

/// One block of the partition of the words of length `2n` whose
/// autocorrelation ends with `t`: those whose largest period below `n` is
/// `shift` and whose basic period is `block`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateForm {
    /// Largest period below `n` (0 when there is none).
    pub shift: usize,
    /// Number of `1 0^(block-1)` repetitions in front (`shift / block`).
    pub repetitions: usize,
    /// Basic period; equals `shift` when nothing shorter divides it.
    pub block: usize,
    /// The full length-`2n` vector.
    pub bits: Correlation,
    /// Whether `s` has a 1 where the doubled shift lands (always true for shift 0).
    pub admissible: bool,
    /// Whether `bits` is an autocorrelation of length `2n`.
    pub autocorrelation: bool,
}

fn candidate_shifts(n: usize, j: usize) -> std::ops::Range<usize> {
    (2 * n - j).div_ceil(2)..n
}

/// The candidate autocorrelation forms covering `G(t)`: shift 0 (`s_2n`) and
/// every shift in `⌈(2n-j)/2⌉..n`, split by divisor.
pub fn g_decomposition(t: &Correlation) -> Result<Vec<CandidateForm>> {
    let Decomposition { j, suffix: s } = require_correlation(t)?;
    let n = t.len();
    let s2n = s.extend_to(2 * n);
    let mut forms = vec![CandidateForm {
        shift: 0,
        repetitions: 0,
        block: 0,
        autocorrelation: is_autocorrelation(&s2n),
        bits: s2n,
        admissible: true,
    }];
    for shift in candidate_shifts(n, j) {
        let admissible = s.bit(j + 2 * shift - 2 * n);
        let rest = s.extend_to(2 * n - shift);
        for block in (1..=shift).filter(|d| shift % d == 0) {
            let mut bits = Vec::with_capacity(2 * n);
            for _ in 0..shift / block {
                bits.push(true);
                bits.extend(std::iter::repeat_n(false, block - 1));
            }
            bits.extend_from_slice(rest.bits());
            let bits = Correlation::new(bits);
            forms.push(CandidateForm {
                shift,
                repetitions: shift / block,
                block,
                autocorrelation: is_autocorrelation(&bits),
                bits,
                admissible,
            });
        }
    }
    Ok(forms)
}

fn rec1(n: usize, j: usize, s: &Correlation, sigma: u32) -> BigUint {
    let vals = series(s, sigma, 2 * n);
    let mut total = vals[2 * n - j].clone();
    for lambda in 1..=j / 2 {
        if s.bit(j - 2 * lambda) {
            total += &vals[n + lambda - j];
        }
    }
    total
}

fn rec2(n: usize, j: usize, s: &Correlation, sigma: u32) -> BigUint {
    let vals = series(s, sigma, 2 * n);
    let psi = PsiTable::new(s, sigma, 2 * n);
    let base = BigInt::from(vals[0].clone());
    let mut total = BigInt::from(vals[2 * n - j].clone());
    for shift in candidate_shifts(n, j) {
        if !s.bit(j + 2 * shift - 2 * n) {
            continue;
        }
        let (n, j, shift) = (n as i64, j as i64, shift as i64);
        if let Some(v) = psi.get(2 * j + shift - 2 * n) {
            total += v * &base * 2u32;
        }
        for k in j..2 * n - shift {
            if let Some(v) = psi.get(2 * k - 2 * n + shift) {
                total -= v * BigInt::from(vals[(k - j) as usize].clone());
            }
        }
    }
    total.to_biguint().expect("population is nonnegative")
}

fn nfc_method(t: &Correlation, sigma: u32) -> Result<BigUint> {
    let table = lattice_table(2 * t.len(), sigma)?;
    let mut total = BigUint::zero();
    for form in g_decomposition(t)? {
        if let Some(p) = table.get(&form.bits) {
            total += p;
        }
    }
    Ok(total)
}

/// `p(t)` for any correlation, by the chosen method.
///
/// Autocorrelations (`t[0] = 1`) go straight to the autocorrelation
/// recurrences; [`Method::Brute`] honours the `CORRPOP_BUDGET` cap.
pub fn pop_corr(t: &Correlation, sigma: u32, method: Method) -> Result<PopCount> {
    pop_corr_with_budget(t, sigma, method, &Budget::from_env())
}

/// [`pop_corr`] with an explicit cap for [`Method::Brute`].
pub fn pop_corr_with_budget(t: &Correlation, sigma: u32, method: Method, budget: &Budget) -> Result<PopCount> {
    check_sigma(sigma)?;
    let Decomposition { j, suffix: s } = require_correlation(t)?;
    let n = t.len();
    if method == Method::Brute {
        return brute_population(t, sigma, budget);
    }
    if n == 0 {
        return Ok(PopCount::one());
    }
    if j == n {
        return match method {
            Method::Nfc => pop_auto_lattice(t, sigma),
            _ => pop_auto(t, n, sigma),
        };
    }
    let value = match method {
        Method::Rec1 => rec1(n, j, &s, sigma),
        Method::Rec2 => rec2(n, j, &s, sigma),
        Method::Nfc => nfc_method(t, sigma)?,
        Method::Brute => unreachable!(),
    };
    Ok(PopCount::from(value))
}

/// Right population `p_r(t) = p(s) σ^(n-j)`; undefined for `t = 0^n`.
pub fn pop_right(t: &Correlation, sigma: u32) -> Result<PopCount> {
    check_sigma(sigma)?;
    let Decomposition { j, suffix: s } = require_correlation(t)?;
    if j == 0 {
        return Err(Error::InvalidArgument(
            "the right population is only defined for correlations with a 1-bit".into(),
        ));
    }
    Ok(pop_auto(&s, j, sigma)? * PopCount::pow(sigma, t.len() - j))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PopulationRow {
    pub correlation: Correlation,
    /// One entry per alphabet size, in the table's `sigmas` order.
    pub counts: Vec<PopCount>,
}

/// Populations of every member of Δₙ for several alphabet sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PopulationTable {
    pub n: usize,
    pub sigmas: Vec<u32>,
    pub method: Method,
    pub rows: Vec<PopulationRow>,
}

impl PopulationTable {
    pub fn get(&self, t: &Correlation, sigma: u32) -> Option<&PopCount> {
        let col = self.sigmas.iter().position(|&s| s == sigma)?;
        self.rows.iter().find(|r| &r.correlation == t).map(|r| &r.counts[col])
    }

    /// `correlation,sigma=2,sigma=3,…` followed by one line per correlation.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("correlation");
        for s in &self.sigmas {
            out.push_str(&format!(",sigma={s}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.correlation.to_string());
            for c in &row.counts {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }
}

pub fn population_table(n: usize, sigmas: &[u32], method: Method) -> Result<PopulationTable> {
    population_table_with_budget(n, sigmas, method, &Budget::from_env())
}

pub fn population_table_with_budget(
    n: usize,
    sigmas: &[u32],
    method: Method,
    budget: &Budget,
) -> Result<PopulationTable> {
    for &sigma in sigmas {
        check_sigma(sigma)?;
    }
    let delta = enumerate_delta(n)?;
    let rows = delta
        .members
        .into_iter()
        .map(|t| {
            let counts = sigmas
                .iter()
                .map(|&sigma| pop_corr_with_budget(&t, sigma, method, budget))
                .collect::<Result<Vec<_>>>()?;
            Ok(PopulationRow { correlation: t, counts })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PopulationTable {
        n,
        sigmas: sigmas.to_vec(),
        method,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{
        brute_autocorrelation_table, brute_g, brute_population_table, brute_right_population, character_classes,
    };

    fn c(s: &str) -> Correlation {
        s.parse().unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&c("101"), 2, 5).unwrap(), BigUint::zero());
        assert_eq!(psi(&c("101"), 3, -2).unwrap(), BigUint::from(9u32));
        assert_eq!(psi(&Correlation::empty(), 3, -2).unwrap(), BigUint::from(9u32));
        assert_eq!(psi(&c("101"), 2, 1).unwrap(), BigUint::one());
        assert_eq!(psi(&c("101"), 2, 2).unwrap(), BigUint::zero());
        assert_eq!(psi(&c("101"), 2, 0).unwrap(), BigUint::one());
        assert!(psi(&c("011"), 2, 0).is_err());
    }

    #[test]
    fn pop_auto_examples() {
        let eps = Correlation::empty();
        assert_eq!(pop_auto(&eps, 4, 2).unwrap(), 6);
        assert_eq!(pop_auto(&eps, 8, 2).unwrap(), 74);
        assert_eq!(pop_auto(&c("1111"), 4, 3).unwrap(), 3);
        assert!(pop_auto(&c("1111"), 3, 3).is_err());
        assert!(pop_auto(&c("1011"), 5, 2).is_err());
        // 110 is not an autocorrelation: the recurrence must give zero
        assert_eq!(pop_auto(&c("10"), 3, 2).unwrap(), 0);
    }

    #[test]
    fn pop_auto_matches_brute_force() {
        let b = Budget::default();
        for sigma in [2, 3] {
            for m in 0..=8 {
                if sigma == 3 && m > 7 {
                    continue;
                }
                let table = brute_autocorrelation_table(m, sigma, &b).unwrap();
                for s in &enumerate_gamma(m).unwrap().members {
                    let expected = table.get(s).cloned().unwrap_or_default();
                    assert_eq!(pop_auto(s, m, sigma).unwrap(), expected, "{s:?} σ={sigma}");
                    assert_eq!(pop_auto_lattice(s, sigma).unwrap(), expected, "{s:?} σ={sigma}");
                }
            }
        }
    }

    #[test]
    fn nfc_examples() {
        assert_eq!(nfc(&c("100001001")).unwrap(), 4);
        for n in 1..=12 {
            assert_eq!(nfc(&Correlation::ones(n)).unwrap(), 1);
            assert_eq!(nfc(&Correlation::unbordered(n)).unwrap(), n);
        }
        assert_eq!(nfc(&Correlation::empty()).unwrap(), 0);
        assert!(nfc(&c("1011")).is_err());
    }

    #[test]
    fn nfc_matches_union_find() {
        for n in 1..=16 {
            for s in &enumerate_gamma(n).unwrap().members {
                let classes = character_classes(s);
                let count = classes.iter().max().map_or(0, |m| m + 1);
                assert_eq!(nfc(s).unwrap(), count, "{s:?}");
            }
        }
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(pop_auto_lattice(&c("1111"), 2).unwrap(), 2);
        assert_eq!(pop_auto_lattice(&c("1010"), 2).unwrap(), 2);
        assert_eq!(pop_auto_lattice(&c("1000"), 5).unwrap(), 480);
        assert!(pop_auto_lattice(&c("1101"), 2).is_err());
    }

    #[test]
    fn pop_corr_examples() {
        for method in Method::ALL {
            assert_eq!(pop_corr(&c("0001"), 2, method).unwrap(), 82, "{method}");
            assert_eq!(pop_corr(&c("0101"), 3, method).unwrap(), 54, "{method}");
            assert_eq!(pop_corr(&c("0010"), 5, method).unwrap(), 12480, "{method}");
            assert_eq!(pop_corr(&c("01010"), 2, method).unwrap(), 8, "{method}");
        }
        assert_eq!(
            pop_corr(&c("0110"), 2, Method::Rec1),
            Err(Error::InvalidCorrelation("0110".into()))
        );
        assert_eq!("rec3".parse::<Method>(), Err(Error::UnknownMethod("rec3".into())));
        assert_eq!(pop_corr(&Correlation::empty(), 2, Method::Rec2).unwrap(), 1);
    }

    #[test]
    fn methods_agree_with_brute_force() {
        let b = Budget::default();
        for sigma in [2, 3] {
            for n in 1..=6 {
                let brute = brute_population_table(n, sigma, &b).unwrap();
                for t in &enumerate_delta(n).unwrap().members {
                    let expected = brute.get(t).cloned().unwrap_or_default();
                    for method in Method::RECURRENCES {
                        assert_eq!(
                            pop_corr(t, sigma, method).unwrap(),
                            expected,
                            "{t:?} σ={sigma} {method}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn population_equals_g() {
        let b = Budget::default();
        for n in 1..=5 {
            for t in &enumerate_delta(n).unwrap().members {
                assert_eq!(
                    pop_corr(t, 2, Method::Rec1).unwrap(),
                    brute_g(t, 2, &b).unwrap(),
                    "{t:?}"
                );
            }
        }
    }

    #[test]
    fn populations_sum_to_all_pairs() {
        for sigma in [2, 3] {
            for n in 0..=8 {
                for method in [Method::Rec1, Method::Rec2] {
                    let sum: PopCount = enumerate_delta(n)
                        .unwrap()
                        .members
                        .iter()
                        .map(|t| pop_corr(t, sigma, method).unwrap())
                        .sum();
                    assert_eq!(sum, PopCount::pow(sigma, 2 * n), "n={n} σ={sigma} {method}");
                }
            }
        }
    }

    #[test]
    fn nfc_partition_identity() {
        for sigma in [2, 3] {
            for n in 1..=10 {
                let gamma = enumerate_gamma(n).unwrap();
                for s in &gamma.members {
                    let sum: PopCount = gamma
                        .members
                        .iter()
                        .filter(|v| s.is_subset(v))
                        .map(|v| pop_auto(v, n, sigma).unwrap())
                        .sum();
                    assert_eq!(sum, PopCount::pow(sigma, nfc(s).unwrap()), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn g_decomposition_examples() {
        let forms = g_decomposition(&c("0000")).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].bits, c("10000000"));
        assert!(forms[0].autocorrelation);

        let forms = g_decomposition(&c("00101")).unwrap();
        let shifts: Vec<usize> = forms.iter().map(|f| f.shift).collect();
        assert_eq!(shifts, [0, 4, 4, 4]);
        // s = 101 has a 0 at index 1, so shift 4 cannot occur
        assert!(forms.iter().skip(1).all(|f| !f.admissible && !f.autocorrelation));
        assert_eq!(forms[0].bits, c("1000000101"));
    }

    #[test]
    fn g_decomposition_partitions_g() {
        let b = Budget::default();
        for n in 1..=5 {
            let auto = brute_autocorrelation_table(2 * n, 2, &b).unwrap();
            for t in &enumerate_delta(n).unwrap().members {
                let Decomposition { j, suffix: s } = decompose(t).unwrap();
                let forms = g_decomposition(t).unwrap();
                let mut covered = PopCount::zero();
                for f in &forms {
                    assert_eq!(f.bits.len(), 2 * n);
                    assert!(f.bits.ends_with(t));
                    if f.autocorrelation {
                        assert!(f.admissible);
                        covered += auto.get(&f.bits).unwrap();
                    }
                    if f.shift > 0 {
                        assert_eq!(f.admissible, s.bit(j + 2 * f.shift - 2 * n));
                        assert_eq!(f.repetitions * f.block, f.shift);
                    }
                }
                assert_eq!(covered, brute_g(t, 2, &b).unwrap(), "{t:?}");
            }
        }
    }

    #[test]
    fn pop_right_examples() {
        assert_eq!(pop_right(&c("0001"), 2).unwrap(), 16);
        assert_eq!(pop_right(&c("001"), 3).unwrap(), 27);
        assert_eq!(
            pop_right(&c("1010"), 3).unwrap(),
            pop_corr(&c("1010"), 3, Method::Rec1).unwrap()
        );
        assert!(matches!(pop_right(&c("000"), 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn pop_right_matches_brute_force() {
        let b = Budget::default();
        for sigma in [2, 3] {
            for n in 1..=5 {
                for t in enumerate_delta(n)
                    .unwrap()
                    .members
                    .iter()
                    .filter(|t| t.first_one().is_some())
                {
                    assert_eq!(
                        pop_right(t, sigma).unwrap(),
                        brute_right_population(t, sigma, &b).unwrap(),
                        "{t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn extension_ratios_are_proper_fractions() {
        for sigma in [2, 3, 5] {
            for n in 1..=12 {
                assert_eq!(pop_auto(&Correlation::ones(n), n, sigma).unwrap(), sigma as u64);
            }
            for j in 0..=5 {
                for s in &enumerate_gamma(j).unwrap().members {
                    for (i, p) in pop_auto_series(s, 30, sigma).unwrap().iter().enumerate().skip(1) {
                        let extended = s.extend_to(j + i);
                        assert_eq!(p.is_zero(), !is_autocorrelation(&extended), "{extended:?}");
                        assert!(p < &PopCount::pow(sigma, j + i) || j + i == 1);
                    }
                }
            }
        }
    }

    #[test]
    fn population_table_n4_rows() {
        let table = population_table(4, &[2, 3, 4, 5], Method::Rec1).unwrap();
        assert_eq!(table.rows.len(), 11);
        let row = |t: &str| -> Vec<u64> {
            table
                .rows
                .iter()
                .find(|r| r.correlation == c(t))
                .unwrap()
                .counts
                .iter()
                .map(|p| p.to_u64().unwrap())
                .collect()
        };
        assert_eq!(row("0000"), [74, 3678, 45132, 297020]);
        assert_eq!(row("1111"), [2, 3, 4, 5]);
        assert!(table
            .to_csv()
            .starts_with("correlation,sigma=2,sigma=3,sigma=4,sigma=5\n0000,74,3678,45132,297020\n"));
    }
}
