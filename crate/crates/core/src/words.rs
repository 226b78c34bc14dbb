//! Words, correlations and the exhaustive oracles everything else is checked against.
//!
//! Letters are plain indices in `0..sigma`. A [`Correlation`] stores bit `i`
//! (shift `i`) at index `i`, so it prints exactly as the usual left-to-right
//! 0/1 string: `correlation(aabbab, babbaa) = 000101`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Environment variable read by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "CORRPOP_BUDGET";

/// Default cap on the number of candidates a brute-force oracle may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 32;

pub(crate) fn check_sigma(sigma: u32) -> Result<()> {
    if sigma < 2 {
        Err(Error::AlphabetTooSmall(sigma))
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    sigma: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, sigma: u32) -> Result<Self> {
        check_sigma(sigma)?;
        if let Some(&letter) = letters.iter().find(|&&l| l >= sigma) {
            return Err(Error::LetterOutOfRange { letter, sigma });
        }
        Ok(Word { letters, sigma })
    }

    /// Parses `abba`-style text for `sigma <= 26`, comma-separated indices otherwise.
    pub fn parse(text: &str, sigma: u32) -> Result<Self> {
        check_sigma(sigma)?;
        let text = text.trim();
        let letters = if text.is_empty() {
            Vec::new()
        } else if sigma <= 26 {
            text.chars()
                .map(|c| match c {
                    'a'..='z' => Ok(c as u32 - 'a' as u32),
                    _ => Err(Error::ParseWord(text.to_string())),
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::ParseWord(text.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters, sigma)
    }

    /// The `index`-th word of length `n` in lexicographic order.
    pub fn from_index(mut index: u64, n: usize, sigma: u32) -> Self {
        let mut letters = vec![0; n];
        for slot in letters.iter_mut().rev() {
            *slot = (index % sigma as u64) as u32;
            index /= sigma as u64;
        }
        Word { letters, sigma }
    }

    pub fn repeat(letter: u32, n: usize, sigma: u32) -> Result<Self> {
        Word::new(vec![letter; n], sigma)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.sigma != other.sigma {
            return Err(Error::AlphabetMismatch(self.sigma, other.sigma));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters,
            sigma: self.sigma,
        })
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec(),
            sigma: self.sigma,
        }
    }

    /// Number of (possibly overlapping) occurrences of `factor` in `self`.
    pub fn occurrences(&self, factor: &Word) -> usize {
        if factor.is_empty() || factor.len() > self.len() {
            return 0;
        }
        self.letters
            .windows(factor.len())
            .filter(|w| *w == factor.letters())
            .count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sigma <= 26 {
            for &l in &self.letters {
                write!(f, "{}", (b'a' + l as u8) as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A pair of equal-length words over the same alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WordPair {
    pub u: Word,
    pub v: Word,
}

impl WordPair {
    pub fn new(u: Word, v: Word) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch(u.len(), v.len()));
        }
        if u.sigma() != v.sigma() {
            return Err(Error::AlphabetMismatch(u.sigma(), v.sigma()));
        }
        Ok(WordPair { u, v })
    }

    pub fn correlation(&self) -> Correlation {
        Correlation::new(correlation_bits(self.u.letters(), self.v.letters()))
    }
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Overlap vector of an ordered word pair; also used for autocorrelations and
/// the derived vectors (`s_m`, candidate forms) of the population recurrences.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Correlation {
    bits: Vec<bool>,
}

impl Correlation {
    pub fn new(bits: Vec<bool>) -> Self {
        Correlation { bits }
    }

    pub fn empty() -> Self {
        Correlation::default()
    }

    pub fn zeros(n: usize) -> Self {
        Correlation::new(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        Correlation::new(vec![true; n])
    }

    /// `1 0^(n-1)`: the autocorrelation of an unbordered word.
    pub fn unbordered(n: usize) -> Self {
        let mut bits = vec![false; n];
        if n > 0 {
            bits[0] = true;
        }
        Correlation::new(bits)
    }

    /// Reads the low `n` bits of a mask, bit `i` of the mask being shift `i`.
    pub fn from_mask(mask: u128, n: usize) -> Self {
        Correlation::new((0..n).map(|i| mask >> i & 1 == 1).collect())
    }

    /// Inverse of [`Correlation::from_mask`]; lengths above 128 are truncated.
    pub fn to_mask(&self) -> u128 {
        self.bits
            .iter()
            .take(128)
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions of the 1-bits, increasing.
    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    /// Position of the leftmost 1, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.bits.iter().position(|&b| b)
    }

    /// Smallest nonzero 1-bit position (the basic period for an autocorrelation).
    pub fn second_one(&self) -> Option<usize> {
        self.bits.iter().skip(1).position(|&b| b).map(|p| p + 1)
    }

    pub fn suffix(&self, len: usize) -> Correlation {
        Correlation::new(self.bits[self.len() - len..].to_vec())
    }

    pub fn tail(&self, from: usize) -> Correlation {
        Correlation::new(self.bits[from..].to_vec())
    }

    pub fn ends_with(&self, other: &Correlation) -> bool {
        self.bits.ends_with(&other.bits)
    }

    /// `0^k . self`
    pub fn with_leading_zeros(&self, k: usize) -> Correlation {
        let mut bits = vec![false; k];
        bits.extend_from_slice(&self.bits);
        Correlation::new(bits)
    }

    pub fn concat(&self, other: &Correlation) -> Correlation {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Correlation::new(bits)
    }

    /// The length-`m` extension `1 0^(m-j-1) s` of `s = self` (`m = j` returns `s`).
    ///
    /// Panics if `m < j`.
    pub fn extend_to(&self, m: usize) -> Correlation {
        let j = self.len();
        assert!(m >= j, "cannot extend a length-{j} vector to length {m}");
        if m == j {
            return self.clone();
        }
        Correlation::unbordered(m - j).concat(self)
    }

    pub fn intersection(&self, other: &Correlation) -> Correlation {
        assert_eq!(self.len(), other.len());
        Correlation::new(self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect())
    }

    pub fn union(&self, other: &Correlation) -> Correlation {
        assert_eq!(self.len(), other.len());
        Correlation::new(self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect())
    }

    /// Inclusion of 1-bit sets (not necessarily strict).
    pub fn is_subset(&self, other: &Correlation) -> bool {
        self.len() == other.len() && self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn is_strict_subset(&self, other: &Correlation) -> bool {
        self.is_subset(other) && self != other
    }
}

impl fmt::Display for Correlation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Correlation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Correlation {
    type Err = Error;

    /// Accepts a 0/1 string; `""`, `"e"`, `"eps"`, `"empty"` and `"ε"` denote the empty vector.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "" | "e" | "eps" | "empty" | "ε") {
            return Ok(Correlation::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::ParseCorrelation(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Correlation::new)
    }
}

impl Serialize for Correlation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Correlation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The set of periods of a word, always containing 0 for non-empty words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodSet {
    n: usize,
    periods: Vec<usize>,
}

impl PeriodSet {
    pub fn from_autocorrelation(s: &Correlation) -> Self {
        PeriodSet {
            n: s.len(),
            periods: s.ones_positions().collect(),
        }
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn contains(&self, p: usize) -> bool {
        self.periods.binary_search(&p).is_ok()
    }

    /// Smallest non-trivial period.
    pub fn basic_period(&self) -> Option<usize> {
        self.periods.iter().copied().find(|&p| p > 0)
    }

    pub fn to_autocorrelation(&self) -> Correlation {
        let mut bits = vec![false; self.n];
        for &p in &self.periods {
            bits[p] = true;
        }
        Correlation::new(bits)
    }
}

/// An exact, unbounded population size.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PopCount(BigUint);

impl PopCount {
    pub fn zero() -> Self {
        PopCount(BigUint::zero())
    }

    pub fn one() -> Self {
        PopCount(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn pow(sigma: u32, exp: usize) -> Self {
        PopCount(BigUint::from(sigma).pow(exp as u32))
    }
}

impl From<BigUint> for PopCount {
    fn from(v: BigUint) -> Self {
        PopCount(v)
    }
}

impl From<u64> for PopCount {
    fn from(v: u64) -> Self {
        PopCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for PopCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for PopCount {
    type Output = PopCount;
    fn add(self, rhs: PopCount) -> PopCount {
        PopCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a PopCount> for PopCount {
    type Output = PopCount;
    fn add(self, rhs: &'a PopCount) -> PopCount {
        PopCount(self.0 + &rhs.0)
    }
}

impl AddAssign<&PopCount> for PopCount {
    fn add_assign(&mut self, rhs: &PopCount) {
        self.0 += &rhs.0;
    }
}

impl Mul for PopCount {
    type Output = PopCount;
    fn mul(self, rhs: PopCount) -> PopCount {
        PopCount(self.0 * rhs.0)
    }
}

impl std::iter::Sum for PopCount {
    fn sum<I: Iterator<Item = PopCount>>(iter: I) -> Self {
        iter.fold(PopCount::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a PopCount> for PopCount {
    fn sum<I: Iterator<Item = &'a PopCount>>(iter: I) -> Self {
        iter.fold(PopCount::zero(), |a, b| a + b)
    }
}

impl fmt::Display for PopCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for PopCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized as a decimal string so that values beyond `u64` survive JSON.
impl Serialize for PopCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

pub(crate) fn correlation_bits(u: &[u32], v: &[u32]) -> Vec<bool> {
    let n = u.len();
    (0..n).map(|i| u[i..] == v[..n - i]).collect()
}

fn correlation_mask(u: &[u32], v: &[u32]) -> u128 {
    let n = u.len();
    (0..n).filter(|&i| u[i..] == v[..n - i]).fold(0, |m, i| m | 1 << i)
}

/// Autocorrelation mask through the border chain of the prefix function, `O(n)`.
fn autocorrelation_mask(w: &[u32], failure: &mut Vec<usize>) -> u128 {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    failure.clear();
    failure.resize(n, 0);
    for i in 1..n {
        let mut k = failure[i - 1];
        while k > 0 && w[i] != w[k] {
            k = failure[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        failure[i] = k;
    }
    let mut mask = 1u128;
    let mut b = failure[n - 1];
    while b > 0 {
        mask |= 1 << (n - b);
        b = failure[b - 1];
    }
    mask
}

pub(crate) fn autocorrelation_bits(w: &[u32]) -> Vec<bool> {
    let n = w.len();
    if n > 128 {
        return correlation_bits(w, w);
    }
    let mask = autocorrelation_mask(w, &mut Vec::new());
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

/// `c(u, v)`: bit `i` is set iff `u[i..]` equals the prefix of `v` of the same length.
pub fn correlation(u: &Word, v: &Word) -> Result<Correlation> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    if u.sigma() != v.sigma() {
        return Err(Error::AlphabetMismatch(u.sigma(), v.sigma()));
    }
    Ok(Correlation::new(correlation_bits(u.letters(), v.letters())))
}

/// `c(u, u)`; the empty word has the empty autocorrelation.
pub fn autocorrelation(u: &Word) -> Correlation {
    Correlation::new(autocorrelation_bits(u.letters()))
}

/// All borders of `(u, v)` by decreasing length, including `u` itself when `u = v`.
pub fn borders(u: &Word, v: &Word) -> Result<Vec<Word>> {
    let c = correlation(u, v)?;
    Ok(c.ones_positions().map(|i| u.slice(i..u.len())).collect())
}

pub fn period_set(u: &Word) -> PeriodSet {
    PeriodSet::from_autocorrelation(&autocorrelation(u))
}

/// Position classes under the character equations `w[i] = w[i + p]` for every
/// 1-bit `p >= 1` of `s`. Returns a class id per position; ids are numbered
/// by first occurrence, so class 0 contains position 0.
pub fn character_classes(s: &Correlation) -> Vec<usize> {
    let n = s.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in s.ones_positions().filter(|&p| p > 0) {
        for i in 0..n - p {
            let (a, b) = (find(&mut parent, i), find(&mut parent, i + p));
            if a != b {
                // keep the smaller position as root
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut ids = vec![usize::MAX; n];
    let mut next = 0;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let root = find(&mut parent, i);
        if ids[root] == usize::MAX {
            ids[root] = next;
            next += 1;
        }
        out.push(ids[root]);
    }
    out
}

/// Hard cap on how many candidates a brute-force oracle may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub cap: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { cap: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { cap }
    }

    /// Reads the cap from `CORRPOP_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    /// Checks that `sigma^len` candidates fit and returns that count.
    pub fn admit(&self, sigma: u32, len: usize) -> Result<u64> {
        let required = (sigma as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
        if required > self.cap as u128 {
            return Err(Error::BudgetExceeded {
                required,
                cap: self.cap,
            });
        }
        Ok(required as u64)
    }
}

fn decode_into(mut index: u64, sigma: u32, out: &mut [u32]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % sigma as u64) as u32;
        index /= sigma as u64;
    }
}

/// Visits every pair `(u, v)` in parallel, folding per-`u` results.
fn fold_pairs<T, F, R>(n: usize, sigma: u32, budget: &Budget, init: fn() -> T, visit: F, reduce: R) -> Result<T>
where
    T: Send,
    F: Fn(&mut T, &[u32], &[u32]) + Sync,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_sigma(sigma)?;
    budget.admit(sigma, 2 * n)?;
    let words = (sigma as u64).pow(n as u32);
    Ok((0..words)
        .into_par_iter()
        .fold(init, |mut acc, ui| {
            let mut u = vec![0; n];
            let mut v = vec![0; n];
            decode_into(ui, sigma, &mut u);
            for vi in 0..words {
                decode_into(vi, sigma, &mut v);
                visit(&mut acc, &u, &v);
            }
            acc
        })
        .reduce(init, reduce))
}

/// Exhaustive `p(t)`: the number of ordered pairs whose correlation is `t`.
pub fn brute_population(t: &Correlation, sigma: u32, budget: &Budget) -> Result<PopCount> {
    let n = t.len();
    let target = t.to_mask();
    let count = fold_pairs(
        n,
        sigma,
        budget,
        || 0u64,
        |acc, u, v| {
            if correlation_mask(u, v) == target {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )?;
    Ok(PopCount::from(count))
}

/// Exhaustive histogram of correlations over all pairs of length-`n` words.
pub fn brute_population_table(n: usize, sigma: u32, budget: &Budget) -> Result<BTreeMap<Correlation, PopCount>> {
    let hist = fold_pairs(
        n,
        sigma,
        budget,
        BTreeMap::<u128, u64>::new,
        |acc, u, v| *acc.entry(correlation_mask(u, v)).or_default() += 1,
        |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        },
    )?;
    Ok(hist
        .into_iter()
        .map(|(mask, c)| (Correlation::from_mask(mask, n), PopCount::from(c)))
        .collect())
}

/// Every pair realizing `t`, in lexicographic order.
pub fn brute_pairs(t: &Correlation, sigma: u32, budget: &Budget) -> Result<Vec<WordPair>> {
    let n = t.len();
    let target = t.to_mask();
    let mut pairs = fold_pairs(
        n,
        sigma,
        budget,
        Vec::new,
        |acc: &mut Vec<(Vec<u32>, Vec<u32>)>, u, v| {
            if correlation_mask(u, v) == target {
                acc.push((u.to_vec(), v.to_vec()));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    pairs.sort();
    Ok(pairs
        .into_iter()
        .map(|(u, v)| WordPair {
            u: Word { letters: u, sigma },
            v: Word { letters: v, sigma },
        })
        .collect())
}

/// Exhaustive `g(t)`: words of length `2n` whose autocorrelation ends with `t`.
pub fn brute_g(t: &Correlation, sigma: u32, budget: &Budget) -> Result<PopCount> {
    check_sigma(sigma)?;
    let n = t.len();
    let len = 2 * n;
    let total = budget.admit(sigma, len)?;
    let target = t.to_mask();
    let count: u64 = (0..total)
        .into_par_iter()
        .fold(
            || (0u64, vec![0u32; len], Vec::new()),
            |(mut acc, mut w, mut failure), wi| {
                decode_into(wi, sigma, &mut w);
                if autocorrelation_mask(&w, &mut failure) >> n == target {
                    acc += 1;
                }
                (acc, w, failure)
            },
        )
        .map(|(acc, _, _)| acc)
        .sum();
    Ok(PopCount::from(count))
}

/// Exhaustive histogram of autocorrelations of all length-`n` words.
pub fn brute_autocorrelation_table(n: usize, sigma: u32, budget: &Budget) -> Result<BTreeMap<Correlation, PopCount>> {
    check_sigma(sigma)?;
    let total = budget.admit(sigma, n)?;
    let hist = (0..total)
        .into_par_iter()
        .fold(
            || (BTreeMap::<u128, u64>::new(), vec![0u32; n], Vec::new()),
            |(mut acc, mut w, mut failure), wi| {
                decode_into(wi, sigma, &mut w);
                *acc.entry(autocorrelation_mask(&w, &mut failure)).or_default() += 1;
                (acc, w, failure)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        });
    Ok(hist
        .into_iter()
        .map(|(mask, count)| (Correlation::from_mask(mask, n), PopCount::from(count)))
        .collect())
}

/// Exhaustive right population: words `v` admitting some `u` with `c(u, v) = t`.
pub fn brute_right_population(t: &Correlation, sigma: u32, budget: &Budget) -> Result<PopCount> {
    check_sigma(sigma)?;
    let n = t.len();
    budget.admit(sigma, 2 * n)?;
    let words = (sigma as u64).pow(n as u32);
    let target = t.to_mask();
    let count = (0..words)
        .into_par_iter()
        .filter(|&vi| {
            let mut u = vec![0; n];
            let mut v = vec![0; n];
            decode_into(vi, sigma, &mut v);
            (0..words).any(|ui| {
                decode_into(ui, sigma, &mut u);
                correlation_mask(&u, &v) == target
            })
        })
        .count();
    Ok(PopCount::from(count as u64))
}
