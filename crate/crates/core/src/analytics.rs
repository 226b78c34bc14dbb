//! Longest-border statistics over all pairs and asymptotic population ratios.
//!
//! Counts are exact. The asymptotic constant
//! `c = 2/σ^(2j) − h̃(σ²)`, with `h̃(z) = Σ_(m≥j) p(s_m) z^(-m) / p(s)`, is
//! accumulated as an exact rational up to a truncation length and reported
//! together with rigorous bounds on what the truncation leaves out.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::population::{pop_auto, pop_auto_series, pop_corr, Method};
use crate::sets::{enumerate_gamma, is_autocorrelation};
use crate::words::{check_sigma, Correlation, PopCount};

/// Truncation length used by [`ratio_bounds`].
pub const DEFAULT_PRECISION: usize = 64;

/// Default threshold `J` for the expectation lower bound.
pub const DEFAULT_THRESHOLD: usize = 4;

fn ser_rational<S: Serializer>(r: &BigRational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&r.to_string())
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

fn sigma_pow(sigma: u32, exp: usize) -> BigUint {
    BigUint::from(sigma).pow(exp as u32)
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `Lⱼ` for `j < n`: pairs of length-`n` words whose longest border has length `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorderCountTable {
    pub n: usize,
    pub sigma: u32,
    /// `counts[j] = Lⱼ`.
    pub counts: Vec<PopCount>,
    /// Pairs with `u = v`, whose longest border is the whole word; always `σⁿ`.
    pub equal_pairs: PopCount,
}

impl BorderCountTable {
    /// `L_[i..k]`, inclusive.
    pub fn range(&self, i: usize, k: usize) -> Result<PopCount> {
        if i > k || k >= self.n {
            return Err(Error::InvalidArgument(format!(
                "border range {i}..={k} outside 0..={}",
                self.n.saturating_sub(1)
            )));
        }
        Ok(self.counts[i..=k].iter().sum())
    }

    /// All pairs; equals `σ^(2n)`.
    pub fn total(&self) -> PopCount {
        self.counts.iter().sum::<PopCount>() + &self.equal_pairs
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,count\n");
        for (j, count) in self.counts.iter().enumerate() {
            out.push_str(&format!("{j},{count}\n"));
        }
        out.push_str(&format!("{},{}\n", self.n, self.equal_pairs));
        out
    }
}

/// `Lⱼ = Σ_(s ∈ Γⱼ) p(0^(n-j) s)`.
fn border_class_population(n: usize, j: usize, sigma: u32) -> Result<PopCount> {
    enumerate_gamma(j)?
        .members
        .iter()
        .map(|s| pop_corr(&s.with_leading_zeros(n - j), sigma, Method::Rec1))
        .sum::<Result<PopCount>>()
}

pub fn longest_border_counts(n: usize, sigma: u32) -> Result<BorderCountTable> {
    check_sigma(sigma)?;
    if n == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    let mut counts = (0..=n)
        .into_par_iter()
        .map(|j| border_class_population(n, j, sigma))
        .collect::<Result<Vec<_>>>()?;
    let equal_pairs = counts.pop().expect("n + 1 entries");
    Ok(BorderCountTable {
        n,
        sigma,
        counts,
        equal_pairs,
    })
}

/// `L_[i..k] = Σ_(j=i..=k) Lⱼ`.
pub fn longest_border_range(n: usize, sigma: u32, i: usize, k: usize) -> Result<PopCount> {
    if i > k || k >= n {
        return Err(Error::InvalidArgument(format!(
            "border range {i}..={k} outside 0..={}",
            n.saturating_sub(1)
        )));
    }
    longest_border_counts(n, sigma)?.range(i, k)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationResult {
    pub n: usize,
    pub sigma: u32,
    /// Whether the `u = v` pairs contribute `n` each.
    pub include_equal_pairs: bool,
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub value_f64: f64,
    pub threshold: usize,
    /// `Σ_(j<J) Σ_(s ∈ Γⱼ) j·p(s_2n) / σ^(2n)`; never exceeds `value`.
    #[serde(serialize_with = "ser_rational")]
    pub finite_lower_bound: BigRational,
    /// Limit of `finite_lower_bound` as `n` grows: `Σ_(j<J) Σ_s j·c(s)·p(s)`.
    pub asymptotic_lower_bound: f64,
    /// `σ/(σ-1)²`.
    #[serde(serialize_with = "ser_rational")]
    pub upper_bound: BigRational,
}

/// `E(X) = Σ_(j=1..n-1) j·Lⱼ / σ^(2n)`, optionally adding `n·σⁿ / σ^(2n)`.
pub fn expected_longest_border(
    n: usize,
    sigma: u32,
    include_equal_pairs: bool,
    threshold: usize,
) -> Result<ExpectationResult> {
    let table = longest_border_counts(n, sigma)?;
    let total = sigma_pow(sigma, 2 * n);
    let mut weighted = BigUint::zero();
    for (j, count) in table.counts.iter().enumerate() {
        weighted += count.value() * BigUint::from(j);
    }
    if include_equal_pairs {
        weighted += table.equal_pairs.value() * BigUint::from(n);
    }
    let value = ratio(&weighted, &total);

    let mut finite = BigUint::zero();
    let mut asymptotic = 0.0;
    for j in 1..threshold {
        for s in &enumerate_gamma(j)?.members {
            if j < n {
                finite += pop_auto(s, 2 * n, sigma)?.value() * BigUint::from(j);
            }
            asymptotic += j as f64 * asymptotic_constant(s, sigma, DEFAULT_PRECISION)?.limit_f64;
        }
    }
    let s = BigInt::from(sigma);
    let upper_bound = BigRational::new(s.clone(), (s - 1u32).pow(2));
    Ok(ExpectationResult {
        n,
        sigma,
        include_equal_pairs,
        value_f64: to_f64(&value),
        value,
        threshold,
        finite_lower_bound: ratio(&finite, &total),
        asymptotic_lower_bound: asymptotic,
        upper_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub s: Correlation,
    pub sigma: u32,
    pub precision_n: usize,
    /// `p(s)`.
    pub population: PopCount,
    /// `c` from the truncated series for `h̃(σ²)`.
    pub c: f64,
    /// `|c − c_series|` is at most this.
    pub series_tail_bound: f64,
    /// `c` read off `p(s_N) / (p(s) σ^N)` at `N = precision_n`.
    pub c_limit: f64,
    /// `|c − c_limit|` is at most this.
    pub limit_error_bound: f64,
    /// `|c_series − c_limit|`, exact before rounding.
    pub gap: f64,
    /// `lim p(s_m) / σ^m = c·p(s)`; the lower ratio bound.
    pub limit_f64: f64,
    pub lower: f64,
    /// `lower · σ/(σ-1)`, exclusive.
    pub upper: f64,
    /// Residual of `h̃(z) + Ψ(z) h̃(z²) = 2 Ψ(z) z^(-2j)` at `z = σ²`.
    pub functional_residual: f64,
    /// Bound on that residual implied by the truncation alone.
    pub functional_residual_bound: f64,
}

impl AsymptoticEstimate {
    /// Whether both routes for `c` agree within their combined error bounds.
    pub fn routes_agree(&self) -> bool {
        self.gap <= self.series_tail_bound + self.limit_error_bound
    }

    /// Whether the functional-equation residual stays within its bound.
    pub fn functional_equation_holds(&self) -> bool {
        self.functional_residual.abs() <= self.functional_residual_bound
    }

    pub fn contains(&self, ratio: f64) -> bool {
        self.lower <= ratio && ratio < self.upper
    }
}

/// `Σ_(m=j..=N) p(s_m) σ^(-e·m) / p(s)` for `z = σ^e`.
fn h_tilde(values: &[BigUint], j: usize, sigma: u32, e: usize) -> BigRational {
    let n_max = j + values.len() - 1;
    let den = sigma_pow(sigma, e * n_max);
    let mut num = BigUint::zero();
    for (i, p) in values.iter().enumerate() {
        num += p * sigma_pow(sigma, e * (n_max - j - i));
    }
    ratio(&num, &(den * &values[0]))
}

/// Upper bound on `Σ_(m>N) p(s_m) σ^(-e·m) / p(s)` from `p(s_m) <= σ^(m-j)`.
fn h_tilde_tail(j: usize, sigma: u32, e: usize, n: usize, p_s: &BigUint) -> BigRational {
    // σ^(-j) σ^(-(e-1)(N+1)) / (1 − σ^(-(e-1))) / p(s)
    let q = sigma_pow(sigma, e - 1);
    let num = q.clone();
    let den = sigma_pow(sigma, j + (e - 1) * (n + 1)) * (q - 1u32) * p_s;
    ratio(&num, &den)
}

/// `Ψ(z) = Σ_(i<=j) ψ[i] zⁱ = 1/(1 − σ/z) + Σ_(i=1..j) s[j-i] zⁱ` at `z = σ^e`.
fn psi_generating(s: &Correlation, sigma: u32, e: usize) -> BigRational {
    let j = s.len();
    let z = BigInt::from(sigma_pow(sigma, e));
    let sigma = BigInt::from(sigma);
    let mut total = BigRational::new(z.clone(), z.clone() - sigma);
    for i in 1..=j {
        if s.bit(j - i) {
            total += BigRational::from_integer(z.pow(i as u32));
        }
    }
    total
}

pub fn asymptotic_constant(s: &Correlation, sigma: u32, precision_n: usize) -> Result<AsymptoticEstimate> {
    check_sigma(sigma)?;
    if !is_autocorrelation(s) {
        return Err(Error::InvalidAutocorrelation(s.to_string()));
    }
    let j = s.len();
    if precision_n < 2 * j + 4 {
        return Err(Error::InvalidArgument(format!(
            "precision {precision_n} below the minimum {} for a suffix of length {j}",
            2 * j + 4
        )));
    }
    let values: Vec<BigUint> = pop_auto_series(s, precision_n, sigma)?
        .into_iter()
        .map(PopCount::into_inner)
        .collect();
    let p_s = values[0].clone();
    let n = precision_n;

    let two_over = BigRational::new(BigInt::from(2u32), BigInt::from(sigma_pow(sigma, 2 * j)));
    let h2 = h_tilde(&values, j, sigma, 2);
    let c_series = &two_over - &h2;
    let tail2 = h_tilde_tail(j, sigma, 2, n, &p_s);

    let c_limit = ratio(&values[n - j], &(sigma_pow(sigma, n) * &p_s));
    // p(s_N)/σ^N − c·p(s) = Σ_(k>N/2) p(s_k) σ^(-2k) − σ^(-N) Σ_(N/2<k<=(N+j)/2) p(s_k) ψ[2k−N],
    // both bounded through p(s_k) <= σ^(k-j) and 0 <= ψ <= 1 there.
    let half = n / 2;
    let first = ratio(
        &sigma_pow(sigma, 1),
        &(sigma_pow(sigma, j + half + 1) * (BigUint::from(sigma) - 1u32)),
    );
    let count = BigUint::from((n + j) / 2 - half);
    let second = ratio(&(count * sigma_pow(sigma, (n + j) / 2)), &sigma_pow(sigma, n + j));
    let limit_bound = (first + second) / BigRational::from_integer(BigInt::from(p_s.clone()));
    let gap = (&c_series - &c_limit).abs();

    let h4 = h_tilde(&values, j, sigma, 4);
    let tail4 = h_tilde_tail(j, sigma, 4, n, &p_s);
    let psi2 = psi_generating(s, sigma, 2);
    let rhs = &psi2 * BigRational::new(BigInt::from(2u32), BigInt::from(sigma_pow(sigma, 4 * j)));
    let residual = &h2 + &psi2 * &h4 - rhs;
    let residual_bound = &tail2 + &psi2 * &tail4;

    let limit = &c_series * BigRational::from_integer(BigInt::from(p_s.clone()));
    let upper = &limit * BigRational::new(BigInt::from(sigma), BigInt::from(sigma - 1));
    Ok(AsymptoticEstimate {
        s: s.clone(),
        sigma,
        precision_n,
        population: PopCount::from(p_s),
        c: to_f64(&c_series),
        series_tail_bound: to_f64(&tail2),
        c_limit: to_f64(&c_limit),
        limit_error_bound: to_f64(&limit_bound),
        gap: to_f64(&gap),
        limit_f64: to_f64(&limit),
        lower: to_f64(&limit),
        upper: to_f64(&upper),
        functional_residual: to_f64(&residual),
        functional_residual_bound: to_f64(&residual_bound),
    })
}

/// `[c·p(s), c·p(s)·σ/(σ-1))` at [`DEFAULT_PRECISION`], widened for short suffixes.
pub fn ratio_bounds(s: &Correlation, sigma: u32) -> Result<AsymptoticEstimate> {
    asymptotic_constant(s, sigma, DEFAULT_PRECISION.max(2 * s.len() + 4))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbePoint {
    pub n: usize,
    pub correlation: Correlation,
    pub population: PopCount,
    pub ratio: f64,
    pub within_bounds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceProbe {
    pub bounds: AsymptoticEstimate,
    pub points: Vec<ProbePoint>,
}

impl ConvergenceProbe {
    pub fn all_within(&self) -> bool {
        self.points.iter().all(|p| p.within_bounds)
    }
}

/// Exact `p(0^(n-j) s) / σ^(2n)` for `n` from `max(j, 1)` to `n_max`.
pub fn ratio_convergence_probe(s: &Correlation, sigma: u32, n_max: usize) -> Result<ConvergenceProbe> {
    let bounds = ratio_bounds(s, sigma)?;
    let j = s.len();
    let points = (j.max(1)..=n_max)
        .map(|n| {
            let t = s.with_leading_zeros(n - j);
            let population = pop_corr(&t, sigma, Method::Rec1)?;
            let exact = ratio(population.value(), &sigma_pow(sigma, 2 * n));
            let r = to_f64(&exact);
            Ok(ProbePoint {
                n,
                correlation: t,
                population,
                ratio: r,
                within_bounds: bounds.contains(r),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceProbe { bounds, points })
}

/// `Σ_(j=0..n-1) j / σ^j`, the expected border length used as a comparison.
pub fn border_length_upper_series(n: usize, sigma: u32) -> BigRational {
    let mut total = BigRational::zero();
    let s = BigInt::from(sigma);
    for j in 1..n {
        total += BigRational::new(BigInt::from(j), s.pow(j as u32));
    }
    total
}
