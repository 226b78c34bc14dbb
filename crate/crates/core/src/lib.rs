//! Correlations of pairs of words: which bit vectors occur, how many pairs
//! share each one, and what that says about the longest border of a random
//! pair.
//!
//! The correlation of two words `u`, `v` of length `n` has bit `i` set when
//! the suffix of `u` of length `n - i` equals the prefix of `v` of the same
//! length. Bit 0 is written first.
//!
//! ```
//! use corrpop::{correlation, pop_corr, Correlation, Method, Word};
//!
//! let u = Word::parse("abab", 2)?;
//! let v = Word::parse("babb", 2)?;
//! assert_eq!(correlation(&u, &v)?.to_string(), "0101");
//!
//! let t: Correlation = "0001".parse()?;
//! assert_eq!(pop_corr(&t, 2, Method::Rec1)?, 82);
//! # Ok::<(), corrpop::Error>(())
//! ```

pub mod analytics;
pub mod error;
pub mod lattice;
pub mod population;
pub mod realize;
pub mod sets;
pub mod verify;
pub mod words;

pub use analytics::{
    asymptotic_constant, expected_longest_border, longest_border_counts, longest_border_range, ratio_bounds,
    ratio_convergence_probe, AsymptoticEstimate, BorderCountTable, ExpectationResult,
};
pub use error::{Error, Result};
pub use lattice::{check_jordan_dedekind, export_dot, join, meet, HasseDiagram};
pub use population::{nfc, pop_auto, pop_corr, pop_right, population_table, Method, PopulationTable};
pub use realize::{realize_autocorrelation, realize_correlation, verify_realization};
pub use sets::{decompose, enumerate_delta, enumerate_gamma, is_autocorrelation, is_valid_correlation};
pub use verify::{verify, VerifyReport};
pub use words::{autocorrelation, borders, correlation, Budget, Correlation, PopCount, Word, WordPair};
