//! Binary witnesses for autocorrelations and correlations.

use crate::error::{Error, Result};
use crate::sets::{decompose, Decomposition};
use crate::words::{autocorrelation_bits, character_classes, Correlation, Word, WordPair};

/// Lexicographically least binary word whose autocorrelation is `s`.
///
/// Positions forced equal by the periods of `s` are merged first, so the
/// search only assigns one letter per class, in order of first position.
/// A forbidden shift `p` (`s[p] = 0`) prunes a branch as soon as every pair
/// `(i, i+p)` lies in assigned classes with equal letters.
pub fn realize_autocorrelation(s: &Correlation) -> Result<Word> {
    let n = s.len();
    if n == 0 {
        return Word::new(Vec::new(), 2);
    }
    let invalid = || Error::InvalidAutocorrelation(s.to_string());
    if !s.bit(0) {
        return Err(invalid());
    }
    let classes = character_classes(s);
    let class_count = classes.iter().max().map_or(0, |m| m + 1);

    // For each forbidden shift, the class pairs that could break it, filed
    // under the class whose assignment completes them.
    let mut checks: Vec<Vec<Vec<(usize, usize)>>> = vec![Vec::new(); class_count];
    for p in (1..n).filter(|&p| !s.bit(p)) {
        let mut pairs: Vec<(usize, usize)> = (0..n - p)
            .map(|i| (classes[i], classes[i + p]))
            .filter(|(a, b)| a != b)
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        let Some(last) = pairs.iter().map(|&(a, b)| a.max(b)).max() else {
            // the equations alone already force period p
            return Err(invalid());
        };
        checks[last].push(pairs);
    }

    let mut letters = vec![0u32; class_count];
    if !search(0, &mut letters, &checks) {
        return Err(invalid());
    }
    let word: Vec<u32> = classes.iter().map(|&c| letters[c]).collect();
    debug_assert_eq!(autocorrelation_bits(&word), s.bits());
    Word::new(word, 2)
}

fn search(class: usize, letters: &mut [u32], checks: &[Vec<Vec<(usize, usize)>>]) -> bool {
    if class == letters.len() {
        return true;
    }
    let choices: &[u32] = if class == 0 { &[0] } else { &[0, 1] };
    for &letter in choices {
        letters[class] = letter;
        let broken = checks[class]
            .iter()
            .any(|pairs| pairs.iter().all(|&(a, b)| letters[a] == letters[b]));
        if !broken && search(class + 1, letters, checks) {
            return true;
        }
    }
    false
}

/// A binary pair `(u, v)` with `c(u, v) = t`.
///
/// Autocorrelations give `(w, w)`, `0^n` gives `(a^n, b^n)`, and otherwise,
/// with `w` realizing the suffix `s` of length `j`, `u = b^(n-j) w` and
/// `v = w a^(n-j)`: `w` starts with `a`, so it occurs in `u` only as a suffix
/// and is the longest border.
pub fn realize_correlation(t: &Correlation) -> Result<WordPair> {
    let n = t.len();
    let Decomposition { j, suffix } = decompose(t).ok_or_else(|| Error::InvalidCorrelation(t.to_string()))?;
    if j == n {
        let w = realize_autocorrelation(t)?;
        return WordPair::new(w.clone(), w);
    }
    if j == 0 {
        return WordPair::new(Word::repeat(0, n, 2)?, Word::repeat(1, n, 2)?);
    }
    let w = realize_autocorrelation(&suffix)?;
    let first = w.letters()[0];
    let other = 1 - first;
    let u = Word::repeat(other, n - j, 2)?.concat(&w)?;
    let v = w.concat(&Word::repeat(first, n - j, 2)?)?;
    WordPair::new(u, v)
}

/// Whether `pair` has correlation `t`; pairs of the wrong length never do.
pub fn verify_realization(t: &Correlation, pair: &WordPair) -> bool {
    pair.u.len() == t.len() && &pair.correlation() == t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{enumerate_delta, enumerate_gamma};
    use crate::words::autocorrelation;

    fn c(s: &str) -> Correlation {
        s.parse().unwrap()
    }

    fn pair(u: &str, v: &str) -> WordPair {
        WordPair::new(Word::parse(u, 2).unwrap(), Word::parse(v, 2).unwrap()).unwrap()
    }

    #[test]
    fn autocorrelation_examples() {
        assert_eq!(realize_autocorrelation(&c("1111")).unwrap().to_string(), "aaaa");
        assert_eq!(realize_autocorrelation(&c("1010")).unwrap().to_string(), "abab");
        let w = realize_autocorrelation(&c("100001001")).unwrap();
        assert_eq!(autocorrelation(&w), c("100001001"));
        let l = w.letters();
        assert!(l[0] == l[3] && l[3] == l[5] && l[5] == l[8]);
        assert!(l[1] == l[6] && l[2] == l[7]);
        assert!(matches!(
            realize_autocorrelation(&c("1011")),
            Err(Error::InvalidAutocorrelation(_))
        ));
        assert!(realize_autocorrelation(&c("0101")).is_err());
    }

    #[test]
    fn least_witness_is_lexicographically_least() {
        for n in 1..=10 {
            for s in &enumerate_gamma(n).unwrap().members {
                let least = (0..1u64 << n)
                    .map(|i| Word::from_index(i, n, 2))
                    .find(|w| &autocorrelation(w) == s)
                    .unwrap();
                assert_eq!(realize_autocorrelation(s).unwrap(), least);
            }
        }
    }

    #[test]
    fn correlation_examples() {
        assert_eq!(realize_correlation(&c("0000")).unwrap(), pair("aaaa", "bbbb"));
        assert_eq!(realize_correlation(&c("001")).unwrap(), pair("bba", "aaa"));
        assert_eq!(realize_correlation(&c("1010")).unwrap(), pair("abab", "abab"));
        assert!(matches!(
            realize_correlation(&c("0110")),
            Err(Error::InvalidCorrelation(_))
        ));
    }

    #[test]
    fn verify_examples() {
        assert!(verify_realization(&c("000101"), &pair("aabbab", "babbaa")));
        assert!(!verify_realization(&c("000101"), &pair("aabbab", "aabbab")));
        assert!(verify_realization(&c("00111"), &pair("abaaa", "aaabb")));
        assert!(!verify_realization(&c("0011"), &pair("abaaa", "aaabb")));
    }

    #[test]
    fn round_trips() {
        for n in 1..=12 {
            for t in &enumerate_delta(n).unwrap().members {
                let p = realize_correlation(t).unwrap();
                assert!(verify_realization(t, &p), "{t:?} -> {p}");
                assert_eq!(realize_correlation(t).unwrap(), p);
                if let Some(Decomposition { j, suffix }) = decompose(t).filter(|d| d.j > 0 && d.j < n) {
                    let w = realize_autocorrelation(&suffix).unwrap();
                    assert_eq!(w.len(), j);
                    assert_eq!(p.u.occurrences(&w), 1);
                }
            }
            for s in &enumerate_gamma(n).unwrap().members {
                assert_eq!(&autocorrelation(&realize_autocorrelation(s).unwrap()), s);
            }
        }
    }
}
