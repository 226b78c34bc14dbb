//! Identities that tie the modules together, checked over exhaustive or
//! evenly strided samples.

use corrpop::population::{pop_corr, pop_right, Method};
use corrpop::realize::realize_correlation;
use corrpop::sets::{decompose, enumerate_delta, is_valid_correlation};
use corrpop::words::{autocorrelation, brute_population_table, correlation, Budget, Word};

#[test]
fn suffix_stability_strided() {
    // every 7th (u, v) pair at n = 8, all pads of length 4
    let n = 8;
    let pads: Vec<Word> = (0..16).map(|i| Word::from_index(i, 4, 2)).collect();
    for index in (0..1u64 << (2 * n)).step_by(7) {
        let u = Word::from_index(index >> n, n, 2);
        let v = Word::from_index(index & 0xff, n, 2);
        let base = correlation(&u, &v).unwrap();
        for x in &pads {
            for y in &pads {
                let long = correlation(&x.concat(&u).unwrap(), &v.concat(y).unwrap()).unwrap();
                assert_eq!(long.suffix(n), base);
            }
        }
    }
}

#[test]
fn every_observed_correlation_decomposes() {
    for n in 1..=7 {
        for (t, p) in brute_population_table(n, 2, &Budget::default()).unwrap() {
            let d = decompose(&t).expect("observed correlations are valid");
            assert_eq!(pop_corr(&t, 2, Method::Rec1).unwrap(), p);
            if d.j > 0 {
                assert!(pop_right(&t, 2).unwrap().value() * pop_right(&t, 2).unwrap().value() >= *p.value());
            }
        }
    }
}

#[test]
fn realized_suffix_is_the_longest_border() {
    for n in 1..=10 {
        for t in &enumerate_delta(n).unwrap().members {
            let pair = realize_correlation(t).unwrap();
            let d = decompose(t).unwrap();
            let border = pair.u.slice(n - d.j..n);
            assert_eq!(autocorrelation(&border), d.suffix);
        }
    }
}

#[test]
fn ternary_correlations_are_binary_correlations() {
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..3u64.pow(8) {
        let u = Word::from_index(i / 81, 4, 3);
        let v = Word::from_index(i % 81, 4, 3);
        seen.insert(correlation(&u, &v).unwrap());
    }
    assert!(seen.iter().all(is_valid_correlation));
    assert_eq!(seen.len(), enumerate_delta(4).unwrap().len());
}
