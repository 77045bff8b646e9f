//! Lexicographic k-subset search shared by the brute-force solvers.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default cap on the number of subsets an exhaustive solver may visit.
pub const DEFAULT_SUBSET_GUARD: u128 = 100_000_000;

/// Searches below this size stay on the calling thread.
const PARALLEL_THRESHOLD: u128 = 200_000;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub(crate) fn check_guard(what: &'static str, n: usize, k: usize, guard: u128) -> Result<()> {
    let needed = binomial(n, k);
    if needed > guard {
        return Err(Error::GuardExceeded {
            what,
            needed,
            limit: guard,
        });
    }
    Ok(())
}

/// Best scoring `k`-subset of `candidates`.
///
/// `score` returns `None` for infeasible subsets. The result is the maximum
/// score with the lexicographically smallest subset attaining it; the search
/// stops early once `ceiling` is reached. Large searches are split across
/// threads by first element and reduced deterministically.
pub(crate) fn best_subset<S, F>(
    candidates: &[usize],
    k: usize,
    ceiling: usize,
    make_scorer: S,
) -> Option<(usize, Vec<usize>)>
where
    S: Fn() -> F + Sync,
    F: FnMut(&[usize]) -> Option<usize>,
{
    if k == 0 {
        let mut score = make_scorer();
        return score(&[]).map(|v| (v, Vec::new()));
    }
    if k > candidates.len() {
        return None;
    }
    let firsts = candidates.len() - k + 1;
    let run = |i: usize| -> Option<(usize, Vec<usize>)> {
        let mut score = make_scorer();
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut subset = vec![candidates[i]; k];
        for rest in candidates[i + 1..].iter().copied().combinations(k - 1) {
            subset[1..].copy_from_slice(&rest);
            if let Some(v) = score(&subset) {
                if best.as_ref().is_none_or(|(b, _)| v > *b) {
                    best = Some((v, subset.clone()));
                    if v >= ceiling {
                        break;
                    }
                }
            }
        }
        best
    };
    let pick = |a: Option<(usize, Vec<usize>)>, b: Option<(usize, Vec<usize>)>| match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    };
    if binomial(candidates.len(), k) < PARALLEL_THRESHOLD {
        let mut best = None;
        for i in 0..firsts {
            best = pick(best, run(i));
            if best.as_ref().is_some_and(|(v, _)| *v >= ceiling) {
                break;
            }
        }
        best
    } else {
        (0..firsts)
            .into_par_iter()
            .map(run)
            .reduce(|| None, pick)
    }
}

/// Number of `k`-subsets of `candidates` accepted by `pred`.
pub(crate) fn count_subsets<F>(candidates: &[usize], k: usize, mut pred: F) -> u64
where
    F: FnMut(&[usize]) -> bool,
{
    candidates
        .iter()
        .copied()
        .combinations(k)
        .filter(|s| pred(s))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn best_subset_prefers_lexicographically_smallest() {
        let cands = [0, 1, 2, 3];
        let best = best_subset(&cands, 2, usize::MAX, || |s: &[usize]| Some(s[1] % 2)).unwrap();
        assert_eq!(best, (1, vec![0, 1]));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let cands: Vec<usize> = (0..30).collect();
        let score = || |s: &[usize]| Some(s.iter().map(|v| v * v % 17).sum::<usize>());
        let par = best_subset(&cands, 5, usize::MAX, score).unwrap();
        let seq = cands
            .iter()
            .copied()
            .combinations(5)
            .map(|s| (s.iter().map(|v| v * v % 17).sum::<usize>(), s))
            .fold(None::<(usize, Vec<usize>)>, |acc, x| match acc {
                Some(a) if a.0 >= x.0 => Some(a),
                _ => Some(x),
            })
            .unwrap();
        assert_eq!(par, seq);
    }
}
