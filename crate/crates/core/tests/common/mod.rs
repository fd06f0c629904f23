//! Brute-force oracles shared by the integration tests.
//!
//! Each oracle decides membership of a single integer from first
//! principles, using only `CofiniteSet::contains` on the *inputs* —
//! never the windowed sum/quotient assembly under test.
//!
//! Compiled once per test binary; each binary uses a different subset.
#![allow(dead_code)]

use nsg_core::CofiniteSet;

/// Does `z` have a representation `x + y` with `x` in `i`, `y` in `j`?
/// Only `x` in `[min(i), z - min(j)]` can contribute.
pub fn brute_sum_contains(i: &CofiniteSet, j: &CofiniteSet, z: i64) -> bool {
    (i.min_element()..=z - j.min_element()).any(|x| i.contains(x) && j.contains(z - x))
}

/// Is `z + j` a subset of `i`? Summands at or beyond `c(i) - z` land in
/// the tail of `i` automatically, so only finitely many need checking.
pub fn brute_difference_contains(i: &CofiniteSet, j: &CofiniteSet, z: i64) -> bool {
    (j.min_element()..i.conductor() - z).all(|y| !j.contains(y) || i.contains(z + y))
}

/// Does `z` have a representation as a sum of `count` members of `i`?
pub fn brute_multiple_contains(i: &CofiniteSet, count: i64, z: i64) -> bool {
    if count == 1 {
        return i.contains(z);
    }
    (i.min_element()..=z - (count - 1) * i.min_element())
        .any(|x| i.contains(x) && brute_multiple_contains(i, count - 1, z - x))
}

/// Asserts that `computed` and the oracle decide every point of
/// `[lo, hi)` the same way.
pub fn assert_pointwise(
    computed: &CofiniteSet,
    oracle: impl Fn(i64) -> bool,
    lo: i64,
    hi: i64,
    label: &str,
) {
    for z in lo..hi {
        assert_eq!(
            computed.contains(z),
            oracle(z),
            "{label} disagrees with the brute oracle at {z}; computed {computed}"
        );
    }
}

/// All `k`-element subsets of `{1, ..., n}`, visited in lexicographic
/// order. The closure decides nothing; it just receives each subset.
pub fn for_each_subset(n: i64, k: usize, mut visit: impl FnMut(&[i64])) {
    fn rec(n: i64, k: usize, next: i64, acc: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
        if acc.len() == k {
            visit(acc);
            return;
        }
        let remaining = (k - acc.len()) as i64;
        for v in next..=n - remaining + 1 {
            acc.push(v);
            rec(n, k, v + 1, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity(k);
    rec(n, k, 1, &mut acc, &mut visit);
}

/// Decides from scratch whether the complement of `gaps` in the
/// nonnegative integers is closed under addition (the gap sets of
/// numerical semigroups of genus g are exactly the valid g-element
/// subsets of `{1, ..., 2g - 1}`).
pub fn complement_is_additively_closed(gaps: &[i64]) -> bool {
    let top = *gaps.last().unwrap();
    let is_gap = |x: i64| gaps.binary_search(&x).is_ok();
    for x in 1..=top {
        if is_gap(x) {
            continue;
        }
        for y in x..=top - x {
            if !is_gap(y) && is_gap(x + y) {
                return false;
            }
        }
    }
    true
}
