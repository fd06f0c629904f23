//! Independent brute-force machinery for the acceptance suite: a
//! deterministic RNG, pointwise set-arithmetic oracles, bitmap
//! convolution for repeated sums, and a from-scratch gap-set filter.
//! Nothing here calls the windowed arithmetic under test.

use nsg_core::CofiniteSet;

/// SplitMix64: tiny, seedable, and good enough to scatter test inputs.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `[lo, hi)`; the modulo bias is irrelevant
    /// for test-input scattering.
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo) as u64) as i64
    }
}

/// A random set whose sporadic members and conductor all lie in
/// `[-30, 60]`.
pub fn random_set(rng: &mut SplitMix64) -> CofiniteSet {
    let count = rng.in_range(0, 10) as usize;
    let sporadic: Vec<i64> = (0..count).map(|_| rng.in_range(-30, 60)).collect();
    CofiniteSet::new(sporadic, rng.in_range(-30, 61))
}

/// Does `z` have a representation `x + y` with `x` in `i`, `y` in `j`?
pub fn brute_sum_contains(i: &CofiniteSet, j: &CofiniteSet, z: i64) -> bool {
    (i.min_element()..=z - j.min_element()).any(|x| i.contains(x) && j.contains(z - x))
}

/// Is `z + j` a subset of `i`? Summands at or beyond `c(i) - z` land in
/// the tail of `i` automatically.
pub fn brute_difference_contains(i: &CofiniteSet, j: &CofiniteSet, z: i64) -> bool {
    (j.min_element()..i.conductor() - z).all(|y| !j.contains(y) || i.contains(z + y))
}

/// Explicit membership bitmap on `[lo, hi)`, with everything at or
/// above `hi` understood to be a member. Convolution gives k-fold sums
/// without any windowing logic.
pub struct Bitmap {
    lo: i64,
    bits: Vec<bool>,
}

impl Bitmap {
    /// `hi` must be at least the set's conductor so the implicit tail
    /// is honest.
    pub fn from_set(set: &CofiniteSet, lo: i64, hi: i64) -> Bitmap {
        assert!(hi >= set.conductor());
        let bits = (lo..hi).map(|z| set.contains(z)).collect();
        Bitmap { lo, bits }
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.lo + self.bits.len() as i64 || (z >= self.lo && self.bits[(z - self.lo) as usize])
    }

    /// All pairwise sums of members, over the same explicit window.
    ///
    /// Exact on the whole window as long as neither operand has a
    /// member below `-MARGIN`: a sum `z < hi` then forces both
    /// summands below `hi + MARGIN`, and `contains` extends honestly
    /// past the window top.
    pub fn convolve(&self, other: &Bitmap) -> Bitmap {
        const MARGIN: i64 = 60;
        let hi = self.lo + self.bits.len() as i64;
        debug_assert_eq!(other.lo, self.lo);
        debug_assert!((self.lo..-MARGIN).all(|z| !self.contains(z)));
        debug_assert!((other.lo..-MARGIN).all(|z| !other.contains(z)));
        let mut bits = vec![false; self.bits.len()];
        for x in self.lo..hi + MARGIN {
            if !self.contains(x) {
                continue;
            }
            for y in other.lo..hi - x {
                if other.contains(y) {
                    let z = x + y;
                    if z >= self.lo {
                        bits[(z - self.lo) as usize] = true;
                    }
                }
            }
        }
        Bitmap { lo: self.lo, bits }
    }
}

/// All `k`-element subsets of `{1, ..., n}` in lexicographic order.
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

/// Is the complement of `gaps` in the nonnegative integers closed under
/// addition? Decides straight from the definition.
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
