//! Arithmetic on cofinite sets of integers bounded below.
//!
//! Relative ideals of a numerical semigroup — the semigroup itself, its
//! maximal ideal, the canonical ideal, their sums, quotients and powers —
//! are all sets of integers with a least element that contain every
//! integer from some point on. [`CofiniteSet`] represents them exactly
//! and closes them under sum, quotient and repeated sum.

use std::fmt;

use crate::semigroup::NumericalSemigroup;

/// A set of integers, bounded below, containing every integer greater
/// than or equal to its conductor.
///
/// The representation is normal: the sporadic elements are strictly
/// increasing and all below the conductor, and the conductor is minimal
/// (so `conductor - 1` is never a member). Derived equality on normal
/// forms is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CofiniteSet {
    sporadic: Vec<i64>,
    conductor: i64,
}

impl CofiniteSet {
    /// Builds the set from its members below `conductor` plus the ray
    /// `[conductor, oo)`. Sorts, deduplicates, drops listed elements that
    /// the ray already covers, and renormalizes the conductor.
    pub fn new(mut sporadic: Vec<i64>, mut conductor: i64) -> Self {
        sporadic.sort_unstable();
        sporadic.dedup();
        sporadic.retain(|&x| x < conductor);
        while sporadic.last() == Some(&(conductor - 1)) {
            sporadic.pop();
            conductor -= 1;
        }
        CofiniteSet {
            sporadic,
            conductor,
        }
    }

    /// The ray `[start, oo)`.
    pub fn ray(start: i64) -> Self {
        CofiniteSet {
            sporadic: Vec::new(),
            conductor: start,
        }
    }

    /// Members below the conductor, ascending.
    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    /// Least integer from which on everything is a member.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Least member.
    pub fn min_element(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.conductor)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || self.sporadic.binary_search(&x).is_ok()
    }

    /// Members strictly below `bound`, ascending.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        let tail = self.conductor..bound.max(self.conductor);
        self.sporadic
            .iter()
            .copied()
            .take_while(move |&x| x < bound)
            .chain(tail)
    }

    /// The sumset `{ x + y : x in self, y in other }`.
    ///
    /// Everything at or above `min(c(I) + min(J), c(J) + min(I))` is a
    /// sum, so only a finite window needs to be enumerated.
    pub fn sum(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.min_element() + other.min_element();
        let hi = (self.conductor + other.min_element()).min(other.conductor + self.min_element());
        let mut hit = vec![false; (hi - lo).max(0) as usize];
        for x in self.members_below(hi - other.min_element()) {
            for y in other.members_below(hi - x) {
                hit[(x + y - lo) as usize] = true;
            }
        }
        let members = hit
            .iter()
            .enumerate()
            .filter(|&(_, &h)| h)
            .map(|(k, _)| lo + k as i64)
            .collect();
        CofiniteSet::new(members, hi)
    }

    /// The quotient `self - other = { z : z + other is contained in self }`.
    ///
    /// Every z at or above `c(I) - min(J)` qualifies; no z below
    /// `min(I) - min(J)` can.
    pub fn difference(&self, other: &CofiniteSet) -> CofiniteSet {
        let lo = self.min_element() - other.min_element();
        let hi = self.conductor - other.min_element();
        let members = (lo..hi)
            .filter(|&z| {
                // summands at or beyond c(I) - z land in the tail of self
                other
                    .members_below(self.conductor - z)
                    .all(|y| self.contains(z + y))
            })
            .collect();
        CofiniteSet::new(members, hi)
    }

    /// The `count`-fold sum of the set with itself. `count` must be >= 1.
    pub fn multiple(&self, count: i64) -> CofiniteSet {
        assert!(count >= 1, "multiple needs a positive count, got {count}");
        let mut acc = self.clone();
        for _ in 1..count {
            acc = acc.sum(self);
        }
        acc
    }

    /// The translate `{ x + offset : x in self }`.
    pub fn shift(&self, offset: i64) -> CofiniteSet {
        CofiniteSet {
            sporadic: self.sporadic.iter().map(|x| x + offset).collect(),
            conductor: self.conductor + offset,
        }
    }

    pub fn is_subset_of(&self, other: &CofiniteSet) -> bool {
        self.sporadic.iter().all(|&x| other.contains(x))
            && (self.conductor..other.conductor).all(|x| other.contains(x))
    }

    /// Elements of `self` that are not in `other`, ascending. The result
    /// is finite because both sets share a tail.
    pub fn set_minus(&self, other: &CofiniteSet) -> Vec<i64> {
        self.members_below(other.conductor)
            .filter(|&x| !other.contains(x))
            .collect()
    }

    /// The set with `x` adjoined.
    pub fn with_element(&self, x: i64) -> CofiniteSet {
        if self.contains(x) {
            return self.clone();
        }
        let mut sporadic = self.sporadic.clone();
        sporadic.push(x);
        CofiniteSet::new(sporadic, self.conductor)
    }

    /// The set with `x` removed. Removing an element of the tail moves
    /// the conductor past it and records the tail prefix as sporadic.
    pub fn without_element(&self, x: i64) -> CofiniteSet {
        if !self.contains(x) {
            return self.clone();
        }
        let mut sporadic: Vec<i64> = self.sporadic.iter().copied().filter(|&y| y != x).collect();
        if x >= self.conductor {
            sporadic.extend(self.conductor..x);
            CofiniteSet::new(sporadic, x + 1)
        } else {
            CofiniteSet::new(sporadic, self.conductor)
        }
    }
}

/// Renders as `{0,4,5,7,8,9,11→}`: sporadic members, then the conductor
/// with a right arrow for the infinite tail.
impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.sporadic {
            write!(f, "{x},")?;
        }
        write!(f, "{}\u{2192}}}", self.conductor)
    }
}

/// Reduction data of the canonical ideal: the least h with
/// h·Omega = (h+1)·Omega under sumset powers, and the number of elements
/// that 2·Omega picks up beyond Omega.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalReduction {
    pub reduction_number: i64,
    pub excess: i64,
}

impl NumericalSemigroup {
    /// The semigroup as a cofinite set.
    pub fn to_cofinite(&self) -> CofiniteSet {
        let members = self.members_up_to(self.frobenius()).collect();
        CofiniteSet::new(members, self.frobenius() + 1)
    }

    /// The maximal ideal M = S \ {0}.
    pub fn maximal_ideal(&self) -> CofiniteSet {
        let members = self
            .members_up_to(self.frobenius())
            .filter(|&x| x > 0)
            .collect();
        CofiniteSet::new(members, self.frobenius() + 1)
    }

    /// The canonical ideal `{ x in N : F - x not in S }`, where F is the
    /// Frobenius number. It always contains 0, never contains F, and its
    /// conductor is exactly F + 1.
    pub fn canonical_ideal(&self) -> CofiniteSet {
        let f = self.frobenius();
        let members = (0..=f).filter(|&x| !self.contains(f - x)).collect();
        CofiniteSet::new(members, f + 1)
    }

    /// The trace ideal `Omega + (S - Omega)` of the canonical ideal.
    pub fn trace_ideal(&self) -> CofiniteSet {
        let omega = self.canonical_ideal();
        omega.sum(&self.to_cofinite().difference(&omega))
    }

    /// Reduction number and second-power excess of the canonical ideal.
    pub fn canonical_reduction(&self) -> CanonicalReduction {
        let omega = self.canonical_ideal();
        let square = omega.sum(&omega);
        let excess = square.set_minus(&omega).len() as i64;
        let mut power = omega.clone();
        let mut h = 1;
        loop {
            let next = power.sum(&omega);
            if next == power {
                return CanonicalReduction {
                    reduction_number: h,
                    excess,
                };
            }
            power = next;
            h += 1;
            assert!(
                h <= self.frobenius() + 2,
                "canonical powers did not stabilize"
            );
        }
    }
}
