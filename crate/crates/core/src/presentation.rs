//! Minimal presentations: factorization graphs, Betti contributions,
//! and relation counts of dilatations.
//!
//! For a member n, the factorization graph has the minimal generators
//! g with n - g in S as vertices, and an edge between two vertices when
//! n minus both stays in S. A disconnected graph contributes
//! (components - 1) defining relations in degree n; the total over all
//! degrees is the minimal number mu of defining relations of the
//! semigroup ring.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Betti contributions by degree, and their total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationProfile {
    /// Degrees with a disconnected factorization graph, mapped to
    /// components - 1. Degrees contributing 0 are omitted.
    pub contributions: BTreeMap<i64, i64>,
    /// Minimal number of defining relations: the sum of all
    /// contributions.
    pub mu: i64,
}

impl NumericalSemigroup {
    /// Betti contributions of every degree. Degrees beyond
    /// F + 2·max(generators) have a complete factorization graph, so
    /// scanning up to that bound is exhaustive.
    pub fn presentation_profile(&self) -> PresentationProfile {
        let bound = self.frobenius() + 2 * self.minimal_generators().last().copied().unwrap();
        self.presentation_profile_up_to(bound)
    }

    /// [`Self::presentation_profile`] over an explicit degree window,
    /// for checking that the default bound is saturated.
    pub fn presentation_profile_up_to(&self, bound: i64) -> PresentationProfile {
        let gens = self.minimal_generators();
        let mut contributions = BTreeMap::new();
        for degree in 1..=bound {
            if !self.contains(degree) {
                continue;
            }
            let vertices: Vec<i64> = gens
                .iter()
                .copied()
                .filter(|&g| self.contains(degree - g))
                .collect();
            if vertices.len() < 2 {
                continue;
            }
            let components = count_components(vertices.len(), |i, j| {
                self.contains(degree - vertices[i] - vertices[j])
            });
            if components > 1 {
                contributions.insert(degree, components as i64 - 1);
            }
        }
        let mu = contributions.values().sum();
        PresentationProfile { contributions, mu }
    }

    /// How far the relation count of T = S + shift departs from the
    /// quadratic prediction:
    /// mu(T) - mu(S) - shift·ν(S) - shift·(shift - 1)/2.
    ///
    /// With `require_member` the shift must lie in S; otherwise any
    /// nonnegative shift in M - 2M is accepted.
    pub fn relation_count_gap(&self, shift: i64, require_member: bool) -> Result<i64> {
        if shift < 0 || !self.dilatation_domain().contains(shift) {
            return Err(Error::ShiftNotInDomain(shift));
        }
        if require_member && !self.contains(shift) {
            return Err(Error::ShiftNotInSemigroup(shift));
        }
        let t = self.dilate(shift)?;
        let mu_base = self.presentation_profile().mu;
        let mu_dilated = t.presentation_profile().mu;
        Ok(mu_dilated - mu_base - shift * self.embedding_dimension() - shift * (shift - 1) / 2)
    }
}

/// Connected components of a graph on `n` vertices given by an adjacency
/// predicate, via union-find.
fn count_components(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    (0..n).filter(|&x| parent[x] == x).count()
}
