//! Numerical semigroups: construction, membership, Apéry sets.
//!
//! A numerical semigroup is an additively closed subset of the natural
//! numbers that contains 0 and has a finite complement (the gap set).
//! The degenerate case S = N is rejected everywhere, so the largest gap
//! (the Frobenius number) always exists.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A numerical semigroup, stored as its minimal generators, its gaps,
/// and a membership table covering `0..=F+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    gaps: Vec<i64>,
    frobenius: i64,
    membership: Vec<bool>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// First index at which `len` consecutive `true` entries start.
fn find_run(table: &[bool], len: usize) -> Option<usize> {
    let mut run = 0;
    for (i, &m) in table.iter().enumerate() {
        run = if m { run + 1 } else { 0 };
        if run == len {
            return Some(i + 1 - len);
        }
    }
    None
}

impl NumericalSemigroup {
    /// The semigroup generated by the given positive integers.
    ///
    /// The generators must be coprime as a set (otherwise the complement
    /// is infinite) and must not generate all of N. Redundant generators
    /// are accepted and dropped; the stored list is minimal.
    pub fn from_generators(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveElement(bad));
        }
        let mut gens: Vec<i64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let e = gens[0] as usize;
        if e == 1 {
            return Err(Error::IsAllOfN);
        }
        // Sieve membership until a run of e consecutive members appears;
        // from its start everything is a member, so the run is the
        // conductor and the entry before it is the Frobenius number.
        let mut bound = e * (*gens.last().unwrap() as usize) + 2;
        loop {
            let mut member = vec![false; bound + 1];
            member[0] = true;
            for x in 1..=bound {
                member[x] = gens.iter().any(|&g| {
                    let g = g as usize;
                    g <= x && member[x - g]
                });
            }
            if let Some(start) = find_run(&member, e) {
                member.truncate(start + 1);
                return Ok(Self::from_membership_table(member));
            }
            bound *= 2;
        }
    }

    /// The semigroup whose gap set is exactly `gaps`.
    ///
    /// Fails with [`Error::NotAdditivelyClosed`] when some claimed gap is
    /// a sum of two members, and with [`Error::IsAllOfN`] on an empty
    /// gap list.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        if let Some(&bad) = gaps.iter().find(|&&x| x <= 0) {
            return Err(Error::NonPositiveElement(bad));
        }
        let mut gs: Vec<i64> = gaps.to_vec();
        gs.sort_unstable();
        gs.dedup();
        let frobenius = match gs.last() {
            Some(&f) => f,
            None => return Err(Error::IsAllOfN),
        };
        let mut member = vec![true; (frobenius + 2) as usize];
        for &x in &gs {
            member[x as usize] = false;
        }
        for &f in &gs {
            for s in 1..=f / 2 {
                if member[s as usize] && member[(f - s) as usize] {
                    return Err(Error::NotAdditivelyClosed { s1: s, s2: f - s });
                }
            }
        }
        Ok(Self::from_membership_table(member))
    }

    /// Builds from a membership table over `0..=F+1` whose complement is
    /// already known to be additively closed. The last entry is the
    /// conductor F+1 and must be a member; the one before it is F.
    pub(crate) fn from_membership_table(membership: Vec<bool>) -> Self {
        let frobenius = membership.len() as i64 - 2;
        debug_assert!(frobenius >= 1, "membership table too short");
        debug_assert!(
            membership[0] && !membership[frobenius as usize] && membership[frobenius as usize + 1]
        );
        let gaps: Vec<i64> = (1..=frobenius)
            .filter(|&x| !membership[x as usize])
            .collect();
        let contains = |x: i64| x > frobenius || (x >= 0 && membership[x as usize]);
        let multiplicity = (1..).find(|&x| contains(x)).unwrap();
        // Minimal generators are the members that are not sums of two
        // positive members; they all lie in [e, F + e].
        let mut generators = Vec::new();
        for m in multiplicity..=frobenius + multiplicity {
            if !contains(m) {
                continue;
            }
            let decomposable =
                (multiplicity..=m - multiplicity).any(|s| contains(s) && contains(m - s));
            if !decomposable {
                generators.push(m);
            }
        }
        NumericalSemigroup {
            generators,
            gaps,
            frobenius,
            membership,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x > self.frobenius || (x >= 0 && self.membership[x as usize])
    }

    /// Minimal generators, ascending.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.generators
    }

    /// Gap set, ascending. Never empty.
    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    /// Largest gap.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// First member from which on everything is a member: F + 1.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    /// Least positive member.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> i64 {
        self.generators.len() as i64
    }

    pub fn is_minimal_generator(&self, x: i64) -> bool {
        self.generators.binary_search(&x).is_ok()
    }

    /// Members in `[0, bound]`, ascending.
    pub fn members_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x))
    }

    /// The Apéry set `{ x in S : x - modulus not in S }` of a positive
    /// member: the least member in each residue class mod `modulus`. Has
    /// exactly `modulus` elements, always including 0, with maximum
    /// F + modulus.
    pub fn apery_set(&self, modulus: i64) -> Result<Vec<i64>> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if modulus < 0 || !self.contains(modulus) {
            return Err(Error::NotAMember(modulus));
        }
        let result = self.apery_raw(modulus);
        debug_assert_eq!(result.len() as i64, modulus);
        Ok(result)
    }

    /// The member filter behind [`Self::apery_set`] without requiring
    /// `k` to be a member. For a non-member k the result is still
    /// `{ x in S : x - k not in S }` but has more than k elements.
    pub(crate) fn apery_raw(&self, k: i64) -> Vec<i64> {
        (0..=self.frobenius + k)
            .filter(|&x| self.contains(x) && !self.contains(x - k))
            .collect()
    }
}

/// Renders the minimal generators as a comma-separated literal, the same
/// form [`FromStr`] accepts.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.generators {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

fn parse_int_list(body: &str) -> Result<Vec<i64>> {
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::InvalidLiteral(format!("cannot parse `{tok}` as an integer")))
        })
        .collect()
}

/// Parses `4,7,9` as generators and `gaps:1,2,4,7` as a gap set.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.strip_prefix("gaps:") {
            Some(body) => Self::from_gaps(&parse_int_list(body)?),
            None => Self::from_generators(&parse_int_list(text)?),
        }
    }
}
