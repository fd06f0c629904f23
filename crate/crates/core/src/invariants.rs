//! Classical invariants and yes/no properties of a numerical semigroup.

use crate::semigroup::NumericalSemigroup;

/// The classical numerical invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    /// Largest gap F.
    pub frobenius: i64,
    /// Number of gaps g.
    pub genus: i64,
    /// Least positive member e.
    pub multiplicity: i64,
    /// Number of members in `[0, F]`, written n. Satisfies g + n = F + 1.
    pub sporadic_count: i64,
    /// The type t = |(M - M) \ S|, the number of pseudo-Frobenius numbers.
    pub typ: i64,
    /// Number of minimal generators.
    pub embedding_dimension: i64,
    /// Least h with (h+1)M = hM + e; the Hilbert function is e from
    /// this index on.
    pub reduction_number: i64,
}

/// Classical predicates: symmetric, maximal embedding dimension, Arf.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub symmetric: bool,
    pub med: bool,
    pub arf: bool,
}

impl NumericalSemigroup {
    /// The pseudo-Frobenius numbers `(M - M) \ S`, ascending. Their
    /// count is the type; the Frobenius number is always among them.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let m = self.maximal_ideal();
        m.difference(&m).set_minus(&self.to_cofinite())
    }

    /// Least h with (h+1)M = hM + e.
    pub fn reduction_number_of_maximal_ideal(&self) -> i64 {
        let m = self.maximal_ideal();
        let e = self.multiplicity();
        let mut power = m.clone();
        let mut h = 1;
        loop {
            let next = power.sum(&m);
            if next == power.shift(e) {
                return h;
            }
            power = next;
            h += 1;
            assert!(h <= self.frobenius() + 2, "powers of M did not stabilize");
        }
    }

    pub fn invariants(&self) -> InvariantRecord {
        let frobenius = self.frobenius();
        let genus = self.genus();
        InvariantRecord {
            frobenius,
            genus,
            multiplicity: self.multiplicity(),
            sporadic_count: self.members_up_to(frobenius).count() as i64,
            typ: self.pseudo_frobenius().len() as i64,
            embedding_dimension: self.embedding_dimension(),
            reduction_number: self.reduction_number_of_maximal_ideal(),
        }
    }

    /// The Hilbert function `h -> |hM \ (h+1)M|`, with value 1 at h = 0.
    /// Takes the value ν at h = 1 and stays at e from the reduction
    /// number on.
    pub fn hilbert_function(&self, h: i64) -> i64 {
        assert!(h >= 0, "Hilbert function index must be nonnegative");
        if h == 0 {
            return 1;
        }
        let m = self.maximal_ideal();
        let power = m.multiple(h);
        power.set_minus(&power.sum(&m)).len() as i64
    }

    /// Symmetric / maximal embedding dimension / Arf, each computed from
    /// first principles. Symmetry is checked two ways (type 1, and the
    /// canonical ideal equal to S) which must agree.
    pub fn predicates(&self) -> Predicates {
        let by_type = self.pseudo_frobenius().len() == 1;
        let by_canonical = self.canonical_ideal() == self.to_cofinite();
        assert_eq!(by_type, by_canonical, "symmetry routes disagree on {self}");
        let med = self.embedding_dimension() == self.multiplicity();
        Predicates {
            symmetric: by_type,
            med,
            arf: self.is_arf(),
        }
    }

    /// Arf means x + y - z stays a member for all members z <= y <= x.
    /// A failing combination lands in a gap, and x + y - z >= x, so any
    /// failure already appears with x <= F; scanning members up to
    /// 2F + 2 is comfortably past that.
    fn is_arf(&self) -> bool {
        let members: Vec<i64> = self.members_up_to(2 * self.frobenius() + 2).collect();
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members[..=i].iter().enumerate() {
                for &z in &members[..=j] {
                    if !self.contains(x + y - z) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
