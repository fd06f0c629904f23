//! Dilatations of numerical semigroups and their transfer identities.
//!
//! For a shift a in M - 2M the dilatation of S is the numerical
//! semigroup {0} ∪ (M + a). Its invariants are determined by those of S
//! (most shift by exactly a), its Apéry sets and minimal generators have
//! closed forms built from Apéry data of S alone, and for two-generator
//! semigroups those closed forms become fully explicit lattice boxes.

use crate::error::{Error, Result};
use crate::ideal::CofiniteSet;
use crate::semigroup::NumericalSemigroup;

impl NumericalSemigroup {
    /// The set M - 2M of valid dilatation shifts. It contains 0 and
    /// every member of S; it may also contain gaps and negative
    /// integers. [`Self::dilate`] accepts exactly its nonnegative part.
    pub fn dilatation_domain(&self) -> CofiniteSet {
        let m = self.maximal_ideal();
        m.difference(&m.multiple(2))
    }

    /// The dilatation {0} ∪ (M + shift).
    pub fn dilate(&self, shift: i64) -> Result<NumericalSemigroup> {
        if shift < 0 || !self.dilatation_domain().contains(shift) {
            return Err(Error::ShiftNotInDomain(shift));
        }
        if shift == 0 {
            return Ok(self.clone());
        }
        let frobenius = self.frobenius() + shift;
        let mut table = vec![false; (frobenius + 2) as usize];
        table[0] = true;
        for x in 1..=frobenius + 1 {
            table[x as usize] = x > shift && self.contains(x - shift);
        }
        Ok(NumericalSemigroup::from_membership_table(table))
    }

    /// The inverse of [`Self::dilate`]: the semigroup S with
    /// S + shift = self, when it exists.
    ///
    /// It exists exactly when shift < e, the maximal ideal satisfies
    /// 2M ⊆ M + shift, and {0} ∪ (M - shift) is not all of N. A shift
    /// equal to the multiplicity never works: dilating any semigroup by
    /// a gives multiplicity strictly above a.
    pub fn contract(&self, shift: i64) -> Result<NumericalSemigroup> {
        let e = self.multiplicity();
        if shift > e {
            return Err(Error::ShiftTooLarge {
                shift,
                multiplicity: e,
            });
        }
        if shift < 0 || shift == e || self.frobenius() - shift < 1 {
            return Err(Error::NotContractible(shift));
        }
        if shift == 0 {
            return Ok(self.clone());
        }
        let m = self.maximal_ideal();
        if !m.multiple(2).is_subset_of(&m.shift(shift)) {
            return Err(Error::NotContractible(shift));
        }
        let frobenius = self.frobenius() - shift;
        let mut table = vec![false; (frobenius + 2) as usize];
        table[0] = true;
        for x in 1..=frobenius + 1 {
            table[x as usize] = self.contains(x + shift);
        }
        let contracted = NumericalSemigroup::from_membership_table(table);
        debug_assert_eq!(contracted.dilate(shift).as_ref(), Ok(self));
        Ok(contracted)
    }

    /// All positive shifts by which `self` contracts.
    pub fn contraction_candidates(&self) -> Vec<i64> {
        (1..=self.multiplicity())
            .filter(|&a| self.contract(a).is_ok())
            .collect()
    }

    /// The Apéry set of the dilatation T = S + shift with respect to
    /// modulus + shift, assembled from Apéry sets of S alone:
    /// {0, modulus + 2·shift}, the nonzero Apéry elements of the modulus
    /// shifted by the shift, and the nonzero Apéry elements of the shift
    /// moved up by modulus + shift.
    ///
    /// Both the shift and the modulus must be positive members of S; for
    /// a shift outside S the assembled union genuinely differs from the
    /// Apéry set of T (see [`Self::apery_union_formula`]).
    pub fn apery_of_dilatation(&self, shift: i64, modulus: i64) -> Result<Vec<i64>> {
        if shift <= 0 || !self.contains(shift) {
            return Err(Error::ShiftNotInSemigroup(shift));
        }
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if modulus < 0 || !self.contains(modulus) {
            return Err(Error::NotAMember(modulus));
        }
        let union = self.apery_union_formula(shift, modulus);
        debug_assert_eq!(union.len() as i64, modulus + shift);
        Ok(union)
    }

    /// The three-part union behind [`Self::apery_of_dilatation`],
    /// computed without requiring the shift to be a member. Exposed so
    /// that the membership hypothesis can be exhibited as necessary.
    pub fn apery_union_formula(&self, shift: i64, modulus: i64) -> Vec<i64> {
        let mut out = vec![0, modulus + 2 * shift];
        out.extend(
            self.apery_raw(modulus)
                .into_iter()
                .filter(|&x| x != 0)
                .map(|x| x + shift),
        );
        out.extend(
            self.apery_raw(shift)
                .into_iter()
                .filter(|&x| x != 0)
                .map(|x| x + modulus + shift),
        );
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Minimal generators of the dilatation T = S + shift, for a shift
    /// that is a positive member, assembled from Apéry sets of S:
    ///
    /// - e + 2·shift;
    /// - α + shift for nonzero α in Ap(S, e) unless α - shift is a
    ///   member of S other than 0 and the minimal generators;
    /// - β + e + shift for β in Ap(S, shift) (including 0) unless
    ///   β + e - shift is such a member.
    ///
    /// The result has exactly ν + shift elements and equals the minimal
    /// generators of `self.dilate(shift)`.
    pub fn generators_of_dilatation(&self, shift: i64) -> Result<Vec<i64>> {
        if shift <= 0 || !self.contains(shift) {
            return Err(Error::ShiftNotInSemigroup(shift));
        }
        let e = self.multiplicity();
        let excluded = |x: i64| x != 0 && self.contains(x) && !self.is_minimal_generator(x);
        let mut out = vec![e + 2 * shift];
        out.extend(
            self.apery_set(e)?
                .into_iter()
                .filter(|&x| x != 0 && !excluded(x - shift))
                .map(|x| x + shift),
        );
        out.extend(
            self.apery_set(shift)?
                .into_iter()
                .filter(|&x| !excluded(x + e - shift))
                .map(|x| x + e + shift),
        );
        out.sort_unstable();
        out.dedup();
        debug_assert_eq!(out.len() as i64, self.embedding_dimension() + shift);
        Ok(out)
    }

    /// Checks every invariant transfer identity for T = S + shift and
    /// reports the outcomes. With `pass` true the dilatation shifts
    /// F, g, e, t and ν by the shift, fixes n, shifts every Hilbert
    /// value by the shift, and preserves MED, Arf and (one way) Wilf.
    pub fn transfer_report(&self, shift: i64) -> Result<TransferReport> {
        let t = self.dilate(shift)?;
        let si = self.invariants();
        let ti = t.invariants();
        let sp = self.predicates();
        let tp = t.predicates();
        let depth = si.reduction_number + 2;
        let hilbert_shifts =
            (1..=depth).all(|h| t.hilbert_function(h) == self.hilbert_function(h) + shift);
        Ok(TransferReport {
            frobenius_shifts: ti.frobenius == si.frobenius + shift,
            genus_shifts: ti.genus == si.genus + shift,
            multiplicity_shifts: ti.multiplicity == si.multiplicity + shift,
            sporadic_count_fixed: ti.sporadic_count == si.sporadic_count,
            type_shifts: ti.typ == si.typ + shift,
            embedding_dimension_shifts: ti.embedding_dimension == si.embedding_dimension + shift,
            hilbert_shifts,
            med_stable: sp.med == tp.med,
            arf_stable: sp.arf == tp.arf,
            wilf_transferred: !self.wilf_holds() || t.wilf_holds(),
            hilbert_checked_up_to: depth,
        })
    }
}

/// Outcome of every per-shift transfer check between S and S + a.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub frobenius_shifts: bool,
    pub genus_shifts: bool,
    pub multiplicity_shifts: bool,
    pub sporadic_count_fixed: bool,
    pub type_shifts: bool,
    pub embedding_dimension_shifts: bool,
    /// Hilbert values agreed (shifted) for every h from 1 up to
    /// [`Self::hilbert_checked_up_to`]; beyond the reduction number both
    /// sides are constant, so this window is conclusive.
    pub hilbert_shifts: bool,
    pub med_stable: bool,
    pub arf_stable: bool,
    /// Wilf's inequality for S implies it for S + a.
    pub wilf_transferred: bool,
    pub hilbert_checked_up_to: i64,
}

impl TransferReport {
    pub fn pass(&self) -> bool {
        self.frobenius_shifts
            && self.genus_shifts
            && self.multiplicity_shifts
            && self.sporadic_count_fixed
            && self.type_shifts
            && self.embedding_dimension_shifts
            && self.hilbert_shifts
            && self.med_stable
            && self.arf_stable
            && self.wilf_transferred
    }

    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut push = |ok: bool, name: &'static str| {
            if !ok {
                out.push(name);
            }
        };
        push(self.frobenius_shifts, "frobenius");
        push(self.genus_shifts, "genus");
        push(self.multiplicity_shifts, "multiplicity");
        push(self.sporadic_count_fixed, "sporadic_count");
        push(self.type_shifts, "type");
        push(self.embedding_dimension_shifts, "embedding_dimension");
        push(self.hilbert_shifts, "hilbert");
        push(self.med_stable, "med");
        push(self.arf_stable, "arf");
        push(self.wilf_transferred, "wilf");
        out
    }
}

/// The canonical decomposition of a member a of the semigroup generated
/// by coprime 2 <= n < m: the unique (lambda, mu) with
/// a = lambda·n + mu·m, 0 <= mu < n and lambda >= 0.
pub fn two_gen_decomposition(n: i64, m: i64, a: i64) -> Result<(i64, i64)> {
    if n < 2 {
        return Err(Error::BadParameters(
            "the smaller generator must be at least 2",
        ));
    }
    if m <= n {
        return Err(Error::BadParameters(
            "generators must be given in increasing order",
        ));
    }
    if gcd_pair(n, m) != 1 {
        return Err(Error::BadParameters("generators must be coprime"));
    }
    if a < 0 {
        return Err(Error::NotRepresentable(a));
    }
    let mu = (a % n) * mod_inverse(m, n) % n;
    let rest = a - mu * m;
    if rest < 0 {
        return Err(Error::NotRepresentable(a));
    }
    debug_assert_eq!(rest % n, 0);
    Ok((rest / n, mu))
}

fn gcd_pair(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd_pair(b, a % b)
    }
}

/// Inverse of `value` modulo `modulus`, for coprime inputs.
fn mod_inverse(value: i64, modulus: i64) -> i64 {
    let (mut r0, mut r1) = (modulus, value.rem_euclid(modulus));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(modulus)
}

/// Closed form for the Apéry set of the two-generator semigroup ⟨n, m⟩
/// with respect to a positive member a = λn + μm (canonical
/// decomposition): the lattice box x·n + y·m over
/// 0 <= x < λ, 0 <= y < n + μ joined with λ <= x < m, 0 <= y < μ.
/// When λ > m the two boxes enumerate a few values twice (x·n + y·m is
/// only unique up to (x, y) -> (x - m, y + n)); the value set is still
/// exact, with a distinct elements.
pub fn two_gen_apery_closed_form(n: i64, m: i64, a: i64) -> Result<Vec<i64>> {
    if a == 0 {
        return Err(Error::ZeroModulus);
    }
    let (lambda, mu) = two_gen_decomposition(n, m, a)?;
    let mut out = Vec::with_capacity(a as usize);
    for x in 0..lambda {
        for y in 0..n + mu {
            out.push(x * n + y * m);
        }
    }
    for x in lambda..m {
        for y in 0..mu {
            out.push(x * n + y * m);
        }
    }
    out.sort_unstable();
    out.dedup();
    debug_assert_eq!(out.len() as i64, a);
    Ok(out)
}

/// Closed form for the minimal generators of ⟨n, m⟩ + a, for a member
/// a = λn + μm (canonical decomposition). Exactly a + 2 elements.
pub fn two_gen_dilatation_generators(n: i64, m: i64, a: i64) -> Result<Vec<i64>> {
    let (lambda, mu) = two_gen_decomposition(n, m, a)?;
    let mut out = vec![n + 2 * a];
    if lambda == 0 {
        for y in 1..=mu + 1 {
            out.push(y * m + a);
        }
        for x in 1..m {
            for y in 0..mu {
                out.push(x * n + y * m + a);
            }
        }
    } else {
        for y in 1..n {
            out.push(y * m + a);
        }
        for x in 1..lambda {
            for y in 0..n + mu {
                out.push(x * n + y * m + a);
            }
        }
        for y in 0..=mu + 1 {
            out.push(lambda * n + y * m + a);
        }
        for x in lambda + 1..=m {
            for y in 0..mu {
                out.push(x * n + y * m + a);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    debug_assert_eq!(out.len() as i64, a + 2);
    Ok(out)
}
