//! Exhaustive verification drivers over the genus tree.
//!
//! Each driver walks every numerical semigroup up to a genus bound,
//! forms every admissible dilatation up to a shift bound, checks a
//! family of identities, and reports the pairs that failed. A clean
//! report means the identities held on the whole family.

use crate::enumerate::enumerate_by_genus;
use crate::error::Result;
use crate::semigroup::NumericalSemigroup;
use crate::two_gen_apery_closed_form;
use crate::two_gen_dilatation_generators;

/// One failed check, keyed by the semigroup literal and the shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub semigroup: String,
    pub shift: Option<i64>,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.shift {
            Some(a) => write!(f, "gens={} a={}: {}", self.semigroup, a, self.detail),
            None => write!(f, "gens={}: {}", self.semigroup, self.detail),
        }
    }
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    /// Semigroups visited.
    pub semigroups: usize,
    /// (semigroup, shift) pairs checked.
    pub pairs: usize,
    pub violations: Vec<Violation>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, s: &NumericalSemigroup, shift: Option<i64>, detail: String) {
        self.violations.push(Violation {
            semigroup: s.to_string(),
            shift,
            detail,
        });
    }
}

/// Nonnegative shifts up to `max_shift` admissible for `s`.
fn admissible_shifts(s: &NumericalSemigroup, max_shift: i64) -> Vec<i64> {
    let domain = s.dilatation_domain();
    (0..=max_shift).filter(|&a| domain.contains(a)).collect()
}

/// Sweeps the invariant transfer identities: for every semigroup of
/// genus <= `max_genus` and every admissible shift <= `max_shift`, the
/// full transfer report must pass; for shifts that are members, the
/// Apéry and generator closed forms must match the direct computations
/// on the dilatation (moduli run over the positive members up to F + e).
pub fn verify_invariant_transfers(max_genus: i64, max_shift: i64) -> ScanReport {
    let mut report = ScanReport::default();
    for s in enumerate_by_genus(max_genus).iter().flatten() {
        report.semigroups += 1;
        for a in admissible_shifts(s, max_shift) {
            report.pairs += 1;
            match s.transfer_report(a) {
                Ok(tr) if tr.pass() => {}
                Ok(tr) => {
                    report.record(s, Some(a), format!("transfer failed: {:?}", tr.failures()))
                }
                Err(e) => report.record(s, Some(a), format!("transfer errored: {e}")),
            }
            if a >= 1 && s.contains(a) {
                if let Err(detail) = check_closed_forms(s, a) {
                    report.record(s, Some(a), detail);
                }
            }
        }
    }
    report
}

/// Closed-form Apéry sets and generators against direct computation on
/// the dilatation. Returns a description of the first mismatch.
fn check_closed_forms(s: &NumericalSemigroup, a: i64) -> std::result::Result<(), String> {
    let t = s.dilate(a).map_err(|e| format!("dilate errored: {e}"))?;
    let closed = s.generators_of_dilatation(a).map_err(|e| e.to_string())?;
    if closed != t.minimal_generators() {
        return Err(format!(
            "generator closed form {closed:?} != {:?}",
            t.minimal_generators()
        ));
    }
    let bound = s.frobenius() + s.multiplicity();
    for modulus in s.members_up_to(bound).filter(|&m| m >= 1) {
        let assembled = s
            .apery_of_dilatation(a, modulus)
            .map_err(|e| e.to_string())?;
        let direct = t.apery_set(modulus + a).map_err(|e| e.to_string())?;
        if assembled != direct {
            return Err(format!("apery closed form differs at modulus {modulus}"));
        }
    }
    Ok(())
}

/// Sweeps the two-generator closed forms: for every coprime pair
/// 2 <= n < m <= `max_value` and every member a <= 2nm, the lattice-box
/// Apéry set and generator list must match the direct computations.
pub fn verify_two_generator_forms(max_value: i64) -> ScanReport {
    let mut report = ScanReport::default();
    for n in 2..=max_value {
        for m in n + 1..=max_value {
            if gcd(n, m) != 1 {
                continue;
            }
            report.semigroups += 1;
            let s = NumericalSemigroup::from_generators(&[n, m]).expect("coprime pair");
            for a in s.members_up_to(2 * n * m).filter(|&a| a >= 1) {
                report.pairs += 1;
                if let Err(detail) = check_two_gen_forms(&s, n, m, a) {
                    report.record(&s, Some(a), detail);
                }
            }
        }
    }
    report
}

fn check_two_gen_forms(
    s: &NumericalSemigroup,
    n: i64,
    m: i64,
    a: i64,
) -> std::result::Result<(), String> {
    let apery = two_gen_apery_closed_form(n, m, a).map_err(|e| e.to_string())?;
    if apery != s.apery_set(a).map_err(|e| e.to_string())? {
        return Err("two-generator Apéry closed form differs".into());
    }
    let gens = two_gen_dilatation_generators(n, m, a).map_err(|e| e.to_string())?;
    if gens != s.generators_of_dilatation(a).map_err(|e| e.to_string())? {
        return Err("two-generator closed form differs from the assembled generators".into());
    }
    if gens != s.dilate(a).map_err(|e| e.to_string())?.minimal_generators() {
        return Err("two-generator closed form differs from the dilatation generators".into());
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Sweeps the canonical-ideal identities: for every semigroup of genus
/// <= `max_genus` and every admissible shift <= `max_shift`, the full
/// classification transfer report must pass.
pub fn verify_classification_transfers(max_genus: i64, max_shift: i64) -> ScanReport {
    let mut report = ScanReport::default();
    for s in enumerate_by_genus(max_genus).iter().flatten() {
        report.semigroups += 1;
        for a in admissible_shifts(s, max_shift) {
            report.pairs += 1;
            match s.classification_transfer_report(a) {
                Ok(cr) if cr.pass() => {}
                Ok(cr) => report.record(
                    s,
                    Some(a),
                    format!("classification failed: {:?}", cr.failures()),
                ),
                Err(e) => report.record(s, Some(a), format!("classification errored: {e}")),
            }
        }
    }
    report
}

/// Sweeps per-semigroup classification coherence: the almost-symmetry
/// routes agree, symmetric implies almost symmetric implies nearly
/// Gorenstein, 2-AGL and nearly Gorenstein exclude each other, and
/// Wilf's inequality holds.
pub fn verify_classification_coherence(max_genus: i64) -> ScanReport {
    let mut report = ScanReport::default();
    for s in enumerate_by_genus(max_genus).iter().flatten() {
        report.semigroups += 1;
        report.pairs += 1;
        let routes = s.almost_symmetric_routes();
        if !(routes[0] == routes[1] && routes[1] == routes[2]) {
            report.record(
                s,
                None,
                format!("almost-symmetry routes disagree: {routes:?}"),
            );
            continue;
        }
        let almost = s.is_almost_symmetric();
        let nearly = s.is_nearly_gorenstein();
        let two_agl = s.is_two_agl();
        if s.predicates().symmetric && !almost {
            report.record(s, None, "symmetric but not almost symmetric".into());
        }
        if almost && !nearly {
            report.record(s, None, "almost symmetric but not nearly Gorenstein".into());
        }
        if two_agl && nearly {
            report.record(s, None, "2-AGL and nearly Gorenstein simultaneously".into());
        }
        if !s.wilf_holds() {
            report.record(s, None, "Wilf inequality fails".into());
        }
    }
    report
}

/// One relation-count comparison for a (semigroup, shift) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGapRecord {
    pub generators: Vec<i64>,
    pub shift: i64,
    pub mu_base: i64,
    pub mu_dilated: i64,
    pub gap: i64,
}

impl RelationGapRecord {
    /// The stable log rendering:
    /// `gens=<csv> a=<int> mu_S=<int> mu_T=<int> gap=<int>`.
    pub fn log_line(&self) -> String {
        let gens = self
            .generators
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "gens={} a={} mu_S={} mu_T={} gap={}",
            gens, self.shift, self.mu_base, self.mu_dilated, self.gap
        )
    }
}

/// Relation counts of every admissible dilatation against the quadratic
/// prediction, over the whole family: one record per (semigroup, shift)
/// pair, in enumeration order.
pub fn scan_relation_count_gaps(max_genus: i64, max_shift: i64) -> Result<Vec<RelationGapRecord>> {
    let mut records = Vec::new();
    for s in enumerate_by_genus(max_genus).iter().flatten() {
        let mu_base = s.presentation_profile().mu;
        for a in admissible_shifts(s, max_shift) {
            let gap = s.relation_count_gap(a, false)?;
            let predicted = mu_base + a * s.embedding_dimension() + a * (a - 1) / 2;
            records.push(RelationGapRecord {
                generators: s.minimal_generators().to_vec(),
                shift: a,
                mu_base,
                mu_dilated: predicted + gap,
                gap,
            });
        }
    }
    Ok(records)
}
