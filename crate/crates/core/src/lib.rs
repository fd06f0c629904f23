//! Exact arithmetic for numerical semigroups and their dilatations.
//!
//! A numerical semigroup is a subset of the nonnegative integers that
//! contains 0, is closed under addition, and misses only finitely many
//! values. This crate represents such sets exactly, computes their
//! standard invariants (Frobenius number, genus, multiplicity, type,
//! embedding dimension, Hilbert function of the maximal ideal), and
//! implements the dilatation construction: for an admissible shift `a`,
//! the dilatation keeps 0 and moves every other element up by `a`.
//!
//! On top of the raw constructions sit:
//!
//! * closed-form transfer rules describing how every invariant of a
//!   dilatation follows from the base semigroup ([`TransferReport`]),
//!   with special-cased formulas for two-generator semigroups;
//! * relative-ideal arithmetic on cofinite integer sets
//!   ([`CofiniteSet`]), used for canonical ideals, trace ideals, and
//!   the classifications built from them — symmetric, almost
//!   symmetric, 2-AGL, and nearly Gorenstein — together with their own
//!   transfer rules ([`ClassificationTransferReport`]);
//! * minimal presentations counted through factorization graphs
//!   ([`PresentationProfile`]), and the gap between the relation count
//!   of a dilatation and its quadratic prediction;
//! * exhaustive verification drivers ([`scan`]) that replay all of the
//!   above against direct computation over every semigroup up to a
//!   genus bound.
//!
//! All values are immutable after construction and the crate keeps no
//! global state, so everything here is safe to share across threads.
//! Arithmetic is exact over `i64`; the intended working range (shifts
//! and Frobenius numbers in the hundreds) is nowhere near overflow.

pub mod classify;
pub mod dilatation;
pub mod enumerate;
mod error;
pub mod ideal;
mod invariants;
pub mod presentation;
pub mod scan;
pub mod semigroup;

pub use classify::ClassificationTransferReport;
pub use dilatation::{
    two_gen_apery_closed_form, two_gen_decomposition, two_gen_dilatation_generators, TransferReport,
};
pub use error::{Error, Result};
pub use ideal::{CanonicalReduction, CofiniteSet};
pub use invariants::{InvariantRecord, Predicates};
pub use presentation::PresentationProfile;
pub use semigroup::NumericalSemigroup;
