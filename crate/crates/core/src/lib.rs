//! Numerical semigroups, their type sequences, and the structure of the
//! invariant `b = (c - δ) r - δ`.

pub mod bitset;
pub mod check;
pub mod classify;
pub mod decomp;
pub mod enumerate;
pub mod ideal;
pub mod report;
pub mod semigroup;
pub mod typeseq;
pub mod verify;

pub use check::Check;
pub use decomp::{case_formulas, conductor_identity, decompose, reconstruct, xyz_split, DecompError, Decomposition, XyzSplit};
pub use ideal::{colon_value_set_xr_m, dual, ideal_of_chain, length_between, IdealError, RelativeIdeal};
pub use report::{invariant_report, InvariantReport, Profile};
pub use semigroup::{NumericalSemigroup, ParseSemigroupError, SemigroupError};
pub use typeseq::{
    ab_partition, b_invariant, inequality_suite, k_invariant, type_sequence, AbPartition, TypeSequence,
};
pub use classify::{
    classification_suite, classify, classify_b1_b2, example36_family, generate_family, Classification,
    ClassificationLabel, ClassifyError, CorollaryMatch, Family, FamilyMatch, TowerExample, TowerVariant,
};
pub use enumerate::{brute_force_by_genus, enumerate_by_conductor, enumerate_by_genus, Bound, EnumError};
pub use verify::{all_checks, verify, Counterexample, TheoremId, VerificationReport, VerifyError};
