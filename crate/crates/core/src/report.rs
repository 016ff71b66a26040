//! The invariant report and the per-semigroup bundle the check suites share.

use serde::Serialize;

use crate::semigroup::NumericalSemigroup;
use crate::typeseq::{k_by_colength, k_by_window, partition_from, type_sequence, AbPartition, TypeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub e: u32,
    pub c: u32,
    pub delta: u32,
    pub n: u32,
    pub r: u32,
    pub b: i64,
    pub k: u32,
    /// Number of indices with `r_i = 1`.
    pub s: u32,
    pub edim: u32,
}

/// Everything the check suites need about one semigroup, computed once.
#[derive(Debug, Clone)]
pub struct Profile {
    pub semigroup: NumericalSemigroup,
    pub small: Vec<u32>,
    pub ts: TypeSequence,
    pub report: InvariantReport,
    pub partition: AbPartition,
}

impl Profile {
    /// Panics if the cross-checked paths for `r`, `b` or `k` disagree; that
    /// is an internal error, not a property of the input.
    pub fn new(s: NumericalSemigroup) -> Self {
        let small = s.small_elements();
        let ts = type_sequence(&s);
        let r = s.type_r();
        assert_eq!(ts.r(), r, "r_1 differs from the pseudo-Frobenius count for {s:?}");
        let (c, delta, n) = (s.conductor(), s.genus(), s.n());
        let b = n as i64 * r as i64 - delta as i64;
        assert_eq!(b, ts.deficiency(), "b disagrees with sum(r - r_i) for {s:?}");
        let k = k_by_window(&s);
        assert_eq!(k, k_by_colength(&s), "k disagrees between its two formulas for {s:?}");
        let report = InvariantReport {
            e: s.multiplicity(),
            c,
            delta,
            n,
            r,
            b,
            k,
            s: ts.ones(),
            edim: s.embedding_dimension(),
        };
        let partition = partition_from(&s, &small, &ts);
        Profile {
            semigroup: s,
            small,
            ts,
            report,
            partition,
        }
    }
}

pub fn invariant_report(s: &NumericalSemigroup) -> InvariantReport {
    Profile::new(s.clone()).report
}
