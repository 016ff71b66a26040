//! Exhaustive verification of every statement over a genus bound.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::check::Check;
use crate::classify::{classify, instances, theorem_checks, Family};
use crate::decomp::{decompose, k_three_checks, k_two_checks, max_type_checks, structure_checks, tower_inequalities, xyz_checks};
use crate::enumerate::{par_fold, Bound};
use crate::ideal::colon_value_set_xr_m;
use crate::report::Profile;
use crate::semigroup::NumericalSemigroup;
use crate::typeseq::{bound_checks, identity_checks, k_checks, k_one_checks, q_range_checks};

pub const THEOREM_IDS: [&str; 19] = [
    "prop1.2", "thm1.4", "prop1.5", "prop1.8", "prop1.9", "prop1.11", "prop1.12", "prop2.1", "thm2.2", "lem2.3",
    "lem2.4", "prop2.5", "thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm3.5", "cor3.7", "cor3.8",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`; known ids: {}", THEOREM_IDS.join(", "))]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TheoremId(&'static str);

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        self.0
    }

    pub fn all() -> impl Iterator<Item = TheoremId> {
        THEOREM_IDS.iter().map(|&t| TheoremId(t))
    }

    fn owns(&self, check: &Check) -> bool {
        check.theorem() == self.0
    }
}

impl std::str::FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_lowercase();
        THEOREM_IDS
            .iter()
            .find(|&&t| t == wanted)
            .map(|&t| TheoremId(t))
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub semigroup: String,
    pub check: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub bound: String,
    pub semigroups_checked: u64,
    /// Individual claims evaluated across all semigroups.
    pub checks_evaluated: u64,
    pub counterexamples: Vec<Counterexample>,
    pub verified: bool,
    /// Milliseconds.
    pub elapsed: u64,
}

/// Every check on `s`, across all statements.
pub fn all_checks(s: &NumericalSemigroup) -> Vec<Check> {
    checks_for(&Profile::new(s.clone()))
}

fn checks_for(p: &Profile) -> Vec<Check> {
    let d = decompose(&p.semigroup);
    let col = colon_value_set_xr_m(&p.semigroup);
    let mut out = identity_checks(p);
    out.extend(k_checks(p));
    out.extend(k_one_checks(p));
    out.extend(bound_checks(p));
    out.extend(q_range_checks(p));
    out.extend(structure_checks(p, &d));
    out.extend(max_type_checks(p, &d, &col));
    out.extend(xyz_checks(p, &d));
    out.extend(tower_inequalities(p, &d, &col));
    out.extend(k_two_checks(p, &d, &col));
    out.extend(k_three_checks(p, &d));
    out.extend(theorem_checks(p));
    out
}

#[derive(Default)]
struct Tally {
    semigroups: u64,
    checks: u64,
    failures: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.semigroups += other.semigroups;
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs the checks belonging to `theorem_id` over every semigroup with genus
/// at most `g_max`. For classification statements the generated instances
/// of each family are also required to lie in the enumeration and to
/// classify back to their family.
pub fn verify(theorem_id: &str, g_max: u32) -> Result<VerificationReport, VerifyError> {
    let id: TheoremId = theorem_id.parse()?;
    Ok(verify_bound(&[id], Bound::Genus(g_max)))
}

/// Several statements in one pass over `bound`.
pub fn verify_bound(ids: &[TheoremId], bound: Bound) -> VerificationReport {
    let start = Instant::now();
    let wanted = |c: &Check| ids.iter().any(|id| id.owns(c));
    let mut tally = par_fold(
        bound,
        Tally::default,
        |t, s| {
            let checks = checks_for(&Profile::new(s.clone()));
            t.semigroups += 1;
            for c in checks.into_iter().filter(|c| wanted(c)) {
                t.checks += 1;
                if !c.passed {
                    t.failures.push(Counterexample {
                        semigroup: s.generators_string(),
                        check: c.name,
                    });
                }
            }
        },
        Tally::merge,
    );
    let families: Vec<Family> = Family::all()
        .into_iter()
        .filter(|f| ids.iter().any(|id| f.theorem() == id.as_str()))
        .collect();
    if !families.is_empty() {
        let (e_max, c_max) = match bound {
            Bound::Genus(g) => (g + 1, 2 * g),
            Bound::Conductor(c) => (c, c),
        };
        let mut seen = HashSet::new();
        crate::enumerate::for_each(bound, |s| {
            seen.insert(s.clone());
        });
        for f in families {
            for inst in instances(f, e_max, c_max) {
                let admitted = match bound {
                    Bound::Genus(g) => inst.genus() <= g,
                    Bound::Conductor(c) => inst.conductor() <= c,
                };
                if !admitted {
                    continue;
                }
                tally.checks += 2;
                let name = |what: &str| format!("{}/generated:{what}:{f}", f.theorem());
                if !seen.contains(&inst) {
                    tally.failures.push(Counterexample {
                        semigroup: inst.generators_string(),
                        check: name("enumerated"),
                    });
                }
                let classified = if f.theorem().starts_with("cor") {
                    crate::classify::classify_b1_b2(&inst).is_some_and(|m| m.family.family == f && m.verified)
                } else {
                    classify(&inst).has(f)
                };
                if !classified {
                    tally.failures.push(Counterexample {
                        semigroup: inst.generators_string(),
                        check: name("classifies-back"),
                    });
                }
            }
        }
    }
    tally.failures.sort();
    let theorem_id = ids.iter().map(|i| i.as_str()).collect::<Vec<_>>().join(",");
    VerificationReport {
        theorem_id,
        bound: bound.to_string(),
        semigroups_checked: tally.semigroups,
        checks_evaluated: tally.checks,
        verified: tally.failures.is_empty(),
        counterexamples: tally.failures,
        elapsed: start.elapsed().as_millis() as u64,
    }
}
