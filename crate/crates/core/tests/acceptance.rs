//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nsg_core::enumerate::genus_counts;
use nsg_core::verify::verify_bound;
use nsg_core::{
    brute_force_by_genus, classify, decompose, enumerate_by_conductor, enumerate_by_genus, example36_family,
    Bound, Family, NumericalSemigroup, TheoremId, TowerVariant,
};

/// Type sequence straight from the definition: `r_i` counts the new
/// `z ∈ [0, c)` with `z + s ∈ S` for every `s ∈ S` at or above `s_i`.
fn naive_type_sequence(s: &NumericalSemigroup) -> Vec<u32> {
    let c = s.conductor() as i64;
    let small: Vec<i64> = (0..=c).filter(|&z| s.contains(z)).collect();
    let count = |i: usize| {
        (0..c)
            .filter(|&z| small[i..].iter().all(|&x| s.contains(z + x)))
            .count() as u32
    };
    (1..small.len()).map(|i| count(i) - count(i - 1)).collect()
}

fn naive_b(s: &NumericalSemigroup) -> i64 {
    let ts = naive_type_sequence(s);
    ts.iter().map(|&x| (ts[0] - x) as i64).sum()
}

fn value_set(xs: &[u32], c: u32) -> NumericalSemigroup {
    NumericalSemigroup::from_elements_below(xs, c).expect("listed value set is a semigroup")
}

fn skeleton(e: u32, p: u32) -> Vec<u32> {
    (0..=p).map(|j| j * e).collect()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let fast = took < limit;
    outcome(
        out.passed && fast,
        format!("{} [{:.3?}, limit {:?}{}]", out.detail, took, limit, if fast { "" } else { ", TOO SLOW" }),
    )
}

fn tower_fixture() -> Outcome {
    let s = NumericalSemigroup::from_generators(&[10, 11, 26]).unwrap();
    let d = decompose(&s);
    let ok = d.ys == [11, 22, 26, 33, 37, 44, 48]
        && d.ls == [3, 2, 2, 1, 1, 0, 0]
        && (d.c, d.p, d.h, d.k) == (50, 4, 0, 8);
    outcome(ok, format!("ys={:?} ls={:?} c={} p={} h={} k={}", d.ys, d.ls, d.c, d.p, d.h, d.k))
}

/// Expected value sets with their stated type sequences, built from the
/// listed forms.
fn listed(b: u32, c_max: u32) -> Vec<(NumericalSemigroup, Vec<u32>)> {
    let mut out = Vec::new();
    let sporadic: &[(&[u32], u32, &[u32])] = if b == 1 {
        &[(&[0, 4, 7, 8], 11, &[2, 2, 1, 2]), (&[0, 4, 5], 8, &[2, 1, 2])]
    } else {
        &[
            (&[0, 4, 5], 7, &[2, 1, 1]),
            (&[0, 4, 8, 11, 12, 15, 16], 19, &[2, 2, 2, 1, 2, 1, 2]),
            (&[0, 4, 8, 9, 12, 13], 16, &[2, 2, 1, 2, 1, 2]),
            (&[0, 5, 9, 10], 14, &[3, 3, 1, 3]),
            (&[0, 5, 6], 10, &[3, 1, 3]),
            (&[0, 5, 7], 10, &[3, 2, 2]),
            (&[0, 5, 6, 7], 10, &[2, 1, 1, 2]),
            (&[0, 5, 6, 8], 10, &[2, 2, 1, 1]),
            (&[0, 5, 8, 9, 10], 13, &[2, 2, 1, 1, 2]),
        ]
    };
    for &(xs, c, ts) in sporadic {
        if c <= c_max {
            out.push((value_set(xs, c), ts.to_vec()));
        }
    }
    for e in b + 2..=c_max {
        for p in 1.. {
            let c = (p + 1) * e - b;
            if c > c_max {
                break;
            }
            let mut ts = vec![e - 1; p as usize];
            ts.push(e - 1 - b);
            out.push((value_set(&skeleton(e, p), c), ts));
        }
    }
    out
}

fn exhaustion(b: u32, c_max: u32) -> Outcome {
    let found: BTreeSet<NumericalSemigroup> = enumerate_by_conductor(c_max)
        .into_iter()
        .filter(|s| naive_b(s) == b as i64)
        .collect();
    let expected = listed(b, c_max);
    let want: BTreeSet<NumericalSemigroup> = expected.iter().map(|(s, _)| s.clone()).collect();
    let bad_ts: Vec<String> = expected
        .iter()
        .filter(|(s, ts)| naive_type_sequence(s) != *ts)
        .map(|(s, _)| s.value_set_string())
        .collect();
    let extras: Vec<String> = found.difference(&want).map(|s| s.value_set_string()).collect();
    let misses: Vec<String> = want.difference(&found).map(|s| s.value_set_string()).collect();
    outcome(
        extras.is_empty() && misses.is_empty() && bad_ts.is_empty(),
        format!(
            "{} semigroups with b={b}, c<={c_max}; extras {:?}, misses {:?}, wrong t.s. {:?}",
            found.len(),
            extras,
            misses,
            bad_ts
        ),
    )
}

fn identity_suite() -> Outcome {
    let ids: Vec<TheoremId> = TheoremId::all().collect();
    let rep = verify_bound(&ids, Bound::Genus(18));
    outcome(
        rep.verified,
        format!(
            "{} semigroups, {} checks, {} counterexamples {:?}",
            rep.semigroups_checked,
            rep.checks_evaluated,
            rep.counterexamples.len(),
            &rep.counterexamples[..rep.counterexamples.len().min(5)]
        ),
    )
}

fn completeness() -> Outcome {
    let g = 16;
    let mut unclassified = Vec::new();
    let mut in_range = 0u64;
    for s in enumerate_by_genus(g) {
        let b = naive_b(&s);
        let r = naive_type_sequence(&s)[0] as i64;
        if b <= 2 * (r - 1) {
            in_range += 1;
            if !classify(&s).label.is_classified() {
                unclassified.push(s.generators_string());
            }
        }
    }
    let mut unsound = Vec::new();
    let mut generated = 0u64;
    for f in Family::THEOREM_FAMILIES {
        for inst in nsg_core::classify::instances(f, g + 1, 2 * g) {
            if inst.genus() > g {
                continue;
            }
            generated += 1;
            let b = naive_b(&inst);
            let r = naive_type_sequence(&inst)[0] as i64;
            if !classify(&inst).has(f) || b > 2 * (r - 1) {
                unsound.push(format!("{f}: {}", inst.generators_string()));
            }
        }
    }
    let ids: Vec<TheoremId> = ["thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm3.5"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
    let rep = verify_bound(&ids, Bound::Genus(g));
    outcome(
        unclassified.is_empty() && unsound.is_empty() && rep.verified,
        format!(
            "{in_range} in range, {} unclassified; {generated} generated, {} not classifying back; {} theorem counterexamples",
            unclassified.len(),
            unsound.len(),
            rep.counterexamples.len()
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let tree = enumerate_by_genus(8);
    let mut mismatched = Vec::new();
    let mut counts = Vec::new();
    for g in 1..=8 {
        let mut from_tree: Vec<_> = tree.iter().filter(|s| s.genus() == g).cloned().collect();
        from_tree.sort();
        let oracle = brute_force_by_genus(g).unwrap();
        if from_tree != oracle {
            mismatched.push(g);
        }
        counts.push(oracle.len() as u64);
    }
    let tree_counts = genus_counts(8);
    let ok = mismatched.is_empty() && counts == tree_counts && counts == [1, 2, 4, 7, 12, 23, 39, 67];
    outcome(ok, format!("oracle counts {counts:?}, tree counts {tree_counts:?}, mismatched genera {mismatched:?}"))
}

fn tower_family() -> Outcome {
    let (q, e, y) = (3u32, 7u32, 36u32);
    let r_expected = e - 1;
    let exact = example36_family(q, e, y, TowerVariant::Exact);
    let above = example36_family(q, e, y, TowerVariant::Above(49));
    match (exact, above) {
        (Ok(a), Ok(b)) => {
            let ts_a = naive_type_sequence(&a.semigroup);
            let ts_b = naive_type_sequence(&b.semigroup);
            let (ba, bb) = (naive_b(&a.semigroup), naive_b(&b.semigroup));
            let r1 = (r_expected - 1) as i64;
            let q = q as i64;
            let ok = a.semigroup.conductor() == 48
                && ts_a[0] == r_expected
                && ba == 15
                && ba == q * r1
                && ts_b[0] == r_expected
                && (q - 1) * r1 < bb
                && bb < q * r1;
            outcome(ok, format!("c=48: r={} b={ba}; c=49: r={} b={bb}", ts_a[0], ts_b[0]))
        }
        (a, b) => outcome(false, format!("construction failed: {:?} / {:?}", a.err(), b.err())),
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("1 tower decomposition of <10,11,26>", Box::new(|| timed(Duration::from_millis(100), tower_fixture))),
        ("2 b=1 exhaustion, c<=16", Box::new(|| timed(secs(5), || exhaustion(1, 16)))),
        ("3 b=2 exhaustion, c<=20", Box::new(|| timed(secs(10), || exhaustion(2, 20)))),
        ("4 identity suite, genus<=18", Box::new(|| timed(secs(60), identity_suite))),
        ("5 classification completeness, genus<=16", Box::new(|| timed(secs(60), completeness))),
        ("6 tree vs subset oracle, genus<=8", Box::new(oracle_equivalence)),
        ("7 tower family q=3 e=7 y=36", Box::new(tower_family)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let out = run();
        if !out.passed {
            failed += 1;
        }
        println!("{} criterion {name}: {}", if out.passed { "PASS" } else { "FAIL" }, out.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
