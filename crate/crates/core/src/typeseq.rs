//! Type sequences, the invariants `b` and `k`, and the A/B index partition.

use serde::Serialize;

use crate::check::{Check, Checks};
use crate::ideal::{dual, ideal_of_chain, RelativeIdeal};
use crate::report::Profile;
use crate::semigroup::NumericalSemigroup;

/// `[r_1, ..., r_n]` where `r_i = |(S - S_i) \ (S - S_{i-1})|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TypeSequence(Vec<u32>);

impl TypeSequence {
    pub fn new(entries: Vec<u32>) -> Self {
        TypeSequence(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r_1`, the type.
    pub fn r(&self) -> u32 {
        self.0[0]
    }

    pub fn last(&self) -> u32 {
        *self.0.last().unwrap()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `sum (r - r_i)`.
    pub fn deficiency(&self) -> i64 {
        let r = self.r() as i64;
        self.0.iter().map(|&x| r - x as i64).sum()
    }

    /// Number of entries equal to 1.
    pub fn ones(&self) -> u32 {
        self.0.iter().filter(|&&x| x == 1).count() as u32
    }

    /// Dash-separated form used in CSV output.
    pub fn dashed(&self) -> String {
        crate::semigroup::join(&self.0, "-")
    }
}

/// The index split of Notation 1.3: `B = [i0, n]`, `A = [1, i0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbPartition {
    /// 1-based.
    pub i0: usize,
    pub n: usize,
    pub sum_a: i64,
    pub sum_b: u32,
}

impl AbPartition {
    pub fn b_len(&self) -> usize {
        self.n + 1 - self.i0
    }

    pub fn in_b(&self, i: usize) -> bool {
        i >= self.i0
    }
}

/// Duals `S - S_i` for `i = 0..=n`.
pub(crate) fn chain_duals(s: &NumericalSemigroup) -> Vec<RelativeIdeal> {
    let whole = RelativeIdeal::whole(s);
    let n = s.n() as usize;
    (0..=n)
        .map(|i| dual(&whole, &ideal_of_chain(s, i).expect("index in range")))
        .collect()
}

pub fn type_sequence(s: &NumericalSemigroup) -> TypeSequence {
    let c = s.conductor() as i64;
    let counts: Vec<usize> = chain_duals(s).iter().map(|d| d.count_in(0, c)).collect();
    TypeSequence(counts.windows(2).map(|w| (w[1] - w[0]) as u32).collect())
}

/// `b = (c - δ) r - δ`.
pub fn b_by_definition(s: &NumericalSemigroup) -> i64 {
    let n = s.n() as i64;
    let delta = s.genus() as i64;
    n * s.type_r() as i64 - delta
}

/// `b`, computed by the definition and by `sum (r - r_i)`; the two must agree.
pub fn b_invariant(s: &NumericalSemigroup) -> i64 {
    let by_def = b_by_definition(s);
    let by_ts = type_sequence(s).deficiency();
    assert_eq!(by_def, by_ts, "b disagrees between definition and type sequence for {s:?}");
    by_def
}

/// `|{s ∈ S : c - e <= s < c}|`.
pub fn k_by_window(s: &NumericalSemigroup) -> u32 {
    let (c, e) = (s.conductor(), s.multiplicity());
    s.members().count_range(c.saturating_sub(e) as usize, c as usize) as u32
}

/// `|{s ∈ S : s < c, s - e ∉ S}|`, i.e. `|S \ (C + xR)|` on values.
pub fn k_by_colength(s: &NumericalSemigroup) -> u32 {
    let e = s.multiplicity() as i64;
    s.members()
        .iter_ones()
        .filter(|&z| !s.contains(z as i64 - e))
        .count() as u32
}

pub fn k_invariant(s: &NumericalSemigroup) -> u32 {
    let k = k_by_window(s);
    assert_eq!(k, k_by_colength(s), "k disagrees between its two formulas for {s:?}");
    k
}

pub fn ab_partition(s: &NumericalSemigroup) -> AbPartition {
    partition_from(s, &s.small_elements(), &type_sequence(s))
}

pub(crate) fn partition_from(s: &NumericalSemigroup, small: &[u32], ts: &TypeSequence) -> AbPartition {
    let (c, e) = (s.conductor(), s.multiplicity());
    let n = small.len() - 1;
    let j = small
        .iter()
        .position(|&y| y + e >= c)
        .expect("c itself qualifies");
    let i0 = j + 1;
    let r = ts.r() as i64;
    let sum_a = ts.entries()[..i0 - 1].iter().map(|&x| r - x as i64).sum();
    let sum_b = ts.entries()[i0 - 1..].iter().sum();
    AbPartition { i0, n, sum_a, sum_b }
}

/// Every numbered claim of the `b` bound propositions (items 1-5 on the A/B
/// split, and the `q`-range items), evaluated on `s`.
pub fn inequality_suite(s: &NumericalSemigroup) -> Vec<Check> {
    let p = Profile::new(s.clone());
    let mut out = bound_checks(&p);
    out.extend(q_range_checks(&p));
    out
}

pub(crate) fn bound_checks(p: &Profile) -> Vec<Check> {
    let rep = &p.report;
    let (e, r, k, b) = (rep.e as i64, rep.r as i64, rep.k as i64, rep.b);
    let part = &p.partition;
    let (sum_a, sum_b) = (part.sum_a, part.sum_b as i64);
    let ts = p.ts.entries();
    let mut ck = Checks::default();

    ck.claim("prop2.1/1:lower", (e - r - 1) * (r - 1) <= r * k - e + 1);
    ck.claim("prop2.1/1:middle", r * k - e + 1 <= b - sum_a);
    ck.claim("prop2.1/1:upper", b - sum_a <= k * (r - 1));

    ck.iff(
        "prop2.1/2",
        b == (k - 1) * (r - 1) + sum_a,
        sum_b == e - 1 && k == e - r,
    );
    let b_all_ones = (part.i0..=part.n).all(|i| ts[i - 1] == 1);
    ck.iff("prop2.1/3", b == k * (r - 1) + sum_a, b_all_ones);

    let a4 = b == (e - r - 1) * (r - 1);
    let b4 = b == (k - 1) * (r - 1);
    let c4 = e - r == k && sum_b == e - 1 && (1..part.i0).all(|i| ts[i - 1] as i64 == r);
    ck.imp("prop2.1/4:a=>b", a4, b4);
    ck.imp("prop2.1/4:b=>c", b4, c4);
    ck.imp("prop2.1/4:c=>a", c4, a4);
    let s_before = p.small[part.i0 - 1] as i64;
    ck.imp("prop2.1/4:conductor", a4, s_before == rep.c as i64 - e);

    ck.claim("prop2.1/5", b >= (r - 1) * rep.s as i64);
    ck.into_vec()
}

pub(crate) fn q_range_checks(p: &Profile) -> Vec<Check> {
    let rep = &p.report;
    let (e, r, k, b, n) = (rep.e as i64, rep.r as i64, rep.k as i64, rep.b, rep.n as i64);
    let mut ck = Checks::default();
    // q is only defined for r > 1 and b > 0.
    if r <= 1 || b <= 0 {
        return ck.into_vec();
    }
    let part = &p.partition;
    let ts = p.ts.entries();
    let (sum_a, sum_b) = (part.sum_a, part.sum_b as i64);
    let equal_conditions =
        e - r == k && sum_b == e - 1 && (1..part.i0).all(|i| ts[i - 1] as i64 == r);

    let q0 = (b + r - 2) / (r - 1);
    // Item 1 holds for every q with b <= q(r - 1).
    for q in q0..=q0.max(e) {
        ck.claim("prop2.5/1", r >= e - q - 1);
        ck.imp(
            "prop2.5/1a",
            r == e - 1 - q,
            b == q * (r - 1) && q <= e - 3 && equal_conditions,
        );
        ck.imp("prop2.5/1b", r >= e - q, e - r <= k && k <= q);
    }
    let q = q0;
    ck.claim("prop2.5/2c", k - 1 <= q && q <= n - 1);
    ck.claim("prop2.5/2d:lower", (q - k - 1) * (r - 1) < sum_a);
    ck.claim("prop2.5/2d:upper", sum_a <= (q - k) * (r - 1) + e - 1 - k);
    ck.into_vec()
}

/// Type-sequence bullets and `b = sum (r - r_i)` with its bounds.
pub(crate) fn identity_checks(p: &Profile) -> Vec<Check> {
    let rep = &p.report;
    let ts = p.ts.entries();
    let (r, c, delta, n) = (rep.r as i64, rep.c as i64, rep.delta as i64, rep.n as i64);
    let mut ck = Checks::default();
    ck.claim("prop1.2/length", ts.len() as i64 == n);
    ck.claim("prop1.2/r1", ts[0] as i64 == r);
    ck.claim("prop1.2/entry-bounds", ts.iter().all(|&x| x >= 1 && x as i64 <= r));
    ck.claim("prop1.2/sum", p.ts.sum() as i64 == delta);
    ck.claim(
        "prop1.2/excess",
        ts.iter().map(|&x| x as i64 - 1).sum::<i64>() == 2 * delta - c,
    );
    ck.claim("prop1.2/1", b_by_definition(&p.semigroup) == p.ts.deficiency());
    ck.claim("prop1.2/2", 0 <= rep.b && rep.b <= (n - 1) * (r - 1));
    ck.into_vec()
}

/// Bounds on `k` and the B-sum, plus the dual-window property behind them.
pub(crate) fn k_checks(p: &Profile) -> Vec<Check> {
    let s = &p.semigroup;
    let rep = &p.report;
    let (e, r, k, c) = (rep.e as i64, rep.r as i64, rep.k as i64, rep.c as i64);
    let part = &p.partition;
    let sum_b = part.sum_b as i64;
    let mut ck = Checks::default();
    ck.claim("thm1.4/k-two-ways", k_by_window(s) == k_by_colength(s));
    ck.claim("thm1.4/1:k=|B|", part.b_len() as i64 == k);
    ck.claim("thm1.4/1:k>=e-r>0", k >= e - r && e - r > 0);
    ck.claim("thm1.4/2:k<=sumB<=e-1", k <= sum_b && sum_b <= e - 1);
    ck.imp(
        "thm1.4/2:sumB=e-1",
        sum_b == e - 1,
        p.small[part.i0 - 1] as i64 == c - e,
    );
    // Reflecting the non-members of S - S_{i0-1} through the Frobenius
    // number lands in [c - e, c - 2], and there are sumB of them.
    let d = dual(
        &RelativeIdeal::whole(s),
        &ideal_of_chain(s, part.i0 - 1).expect("index in range"),
    );
    let reflected: Vec<i64> = (0..c).filter(|&z| !d.contains(z)).map(|z| c - 1 - z).collect();
    ck.claim(
        "thm1.4/window",
        reflected.iter().all(|&w| c - e <= w && w <= c - 2),
    );
    ck.claim("thm1.4/window-count", reflected.len() as i64 == sum_b);
    ck.into_vec()
}

/// The `k = 1` characterization.
pub(crate) fn k_one_checks(p: &Profile) -> Vec<Check> {
    let rep = &p.report;
    let (e, c) = (rep.e as i64, rep.c as i64);
    let ts = p.ts.entries();
    let below: Vec<u32> = p.small[..p.small.len() - 1].to_vec();
    let skeleton_only = below.iter().all(|&z| z as i64 % e == 0);
    let ts_form = ts[..ts.len() - 1].iter().all(|&x| x as i64 == e - 1);
    let k1 = rep.k == 1;
    let mut ck = Checks::default();
    ck.imp("prop1.5/1=>2", k1, skeleton_only);
    ck.imp("prop1.5/2=>3", skeleton_only, ts_form);
    ck.imp("prop1.5/3=>1", ts_form, k1);
    if k1 {
        let pp = (c - 1) / e;
        let (b, r, delta) = (rep.b, rep.r as i64, rep.delta as i64);
        ck.claim("prop1.5/delta", delta == c - pp - 1);
        ck.claim("prop1.5/b", b == (pp + 1) * e - c && b <= r - 1);
        ck.claim("prop1.5/r", r == e - 1);
        ck.claim("prop1.5/rn", p.ts.last() as i64 == e - 1 - b);
    }
    ck.into_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn type_sequences() {
        assert_eq!(type_sequence(&sg(&[4, 7, 13])).entries(), &[2, 2, 1, 2]);
        assert_eq!(type_sequence(&sg(&[4, 5])).entries(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(type_sequence(&sg(&[3, 5, 7])).entries(), &[2, 1]);
    }

    #[test]
    fn b_values() {
        assert_eq!(b_invariant(&sg(&[4, 5])), 0);
        assert_eq!(b_invariant(&sg(&[4, 7, 13])), 1);
        assert_eq!(b_invariant(&sg(&[5, 12, 16, 18, 19])), 5);
    }

    #[test]
    fn k_values() {
        assert_eq!(k_invariant(&sg(&[3, 5, 7])), 1);
        assert_eq!(k_invariant(&sg(&[4, 7, 13])), 2);
        assert_eq!(k_invariant(&sg(&[10, 11, 26])), 8);
    }

    #[test]
    fn partitions() {
        let p = ab_partition(&sg(&[3, 5, 7]));
        assert_eq!((p.i0, p.n, p.sum_b), (2, 2, 1));
        let p = ab_partition(&sg(&[4, 7, 13]));
        assert_eq!((p.i0, p.n, p.sum_b, p.sum_a), (3, 4, 3, 0));
        let p = ab_partition(&sg(&[4, 5]));
        assert_eq!((p.i0, p.n, p.sum_b), (4, 6, 3));
    }

    #[test]
    fn inequality_suite_passes_on_fixtures() {
        for g in [[4u32, 7, 13].as_slice(), &[4, 5], &[10, 11, 26], &[3, 5, 7], &[5, 12, 16, 18, 19]] {
            let failed: Vec<_> = inequality_suite(&sg(g)).into_iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{g:?}: {failed:?}");
        }
        // r = 1 skips the q-range items entirely.
        assert!(inequality_suite(&sg(&[4, 5])).iter().all(|c| !c.name.starts_with("prop2.5")));
    }
}
