//! Decomposition of a semigroup into the arithmetic skeleton
//! `{0, e, ..., pe, c->}` plus towers `H_i = {y_i, y_i + e, ..., y_i + l_i e}`,
//! and the `X + Y + Z` split of `b`.
//!
//! Below the conductor every residue class mod `e` that meets `S` does so in
//! an arithmetic progression of step `e` that starts at the class's least
//! element and stops just below `c`. Class 0 gives the skeleton; each other
//! class that has an element below `c` gives one tower. Since every tower top
//! lies in `[c - e, c)`, there are exactly `k - 1` towers.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::check::{Check, Checks};
use crate::ideal::{colon_value_set_xr_m, RelativeIdeal};
use crate::report::Profile;
use crate::semigroup::{join, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub e: u32,
    pub c: u32,
    pub p: u32,
    pub h: u32,
    pub k: u32,
    pub ys: Vec<u32>,
    pub ls: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XyzSplit {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl XyzSplit {
    pub fn total(&self) -> i64 {
        self.x + self.y + self.z
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("not additively closed: {0} + {1} = {2} is missing")]
    NotASemigroup(u32, u32, u32),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
}

impl Decomposition {
    pub fn tower(&self, i: usize) -> Vec<u32> {
        (0..=self.ls[i]).map(|j| self.ys[i] + j * self.e).collect()
    }

    pub fn skeleton(&self) -> Vec<u32> {
        (0..=self.p).map(|j| j * self.e).collect()
    }

    /// `sum l_i`.
    pub fn l_sum(&self) -> u32 {
        self.ls.iter().sum()
    }

    /// `sum (l_i + 1)`.
    pub fn tower_sizes(&self) -> u32 {
        self.l_sum() + self.ls.len() as u32
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut skel = self.skeleton();
        skel.push(self.c);
        write!(f, "S = {{{}->}}", join(&skel, ","))?;
        match self.ys.len() {
            0 => {}
            1 => write!(f, " ∪ H_1")?,
            t => write!(f, " ∪ H_1 ∪ ... ∪ H_{t}")?,
        }
        writeln!(f)?;
        for i in 0..self.ys.len() {
            writeln!(f, "H_{} = {{{}}}", i + 1, join(&self.tower(i), ","))?;
        }
        write!(f, "c = {}, p = {}, h = {}, k = {}", self.c, self.p, self.h, self.k)
    }
}

pub fn decompose(s: &NumericalSemigroup) -> Decomposition {
    let (e, c) = (s.multiplicity(), s.conductor());
    let p = (c - 1) / e;
    let h = (p + 1) * e - c;
    // least element of each nonzero residue class below c
    let mut least: Vec<Option<u32>> = vec![None; e as usize];
    for z in s.members().iter_ones() {
        let slot = &mut least[z % e as usize];
        if slot.is_none() {
            *slot = Some(z as u32);
        }
    }
    let mut ys: Vec<u32> = least[1..].iter().flatten().copied().collect();
    ys.sort_unstable();
    let ls: Vec<u32> = ys.iter().map(|&y| (c - 1 - y) / e).collect();
    Decomposition {
        e,
        c,
        p,
        h,
        k: ys.len() as u32 + 1,
        ys,
        ls,
    }
}

/// Inverse of [`decompose`].
pub fn reconstruct(d: &Decomposition) -> Result<NumericalSemigroup, DecompError> {
    let invalid = |m: String| DecompError::InvalidDecomposition(m);
    if d.e < 2 || d.ys.len() != d.ls.len() || d.k as usize != d.ys.len() + 1 {
        return Err(invalid("shape mismatch between e, k, ys and ls".into()));
    }
    if (d.p + 1) * d.e < d.c + d.h || (d.p + 1) * d.e - d.h != d.c {
        return Err(invalid(format!("c = {} is not (p + 1)e - h", d.c)));
    }
    let mut elems = d.skeleton();
    for i in 0..d.ys.len() {
        elems.extend(d.tower(i));
    }
    elems.sort_unstable();
    elems.dedup();
    if let Some(&big) = elems.iter().find(|&&z| z >= d.c) {
        return Err(invalid(format!("{big} is not below the conductor")));
    }
    let member = |z: u32| z >= d.c || elems.binary_search(&z).is_ok();
    for (i, &a) in elems.iter().enumerate().skip(1) {
        for &b in &elems[i..] {
            if !member(a + b) {
                return Err(DecompError::NotASemigroup(a, b, a + b));
            }
        }
    }
    let s = NumericalSemigroup::from_elements_below(&elems, d.c)
        .map_err(|err| invalid(err.to_string()))?;
    if &decompose(&s) != d {
        return Err(invalid("fields do not satisfy the decomposition invariants".into()));
    }
    Ok(s)
}

pub fn xyz_split(s: &NumericalSemigroup) -> XyzSplit {
    let p = Profile::new(s.clone());
    split_from(&p, &decompose(s))
}

pub(crate) fn split_from(p: &Profile, d: &Decomposition) -> XyzSplit {
    let rep = &p.report;
    let (e, r, k) = (rep.e as i64, rep.r as i64, rep.k as i64);
    let (pp, h, lsum) = (d.p as i64, d.h as i64, d.l_sum() as i64);
    XyzSplit {
        x: (k - 1) * (r - 1),
        y: k - (e - r),
        z: (r + 1) * (pp + lsum) + k + h - pp * e - 1,
    }
}

/// `c = (p + 1 + sum (l_i + 1))(r + 1) - b`.
pub fn conductor_identity(s: &NumericalSemigroup) -> bool {
    let p = Profile::new(s.clone());
    conductor_identity_from(&p, &decompose(s))
}

fn conductor_identity_from(p: &Profile, d: &Decomposition) -> bool {
    let rep = &p.report;
    let lhs = rep.c as i64;
    let rhs = (d.p as i64 + 1 + d.tower_sizes() as i64) * (rep.r as i64 + 1) - rep.b;
    lhs == rhs
}

/// Per-case formulas for `k = 2` and `k = 3` and the `y_i` inequalities for
/// `k > 1`. Inapplicable cases contribute no checks.
pub fn case_formulas(s: &NumericalSemigroup) -> Vec<Check> {
    let p = Profile::new(s.clone());
    let d = decompose(s);
    let col = colon_value_set_xr_m(s);
    let mut out = tower_inequalities(&p, &d, &col);
    out.extend(k_two_checks(&p, &d, &col));
    out.extend(k_three_checks(&p, &d));
    out
}

/// Decomposition invariants, the round trip, and the relations between
/// `n`, `δ`, `p`, `h` and the tower lengths.
pub(crate) fn structure_checks(p: &Profile, d: &Decomposition) -> Vec<Check> {
    let s = &p.semigroup;
    let rep = &p.report;
    let (e, c) = (d.e, d.c);
    let mut ck = Checks::default();
    ck.claim("prop1.8/skeleton", c - e <= d.p * e && d.p * e < c && d.h == (d.p + 1) * e - c);
    ck.claim("prop1.8/h-range", d.h <= e - 2);
    ck.claim("prop1.8/k", d.k == rep.k);
    ck.claim("prop1.8/ys-off-multiples", d.ys.iter().all(|y| y % e != 0));
    let mut residues: Vec<u32> = d.ys.iter().map(|y| y % e).collect();
    residues.sort_unstable();
    residues.dedup();
    ck.claim("prop1.8/ys-distinct-residues", residues.len() == d.ys.len());
    ck.claim(
        "prop1.8/ys-increasing",
        d.ys.first().is_none_or(|&y| y > e) && d.ys.windows(2).all(|w| w[0] < w[1]),
    );
    ck.claim(
        "prop1.8/tower-tops",
        d.ys.iter()
            .zip(&d.ls)
            .all(|(&y, &l)| y + l * e < c && c <= y + (l + 1) * e),
    );
    let mut union = d.skeleton();
    for i in 0..d.ys.len() {
        union.extend(d.tower(i));
    }
    let count = union.len();
    union.sort_unstable();
    union.dedup();
    union.push(c);
    ck.claim("prop1.8/disjoint-union", count + 1 == union.len() && union == p.small);
    ck.claim("prop1.8/round-trip", reconstruct(d).as_ref() == Ok(s));

    if d.k > 1 {
        let (e, r, k) = (e as i64, rep.r as i64, d.k as i64);
        ck.claim("prop1.8/1", e - k <= r && r <= e - 1);
        ck.claim(
            "prop1.8/2",
            d.ls.windows(2).all(|w| w[1] <= w[0]) && d.ls[0] + 1 <= d.p,
        );
        ck.claim("prop1.8/3:n", rep.n == d.p + d.k + d.l_sum());
        ck.claim(
            "prop1.8/3:delta",
            rep.delta as i64 == (d.p as i64 + 1) * (e - 1) - d.h as i64 - d.tower_sizes() as i64,
        );
    }
    ck.into_vec()
}

/// The maximal-type characterization on the monomial ring.
pub(crate) fn max_type_checks(p: &Profile, d: &Decomposition, col: &RelativeIdeal) -> Vec<Check> {
    let s = &p.semigroup;
    let rep = &p.report;
    let (e, c) = (rep.e as i64, rep.c as i64);
    let max_type = rep.r == rep.e - 1;
    let outside: Vec<i64> = s
        .members()
        .iter_ones()
        .map(|z| z as i64)
        .filter(|&z| !col.contains(z))
        .collect();
    let mut ck = Checks::default();
    ck.claim("prop1.9/conductor-inside", col.stabilization() <= c);
    ck.claim(
        "prop1.9/shift-inside",
        s.members().iter_ones().all(|z| col.contains(z as i64 + e)),
    );
    ck.claim("prop1.9/colength", outside.len() as i64 == e - rep.r as i64);
    ck.iff("prop1.9/1-2", max_type, outside == [0]);
    ck.iff(
        "prop1.9/1-3",
        max_type,
        d.ys.iter().all(|&y| col.contains(y as i64)),
    );
    ck.iff("prop1.9/1-6", max_type, rep.edim == rep.e);
    ck.into_vec()
}

pub(crate) fn xyz_checks(p: &Profile, d: &Decomposition) -> Vec<Check> {
    let rep = &p.report;
    let (e, r, b) = (rep.e as i64, rep.r as i64, rep.b);
    let split = split_from(p, d);
    let mut ck = Checks::default();
    ck.claim(
        "thm2.2/1:formula",
        b == (r + 1) * d.tower_sizes() as i64 - (d.p as i64 + 1) * (e - r - 1) + d.h as i64,
    );
    ck.claim("thm2.2/1:b=X+Y+Z", b == split.total());
    ck.claim("thm2.2/1:X>=0", split.x >= 0);
    ck.claim("thm2.2/1:Y>=0", split.y >= 0);
    ck.claim(
        "thm2.2/1:Z>=sumA>=0",
        split.z >= p.partition.sum_a && p.partition.sum_a >= 0,
    );
    ck.claim("thm2.2/2", conductor_identity_from(p, d));
    if d.k == 1 {
        ck.claim("thm2.2/k1:X=Y=0,Z=h=b", split.x == 0 && split.y == 0 && split.z == d.h as i64 && b == d.h as i64);
    }
    ck.into_vec()
}

pub(crate) fn tower_inequalities(p: &Profile, d: &Decomposition, col: &RelativeIdeal) -> Vec<Check> {
    let mut ck = Checks::default();
    if d.k < 2 {
        return ck.into_vec();
    }
    let s = &p.semigroup;
    let rep = &p.report;
    let (e, c, r, k) = (rep.e as i64, rep.c as i64, rep.r as i64, d.k as i64);
    let (pp, h) = (d.p as i64, d.h as i64);
    let ys: Vec<i64> = d.ys.iter().map(|&y| y as i64).collect();
    let ls: Vec<i64> = d.ls.iter().map(|&l| l as i64).collect();
    let last = ls.len() - 1;

    let mut outside: Vec<i64> = s
        .members()
        .iter_ones()
        .map(|z| z as i64)
        .filter(|&z| !col.contains(z))
        .collect();
    outside.sort_unstable();
    let mut expected = vec![0];
    expected.extend(&ys);
    ck.iff("prop1.11/1", r == e - k, outside == expected);

    let low_type = r < e - 1;
    ck.imp("prop1.11/2a", low_type, 2 * ys[0] < c + e);
    ck.imp("prop1.11/2b", low_type, pp <= 2 * ls[0] + 2);
    ck.imp("prop1.11/2b:h", low_type && pp == 2 * ls[0] + 2, h > 0);

    let min_type = r == e - k;
    ck.imp("prop1.11/3a", min_type, ys.iter().all(|&y| ys[0] + y < c + e));
    ck.imp("prop1.11/3b", min_type, pp <= ls[0] + ls[last] + 2);
    ck.imp("prop1.11/3b:h", min_type && pp == ls[0] + ls[last] + 2, h > 0);

    for (&y, &l) in ys.iter().zip(&ls) {
        ck.imp("prop1.11/4", pp >= 3 && l == 0, 2 * y > c + e);
    }
    ck.into_vec()
}

pub(crate) fn k_two_checks(p: &Profile, d: &Decomposition, col: &RelativeIdeal) -> Vec<Check> {
    let mut ck = Checks::default();
    if d.k != 2 {
        return ck.into_vec();
    }
    let rep = &p.report;
    let (e, c, r, b) = (rep.e as i64, rep.c as i64, rep.r as i64, rep.b);
    let (pp, h) = (d.p as i64, d.h as i64);
    let (y, l) = (d.ys[0] as i64, d.ls[0] as i64);
    let y_in = col.contains(y);

    // 2y = (2q + 1)e for some q >= 1
    let odd_multiple = (2 * y) % e == 0 && ((2 * y) / e) % 2 == 1 && (2 * y) / e >= 3;
    let cond_a = 2 * y >= c + e;
    let cond_b = odd_multiple && 2 * y < c + e && pp >= 2 && y_in;
    ck.iff("prop1.12/1", r == e - 1, cond_a || cond_b);
    ck.iff(
        "prop1.12/2",
        r == e - 2,
        2 * y < c + e && (!odd_multiple || !y_in),
    );

    ck.claim("lem2.3/e>=3", e >= 3);
    ck.claim("lem2.3/r-range", r == e - 1 || r == e - 2);
    if r == e - 1 {
        ck.claim("lem2.3/1:b", b == (l + 1) * e + h);
        ck.claim("lem2.3/1:bound", b <= (l + 2) * e - 2);
        ck.iff("lem2.3/1:top", b == (l + 2) * e - 2, h == e - 2);
    }
    if r == e - 2 {
        ck.claim("lem2.3/2:b", b == (l + 1) * (e - 1) + h - pp - 1);
        ck.claim("lem2.3/2:c", c == (pp + l + 2) * (e - 1) - b);
        ck.claim("lem2.3/2a", l + 1 <= pp && pp <= 2 * l + 2);
        ck.imp("lem2.3/2a:h", pp == 2 * l + 2, h > 0);
        ck.claim(
            "lem2.3/2b:bounds",
            (l + 1) * (e - 3) <= b && b <= (l + 1) * (e - 2) + e - 3,
        );
        ck.iff(
            "lem2.3/2b:bottom",
            b == (l + 1) * (e - 3),
            (pp == 2 * l + 2 && h == 1) || (pp == 2 * l + 1 && h == 0),
        );
        ck.imp(
            "lem2.3/2b:top",
            b == (l + 1) * (e - 2) + e - 3,
            pp == l + 1 && pp > 1 && h == e - 2 && y == e + 1,
        );
    }
    ck.into_vec()
}

pub(crate) fn k_three_checks(p: &Profile, d: &Decomposition) -> Vec<Check> {
    let mut ck = Checks::default();
    if d.k != 3 {
        return ck.into_vec();
    }
    let rep = &p.report;
    let (e, r, b) = (rep.e as i64, rep.r as i64, rep.b);
    let (pp, h) = (d.p as i64, d.h as i64);
    let (l1, l2) = (d.ls[0] as i64, d.ls[1] as i64);
    let tl = l1 + l2 + 2;
    ck.claim("lem2.4/r-range", e - 3 <= r && r <= e - 1);
    if r == e - 3 {
        ck.claim("lem2.4/1:b", b == tl * (e - 2) + h - 2 * (pp + 1));
        ck.claim("lem2.4/1:p<=L", pp <= tl);
        ck.imp("lem2.4/1:p<L", pp < tl, b >= tl * (e - 4) + h);
        ck.imp("lem2.4/1:p=L", pp == tl, b == tl * (e - 4) + h - 2 && h > 0);
    }
    if r == e - 2 {
        ck.claim("lem2.4/2:b", b == tl * (e - 1) + h - pp - 1);
        ck.claim("lem2.4/2:p", pp <= 2 * l1 + 2);
        ck.imp("lem2.4/2:h", pp == 2 * l1 + 2, h > 0);
    }
    if r == e - 1 {
        ck.claim("lem2.4/3:b", b == tl * e + h);
    }
    ck.into_vec()
}
