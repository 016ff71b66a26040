//! Recognizers and generators for each family.
//!
//! A recognizer reads the shape of `S` below its conductor; a generator
//! sweeps the free parameters of the family's description and keeps the
//! tuples that are additively closed. The two are written independently so
//! that each can be tested against the other.

use super::Family;
use crate::enumerate::{for_each, Bound};
use crate::ideal::colon_value_set_xr_m;
use crate::semigroup::NumericalSemigroup;

/// The data every recognizer looks at.
pub(crate) struct Shape {
    pub e: u32,
    pub c: u32,
    pub p: u32,
    pub h: u32,
    /// Elements below `c`, ascending, starting with 0.
    pub below: Vec<u32>,
    /// Elements below `c` that are not multiples of `e`.
    pub extra: Vec<u32>,
}

impl Shape {
    pub fn new(s: &NumericalSemigroup) -> Self {
        let (e, c) = (s.multiplicity(), s.conductor());
        let p = (c - 1) / e;
        let below: Vec<u32> = s.members().iter_ones().map(|z| z as u32).collect();
        let extra = below.iter().copied().filter(|z| z % e != 0).collect();
        Shape {
            e,
            c,
            p,
            h: (p + 1) * e - c,
            below,
            extra,
        }
    }

    fn single(&self) -> Option<u32> {
        match self.extra[..] {
            [y] => Some(y),
            _ => None,
        }
    }
}

/// Colon-set membership, computed only when a recognizer needs it.
pub(crate) struct Colon<'a> {
    s: &'a NumericalSemigroup,
    cache: std::cell::OnceCell<crate::ideal::RelativeIdeal>,
}

impl<'a> Colon<'a> {
    pub fn new(s: &'a NumericalSemigroup) -> Self {
        Colon {
            s,
            cache: std::cell::OnceCell::new(),
        }
    }

    pub fn contains(&self, y: u32) -> bool {
        self.cache
            .get_or_init(|| colon_value_set_xr_m(self.s))
            .contains(y as i64)
    }
}

/// Sub-case flag for the families whose description splits on `2y`.
pub(crate) fn recognize(f: Family, sh: &Shape, col: &Colon) -> Option<Option<&'static str>> {
    let (e, c, p, h) = (sh.e, sh.c, sh.p, sh.h);
    let yes = |ok: bool| ok.then_some(None);
    let set = |xs: &[u32], c0: u32| yes(c == c0 && sh.below == xs);
    use Family::*;
    match f {
        Gorenstein => yes(col.s.is_symmetric()),
        MaxLength => yes(sh.extra.is_empty() && h == 0),
        SkeletonOnly => yes(sh.extra.is_empty() && p >= 1 && p * e + 2 < c && c < (p + 1) * e),
        SkeletonPlusTwo => yes(sh.extra.is_empty() && e > 2 && c == p * e + 2),
        TwoEMinusOne => yes(e > 3 && c == 3 * e - 1 && sh.extra == [2 * e - 1]),
        SingleBelowTwoE => {
            let y = sh.single()?;
            yes(e > 3 && c == 2 * e && 2 * y < 3 * e)
        }
        MidOne => {
            let y = sh.single()?;
            if e >= 5 && 2 * y >= c + e && p * e + 5 <= c && c <= y + e && c <= (p + 1) * e {
                Some(Some("2y>=c+e"))
            } else if e >= 10
                && e % 2 == 0
                && 2 * y == 3 * e
                && p == 2
                && 2 * e + 5 <= c
                && 2 * c <= 5 * e
                && col.contains(y)
            {
                Some(Some("2y=3e"))
            } else {
                None
            }
        }
        MidTwo => {
            let y = sh.single()?;
            if p != 2 || 2 * y >= c + e {
                None
            } else if 2 * y != 3 * e {
                (e >= 5 && 2 * e + 3 <= c && c <= 3 * e - 2).then_some(Some("2y!=3e"))
            } else {
                (e >= 6 && 2 * e + 3 <= c && 2 * c <= 5 * e && !col.contains(y)).then_some(Some("2y=3e"))
            }
        }
        MidThree => {
            let y = sh.single()?;
            yes(p == 1 && e >= 5 && 2 * y < c + e && e + 4 <= c && c < 2 * e)
        }
        Twice1a => set(&[0, e, e + 2], e + 4).filter(|_| e >= 4),
        Twice1b => {
            let y = sh.single()?;
            yes(e >= 4 && c == 2 * e + 4 && p == 2 && col.contains(y))
        }
        Twice1c => {
            let y = sh.single()?;
            yes(e >= 4 && p >= 3 && c == p * e + 4 && y + e >= p * e + 4)
        }
        Twice2a => set(&[0, e, e + 1], e + 3).filter(|_| e >= 4),
        Twice2b => {
            let y = sh.single()?;
            yes(e >= 5 && c == 2 * e + 2 && 2 * e + 4 <= 2 * y && 2 * y < 3 * e + 2 && 2 * y != 3 * e)
        }
        Twice2c => set(&[0, e, 2 * e, 3 * e - 1, 3 * e, 4 * e - 1, 4 * e], 5 * e - 1).filter(|_| e >= 4),
        Twice2d => match sh.extra[..] {
            [y, z] => yes(e >= 4 && c == 4 * e && 2 * e < y && y < 3 * e && z == y + e && 2 * y < 5 * e),
            _ => None,
        },
        Twice3a => match sh.extra[..] {
            [y1, y2] => yes(e >= 5 && c == 2 * e && y1 + y2 < 3 * e),
            _ => None,
        },
        Twice3b => set(&[0, e, 2 * e - 2, 2 * e - 1, 2 * e], 3 * e - 2).filter(|_| e >= 5),
        B1Sporadic1 => set(&[0, 4, 7, 8], 11),
        B1Sporadic2 => set(&[0, 4, 5], 8),
        B1Arith => yes(sh.extra.is_empty() && e >= 3 && h == 1),
        B2Sporadic(i) => {
            let (xs, c0) = B2_SPORADIC[i as usize - 1];
            set(xs, c0)
        }
        B2Arith => yes(sh.extra.is_empty() && e >= 4 && h == 2),
    }
}

/// Elements below the conductor, and the conductor, of the sporadic `b = 2`
/// value sets.
pub(crate) const B2_SPORADIC: [(&[u32], u32); 9] = [
    (&[0, 4, 5], 7),
    (&[0, 4, 8, 11, 12, 15, 16], 19),
    (&[0, 4, 8, 9, 12, 13], 16),
    (&[0, 5, 9, 10], 14),
    (&[0, 5, 6], 10),
    (&[0, 5, 7], 10),
    (&[0, 5, 6, 7], 10),
    (&[0, 5, 6, 8], 10),
    (&[0, 5, 8, 9, 10], 13),
];

pub(crate) const B2_SPORADIC_TS: [&[u32]; 9] = [
    &[2, 1, 1],
    &[2, 2, 2, 1, 2, 1, 2],
    &[2, 2, 1, 2, 1, 2],
    &[3, 3, 1, 3],
    &[3, 1, 3],
    &[3, 2, 2],
    &[2, 1, 1, 2],
    &[2, 2, 1, 1],
    &[2, 2, 1, 1, 2],
];

/// Type sequence a `b = 1` or `b = 2` family states for `S`.
pub(crate) fn stated_type_sequence(f: Family, sh: &Shape) -> Option<Vec<u32>> {
    let arith = |last: u32| {
        let mut ts = vec![sh.e - 1; sh.p as usize];
        ts.push(last);
        ts
    };
    match f {
        Family::B1Sporadic1 => Some(vec![2, 2, 1, 2]),
        Family::B1Sporadic2 => Some(vec![2, 1, 2]),
        Family::B1Arith => Some(arith(sh.e - 2)),
        Family::B2Sporadic(i) => Some(B2_SPORADIC_TS[i as usize - 1].to_vec()),
        Family::B2Arith => Some(arith(sh.e - 3)),
        _ => None,
    }
}

fn skeleton(e: u32, p: u32) -> Vec<u32> {
    (0..=p).map(|j| j * e).collect()
}

fn with(mut xs: Vec<u32>, more: &[u32]) -> Vec<u32> {
    xs.extend_from_slice(more);
    xs
}

/// Candidate `(elements below c, c)` pairs straight from the family's
/// parameter description, before the closure filter.
fn candidates(f: Family, e_max: u32, c_max: u32) -> Vec<(Vec<u32>, u32)> {
    use Family::*;
    let mut out = Vec::new();
    let es = |lo: u32| lo..=e_max;
    // p from 1 while pe stays below c_max
    let ps = |e: u32, lo: u32| (lo..).take_while(move |&p| p * e < c_max);
    match f {
        Gorenstein => {}
        MaxLength => {
            for e in es(2) {
                for p in (0..).take_while(|&p| (p + 1) * e <= c_max) {
                    out.push((skeleton(e, p), (p + 1) * e));
                }
            }
        }
        SkeletonOnly => {
            for e in es(2) {
                for p in ps(e, 1) {
                    for c in p * e + 3..(p + 1) * e {
                        out.push((skeleton(e, p), c));
                    }
                }
            }
        }
        SkeletonPlusTwo => {
            for e in es(3) {
                for p in ps(e, 1) {
                    out.push((skeleton(e, p), p * e + 2));
                }
            }
        }
        TwoEMinusOne => {
            for e in es(4) {
                out.push((vec![0, e, 2 * e - 1, 2 * e], 3 * e - 1));
            }
        }
        SingleBelowTwoE => {
            for e in es(4) {
                for y in (e + 1..2 * e).filter(|&y| 2 * y < 3 * e) {
                    out.push((vec![0, e, y], 2 * e));
                }
            }
        }
        MidOne => {
            for e in es(5) {
                for p in ps(e, 1) {
                    for c in p * e + 5..=(p + 1) * e {
                        for y in c.saturating_sub(e)..c {
                            if y % e != 0 && 2 * y >= c + e {
                                out.push((with(skeleton(e, p), &[y]), c));
                            }
                        }
                    }
                }
                if e >= 10 && e % 2 == 0 {
                    for c in 2 * e + 5..=5 * e / 2 {
                        out.push((with(skeleton(e, 2), &[3 * e / 2]), c));
                    }
                }
            }
        }
        MidTwo => {
            for e in es(5) {
                for c in 2 * e + 3..=3 * e - 2 {
                    for y in (e + 1..c).filter(|&y| y % e != 0 && 2 * y < c + e && 2 * y != 3 * e) {
                        out.push((with(skeleton(e, 2), &[y]), c));
                    }
                }
                if e >= 6 && e % 2 == 0 {
                    for c in 2 * e + 3..=5 * e / 2 {
                        out.push((with(skeleton(e, 2), &[3 * e / 2]), c));
                    }
                }
            }
        }
        MidThree => {
            for e in es(5) {
                for c in e + 4..2 * e {
                    for y in (e + 1..c).filter(|&y| 2 * y < c + e) {
                        out.push((vec![0, e, y], c));
                    }
                }
            }
        }
        Twice1a => {
            for e in es(4) {
                out.push((vec![0, e, e + 2], e + 4));
            }
        }
        Twice1b => {
            for e in es(4) {
                for y in (e + 1..2 * e + 4).filter(|&y| y % e != 0) {
                    out.push((with(skeleton(e, 2), &[y]), 2 * e + 4));
                }
            }
        }
        Twice1c => {
            for e in es(4) {
                for p in ps(e, 3) {
                    for y in ((p - 1) * e + 4..p * e + 4).filter(|&y| y % e != 0) {
                        out.push((with(skeleton(e, p), &[y]), p * e + 4));
                    }
                }
            }
        }
        Twice2a => {
            for e in es(4) {
                out.push((vec![0, e, e + 1], e + 3));
            }
        }
        Twice2b => {
            for e in es(5) {
                for y in (e + 2..=(3 * e + 1) / 2).filter(|&y| 2 * y != 3 * e) {
                    out.push((vec![0, e, y, 2 * e], 2 * e + 2));
                }
            }
        }
        Twice2c => {
            for e in es(4) {
                out.push((vec![0, e, 2 * e, 3 * e - 1, 3 * e, 4 * e - 1, 4 * e], 5 * e - 1));
            }
        }
        Twice2d => {
            for e in es(4) {
                for y in (2 * e + 1..3 * e).filter(|&y| 2 * y < 5 * e) {
                    out.push((vec![0, e, 2 * e, y, 3 * e, y + e], 4 * e));
                }
            }
        }
        Twice3a => {
            for e in es(5) {
                for y1 in e + 1..2 * e {
                    for y2 in (y1 + 1..2 * e).filter(|&y2| y1 + y2 < 3 * e) {
                        out.push((vec![0, e, y1, y2], 2 * e));
                    }
                }
            }
        }
        Twice3b => {
            for e in es(5) {
                out.push((vec![0, e, 2 * e - 2, 2 * e - 1, 2 * e], 3 * e - 2));
            }
        }
        B1Sporadic1 => out.push((vec![0, 4, 7, 8], 11)),
        B1Sporadic2 => out.push((vec![0, 4, 5], 8)),
        B1Arith => {
            for e in es(3) {
                for p in ps(e, 1) {
                    out.push((skeleton(e, p), (p + 1) * e - 1));
                }
            }
        }
        B2Sporadic(i) => {
            let (xs, c) = B2_SPORADIC[i as usize - 1];
            out.push((xs.to_vec(), c));
        }
        B2Arith => {
            for e in es(4) {
                for p in ps(e, 1) {
                    out.push((skeleton(e, p), (p + 1) * e - 2));
                }
            }
        }
    }
    out
}

/// Ring-level side conditions, decided on the monomial ring.
fn side_condition(f: Family, s: &NumericalSemigroup) -> bool {
    let e = s.multiplicity();
    let y = || s.members().iter_ones().map(|z| z as u32).find(|z| z % e != 0);
    match f {
        Family::Twice1b => y().is_some_and(|y| colon_value_set_xr_m(s).contains(y as i64)),
        Family::MidOne | Family::MidTwo => match y() {
            Some(y) if 2 * y == 3 * e && s.conductor() > 2 * e => {
                let inside = colon_value_set_xr_m(s).contains(y as i64);
                // the 2y = 3e branch needs y in the colon set for the first
                // family and outside it for the second
                if f == Family::MidOne {
                    inside
                } else {
                    !inside
                }
            }
            _ => true,
        },
        _ => true,
    }
}

pub(crate) fn generate(f: Family, e_max: u32, c_max: u32) -> Vec<NumericalSemigroup> {
    if f == Family::Gorenstein {
        let mut out = Vec::new();
        // symmetric means c = 2δ, so the genus bound prunes far more
        if c_max >= 2 {
            for_each(Bound::Genus(c_max / 2), |s| {
                if s.is_symmetric() && s.conductor() <= c_max && s.multiplicity() <= e_max {
                    out.push(s.clone());
                }
            });
        }
        out.sort();
        return out;
    }
    let mut out: Vec<NumericalSemigroup> = candidates(f, e_max, c_max)
        .into_iter()
        .filter(|(_, c)| *c <= c_max)
        .filter_map(|(mut xs, c)| {
            xs.sort_unstable();
            NumericalSemigroup::from_elements_below(&xs, c).ok()
        })
        .filter(|s| s.multiplicity() <= e_max)
        .filter(|s| side_condition(f, s))
        .collect();
    out.sort();
    out.dedup();
    out
}
