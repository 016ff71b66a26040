//! Exhaustive generation of numerical semigroups.
//!
//! The main path walks the semigroup tree: the children of `S` are
//! `S \ {g}` for each minimal generator `g` above the Frobenius number.
//! Removing such a `g` makes `g` the new Frobenius number, so conductors
//! grow along every path and a conductor bound prunes whole subtrees.
//! `ℕ` itself is never visited; the walk starts at `<2, 3>`.

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::semigroup::NumericalSemigroup;

/// Largest genus the subset oracle accepts.
pub const BRUTE_FORCE_MAX_GENUS: u32 = 8;

/// Env var overriding the worker count.
pub const THREADS_ENV: &str = "NSG_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("genus {0} is too large for the subset oracle (max {BRUTE_FORCE_MAX_GENUS})")]
    BoundTooLarge(u32),
}

/// Which semigroups a walk covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Genus(u32),
    Conductor(u32),
}

impl Bound {
    fn admits(&self, s: &NumericalSemigroup) -> bool {
        match *self {
            Bound::Genus(g) => s.genus() <= g,
            Bound::Conductor(c) => s.conductor() <= c,
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Genus(g) => write!(f, "genus <= {g}"),
            Bound::Conductor(c) => write!(f, "conductor <= {c}"),
        }
    }
}

fn root() -> NumericalSemigroup {
    NumericalSemigroup::from_generators(&[2, 3]).expect("<2, 3> is valid")
}

/// Children in ascending order of the removed generator.
pub fn children(s: &NumericalSemigroup) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    let c = s.conductor();
    s.generators().iter().filter(move |&&g| g >= c).map(move |&g| {
        let members = BitSet::from_fn(g as usize + 1, |z| z < g as usize && s.contains(z as i64));
        NumericalSemigroup::from_members(members)
    })
}

fn walk(s: &NumericalSemigroup, bound: Bound, visit: &mut impl FnMut(&NumericalSemigroup)) {
    visit(s);
    for child in children(s) {
        if bound.admits(&child) {
            walk(&child, bound, visit);
        }
    }
}

/// Visits every semigroup within `bound` exactly once, in preorder.
pub fn for_each(bound: Bound, mut visit: impl FnMut(&NumericalSemigroup)) {
    let r = root();
    if bound.admits(&r) {
        walk(&r, bound, &mut visit);
    }
}

pub fn enumerate_by_genus(g_max: u32) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for_each(Bound::Genus(g_max), |s| out.push(s.clone()));
    out
}

pub fn enumerate_by_conductor(c_max: u32) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for_each(Bound::Conductor(c_max), |s| out.push(s.clone()));
    out
}

/// Runs `f` on a dedicated pool when `NSG_THREADS` is set, otherwise on the
/// global one.
pub fn with_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    match threads {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// Folds over every semigroup within `bound` in parallel. Subtrees hanging
/// below a small frontier are folded independently and the partial results
/// are merged in frontier order, so the result does not depend on
/// scheduling as long as `merge` is associative.
pub fn par_fold<T, I, F, M>(bound: Bound, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &NumericalSemigroup) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    const FRONTIER_DEPTH: u32 = 4;
    let mut head = init();
    let mut frontier = Vec::new();
    let r = root();
    if bound.admits(&r) {
        let mut stack = vec![(r, 1u32)];
        while let Some((s, depth)) = stack.pop() {
            if depth == FRONTIER_DEPTH {
                frontier.push(s);
                continue;
            }
            fold(&mut head, &s);
            let kids: Vec<_> = children(&s).filter(|c| bound.admits(c)).collect();
            stack.extend(kids.into_iter().rev().map(|c| (c, depth + 1)));
        }
    }
    let parts: Vec<T> = with_pool(|| {
        frontier
            .par_iter()
            .map(|s| {
                let mut acc = init();
                walk(s, bound, &mut |t| fold(&mut acc, t));
                acc
            })
            .collect()
    });
    parts.into_iter().fold(head, &merge)
}

/// Per-genus counts `[N(1), ..., N(g_max)]` from the tree.
pub fn genus_counts(g_max: u32) -> Vec<u64> {
    let counts = par_fold(
        Bound::Genus(g_max),
        || vec![0u64; g_max as usize],
        |acc, s| acc[s.genus() as usize - 1] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    counts
}

/// Independent oracle: every `g`-subset of `[1, 2g - 1]` whose complement in
/// `ℕ` is additively closed. Sorted.
pub fn brute_force_by_genus(g: u32) -> Result<Vec<NumericalSemigroup>, EnumError> {
    if g > BRUTE_FORCE_MAX_GENUS {
        return Err(EnumError::BoundTooLarge(g));
    }
    if g == 0 {
        return Ok(Vec::new());
    }
    let width = 2 * g - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1 << width) {
        if mask.count_ones() != g {
            continue;
        }
        let gap = |z: u32| z >= 1 && z <= width && mask & (1 << (z - 1)) != 0;
        let closed = (1..=width)
            .filter(|&a| !gap(a))
            .all(|a| (a..=width - a).all(|b| gap(b) || !gap(a + b)));
        if closed {
            let gaps: Vec<u32> = (1..=width).filter(|&z| gap(z)).collect();
            out.push(NumericalSemigroup::from_gaps(&gaps).expect("closed complement"));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_genera() {
        assert_eq!(enumerate_by_genus(1), vec![root()]);
        let g3 = enumerate_by_genus(3);
        assert_eq!(g3.len(), 7);
        assert_eq!(genus_counts(8), vec![1, 2, 4, 7, 12, 23, 39, 67]);
    }

    #[test]
    fn by_conductor() {
        assert_eq!(enumerate_by_conductor(2), vec![root()]);
        let c5 = enumerate_by_conductor(5);
        let s357 = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
        let s27 = NumericalSemigroup::from_generators(&[2, 7]).unwrap();
        assert!(c5.contains(&s357));
        assert!(!c5.contains(&s27));
        assert!(c5.iter().all(|s| s.conductor() <= 5));
        let s4713 = NumericalSemigroup::from_generators(&[4, 7, 13]).unwrap();
        assert!(enumerate_by_conductor(11).contains(&s4713));
    }

    #[test]
    fn oracle_small() {
        assert_eq!(brute_force_by_genus(1).unwrap(), vec![root()]);
        assert_eq!(brute_force_by_genus(3).unwrap().len(), 4);
        assert_eq!(brute_force_by_genus(9), Err(EnumError::BoundTooLarge(9)));
    }

    #[test]
    fn par_fold_matches_sequential_order() {
        let seq = enumerate_by_genus(9);
        let par = par_fold(
            Bound::Genus(9),
            Vec::new,
            |acc: &mut Vec<NumericalSemigroup>, s| acc.push(s.clone()),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        let (mut a, mut b) = (seq, par);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
