//! Numerical semigroups: construction, membership and first-order invariants.
//!
//! A semigroup is stored as its conductor `c` plus a membership bitmap over
//! `[0, c)`; every integer `z >= c` is implicitly a member. `S = N` (the
//! regular case) is rejected at construction, so `e >= 2` and `c >= 2` always
//! hold.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generators have gcd {0}, not 1")]
    GcdNotOne(u32),
    #[error("the semigroup is all of N (regular case)")]
    RegularSemigroup,
    #[error("complement of the gap set is not closed: {0} + {1} = {2} is a gap")]
    NotClosed(u32, u32, u32),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    conductor: u32,
    members: BitSet,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The smallest numerical semigroup containing `gens`.
    pub fn from_generators(gens: &[u32]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::InvalidInput("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(SemigroupError::InvalidInput("generators must be positive".into()));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        if gens.contains(&1) {
            return Err(SemigroupError::RegularSemigroup);
        }
        let e = *gens.iter().min().unwrap() as usize;

        // Sieve until a run of e consecutive members appears; that run starts
        // at the conductor.
        let mut mem = vec![true];
        let mut run = 1usize;
        let mut z = 0usize;
        while run < e {
            z += 1;
            let m = gens.iter().any(|&g| (g as usize) <= z && mem[z - g as usize]);
            mem.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let conductor = z + 1 - e;
        let members = BitSet::from_fn(conductor, |i| mem[i]);
        Ok(Self::from_members(members))
    }

    /// The semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self, SemigroupError> {
        if gaps.is_empty() {
            return Err(SemigroupError::RegularSemigroup);
        }
        if gaps.contains(&0) {
            return Err(SemigroupError::InvalidInput("0 cannot be a gap".into()));
        }
        let conductor = *gaps.iter().max().unwrap() as usize + 1;
        let mut members = BitSet::full(conductor);
        for &g in gaps {
            members.remove(g as usize);
        }
        let elems: Vec<usize> = members.iter_ones().skip(1).collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                if a + b >= conductor {
                    break;
                }
                if !members.get(a + b) {
                    return Err(SemigroupError::NotClosed(a as u32, b as u32, (a + b) as u32));
                }
            }
        }
        Ok(Self::from_members(members))
    }

    /// Builds from a set of elements below a proposed conductor `c`; every
    /// `z >= c` is added. Fails if the result is not additively closed or if
    /// `c - 1` is in the set (so `c` would not be the conductor).
    pub fn from_elements_below(elements: &[u32], c: u32) -> Result<Self, SemigroupError> {
        if elements.iter().any(|&x| x >= c) {
            return Err(SemigroupError::InvalidInput(format!(
                "elements must lie below the conductor {c}"
            )));
        }
        if c >= 1 && elements.contains(&(c - 1)) {
            return Err(SemigroupError::InvalidInput(format!("{} is not a gap", c - 1)));
        }
        let gaps: Vec<u32> = (1..c).filter(|z| !elements.contains(z)).collect();
        Self::from_gaps(&gaps)
    }

    /// Wraps an already-closed membership bitmap over `[0, c)` whose last bit
    /// is clear. Minimal generators are recomputed.
    pub(crate) fn from_members(members: BitSet) -> Self {
        let conductor = members.len();
        debug_assert!(conductor >= 2 && members.get(0) && !members.get(conductor - 1));
        let is_member = |z: usize| z >= conductor || members.get(z);
        let e = members.iter_ones().nth(1).unwrap_or(conductor);
        let mut generators: Vec<u32> = Vec::new();
        for x in e..conductor + e {
            if is_member(x) && generators.iter().all(|&g| !is_member(x - g as usize)) {
                generators.push(x as u32);
            }
        }
        NumericalSemigroup {
            generators,
            conductor: conductor as u32,
            members,
        }
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn frobenius(&self) -> u32 {
        self.conductor - 1
    }

    pub fn embedding_dimension(&self) -> u32 {
        self.generators.len() as u32
    }

    /// Membership bitmap over `[0, c)`.
    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z >= self.conductor as i64 {
            true
        } else {
            self.members.get(z as usize)
        }
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor)
            .filter(|&z| !self.members.get(z as usize))
            .collect()
    }

    pub fn genus(&self) -> u32 {
        self.conductor - self.members.count_ones() as u32
    }

    /// `[s_0 = 0, s_1 = e, ..., s_n = c]`.
    pub fn small_elements(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.members.iter_ones().map(|z| z as u32).collect();
        v.push(self.conductor);
        v
    }

    /// `n = c - delta`, the number of elements below the conductor.
    pub fn n(&self) -> u32 {
        self.members.count_ones() as u32
    }

    /// Gaps `z` with `z + m` in S for every nonzero `m` in S.
    pub fn pseudo_frobenius(&self) -> Vec<u32> {
        (0..self.conductor)
            .filter(|&z| {
                !self.members.get(z as usize)
                    && self.generators.iter().all(|&g| self.contains((z + g) as i64))
            })
            .collect()
    }

    pub fn type_r(&self) -> u32 {
        self.pseudo_frobenius().len() as u32
    }

    /// `z` in S iff `F - z` is a gap, for every `0 <= z <= F`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius() as i64;
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// Value-set notation, e.g. `{0,4,7,8,11->}`.
    pub fn value_set_string(&self) -> String {
        let parts: Vec<String> = self.small_elements().iter().map(u32::to_string).collect();
        format!("{{{}->}}", parts.join(","))
    }

    /// Comma-separated minimal generators, the textual form accepted by
    /// [`FromStr`].
    pub fn generators_string(&self) -> String {
        join(&self.generators, ",")
    }
}

pub(crate) fn join(v: &[u32], sep: &str) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Canonical order: by conductor, then by the membership bitmap read from 0.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.small_elements().cmp(&other.small_elements()))
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generators_string())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> = {}", self.generators_string(), self.value_set_string())
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, SemigroupError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| SemigroupError::InvalidInput(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// Parse error for the textual form, kept apart from construction errors so
/// callers can tell malformed text from an invalid semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSemigroupError {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] SemigroupError),
}

impl FromStr for NumericalSemigroup {
    type Err = ParseSemigroupError;

    /// `"10,11,26"` (generators) or `"gaps:1,2,4"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let syntax = |e: SemigroupError| match e {
            SemigroupError::InvalidInput(m) => ParseSemigroupError::Syntax(m),
            other => ParseSemigroupError::Invalid(other),
        };
        if let Some(rest) = s.strip_prefix("gaps:") {
            let gaps = parse_list(rest).map_err(syntax)?;
            Ok(Self::from_gaps(&gaps)?)
        } else {
            let gens = parse_list(s).map_err(syntax)?;
            if gens.is_empty() {
                return Err(ParseSemigroupError::Syntax("empty generator list".into()));
            }
            Ok(Self::from_generators(&gens)?)
        }
    }
}
