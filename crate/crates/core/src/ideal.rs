//! Relative ideals of a numerical semigroup and their duals.
//!
//! A relative ideal `E` of `S` is a subset of the integers, bounded below,
//! with `E + S ⊆ E`. It is stored in normalized form: `least` is the minimum
//! of `E`, `stabilization` is the smallest `σ` with `[σ, ∞) ⊆ E`, and the
//! bitmap covers `[least, σ)`. Two ideals over the same semigroup are equal
//! iff their normalized forms are.
//!
//! On the monomial ring `k[[t^s : s ∈ S]]` lengths of quotients are
//! cardinalities of value-set differences, which is what
//! [`length_between`] computes.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("chain index {index} out of range [0, {n}]")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("second ideal is not contained in the first")]
    NotNested,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    least: i64,
    stabilization: i64,
    members: BitSet,
}

impl RelativeIdeal {
    /// Builds from membership of `[lo, hi)`; everything `>= hi` is a member
    /// and everything `< lo` is not. The result is normalized.
    pub fn from_window(base: &NumericalSemigroup, lo: i64, hi: i64, mut f: impl FnMut(i64) -> bool) -> Self {
        let hi = hi.max(lo);
        let bits = BitSet::from_fn((hi - lo) as usize, |j| f(lo + j as i64));
        Self::normalize(base.clone(), lo, bits)
    }

    fn normalize(base: NumericalSemigroup, lo: i64, mut bits: BitSet) -> Self {
        let stabilization = match bits.last_zero() {
            Some(j) => lo + j as i64 + 1,
            None => lo,
        };
        bits.truncate((stabilization - lo) as usize);
        let least = match bits.first_one() {
            Some(j) => lo + j as i64,
            None => stabilization,
        };
        bits.drop_front((least - lo) as usize);
        RelativeIdeal {
            base,
            least,
            stabilization,
            members: bits,
        }
    }

    /// `S` itself as an ideal over `S`.
    pub fn whole(base: &NumericalSemigroup) -> Self {
        Self::normalize(base.clone(), 0, base.members().clone())
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn least(&self) -> i64 {
        self.least
    }

    pub fn stabilization(&self) -> i64 {
        self.stabilization
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.least {
            false
        } else if z >= self.stabilization {
            true
        } else {
            self.members.get((z - self.least) as usize)
        }
    }

    /// Elements below the stabilization bound, ascending.
    pub fn finite_part(&self) -> impl Iterator<Item = i64> + '_ {
        self.members.iter_ones().map(move |j| self.least + j as i64)
    }

    /// Number of members in `[lo, hi)`.
    pub fn count_in(&self, lo: i64, hi: i64) -> usize {
        if hi <= lo {
            return 0;
        }
        let below_stab = {
            let a = lo.max(self.least);
            let b = hi.min(self.stabilization);
            if a < b {
                self.members
                    .count_range((a - self.least) as usize, (b - self.least) as usize)
            } else {
                0
            }
        };
        let tail = (hi - lo.max(self.stabilization)).max(0) as usize;
        below_stab + tail
    }

    /// `E + z`.
    pub fn shifted(&self, z: i64) -> Self {
        RelativeIdeal {
            base: self.base.clone(),
            least: self.least + z,
            stabilization: self.stabilization + z,
            members: self.members.clone(),
        }
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.least >= other.least
            && self.finite_part().all(|z| other.contains(z))
            && (self.stabilization..other.stabilization.max(self.stabilization)).all(|z| other.contains(z))
    }

    /// `E + g ⊆ E` for every minimal generator `g` of the base, checked on
    /// the window where it can fail.
    pub fn is_closed(&self) -> bool {
        let e = self.base.multiplicity() as i64;
        self.base.generators().iter().all(|&g| {
            (self.least..self.stabilization + e)
                .all(|z| !self.contains(z) || self.contains(z + g as i64))
        })
    }
}

impl std::fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.finite_part().map(|z| z.to_string()).collect();
        write!(f, "{{{}", parts.join(","))?;
        if !parts.is_empty() {
            write!(f, ",")?;
        }
        write!(f, "{}->}}", self.stabilization)
    }
}

/// `S_i = {s ∈ S : s >= s_i}` for `0 <= i <= n`; `S_0 = S`, `S_1` is the
/// maximal ideal and `S_n` the conductor ideal.
pub fn ideal_of_chain(s: &NumericalSemigroup, i: usize) -> Result<RelativeIdeal, IdealError> {
    let small = s.small_elements();
    let n = small.len() - 1;
    if i > n {
        return Err(IdealError::IndexOutOfRange { index: i, n });
    }
    let si = small[i] as i64;
    let c = s.conductor() as i64;
    Ok(RelativeIdeal::from_window(s, si, c, |z| s.contains(z)))
}

/// `F - E = {z : z + E ⊆ F}`, by direct scan of the candidate window.
///
/// Candidates lie in `[min F - min E, σ_F - min E)`; above that everything is
/// a member. Inside the window `z` qualifies iff `z + x ∈ F` for each finite
/// element `x` of `E` and `z + σ_E >= σ_F`.
pub fn dual(f: &RelativeIdeal, e: &RelativeIdeal) -> RelativeIdeal {
    debug_assert!(f.base == e.base, "ideals over different semigroups");
    let lo = f.least - e.least;
    let hi = f.stabilization - e.least;
    let len = (hi - lo).max(0) as usize;
    let mut bits = BitSet::full(len);
    // z + σ_E >= σ_F  <=>  index j >= σ_F - σ_E - lo
    let cut = (f.stabilization - e.stabilization - lo).clamp(0, len as i64) as usize;
    for j in 0..cut {
        bits.remove(j);
    }
    for x in e.finite_part() {
        // bits[j] &= f.contains(lo + j + x)
        bits.and_window(&f.members, lo + x - f.least, true);
    }
    RelativeIdeal::normalize(f.base.clone(), lo, bits)
}

/// `|E \ F|` for `F ⊆ E`.
pub fn length_between(e: &RelativeIdeal, f: &RelativeIdeal) -> Result<usize, IdealError> {
    if !f.is_subset_of(e) {
        return Err(IdealError::NotNested);
    }
    let hi = e.stabilization.max(f.stabilization);
    Ok(e.count_in(e.least, hi) - f.count_in(e.least, hi))
}

/// Value set of `xR : m` on the monomial ring, i.e. `(e + S) - M`.
pub fn colon_value_set_xr_m(s: &NumericalSemigroup) -> RelativeIdeal {
    let e = s.multiplicity() as i64;
    let shifted = RelativeIdeal::whole(s).shifted(e);
    let maximal = ideal_of_chain(s, 1).expect("S_1 always exists");
    dual(&shifted, &maximal)
}
