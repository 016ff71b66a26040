//! Fixed-length bitset used for membership windows.
//!
//! Bits past `len` in the last word are always zero, so derived equality and
//! hashing compare sets, not storage.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = BitSet {
            words: vec![!0; len.div_ceil(WORD)],
            len,
        };
        set.clear_tail();
        set
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut set = BitSet::new(len);
        for i in 0..len {
            if f(i) {
                set.insert(i);
            }
        }
        set
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits in `[lo, hi)`, clamped to the set's length.
    pub fn count_range(&self, lo: usize, hi: usize) -> usize {
        let hi = hi.min(self.len);
        if lo >= hi {
            return 0;
        }
        let mut total = 0;
        let mut i = lo;
        while i < hi {
            let take = (hi - i).min(WORD);
            let w = self.word_at(i as i64, false);
            let mask = if take == WORD { !0 } else { (1u64 << take) - 1 };
            total += (w & mask).count_ones() as usize;
            i += take;
        }
        total
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + t)
            })
        })
    }

    /// Index of the highest clear bit, if any.
    pub fn last_zero(&self) -> Option<usize> {
        (0..self.len).rev().find(|&i| !self.get(i))
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    /// Extended read: indices below zero read as `false`, indices at or past
    /// `len` read as `tail`.
    #[inline]
    pub fn get_ext(&self, i: i64, tail: bool) -> bool {
        if i < 0 {
            false
        } else if i as usize >= self.len {
            tail
        } else {
            self.get(i as usize)
        }
    }

    /// The 64 extended bits starting at `start` (bit `t` of the result is
    /// `get_ext(start + t, tail)`).
    pub fn word_at(&self, start: i64, tail: bool) -> u64 {
        if start >= 0 && (start as usize) + WORD <= self.len {
            let s = start as usize;
            let (wi, off) = (s / WORD, s % WORD);
            let lo = self.words[wi] >> off;
            if off == 0 {
                lo
            } else {
                lo | (self.words[wi + 1] << (WORD - off))
            }
        } else {
            let mut w = 0u64;
            for t in 0..WORD {
                if self.get_ext(start + t as i64, tail) {
                    w |= 1 << t;
                }
            }
            w
        }
    }

    /// `self[j] &= src.get_ext(start + j, tail)` for every `j < len`.
    pub fn and_window(&mut self, src: &BitSet, start: i64, tail: bool) {
        for wi in 0..self.words.len() {
            self.words[wi] &= src.word_at(start + (wi * WORD) as i64, tail);
        }
        self.clear_tail();
    }

    /// Drops every index `>= len`.
    pub fn truncate(&mut self, len: usize) {
        if len >= self.len {
            return;
        }
        self.len = len;
        self.words.truncate(len.div_ceil(WORD));
        self.clear_tail();
    }

    /// Removes the first `k` indices, shifting the rest down.
    pub fn drop_front(&mut self, k: usize) {
        if k == 0 {
            return;
        }
        if k >= self.len {
            *self = BitSet::new(0);
            return;
        }
        let len = self.len - k;
        let mut out = BitSet::new(len);
        for wi in 0..out.words.len() {
            out.words[wi] = self.word_at((k + wi * WORD) as i64, false);
        }
        out.clear_tail();
        *self = out;
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSet[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_has_clean_tail() {
        let a = BitSet::full(70);
        assert_eq!(a.count_ones(), 70);
        let mut b = BitSet::new(70);
        (0..70).for_each(|i| b.insert(i));
        assert_eq!(a, b);
    }

    #[test]
    fn last_zero_and_drop_front() {
        let mut s = BitSet::from_fn(10, |i| i != 3 && i != 7);
        assert_eq!(s.last_zero(), Some(7));
        s.drop_front(4);
        assert_eq!(s.len(), 6);
        assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![0, 1, 2, 4, 5]);
    }

    proptest! {
        #[test]
        fn and_window_matches_bitwise(
            bits in prop::collection::vec(any::<bool>(), 0..200),
            src in prop::collection::vec(any::<bool>(), 0..200),
            start in -80i64..250,
            tail in any::<bool>(),
        ) {
            let mut a = BitSet::from_fn(bits.len(), |i| bits[i]);
            let s = BitSet::from_fn(src.len(), |i| src[i]);
            a.and_window(&s, start, tail);
            for j in 0..bits.len() {
                let k = start + j as i64;
                let expect = bits[j] && if k < 0 { false } else if k as usize >= src.len() { tail } else { src[k as usize] };
                prop_assert_eq!(a.get(j), expect);
            }
        }

        #[test]
        fn count_range_matches_naive(bits in prop::collection::vec(any::<bool>(), 0..200), lo in 0usize..220, hi in 0usize..220) {
            let a = BitSet::from_fn(bits.len(), |i| bits[i]);
            let naive = (lo..hi.min(bits.len())).filter(|&i| bits[i]).count();
            prop_assert_eq!(a.count_range(lo, hi), naive);
        }
    }
}
