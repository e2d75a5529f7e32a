//! Bitmask subsets of an integer-indexed ground set {0, ..., m-1}.
//!
//! Ground sets of oracle-backed matroids are capped at 64 elements so a
//! subset is a single machine word. The exhaustive 2^m loops elsewhere in
//! the crate lean on this representation being cheap to copy and hash.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of {0, ..., m-1} stored as a bitmask. Bit i set means element i
/// is present. The mask does not know its ground-set size; operations that
/// need one (complement, iteration bounds) take `m` explicitly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full ground set {0, ..., m-1}.
    pub fn full(m: usize) -> Subset {
        debug_assert!(m <= 64);
        if m == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        let mut mask = 0u64;
        for e in elems {
            mask |= 1u64 << e;
        }
        Subset(mask)
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 & (1u64 << e) != 0
    }

    pub fn insert(self, e: usize) -> Subset {
        Subset(self.0 | (1u64 << e))
    }

    pub fn remove(self, e: usize) -> Subset {
        Subset(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within the ground set {0, ..., m-1}.
    pub fn complement(self, m: usize) -> Subset {
        Subset(!self.0 & Subset::full(m).0)
    }

    /// Elements in ascending index order.
    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// All 2^m subsets of the ground set, in ascending mask order.
    pub fn all(m: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(m < 64, "2^64 subsets cannot be enumerated");
        (0..(1u64 << m)).map(Subset)
    }

    /// All k-subsets of {0, ..., m-1} in ascending mask order (Gosper's hack).
    pub fn all_of_size(m: usize, k: usize) -> SizedSubsetIter {
        debug_assert!(m < 64);
        if k > m {
            SizedSubsetIter { next: None, limit: 0 }
        } else if k == 0 {
            SizedSubsetIter { next: Some(0), limit: 0 }
        } else {
            SizedSubsetIter {
                next: Some((1u64 << k) - 1),
                limit: Subset::full(m).0,
            }
        }
    }

    /// Subsets of `self`, in ascending mask order (carry-rippler trick).
    pub fn subsets(self) -> SubsetsIter {
        SubsetsIter { mask: self.0, current: Some(0) }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let e = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(e)
        }
    }
}

pub struct SizedSubsetIter {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for SizedSubsetIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        if cur > self.limit && cur != 0 {
            self.next = None;
            return None;
        }
        // Gosper's hack: next mask with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                Some((((r ^ cur) >> 2) / c) | r)
            }
        };
        Some(Subset(cur))
    }
}

pub struct SubsetsIter {
    mask: u64,
    current: Option<u64>,
}

impl Iterator for SubsetsIter {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.current?;
        self.current = {
            let next = cur.wrapping_sub(self.mask) & self.mask;
            if next == 0 {
                None
            } else {
                Some(next)
            }
        };
        Some(Subset(cur))
    }
}
