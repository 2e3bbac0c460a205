//! Vertex sets as 64-bit masks.
//!
//! Every algorithm in this crate works on subsets of `[0, n)` for `n <= 64`,
//! stored as bitmasks. The canonical total order used for all tie-breaking is
//! cardinality first, then lexicographic on the ascending label sequence; for
//! equal-size sets this is plain lexicographic order on the sorted labels.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{HgError, Result};

/// Hard cap on vertex counts; sets are single machine words.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex labels `0..n` of some hypergraph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub(crate) u64);

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(bit(v))
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<VertexSet> {
        let mut mask = 0u64;
        for v in labels {
            if v >= MAX_VERTICES {
                return Err(HgError::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            mask |= bit(v);
        }
        Ok(VertexSet(mask))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | bit(v))
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !bit(v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn min_label(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet(full_mask(n) & !self.0)
    }

    /// Ascending iterator over the member labels.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn mask(self) -> u64 {
        self.0
    }
}

/// Lexicographic order on ascending label sequences, for masks of equal
/// cardinality: the set containing the smallest differing label is smaller.
/// Reversing the bits makes that label the most significant differing bit.
#[inline]
pub(crate) fn lex_cmp_masks(a: u64, b: u64) -> Ordering {
    b.reverse_bits().cmp(&a.reverse_bits())
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| lex_cmp_masks(self.0, other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = VertexSet;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a sequence of vertex labels below {MAX_VERTICES}")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<VertexSet, A::Error> {
                let mut mask = 0u64;
                while let Some(v) = seq.next_element::<usize>()? {
                    if v >= MAX_VERTICES {
                        return Err(de::Error::custom(format!("vertex label {v} too large")));
                    }
                    mask |= bit(v);
                }
                Ok(VertexSet(mask))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// All `k`-subsets of the support mask, in lexicographic order on ascending
/// label sequences.
pub(crate) fn k_subsets(support: u64, k: usize) -> Vec<u64> {
    let labels: Vec<usize> = VertexSet(support).iter().collect();
    let n = labels.len();
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let count = crate::bounds::binom_u128(n, k);
    let mut out = Vec::with_capacity(count.min(1 << 24) as usize);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut mask = 0u64;
        for &i in &idx {
            mask |= bit(labels[i]);
        }
        out.push(mask);
        // rightmost index that can still move
        let Some(j) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            return out;
        };
        idx[j] += 1;
        for l in j + 1..k {
            idx[l] = idx[l - 1] + 1;
        }
    }
}
