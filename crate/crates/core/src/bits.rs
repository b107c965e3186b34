//! Helpers for `u64` vertex sets.

/// A set of vertices `< 64`, one bit per vertex.
pub type VertexSet = u64;

#[inline]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub const fn contains(set: VertexSet, v: usize) -> bool {
    set & bit(v) != 0
}

/// Iterates set bits in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(VertexSet);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn iter(set: VertexSet) -> Bits {
    Bits(set)
}
