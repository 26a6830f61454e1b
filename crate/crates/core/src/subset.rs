//! Dense bit-set subsets of a fixed finite universe.

use std::fmt;

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] can describe.
pub const MAX_UNIVERSE: usize = 64;

/// Index of an element of the universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

/// A subset of `{0, .., n-1}` stored as a bit pattern.
///
/// Ordering compares the bit pattern as an unsigned integer, which is the
/// canonical order used for every [`SetFamily`](crate::SetFamily).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe of {n} elements is too large");
        Subset {
            bits: 0,
            n: n as u8,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe of {n} elements is too large");
        Subset {
            bits: full_mask(n),
            n: n as u8,
        }
    }

    /// Builds a subset from a raw bit pattern. Bits at or above `n` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: n,
                max: MAX_UNIVERSE,
            });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::OutOfUniverse {
                element: 63 - (bits & !full_mask(n)).leading_zeros() as usize,
                size: n,
            });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        Subset { bits, n: n as u8 }
    }

    pub fn from_elements<I>(n: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<ElementId>,
    {
        let mut s = Subset::empty(n);
        for e in elements {
            let ElementId(i) = e.into();
            if i >= n {
                return Err(Error::OutOfUniverse {
                    element: i,
                    size: n,
                });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    pub fn singleton(n: usize, x: ElementId) -> Result<Self> {
        Subset::from_elements(n, [x])
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the universe this subset lives in.
    #[inline]
    pub fn universe_size(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        x.0 < self.universe_size() && self.bits >> x.0 & 1 == 1
    }

    #[inline]
    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn complement(&self) -> Subset {
        Subset {
            bits: !self.bits & full_mask(self.universe_size()),
            n: self.n,
        }
    }

    #[inline]
    pub fn with(&self, x: ElementId) -> Subset {
        debug_assert!(x.0 < self.universe_size());
        Subset {
            bits: self.bits | 1 << x.0,
            n: self.n,
        }
    }

    #[inline]
    pub fn without(&self, x: ElementId) -> Subset {
        Subset {
            bits: self.bits & !(1 << x.0),
            n: self.n,
        }
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    /// Every subset of `self`, in ascending bit-pattern order.
    pub fn subsets(&self) -> Subsets {
        Subsets {
            mask: self.bits,
            next: Some(0),
            n: self.n,
        }
    }

    /// Every subset of the universe of size `n`, in canonical order.
    pub fn all(n: usize) -> Subsets {
        Subset::full(n).subsets()
    }

    pub(crate) fn check_universe(&self, n: usize) -> Result<()> {
        if self.universe_size() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: self.universe_size(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.0)?;
        }
        f.write_str("}")
    }
}

pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(ElementId(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing order: `next = (cur - mask) & mask`.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
    n: u8,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Subset {
            bits: cur,
            n: self.n,
        })
    }
}
