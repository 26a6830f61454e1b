use std::fmt;

use crate::error::Result;
use crate::subset::Subset;

/// A duplicate-free family of subsets kept in canonical (ascending bit-pattern) order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    sets: Vec<Subset>,
}

impl SetFamily {
    pub fn empty(n: usize) -> Self {
        SetFamily {
            n,
            sets: Vec::new(),
        }
    }

    /// Sorts and deduplicates `sets`. Every member must live in a universe of size `n`.
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, sets: I) -> Result<Self> {
        let mut v: Vec<Subset> = sets.into_iter().collect();
        for s in &v {
            s.check_universe(n)?;
        }
        v.sort_unstable();
        v.dedup();
        Ok(SetFamily { n, sets: v })
    }

    /// Caller guarantees `sets` is sorted, duplicate-free and over `n`.
    pub(crate) fn from_sorted(n: usize, sets: Vec<Subset>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(sets.iter().all(|s| s.universe_size() == n));
        SetFamily { n, sets }
    }

    /// Convenience constructor from element-index lists; panics on bad input.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Self {
        let sets = lists
            .iter()
            .map(|l| Subset::from_elements(n, l.iter().copied()).expect("element out of range"));
        SetFamily::new(n, sets).expect("universe mismatch")
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.sets
    }

    pub fn is_subfamily(&self, other: &SetFamily) -> bool {
        self.sets.iter().all(|s| other.contains(s))
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &SetFamily) -> SetFamily {
        let sets = self
            .sets
            .iter()
            .filter(|s| !other.contains(s))
            .copied()
            .collect();
        SetFamily::from_sorted(self.n, sets)
    }

    /// Inclusion-maximal members.
    pub fn max_sets(&self) -> SetFamily {
        let sets = self
            .sets
            .iter()
            .filter(|x| !self.sets.iter().any(|y| y != *x && x.is_subset(y)))
            .copied()
            .collect();
        SetFamily::from_sorted(self.n, sets)
    }

    /// Inclusion-minimal members.
    pub fn min_sets(&self) -> SetFamily {
        let sets = self
            .sets
            .iter()
            .filter(|x| !self.sets.iter().any(|y| y != *x && y.is_subset(x)))
            .copied()
            .collect();
        SetFamily::from_sorted(self.n, sets)
    }

    /// `{U - X : X in self}`.
    pub fn complements(&self) -> SetFamily {
        let sets = self.sets.iter().map(Subset::complement);
        SetFamily::new(self.n, sets).expect("complements share the universe")
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sets.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_dedups() {
        let f = SetFamily::from_lists(3, &[&[2], &[0, 1], &[2], &[]]);
        let bits: Vec<u64> = f.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0, 3, 4]);
    }

    #[test]
    fn max_of_mixed_family() {
        // {{a},{a,b},{c}} -> {{a,b},{c}}
        let f = SetFamily::from_lists(3, &[&[0], &[0, 1], &[2]]);
        assert_eq!(f.max_sets(), SetFamily::from_lists(3, &[&[0, 1], &[2]]));
        let only_empty = SetFamily::from_lists(3, &[&[]]);
        assert_eq!(only_empty.max_sets(), only_empty);
        assert!(SetFamily::empty(3).max_sets().is_empty());
    }

    #[test]
    fn min_of_mixed_family() {
        // {{d},{a,b,c},{a,d}} -> {{d},{a,b,c}}
        let f = SetFamily::from_lists(4, &[&[3], &[0, 1, 2], &[0, 3]]);
        assert_eq!(f.min_sets(), SetFamily::from_lists(4, &[&[3], &[0, 1, 2]]));
        let f = SetFamily::from_lists(2, &[&[], &[0]]);
        assert_eq!(f.min_sets(), SetFamily::from_lists(2, &[&[]]));
    }

    #[test]
    fn mismatched_universe_rejected() {
        let s = Subset::empty(4);
        assert!(SetFamily::new(3, [s]).is_err());
    }
}
