//! Pawlak approximation spaces: a finite universe with an equivalence relation
//! stored as its quotient partition.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{self, Caps};
use crate::subset::{ElementId, Subset, MAX_UNIVERSE};

/// A nonempty finite universe with optional display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    size: usize,
    names: Option<Vec<String>>,
}

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size,
                max: MAX_UNIVERSE,
            });
        }
        Ok(Universe { size, names: None })
    }

    pub fn with_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut u = Universe::new(names.len())?;
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        u.names = Some(names);
        Ok(u)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`; its index when the universe is unnamed.
    pub fn name(&self, x: ElementId) -> String {
        match &self.names {
            Some(names) => names[x.0].clone(),
            None => x.0.to_string(),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<ElementId> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == name).map(ElementId),
            None => name.parse().ok().filter(|&i| i < self.size).map(ElementId),
        }
    }

    /// Member names separated by spaces in universe order; `∅` for the empty set.
    pub fn format(&self, s: &Subset) -> String {
        if s.is_empty() {
            return "∅".to_owned();
        }
        s.iter().map(|e| self.name(e)).collect::<Vec<_>>().join(" ")
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.size)
    }

    pub(crate) fn check_element(&self, x: ElementId) -> Result<()> {
        if x.0 >= self.size {
            return Err(Error::OutOfUniverse {
                element: x.0,
                size: self.size,
            });
        }
        Ok(())
    }
}

/// The quotient `U/R` of an equivalence relation.
///
/// Blocks are sorted by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn from_blocks(
        universe: Universe,
        blocks: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        let n = universe.size();
        let mut blocks: Vec<Subset> = blocks.into_iter().collect();
        let mut covered = Subset::empty(n);
        for b in &blocks {
            b.check_universe(n)?;
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
            let shared = b.intersection(&covered);
            if let Some(e) = shared.iter().next() {
                return Err(Error::Overlap { element: e.0 });
            }
            covered = covered.union(b);
        }
        if let Some(e) = covered.complement().iter().next() {
            return Err(Error::Coverage { element: e.0 });
        }
        blocks.sort_unstable_by_key(|b| b.bits().trailing_zeros());
        let mut block_of = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for e in b.iter() {
                block_of[e.0] = i;
            }
        }
        Ok(Partition {
            universe,
            blocks,
            block_of,
        })
    }

    /// Builds a partition from per-block element index lists.
    pub fn from_index_blocks(universe: Universe, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = universe.size();
        let subsets = blocks
            .iter()
            .map(|b| {
                let mut s = Subset::empty(n);
                for &e in b {
                    if e >= n {
                        return Err(Error::OutOfUniverse {
                            element: e,
                            size: n,
                        });
                    }
                    if s.contains(ElementId(e)) {
                        return Err(Error::Overlap { element: e });
                    }
                    s = s.with(ElementId(e));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(universe, subsets)
    }

    /// Every element in its own block.
    pub fn identity(universe: Universe) -> Self {
        let n = universe.size();
        let blocks = (0..n).map(|i| Subset::singleton(n, ElementId(i)).unwrap());
        Partition::from_blocks(universe, blocks).expect("singletons partition the universe")
    }

    /// A single block holding the whole universe.
    pub fn universal(universe: Universe) -> Self {
        let full = universe.full();
        Partition::from_blocks(universe, [full]).expect("one block covers the universe")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.size()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_index(&self, x: ElementId) -> Result<usize> {
        self.universe.check_element(x)?;
        Ok(self.block_of[x.0])
    }

    /// `RN(x)`: the block containing `x`.
    pub fn equivalence_class(&self, x: ElementId) -> Result<Subset> {
        Ok(self.blocks[self.block_index(x)?])
    }

    /// Union of the blocks contained in `x`.
    pub fn lower_approximation(&self, x: &Subset) -> Result<Subset> {
        x.check_universe(self.size())?;
        Ok(self.lower_unchecked(x))
    }

    /// Union of the blocks meeting `x`.
    pub fn upper_approximation(&self, x: &Subset) -> Result<Subset> {
        x.check_universe(self.size())?;
        Ok(self.upper_unchecked(x))
    }

    /// Lower approximation evaluated element by element: `{u : RN(u) ⊆ X}`.
    pub fn lower_approximation_by_elements(&self, x: &Subset) -> Result<Subset> {
        x.check_universe(self.size())?;
        let members = (0..self.size())
            .map(ElementId)
            .filter(|&u| self.blocks[self.block_of[u.0]].is_subset(x));
        Subset::from_elements(self.size(), members)
    }

    /// Upper approximation evaluated element by element: `{u : RN(u) ∩ X ≠ ∅}`.
    pub fn upper_approximation_by_elements(&self, x: &Subset) -> Result<Subset> {
        x.check_universe(self.size())?;
        let members = (0..self.size())
            .map(ElementId)
            .filter(|&u| !self.blocks[self.block_of[u.0]].is_disjoint(x));
        Subset::from_elements(self.size(), members)
    }

    pub(crate) fn lower_unchecked(&self, x: &Subset) -> Subset {
        self.blocks
            .iter()
            .filter(|b| b.is_subset(x))
            .fold(Subset::empty(self.size()), |acc, b| acc.union(b))
    }

    pub(crate) fn upper_unchecked(&self, x: &Subset) -> Subset {
        self.blocks
            .iter()
            .filter(|b| !b.is_disjoint(x))
            .fold(Subset::empty(self.size()), |acc, b| acc.union(b))
    }

    /// Exhaustively checks the sixteen Pawlak properties.
    ///
    /// Pair properties (4L, 4H, 6L, 6H) are skipped when the universe exceeds
    /// `caps.pawlak_pairs`; the whole check refuses universes beyond
    /// `caps.pawlak_single`.
    pub fn verify_pawlak_properties(&self, caps: &Caps) -> Result<PawlakReport> {
        let n = self.size();
        limits::ensure("Pawlak property check", n, caps.pawlak_single)?;
        let with_pairs = n <= caps.pawlak_pairs;
        let mut report = PawlakReport::default();
        for prop in PawlakProperty::ALL {
            if prop.is_pairwise() && !with_pairs {
                report.skipped.push(prop);
                continue;
            }
            report.checked.push(prop);
            if report.violation.is_none() {
                report.violation = self.find_violation(prop);
            }
        }
        Ok(report)
    }

    fn find_violation(&self, prop: PawlakProperty) -> Option<PawlakViolation> {
        use PawlakProperty::*;
        let n = self.size();
        let lo = |x: &Subset| self.lower_unchecked(x);
        let up = |x: &Subset| self.upper_unchecked(x);
        let fail = |x: Subset, y: Option<Subset>| {
            Some(PawlakViolation {
                property: prop,
                x,
                y,
            })
        };
        let u = Subset::full(n);
        let empty = Subset::empty(n);
        match prop {
            LowerOfUniverse if lo(&u) != u => return fail(u, None),
            UpperOfUniverse if up(&u) != u => return fail(u, None),
            LowerOfEmpty if lo(&empty) != empty => return fail(empty, None),
            UpperOfEmpty if up(&empty) != empty => return fail(empty, None),
            LowerOfUniverse | UpperOfUniverse | LowerOfEmpty | UpperOfEmpty => return None,
            _ => {}
        }
        if prop.is_pairwise() {
            for y in Subset::all(n) {
                let xs: Box<dyn Iterator<Item = Subset>> = match prop {
                    LowerMonotone | UpperMonotone => Box::new(y.subsets()),
                    _ => Box::new(Subset::all(n)),
                };
                for x in xs {
                    let ok = match prop {
                        LowerMeet => lo(&x.intersection(&y)) == lo(&x).intersection(&lo(&y)),
                        UpperJoin => up(&x.union(&y)) == up(&x).union(&up(&y)),
                        LowerMonotone => lo(&x).is_subset(&lo(&y)),
                        UpperMonotone => up(&x).is_subset(&up(&y)),
                        _ => unreachable!(),
                    };
                    if !ok {
                        return fail(x, Some(y));
                    }
                }
            }
            return None;
        }
        for x in Subset::all(n) {
            let ok = match prop {
                LowerContracts => lo(&x).is_subset(&x),
                UpperExpands => x.is_subset(&up(&x)),
                LowerIdempotent => lo(&lo(&x)) == lo(&x),
                UpperIdempotent => up(&up(&x)) == up(&x),
                LowerComplementFixed => {
                    let c = lo(&x).complement();
                    lo(&c) == c
                }
                UpperComplementFixed => {
                    let c = up(&x).complement();
                    up(&c) == c
                }
                Duality => lo(&x.complement()) == up(&x).complement(),
                LowerWithinUpper => lo(&x).is_subset(&up(&x)),
                _ => unreachable!(),
            };
            if !ok {
                return fail(x, None);
            }
        }
        None
    }
}

/// The sixteen classical properties of Pawlak approximations, in label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PawlakProperty {
    /// 1L: lower(U) = U
    LowerOfUniverse,
    /// 1H: upper(U) = U
    UpperOfUniverse,
    /// 2L: lower(∅) = ∅
    LowerOfEmpty,
    /// 2H: upper(∅) = ∅
    UpperOfEmpty,
    /// 3L: lower(X) ⊆ X
    LowerContracts,
    /// 3H: X ⊆ upper(X)
    UpperExpands,
    /// 4L: lower(X ∩ Y) = lower(X) ∩ lower(Y)
    LowerMeet,
    /// 4H: upper(X ∪ Y) = upper(X) ∪ upper(Y)
    UpperJoin,
    /// 5L
    LowerIdempotent,
    /// 5H
    UpperIdempotent,
    /// 6L: X ⊆ Y implies lower(X) ⊆ lower(Y)
    LowerMonotone,
    /// 6H
    UpperMonotone,
    /// 7L: lower(lower(X)^c) = lower(X)^c
    LowerComplementFixed,
    /// 7H
    UpperComplementFixed,
    /// 8LH: lower(X^c) = upper(X)^c
    Duality,
    /// 9LH: lower(X) ⊆ upper(X)
    LowerWithinUpper,
}

impl PawlakProperty {
    pub const ALL: [PawlakProperty; 16] = {
        use PawlakProperty::*;
        [
            LowerOfUniverse,
            UpperOfUniverse,
            LowerOfEmpty,
            UpperOfEmpty,
            LowerContracts,
            UpperExpands,
            LowerMeet,
            UpperJoin,
            LowerIdempotent,
            UpperIdempotent,
            LowerMonotone,
            UpperMonotone,
            LowerComplementFixed,
            UpperComplementFixed,
            Duality,
            LowerWithinUpper,
        ]
    };

    pub fn label(self) -> &'static str {
        use PawlakProperty::*;
        match self {
            LowerOfUniverse => "1L",
            UpperOfUniverse => "1H",
            LowerOfEmpty => "2L",
            UpperOfEmpty => "2H",
            LowerContracts => "3L",
            UpperExpands => "3H",
            LowerMeet => "4L",
            UpperJoin => "4H",
            LowerIdempotent => "5L",
            UpperIdempotent => "5H",
            LowerMonotone => "6L",
            UpperMonotone => "6H",
            LowerComplementFixed => "7L",
            UpperComplementFixed => "7H",
            Duality => "8LH",
            LowerWithinUpper => "9LH",
        }
    }

    pub fn is_pairwise(self) -> bool {
        use PawlakProperty::*;
        matches!(self, LowerMeet | UpperJoin | LowerMonotone | UpperMonotone)
    }
}

impl fmt::Display for PawlakProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PawlakViolation {
    pub property: PawlakProperty,
    pub x: Subset,
    pub y: Option<Subset>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PawlakReport {
    pub checked: Vec<PawlakProperty>,
    pub skipped: Vec<PawlakProperty>,
    pub violation: Option<PawlakViolation>,
}

impl PawlakReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example2() -> Partition {
        let u = Universe::with_names(["a", "b", "c", "d", "e"]).unwrap();
        Partition::from_index_blocks(u, &[vec![0, 1], vec![2, 3, 4]]).unwrap()
    }

    fn set(n: usize, e: &[usize]) -> Subset {
        Subset::from_elements(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let u2 = Universe::with_names(["a", "b"]).unwrap();
        assert_eq!(
            Partition::from_index_blocks(u2.clone(), &[vec![0, 1], vec![1]]),
            Err(Error::Overlap { element: 1 })
        );
        assert_eq!(
            Partition::from_index_blocks(u2.clone(), &[vec![0]]),
            Err(Error::Coverage { element: 1 })
        );
        assert_eq!(
            Partition::from_index_blocks(u2, &[vec![0, 1], vec![]]),
            Err(Error::EmptyBlock)
        );
        assert_eq!(Universe::new(0), Err(Error::EmptyUniverse));
        assert_eq!(
            Universe::with_names(Vec::<String>::new()),
            Err(Error::EmptyUniverse)
        );
        assert_eq!(
            Universe::with_names(["a", "a"]),
            Err(Error::DuplicateName("a".into()))
        );
    }

    #[test]
    fn blocks_sorted_by_minimum() {
        let u = Universe::new(5).unwrap();
        let p = Partition::from_index_blocks(u, &[vec![4, 2], vec![3], vec![1, 0]]).unwrap();
        let mins: Vec<u32> = p
            .blocks()
            .iter()
            .map(|b| b.bits().trailing_zeros())
            .collect();
        assert_eq!(mins, vec![0, 2, 3]);
    }

    #[test]
    fn singleton_universe() {
        let p = Partition::from_index_blocks(Universe::new(1).unwrap(), &[vec![0]]).unwrap();
        assert_eq!(p.blocks().len(), 1);
        assert!(p
            .verify_pawlak_properties(&Caps::default())
            .unwrap()
            .passed());
    }

    #[test]
    fn equivalence_classes() {
        let p = example2();
        assert_eq!(
            p.equivalence_class(ElementId(2)).unwrap(),
            set(5, &[2, 3, 4])
        );
        assert!(matches!(
            p.equivalence_class(ElementId(5)),
            Err(Error::OutOfUniverse { .. })
        ));
        let id = Partition::identity(Universe::new(3).unwrap());
        assert_eq!(id.equivalence_class(ElementId(0)).unwrap(), set(3, &[0]));
        let all = Partition::universal(Universe::new(3).unwrap());
        assert_eq!(
            all.equivalence_class(ElementId(1)).unwrap(),
            Subset::full(3)
        );
    }

    #[test]
    fn approximations_on_example() {
        let p = example2();
        assert_eq!(
            p.lower_approximation(&set(5, &[0, 1, 2])).unwrap(),
            set(5, &[0, 1])
        );
        assert_eq!(
            p.upper_approximation(&set(5, &[0, 2])).unwrap(),
            Subset::full(5)
        );
        assert_eq!(
            p.lower_approximation(&Subset::full(5)).unwrap(),
            Subset::full(5)
        );
        assert_eq!(
            p.upper_approximation(&Subset::empty(5)).unwrap(),
            Subset::empty(5)
        );
        assert_eq!(
            p.lower_approximation(&Subset::empty(4)),
            Err(Error::UniverseMismatch {
                expected: 5,
                found: 4
            })
        );
    }

    #[test]
    fn pawlak_on_example_and_extremes() {
        let caps = Caps::default();
        let report = example2().verify_pawlak_properties(&caps).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked.len(), 16);

        let id = Partition::identity(Universe::new(4).unwrap());
        assert!(id.verify_pawlak_properties(&caps).unwrap().passed());
        for x in Subset::all(4) {
            assert_eq!(id.lower_approximation(&x).unwrap(), x);
            assert_eq!(id.upper_approximation(&x).unwrap(), x);
        }

        let one = Partition::universal(Universe::new(4).unwrap());
        assert!(one.verify_pawlak_properties(&caps).unwrap().passed());
        for x in Subset::all(4).filter(|x| *x != Subset::full(4)) {
            assert!(one.lower_approximation(&x).unwrap().is_empty());
        }
    }

    #[test]
    fn pair_properties_skipped_above_pair_cap() {
        let p = Partition::identity(Universe::new(11).unwrap());
        let report = p.verify_pawlak_properties(&Caps::default()).unwrap();
        assert_eq!(report.skipped.len(), 4);
        assert_eq!(report.checked.len(), 12);
        let big = Partition::identity(Universe::new(17).unwrap());
        assert!(matches!(
            big.verify_pawlak_properties(&Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
    }
}
