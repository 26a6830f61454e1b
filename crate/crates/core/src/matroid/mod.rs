//! Finite matroids given by an explicit family of independent sets.

mod axioms;
mod minor;

use std::fmt;

pub use axioms::{
    check_base_axiom, check_contraction_rank, check_independence_axioms,
    check_independence_axioms_pairwise, check_rank_axioms, check_rank_extension,
};
pub use minor::Minor;

pub use crate::verdict::{Check, Verdict, Violation, Witness};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::limits::{self, MAX_MATROID_GROUND};
use crate::subset::Subset;

/// A matroid on `{0, .., n-1}` stored as its independent sets.
///
/// Every value satisfies the independence axioms; construction validates them.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    independents: SetFamily,
    // membership indexed by bit pattern
    table: Vec<bool>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.independents == other.independents
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("independents", &self.independents)
            .finish()
    }
}

pub(crate) fn membership_table(family: &SetFamily) -> Vec<bool> {
    let mut table = vec![false; 1 << family.universe_size()];
    for s in family {
        table[s.bits() as usize] = true;
    }
    table
}

/// Marks every subset of a marked set, in place.
fn close_downward(n: usize, table: &mut [bool]) {
    for mask in (1..table.len()).rev() {
        if !table[mask] {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            table[mask ^ bit] = true;
            rest ^= bit;
        }
    }
    debug_assert_eq!(table.len(), 1 << n);
}

fn family_from_table(n: usize, table: &[bool]) -> SetFamily {
    let sets = table
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(bits, _)| Subset::from_bits_unchecked(n, bits as u64))
        .collect();
    SetFamily::from_sorted(n, sets)
}

impl Matroid {
    /// Validates `independents` against I1-I3.
    pub fn new(independents: SetFamily) -> Result<Self> {
        let n = independents.universe_size();
        limits::ensure("matroid construction", n, MAX_MATROID_GROUND)?;
        if let Verdict::Fail(v) = check_independence_axioms(&independents) {
            return Err(Error::NotAMatroid(v));
        }
        Ok(Self::from_family_unchecked(independents))
    }

    pub(crate) fn from_family_unchecked(independents: SetFamily) -> Self {
        let n = independents.universe_size();
        let table = membership_table(&independents);
        Matroid {
            n,
            independents,
            table,
        }
    }

    /// The matroid whose bases are `bases`, after checking B1-B2.
    pub fn from_bases(bases: &SetFamily) -> Result<Self> {
        limits::ensure(
            "matroid construction",
            bases.universe_size(),
            MAX_MATROID_GROUND,
        )?;
        if let Verdict::Fail(v) = check_base_axiom(bases) {
            return Err(Error::BaseAxiom(v));
        }
        Ok(Self::from_bases_unchecked(bases))
    }

    pub(crate) fn from_bases_unchecked(bases: &SetFamily) -> Self {
        let n = bases.universe_size();
        let mut table = membership_table(bases);
        close_downward(n, &mut table);
        let independents = family_from_table(n, &table);
        Matroid {
            n,
            independents,
            table,
        }
    }

    /// Every subset is independent.
    pub fn free(n: usize) -> Result<Self> {
        limits::ensure("matroid construction", n, MAX_MATROID_GROUND)?;
        Ok(Self::from_bases_unchecked(&SetFamily::new(
            n,
            [Subset::full(n)],
        )?))
    }

    /// Only the empty set is independent.
    pub fn rank_zero(n: usize) -> Result<Self> {
        limits::ensure("matroid construction", n, MAX_MATROID_GROUND)?;
        Ok(Self::from_family_unchecked(SetFamily::new(
            n,
            [Subset::empty(n)],
        )?))
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn independents(&self) -> &SetFamily {
        &self.independents
    }

    pub fn is_independent(&self, x: &Subset) -> bool {
        x.universe_size() == self.n && self.table[x.bits() as usize]
    }

    /// Maximal independent sets. All have the same size.
    pub fn bases(&self) -> Result<SetFamily> {
        let sets: Vec<Subset> = self
            .independents
            .iter()
            .filter(|i| {
                i.complement()
                    .iter()
                    .all(|e| !self.table[(i.bits() | 1 << e.0) as usize])
            })
            .copied()
            .collect();
        if let Some(first) = sets.first() {
            if let Some(odd) = sets.iter().find(|b| b.len() != first.len()) {
                return Err(Error::Internal(format!(
                    "bases {first} and {odd} have different sizes"
                )));
            }
        }
        Ok(SetFamily::from_sorted(self.n, sets))
    }

    /// Minimal dependent sets, found by scanning every subset.
    pub fn circuits(&self) -> SetFamily {
        let sets = Subset::all(self.n)
            .filter(|x| !self.table[x.bits() as usize])
            .filter(|x| x.iter().all(|e| self.table[x.without(e).bits() as usize]))
            .collect();
        SetFamily::from_sorted(self.n, sets)
    }

    /// Size of the largest independent subset of `x`, by scanning the family.
    pub fn rank(&self, x: &Subset) -> Result<usize> {
        x.check_universe(self.n)?;
        Ok(self
            .independents
            .iter()
            .filter(|i| i.is_subset(x))
            .map(Subset::len)
            .max()
            .unwrap_or(0))
    }

    /// Rank by greedy augmentation in ascending element order.
    pub fn rank_greedy(&self, x: &Subset) -> Result<usize> {
        x.check_universe(self.n)?;
        Ok(self.greedy_basis(x).len())
    }

    /// A maximal independent subset of `x` built greedily in ascending order.
    pub fn greedy_basis(&self, x: &Subset) -> Subset {
        x.iter().fold(Subset::empty(self.n), |acc, e| {
            let next = acc.with(e);
            if self.table[next.bits() as usize] {
                next
            } else {
                acc
            }
        })
    }

    /// Rank of every subset, indexed by bit pattern.
    ///
    /// Uses `r(X) = |X|` for independent `X` and `max_e r(X - e)` otherwise, which
    /// is the largest independent subset for any downward-closed family.
    pub fn rank_table(&self) -> Vec<u8> {
        axioms::ranks_of(&self.table)
    }

    /// The matroid whose bases are the complements of this one's.
    pub fn dual(&self) -> Matroid {
        let bases = self
            .bases()
            .expect("validated matroid has equicardinal bases");
        Self::from_bases_unchecked(&bases.complements())
    }

    /// `M|X` on the ground set `X`, re-indexed to `0..|X|`.
    pub fn restriction(&self, x: &Subset) -> Result<Minor> {
        x.check_universe(self.n)?;
        Ok(Minor::restriction_of(self, x))
    }

    /// `M/T` on `U - T`, using the canonically first base of `M|T`.
    pub fn contraction(&self, t: &Subset) -> Result<Minor> {
        t.check_universe(self.n)?;
        let base = self.restricted_bases(t)[0];
        Ok(Minor::contraction_of(self, t, &base))
    }

    /// `M/T` using the supplied base of `M|T` (given over this matroid's ground set).
    pub fn contraction_with_base(&self, t: &Subset, base: &Subset) -> Result<Minor> {
        t.check_universe(self.n)?;
        base.check_universe(self.n)?;
        if !self.restricted_bases(t).contains(base) {
            return Err(Error::NotABase(base.to_string()));
        }
        Ok(Minor::contraction_of(self, t, base))
    }

    /// Bases of `M|T`, expressed over this matroid's ground set.
    pub fn restricted_bases(&self, t: &Subset) -> Vec<Subset> {
        self.independents
            .iter()
            .filter(|i| i.is_subset(t))
            .filter(|i| {
                t.difference(i)
                    .iter()
                    .all(|e| !self.table[(i.bits() | 1 << e.0) as usize])
            })
            .copied()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// {∅,{a},{b},{c},{a,b},{a,c},{b,c}} over {a,b,c,d}.
    fn example1() -> Matroid {
        Matroid::new(SetFamily::from_lists(
            4,
            &[&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]],
        ))
        .unwrap()
    }

    fn set(n: usize, e: &[usize]) -> Subset {
        Subset::from_elements(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn example1_structure() {
        let m = example1();
        assert_eq!(
            m.bases().unwrap(),
            SetFamily::from_lists(4, &[&[0, 1], &[0, 2], &[1, 2]])
        );
        assert_eq!(m.circuits(), SetFamily::from_lists(4, &[&[3], &[0, 1, 2]]));
        assert_eq!(m.rank(&set(4, &[0])).unwrap(), 1);
        assert_eq!(m.rank(&set(4, &[0, 1, 2])).unwrap(), 2);
        assert_eq!(m.rank(&set(4, &[0, 1, 3])).unwrap(), 2);
        assert_eq!(m.rank(&Subset::empty(4)).unwrap(), 0);
    }

    #[test]
    fn example1_circuits_are_min_of_dependents() {
        let m = example1();
        let dependents =
            SetFamily::new(4, Subset::all(4).filter(|x| !m.is_independent(x))).unwrap();
        assert_eq!(dependents.min_sets(), m.circuits());
    }

    #[test]
    fn from_bases_rebuilds_example1() {
        let bases = SetFamily::from_lists(4, &[&[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(Matroid::from_bases(&bases).unwrap(), example1());
        let zero = Matroid::from_bases(&SetFamily::from_lists(3, &[&[]])).unwrap();
        assert_eq!(zero, Matroid::rank_zero(3).unwrap());
        let free = Matroid::from_bases(&SetFamily::new(3, [Subset::full(3)]).unwrap()).unwrap();
        assert_eq!(free, Matroid::free(3).unwrap());
        assert!(matches!(
            Matroid::from_bases(&SetFamily::from_lists(3, &[&[0], &[1, 2]])),
            Err(Error::BaseAxiom(_))
        ));
    }

    #[test]
    fn degenerate_matroids() {
        let free = Matroid::free(3).unwrap();
        assert!(free.circuits().is_empty());
        for x in Subset::all(3) {
            assert_eq!(free.rank(&x).unwrap(), x.len());
        }
        let zero = Matroid::rank_zero(2).unwrap();
        assert_eq!(zero.circuits(), SetFamily::from_lists(2, &[&[0], &[1]]));
        assert_eq!(zero.bases().unwrap(), SetFamily::from_lists(2, &[&[]]));
        assert_eq!(free.dual(), Matroid::rank_zero(3).unwrap());
        assert_eq!(Matroid::rank_zero(3).unwrap().dual(), free);
    }

    #[test]
    fn example1_dual_bases() {
        let d = example1().dual();
        assert_eq!(
            d.bases().unwrap(),
            SetFamily::from_lists(4, &[&[2, 3], &[1, 3], &[0, 3]])
        );
        assert_eq!(d.dual(), example1());
    }

    #[test]
    fn invalid_family_rejected() {
        let f = SetFamily::from_lists(2, &[&[], &[0, 1]]);
        assert!(matches!(Matroid::new(f), Err(Error::NotAMatroid(_))));
        assert!(matches!(
            Matroid::free(21),
            Err(Error::CapExceeded { cap: 20, .. })
        ));
    }

    #[test]
    fn rank_routes_agree_on_example1() {
        let m = example1();
        let table = m.rank_table();
        for x in Subset::all(4) {
            let r = m.rank(&x).unwrap();
            assert_eq!(m.rank_greedy(&x).unwrap(), r);
            assert_eq!(table[x.bits() as usize] as usize, r);
        }
    }

    #[test]
    fn rank_universe_mismatch() {
        assert!(matches!(
            example1().rank(&Subset::empty(3)),
            Err(Error::UniverseMismatch { .. })
        ));
    }
}
