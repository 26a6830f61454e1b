//! The matroid induced by the lower approximation operator, and its dual.
//!
//! For a partition `U/R`, a set is independent in `M(R)` when its lower
//! approximation is empty, i.e. it contains no whole block. The dual `M*(R)` is
//! the partition matroid of capacity one: bases are transversals and independent
//! sets are partial transversals.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::limits::{self, MAX_MATROID_GROUND};
use crate::matroid::{check_base_axiom, Matroid};
use crate::rough::Partition;
use crate::subset::Subset;
use crate::verdict::{Check, Verdict, Witness};

/// True iff no block of `p` lies inside `x`.
pub fn independent_closed_form(p: &Partition, x: &Subset) -> Result<bool> {
    x.check_universe(p.size())?;
    Ok(p.blocks().iter().all(|b| !b.is_subset(x)))
}

/// `Σ_P min(|X ∩ P|, |P| - 1)`.
pub fn primal_rank_closed_form(p: &Partition, x: &Subset) -> Result<usize> {
    x.check_universe(p.size())?;
    Ok(p.blocks()
        .iter()
        .map(|b| b.intersection(x).len().min(b.len() - 1))
        .sum())
}

/// Number of blocks meeting `x`.
pub fn dual_rank_closed_form(p: &Partition, x: &Subset) -> Result<usize> {
    x.check_universe(p.size())?;
    Ok(p.blocks().iter().filter(|b| !b.is_disjoint(x)).count())
}

/// Every set built by choosing, for each block, one of `options(block)`.
fn block_products(p: &Partition, options: impl Fn(&Subset) -> Vec<Subset>) -> SetFamily {
    let n = p.size();
    let mut acc = vec![Subset::empty(n)];
    for block in p.blocks() {
        let choices = options(block);
        acc = acc
            .iter()
            .flat_map(|s| choices.iter().map(move |c| s.union(c)))
            .collect();
    }
    SetFamily::new(n, acc).expect("blocks share the universe")
}

/// Sets missing exactly one element from each block.
pub fn bases_closed_form(p: &Partition) -> Result<SetFamily> {
    limits::ensure("closed-form bases", p.size(), MAX_MATROID_GROUND)?;
    Ok(block_products(p, |b| {
        b.iter().map(|e| b.without(e)).collect()
    }))
}

/// Sets meeting every block in exactly one element.
pub fn transversals(p: &Partition) -> Result<SetFamily> {
    limits::ensure("transversal enumeration", p.size(), MAX_MATROID_GROUND)?;
    let n = p.size();
    Ok(block_products(p, |b| {
        b.iter().map(|e| Subset::singleton(n, e).unwrap()).collect()
    }))
}

/// Sets meeting every block in at most one element.
pub fn partial_transversals(p: &Partition) -> Result<SetFamily> {
    limits::ensure("transversal enumeration", p.size(), MAX_MATROID_GROUND)?;
    let n = p.size();
    Ok(block_products(p, |b| {
        std::iter::once(Subset::empty(n))
            .chain(b.iter().map(|e| Subset::singleton(n, e).unwrap()))
            .collect()
    }))
}

/// Expected family sizes: `|I(R)|, |B(R)|, |I*(R)|, |B*(R)|`.
pub fn expected_counts(p: &Partition) -> [u64; 4] {
    let sizes = p.blocks().iter().map(|b| b.len() as u64);
    let independents = sizes.clone().map(|s| (1u64 << s) - 1).product();
    let bases = sizes.clone().product();
    let dual_independents = sizes.map(|s| s + 1).product();
    [independents, bases, dual_independents, bases]
}

fn first_difference(a: &SetFamily, b: &SetFamily) -> Option<Subset> {
    let left = a.difference(b);
    let right = b.difference(a);
    match (left.iter().next(), right.iter().next()) {
        (Some(l), Some(r)) => Some(*l.min(r)),
        (Some(s), None) | (None, Some(s)) => Some(*s),
        (None, None) => None,
    }
}

pub(crate) fn family_verdict(check: Check, expected: &SetFamily, found: &SetFamily) -> Verdict {
    match first_difference(expected, found) {
        None => Verdict::Pass,
        Some(s) => Verdict::fail(check, Witness::Set(s)),
    }
}

/// `M(R)`: independent sets are the sets with empty lower approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatroid {
    partition: Partition,
    matroid: Matroid,
}

impl InducedMatroid {
    /// Builds the family from the no-full-block test, checks it against the
    /// lower approximation on every subset, then validates it as a matroid.
    pub fn new(partition: Partition) -> Result<Self> {
        let n = partition.size();
        limits::ensure("induced matroid", n, MAX_MATROID_GROUND)?;
        let mut sets = Vec::new();
        for x in Subset::all(n) {
            let closed = independent_closed_form(&partition, &x)?;
            if closed != partition.lower_unchecked(&x).is_empty() {
                return Err(Error::Internal(format!(
                    "block test and lower approximation disagree on {x}"
                )));
            }
            if closed {
                sets.push(x);
            }
        }
        let matroid = Matroid::new(SetFamily::from_sorted(n, sets))?;
        Ok(InducedMatroid { partition, matroid })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// `M*(R)`, built by the engine's dual and checked against the transversal forms.
    pub fn dual(&self) -> Result<DualInducedMatroid> {
        let matroid = self.matroid.dual();
        let engine_bases = matroid.bases()?;
        let complements = self.matroid.bases()?.complements();
        let closed_bases = transversals(&self.partition)?;
        if engine_bases != complements || engine_bases != closed_bases {
            return Err(Error::Internal(
                "dual bases differ from the transversals of the partition".into(),
            ));
        }
        if matroid.independents() != &partial_transversals(&self.partition)? {
            return Err(Error::Internal(
                "dual independents differ from the partial transversals".into(),
            ));
        }
        Ok(DualInducedMatroid {
            partition: self.partition.clone(),
            matroid,
        })
    }

    /// No-full-block test, lower approximation and engine membership agree everywhere.
    pub fn check_independents(&self) -> Verdict {
        for x in Subset::all(self.partition.size()) {
            let closed = self.partition.blocks().iter().all(|b| !b.is_subset(&x));
            let by_lower = self.partition.lower_unchecked(&x).is_empty();
            if closed != by_lower || closed != self.matroid.is_independent(&x) {
                return Verdict::fail(Check::InducedIndependents, Witness::Set(x));
            }
        }
        Verdict::Pass
    }

    pub fn check_bases(&self) -> Result<Verdict> {
        Ok(family_verdict(
            Check::InducedBases,
            &bases_closed_form(&self.partition)?,
            &self.matroid.bases()?,
        ))
    }

    /// Closed-form rank against the engine on every subset.
    pub fn check_rank(&self) -> Result<Verdict> {
        let ranks = self.matroid.rank_table();
        for x in Subset::all(self.partition.size()) {
            let expected = primal_rank_closed_form(&self.partition, &x)?;
            let found = ranks[x.bits() as usize] as usize;
            if expected != found {
                return Ok(Verdict::fail(
                    Check::InducedRank,
                    Witness::Rank {
                        set: x,
                        expected,
                        found,
                    },
                ));
            }
        }
        Ok(Verdict::Pass)
    }

    /// Sizes of `I(R)`, `B(R)`, `I*(R)`, `B*(R)` against the product formulas.
    pub fn check_counts(&self, dual: &DualInducedMatroid) -> Result<Verdict> {
        let found = [
            self.matroid.independents().len() as u64,
            self.matroid.bases()?.len() as u64,
            dual.matroid.independents().len() as u64,
            dual.matroid.bases()?.len() as u64,
        ];
        let expected = expected_counts(&self.partition);
        Ok(expected.iter().zip(found).find(|(e, f)| **e != *f).map_or(
            Verdict::Pass,
            |(&expected, found)| {
                Verdict::fail(Check::FamilyCounts, Witness::Count { expected, found })
            },
        ))
    }
}

/// `M*(R)`: the dual of the induced matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualInducedMatroid {
    partition: Partition,
    matroid: Matroid,
}

impl DualInducedMatroid {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// Transversals equal the engine's dual bases and satisfy the base axioms.
    pub fn check_bases(&self, primal: &InducedMatroid) -> Result<Verdict> {
        let closed = transversals(&self.partition)?;
        let engine = self.matroid.bases()?;
        let complements = primal.matroid.bases()?.complements();
        Ok(family_verdict(Check::DualBases, &closed, &engine)
            .and_then(|| family_verdict(Check::DualBases, &complements, &engine))
            .and_then(|| match check_base_axiom(&closed) {
                Verdict::Pass => Verdict::Pass,
                Verdict::Fail(v) => Verdict::fail(Check::DualBases, v.witness),
            }))
    }

    pub fn check_independents(&self) -> Result<Verdict> {
        Ok(family_verdict(
            Check::DualIndependents,
            &partial_transversals(&self.partition)?,
            self.matroid.independents(),
        ))
    }

    /// Number of blocks met against the engine rank on every subset.
    pub fn check_rank(&self) -> Result<Verdict> {
        let ranks = self.matroid.rank_table();
        for x in Subset::all(self.partition.size()) {
            let expected = dual_rank_closed_form(&self.partition, &x)?;
            let found = ranks[x.bits() as usize] as usize;
            if expected != found {
                return Ok(Verdict::fail(
                    Check::DualRank,
                    Witness::Rank {
                        set: x,
                        expected,
                        found,
                    },
                ));
            }
        }
        Ok(Verdict::Pass)
    }
}
