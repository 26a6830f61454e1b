//! Outcomes of the exhaustive checks, with witnesses on failure.

use std::fmt;

use crate::subset::{ElementId, Subset};

/// Identifies one checked statement.
///
/// Declaration order is the report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    // Independence axioms.
    I1,
    I2,
    I3,
    // Base axioms.
    B1,
    B2,
    // Rank axioms.
    R1,
    R2,
    R3,
    /// I1-I3 as a group.
    IndependenceAxioms,
    /// B1-B2 on the base family.
    BaseAxioms,
    /// R1-R3 as a group.
    RankAxioms,
    /// Adding elements that individually leave the rank unchanged leaves it unchanged.
    RankExtension,
    /// `r_{M/T}(X) = r_M(X ∪ T) - r_M(T)`.
    ContractionRankIdentity,
    /// `dual(dual(M)) = M`.
    DoubleDual,
    /// Pawlak approximation properties 1L..9LH.
    PawlakProperties,
    /// Independence of the induced matroid via no-full-block, via empty lower approximation, and via the engine.
    InducedIndependents,
    /// Bases of the induced matroid: one element missing from each block.
    InducedBases,
    /// Rank of the induced matroid: sum over blocks of min(|X ∩ P|, |P| - 1).
    InducedRank,
    /// Bases of the dual are the transversals of the partition.
    DualBases,
    /// Independents of the dual are the partial transversals.
    DualIndependents,
    /// Dual rank is the number of blocks met.
    DualRank,
    /// Product formulas for the sizes of the four families.
    FamilyCounts,
    /// Point and class contractions of the dual have the same independents.
    ContractionIndependents,
    /// Point and class contractions of the dual have the same bases.
    ContractionBases,
    /// Point and class contractions of the dual have the same rank on `U - RN(x)`.
    ContractionRank,
    /// Class-contraction circuits are point-contraction circuits; surplus is the loops of `RN(x) - {x}`.
    CircuitContainment,
    /// Point contraction restricted to `U - RN(x)` has the class contraction's circuits.
    CircuitRestriction,
    /// When `RN(x) = {x}` both contractions coincide.
    SingletonClass,
}

impl Check {
    pub fn id(self) -> &'static str {
        use Check::*;
        match self {
            I1 => "I1",
            I2 => "I2",
            I3 => "I3",
            B1 => "B1",
            B2 => "B2",
            R1 => "R1",
            R2 => "R2",
            R3 => "R3",
            IndependenceAxioms => "independence-axioms",
            BaseAxioms => "base-axioms",
            RankAxioms => "rank-axioms",
            RankExtension => "rank-extension",
            ContractionRankIdentity => "contraction-rank-identity",
            DoubleDual => "double-dual",
            PawlakProperties => "pawlak-properties",
            InducedIndependents => "induced-independents",
            InducedBases => "induced-bases",
            InducedRank => "induced-rank",
            DualBases => "dual-bases",
            DualIndependents => "dual-independents",
            DualRank => "dual-rank",
            FamilyCounts => "family-counts",
            ContractionIndependents => "contraction-independents",
            ContractionBases => "contraction-bases",
            ContractionRank => "contraction-rank",
            CircuitContainment => "circuit-containment",
            CircuitRestriction => "circuit-restriction",
            SingletonClass => "singleton-class",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Evidence attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The statement fails without a specific subset (e.g. ∅ missing, empty base family).
    None,
    Set(Subset),
    Pair(Subset, Subset),
    /// Exchange failure: no `y ∈ second - first` repairs `first - element`.
    Exchange {
        first: Subset,
        second: Subset,
        element: ElementId,
    },
    /// Two routes disagree on the rank of `set`.
    Rank {
        set: Subset,
        expected: usize,
        found: usize,
    },
    /// Two routes disagree on a count.
    Count {
        expected: u64,
        found: u64,
    },
}

impl Witness {
    /// Subsets mentioned by the witness, in order.
    pub fn sets(&self) -> Vec<Subset> {
        match self {
            Witness::None | Witness::Count { .. } => vec![],
            Witness::Set(s) => vec![*s],
            Witness::Pair(a, b) => vec![*a, *b],
            Witness::Exchange { first, second, .. } => vec![*first, *second],
            Witness::Rank { set, .. } => vec![*set],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub witness: Witness,
}

impl Violation {
    pub fn new(check: Check, witness: Witness) -> Self {
        Violation { check, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails", self.check)?;
        match &self.witness {
            Witness::None => Ok(()),
            Witness::Set(s) => write!(f, " at {s}"),
            Witness::Pair(a, b) => write!(f, " at ({a}, {b})"),
            Witness::Exchange {
                first,
                second,
                element,
            } => write!(f, " at ({first}, {second}, {})", element.0),
            Witness::Rank {
                set,
                expected,
                found,
            } => write!(f, " at {set}: expected rank {expected}, found {found}"),
            Witness::Count { expected, found } => {
                write!(f, ": expected {expected}, found {found}")
            }
        }
    }
}

/// Pass, or the first violation found in canonical enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn fail(check: Check, witness: Witness) -> Self {
        Verdict::Fail(Violation::new(check, witness))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }

    /// Keeps the first failure.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }
}

impl From<Option<Violation>> for Verdict {
    fn from(v: Option<Violation>) -> Self {
        match v {
            None => Verdict::Pass,
            Some(v) => Verdict::Fail(v),
        }
    }
}
