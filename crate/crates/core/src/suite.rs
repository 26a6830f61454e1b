//! Runs every check on one instance and collects a deterministic report.

use std::collections::BTreeSet;

use crate::contraction::ContractionPair;
use crate::error::Result;
use crate::induced::{DualInducedMatroid, InducedMatroid};
use crate::instance;
use crate::limits::{self, Caps};
use crate::matroid::{
    check_base_axiom, check_contraction_rank, check_independence_axioms, check_rank_axioms,
    check_rank_extension, Matroid,
};
use crate::rough::{Partition, Universe};
use crate::subset::{ElementId, Subset};
use crate::verdict::{Check, Verdict, Violation, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Primal,
    Dual,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Primal => "primal",
            Side::Dual => "dual",
        }
    }
}

/// What a report row is about.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Instance,
    Matroid(Side),
    Element(ElementId),
    /// Contraction of the primal or dual matroid by a set.
    Contracted {
        side: Side,
        by: Subset,
    },
}

impl Subject {
    pub fn describe(&self, universe: &Universe) -> String {
        match self {
            Subject::Instance => "instance".to_owned(),
            Subject::Matroid(side) => side.name().to_owned(),
            Subject::Element(x) => format!("x={}", universe.name(*x)),
            Subject::Contracted { side, by } => {
                format!("{}/{{{}}}", side.name(), universe.format(by))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub subject: Subject,
    pub status: Status,
    pub violation: Option<Violation>,
    pub detail: Option<String>,
}

impl CheckResult {
    fn from_verdict(check: Check, subject: Subject, verdict: Verdict) -> Self {
        let (status, violation) = match verdict {
            Verdict::Pass => (Status::Pass, None),
            Verdict::Fail(v) => (Status::Fail, Some(v)),
        };
        CheckResult {
            check,
            subject,
            status,
            violation,
            detail: None,
        }
    }

    fn skipped(check: Check, subject: Subject, detail: String) -> Self {
        CheckResult {
            check,
            subject,
            status: Status::Skipped,
            violation: None,
            detail: Some(detail),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Results ordered by `(check, subject)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    /// SHA-256 of the instance's canonical text.
    pub digest: String,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }
}

/// Every check for one partition: Pawlak properties, engine axioms on `M(R)`
/// and `M*(R)`, the closed forms, and both contractions for every element.
pub fn verify_all(p: &Partition, caps: &Caps) -> Result<SuiteReport> {
    let n = p.size();
    limits::ensure("verification suite", n, caps.sweep)?;
    let mut results = Vec::new();

    let pawlak = p.verify_pawlak_properties(caps)?;
    let verdict = match pawlak.violation {
        None => Verdict::Pass,
        Some(v) => Verdict::fail(
            Check::PawlakProperties,
            match v.y {
                Some(y) => Witness::Pair(v.x, y),
                None => Witness::Set(v.x),
            },
        ),
    };
    let mut row = CheckResult::from_verdict(Check::PawlakProperties, Subject::Instance, verdict);
    if let Some(v) = pawlak.violation {
        row = row.with_detail(format!("property {}", v.property));
    } else if !pawlak.skipped.is_empty() {
        let labels: Vec<&str> = pawlak.skipped.iter().map(|p| p.label()).collect();
        row = row.with_detail(format!(
            "skipped {} above n={}",
            labels.join(" "),
            caps.pawlak_pairs
        ));
    }
    results.push(row);

    let primal = InducedMatroid::new(p.clone())?;
    let dual = primal.dual()?;

    results.push(CheckResult::from_verdict(
        Check::FamilyCounts,
        Subject::Instance,
        primal.check_counts(&dual)?,
    ));

    for (side, m) in [
        (Side::Primal, primal.matroid()),
        (Side::Dual, dual.matroid()),
    ] {
        engine_checks(side, m, p, caps, &mut results)?;
    }

    let subject = Subject::Matroid(Side::Primal);
    results.push(CheckResult::from_verdict(
        Check::InducedIndependents,
        subject.clone(),
        primal.check_independents(),
    ));
    results.push(CheckResult::from_verdict(
        Check::InducedBases,
        subject.clone(),
        primal.check_bases()?,
    ));
    results.push(CheckResult::from_verdict(
        Check::InducedRank,
        subject,
        primal.check_rank()?,
    ));
    let subject = Subject::Matroid(Side::Dual);
    results.push(CheckResult::from_verdict(
        Check::DualBases,
        subject.clone(),
        dual.check_bases(&primal)?,
    ));
    results.push(CheckResult::from_verdict(
        Check::DualIndependents,
        subject.clone(),
        dual.check_independents()?,
    ));
    results.push(CheckResult::from_verdict(
        Check::DualRank,
        subject,
        dual.check_rank()?,
    ));

    for i in 0..n {
        contraction_checks(&dual, ElementId(i), &mut results)?;
    }

    results.sort_by(|a, b| (a.check, &a.subject).cmp(&(b.check, &b.subject)));
    Ok(SuiteReport {
        digest: instance::digest(p),
        results,
    })
}

fn engine_checks(
    side: Side,
    m: &Matroid,
    p: &Partition,
    caps: &Caps,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    let subject = Subject::Matroid(side);
    results.push(CheckResult::from_verdict(
        Check::IndependenceAxioms,
        subject.clone(),
        check_independence_axioms(m.independents()),
    ));
    results.push(CheckResult::from_verdict(
        Check::BaseAxioms,
        subject.clone(),
        check_base_axiom(&m.bases()?),
    ));
    let double = if &m.dual().dual() == m {
        Verdict::Pass
    } else {
        Verdict::fail(Check::DoubleDual, Witness::None)
    };
    results.push(CheckResult::from_verdict(
        Check::DoubleDual,
        subject.clone(),
        double,
    ));

    let n = m.ground_size();
    if n > caps.rank_pairs {
        let why = format!("pairwise rank checks capped at n={}", caps.rank_pairs);
        results.push(CheckResult::skipped(
            Check::RankAxioms,
            subject.clone(),
            why.clone(),
        ));
        results.push(CheckResult::skipped(Check::RankExtension, subject, why));
        return Ok(());
    }
    results.push(CheckResult::from_verdict(
        Check::RankAxioms,
        subject.clone(),
        check_rank_axioms(m, caps)?,
    ));
    results.push(CheckResult::from_verdict(
        Check::RankExtension,
        subject,
        check_rank_extension(m, caps)?,
    ));

    // contract by ∅, by each point, and by each class
    let mut sets = BTreeSet::new();
    sets.insert(Subset::empty(n));
    for i in 0..n {
        let x = ElementId(i);
        sets.insert(Subset::singleton(n, x)?);
        sets.insert(p.equivalence_class(x)?);
    }
    for t in sets {
        results.push(CheckResult::from_verdict(
            Check::ContractionRankIdentity,
            Subject::Contracted { side, by: t },
            check_contraction_rank(m, &t, caps)?,
        ));
    }
    Ok(())
}

fn contraction_checks(
    dual: &DualInducedMatroid,
    x: ElementId,
    results: &mut Vec<CheckResult>,
) -> Result<()> {
    let pair = ContractionPair::new(dual, x)?;
    let subject = Subject::Element(x);
    results.push(CheckResult::from_verdict(
        Check::ContractionIndependents,
        subject.clone(),
        pair.check_independents(),
    ));
    results.push(CheckResult::from_verdict(
        Check::ContractionBases,
        subject.clone(),
        pair.check_bases()?,
    ));
    results.push(CheckResult::from_verdict(
        Check::ContractionRank,
        subject.clone(),
        pair.check_rank()?,
    ));
    let containment = pair.check_circuit_containment();
    let universe = dual.partition().universe();
    let surplus: Vec<String> = containment
        .surplus
        .iter()
        .map(|s| format!("{{{}}}", universe.format(s)))
        .collect();
    let detail = if surplus.is_empty() {
        "surplus: none".to_owned()
    } else {
        format!("surplus: {}", surplus.join(" "))
    };
    results.push(
        CheckResult::from_verdict(
            Check::CircuitContainment,
            subject.clone(),
            containment.verdict,
        )
        .with_detail(detail),
    );
    results.push(CheckResult::from_verdict(
        Check::CircuitRestriction,
        subject.clone(),
        pair.check_circuit_restriction()?,
    ));
    results.push(match pair.check_singleton_class() {
        Some(v) => CheckResult::from_verdict(Check::SingletonClass, subject, v),
        None => CheckResult::skipped(
            Check::SingletonClass,
            subject,
            "class has more than one element".to_owned(),
        ),
    });
    Ok(())
}
