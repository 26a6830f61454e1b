//! Contractions of the dual induced matroid by a point and by its class.
//!
//! For `x ∈ U`, `M*(R)/{x}` lives on `U - {x}` and `M*(R)/RN(x)` on `U - RN(x)`.
//! Their families are compared after translating both back to `U`.

use crate::error::Result;
use crate::family::SetFamily;
use crate::induced::{family_verdict, DualInducedMatroid};
use crate::limits::{self, Caps};
use crate::matroid::Minor;
use crate::subset::{ElementId, Subset};
use crate::verdict::{Check, Verdict, Witness};

/// Both contractions of `M*(R)` for one element.
#[derive(Debug, Clone)]
pub struct ContractionPair {
    element: ElementId,
    class: Subset,
    by_point: Minor,
    by_class: Minor,
}

/// Outcome of the circuit containment check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitContainment {
    pub verdict: Verdict,
    /// Circuits of the point contraction missing from the class contraction, over `U`.
    pub surplus: SetFamily,
}

impl ContractionPair {
    pub fn new(dual: &DualInducedMatroid, x: ElementId) -> Result<Self> {
        let p = dual.partition();
        let class = p.equivalence_class(x)?;
        let point = Subset::singleton(p.size(), x)?;
        Ok(ContractionPair {
            element: x,
            class,
            by_point: dual.matroid().contraction(&point)?,
            by_class: dual.matroid().contraction(&class)?,
        })
    }

    pub fn element(&self) -> ElementId {
        self.element
    }

    /// `RN(x)`.
    pub fn class(&self) -> Subset {
        self.class
    }

    /// `M*(R)/{x}`.
    pub fn by_point(&self) -> &Minor {
        &self.by_point
    }

    /// `M*(R)/RN(x)`.
    pub fn by_class(&self) -> &Minor {
        &self.by_class
    }

    pub fn check_independents(&self) -> Verdict {
        family_verdict(
            Check::ContractionIndependents,
            &self.by_point.independents_in_parent(),
            &self.by_class.independents_in_parent(),
        )
    }

    pub fn check_bases(&self) -> Result<Verdict> {
        Ok(family_verdict(
            Check::ContractionBases,
            &self.by_point.bases_in_parent()?,
            &self.by_class.bases_in_parent()?,
        ))
    }

    /// Equal ranks on every subset of `U - RN(x)`.
    pub fn check_rank(&self) -> Result<Verdict> {
        let outside = self.class.complement();
        let point_ranks = self.by_point.matroid().rank_table();
        let class_ranks = self.by_class.matroid().rank_table();
        for x in outside.subsets() {
            let expected = point_ranks[self.by_point.project(&x)?.bits() as usize] as usize;
            let found = class_ranks[self.by_class.project(&x)?.bits() as usize] as usize;
            if expected != found {
                return Ok(Verdict::fail(
                    Check::ContractionRank,
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

    /// Class-contraction circuits are point-contraction circuits, and the
    /// surplus is exactly the loops `{y}`, `y ∈ RN(x) - {x}`.
    pub fn check_circuit_containment(&self) -> CircuitContainment {
        let point = self.by_point.circuits_in_parent();
        let class = self.by_class.circuits_in_parent();
        let surplus = point.difference(&class);
        let n = self.class.universe_size();
        let loops = SetFamily::new(
            n,
            self.class
                .without(self.element)
                .iter()
                .map(|y| Subset::singleton(n, y).expect("class lies in the universe")),
        )
        .expect("singletons share the universe");
        let verdict = match class.iter().find(|c| !point.contains(c)) {
            Some(c) => Verdict::fail(Check::CircuitContainment, Witness::Set(*c)),
            None => family_verdict(Check::CircuitContainment, &loops, &surplus),
        };
        CircuitContainment { verdict, surplus }
    }

    /// Restricting the point contraction to `U - RN(x)` gives the class contraction's circuits.
    pub fn check_circuit_restriction(&self) -> Result<Verdict> {
        let restricted = self.by_point.restriction(&self.class.complement())?;
        Ok(family_verdict(
            Check::CircuitRestriction,
            &restricted.circuits_in_parent(),
            &self.by_class.circuits_in_parent(),
        ))
    }

    /// When `RN(x) = {x}` the two contractions are the same matroid; `None` otherwise.
    pub fn check_singleton_class(&self) -> Option<Verdict> {
        if self.class.len() != 1 {
            return None;
        }
        Some(if self.by_point == self.by_class {
            Verdict::Pass
        } else {
            Verdict::fail(Check::SingletonClass, Witness::Set(self.class))
        })
    }
}

fn pair_for(dual: &DualInducedMatroid, x: ElementId, caps: &Caps) -> Result<ContractionPair> {
    limits::ensure("contraction check", dual.partition().size(), caps.sweep)?;
    ContractionPair::new(dual, x)
}

pub fn verify_contraction_independents(
    dual: &DualInducedMatroid,
    x: ElementId,
    caps: &Caps,
) -> Result<Verdict> {
    Ok(pair_for(dual, x, caps)?.check_independents())
}

pub fn verify_contraction_bases(
    dual: &DualInducedMatroid,
    x: ElementId,
    caps: &Caps,
) -> Result<Verdict> {
    pair_for(dual, x, caps)?.check_bases()
}

pub fn verify_contraction_rank(
    dual: &DualInducedMatroid,
    x: ElementId,
    caps: &Caps,
) -> Result<Verdict> {
    pair_for(dual, x, caps)?.check_rank()
}

pub fn verify_circuit_containment(
    dual: &DualInducedMatroid,
    x: ElementId,
    caps: &Caps,
) -> Result<CircuitContainment> {
    Ok(pair_for(dual, x, caps)?.check_circuit_containment())
}

pub fn verify_circuit_equality_after_restriction(
    dual: &DualInducedMatroid,
    x: ElementId,
    caps: &Caps,
) -> Result<Verdict> {
    pair_for(dual, x, caps)?.check_circuit_restriction()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::InducedMatroid;
    use crate::rough::{Partition, Universe};

    fn example2_dual() -> DualInducedMatroid {
        let u = Universe::with_names(["a", "b", "c", "d", "e"]).unwrap();
        let p = Partition::from_index_blocks(u, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        InducedMatroid::new(p).unwrap().dual().unwrap()
    }

    fn fam(lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(5, lists)
    }

    #[test]
    fn point_contraction_by_a() {
        // independents {∅,{c},{d},{e}} on {b,c,d,e}
        let d = example2_dual();
        let m = d
            .matroid()
            .contraction(&Subset::singleton(5, ElementId(0)).unwrap())
            .unwrap();
        assert_eq!(m.independents_in_parent(), fam(&[&[], &[2], &[3], &[4]]));
        assert_eq!(
            m.element_map(),
            &[ElementId(1), ElementId(2), ElementId(3), ElementId(4)]
        );
    }

    #[test]
    fn example2_at_c() {
        let d = example2_dual();
        let pair = ContractionPair::new(&d, ElementId(2)).unwrap();
        assert_eq!(
            pair.by_class().independents_in_parent(),
            fam(&[&[], &[0], &[1]])
        );
        assert!(pair.check_independents().is_pass());
        assert_eq!(
            pair.by_point().bases_in_parent().unwrap(),
            fam(&[&[0], &[1]])
        );
        assert!(pair.check_bases().unwrap().is_pass());
        assert!(pair.check_rank().unwrap().is_pass());
        let containment = pair.check_circuit_containment();
        assert!(containment.verdict.is_pass());
        assert_eq!(containment.surplus, fam(&[&[3], &[4]]));
        assert!(pair.check_circuit_restriction().unwrap().is_pass());
        assert_eq!(pair.check_singleton_class(), None);
    }

    #[test]
    fn example2_at_a() {
        let d = example2_dual();
        let pair = ContractionPair::new(&d, ElementId(0)).unwrap();
        assert!(pair.check_independents().is_pass());
        assert!(pair.check_rank().unwrap().is_pass());
        let containment = pair.check_circuit_containment();
        assert!(containment.verdict.is_pass());
        assert_eq!(containment.surplus, fam(&[&[1]]));
        let caps = Caps::default();
        assert!(verify_contraction_bases(&d, ElementId(1), &caps)
            .unwrap()
            .is_pass());
    }

    #[test]
    fn singleton_class_contractions_coincide() {
        let p = Partition::from_index_blocks(Universe::new(3).unwrap(), &[vec![0], vec![1, 2]])
            .unwrap();
        let d = InducedMatroid::new(p).unwrap().dual().unwrap();
        let pair = ContractionPair::new(&d, ElementId(0)).unwrap();
        assert_eq!(pair.check_singleton_class(), Some(Verdict::Pass));
        assert!(pair.check_circuit_containment().surplus.is_empty());
    }
}
