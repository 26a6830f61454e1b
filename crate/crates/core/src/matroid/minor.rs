use super::Matroid;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::subset::{ElementId, Subset};

/// A restriction or contraction, re-indexed to a dense ground set.
///
/// Child element `i` corresponds to parent element `to_parent[i]`; parent
/// indices ascend with child indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    matroid: Matroid,
    parent_size: usize,
    to_parent: Vec<ElementId>,
}

/// Re-indexes the members of `s` (all inside `ground`) to positions within `ground`.
fn compress(s: &Subset, ground: &Subset) -> Subset {
    debug_assert!(s.is_subset(ground));
    let bits = ground
        .iter()
        .enumerate()
        .filter(|(_, e)| s.contains(*e))
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    Subset::from_bits_unchecked(ground.len(), bits)
}

impl Minor {
    pub(super) fn restriction_of(m: &Matroid, x: &Subset) -> Minor {
        let sets = m
            .independents()
            .iter()
            .filter(|i| i.is_subset(x))
            .map(|i| compress(i, x));
        Minor::over(m.ground_size(), x, sets)
    }

    pub(super) fn contraction_of(m: &Matroid, t: &Subset, base: &Subset) -> Minor {
        let rest = t.complement();
        let sets = m
            .independents()
            .iter()
            .filter(|j| j.intersection(t) == *base)
            .map(|j| compress(&j.difference(base), &rest));
        Minor::over(m.ground_size(), &rest, sets)
    }

    fn over(parent_size: usize, ground: &Subset, sets: impl Iterator<Item = Subset>) -> Minor {
        let family = SetFamily::new(ground.len(), sets).expect("compressed into the ground set");
        Minor {
            matroid: Matroid::from_family_unchecked(family),
            parent_size,
            to_parent: ground.iter().collect(),
        }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }

    pub fn parent_size(&self) -> usize {
        self.parent_size
    }

    /// Parent indices of the ground set, in child order.
    pub fn element_map(&self) -> &[ElementId] {
        &self.to_parent
    }

    /// The ground set as a subset of the parent universe.
    pub fn ground_in_parent(&self) -> Subset {
        Subset::from_elements(self.parent_size, self.to_parent.iter().copied())
            .expect("element map stays in the parent universe")
    }

    /// Translates a child subset to the parent universe.
    pub fn lift(&self, s: &Subset) -> Subset {
        debug_assert_eq!(s.universe_size(), self.to_parent.len());
        let members = s.iter().map(|e| self.to_parent[e.0]);
        Subset::from_elements(self.parent_size, members)
            .expect("element map stays in the parent universe")
    }

    pub fn lift_family(&self, family: &SetFamily) -> SetFamily {
        SetFamily::new(self.parent_size, family.iter().map(|s| self.lift(s)))
            .expect("lifted sets share the parent universe")
    }

    /// Translates a parent subset lying inside the ground set to child indices.
    pub fn project(&self, s: &Subset) -> Result<Subset> {
        s.check_universe(self.parent_size)?;
        let ground = self.ground_in_parent();
        if let Some(e) = s.difference(&ground).iter().next() {
            return Err(Error::OutOfUniverse {
                element: e.0,
                size: self.parent_size,
            });
        }
        Ok(compress(s, &ground))
    }

    /// Independent sets, over the parent universe.
    pub fn independents_in_parent(&self) -> SetFamily {
        self.lift_family(self.matroid.independents())
    }

    pub fn bases_in_parent(&self) -> Result<SetFamily> {
        Ok(self.lift_family(&self.matroid.bases()?))
    }

    pub fn circuits_in_parent(&self) -> SetFamily {
        self.lift_family(&self.matroid.circuits())
    }

    /// Restricts further to a parent subset inside this minor's ground set.
    ///
    /// The result maps straight back to the original parent.
    pub fn restriction(&self, x: &Subset) -> Result<Minor> {
        let local = self.project(x)?;
        Ok(self.nest(Minor::restriction_of(&self.matroid, &local)))
    }

    /// Contracts further by a parent subset inside this minor's ground set.
    pub fn contraction(&self, t: &Subset) -> Result<Minor> {
        let local = self.project(t)?;
        Ok(self.nest(self.matroid.contraction(&local)?))
    }

    fn nest(&self, inner: Minor) -> Minor {
        Minor {
            to_parent: inner
                .to_parent
                .iter()
                .map(|e| self.to_parent[e.0])
                .collect(),
            matroid: inner.matroid,
            parent_size: self.parent_size,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> Subset {
        Subset::from_elements(n, e.iter().copied()).unwrap()
    }

    fn example1() -> Matroid {
        Matroid::new(SetFamily::from_lists(
            4,
            &[&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]],
        ))
        .unwrap()
    }

    #[test]
    fn restriction_to_pair_is_free() {
        let r = example1().restriction(&set(4, &[0, 1])).unwrap();
        assert_eq!(r.matroid(), &Matroid::free(2).unwrap());
        assert_eq!(r.element_map(), &[ElementId(0), ElementId(1)]);
    }

    #[test]
    fn trivial_restrictions() {
        let m = example1();
        assert_eq!(m.restriction(&Subset::full(4)).unwrap().matroid(), &m);
        let empty = m.restriction(&Subset::empty(4)).unwrap();
        assert_eq!(empty.matroid(), &Matroid::rank_zero(0).unwrap());
    }

    #[test]
    fn trivial_contractions() {
        let m = example1();
        assert_eq!(m.contraction(&Subset::empty(4)).unwrap().matroid(), &m);
        let all = m.contraction(&Subset::full(4)).unwrap();
        assert_eq!(all.matroid(), &Matroid::rank_zero(0).unwrap());
    }

    #[test]
    fn contraction_by_loop_keeps_independents() {
        // d is a loop, so M/{d} is M|{a,b,c}
        let m = example1();
        let c = m.contraction(&set(4, &[3])).unwrap();
        let r = m.restriction(&set(4, &[0, 1, 2])).unwrap();
        assert_eq!(c, r);
    }

    #[test]
    fn contraction_base_must_be_a_base() {
        let m = example1();
        let t = set(4, &[0, 1]);
        assert!(m.contraction_with_base(&t, &set(4, &[0])).is_err());
        let a = m.contraction_with_base(&t, &set(4, &[0, 1])).unwrap();
        assert_eq!(a, m.contraction(&t).unwrap());
    }

    #[test]
    fn lift_and_project_invert() {
        let m = example1();
        let r = m.restriction(&set(4, &[1, 3])).unwrap();
        let s = set(4, &[3]);
        let local = r.project(&s).unwrap();
        assert_eq!(local, set(2, &[1]));
        assert_eq!(r.lift(&local), s);
        assert!(r.project(&set(4, &[0])).is_err());
    }

    #[test]
    fn nested_minor_maps_to_root() {
        let m = example1();
        let c = m.contraction(&set(4, &[0])).unwrap();
        let rc = c.restriction(&set(4, &[2, 3])).unwrap();
        assert_eq!(rc.element_map(), &[ElementId(2), ElementId(3)]);
        assert_eq!(
            rc.independents_in_parent(),
            SetFamily::from_lists(4, &[&[], &[2]])
        );
    }
}
