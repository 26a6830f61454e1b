//! Brute-force reference implementations over `BTreeSet<usize>`, written
//! straight from the definitions and compared against the bit-set library.

use std::collections::BTreeSet;

use roughmat::generate::random_partition;
use roughmat::{induced, ElementId, InducedMatroid, Matroid, Partition, SetFamily, Subset};

type Set = BTreeSet<usize>;

fn power_set(n: usize) -> Vec<Set> {
    (0..1u32 << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn classes(p: &Partition) -> Vec<Set> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|e| e.0).collect())
        .collect()
}

fn class_of(classes: &[Set], x: usize) -> &Set {
    classes.iter().find(|c| c.contains(&x)).unwrap()
}

fn lower(classes: &[Set], n: usize, x: &Set) -> Set {
    (0..n)
        .filter(|&u| class_of(classes, u).is_subset(x))
        .collect()
}

fn upper(classes: &[Set], n: usize, x: &Set) -> Set {
    (0..n)
        .filter(|&u| !class_of(classes, u).is_disjoint(x))
        .collect()
}

fn maximal(family: &[Set]) -> Vec<Set> {
    family
        .iter()
        .filter(|x| !family.iter().any(|y| y != *x && x.is_subset(y)))
        .cloned()
        .collect()
}

fn minimal(family: &[Set]) -> Vec<Set> {
    family
        .iter()
        .filter(|x| !family.iter().any(|y| y != *x && y.is_subset(x)))
        .cloned()
        .collect()
}

fn rank(independents: &[Set], x: &Set) -> usize {
    independents
        .iter()
        .filter(|i| i.is_subset(x))
        .map(|i| i.len())
        .max()
        .unwrap()
}

fn to_set(s: &Subset) -> Set {
    s.iter().map(|e| e.0).collect()
}

fn to_sets(f: &SetFamily) -> BTreeSet<Set> {
    f.iter().map(to_set).collect()
}

fn to_subset(n: usize, s: &Set) -> Subset {
    Subset::from_elements(n, s.iter().copied()).unwrap()
}

/// Contraction straight from the definition: `{I ⊆ U - T : I ∪ B_T ∈ I}` for a chosen base `B_T` of `M|T`.
fn contraction(independents: &[Set], n: usize, t: &Set, base: &Set) -> BTreeSet<Set> {
    power_set(n)
        .into_iter()
        .filter(|i| i.is_disjoint(t))
        .filter(|i| {
            let joined: Set = i.union(base).copied().collect();
            independents.contains(&joined)
        })
        .collect()
}

#[test]
fn approximations_match_definition() {
    for seed in 0..40 {
        let p = random_partition(1 + (seed as usize % 7), seed).unwrap();
        let n = p.size();
        let cls = classes(&p);
        for x in power_set(n) {
            let sub = to_subset(n, &x);
            assert_eq!(
                to_set(&p.lower_approximation(&sub).unwrap()),
                lower(&cls, n, &x)
            );
            assert_eq!(
                to_set(&p.upper_approximation(&sub).unwrap()),
                upper(&cls, n, &x)
            );
        }
    }
}

#[test]
fn induced_structure_matches_definition() {
    for seed in 0..40 {
        let p = random_partition(1 + (seed as usize % 7), 1000 + seed).unwrap();
        let n = p.size();
        let cls = classes(&p);
        let independents: Vec<Set> = power_set(n)
            .into_iter()
            .filter(|x| lower(&cls, n, x).is_empty())
            .collect();
        let m = InducedMatroid::new(p.clone()).unwrap();
        assert_eq!(
            to_sets(m.matroid().independents()),
            independents.iter().cloned().collect()
        );

        let bases = maximal(&independents);
        assert_eq!(
            to_sets(&m.matroid().bases().unwrap()),
            bases.iter().cloned().collect()
        );

        let dependents: Vec<Set> = power_set(n)
            .into_iter()
            .filter(|x| !independents.contains(x))
            .collect();
        assert_eq!(
            to_sets(&m.matroid().circuits()),
            minimal(&dependents).into_iter().collect()
        );

        // dual via complements of bases, then down-closure
        let full: Set = (0..n).collect();
        let cobases: Vec<Set> = bases
            .iter()
            .map(|b| full.difference(b).copied().collect())
            .collect();
        let coindependents: Vec<Set> = power_set(n)
            .into_iter()
            .filter(|x| cobases.iter().any(|b| x.is_subset(b)))
            .collect();
        let dual = m.dual().unwrap();
        assert_eq!(
            to_sets(dual.matroid().independents()),
            coindependents.iter().cloned().collect()
        );

        for x in power_set(n) {
            let sub = to_subset(n, &x);
            assert_eq!(m.matroid().rank(&sub).unwrap(), rank(&independents, &x));
            assert_eq!(
                dual.matroid().rank(&sub).unwrap(),
                rank(&coindependents, &x)
            );
            assert_eq!(
                induced::primal_rank_closed_form(&p, &sub).unwrap(),
                rank(&independents, &x)
            );
        }
    }
}

#[test]
fn contractions_match_definition() {
    for seed in 0..25 {
        let p = random_partition(1 + (seed as usize % 6), 2000 + seed).unwrap();
        let n = p.size();
        let dual = InducedMatroid::new(p.clone()).unwrap().dual().unwrap();
        let independents: Vec<Set> = dual.matroid().independents().iter().map(to_set).collect();
        for x in 0..n {
            let class = to_set(&p.equivalence_class(ElementId(x)).unwrap());
            for t in [Set::from([x]), class] {
                let within: Vec<Set> = independents
                    .iter()
                    .filter(|i| i.is_subset(&t))
                    .cloned()
                    .collect();
                let reference = contraction(&independents, n, &t, &maximal(&within)[0]);
                let minor = dual.matroid().contraction(&to_subset(n, &t)).unwrap();
                assert_eq!(to_sets(&minor.independents_in_parent()), reference);
            }
        }
    }
}

#[test]
fn contraction_of_generic_matroid_matches_definition() {
    // uniform matroid U(2,4) and its truncations are not induced by partitions
    let n = 4;
    let independents: Vec<Set> = power_set(n).into_iter().filter(|s| s.len() <= 2).collect();
    let family = SetFamily::new(n, independents.iter().map(|s| to_subset(n, s))).unwrap();
    let m = Matroid::new(family).unwrap();
    for t in power_set(n) {
        let within: Vec<Set> = independents
            .iter()
            .filter(|i| i.is_subset(&t))
            .cloned()
            .collect();
        for base in maximal(&within) {
            let reference = contraction(&independents, n, &t, &base);
            let minor = m
                .contraction_with_base(&to_subset(n, &t), &to_subset(n, &base))
                .unwrap();
            assert_eq!(to_sets(&minor.independents_in_parent()), reference);
        }
    }
}
