//! Worked examples for the induced matroid and the four-element matroid.

use roughmat::{
    induced, ElementId, InducedMatroid, Matroid, Partition, SetFamily, Subset, Universe,
};

fn universe(names: &str) -> Universe {
    Universe::with_names(names.chars().map(String::from)).unwrap()
}

fn set(u: &Universe, members: &str) -> Subset {
    let ids = members.chars().map(|c| u.lookup(&c.to_string()).unwrap());
    Subset::from_elements(u.size(), ids).unwrap()
}

/// `"ab ac -"` style listing; `-` is the empty set.
fn family(u: &Universe, listing: &str) -> SetFamily {
    let sets = listing.split_whitespace().map(|s| {
        if s == "-" {
            Subset::empty(u.size())
        } else {
            set(u, s)
        }
    });
    SetFamily::new(u.size(), sets).unwrap()
}

fn partition(u: &Universe, blocks: &str) -> Partition {
    let blocks = blocks.split_whitespace().map(|b| set(u, b));
    Partition::from_blocks(u.clone(), blocks).unwrap()
}

#[test]
fn four_element_matroid() {
    let u = universe("abcd");
    let m = Matroid::new(family(&u, "- a b c ab ac bc")).unwrap();
    assert_eq!(m.bases().unwrap(), family(&u, "ab ac bc"));
    assert_eq!(m.circuits(), family(&u, "d abc"));
    assert_eq!(m.rank(&set(&u, "a")).unwrap(), 1);
    assert_eq!(m.rank(&set(&u, "abc")).unwrap(), 2);
    assert_eq!(m.rank(&set(&u, "abd")).unwrap(), 2);
    assert_eq!(m.dual().bases().unwrap(), family(&u, "cd bd ad"));
}

#[test]
fn induced_matroid_of_two_blocks() {
    let u = universe("abcde");
    let p = partition(&u, "ab cde");
    let m = InducedMatroid::new(p.clone()).unwrap();
    let independents = family(
        &u,
        "- a b c d e ac ad ae bc bd be cd ce de acd ace ade bcd bce bde",
    );
    assert_eq!(independents.len(), 21);
    assert_eq!(m.matroid().independents(), &independents);

    let bases = family(&u, "acd ace ade bcd bce bde");
    assert_eq!(m.matroid().bases().unwrap(), bases);
    assert_eq!(induced::bases_closed_form(&p).unwrap(), bases);

    let dual = m.dual().unwrap();
    assert_eq!(
        dual.matroid().bases().unwrap(),
        family(&u, "ac ad ae bc bd be")
    );
    assert_eq!(
        dual.matroid().independents(),
        &family(&u, "- a b c d e ac ad ae bc bd be")
    );

    assert_eq!(dual.matroid().rank(&set(&u, "ac")).unwrap(), 2);
    assert_eq!(dual.matroid().rank(&set(&u, "cde")).unwrap(), 1);
    assert_eq!(
        induced::dual_rank_closed_form(&p, &set(&u, "ac")).unwrap(),
        2
    );
    assert_eq!(
        induced::dual_rank_closed_form(&p, &set(&u, "cde")).unwrap(),
        1
    );
}

#[test]
fn induced_matroid_reproduces_four_element_matroid() {
    let u = universe("abcd");
    let m = InducedMatroid::new(partition(&u, "abc d")).unwrap();
    let reference = Matroid::new(family(&u, "- a b c ab ac bc")).unwrap();
    assert_eq!(m.matroid(), &reference);
    assert_eq!(
        induced::primal_rank_closed_form(m.partition(), &set(&u, "abd")).unwrap(),
        2
    );
}

#[test]
fn approximations_of_two_blocks() {
    let u = universe("abcde");
    let p = partition(&u, "ab cde");
    assert_eq!(p.equivalence_class(ElementId(2)).unwrap(), set(&u, "cde"));
    assert_eq!(
        p.lower_approximation(&set(&u, "abc")).unwrap(),
        set(&u, "ab")
    );
    assert_eq!(p.upper_approximation(&set(&u, "ac")).unwrap(), u.full());
}

#[test]
fn contraction_of_dual_by_point_and_class() {
    let u = universe("abcde");
    let dual = InducedMatroid::new(partition(&u, "ab cde"))
        .unwrap()
        .dual()
        .unwrap();
    let by_a = dual.matroid().contraction(&set(&u, "a")).unwrap();
    assert_eq!(by_a.independents_in_parent(), family(&u, "- c d e"));

    let by_c = dual.matroid().contraction(&set(&u, "c")).unwrap();
    let by_class = dual.matroid().contraction(&set(&u, "cde")).unwrap();
    assert_eq!(by_c.independents_in_parent(), family(&u, "- a b"));
    assert_eq!(by_class.independents_in_parent(), family(&u, "- a b"));
    assert_eq!(by_class.bases_in_parent().unwrap(), family(&u, "a b"));
    assert_eq!(
        by_c.circuits_in_parent()
            .difference(&by_class.circuits_in_parent()),
        family(&u, "d e")
    );
}
