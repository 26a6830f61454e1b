use super::{membership_table, Matroid};
use crate::error::Result;
use crate::family::SetFamily;
use crate::limits::{self, Caps, MAX_MATROID_GROUND};
use crate::subset::Subset;
use crate::verdict::{Check, Verdict, Witness};

/// `max{|I| : I ⊆ X, I ∈ family}` for every `X`, given a downward-closed membership table.
pub(super) fn ranks_of(table: &[bool]) -> Vec<u8> {
    let mut ranks = vec![0u8; table.len()];
    for mask in 1..table.len() {
        ranks[mask] = if table[mask] {
            mask.count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                best = best.max(ranks[mask ^ bit]);
                rest ^= bit;
            }
            best
        };
    }
    ranks
}

fn check_nonempty_and_downward(family: &SetFamily) -> Verdict {
    let n = family.universe_size();
    if !family.contains(&Subset::empty(n)) {
        return Verdict::fail(Check::I1, Witness::None);
    }
    for i in family {
        // immediate subsets in ascending bit order: drop the highest element first
        let mut elems: Vec<_> = i.iter().collect();
        elems.reverse();
        for e in elems {
            let sub = i.without(e);
            if !family.contains(&sub) {
                return Verdict::fail(Check::I2, Witness::Pair(*i, sub));
            }
        }
    }
    Verdict::Pass
}

fn first_augmentation_failure(family: &SetFamily) -> Verdict {
    for small in family {
        for large in family.iter().filter(|l| l.len() > small.len()) {
            let extendable = large
                .difference(small)
                .iter()
                .any(|e| family.contains(&small.with(e)));
            if !extendable {
                return Verdict::fail(Check::I3, Witness::Pair(*small, *large));
            }
        }
    }
    Verdict::Pass
}

/// I1-I3 straight from the definitions, comparing every pair of members for I3.
pub fn check_independence_axioms_pairwise(family: &SetFamily) -> Verdict {
    check_nonempty_and_downward(family).and_then(|| first_augmentation_failure(family))
}

/// Checks I1-I3, reporting the first failure in canonical order.
///
/// Once I1 and I2 hold, I3 is equivalent to submodularity of the induced rank
/// function, which is checked locally (`X`, `X+e`, `X+f`, `X+e+f`) in
/// `O(2^n n^2)`. The pairwise scan only runs to locate the witness.
pub fn check_independence_axioms(family: &SetFamily) -> Verdict {
    let n = family.universe_size();
    if n > MAX_MATROID_GROUND {
        return check_independence_axioms_pairwise(family);
    }
    check_nonempty_and_downward(family).and_then(|| {
        let ranks = ranks_of(&membership_table(family));
        if locally_submodular(n, &ranks) {
            Verdict::Pass
        } else {
            first_augmentation_failure(family)
        }
    })
}

fn locally_submodular(n: usize, ranks: &[u8]) -> bool {
    for mask in 0..ranks.len() {
        let r = ranks[mask];
        for e in 0..n {
            let with_e = mask | 1 << e;
            if with_e == mask {
                continue;
            }
            for f in e + 1..n {
                let with_f = mask | 1 << f;
                if with_f == mask {
                    continue;
                }
                if ranks[with_e] + ranks[with_f] < r + ranks[with_e | 1 << f] {
                    return false;
                }
            }
        }
    }
    true
}

/// B1 (nonempty) and B2 (exchange).
pub fn check_base_axiom(candidate: &SetFamily) -> Verdict {
    if candidate.is_empty() {
        return Verdict::fail(Check::B1, Witness::None);
    }
    for first in candidate {
        for second in candidate {
            for x in first.difference(second).iter() {
                let dropped = first.without(x);
                let repaired = second
                    .difference(first)
                    .iter()
                    .any(|y| candidate.contains(&dropped.with(y)));
                if !repaired {
                    return Verdict::fail(
                        Check::B2,
                        Witness::Exchange {
                            first: *first,
                            second: *second,
                            element: x,
                        },
                    );
                }
            }
        }
    }
    Verdict::Pass
}

/// R1 on every subset, R2 on every nested pair, R3 on every pair.
pub fn check_rank_axioms(m: &Matroid, caps: &Caps) -> Result<Verdict> {
    let n = m.ground_size();
    limits::ensure("rank axiom check", n, caps.rank_pairs)?;
    let ranks = m.rank_table();
    let r = |s: &Subset| ranks[s.bits() as usize] as usize;

    for x in Subset::all(n) {
        if r(&x) > x.len() {
            return Ok(Verdict::fail(Check::R1, Witness::Set(x)));
        }
    }
    for y in Subset::all(n) {
        for x in y.subsets() {
            if r(&x) > r(&y) {
                return Ok(Verdict::fail(Check::R2, Witness::Pair(x, y)));
            }
        }
    }
    for x in Subset::all(n) {
        for y in Subset::all(n) {
            if r(&x) + r(&y) < r(&x.union(&y)) + r(&x.intersection(&y)) {
                return Ok(Verdict::fail(Check::R3, Witness::Pair(x, y)));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// If `r(X ∪ {y}) = r(X)` for every `y ∈ Y - X` then `r(X ∪ Y) = r(X)`, for every pair.
///
/// `r(X ∪ Y)` only depends on `Y - X`, so each `X` is paired with every subset of
/// the elements whose addition leaves its rank unchanged.
pub fn check_rank_extension(m: &Matroid, caps: &Caps) -> Result<Verdict> {
    let n = m.ground_size();
    limits::ensure("rank extension check", n, caps.rank_pairs)?;
    let ranks = m.rank_table();
    let r = |s: &Subset| ranks[s.bits() as usize];
    for x in Subset::all(n) {
        let stable = x
            .complement()
            .iter()
            .filter(|&y| r(&x.with(y)) == r(&x))
            .fold(Subset::empty(n), |acc, y| acc.with(y));
        for extra in stable.subsets() {
            if r(&x.union(&extra)) != r(&x) {
                return Ok(Verdict::fail(Check::RankExtension, Witness::Pair(x, extra)));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `r_{M/T}(X) = r_M(X ∪ T) - r_M(T)` for every `X ⊆ U - T`.
///
/// Witness sets are expressed over `m`'s ground set.
pub fn check_contraction_rank(m: &Matroid, t: &Subset, caps: &Caps) -> Result<Verdict> {
    limits::ensure("contraction rank check", m.ground_size(), caps.rank_pairs)?;
    let minor = m.contraction(t)?;
    let parent = m.rank_table();
    let child = minor.matroid().rank_table();
    let r_t = parent[t.bits() as usize] as usize;
    for x in Subset::all(minor.matroid().ground_size()) {
        let lifted = minor.lift(&x);
        let expected = parent[lifted.union(t).bits() as usize] as usize - r_t;
        let found = child[x.bits() as usize] as usize;
        if expected != found {
            return Ok(Verdict::fail(
                Check::ContractionRankIdentity,
                Witness::Rank {
                    set: lifted,
                    expected,
                    found,
                },
            ));
        }
    }
    Ok(Verdict::Pass)
}
