use crate::error::{Error, Result};

/// Largest ground set for which a [`Matroid`](crate::Matroid) is materialized.
pub const MAX_MATROID_GROUND: usize = 20;

/// Size limits for the exhaustive checks.
///
/// Single-subset sweeps cost `2^n`; pairwise sweeps cost `4^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Pawlak properties quantified over one subset.
    pub pawlak_single: usize,
    /// Pawlak properties quantified over pairs of subsets.
    pub pawlak_pairs: usize,
    /// Rank axioms and the rank-extension lemma (pairwise).
    pub rank_pairs: usize,
    /// Contraction and closed-form sweeps over an induced matroid.
    pub sweep: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pawlak_single: 16,
            pawlak_pairs: 10,
            rank_pairs: 12,
            sweep: 12,
        }
    }
}

impl Caps {
    /// Sets every cap to `n`, clamped to what a matroid can hold.
    pub fn uniform(n: usize) -> Self {
        let n = n.min(MAX_MATROID_GROUND);
        Caps {
            pawlak_single: n,
            pawlak_pairs: n,
            rank_pairs: n,
            sweep: n,
        }
    }
}

pub(crate) fn ensure(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
