//! Seeded random partitions.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::limits::MAX_MATROID_GROUND;
use crate::rough::{Partition, Universe};
use crate::subset::{ElementId, Subset};

/// `a`, `b`, `c`, ... for the first `n` letters.
pub fn letter_names(n: usize) -> Vec<String> {
    assert!(n <= 26, "at most 26 letter names");
    (b'a'..).take(n).map(|c| (c as char).to_string()).collect()
}

/// A partition of `n` letter-named elements into exactly `blocks` blocks.
///
/// Block sizes are a uniformly drawn composition of `n`; elements are shuffled
/// before being dealt into blocks. Equal arguments give equal partitions.
pub fn partition_with_blocks(n: usize, blocks: usize, seed: u64) -> Result<Partition> {
    if n == 0 || n > MAX_MATROID_GROUND {
        return Err(Error::InvalidParameter(format!(
            "element count must be between 1 and {MAX_MATROID_GROUND}, got {n}"
        )));
    }
    if blocks == 0 || blocks > n {
        return Err(Error::InvalidParameter(format!(
            "block count must be between 1 and {n}, got {blocks}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(deal(n, blocks, &mut rng))
}

/// A partition of `n` elements whose block count is uniform on `1..=n`.
pub fn random_partition(n: usize, seed: u64) -> Result<Partition> {
    if n == 0 || n > MAX_MATROID_GROUND {
        return Err(Error::InvalidParameter(format!(
            "element count must be between 1 and {MAX_MATROID_GROUND}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = rng.random_range(1..=n);
    Ok(deal(n, blocks, &mut rng))
}

fn deal(n: usize, blocks: usize, rng: &mut ChaCha8Rng) -> Partition {
    // k-1 distinct cuts in 1..n give a uniform composition into k positive parts
    let mut cuts: Vec<usize> = index::sample(rng, n - 1, blocks - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(n);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut start = 0;
    let parts = cuts.into_iter().map(|end| {
        let block = Subset::from_elements(n, order[start..end].iter().map(|&i| ElementId(i)))
            .expect("indices below n");
        start = end;
        block
    });
    let parts: Vec<Subset> = parts.collect();
    let universe = Universe::with_names(letter_names(n)).expect("distinct letters");
    Partition::from_blocks(universe, parts).expect("dealt blocks partition the universe")
}
