//! Seeded random colorings.
//!
//! Every draw comes from a ChaCha8 stream keyed by `(seed, index)`, so a
//! trial can be replayed from its index alone regardless of which worker ran
//! it or in what order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeColoring, PartProfile, SubHypergraph};

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniformly random surjective-by-repair `q`-coloring of the complete host.
///
/// Each edge draws a color uniformly from `1..=q`. Then every missing color,
/// in increasing order, is written onto the lowest-ranked edge whose current
/// color still occurs more than once.
pub fn random_surjective_coloring(
    profile: &PartProfile,
    q: u32,
    seed: u64,
    index: u64,
) -> Result<EdgeColoring> {
    let m = profile.edge_count();
    if q == 0 || q as usize > m {
        return Err(Error::InvalidColoring(format!(
            "cannot color {m} edges surjectively with {q} colors"
        )));
    }
    let mut rng = stream(seed, index);
    let mut colors: Vec<u32> = (0..m).map(|_| rng.random_range(1..=q)).collect();
    let mut count = vec![0usize; q as usize + 1];
    for &c in &colors {
        count[c as usize] += 1;
    }
    let mut cursor = 0;
    for missing in 1..=q {
        if count[missing as usize] > 0 {
            continue;
        }
        while count[colors[cursor] as usize] < 2 {
            cursor += 1;
        }
        count[colors[cursor] as usize] -= 1;
        colors[cursor] = missing;
        count[missing as usize] = 1;
        cursor += 1;
    }
    EdgeColoring::new(SubHypergraph::complete(profile), colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjective_and_reproducible() {
        let prof = PartProfile::new(&[5, 5]).unwrap();
        for trial in 0..50 {
            let a = random_surjective_coloring(&prof, 7, 3, trial).unwrap();
            let b = random_surjective_coloring(&prof, 7, 3, trial).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.q(), 7);
        }
        let full = random_surjective_coloring(&prof, 25, 0, 0).unwrap();
        assert_eq!(full.q(), 25);
    }

    #[test]
    fn streams_differ_by_index() {
        let prof = PartProfile::new(&[4, 4]).unwrap();
        let a = random_surjective_coloring(&prof, 5, 1, 0).unwrap();
        let b = random_surjective_coloring(&prof, 5, 1, 1).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn too_many_colors_rejected() {
        let prof = PartProfile::new(&[2, 2]).unwrap();
        assert!(random_surjective_coloring(&prof, 5, 0, 0).is_err());
        assert!(random_surjective_coloring(&prof, 0, 0, 0).is_err());
    }
}
