//! Extremal objects: the Turán hypergraph `K_{k-1,n_2,…,n_r}`, the coloring
//! `φ_r`, the complementary-prefix coloring for `n_1 = 2`, and representing
//! subhypergraphs of a coloring.
//!
//! Distinguished vertex subsets always sit at the lowest indices of part 1,
//! and color ids follow edge rank with any shared color last.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeColoring, EdgeId, PartProfile, SubHypergraph};

/// All edges whose part-1 coordinate is at most `k − 1`.
///
/// Has `(k−1)·n_2⋯n_r` edges and no `k`-matching. `k = 1` gives the empty
/// subhypergraph.
pub fn build_turan_extremal(profile: &PartProfile, k: usize) -> Result<SubHypergraph> {
    if k == 0 || k - 1 > profile.size(1) {
        return Err(Error::ConstructionUndefined(format!(
            "Turán extremal hypergraph needs 1 <= k <= n_1 + 1 (k = {k}, n_1 = {})",
            profile.size(1)
        )));
    }
    Ok(SubHypergraph::from_fn(profile, |id| profile.coord0(id, 0) < k - 1))
}

/// `φ_r`: the edges through the first `k − 2` vertices of part 1 get
/// pairwise distinct colors, every other edge gets one shared extra color.
pub fn build_phi_r(profile: &PartProfile, k: usize) -> Result<EdgeColoring> {
    if k < 2 || k - 2 > profile.size(1) {
        return Err(Error::ConstructionUndefined(format!(
            "φ_r needs 2 <= k <= n_1 + 2 (k = {k}, n_1 = {})",
            profile.size(1)
        )));
    }
    // Part 1 is the most significant digit, so the rainbow edges are exactly
    // the ranks below (k-2)·n_2⋯n_r.
    let rainbow = (k - 2) * profile.tail_product();
    let shared = rainbow as u32 + 1;
    let colors = profile
        .edges()
        .map(|id| if id.0 < rainbow { id.0 as u32 + 1 } else { shared })
        .collect();
    EdgeColoring::new(SubHypergraph::complete(profile), colors)
}

/// The classes `{α, ᾱ}` of `t`-prefixes over the size-2 parts, where `ᾱ`
/// flips every coordinate of `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClassFamily {
    pub t: usize,
    /// `(α, ᾱ)` with 1-based coordinates and `α_1 = 1`, in lexicographic
    /// order of `α`.
    pub classes: Vec<(Vec<usize>, Vec<usize>)>,
}

impl QClassFamily {
    pub fn new(profile: &PartProfile) -> Result<Self> {
        let t = profile.twos_prefix().ok_or_else(|| {
            Error::ConstructionUndefined(format!(
                "Q-class coloring needs n_1 = 2 (n_1 = {})",
                profile.size(1)
            ))
        })?;
        let classes = (0..1usize << (t - 1))
            .map(|bits| {
                let alpha: Vec<usize> = (0..t)
                    .map(|s| if s == 0 { 1 } else { 1 + ((bits >> (t - 1 - s)) & 1) })
                    .collect();
                let bar = alpha.iter().map(|&c| 3 - c).collect();
                (alpha, bar)
            })
            .collect();
        Ok(Self { t, classes })
    }

    /// Index of the class containing the prefix of `id`.
    pub fn class_of(&self, profile: &PartProfile, id: EdgeId) -> usize {
        let flip = profile.coord0(id, 0) == 1;
        (1..self.t).fold(0, |acc, s| {
            let bit = profile.coord0(id, s) ^ usize::from(flip);
            (acc << 1) | bit
        })
    }
}

/// For `n_1 = 2`: two edges share a color iff their `t`-prefixes lie in the
/// same class `{α, ᾱ}`. Uses `2^{t−1}` colors.
pub fn build_qclass_coloring(profile: &PartProfile) -> Result<EdgeColoring> {
    let family = QClassFamily::new(profile)?;
    Ok(EdgeColoring::from_classes(
        SubHypergraph::complete(profile),
        |id| family.class_of(profile, id),
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Selector {
    /// Lowest-ranked edge of each color.
    #[default]
    MinRank,
    SeededRandom(u64),
}

/// One edge per color class.
pub fn representing_subhypergraph(coloring: &EdgeColoring, selector: Selector) -> SubHypergraph {
    let classes = coloring.color_classes();
    let mut rng = match selector {
        Selector::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Selector::MinRank => None,
    };
    let picks = classes.iter().map(|class| match rng.as_mut() {
        Some(rng) => *class.choose(rng).expect("color classes are nonempty"),
        None => class[0],
    });
    SubHypergraph::from_ids(coloring.profile(), picks).expect("picks come from the host")
}
