//! Canonical forms under the host automorphism group: vertex permutations
//! inside each part and permutations of equal-size parts. Colorings are
//! additionally taken up to renaming of colors.
//!
//! The group is enumerated outright, so canonicalization is only offered up
//! to a configurable group order.

use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeColoring, PartProfile, SubHypergraph};

pub const DEFAULT_GROUP_CAP: u128 = 10_000_000;

/// Minimal serialization of an object over its orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel(pub Vec<u8>);

impl CanonicalLabel {
    pub fn hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for CanonicalLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

/// One host automorphism: part `s` goes to part `target[s]` and vertex `j`
/// of part `s` (0-based) to vertex `perms[s][j]` of the target part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostAutomorphism {
    pub target: Vec<usize>,
    pub perms: Vec<Vec<usize>>,
}

impl HostAutomorphism {
    pub fn identity(profile: &PartProfile) -> Self {
        Self {
            target: (0..profile.r()).collect(),
            perms: profile.sizes().iter().map(|&n| (0..n).collect()).collect(),
        }
    }

    pub fn random(profile: &PartProfile, rng: &mut impl Rng) -> Self {
        let mut g = Self::identity(profile);
        for block in equal_blocks(profile) {
            let mut shuffled = block.clone();
            shuffled.shuffle(rng);
            for (&from, &to) in block.iter().zip(&shuffled) {
                g.target[from] = to;
            }
        }
        for perm in &mut g.perms {
            perm.shuffle(rng);
        }
        g
    }

    /// `map[old rank] = new rank`.
    pub fn rank_map(&self, profile: &PartProfile) -> Vec<u32> {
        let strides = profile.strides();
        let contrib: Vec<Vec<usize>> = (0..profile.r())
            .map(|s| self.perms[s].iter().map(|&v| v * strides[self.target[s]]).collect())
            .collect();
        profile
            .edges()
            .map(|id| (0..profile.r()).map(|s| contrib[s][profile.coord0(id, s)]).sum::<usize>() as u32)
            .collect()
    }

    pub fn apply_sub(&self, sub: &SubHypergraph) -> SubHypergraph {
        let map = self.rank_map(sub.profile());
        SubHypergraph::from_ids(
            sub.profile(),
            sub.iter().map(|id| crate::hypergraph::EdgeId(map[id.0] as usize)),
        )
        .expect("automorphisms preserve the host")
    }

    pub fn apply_coloring(&self, coloring: &EdgeColoring) -> EdgeColoring {
        let map = self.rank_map(coloring.profile());
        let mut colors = vec![0; map.len()];
        for (old, &c) in coloring.raw_colors().iter().enumerate() {
            colors[map[old] as usize] = c;
        }
        let domain = self.apply_sub(coloring.domain());
        EdgeColoring::new(domain, colors).expect("image of a valid coloring")
    }
}

/// Parts grouped by equal size (0-based indices).
fn equal_blocks(profile: &PartProfile) -> Vec<Vec<usize>> {
    let sizes = profile.sizes();
    (0..sizes.len())
        .chunk_by(|&s| sizes[s])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// `∏ n_i! · ∏_blocks |block|!`.
pub fn group_order(profile: &PartProfile) -> u128 {
    let vertex: u128 = profile
        .sizes()
        .iter()
        .fold(1u128, |acc, &n| acc.saturating_mul(factorial(n)));
    equal_blocks(profile)
        .iter()
        .fold(vertex, |acc, b| acc.saturating_mul(factorial(b.len())))
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Enumerates the automorphism group of one profile.
#[derive(Clone, Debug)]
pub struct Canonizer {
    profile: PartProfile,
    part_maps: Vec<Vec<usize>>,
    order: u128,
}

impl Canonizer {
    pub fn new(profile: &PartProfile, cap: u128) -> Result<Self> {
        let order = group_order(profile);
        if order > cap {
            return Err(Error::CanonicalizationBudget { order, cap });
        }
        let blocks = equal_blocks(profile);
        let per_block: Vec<Vec<Vec<usize>>> = blocks
            .iter()
            .map(|b| b.iter().copied().permutations(b.len()).collect())
            .collect();
        let part_maps = per_block
            .iter()
            .multi_cartesian_product()
            .map(|choice| {
                let mut target = vec![0; profile.r()];
                for (block, image) in blocks.iter().zip(choice) {
                    for (&from, &to) in block.iter().zip(image) {
                        target[from] = to;
                    }
                }
                target
            })
            .collect::<Vec<_>>();
        // multi_cartesian_product of zero iterators yields nothing
        let part_maps = if part_maps.is_empty() {
            vec![(0..profile.r()).collect()]
        } else {
            part_maps
        };
        Ok(Self {
            profile: profile.clone(),
            part_maps,
            order,
        })
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Calls `f` with the rank map of every group element.
    pub fn for_each_map(&self, mut f: impl FnMut(&[u32])) {
        let r = self.profile.r();
        let mut map = vec![0u32; self.profile.edge_count()];
        for target in &self.part_maps {
            let mut perms: Vec<Vec<usize>> =
                self.profile.sizes().iter().map(|&n| (0..n).collect()).collect();
            loop {
                let g = HostAutomorphism {
                    target: target.clone(),
                    perms: perms.clone(),
                };
                map.copy_from_slice(&g.rank_map(&self.profile));
                f(&map);
                // odometer over the per-part permutations
                let mut s = 0;
                while s < r && !next_permutation(&mut perms[s]) {
                    s += 1;
                }
                if s == r {
                    break;
                }
            }
        }
    }

    pub fn label_sub(&self, sub: &SubHypergraph) -> CanonicalLabel {
        let m = self.profile.edge_count();
        let bits: Vec<bool> = (0..m).map(|i| sub.bits().contains(i)).collect();
        let mut best: Option<Vec<bool>> = None;
        let mut image = vec![false; m];
        self.for_each_map(|map| {
            image.iter_mut().for_each(|b| *b = false);
            for (old, &b) in bits.iter().enumerate() {
                if b {
                    image[map[old] as usize] = true;
                }
            }
            if best.as_ref().is_none_or(|cur| image < *cur) {
                best = Some(image.clone());
            }
        });
        let best = best.expect("group has an identity");
        let mut bytes = vec![0u8; m.div_ceil(8)];
        for (i, &b) in best.iter().enumerate() {
            if b {
                bytes[i / 8] |= 0x80 >> (i % 8);
            }
        }
        CanonicalLabel(bytes)
    }

    /// Minimal restricted-growth form of the coloring's images. Entries
    /// outside the domain stay 0.
    pub fn label_colors(&self, colors: &[u32]) -> CanonicalLabel {
        let m = self.profile.edge_count();
        let mut best: Option<Vec<u32>> = None;
        let mut image = vec![0u32; m];
        let mut rename = vec![0u32; colors.iter().copied().max().unwrap_or(0) as usize + 1];
        self.for_each_map(|map| {
            for (old, &c) in colors.iter().enumerate() {
                image[map[old] as usize] = c;
            }
            rename.iter_mut().for_each(|x| *x = 0);
            let mut next = 0;
            for c in image.iter_mut() {
                if *c == 0 {
                    continue;
                }
                let slot = &mut rename[*c as usize];
                if *slot == 0 {
                    next += 1;
                    *slot = next;
                }
                *c = *slot;
            }
            if best.as_ref().is_none_or(|cur| image < *cur) {
                best = Some(image.clone());
            }
        });
        let best = best.expect("group has an identity");
        CanonicalLabel(best.iter().flat_map(|c| c.to_be_bytes()).collect())
    }

    pub fn label_coloring(&self, coloring: &EdgeColoring) -> CanonicalLabel {
        self.label_colors(coloring.raw_colors())
    }
}

/// Objects with a canonical form.
pub trait Canonize {
    fn canonical_form_with(&self, cap: u128) -> Result<CanonicalLabel>;
}

impl Canonize for SubHypergraph {
    fn canonical_form_with(&self, cap: u128) -> Result<CanonicalLabel> {
        Ok(Canonizer::new(self.profile(), cap)?.label_sub(self))
    }
}

impl Canonize for EdgeColoring {
    fn canonical_form_with(&self, cap: u128) -> Result<CanonicalLabel> {
        Ok(Canonizer::new(self.profile(), cap)?.label_coloring(self))
    }
}

/// Canonical label with the default group cap.
pub fn canonical_form<T: Canonize + ?Sized>(object: &T) -> Result<CanonicalLabel> {
    object.canonical_form_with(DEFAULT_GROUP_CAP)
}
