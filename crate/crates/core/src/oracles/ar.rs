//! Exhaustive anti-Ramsey numbers `ar(K, M_k)`.
//!
//! Colorings are enumerated as restricted growth strings along edge rank:
//! a new color may only be opened by the lowest-ranked uncolored edge, which
//! removes color renaming from the search. A branch dies as soon as its
//! colored prefix contains a rainbow `M_k`; since every such matching has a
//! last-colored edge, checking matchings through the newest edge suffices.

use std::collections::BTreeMap;

use super::canon::{CanonicalLabel, Canonizer};
use super::{OracleLimits, OracleValue};
use crate::budget::{Meter, SearchBudget};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeColoring, PartProfile, SubHypergraph};
use crate::matching::disjointness_components;

const KEEP_COLORINGS: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct ArResult {
    pub profile: PartProfile,
    pub k: usize,
    pub value: OracleValue,
    /// Maximizing colorings counted up to color renaming (exact runs).
    pub maximizers: u64,
    /// Canonical labels of the maximizers with one representative each.
    pub witnesses: Option<BTreeMap<CanonicalLabel, EdgeColoring>>,
    pub nodes: u64,
}

impl ArResult {
    pub fn labels(&self) -> Option<Vec<CanonicalLabel>> {
        self.witnesses.as_ref().map(|m| m.keys().cloned().collect())
    }
}

/// Every surjective coloring with exactly `q` colors and no rainbow `M_k`.
#[derive(Clone, Debug)]
pub struct FixedColorCount {
    pub q: u32,
    pub complete: bool,
    /// Count up to color renaming.
    pub labeled: u64,
    pub classes: Option<BTreeMap<CanonicalLabel, EdgeColoring>>,
    pub nodes: u64,
}

enum Mode {
    Max,
    Exactly(u32),
}

struct PartitionSearch<'m> {
    k: usize,
    mode: Mode,
    /// `earlier[e]`: masks and ranks of lower-ranked edges disjoint from `e`.
    earlier: Vec<Vec<(u128, usize)>>,
    colors: Vec<u32>,
    meter: &'m mut Meter,
    best: u32,
    kept: Vec<Vec<u32>>,
    total: u64,
}

impl PartitionSearch<'_> {
    /// True iff coloring edge `e` with `c` closes a rainbow `M_k` through `e`.
    fn closes_rainbow(&self, e: usize, c: u32) -> bool {
        let mut used = Vec::with_capacity(self.k);
        used.push(c);
        self.extend(&self.earlier[e], self.k - 1, 0, &mut used)
    }

    fn extend(&self, cands: &[(u128, usize)], need: usize, covered: u128, used: &mut Vec<u32>) -> bool {
        if need == 0 {
            return true;
        }
        for (i, &(mask, rank)) in cands.iter().enumerate() {
            if cands.len() - i < need {
                break;
            }
            let col = self.colors[rank];
            if mask & covered != 0 || used.contains(&col) {
                continue;
            }
            used.push(col);
            let hit = self.extend(&cands[i + 1..], need - 1, covered | mask, used);
            used.pop();
            if hit {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, pos: usize, used: u32) {
        let m = self.colors.len();
        let reachable = used as usize + (m - pos);
        match self.mode {
            Mode::Max if reachable < self.best as usize => return,
            Mode::Exactly(q) if reachable < q as usize => return,
            _ => {}
        }
        if pos == m {
            if let Mode::Max = self.mode {
                if used > self.best {
                    self.best = used;
                    self.kept.clear();
                    self.total = 0;
                }
            }
            self.total += 1;
            if self.kept.len() < KEEP_COLORINGS {
                self.kept.push(self.colors.clone());
            }
            return;
        }
        let top = match self.mode {
            Mode::Max => used + 1,
            Mode::Exactly(q) => (used + 1).min(q),
        };
        // fresh color first: large colorings show up early and tighten the bound
        for c in (1..=top).rev() {
            if !self.meter.tick() {
                return;
            }
            if self.closes_rainbow(pos, c) {
                continue;
            }
            self.colors[pos] = c;
            self.dfs(pos + 1, used.max(c));
            self.colors[pos] = 0;
            if self.meter.exhausted() {
                return;
            }
        }
    }
}

struct Found {
    best: u32,
    kept: Vec<Vec<u32>>,
    total: u64,
    nodes: u64,
    complete: bool,
}

fn search(profile: &PartProfile, k: usize, mode: Mode, floor: u32, limits: &OracleLimits) -> Found {
    let masks = profile.edge_masks();
    let earlier = (0..masks.len())
        .map(|e| {
            (0..e)
                .filter(|&f| masks[f] & masks[e] == 0)
                .map(|f| (masks[f], f))
                .collect()
        })
        .collect();
    let mut meter = Meter::new(&SearchBudget {
        node_cap: limits.partition_nodes,
        time_cap_ms: limits.time_cap_ms,
        seed: 0,
    });
    let mut s = PartitionSearch {
        k,
        mode,
        earlier,
        colors: vec![0; masks.len()],
        meter: &mut meter,
        best: floor,
        kept: Vec::new(),
        total: 0,
    };
    s.dfs(0, 0);
    let (best, kept, total) = (s.best, s.kept, s.total);
    Found {
        best,
        kept,
        total,
        nodes: meter.nodes(),
        complete: !meter.exhausted(),
    }
}

fn label_all(
    profile: &PartProfile,
    kept: &[Vec<u32>],
    limits: &OracleLimits,
) -> Option<BTreeMap<CanonicalLabel, EdgeColoring>> {
    let canon = Canonizer::new(profile, limits.group_cap).ok()?;
    let complete = SubHypergraph::complete(profile);
    let mut out = BTreeMap::new();
    for colors in kept {
        let coloring = EdgeColoring::new(complete.clone(), colors.clone()).expect("search emits surjective colorings");
        out.entry(canon.label_coloring(&coloring)).or_insert(coloring);
    }
    Some(out)
}

/// Largest `q` admitting a surjective `q`-coloring of the complete host
/// with no rainbow `M_k`, with all maximizing colorings.
pub fn ar_exact(profile: &PartProfile, k: usize, limits: &OracleLimits) -> Result<ArResult> {
    if k < 2 {
        return Err(Error::ConstructionUndefined(format!(
            "ar(K, M_k) needs k >= 2 (k = {k})"
        )));
    }
    // φ_r attains (k−2)n_2⋯n_r + 1 colors, so only colorings reaching that
    // many need to be explored; if none exists the search is rerun unseeded.
    let floor = if k - 2 <= profile.size(1) {
        ((k - 2) * profile.tail_product() + 1) as u32
    } else {
        0
    };
    let mut s = search(profile, k, Mode::Max, floor, limits);
    let mut nodes = s.nodes;
    if s.complete && s.total == 0 && floor > 0 {
        s = search(profile, k, Mode::Max, 0, limits);
        nodes += s.nodes;
    }
    let complete = s.complete;
    let m = profile.edge_count() as u64;
    let value = if complete {
        OracleValue::Exact(s.best as u64)
    } else {
        // one color never carries a rainbow M_2; the floor is attained by φ_r
        OracleValue::Bracket {
            lower: (s.best as u64).max(1),
            upper: m,
        }
    };
    let witnesses = (complete && s.total as usize <= KEEP_COLORINGS)
        .then(|| label_all(profile, &s.kept, limits))
        .flatten();
    Ok(ArResult {
        profile: profile.clone(),
        k,
        value,
        maximizers: s.total,
        witnesses,
        nodes,
    })
}

/// All colorings with exactly `q` colors and no rainbow `M_k`.
pub fn colorings_without_rainbow(profile: &PartProfile, k: usize, q: u32, limits: &OracleLimits) -> Result<FixedColorCount> {
    if k < 2 || q == 0 {
        return Err(Error::ConstructionUndefined(format!(
            "needs k >= 2 and q >= 1 (k = {k}, q = {q})"
        )));
    }
    let s = search(profile, k, Mode::Exactly(q), 0, limits);
    let (nodes, complete) = (s.nodes, s.complete);
    let classes = (complete && s.total as usize <= KEEP_COLORINGS)
        .then(|| label_all(profile, &s.kept, limits))
        .flatten();
    Ok(FixedColorCount {
        q,
        complete,
        labeled: s.total,
        classes,
        nodes,
    })
}

/// `ar(K, M_2)` as the number of disjointness components of the host.
pub fn ar_m2_closed(profile: &PartProfile) -> u64 {
    disjointness_components(&SubHypergraph::complete(profile)).len() as u64
}

/// The closed form `1` (`n_1 ≥ 3`) or `2^{t−1}` (`n_1 = 2`); `None` when
/// `n_1 = 1`.
pub fn ar_m2_formula(profile: &PartProfile) -> Option<u64> {
    match profile.size(1) {
        1 => None,
        2 => Some(1 << (profile.twos_prefix().expect("n_1 = 2") - 1)),
        _ => Some(1),
    }
}
