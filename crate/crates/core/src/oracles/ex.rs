//! Exhaustive Turán numbers `ex(K, M_k)` with all extremal subhypergraphs.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::canon::{CanonicalLabel, Canonizer};
use super::{OracleLimits, OracleValue};
use crate::budget::{Meter, SearchBudget};
use crate::hypergraph::{EdgeId, PartProfile, SubHypergraph};

/// Hosts up to this many edges are searched by plain subset enumeration.
pub const SUBSET_ENUMERATION_EDGES: usize = 20;
/// Maximizers kept for labeling.
const KEEP_MAXIMIZERS: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExMethod {
    Trivial,
    SubsetEnumeration,
    MaximumClique,
    BranchAndBound,
}

#[derive(Clone, Debug)]
pub struct ExResult {
    pub profile: PartProfile,
    pub k: usize,
    pub value: OracleValue,
    pub method: ExMethod,
    /// Number of `M_k`-free subhypergraphs of maximum size (exact runs).
    pub maximizers: u64,
    /// Canonical labels of the maximizers with one representative each;
    /// `None` when the search or the canonicalization did not complete.
    pub extremal: Option<BTreeMap<CanonicalLabel, SubHypergraph>>,
    pub nodes: u64,
}

impl ExResult {
    pub fn labels(&self) -> Option<Vec<CanonicalLabel>> {
        self.extremal.as_ref().map(|m| m.keys().cloned().collect())
    }
}

/// True iff some `need` pairwise disjoint masks avoid `covered`.
pub(crate) fn packs(masks: &[u128], need: usize, covered: u128) -> bool {
    if need == 0 {
        return true;
    }
    if masks.len() < need {
        return false;
    }
    for (i, &m) in masks.iter().enumerate() {
        if m & covered == 0 && packs(&masks[i + 1..], need - 1, covered | m) {
            return true;
        }
    }
    false
}

/// Maximum size of an `M_k`-free subhypergraph of the complete host.
pub fn ex_exact(profile: &PartProfile, k: usize, limits: &OracleLimits) -> ExResult {
    let m = profile.edge_count();
    let masks = profile.edge_masks();
    let budget = SearchBudget {
        node_cap: limits.subset_nodes,
        time_cap_ms: limits.time_cap_ms,
        seed: 0,
    };
    let mut meter = Meter::new(&budget);

    let (method, best, found, total) = if k <= 1 {
        // every edge is a 1-matching
        (ExMethod::Trivial, 0, vec![Vec::new()], 1)
    } else if k == 2 && m > SUBSET_ENUMERATION_EDGES {
        let (best, found, total) = max_intersecting(&masks, &mut meter);
        (ExMethod::MaximumClique, best, found, total)
    } else {
        let mut s = SubsetSearch {
            masks: &masks,
            k,
            meter: &mut meter,
            chosen: Vec::new(),
            best: 0,
            found: Vec::new(),
            found_total: 0,
        };
        s.dfs(0);
        let method = if m <= SUBSET_ENUMERATION_EDGES {
            ExMethod::SubsetEnumeration
        } else {
            ExMethod::BranchAndBound
        };
        (method, s.best, s.found, s.found_total)
    };

    let exact = !meter.exhausted();
    let value = if exact {
        OracleValue::Exact(best as u64)
    } else {
        OracleValue::Bracket {
            lower: best as u64,
            upper: m as u64,
        }
    };
    let maximizers = total as u64;
    let extremal = (exact && total <= KEEP_MAXIMIZERS)
        .then(|| Canonizer::new(profile, limits.group_cap).ok())
        .flatten()
        .map(|canon| {
            let mut out = BTreeMap::new();
            for set in &found {
                let sub = SubHypergraph::from_ids(profile, set.iter().map(|&i| EdgeId(i)))
                    .expect("ranks come from the host");
                out.entry(canon.label_sub(&sub)).or_insert(sub);
            }
            out
        });
    ExResult {
        profile: profile.clone(),
        k,
        value,
        method,
        maximizers,
        extremal,
        nodes: meter.nodes(),
    }
}

struct SubsetSearch<'a, 'm> {
    masks: &'a [u128],
    k: usize,
    meter: &'m mut Meter,
    chosen: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
    found_total: usize,
}

impl SubsetSearch<'_, '_> {
    /// Include/exclude over ranks; an edge is included only if the set stays
    /// `M_k`-free. Every maximizer is kept, so the bound prunes strictly.
    fn dfs(&mut self, pos: usize) {
        if !self.meter.tick() {
            return;
        }
        let m = self.masks.len();
        if self.chosen.len() + (m - pos) < self.best {
            return;
        }
        if pos == m {
            if self.chosen.len() > self.best {
                self.best = self.chosen.len();
                self.found.clear();
                self.found_total = 0;
            }
            self.found_total += 1;
            if self.found.len() < KEEP_MAXIMIZERS {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        let e = self.masks[pos];
        let disjoint: Vec<u128> = self
            .chosen
            .iter()
            .map(|&i| self.masks[i])
            .filter(|&f| f & e == 0)
            .collect();
        if !packs(&disjoint, self.k - 1, 0) {
            self.chosen.push(pos);
            self.dfs(pos + 1);
            self.chosen.pop();
        }
        self.dfs(pos + 1);
    }
}

/// All maximum cliques of the intersection graph (Bron–Kerbosch with
/// pivoting, pruned by `|R| + |P| < best`).
fn max_intersecting(masks: &[u128], meter: &mut Meter) -> (usize, Vec<Vec<usize>>, usize) {
    let m = masks.len();
    let adj: Vec<FixedBitSet> = (0..m)
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(m);
            for j in 0..m {
                if i != j && masks[i] & masks[j] != 0 {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let mut p = FixedBitSet::with_capacity(m);
    p.insert_range(..);
    let mut state = Cliques {
        adj: &adj,
        meter,
        best: 0,
        found: Vec::new(),
        total: 0,
    };
    let mut r = Vec::new();
    state.expand(&mut r, p, FixedBitSet::with_capacity(m));
    (state.best, state.found, state.total)
}

struct Cliques<'a, 'm> {
    adj: &'a [FixedBitSet],
    meter: &'m mut Meter,
    best: usize,
    found: Vec<Vec<usize>>,
    total: usize,
}

impl Cliques<'_, '_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet) {
        if !self.meter.tick() {
            return;
        }
        let p_len = p.count_ones(..);
        if r.len() + p_len < self.best {
            return;
        }
        if p_len == 0 {
            if x.is_clear() {
                if r.len() > self.best {
                    self.best = r.len();
                    self.found.clear();
                    self.total = 0;
                }
                self.total += 1;
                if self.found.len() < KEEP_MAXIMIZERS {
                    let mut c = r.clone();
                    c.sort_unstable();
                    self.found.push(c);
                }
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersection(&self.adj[u]).count())
            .expect("p is nonempty");
        let branch: Vec<usize> = p.difference(&self.adj[pivot]).collect();
        for v in branch {
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            r.push(v);
            self.expand(r, np, nx);
            r.pop();
            if self.meter.exhausted() {
                return;
            }
            p.set(v, false);
            x.insert(v);
        }
    }
}
