//! Exact matching search on subhypergraphs, and the components of the
//! disjointness graph that decide the anti-Ramsey number of `M_2`.

use petgraph::unionfind::UnionFind;

use crate::budget::{Meter, SearchBudget, SearchOutcome};
use crate::hypergraph::{EdgeId, Matching, SubHypergraph};
use crate::search::{items_for, Packer, Reach};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub matching: Matching,
    /// True when the search completed, so no larger matching exists.
    pub optimal: bool,
    pub nodes: u64,
}

/// Maximum matching by branch and bound over edges in rank order.
pub fn max_matching(sub: &SubHypergraph, budget: &SearchBudget) -> MatchingResult {
    let items = items_for(sub.profile(), sub.iter());
    let mut meter = Meter::new(budget);
    let (best, optimal) = Packer::new(sub.profile(), &items, false, &mut meter).maximize();
    MatchingResult {
        matching: Matching::from_sorted_unchecked(best),
        optimal,
        nodes: meter.nodes(),
    }
}

/// Decides whether `sub` contains a matching with `k` edges.
pub fn has_k_matching(sub: &SubHypergraph, k: usize, budget: &SearchBudget) -> SearchOutcome {
    has_k_matching_counted(sub, k, budget).0
}

pub(crate) fn has_k_matching_counted(
    sub: &SubHypergraph,
    k: usize,
    budget: &SearchBudget,
) -> (SearchOutcome, u64) {
    let items = items_for(sub.profile(), sub.iter());
    let mut meter = Meter::new(budget);
    let outcome = match Packer::new(sub.profile(), &items, false, &mut meter).reach(k, &mut |_| true) {
        Reach::Hit(ids) => SearchOutcome::Found(Matching::from_sorted_unchecked(ids)),
        Reach::Complete => SearchOutcome::Absent,
        Reach::Exhausted => SearchOutcome::Indeterminate,
    };
    (outcome, meter.nodes())
}

/// Classes of member edges connected under "vertex-disjoint from".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Each class sorted by rank; classes ordered by their smallest rank.
    pub classes: Vec<Vec<EdgeId>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class holding `id`, if it is a member.
    pub fn class_of(&self, id: EdgeId) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.binary_search(&id).is_ok())
    }
}

/// Connected components of the graph on member edges whose adjacency is
/// vertex-disjointness. Pairwise union-find, `O(m²)`.
pub fn disjointness_components(sub: &SubHypergraph) -> ComponentPartition {
    let ids = sub.ids();
    let masks: Vec<u128> = ids.iter().map(|&id| sub.profile().edge_mask(id)).collect();
    let mut uf = UnionFind::<usize>::new(ids.len());
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            if masks[i] & masks[j] == 0 {
                uf.union(i, j);
            }
        }
    }
    let mut slot = vec![usize::MAX; ids.len()];
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    for (i, &id) in ids.iter().enumerate() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[root]].push(id);
    }
    ComponentPartition { classes }
}
