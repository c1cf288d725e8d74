//! Rainbow matchings: exact maximum search, k-matching finding, and the
//! cyclic slice decomposition.

mod slices;

pub use slices::{cyclic_slices, cyclic_slices_colored, SliceReport, SliceView};

use crate::budget::{Meter, SearchBudget, SearchOutcome};
use crate::hypergraph::{EdgeColoring, EdgeId, Matching};
use crate::search::{Item, Packer, Reach};

fn colored_items(coloring: &EdgeColoring, ids: impl IntoIterator<Item = EdgeId>) -> Vec<Item> {
    let profile = coloring.profile();
    ids.into_iter()
        .map(|id| Item {
            id,
            mask: profile.edge_mask(id),
            color: coloring.color(id).expect("edge in domain") - 1,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowResult {
    pub matching: Matching,
    pub optimal: bool,
    pub nodes: u64,
}

/// Largest matching whose edges carry pairwise distinct colors.
pub fn max_rainbow_matching(coloring: &EdgeColoring, budget: &SearchBudget) -> RainbowResult {
    let items = colored_items(coloring, coloring.domain().iter());
    let mut meter = Meter::new(budget);
    let (best, optimal) = Packer::new(coloring.profile(), &items, true, &mut meter).maximize();
    RainbowResult {
        matching: Matching::from_sorted_unchecked(best),
        optimal,
        nodes: meter.nodes(),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Complete search over edges in rank order.
    #[default]
    Generic,
    /// Try color-rich slices along `axis` first: a rainbow `(k−1)`-matching
    /// inside a slice extended by one disjoint edge of an unused color. Falls
    /// back to the generic search, so the answer stays exact.
    SliceGuided { axis: (usize, usize) },
}

impl Strategy {
    pub fn slice_guided() -> Self {
        Self::SliceGuided { axis: (1, 2) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FindResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    /// Slice whose rainbow `(k−1)`-matching was extended, if the
    /// slice-guided phase produced the witness.
    pub via_slice: Option<usize>,
}

/// Looks for a rainbow matching with `k` edges.
pub fn find_rainbow_k(
    coloring: &EdgeColoring,
    k: usize,
    strategy: Strategy,
    budget: &SearchBudget,
) -> FindResult {
    let mut meter = Meter::new(budget);
    let profile = coloring.profile();
    let all = colored_items(coloring, coloring.domain().iter());

    if let Strategy::SliceGuided { axis } = strategy {
        if k >= 2 {
            if let Ok(views) = cyclic_slices_colored(coloring, axis) {
                let guided_cap = (budget.node_cap / 4).clamp(1, 200_000);
                let mut guided = Meter::new(&SearchBudget {
                    node_cap: guided_cap,
                    ..*budget
                });
                if let Some((slice, witness)) = slice_phase(coloring, &all, &views, k, &mut guided) {
                    return FindResult {
                        outcome: SearchOutcome::Found(Matching::from_sorted_unchecked(witness)),
                        nodes: guided.nodes(),
                        via_slice: Some(slice),
                    };
                }
                // the guided phase spends its own small allowance
                meter = Meter::new(&SearchBudget {
                    node_cap: budget.node_cap.saturating_sub(guided.nodes()).max(1),
                    ..*budget
                });
                let outcome = generic(profile, &all, k, &mut meter);
                return FindResult {
                    outcome,
                    nodes: meter.nodes() + guided.nodes(),
                    via_slice: None,
                };
            }
        }
    }
    let outcome = generic(profile, &all, k, &mut meter);
    FindResult {
        outcome,
        nodes: meter.nodes(),
        via_slice: None,
    }
}

fn generic(
    profile: &crate::hypergraph::PartProfile,
    items: &[Item],
    k: usize,
    meter: &mut Meter,
) -> SearchOutcome {
    match Packer::new(profile, items, true, meter).reach(k, &mut |_| true) {
        Reach::Hit(ids) => SearchOutcome::Found(Matching::from_sorted_unchecked(ids)),
        Reach::Complete => SearchOutcome::Absent,
        Reach::Exhausted => SearchOutcome::Indeterminate,
    }
}

/// Slices by descending `|c(E_i)|` (ties by index); inside each, rainbow
/// `(k−1)`-matchings are extended by any disjoint edge of a fresh color.
fn slice_phase(
    coloring: &EdgeColoring,
    all: &[Item],
    views: &[SliceView],
    k: usize,
    meter: &mut Meter,
) -> Option<(usize, Vec<EdgeId>)> {
    let profile = coloring.profile();
    let mut order: Vec<&SliceView> = views.iter().collect();
    order.sort_by_key(|v| (std::cmp::Reverse(v.color_count()), v.shift));
    for view in order {
        let items = colored_items(coloring, view.host_edges().iter().copied());
        let mut extension = None;
        let mut extend = |partial: &[EdgeId]| {
            let covered = partial.iter().fold(0u128, |m, &id| m | profile.edge_mask(id));
            let used: Vec<u32> = partial.iter().map(|&id| coloring.color(id).unwrap() - 1).collect();
            extension = all
                .iter()
                .find(|it| it.mask & covered == 0 && !used.contains(&it.color))
                .map(|it| it.id);
            extension.is_some()
        };
        let reach = Packer::new(profile, &items, true, meter).reach(k - 1, &mut extend);
        match reach {
            Reach::Hit(mut ids) => {
                ids.push(extension.expect("accepted partials carry an extension"));
                return Some((view.shift, ids));
            }
            Reach::Exhausted => return None,
            Reach::Complete => {}
        }
    }
    None
}
