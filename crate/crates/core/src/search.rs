//! Branch-and-bound over packings of pairwise disjoint (and optionally
//! pairwise distinctly colored) edges. Shared by the plain and the rainbow
//! matching solvers.

use crate::budget::Meter;
use crate::hypergraph::{EdgeId, PartProfile};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Item {
    pub id: EdgeId,
    pub mask: u128,
    /// 0-based color index; ignored for uncolored packings.
    pub color: u32,
}

pub(crate) fn items_for(profile: &PartProfile, ids: impl IntoIterator<Item = EdgeId>) -> Vec<Item> {
    ids.into_iter()
        .map(|id| Item {
            id,
            mask: profile.edge_mask(id),
            color: 0,
        })
        .collect()
}

pub(crate) struct Packer<'a, 'm> {
    items: &'a [Item],
    colored: bool,
    part_masks: Vec<u128>,
    stamp: Vec<u32>,
    generation: u32,
    meter: &'m mut Meter,
    best: Vec<usize>,
}

enum Goal<'f> {
    Max { ceiling: usize },
    Reach {
        k: usize,
        accept: &'f mut dyn FnMut(&[usize]) -> bool,
        hit: Option<Vec<usize>>,
    },
}

/// How a target search ended.
pub(crate) enum Reach {
    Hit(Vec<EdgeId>),
    Exhausted,
    Complete,
}

impl<'a, 'm> Packer<'a, 'm> {
    pub fn new(profile: &PartProfile, items: &'a [Item], colored: bool, meter: &'m mut Meter) -> Self {
        let palette = if colored {
            items.iter().map(|it| it.color as usize + 1).max().unwrap_or(0)
        } else {
            0
        };
        Self {
            items,
            colored,
            part_masks: (0..profile.r()).map(|s| profile.part_mask(s)).collect(),
            stamp: vec![0; palette],
            generation: 0,
            meter,
            best: Vec::new(),
        }
    }

    fn ids(&self, picks: &[usize]) -> Vec<EdgeId> {
        picks.iter().map(|&i| self.items[i].id).collect()
    }

    /// Largest packing. The flag is false when the budget ran out first.
    pub fn maximize(mut self) -> (Vec<EdgeId>, bool) {
        let all: Vec<usize> = (0..self.items.len()).collect();
        let ceiling = self.bound(&all);
        let mut goal = Goal::Max { ceiling };
        let mut chosen = Vec::new();
        self.dfs(&all, &mut chosen, &mut goal);
        let complete = !self.meter.exhausted();
        (self.ids(&self.best.clone()), complete)
    }

    /// Looks for a packing of exactly `k` items accepted by `accept`.
    pub fn reach(mut self, k: usize, accept: &mut dyn FnMut(&[EdgeId]) -> bool) -> Reach {
        let items = self.items;
        let mut translate = |picks: &[usize]| {
            let ids: Vec<EdgeId> = picks.iter().map(|&i| items[i].id).collect();
            accept(&ids)
        };
        let all: Vec<usize> = (0..self.items.len()).collect();
        let mut goal = Goal::Reach {
            k,
            accept: &mut translate,
            hit: None,
        };
        let mut chosen = Vec::new();
        self.dfs(&all, &mut chosen, &mut goal);
        match goal {
            Goal::Reach { hit: Some(h), .. } => Reach::Hit(self.ids(&h)),
            _ if self.meter.exhausted() => Reach::Exhausted,
            _ => Reach::Complete,
        }
    }

    /// Upper bound on how many more items fit: per-part uncovered vertices
    /// still reachable, distinct colors still available, candidate count.
    fn bound(&mut self, cands: &[usize]) -> usize {
        let union = cands.iter().fold(0u128, |m, &i| m | self.items[i].mask);
        let mut b = cands.len();
        for pm in &self.part_masks {
            b = b.min((union & pm).count_ones() as usize);
        }
        if self.colored && b > 0 {
            self.generation = self.generation.wrapping_add(1);
            if self.generation == 0 {
                self.stamp.iter_mut().for_each(|s| *s = 0);
                self.generation = 1;
            }
            let mut distinct = 0;
            for &i in cands {
                let c = self.items[i].color as usize;
                if self.stamp[c] != self.generation {
                    self.stamp[c] = self.generation;
                    distinct += 1;
                    if distinct >= b {
                        break;
                    }
                }
            }
            b = b.min(distinct);
        }
        b
    }

    /// Returns true when the search must stop.
    fn dfs(&mut self, cands: &[usize], chosen: &mut Vec<usize>, goal: &mut Goal<'_>) -> bool {
        match goal {
            Goal::Max { ceiling } => {
                if chosen.len() > self.best.len() {
                    self.best = chosen.clone();
                    if self.best.len() >= *ceiling {
                        return true;
                    }
                }
            }
            Goal::Reach { k, accept, hit } => {
                if chosen.len() == *k {
                    if accept(chosen) {
                        *hit = Some(chosen.clone());
                        return true;
                    }
                    return false;
                }
            }
        }
        let mut start = 0;
        while start < cands.len() {
            if !self.meter.tick() {
                return true;
            }
            let rest = &cands[start..];
            let bound = self.bound(rest);
            let prune = match goal {
                Goal::Max { .. } => chosen.len() + bound <= self.best.len(),
                Goal::Reach { k, .. } => chosen.len() + bound < *k,
            };
            if prune {
                return false;
            }
            let head = self.items[rest[0]];
            let next: Vec<usize> = rest[1..]
                .iter()
                .copied()
                .filter(|&j| {
                    let it = &self.items[j];
                    it.mask & head.mask == 0 && (!self.colored || it.color != head.color)
                })
                .collect();
            chosen.push(rest[0]);
            if self.dfs(&next, chosen, goal) {
                return true;
            }
            chosen.pop();
            start += 1;
        }
        false
    }
}
