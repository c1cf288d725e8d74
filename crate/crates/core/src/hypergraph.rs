//! Complete r-partite r-uniform hosts, their subhypergraphs, edge colorings
//! and matchings.
//!
//! Parts are kept in nondecreasing size order, so `n_1` is always the
//! smallest part. All indices that cross the public boundary (parts, vertex
//! positions, edge coordinates, color ids) are 1-based; edge ranks are
//! 0-based mixed-radix numbers with part 1 most significant.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex masks are `u128`, one bit per vertex of the host.
pub const MAX_VERTICES: usize = 128;
/// Upper limit on `∏ n_i` accepted by [`PartProfile::new`].
pub const MAX_EDGES: usize = 1 << 24;

/// Part sizes `n_1 ≤ … ≤ n_r` of a complete r-partite r-uniform host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartProfile {
    sizes: Vec<usize>,
    input_order: Vec<usize>,
    strides: Vec<usize>,
    offsets: Vec<usize>,
    edge_count: usize,
}

impl PartProfile {
    /// Builds the canonical (sorted) profile. The permutation from the input
    /// order is kept: `input_order()[s]` is the 1-based input position of
    /// the part stored at sorted position `s`.
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::ArityTooSmall(sizes.len()));
        }
        Self::build(sizes)
    }

    /// Like [`PartProfile::new`] but admits a single part. Slices of a
    /// bipartite host project onto one part.
    pub(crate) fn with_min_arity_one(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::ArityTooSmall(0));
        }
        Self::build(sizes)
    }

    fn build(sizes: &[usize]) -> Result<Self> {
        if let Some(&bad) = sizes.iter().find(|&&n| n == 0) {
            return Err(Error::InvalidPartSize(bad));
        }
        let mut order: Vec<usize> = (0..sizes.len()).collect();
        order.sort_by_key(|&i| (sizes[i], i));
        let sorted: Vec<usize> = order.iter().map(|&i| sizes[i]).collect();

        let vertex_count: usize = sorted.iter().sum();
        if vertex_count > MAX_VERTICES {
            return Err(Error::ProfileTooLarge(format!(
                "{vertex_count} vertices (limit {MAX_VERTICES})"
            )));
        }
        let mut edge_count: usize = 1;
        for &n in &sorted {
            edge_count = edge_count
                .checked_mul(n)
                .filter(|&c| c <= MAX_EDGES)
                .ok_or_else(|| Error::ProfileTooLarge(format!("more than {MAX_EDGES} edges")))?;
        }
        let r = sorted.len();
        let mut strides = vec![1; r];
        for s in (0..r.saturating_sub(1)).rev() {
            strides[s] = strides[s + 1] * sorted[s + 1];
        }
        let mut offsets = vec![0; r];
        for s in 1..r {
            offsets[s] = offsets[s - 1] + sorted[s - 1];
        }
        Ok(Self {
            sizes: sorted,
            input_order: order.into_iter().map(|i| i + 1).collect(),
            strides,
            offsets,
            edge_count,
        })
    }

    pub fn r(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Size of part `part` (1-based).
    pub fn size(&self, part: usize) -> usize {
        self.sizes[part - 1]
    }

    pub fn input_order(&self) -> &[usize] {
        &self.input_order
    }

    /// `e(K) = ∏ n_i`.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `n_2 ⋯ n_r`, the number of edges through a fixed vertex of part 1.
    pub fn tail_product(&self) -> usize {
        self.sizes[1..].iter().product()
    }

    /// Largest `t` with `n_t = 2`, when `n_1 = 2`.
    pub fn twos_prefix(&self) -> Option<usize> {
        (self.sizes[0] == 2).then(|| self.sizes.iter().take_while(|&&n| n == 2).count())
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count).map(EdgeId)
    }

    /// Mixed-radix rank, part 1 most significant.
    pub fn edge_rank(&self, edge: &Edge) -> Result<EdgeId> {
        if edge.coords.len() != self.r() {
            return Err(Error::InvalidEdge(format!(
                "{edge} has {} coordinates, profile {self} has {} parts",
                edge.coords.len(),
                self.r()
            )));
        }
        let mut rank = 0;
        for (s, &c) in edge.coords.iter().enumerate() {
            if c == 0 || c > self.sizes[s] {
                return Err(Error::InvalidEdge(format!(
                    "{edge}: coordinate {c} outside 1..{} in part {}",
                    self.sizes[s],
                    s + 1
                )));
            }
            rank += (c - 1) * self.strides[s];
        }
        Ok(EdgeId(rank))
    }

    pub fn edge_unrank(&self, id: EdgeId) -> Result<Edge> {
        self.check_id(id)?;
        Ok(Edge {
            coords: (0..self.r()).map(|s| self.coord0(id, s) + 1).collect(),
        })
    }

    pub fn check_id(&self, id: EdgeId) -> Result<()> {
        if id.0 >= self.edge_count {
            return Err(Error::InvalidEdge(format!(
                "rank {} outside 0..{}",
                id.0, self.edge_count
            )));
        }
        Ok(())
    }

    /// 0-based coordinate of `id` in 0-based part `part`.
    #[inline]
    pub(crate) fn coord0(&self, id: EdgeId, part: usize) -> usize {
        (id.0 / self.strides[part]) % self.sizes[part]
    }

    #[inline]
    pub(crate) fn rank_of0(&self, coords0: &[usize]) -> EdgeId {
        EdgeId(
            coords0
                .iter()
                .zip(&self.strides)
                .map(|(c, st)| c * st)
                .sum(),
        )
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v.part == 0 || v.part > self.r() || v.index == 0 || v.index > self.sizes[v.part - 1] {
            return Err(Error::InvalidVertex(format!("{v} not in profile {self}")));
        }
        Ok(())
    }

    pub(crate) fn vertex_bit(&self, v: Vertex) -> u128 {
        1u128 << (self.offsets[v.part - 1] + v.index - 1)
    }

    /// Mask of all vertices of 0-based part `part0`.
    pub(crate) fn part_mask(&self, part0: usize) -> u128 {
        let n = self.sizes[part0];
        let ones = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        ones << self.offsets[part0]
    }

    pub fn edge_mask(&self, id: EdgeId) -> u128 {
        (0..self.r()).fold(0u128, |m, s| m | 1u128 << (self.offsets[s] + self.coord0(id, s)))
    }

    /// Vertex masks of every edge, indexed by rank.
    pub fn edge_masks(&self) -> Vec<u128> {
        self.edges().map(|id| self.edge_mask(id)).collect()
    }

    pub fn edge_string(&self, id: EdgeId) -> String {
        let mut out = String::from("(");
        for s in 0..self.r() {
            if s > 0 {
                out.push(',');
            }
            out.push_str(&(self.coord0(id, s) + 1).to_string());
        }
        out.push(')');
        out
    }

    /// Profile with 0-based part `part0` removed.
    pub(crate) fn without_part(&self, part0: usize) -> Result<Self> {
        let rest: Vec<usize> = self
            .sizes
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != part0)
            .map(|(_, &n)| n)
            .collect();
        Self::with_min_arity_one(&rest)
    }
}

impl fmt::Display for PartProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for PartProfile {
    type Err = Error;

    /// Parses `"n1xn2x…xnr"`; parts may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .trim()
            .split(['x', 'X'])
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part size {tok:?} in profile {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&sizes)
    }
}

impl Serialize for PartProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PartProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex `v_{part,index}`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub part: usize,
    pub index: usize,
}

impl Vertex {
    pub fn new(part: usize, index: usize) -> Self {
        Self { part, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[{},{}]", self.part, self.index)
    }
}

/// A transversal: one 1-based vertex index per part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub coords: Vec<usize>,
}

impl Edge {
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Self {
            coords: coords.into(),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("edge {s:?} is not of the form (i1,...,ir)")))?;
        let coords = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {t:?} in edge {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coords })
    }
}

/// True iff the two edges use different vertices in every part.
pub fn is_disjoint(e: &Edge, f: &Edge) -> bool {
    e.coords.len() == f.coords.len() && e.coords.iter().zip(&f.coords).all(|(a, b)| a != b)
}

/// Mixed-radix rank of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

/// A subset of the complete edge set over a profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubHypergraph {
    profile: PartProfile,
    members: FixedBitSet,
}

impl SubHypergraph {
    pub fn empty(profile: &PartProfile) -> Self {
        Self {
            profile: profile.clone(),
            members: FixedBitSet::with_capacity(profile.edge_count()),
        }
    }

    pub fn complete(profile: &PartProfile) -> Self {
        let mut members = FixedBitSet::with_capacity(profile.edge_count());
        members.insert_range(..);
        Self {
            profile: profile.clone(),
            members,
        }
    }

    pub fn from_ids(profile: &PartProfile, ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut sub = Self::empty(profile);
        for id in ids {
            profile.check_id(id)?;
            sub.members.insert(id.0);
        }
        Ok(sub)
    }

    pub fn from_fn(profile: &PartProfile, mut keep: impl FnMut(EdgeId) -> bool) -> Self {
        let mut sub = Self::empty(profile);
        for id in profile.edges() {
            if keep(id) {
                sub.members.insert(id.0);
            }
        }
        sub
    }

    pub fn profile(&self) -> &PartProfile {
        &self.profile
    }

    /// `e(G)`.
    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.members.contains(id.0)
    }

    pub fn insert(&mut self, id: EdgeId) -> Result<()> {
        self.profile.check_id(id)?;
        self.members.insert(id.0);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.ones().map(EdgeId)
    }

    pub fn ids(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.profile.check_vertex(v)?;
        let bit = self.profile.vertex_bit(v);
        Ok(self
            .iter()
            .filter(|&id| self.profile.edge_mask(id) & bit != 0)
            .count())
    }

    /// Number of member edges containing both `u` and `v`; zero when the two
    /// vertices lie in the same part.
    pub fn codegree(&self, u: Vertex, v: Vertex) -> Result<usize> {
        self.profile.check_vertex(u)?;
        self.profile.check_vertex(v)?;
        if u.part == v.part {
            return Ok(0);
        }
        let both = self.profile.vertex_bit(u) | self.profile.vertex_bit(v);
        Ok(self
            .iter()
            .filter(|&id| self.profile.edge_mask(id) & both == both)
            .count())
    }

    /// `G − v`: drops every member edge through `v`. The host profile is
    /// unchanged, so `v` simply becomes isolated.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Self> {
        self.profile.check_vertex(v)?;
        let bit = self.profile.vertex_bit(v);
        let mut out = self.clone();
        for id in self.iter() {
            if self.profile.edge_mask(id) & bit != 0 {
                out.members.set(id.0, false);
            }
        }
        Ok(out)
    }

    /// `G[V']`: keeps the edges whose vertices all satisfy `keep`.
    pub fn induced(&self, mut keep: impl FnMut(Vertex) -> bool) -> Self {
        let mut out = Self::empty(&self.profile);
        for id in self.iter() {
            let inside = (0..self.profile.r())
                .all(|s| keep(Vertex::new(s + 1, self.profile.coord0(id, s) + 1)));
            if inside {
                out.members.insert(id.0);
            }
        }
        out
    }

    /// Vertices of the host not covered by any member edge.
    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        let covered = self
            .iter()
            .fold(0u128, |m, id| m | self.profile.edge_mask(id));
        let mut out = Vec::new();
        for part in 1..=self.profile.r() {
            for index in 1..=self.profile.size(part) {
                let v = Vertex::new(part, index);
                if covered & self.profile.vertex_bit(v) == 0 {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn to_doc(&self) -> SubHypergraphDoc {
        SubHypergraphDoc {
            profile: self.profile.to_string(),
            edges: self.len(),
            members: self.iter().map(|id| id.0).collect(),
        }
    }

    pub fn from_doc(doc: &SubHypergraphDoc) -> Result<Self> {
        let profile: PartProfile = doc.profile.parse()?;
        Self::from_ids(&profile, doc.members.iter().map(|&r| EdgeId(r)))
    }
}

/// JSON form of a subhypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubHypergraphDoc {
    pub profile: String,
    #[serde(default)]
    pub edges: usize,
    pub members: Vec<usize>,
}

/// A surjective map from the edges of a domain onto colors `1..=q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    domain: SubHypergraph,
    // indexed by rank; 0 for edges outside the domain
    colors: Vec<u32>,
    q: u32,
}

impl EdgeColoring {
    /// `colors` is indexed by edge rank over the whole host; entries outside
    /// the domain must be 0, entries inside must cover `1..=q` exactly.
    pub fn new(domain: SubHypergraph, colors: Vec<u32>) -> Result<Self> {
        let profile = domain.profile();
        if colors.len() != profile.edge_count() {
            return Err(Error::InvalidColoring(format!(
                "{} color entries for {} edges",
                colors.len(),
                profile.edge_count()
            )));
        }
        let mut q = 0;
        for (rank, &c) in colors.iter().enumerate() {
            match (domain.contains(EdgeId(rank)), c) {
                (true, 0) => {
                    return Err(Error::InvalidColoring(format!(
                        "edge {} of the domain has no color",
                        profile.edge_string(EdgeId(rank))
                    )))
                }
                (false, c) if c != 0 => {
                    return Err(Error::InvalidColoring(format!(
                        "edge {} outside the domain is colored",
                        profile.edge_string(EdgeId(rank))
                    )))
                }
                _ => q = q.max(c),
            }
        }
        let mut seen = vec![false; q as usize + 1];
        for &c in &colors {
            seen[c as usize] = true;
        }
        if let Some(missing) = (1..=q).find(|&c| !seen[c as usize]) {
            return Err(Error::InvalidColoring(format!(
                "color {missing} of 1..{q} is unused"
            )));
        }
        Ok(Self { domain, colors, q })
    }

    /// Colors `domain` by arbitrary class labels. Color ids are handed out
    /// in order of first appearance along edge rank.
    pub fn from_classes<L: Eq + Hash>(
        domain: SubHypergraph,
        mut label: impl FnMut(EdgeId) -> L,
    ) -> Self {
        let mut ids: HashMap<L, u32> = HashMap::new();
        let mut colors = vec![0; domain.profile().edge_count()];
        for id in domain.iter() {
            let next = ids.len() as u32 + 1;
            colors[id.0] = *ids.entry(label(id)).or_insert(next);
        }
        let q = ids.len() as u32;
        Self { domain, colors, q }
    }

    /// Domain = the assigned edges.
    pub fn from_assignments(profile: &PartProfile, assignments: &[(EdgeId, u32)]) -> Result<Self> {
        let mut colors = vec![0; profile.edge_count()];
        let mut domain = SubHypergraph::empty(profile);
        for &(id, c) in assignments {
            domain.insert(id)?;
            if c == 0 {
                return Err(Error::InvalidColoring("color ids start at 1".into()));
            }
            if colors[id.0] != 0 && colors[id.0] != c {
                return Err(Error::InvalidColoring(format!(
                    "edge {} assigned two colors",
                    profile.edge_string(id)
                )));
            }
            colors[id.0] = c;
        }
        Self::new(domain, colors)
    }

    pub fn profile(&self) -> &PartProfile {
        self.domain.profile()
    }

    pub fn domain(&self) -> &SubHypergraph {
        &self.domain
    }

    /// `|c(H)|`.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn color(&self, id: EdgeId) -> Option<u32> {
        match self.colors.get(id.0) {
            Some(&c) if c != 0 => Some(c),
            _ => None,
        }
    }

    /// Rank-indexed colors, 0 outside the domain.
    pub fn raw_colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color classes in color order, each sorted by rank.
    pub fn color_classes(&self) -> Vec<Vec<EdgeId>> {
        let mut classes = vec![Vec::new(); self.q as usize];
        for id in self.domain.iter() {
            classes[self.colors[id.0] as usize - 1].push(id);
        }
        classes
    }

    /// `c(E)` for a set of edges.
    pub fn colors_of(&self, ids: &[EdgeId]) -> Vec<u32> {
        let mut out: Vec<u32> = ids.iter().filter_map(|&id| self.color(id)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// True iff all edges lie in the domain and carry pairwise distinct colors.
    pub fn is_rainbow(&self, ids: &[EdgeId]) -> bool {
        ids.iter().all(|&id| self.color(id).is_some()) && self.colors_of(ids).len() == ids.len()
    }

    pub fn to_doc(&self) -> ColoringDoc {
        ColoringDoc {
            profile: self.profile().to_string(),
            q: self.q,
            assignments: self.domain.iter().map(|id| (id.0, self.colors[id.0])).collect(),
        }
    }

    pub fn from_doc(doc: &ColoringDoc) -> Result<Self> {
        let profile: PartProfile = doc.profile.parse()?;
        let assignments: Vec<(EdgeId, u32)> = doc
            .assignments
            .iter()
            .map(|&(r, c)| (EdgeId(r), c))
            .collect();
        let coloring = Self::from_assignments(&profile, &assignments)?;
        if coloring.q != doc.q {
            return Err(Error::InvalidColoring(format!(
                "document declares q = {} but uses {} colors",
                doc.q, coloring.q
            )));
        }
        Ok(coloring)
    }
}

/// JSON form of a coloring: `{profile, q, assignments: [[rank, color], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub profile: String,
    pub q: u32,
    pub assignments: Vec<(usize, u32)>,
}

/// Pairwise disjoint edges, kept sorted by rank.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(profile: &PartProfile, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        let mut covered = 0u128;
        for (i, &id) in edges.iter().enumerate() {
            profile.check_id(id)?;
            let mask = profile.edge_mask(id);
            if covered & mask != 0 {
                return Err(Error::InvalidMatching(format!(
                    "edge {} (#{i}) meets an earlier edge",
                    profile.edge_string(id)
                )));
            }
            covered |= mask;
        }
        Ok(Self { edges })
    }

    pub(crate) fn from_sorted_unchecked(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        Self { edges }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_strings(&self, profile: &PartProfile) -> Vec<String> {
        self.edges.iter().map(|&id| profile.edge_string(id)).collect()
    }

    pub fn is_valid(&self, profile: &PartProfile) -> bool {
        Self::new(profile, self.edges.clone()).is_ok()
    }
}
