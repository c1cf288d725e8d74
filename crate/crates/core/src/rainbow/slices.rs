//! Cyclic slices along two equal-size parts `a`, `b` of size `m`.
//!
//! Slice `i` (1-based) holds the edges with `coord_a − coord_b ≡ i − 1
//! (mod m)`. Deleting coordinate `b` maps a slice bijectively onto the
//! complete host with part `b` removed, and two slice edges are disjoint
//! exactly when their images are.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeColoring, EdgeId, Matching, PartProfile, SubHypergraph};

#[derive(Clone, Debug)]
pub struct SliceView {
    /// 1-based parts `(a, b)`.
    pub axis: (usize, usize),
    /// 1-based shift `i`.
    pub shift: usize,
    host: PartProfile,
    projected: PartProfile,
    /// Slice members in host rank order.
    host_edges: Vec<EdgeId>,
    members: SubHypergraph,
    inherited: Option<InheritedColoring>,
}

#[derive(Clone, Debug)]
struct InheritedColoring {
    coloring: EdgeColoring,
    /// `origin[c - 1]` is the host color of projected color `c`.
    origin: Vec<u32>,
}

impl SliceView {
    pub fn host_profile(&self) -> &PartProfile {
        &self.host
    }

    /// The `(r−1)`-partite profile with part `b` deleted.
    pub fn projected_profile(&self) -> &PartProfile {
        &self.projected
    }

    pub fn host_edges(&self) -> &[EdgeId] {
        &self.host_edges
    }

    /// The slice as a subhypergraph of the projected host.
    pub fn projected(&self) -> &SubHypergraph {
        &self.members
    }

    /// The slice coloring carried across the bijection, with colors
    /// renumbered `1..=q_i`; see [`SliceView::host_color`].
    pub fn inherited_coloring(&self) -> Option<&EdgeColoring> {
        self.inherited.as_ref().map(|c| &c.coloring)
    }

    /// Host color of an inherited color id.
    pub fn host_color(&self, projected_color: u32) -> Option<u32> {
        self.inherited
            .as_ref()?
            .origin
            .get(projected_color.checked_sub(1)? as usize)
            .copied()
    }

    /// `|c(E_i)|`, or 0 for an uncolored slice.
    pub fn color_count(&self) -> usize {
        self.inherited.as_ref().map_or(0, |c| c.origin.len())
    }

    fn b0(&self) -> usize {
        self.axis.1 - 1
    }

    fn a0(&self) -> usize {
        self.axis.0 - 1
    }

    /// Image of a host edge in the projected host, if it lies in the slice.
    pub fn project(&self, id: EdgeId) -> Option<EdgeId> {
        if self.host.check_id(id).is_err() {
            return None;
        }
        let m = self.host.size(self.axis.0);
        let ca = self.host.coord0(id, self.a0());
        let cb = self.host.coord0(id, self.b0());
        if (ca + m - cb) % m != self.shift - 1 {
            return None;
        }
        let coords: Vec<usize> = (0..self.host.r())
            .filter(|&s| s != self.b0())
            .map(|s| self.host.coord0(id, s))
            .collect();
        Some(self.projected.rank_of0(&coords))
    }

    /// Host edge of a projected edge: `coord_b = coord_a − (i − 1) mod m`.
    pub fn lift(&self, id: EdgeId) -> Option<EdgeId> {
        self.projected.check_id(id).ok()?;
        let m = self.host.size(self.axis.0);
        let mut coords = Vec::with_capacity(self.host.r());
        let mut proj = 0;
        let mut ca = None;
        for s in 0..self.host.r() {
            if s == self.b0() {
                coords.push(usize::MAX);
                continue;
            }
            let c = self.projected.coord0(id, proj);
            if s == self.a0() {
                ca = Some(c);
            }
            coords.push(c);
            proj += 1;
        }
        let ca = ca.expect("axis part a survives projection");
        coords[self.b0()] = (ca + m - (self.shift - 1)) % m;
        Some(self.host.rank_of0(&coords))
    }

    pub fn project_matching(&self, matching: &Matching) -> Option<Matching> {
        let ids = matching
            .ids()
            .iter()
            .map(|&id| self.project(id))
            .collect::<Option<Vec<_>>>()?;
        Matching::new(&self.projected, ids).ok()
    }

    pub fn lift_matching(&self, matching: &Matching) -> Option<Matching> {
        let ids = matching
            .ids()
            .iter()
            .map(|&id| self.lift(id))
            .collect::<Option<Vec<_>>>()?;
        Matching::new(&self.host, ids).ok()
    }

    pub fn report(&self) -> SliceReport {
        SliceReport {
            slice: self.shift,
            colors: self.color_count(),
            edges: self
                .host_edges
                .iter()
                .map(|&id| self.host.edge_string(id))
                .collect(),
        }
    }
}

/// JSON form `{slice: i, colors: q_i, edges: […]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub slice: usize,
    pub colors: usize,
    pub edges: Vec<String>,
}

fn check_axis(profile: &PartProfile, axis: (usize, usize)) -> Result<usize> {
    let (a, b) = axis;
    let r = profile.r();
    if a == 0 || b == 0 || a > r || b > r || a == b {
        return Err(Error::InvalidVertex(format!(
            "axis ({a},{b}) needs two distinct parts in 1..{r}"
        )));
    }
    let (na, nb) = (profile.size(a), profile.size(b));
    if na != nb {
        return Err(Error::AxisMismatch { a, b, na, nb });
    }
    Ok(na)
}

/// Slices of the member edges of `host` along `axis`.
pub fn cyclic_slices(host: &SubHypergraph, axis: (usize, usize)) -> Result<Vec<SliceView>> {
    build(host, None, axis)
}

/// Slices of a coloring's domain, each carrying the inherited coloring.
pub fn cyclic_slices_colored(coloring: &EdgeColoring, axis: (usize, usize)) -> Result<Vec<SliceView>> {
    build(coloring.domain(), Some(coloring), axis)
}

fn build(
    host: &SubHypergraph,
    coloring: Option<&EdgeColoring>,
    axis: (usize, usize),
) -> Result<Vec<SliceView>> {
    let profile = host.profile();
    let m = check_axis(profile, axis)?;
    let projected = profile.without_part(axis.1 - 1)?;
    let mut views: Vec<SliceView> = (1..=m)
        .map(|shift| SliceView {
            axis,
            shift,
            host: profile.clone(),
            projected: projected.clone(),
            host_edges: Vec::new(),
            members: SubHypergraph::empty(&projected),
            inherited: None,
        })
        .collect();
    let (a0, b0) = (axis.0 - 1, axis.1 - 1);
    for id in host.iter() {
        let shift0 = (profile.coord0(id, a0) + m - profile.coord0(id, b0)) % m;
        views[shift0].host_edges.push(id);
    }
    for view in &mut views {
        let images: Vec<EdgeId> = view
            .host_edges
            .iter()
            .map(|&id| view.project(id).expect("edge belongs to its slice"))
            .collect();
        view.members = SubHypergraph::from_ids(&projected, images.iter().copied())?;
        if let Some(coloring) = coloring {
            let mut host_color = vec![0u32; projected.edge_count()];
            for (&h, &p) in view.host_edges.iter().zip(&images) {
                host_color[p.0] = coloring.color(h).expect("domain edge is colored");
            }
            let inherited =
                EdgeColoring::from_classes(view.members.clone(), |p| host_color[p.0]);
            let mut origin = vec![0; inherited.q() as usize];
            for p in view.members.iter() {
                origin[inherited.color(p).unwrap() as usize - 1] = host_color[p.0];
            }
            view.inherited = Some(InheritedColoring {
                coloring: inherited,
                origin,
            });
        }
    }
    Ok(views)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_phi_r;

    #[test]
    fn complete_222_halves() {
        let prof = PartProfile::new(&[2, 2, 2]).unwrap();
        let slices = cyclic_slices(&SubHypergraph::complete(&prof), (1, 2)).unwrap();
        assert_eq!(slices.len(), 2);
        assert!(slices.iter().all(|s| s.host_edges().len() == 4));
        assert_eq!(slices[0].projected_profile().sizes(), &[2, 2]);
    }

    #[test]
    fn slices_are_disjoint_and_cover() {
        let prof = PartProfile::new(&[3, 3, 2]).unwrap();
        // sorted to 2x3x3, so the equal pair is (2,3)
        let k = SubHypergraph::complete(&prof);
        let slices = cyclic_slices(&k, (2, 3)).unwrap();
        let mut all: Vec<EdgeId> = slices.iter().flat_map(|s| s.host_edges().to_vec()).collect();
        all.sort();
        assert_eq!(all, k.ids());
    }

    #[test]
    fn unequal_axis_rejected() {
        let prof = PartProfile::new(&[2, 3]).unwrap();
        assert!(matches!(
            cyclic_slices(&SubHypergraph::complete(&prof), (1, 2)),
            Err(Error::AxisMismatch { .. })
        ));
    }

    #[test]
    fn lift_inverts_project() {
        let prof = PartProfile::new(&[3, 3, 2]).unwrap();
        let slices = cyclic_slices(&SubHypergraph::complete(&prof), (2, 3)).unwrap();
        for s in &slices {
            for &h in s.host_edges() {
                let p = s.project(h).unwrap();
                assert_eq!(s.lift(p), Some(h));
            }
        }
    }

    #[test]
    fn inherited_colors_match_slice_colors() {
        let prof = PartProfile::new(&[3, 3]).unwrap();
        let phi = build_phi_r(&prof, 3).unwrap();
        for s in cyclic_slices_colored(&phi, (1, 2)).unwrap() {
            let slice_colors = phi.colors_of(s.host_edges());
            let inherited = s.inherited_coloring().unwrap();
            let mut mapped: Vec<u32> = (1..=inherited.q()).map(|c| s.host_color(c).unwrap()).collect();
            mapped.sort();
            assert_eq!(mapped, slice_colors);
            // bipartite host projects onto a single part
            assert_eq!(s.projected_profile().r(), 1);
        }
    }

    #[test]
    fn report_shape() {
        let prof = PartProfile::new(&[2, 2]).unwrap();
        let phi = build_phi_r(&prof, 3).unwrap();
        let reports: Vec<SliceReport> = cyclic_slices_colored(&phi, (1, 2))
            .unwrap()
            .iter()
            .map(SliceView::report)
            .collect();
        assert_eq!(reports[0].edges, vec!["(1,1)", "(2,2)"]);
        assert_eq!(reports[0].colors, 2);
        let json = serde_json::to_string(&reports[1]).unwrap();
        assert_eq!(json, r#"{"slice":2,"colors":2,"edges":["(1,2)","(2,1)"]}"#);
    }
}
