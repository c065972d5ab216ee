//! Codimension-one faces of the configuration spaces behind a graph, as
//! counting data: face types, fiber dimensions, degree bounds, and the
//! vanishing verdicts for the admissible subgraphs of a decorated graph.
//!
//! A type III subgraph collapses a cyclic interval of the circle; when it
//! covers the whole circle each choice of gap arc is a separate face.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coboundary::{sites, ContractionSite};
use crate::error::{GraphError, Result};
use crate::graph::DecoratedGraph;
use crate::vector::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceType {
    /// Internal points collapse together.
    I,
    /// Internal points escape to infinity together.
    II,
    /// Circle points and internal points collapse together.
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceDescriptor {
    pub face_type: FaceType,
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl FaceDescriptor {
    pub fn new(face_type: FaceType, r: usize, s: usize, n: usize) -> Result<Self> {
        let ok = n >= 3
            && match face_type {
                FaceType::I => r == 0 && s >= 2,
                FaceType::II => r == 0 && s >= 1,
                FaceType::III => r >= 1 && r + s >= 2,
            };
        if ok {
            Ok(FaceDescriptor { face_type, r, s, n })
        } else {
            Err(GraphError::InvalidFace(format!("{face_type:?} with r={r}, s={s}, n={n}")))
        }
    }

    /// Dimension of the collapsed fiber. A type II face collapses the `s`
    /// escaping points together with infinity, hence `s + 1` points.
    pub fn fiber_dim(&self) -> i64 {
        let (n, r, s) = (self.n as i64, self.r as i64, self.s as i64);
        match self.face_type {
            FaceType::I => n * s - n - 1,
            FaceType::II => n * (s + 1) - n - 1,
            FaceType::III => r + n * s - 2,
        }
    }

    pub fn is_principal(&self) -> bool {
        match self.face_type {
            FaceType::I => self.s == 2,
            FaceType::II => self.s == 1,
            FaceType::III => self.r + self.s == 2,
        }
    }

    pub fn is_hidden(&self) -> bool {
        !self.is_principal()
    }

    /// Closed-form lower bound on the degree of the form left after
    /// integrating along the fiber.
    pub fn degree_lower_bound(&self) -> Rational {
        let (n, r, s) = (self.n as i64, self.r as i64, self.s as i64);
        match self.face_type {
            FaceType::I => rat((n - 3) * s, 2) + int(n + 1),
            FaceType::II => rat((n - 3) * s, 2) + rat(5 * n - 1, 2),
            FaceType::III => rat((n - 3) * (r + s - 2), 2) + int(n - 1),
        }
    }

    /// The same bound before simplification: `(n-1) * min_edges - fiber`,
    /// with `2 * min_edges = r + 3s` (type II counts `s + 1` trivalent points).
    pub fn valence_bound(&self) -> Rational {
        let (n, r, s) = (self.n as i64, self.r as i64, self.s as i64);
        let ends = match self.face_type {
            FaceType::I | FaceType::III => r + 3 * s,
            FaceType::II => 3 * (s + 1),
        };
        let fiber = match self.face_type {
            FaceType::II => n * (s + 1) - n - 1,
            _ => self.fiber_dim(),
        };
        rat((n - 1) * ends, 2) - int(fiber)
    }

    /// Degree above which the face contributes nothing; `extended` is the
    /// one-parameter family version.
    pub fn threshold(&self, extended: bool) -> i64 {
        let base = match self.face_type {
            FaceType::I | FaceType::II => 0,
            FaceType::III => self.n as i64 - 1,
        };
        base + extended as i64
    }

    pub fn bound_vanishes(&self, extended: bool) -> bool {
        self.degree_lower_bound() > int(self.threshold(extended))
    }
}

impl fmt::Display for FaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(r={}, s={}, n={})", self.face_type, self.r, self.s, self.n)
    }
}

/// Every hidden descriptor with `r + s <= max_rs` in dimension `n`.
pub fn hidden_descriptors(n: usize, max_rs: usize) -> Vec<FaceDescriptor> {
    let mut out = Vec::new();
    for total in 1..=max_rs {
        for r in 0..=total {
            let s = total - r;
            for t in [FaceType::I, FaceType::II, FaceType::III] {
                if let Ok(fd) = FaceDescriptor::new(t, r, s, n) {
                    if fd.is_hidden() {
                        out.push(fd);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// A vertex other than infinity with no induced edge.
    ZeroByIsolatedVertex,
    /// An internal vertex with one induced edge.
    ZeroByUnivalentVertex,
    /// An internal vertex with two induced edges.
    ZeroByBivalentVertex,
    ZeroByDegreeCount,
    PrincipalContribution,
    /// Hidden type III face whose bound only reaches the threshold.
    Unresolved,
}

impl Verdict {
    pub fn is_zero(self) -> bool {
        !matches!(self, Verdict::PrincipalContribution | Verdict::Unresolved)
    }
}

/// Vertex subset of a graph (with a point at infinity) that indexes a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSubgraph {
    parent: DecoratedGraph,
    /// `(start, r)`: the external vertices `start, start+1, ..` (cyclic).
    interval: Option<(usize, usize)>,
    internal: Vec<usize>,
    infinity: bool,
    descriptor: FaceDescriptor,
}

impl AdmissibleSubgraph {
    pub fn new(
        parent: &DecoratedGraph,
        interval: Option<(usize, usize)>,
        internal: Vec<usize>,
        infinity: bool,
        n: usize,
    ) -> Result<Self> {
        let bad = |why: &str| GraphError::InvalidFace(why.to_string());
        if internal.iter().any(|&v| v < parent.v_ext() || v >= parent.num_vertices()) {
            return Err(bad("internal subset contains a non-internal vertex"));
        }
        let mut sorted = internal.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != internal.len() {
            return Err(bad("repeated internal vertex"));
        }
        if let Some((start, r)) = interval {
            if start >= parent.v_ext() || r == 0 || r > parent.v_ext() {
                return Err(bad("circle interval out of range"));
            }
        }
        let s = sorted.len();
        let descriptor = match (interval, infinity) {
            (Some(_), true) => return Err(bad("circle points cannot escape to infinity")),
            (Some((_, r)), false) => FaceDescriptor::new(FaceType::III, r, s, n)?,
            (None, true) => FaceDescriptor::new(FaceType::II, 0, s, n)?,
            (None, false) => FaceDescriptor::new(FaceType::I, 0, s, n)?,
        };
        Ok(AdmissibleSubgraph { parent: parent.clone(), interval, internal: sorted, infinity, descriptor })
    }

    pub fn descriptor(&self) -> FaceDescriptor {
        self.descriptor
    }

    pub fn parent(&self) -> &DecoratedGraph {
        &self.parent
    }

    pub fn has_infinity(&self) -> bool {
        self.infinity
    }

    pub fn external(&self) -> Vec<usize> {
        match self.interval {
            Some((start, r)) => (0..r).map(|i| (start + i) % self.parent.v_ext()).collect(),
            None => Vec::new(),
        }
    }

    pub fn internal(&self) -> &[usize] {
        &self.internal
    }

    /// Vertices other than infinity.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = self.external();
        out.extend_from_slice(&self.internal);
        out
    }

    fn contains(&self, v: usize) -> bool {
        self.external().contains(&v) || self.internal.binary_search(&v).is_ok()
    }

    /// Indices of the edges with two distinct ends inside; small loops never count.
    pub fn induced_edges(&self) -> Vec<usize> {
        self.parent
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.tail != e.head && self.contains(e.tail) && self.contains(e.head))
            .map(|(i, _)| i)
            .collect()
    }

    /// Starts of the arcs inside the collapsing interval.
    pub fn induced_arcs(&self) -> Vec<usize> {
        let ext = self.external();
        ext.iter().take(ext.len().saturating_sub(1)).copied().collect()
    }

    pub fn valence_in(&self, v: usize) -> usize {
        self.induced_edges()
            .iter()
            .map(|&i| self.parent.edges()[i])
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    /// Lemmas first, then the degree count; principal faces are decided by
    /// comparing the form degree with the fiber dimension.
    pub fn classify(&self, extended: bool) -> Verdict {
        let fd = self.descriptor;
        let edges = self.induced_edges().len() as i64;
        if fd.is_principal() {
            let left = (fd.n as i64 - 1) * edges - fd.fiber_dim();
            let survives = match fd.face_type {
                FaceType::I | FaceType::II => left == 0,
                FaceType::III => (0..=fd.n as i64 - 1).contains(&left),
            };
            return if survives { Verdict::PrincipalContribution } else { Verdict::ZeroByDegreeCount };
        }
        let vertices = self.vertices();
        if vertices.iter().any(|&v| self.valence_in(v) == 0) {
            return Verdict::ZeroByIsolatedVertex;
        }
        if self.internal.iter().any(|&v| self.valence_in(v) == 1) {
            return Verdict::ZeroByUnivalentVertex;
        }
        if self.internal.iter().any(|&v| self.valence_in(v) == 2) {
            return Verdict::ZeroByBivalentVertex;
        }
        if fd.bound_vanishes(extended) {
            Verdict::ZeroByDegreeCount
        } else {
            Verdict::Unresolved
        }
    }

    /// The coboundary term a contributing principal face accounts for.
    pub fn contraction_site(&self) -> Option<ContractionSite> {
        if self.classify(false) != Verdict::PrincipalContribution {
            return None;
        }
        let fd = self.descriptor;
        match (fd.face_type, fd.r) {
            (FaceType::III, 2) => self.interval.map(|(start, _)| ContractionSite::Arc(start)),
            _ => self.induced_edges().first().map(|&i| ContractionSite::RegularEdge(i)),
        }
    }
}

impl fmt::Display for AdmissibleSubgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.descriptor)?;
        let labels: Vec<String> = self.vertices().iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&labels.join(","))?;
        if self.infinity {
            f.write_str(if labels.is_empty() { "inf" } else { ",inf" })?;
        }
        f.write_str("}")
    }
}

pub fn classify_subgraph(sg: &AdmissibleSubgraph) -> Verdict {
    sg.classify(false)
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

/// (external interval, internal vertices, contains infinity)
type Spec = (Option<(usize, usize)>, Vec<usize>, bool);

/// Every admissible subgraph of `g` in dimension `n`.
pub fn admissible_subgraphs(g: &DecoratedGraph, n: usize) -> Result<Vec<AdmissibleSubgraph>> {
    let internals: Vec<usize> = (g.v_ext()..g.num_vertices()).collect();
    let mut specs: Vec<Spec> = Vec::new();
    for sub in subsets(&internals) {
        if sub.len() >= 2 {
            specs.push((None, sub.clone(), false));
        }
        if !sub.is_empty() {
            specs.push((None, sub.clone(), true));
        }
        for r in 1..=g.v_ext() {
            if r + sub.len() < 2 {
                continue;
            }
            let starts = if r == g.v_ext() && r == 1 { 1 } else { g.v_ext() };
            for start in 0..starts {
                specs.push((Some((start, r)), sub.clone(), false));
            }
        }
    }
    specs.into_iter().map(|(iv, sub, inf)| AdmissibleSubgraph::new(g, iv, sub, inf, n)).collect()
}

/// Outcome of sweeping all admissible subgraphs of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceAudit {
    pub graph: String,
    pub n: usize,
    pub extended: bool,
    pub subgraphs: usize,
    pub verdicts: BTreeMap<Verdict, usize>,
    pub principal_sites: Vec<String>,
    pub delta_sites: Vec<String>,
    /// Hidden subgraphs that did not come out zero.
    pub unresolved: Vec<String>,
    pub principal_matches_delta: bool,
    pub hidden_all_zero: bool,
}

impl FaceAudit {
    pub fn is_consistent(&self) -> bool {
        self.principal_matches_delta && self.hidden_all_zero
    }
}

pub fn audit_graph(g: &DecoratedGraph, n: usize) -> Result<FaceAudit> {
    audit_graph_with(g, n, false)
}

pub fn audit_graph_with(g: &DecoratedGraph, n: usize, extended: bool) -> Result<FaceAudit> {
    let all = admissible_subgraphs(g, n)?;
    let results: Vec<(Verdict, Option<ContractionSite>, bool, String)> = all
        .par_iter()
        .map(|sg| {
            let v = sg.classify(extended);
            let site = if v == Verdict::PrincipalContribution { sg.contraction_site() } else { None };
            (v, site, sg.descriptor().is_hidden(), sg.to_string())
        })
        .collect();

    let mut verdicts = BTreeMap::new();
    let mut principal: Vec<ContractionSite> = Vec::new();
    let mut unresolved = Vec::new();
    let mut hidden_all_zero = true;
    for (v, site, hidden, label) in results {
        *verdicts.entry(v).or_insert(0) += 1;
        principal.extend(site);
        if hidden && !v.is_zero() {
            hidden_all_zero = false;
            unresolved.push(label);
        }
    }
    principal.sort();
    let mut delta = sites(g);
    delta.sort();
    Ok(FaceAudit {
        graph: g.to_string(),
        n,
        extended,
        subgraphs: all.len(),
        verdicts,
        principal_matches_delta: principal == delta,
        principal_sites: principal.iter().map(ToString::to_string).collect(),
        delta_sites: delta.iter().map(ToString::to_string).collect(),
        unresolved,
        hidden_all_zero,
    })
}

/// Smallest `r + s` (up to `max_rs`) of a hidden descriptor whose bound
/// fails to clear the threshold, if any.
pub fn first_failure(n: usize, max_rs: usize, extended: bool) -> Option<FaceDescriptor> {
    hidden_descriptors(n, max_rs).into_iter().find(|fd| !fd.bound_vanishes(extended))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(t: FaceType, r: usize, s: usize, n: usize) -> FaceDescriptor {
        FaceDescriptor::new(t, r, s, n).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        assert!(FaceDescriptor::new(FaceType::I, 0, 1, 4).is_err());
        assert!(FaceDescriptor::new(FaceType::II, 0, 0, 4).is_err());
        assert!(FaceDescriptor::new(FaceType::III, 0, 2, 4).is_err());
        assert!(FaceDescriptor::new(FaceType::III, 1, 0, 4).is_err());
        assert!(FaceDescriptor::new(FaceType::III, 2, 0, 2).is_err());
    }

    #[test]
    fn fiber_dims() {
        for n in 3..8 {
            assert_eq!(fd(FaceType::I, 0, 2, n).fiber_dim(), n as i64 - 1);
            assert_eq!(fd(FaceType::II, 0, 1, n).fiber_dim(), n as i64 - 1);
            assert_eq!(fd(FaceType::III, 1, 1, n).fiber_dim(), n as i64 - 1);
        }
        assert_eq!(fd(FaceType::III, 2, 0, 5).fiber_dim(), 0);
        assert_eq!(fd(FaceType::III, 1, 1, 5).fiber_dim(), 4);
    }

    #[test]
    fn bounds_from_the_table() {
        assert_eq!(fd(FaceType::III, 3, 0, 4).degree_lower_bound(), rat(7, 2));
        assert_eq!(fd(FaceType::I, 0, 3, 5).degree_lower_bound(), int(9));
        assert_eq!(fd(FaceType::III, 3, 0, 3).degree_lower_bound(), int(2));
        assert!(!fd(FaceType::III, 3, 0, 3).bound_vanishes(false));
    }

    #[test]
    fn principal_and_hidden() {
        assert!(fd(FaceType::I, 0, 2, 4).is_principal());
        assert!(fd(FaceType::II, 0, 1, 4).is_principal());
        assert!(fd(FaceType::III, 2, 1, 4).is_hidden());
        assert!(fd(FaceType::III, 1, 1, 4).is_principal());
    }
}
