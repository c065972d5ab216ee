//! The coboundary: signed sum of single contractions of regular edges and arcs.

use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{Arrow, Canon, DecoratedGraph, Edge, HalfEdgeOrder, Parity, SmallLoopDecoration};
use crate::vector::{int, GraphVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContractionSite {
    /// Index into `edges`.
    RegularEdge(usize),
    /// Arc from external vertex `start` to its cyclic successor.
    Arc(usize),
}

impl fmt::Display for ContractionSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractionSite::RegularEdge(i) => write!(f, "edge #{}", i + 1),
            ContractionSite::Arc(v) => write!(f, "arc from {}", v + 1),
        }
    }
}

/// `sigma(i, j)` on 1-based labels, for the contraction running from `i` to `j`.
pub fn sigma(i: usize, j: usize) -> i32 {
    if j > i {
        minus_one_pow(j)
    } else {
        minus_one_pow(i + 1)
    }
}

/// `(-1)^(alpha + 1 + v_e)` for even-parity edge `alpha` (1-based).
pub fn sigma_edge(alpha: usize, v_ext: usize) -> i32 {
    minus_one_pow(alpha + 1 + v_ext)
}

pub(crate) fn minus_one_pow(n: usize) -> i32 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Every regular edge and every arc. A single external vertex has no
/// contractible arc.
pub fn sites(g: &DecoratedGraph) -> Vec<ContractionSite> {
    let mut out: Vec<ContractionSite> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| g.is_regular(e))
        .map(|(i, _)| ContractionSite::RegularEdge(i))
        .collect();
    if g.v_ext() >= 2 {
        out.extend((0..g.v_ext()).map(ContractionSite::Arc));
    }
    out
}

/// Index of the chord joining the two ends of the arc starting at `start`.
pub fn short_chord_on_arc(g: &DecoratedGraph, start: usize) -> Option<usize> {
    let end = g.successor(start);
    g.edges().iter().position(|e| {
        e.tail != e.head && ((e.tail == start && e.head == end) || (e.tail == end && e.head == start))
    })
}

/// Sign attached to a contraction.
pub fn contraction_sign(g: &DecoratedGraph, site: ContractionSite) -> Result<i32> {
    check_site(g, site)?;
    Ok(match (g.parity(), site) {
        (Parity::Odd, ContractionSite::RegularEdge(idx)) => {
            let e = g.edges()[idx];
            sigma(e.tail + 1, e.head + 1)
        }
        (Parity::Even, ContractionSite::RegularEdge(idx)) => sigma_edge(idx + 1, g.v_ext()),
        (_, ContractionSite::Arc(start)) => sigma(start + 1, g.successor(start) + 1),
    })
}

fn check_site(g: &DecoratedGraph, site: ContractionSite) -> Result<()> {
    let ok = match site {
        ContractionSite::RegularEdge(idx) => g.edges().get(idx).is_some_and(|e| g.is_regular(e)),
        ContractionSite::Arc(start) => g.v_ext() >= 2 && start < g.v_ext(),
    };
    if ok {
        Ok(())
    } else {
        Err(GraphError::InvalidSite(site.to_string()))
    }
}

/// Merge vertices `a` and `b`: the merged vertex takes the smaller id and all
/// ids above the larger one drop by one.
pub(crate) fn merge_map(n: usize, a: usize, b: usize) -> Vec<usize> {
    let (keep, gone) = (a.min(b), a.max(b));
    (0..n)
        .map(|v| match v.cmp(&gone) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => v - 1,
        })
        .collect()
}

/// The contracted (not yet canonical) graph together with the contraction sign.
pub fn contract_raw(g: &DecoratedGraph, site: ContractionSite) -> Result<(DecoratedGraph, i32)> {
    let sign = contraction_sign(g, site)?;
    let n = g.num_vertices();
    let (a, b, removed_edge) = match site {
        ContractionSite::RegularEdge(idx) => {
            let e = g.edges()[idx];
            (e.tail, e.head, Some(idx))
        }
        ContractionSite::Arc(start) => (start, g.successor(start), None),
    };
    let map = merge_map(n, a, b);
    let (v_ext, v_int) = if g.is_external(a) && g.is_external(b) {
        (g.v_ext() - 1, g.v_int())
    } else {
        (g.v_ext(), g.v_int() - 1)
    };

    let mut edges = Vec::with_capacity(g.num_edges());
    for (idx, e) in g.edges().iter().enumerate() {
        if Some(idx) == removed_edge {
            continue;
        }
        let mut ne = Edge { tail: map[e.tail], head: map[e.head], small_loop: e.small_loop };
        if ne.tail == ne.head && e.tail != e.head && g.parity() == Parity::Odd {
            // a short chord collapsing along the arc: half-edges in circle order
            let arrow = if e.tail == a { Arrow::WithOrder } else { Arrow::AgainstOrder };
            ne.small_loop = Some(SmallLoopDecoration { half_edge_order: HalfEdgeOrder::WithCircle, arrow });
        }
        edges.push(ne);
    }
    let crosses = g.crosses().iter().map(|&c| map[c]).collect();
    Ok((DecoratedGraph::new(g.parity(), v_ext, v_int, edges, crosses), sign))
}

/// Single contraction, canonicalized, sign included.
pub fn contract(g: &DecoratedGraph, site: ContractionSite) -> Result<Canon> {
    let (raw, sign) = contract_raw(g, site)?;
    Ok(match raw.canonicalize()? {
        Canon::Zero => Canon::Zero,
        Canon::Graph { graph, sign: s } => Canon::Graph { graph, sign: s * sign },
    })
}

/// Sum of contractions over the sites accepted by `keep`.
pub(crate) fn delta_filtered(
    g: &DecoratedGraph,
    mut keep: impl FnMut(ContractionSite) -> bool,
) -> Result<GraphVector> {
    let mut out = GraphVector::zero(g.parity());
    for site in sites(g) {
        if !keep(site) {
            continue;
        }
        if let Canon::Graph { graph, sign } = contract(g, site)? {
            out.add_canonical(&int(sign as i64), graph);
        }
    }
    Ok(out)
}

pub fn delta(g: &DecoratedGraph) -> Result<GraphVector> {
    delta_filtered(g, |_| true)
}

pub fn delta_vector(v: &GraphVector) -> Result<GraphVector> {
    linear_extension(v, delta)
}

pub(crate) fn linear_extension(
    v: &GraphVector,
    op: impl Fn(&DecoratedGraph) -> Result<GraphVector>,
) -> Result<GraphVector> {
    let mut out = GraphVector::zero(v.parity());
    for (g, c) in v.iter() {
        out.add_scaled(c, &op(g)?)?;
    }
    Ok(out)
}
