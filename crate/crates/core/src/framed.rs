//! Crosses, the framed coboundary, the short-chord-blind coboundary and the
//! substitution of short chords by crossed vertices.
//!
//! Framed graphs are odd graphs with a (possibly empty) `crosses` list; the
//! same type and canonical form serve both complexes. A crossed vertex that
//! also carries a small loop vanishes.

use crate::coboundary::{delta_filtered, linear_extension, merge_map, short_chord_on_arc, sigma, sites, ContractionSite};
use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, Edge, Parity, SmallLoopDecoration};
use crate::vector::{int, GraphVector};

fn require_odd(g: &DecoratedGraph) -> Result<()> {
    if g.parity() == Parity::Odd {
        Ok(())
    } else {
        Err(GraphError::WrongParity(Parity::Odd))
    }
}

fn sign_pow(n: i64) -> i32 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Edge and arc terms as for the plain coboundary, plus one term per cross
/// `a` turning it into a standard small loop with sign `(-1)^(deg + a)`.
pub fn delta_framed(g: &DecoratedGraph) -> Result<GraphVector> {
    require_odd(g)?;
    let mut out = delta_filtered(g, |_| true)?;
    for a in 0..g.crosses().len() {
        let (raw, sign) = uncross(g, a);
        out.add_graph(&int(sign as i64), &raw)?;
    }
    Ok(out)
}

/// Remove cross `a` (0-based) and put a small loop on its vertex; later
/// crosses move down one label.
pub fn uncross(g: &DecoratedGraph, a: usize) -> (DecoratedGraph, i32) {
    let v = g.crosses()[a];
    let mut edges = g.edges().to_vec();
    edges.push(Edge { tail: v, head: v, small_loop: Some(SmallLoopDecoration::STANDARD) });
    let mut crosses = g.crosses().to_vec();
    crosses.remove(a);
    let sign = sign_pow(g.degree() + a as i64 + 1);
    (DecoratedGraph::new(Parity::Odd, g.v_ext(), g.v_int(), edges, crosses), sign)
}

pub fn delta_framed_vector(v: &GraphVector) -> Result<GraphVector> {
    linear_extension(v, delta_framed)
}

/// Sites of the plain coboundary minus the arcs whose endpoints carry a
/// short chord.
pub fn underline_sites(g: &DecoratedGraph) -> Vec<ContractionSite> {
    sites(g).into_iter().filter(|&s| keeps(g, s)).collect()
}

fn keeps(g: &DecoratedGraph, site: ContractionSite) -> bool {
    match site {
        ContractionSite::Arc(start) => short_chord_on_arc(g, start).is_none(),
        ContractionSite::RegularEdge(_) => true,
    }
}

pub fn delta_underline(g: &DecoratedGraph) -> Result<GraphVector> {
    require_odd(g)?;
    delta_filtered(g, |s| keeps(g, s))
}

pub fn delta_underline_vector(v: &GraphVector) -> Result<GraphVector> {
    linear_extension(v, delta_underline)
}

/// Which pending short chord is collapsed next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordOrder {
    First,
    Last,
}

/// Expand `prod (1 + c * collapse)` over the short chords of `g`.
///
/// Collapsing the chord `i -> j` merges its ends into one crossed vertex
/// (new cross label `a`, in processing order) with coefficient
/// `-sigma(i, j) * (-1)^(deg + a) * m`, where `m` is the number of arcs
/// joining `i` and `j` (2 on a two-vertex circle, else 1). Chords that become
/// short after a collapse are processed as well.
pub fn short_chord_substitution(g: &DecoratedGraph) -> Result<GraphVector> {
    short_chord_substitution_with(g, ChordOrder::First)
}

pub fn short_chord_substitution_with(g: &DecoratedGraph, pick: ChordOrder) -> Result<GraphVector> {
    require_odd(g)?;
    let mut out = GraphVector::zero(Parity::Odd);
    // (coefficient, raw graph, chords already kept)
    let mut work: Vec<(i64, DecoratedGraph, Vec<bool>)> = vec![(1, g.clone(), vec![false; g.num_edges()])];
    while let Some((coef, h, kept)) = work.pop() {
        if h.validate().iter().any(|v| v.is_vanishing()) {
            continue;
        }
        let mut pending = (0..h.num_edges()).filter(|&i| !kept[i] && h.is_short_chord(&h.edges()[i]));
        let next = match pick {
            ChordOrder::First => pending.next(),
            ChordOrder::Last => pending.next_back(),
        };
        let Some(idx) = next else {
            out.add_graph(&int(coef), &h)?;
            continue;
        };
        let (collapsed, c) = collapse_chord(&h, idx, g.degree());
        let mut rest = kept.clone();
        rest.remove(idx);
        work.push((coef * c, collapsed, rest));
        let mut keep = kept;
        keep[idx] = true;
        work.push((coef, h, keep));
    }
    Ok(out)
}

/// Replace chord `idx` by a crossed vertex at the merged position.
fn collapse_chord(g: &DecoratedGraph, idx: usize, deg: i64) -> (DecoratedGraph, i64) {
    let e = g.edges()[idx];
    let (i, j) = (e.tail, e.head);
    let map = merge_map(g.num_vertices(), i, j);
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != idx)
        .map(|(_, e)| Edge { tail: map[e.tail], head: map[e.head], small_loop: e.small_loop })
        .collect();
    let mut crosses: Vec<usize> = g.crosses().iter().map(|&c| map[c]).collect();
    crosses.push(i.min(j));
    let a = crosses.len() as i64;
    let arcs = if g.v_ext() == 2 { 2 } else { 1 };
    let c = -(sigma(i + 1, j + 1) * sign_pow(deg + a)) as i64 * arcs;
    (DecoratedGraph::new(Parity::Odd, g.v_ext() - 1, g.v_int(), edges, crosses), c)
}

pub fn short_chord_substitution_vector(v: &GraphVector) -> Result<GraphVector> {
    linear_extension(v, short_chord_substitution)
}
