//! Decorated graphs with a distinguished oriented circle.
//!
//! Vertices are addressed by a 0-based global id: the external vertices are
//! `0..v_ext` in circle order, the internal ones follow. The printed labels
//! used in the sign rules are `id + 1`.
//!
//! Odd graphs carry oriented edges (`tail -> head`), labelled internal vertices
//! and, on every external small loop, a half-edge order plus an arrow.
//! Even graphs carry edge labels given by position in `edges`; internal
//! vertices are unlabelled and endpoint order is irrelevant.
//!
//! Crosses (the framed decoration) live on external vertices; the cross
//! label is the position in `crosses`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::perm::{inversion_sign, permutation_sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(format!("unknown parity `{other}` (expected odd|even)")),
        }
    }
}

/// 1-based reference to a vertex, as it appears in the external JSON schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRef {
    External(usize),
    Internal(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfEdgeOrder {
    WithCircle,
    AgainstCircle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    WithOrder,
    AgainstOrder,
}

/// Decoration of an external small loop in odd parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallLoopDecoration {
    pub half_edge_order: HalfEdgeOrder,
    pub arrow: Arrow,
}

impl SmallLoopDecoration {
    /// Half-edges ordered along the circle, arrow from the first to the second.
    pub const STANDARD: SmallLoopDecoration = SmallLoopDecoration {
        half_edge_order: HalfEdgeOrder::WithCircle,
        arrow: Arrow::WithOrder,
    };

    /// Sign relating this decoration to [`Self::STANDARD`].
    pub fn sign(self) -> i32 {
        let mut s = 1;
        if self.half_edge_order == HalfEdgeOrder::AgainstCircle {
            s = -s;
        }
        if self.arrow == Arrow::AgainstOrder {
            s = -s;
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    /// Only on external small loops of odd graphs.
    pub small_loop: Option<SmallLoopDecoration>,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Edge { tail, head, small_loop: None }
    }

    pub fn is_small_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn touches(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    fn unordered(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }
}

/// Reasons a graph is not an honest basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoExternalVertex,
    VertexOutOfRange { vertex: usize },
    Disconnected,
    LowValence { vertex: usize, valence: usize },
    IsolatedExternal { vertex: usize },
    MultipleEdge { a: usize, b: usize },
    InternalSmallLoop { vertex: usize },
    LoopDecoration { edge: usize },
    CrossOnInternal { vertex: usize },
    DoubleCross { vertex: usize },
    CrossedSmallLoop { vertex: usize },
    CrossInEvenParity,
}

impl Violation {
    /// Violations that make the graph vanish in the quotient rather than
    /// being malformed input.
    pub fn is_vanishing(&self) -> bool {
        matches!(
            self,
            Violation::MultipleEdge { .. }
                | Violation::InternalSmallLoop { .. }
                | Violation::DoubleCross { .. }
                | Violation::CrossedSmallLoop { .. }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedGraph {
    parity: Parity,
    v_ext: usize,
    v_int: usize,
    edges: Vec<Edge>,
    crosses: Vec<usize>,
}

/// Outcome of canonicalization: `g = sign * graph`, or `g = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canon {
    Zero,
    Graph { graph: DecoratedGraph, sign: i32 },
}

impl Canon {
    pub fn graph(&self) -> Option<(&DecoratedGraph, i32)> {
        match self {
            Canon::Zero => None,
            Canon::Graph { graph, sign } => Some((graph, *sign)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Canon::Zero)
    }
}

impl DecoratedGraph {
    /// Raw constructor; see [`DecoratedGraph::validate`].
    pub fn new(
        parity: Parity,
        v_ext: usize,
        v_int: usize,
        edges: Vec<Edge>,
        crosses: Vec<usize>,
    ) -> Self {
        DecoratedGraph { parity, v_ext, v_int, edges, crosses }
    }

    /// Odd graph from 1-based `(tail, head)` labels. Small loops `(i, i)` get
    /// the standard decoration.
    pub fn odd(v_ext: usize, v_int: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_labels(Parity::Odd, v_ext, v_int, edges)
    }

    /// Even graph from 1-based endpoint labels; edge labels follow slice order.
    pub fn even(v_ext: usize, v_int: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_labels(Parity::Even, v_ext, v_int, edges)
    }

    fn from_labels(parity: Parity, v_ext: usize, v_int: usize, edges: &[(usize, usize)]) -> Self {
        let edges = edges
            .iter()
            .map(|&(a, b)| {
                let mut e = Edge::new(a - 1, b - 1);
                if a == b && parity == Parity::Odd {
                    e.small_loop = Some(SmallLoopDecoration::STANDARD);
                }
                e
            })
            .collect();
        DecoratedGraph::new(parity, v_ext, v_int, edges, Vec::new())
    }

    /// Attach crosses; `crosses[a-1]` is the 1-based external vertex of cross `a`.
    pub fn with_crosses(mut self, crosses: &[usize]) -> Self {
        self.crosses = crosses.iter().map(|&v| v - 1).collect();
        self
    }

    /// `k` external vertices, each carrying one small loop.
    pub fn small_loops(parity: Parity, k: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..=k).map(|i| (i, i)).collect();
        Self::from_labels(parity, k, 0, &pairs)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
    pub fn v_ext(&self) -> usize {
        self.v_ext
    }
    pub fn v_int(&self) -> usize {
        self.v_int
    }
    pub fn num_vertices(&self) -> usize {
        self.v_ext + self.v_int
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn crosses(&self) -> &[usize] {
        &self.crosses
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_external(&self, v: usize) -> bool {
        v < self.v_ext
    }

    /// Cyclic successor of an external vertex.
    pub fn successor(&self, v: usize) -> usize {
        (v + 1) % self.v_ext
    }

    /// `e - v_i + x`
    pub fn order(&self) -> i64 {
        self.edges.len() as i64 - self.v_int as i64 + self.crosses.len() as i64
    }

    /// `2e - 3 v_i - v_e + x`
    pub fn degree(&self) -> i64 {
        2 * self.edges.len() as i64 - 3 * self.v_int as i64 - self.v_ext as i64
            + self.crosses.len() as i64
    }

    pub fn bidegree(&self) -> (i64, i64) {
        (self.order(), self.degree())
    }

    /// Edge-ends at `v`; a small loop counts twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    pub fn is_chord(&self, e: &Edge) -> bool {
        e.tail != e.head && self.is_external(e.tail) && self.is_external(e.head)
    }

    /// Neither a chord nor a small loop.
    pub fn is_regular(&self, e: &Edge) -> bool {
        e.tail != e.head && !self.is_chord(e)
    }

    /// Endpoints are cyclically consecutive on the circle.
    pub fn is_short_chord(&self, e: &Edge) -> bool {
        self.is_chord(e) && (self.successor(e.tail) == e.head || self.successor(e.head) == e.tail)
    }

    pub fn has_short_chord(&self) -> bool {
        self.edges.iter().any(|e| self.is_short_chord(e))
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.v_int == 0 && self.crosses.is_empty() && self.edges.iter().all(|e| self.is_chord(e))
    }

    /// Univalent externals, trivalent internals.
    pub fn is_trivalent(&self) -> bool {
        (0..self.v_ext).all(|v| self.valence(v) == 1)
            && (self.v_ext..self.num_vertices()).all(|v| self.valence(v) == 3)
            && self.crosses.is_empty()
    }

    pub fn cross_at(&self, v: usize) -> Option<usize> {
        self.crosses.iter().position(|&c| c == v)
    }

    /// All structural problems. Never panics.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.num_vertices();
        if self.v_ext == 0 {
            out.push(Violation::NoExternalVertex);
        }
        for e in &self.edges {
            for v in [e.tail, e.head] {
                if v >= n {
                    out.push(Violation::VertexOutOfRange { vertex: v });
                }
            }
        }
        for &c in &self.crosses {
            if c >= n {
                out.push(Violation::VertexOutOfRange { vertex: c });
            }
        }
        if !out.is_empty() {
            return out;
        }

        for (idx, e) in self.edges.iter().enumerate() {
            if e.is_small_loop() && !self.is_external(e.tail) {
                out.push(Violation::InternalSmallLoop { vertex: e.tail });
            }
            let wants_deco =
                self.parity == Parity::Odd && e.is_small_loop() && self.is_external(e.tail);
            if wants_deco != e.small_loop.is_some() {
                out.push(Violation::LoopDecoration { edge: idx });
            }
        }

        let mut seen = BTreeSet::new();
        for e in &self.edges {
            let key = e.unordered();
            if !seen.insert(key) {
                out.push(Violation::MultipleEdge { a: key.0, b: key.1 });
            }
        }

        if self.parity == Parity::Even && !self.crosses.is_empty() {
            out.push(Violation::CrossInEvenParity);
        }
        let mut crossed = BTreeSet::new();
        for &c in &self.crosses {
            if !self.is_external(c) {
                out.push(Violation::CrossOnInternal { vertex: c });
            } else if !crossed.insert(c) {
                out.push(Violation::DoubleCross { vertex: c });
            }
        }
        for e in &self.edges {
            if e.is_small_loop() && crossed.contains(&e.tail) {
                out.push(Violation::CrossedSmallLoop { vertex: e.tail });
            }
        }

        for v in 0..self.v_ext {
            if self.valence(v) == 0 && !crossed.contains(&v) {
                out.push(Violation::IsolatedExternal { vertex: v });
            }
        }
        for v in self.v_ext..n {
            let valence = self.valence(v);
            if valence < 3 {
                out.push(Violation::LowValence { vertex: v, valence });
            }
        }

        if self.v_ext > 0 && !self.is_connected() {
            out.push(Violation::Disconnected);
        }
        out
    }

    /// Connectivity with the circle counted as one piece.
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return false;
        }
        let mut reached = vec![false; n];
        let mut stack: Vec<usize> = (0..self.v_ext).collect();
        for &v in &stack {
            reached[v] = true;
        }
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if e.touches(v) {
                    let w = e.other(v);
                    if w < n && !reached[w] {
                        reached[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reached.iter().all(|&r| r)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Signed canonical representative under the decoration group.
    ///
    /// Orbit: cyclic rotations of the external vertices; all renamings of the
    /// internal vertices (signed in odd parity); edge flips and loop
    /// half-edge swaps (odd); edge relabelings (even); cross relabelings.
    /// Internal renamings are restricted to those compatible with an
    /// equitable colour refinement computed after each rotation, which keeps
    /// every automorphism in the search and the minimum canonical.
    pub fn canonicalize(&self) -> Result<Canon> {
        let violations = self.validate();
        if !violations.is_empty() {
            if violations.iter().all(Violation::is_vanishing) {
                return Ok(Canon::Zero);
            }
            let malformed: Vec<Violation> =
                violations.into_iter().filter(|v| !v.is_vanishing()).collect();
            return Err(GraphError::Malformed(malformed));
        }
        Ok(self.canonicalize_unchecked())
    }

    /// Canonical form of a graph already known to be valid.
    pub(crate) fn canonicalize_unchecked(&self) -> Canon {
        let base_sign: i32 = self
            .edges
            .iter()
            .filter_map(|e| e.small_loop.map(SmallLoopDecoration::sign))
            .product();

        let n = self.num_vertices();
        let ve = self.v_ext;
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.tail, e.head)).collect();

        let mut search = CanonSearch {
            parity: self.parity,
            v_ext: ve,
            pairs: &pairs,
            crosses: &self.crosses,
            best: None,
            zero: false,
            scratch_edges: Vec::with_capacity(pairs.len()),
            scratch_crosses: Vec::with_capacity(self.crosses.len()),
        };

        let mut map = vec![0usize; n];
        for r in 0..ve {
            for (v, slot) in map.iter_mut().enumerate().take(ve) {
                *slot = (v + ve - r) % ve;
            }
            let cells = self.refined_cells(&map);
            search.walk(&cells, 0, &mut map, ve);
        }

        if search.zero {
            return Canon::Zero;
        }
        let (enc, sign) = search.best.expect("at least one labelling");
        let edges = enc
            .edges
            .iter()
            .map(|&(a, b)| {
                let mut e = Edge::new(a as usize, b as usize);
                if a == b && self.parity == Parity::Odd {
                    e.small_loop = Some(SmallLoopDecoration::STANDARD);
                }
                e
            })
            .collect();
        let crosses = enc.crosses.iter().map(|&c| c as usize).collect();
        Canon::Graph {
            graph: DecoratedGraph::new(self.parity, self.v_ext, self.v_int, edges, crosses),
            sign: base_sign * sign,
        }
    }

    /// Ordered cells of internal vertices after colour refinement, with the
    /// external vertices fixed by `map`.
    fn refined_cells(&self, map: &[usize]) -> Vec<Vec<usize>> {
        let ve = self.v_ext;
        let n = self.num_vertices();
        if self.v_int == 0 {
            return Vec::new();
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            if e.tail != e.head {
                adj[e.tail].push(e.head);
                adj[e.head].push(e.tail);
            }
        }
        let mut colour: Vec<usize> = vec![0; n];
        let init: Vec<(usize, Vec<usize>)> = (ve..n)
            .map(|v| {
                let mut ext: Vec<usize> =
                    adj[v].iter().filter(|&&w| w < ve).map(|&w| map[w]).collect();
                ext.sort_unstable();
                (adj[v].len(), ext)
            })
            .collect();
        let mut classes = rank(&init);
        for (i, v) in (ve..n).enumerate() {
            colour[v] = classes[i];
        }
        let mut distinct = count_distinct(&classes);
        loop {
            let sigs: Vec<(usize, Vec<usize>)> = (ve..n)
                .map(|v| {
                    let mut nb: Vec<usize> =
                        adj[v].iter().filter(|&&w| w >= ve).map(|&w| colour[w]).collect();
                    nb.sort_unstable();
                    (colour[v], nb)
                })
                .collect();
            classes = rank(&sigs);
            for (i, v) in (ve..n).enumerate() {
                colour[v] = classes[i];
            }
            let d = count_distinct(&classes);
            if d == distinct {
                break;
            }
            distinct = d;
        }
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); distinct];
        for v in ve..n {
            cells[colour[v]].push(v);
        }
        cells
    }

    /// Apply a vertex relabeling `new = map[old]` (a permutation fixing the
    /// external/internal split), returning the relabeled graph and the sign
    /// `g = sign * relabeled`.
    pub fn relabel(&self, map: &[usize]) -> (DecoratedGraph, i32) {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { tail: map[e.tail], head: map[e.head], small_loop: e.small_loop })
            .collect();
        let crosses = self.crosses.iter().map(|&c| map[c]).collect();
        let sign = match self.parity {
            Parity::Odd => permutation_sign(map),
            Parity::Even => permutation_sign(&map[..self.v_ext]),
        };
        (DecoratedGraph::new(self.parity, self.v_ext, self.v_int, edges, crosses), sign)
    }

    /// Reverse the arrow of edge `idx` (odd). Returns the sign relating the two.
    pub fn flip_edge(&self, idx: usize) -> (DecoratedGraph, i32) {
        let mut g = self.clone();
        let e = &mut g.edges[idx];
        if let Some(d) = e.small_loop.as_mut() {
            d.arrow = match d.arrow {
                Arrow::WithOrder => Arrow::AgainstOrder,
                Arrow::AgainstOrder => Arrow::WithOrder,
            };
        } else {
            std::mem::swap(&mut e.tail, &mut e.head);
        }
        (g, -1)
    }

    /// Reorder the edges (even: relabel) so that new position `i` holds old
    /// edge `order[i]`.
    pub fn permute_edges(&self, order: &[usize]) -> (DecoratedGraph, i32) {
        let mut g = self.clone();
        g.edges = order.iter().map(|&i| self.edges[i]).collect();
        let sign = match self.parity {
            Parity::Even => permutation_sign(order),
            Parity::Odd => 1,
        };
        (g, sign)
    }

    /// Swap the half-edge order on small loop `idx` (odd).
    pub fn swap_loop_order(&self, idx: usize) -> (DecoratedGraph, i32) {
        let mut g = self.clone();
        if let Some(d) = g.edges[idx].small_loop.as_mut() {
            d.half_edge_order = match d.half_edge_order {
                HalfEdgeOrder::WithCircle => HalfEdgeOrder::AgainstCircle,
                HalfEdgeOrder::AgainstCircle => HalfEdgeOrder::WithCircle,
            };
            (g, -1)
        } else {
            (g, 1)
        }
    }

    /// Reorder the crosses so that new label `i+1` is old label `order[i]+1`.
    pub fn permute_crosses(&self, order: &[usize]) -> (DecoratedGraph, i32) {
        let mut g = self.clone();
        g.crosses = order.iter().map(|&i| self.crosses[i]).collect();
        (g, permutation_sign(order))
    }

    pub fn vertex_ref(&self, v: usize) -> VertexRef {
        if v < self.v_ext {
            VertexRef::External(v + 1)
        } else {
            VertexRef::Internal(v - self.v_ext + 1)
        }
    }
}

impl fmt::Display for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}+{}:", self.parity, self.v_ext, self.v_int)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", e.tail + 1, e.head + 1)?;
        }
        if !self.crosses.is_empty() {
            f.write_str(";x")?;
            for c in &self.crosses {
                write!(f, " {}", c + 1)?;
            }
        }
        f.write_str("]")
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Encoding {
    edges: Vec<(u16, u16)>,
    crosses: Vec<u16>,
}

struct CanonSearch<'a> {
    parity: Parity,
    v_ext: usize,
    pairs: &'a [(usize, usize)],
    crosses: &'a [usize],
    best: Option<(Encoding, i32)>,
    zero: bool,
    scratch_edges: Vec<(u16, u16)>,
    scratch_crosses: Vec<u16>,
}

impl CanonSearch<'_> {
    fn walk(&mut self, cells: &[Vec<usize>], cell: usize, map: &mut [usize], next: usize) {
        if cell == cells.len() {
            self.visit(map);
            return;
        }
        let members = &cells[cell];
        let mut perm: Vec<usize> = (0..members.len()).collect();
        loop {
            for (i, &p) in perm.iter().enumerate() {
                map[members[p]] = next + i;
            }
            self.walk(cells, cell + 1, map, next + members.len());
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }

    fn visit(&mut self, map: &[usize]) {
        let mut sign = 1i32;
        self.scratch_edges.clear();
        for &(t, h) in self.pairs {
            let (a, b) = (map[t] as u16, map[h] as u16);
            if a <= b {
                self.scratch_edges.push((a, b));
            } else {
                self.scratch_edges.push((b, a));
                if self.parity == Parity::Odd {
                    sign = -sign;
                }
            }
        }
        match self.parity {
            Parity::Odd => {
                sign *= permutation_sign(map);
                self.scratch_edges.sort_unstable();
            }
            Parity::Even => {
                sign *= permutation_sign(&map[..self.v_ext]);
                sign *= inversion_sign(&self.scratch_edges);
                self.scratch_edges.sort_unstable();
            }
        }
        self.scratch_crosses.clear();
        self.scratch_crosses.extend(self.crosses.iter().map(|&c| map[c] as u16));
        sign *= inversion_sign(&self.scratch_crosses);
        self.scratch_crosses.sort_unstable();

        match &mut self.best {
            None => {
                self.best = Some((
                    Encoding {
                        edges: self.scratch_edges.clone(),
                        crosses: self.scratch_crosses.clone(),
                    },
                    sign,
                ));
            }
            Some((enc, s)) => {
                let ord = (self.scratch_edges.as_slice(), self.scratch_crosses.as_slice())
                    .cmp(&(enc.edges.as_slice(), enc.crosses.as_slice()));
                match ord {
                    std::cmp::Ordering::Less => {
                        enc.edges.clone_from(&self.scratch_edges);
                        enc.crosses.clone_from(&self.scratch_crosses);
                        *s = sign;
                        self.zero = false;
                    }
                    std::cmp::Ordering::Equal => {
                        if *s != sign {
                            self.zero = true;
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
    }
}

fn rank<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = items.to_vec();
    sorted.sort();
    sorted.dedup();
    items.iter().map(|x| sorted.binary_search(x).unwrap()).collect()
}

fn count_distinct(classes: &[usize]) -> usize {
    classes.iter().copied().max().map_or(0, |m| m + 1)
}

/// Lexicographic successor; false once `p` is the last permutation.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
