//! Bar-Natan graphs, STU resolution, chord diagrams and gl(N) weights.
//!
//! A BN graph has `points` legs on an oriented circle (positions `0..points`
//! in circle order) and trivalent internal vertices whose three slots are
//! listed in their cyclic order. Reversing a vertex orientation negates the
//! graph. STU at a vertex with slots `(l, a, b)`, `l` on the circle, reads
//! `S = T - U` where `T` attaches `a` before `b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{DecoratedGraph, Parity};
use crate::homology::rank_of;
use crate::vector::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Circle(usize),
    /// Vertex id and slot `0..3` in the vertex's cyclic order.
    Vertex(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BNGraph {
    points: usize,
    vertices: usize,
    edges: Vec<(End, End)>,
}

/// Chord diagram up to rotation. `partner[p]` is the other end of the chord
/// at position `p`; the stored rotation is the lexicographically least.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

/// Chord diagram with a marked point just before position 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedChordDiagram {
    partner: Vec<usize>,
}

/// Integer polynomial in `N`; `coeffs[i]` multiplies `N^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    coeffs: Vec<i64>,
}

/// Formal integer combination of chord diagrams.
pub type ChordCombination = BTreeMap<ChordDiagram, i64>;

fn matching(points: usize, chords: &[(usize, usize)]) -> Result<Vec<usize>> {
    if points != 2 * chords.len() {
        return Err(GraphError::InvalidDiagram(format!("{} chords need {} points", chords.len(), 2 * chords.len())));
    }
    let mut partner = vec![usize::MAX; points];
    for &(a, b) in chords {
        if a == b || a >= points || b >= points || partner[a] != usize::MAX || partner[b] != usize::MAX {
            return Err(GraphError::InvalidDiagram(format!("bad chord ({a}, {b})")));
        }
        partner[a] = b;
        partner[b] = a;
    }
    Ok(partner)
}

fn rotate(partner: &[usize], r: usize) -> Vec<usize> {
    let n = partner.len();
    (0..n).map(|p| (partner[(p + r) % n] + n - r) % n).collect()
}

impl ChordDiagram {
    /// From chords on positions `0..2k` in circle order.
    pub fn new(chords: &[(usize, usize)]) -> Result<Self> {
        Ok(Self::from_partner(matching(2 * chords.len(), chords)?))
    }

    fn from_partner(partner: Vec<usize>) -> Self {
        let best = (0..partner.len().max(1))
            .map(|r| if partner.is_empty() { Vec::new() } else { rotate(&partner, r) })
            .min()
            .unwrap_or_default();
        ChordDiagram { partner: best }
    }

    pub fn num_chords(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// Chords `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&p| p < self.partner[p]).map(|p| (p, self.partner[p])).collect()
    }

    /// Chord diagram of a graph with no internal vertices and only chords.
    pub fn from_graph(g: &DecoratedGraph) -> Result<Self> {
        if !g.is_chord_diagram() {
            return Err(GraphError::InvalidDiagram(format!("{g} is not a chord diagram")));
        }
        let chords: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
        if 2 * chords.len() != g.v_ext() {
            return Err(GraphError::InvalidDiagram(format!("{g} has shared chord endpoints")));
        }
        Self::new(&chords)
    }

    /// The same diagram as a decorated graph, chords oriented low to high.
    pub fn to_graph(&self, parity: Parity) -> DecoratedGraph {
        let pairs: Vec<(usize, usize)> = self.chords().iter().map(|&(a, b)| (a + 1, b + 1)).collect();
        match parity {
            Parity::Odd => DecoratedGraph::odd(self.partner.len(), 0, &pairs),
            Parity::Even => DecoratedGraph::even(self.partner.len(), 0, &pairs),
        }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cd[")?;
        for (i, (a, b)) in self.chords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        f.write_str("]")
    }
}

impl MarkedChordDiagram {
    pub fn new(chords: &[(usize, usize)]) -> Result<Self> {
        Ok(MarkedChordDiagram { partner: matching(2 * chords.len(), chords)? })
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }
}

/// All chord diagrams with `k` chords, sorted.
pub fn chord_diagrams(k: usize) -> Vec<ChordDiagram> {
    let mut out = BTreeSet::new();
    let mut partner = vec![usize::MAX; 2 * k];
    fn rec(partner: &mut Vec<usize>, out: &mut BTreeSet<ChordDiagram>) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.insert(ChordDiagram::from_partner(partner.clone()));
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                rec(partner, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    rec(&mut partner, &mut out);
    out.into_iter().collect()
}

/// Uniform average over the distinct markings of `d`.
pub fn marked_average(d: &ChordDiagram) -> BTreeMap<MarkedChordDiagram, Rational> {
    let n = d.partner.len();
    let words: BTreeSet<Vec<usize>> = (0..n.max(1))
        .map(|r| if n == 0 { Vec::new() } else { rotate(&d.partner, r) })
        .collect();
    let c = rat(1, words.len() as i64);
    words.into_iter().map(|w| (MarkedChordDiagram { partner: w }, c.clone())).collect()
}

pub fn forget_mark(d: &MarkedChordDiagram) -> ChordDiagram {
    ChordDiagram::from_partner(d.partner.clone())
}

/// Linear extension of [`forget_mark`].
pub fn forget_marks(v: &BTreeMap<MarkedChordDiagram, Rational>) -> BTreeMap<ChordDiagram, Rational> {
    let mut out: BTreeMap<ChordDiagram, Rational> = BTreeMap::new();
    for (d, c) in v {
        *out.entry(forget_mark(d)).or_insert_with(|| int(0)) += c;
    }
    out.retain(|_, c| *c != int(0));
    out
}

impl BNGraph {
    /// Every circle position and every vertex slot must be used by exactly
    /// one edge end, and the graph must be connected to the circle.
    pub fn new(points: usize, vertices: usize, edges: Vec<(End, End)>) -> Result<Self> {
        let mut used = BTreeSet::new();
        for &(a, b) in &edges {
            for end in [a, b] {
                let ok = match end {
                    End::Circle(p) => p < points,
                    End::Vertex(v, s) => v < vertices && s < 3,
                };
                if !ok || !used.insert(end) {
                    return Err(GraphError::InvalidDiagram(format!("end {end:?} out of range or reused")));
                }
            }
        }
        if used.len() != points + 3 * vertices {
            return Err(GraphError::InvalidDiagram("some leg or slot is unused".into()));
        }
        let g = BNGraph { points, vertices, edges };
        if !g.is_connected() {
            return Err(GraphError::InvalidDiagram("internal part not connected to the circle".into()));
        }
        Ok(g)
    }

    pub fn from_chord_diagram(d: &ChordDiagram) -> Self {
        BNGraph {
            points: d.partner.len(),
            vertices: 0,
            edges: d.chords().into_iter().map(|(a, b)| (End::Circle(a), End::Circle(b))).collect(),
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(End, End)] {
        &self.edges
    }

    /// `e - v_i`
    pub fn degree(&self) -> usize {
        self.edges.len() - self.vertices
    }

    pub fn to_chord_diagram(&self) -> Option<ChordDiagram> {
        if self.vertices > 0 {
            return None;
        }
        let chords: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| match (a, b) {
                (End::Circle(p), End::Circle(q)) => (p, q),
                _ => unreachable!("no vertices left"),
            })
            .collect();
        ChordDiagram::new(&chords).ok()
    }

    /// The graph with vertex `v`'s cyclic order reversed; equals `-self`.
    pub fn reverse_vertex(&self, v: usize) -> BNGraph {
        let swap = |e: End| match e {
            End::Vertex(w, 1) if w == v => End::Vertex(w, 2),
            End::Vertex(w, 2) if w == v => End::Vertex(w, 1),
            other => other,
        };
        BNGraph { edges: self.edges.iter().map(|&(a, b)| (swap(a), swap(b))).collect(), ..self.clone() }
    }

    fn is_connected(&self) -> bool {
        let mut reached = vec![false; self.vertices];
        let mut stack = Vec::new();
        let node = |e: End| match e {
            End::Circle(_) => None,
            End::Vertex(v, _) => Some(v),
        };
        for &(a, b) in &self.edges {
            for (x, y) in [(a, b), (b, a)] {
                if node(x).is_none() {
                    if let Some(v) = node(y) {
                        if !reached[v] {
                            reached[v] = true;
                            stack.push(v);
                        }
                    }
                }
            }
        }
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if node(x) == Some(v) {
                        if let Some(w) = node(y) {
                            if !reached[w] {
                                reached[w] = true;
                                stack.push(w);
                            }
                        }
                    }
                }
            }
        }
        reached.iter().all(|&r| r)
    }

    fn other_end(&self, end: End) -> (usize, End) {
        self.edges
            .iter()
            .enumerate()
            .find_map(|(i, &(a, b))| {
                if a == end {
                    Some((i, b))
                } else if b == end {
                    Some((i, a))
                } else {
                    None
                }
            })
            .expect("every end is used")
    }

    /// Vertices with a slot on the circle, with that slot.
    pub fn circle_adjacent(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for &(a, b) in &self.edges {
            for (x, y) in [(a, b), (b, a)] {
                if let (End::Circle(_), End::Vertex(v, s)) = (x, y) {
                    out.insert((v, s));
                }
            }
        }
        let mut seen = BTreeSet::new();
        out.into_iter().filter(|&(v, _)| seen.insert(v)).collect()
    }

    /// One STU step at vertex `v` through its circle slot `s`: returns
    /// `(T, U)` with `self = T - U`.
    pub fn stu(&self, v: usize, s: usize) -> Result<(BNGraph, BNGraph)> {
        let (e0, leg) = self.other_end(End::Vertex(v, s));
        let End::Circle(p) = leg else {
            return Err(GraphError::InvalidDiagram(format!("slot {s} of vertex {v} is not on the circle")));
        };
        let slot_a = End::Vertex(v, (s + 1) % 3);
        let slot_b = End::Vertex(v, (s + 2) % 3);
        let (ea, a) = self.other_end(slot_a);
        let (eb, b) = self.other_end(slot_b);

        let shift = |e: End| match e {
            End::Circle(q) if q > p => End::Circle(q + 1),
            End::Vertex(w, t) if w > v => End::Vertex(w - 1, t),
            other => other,
        };
        let rest: Vec<(End, End)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e0 && i != ea && i != eb)
            .map(|(_, &(x, y))| (shift(x), shift(y)))
            .collect();
        let build = |first: End, second: End| {
            let mut edges = rest.clone();
            if ea == eb {
                // a and b are the two ends of one loop at v
                edges.push((End::Circle(p), End::Circle(p + 1)));
            } else {
                edges.push((End::Circle(p), shift(first)));
                edges.push((End::Circle(p + 1), shift(second)));
            }
            BNGraph { points: self.points + 1, vertices: self.vertices - 1, edges }
        };
        Ok((build(a, b), build(b, a)))
    }
}

/// Which circle-adjacent vertex STU resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveOrder {
    First,
    Last,
}

pub fn stu_resolve(g: &BNGraph) -> ChordCombination {
    stu_resolve_with(g, ResolveOrder::First)
}

pub fn stu_resolve_with(g: &BNGraph, order: ResolveOrder) -> ChordCombination {
    let mut out = ChordCombination::new();
    let mut work = vec![(1i64, g.clone())];
    while let Some((c, h)) = work.pop() {
        if let Some(d) = h.to_chord_diagram() {
            *out.entry(d).or_insert(0) += c;
            continue;
        }
        let adj = h.circle_adjacent();
        let (v, s) = match order {
            ResolveOrder::First => adj[0],
            ResolveOrder::Last => adj[adj.len() - 1],
        };
        let (t, u) = h.stu(v, s).expect("circle slot");
        work.push((c, t));
        work.push((-c, u));
    }
    out.retain(|_, c| *c != 0);
    out
}

impl WeightPolynomial {
    pub fn monomial(power: usize) -> Self {
        let mut coeffs = vec![0; power + 1];
        coeffs[power] = 1;
        WeightPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add_scaled(&mut self, c: i64, other: &WeightPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *x += c * y;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, n: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * n as i128 + c as i128)
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            match (p, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("N")?,
                (1, m) => write!(f, "{m}N")?,
                (p, 1) => write!(f, "N^{p}")?,
                (p, m) => write!(f, "{m}N^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// gl(N) weight: `N^c`, `c` the number of index cycles after contracting
/// every chord with `sum E_ij (x) E_ji` inside the circle trace.
pub fn gl_weight(d: &ChordDiagram) -> WeightPolynomial {
    let n = d.partner.len();
    if n == 0 {
        return WeightPolynomial::monomial(1);
    }
    // index slots: 2p is the row index at p, 2p + 1 the column index
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    for p in 0..n {
        // matrix product around the circle: column at p = row at p + 1
        union(2 * p + 1, 2 * ((p + 1) % n));
        let q = d.partner[p];
        if p < q {
            // E_ij at p, E_ji at q
            union(2 * p, 2 * q + 1);
            union(2 * p + 1, 2 * q);
        }
    }
    let classes = (0..2 * n).filter(|&x| find(&mut parent, x) == x).count();
    WeightPolynomial::monomial(classes)
}

/// `gl_weight` extended through STU resolution.
pub fn weight_of_bn(g: &BNGraph) -> WeightPolynomial {
    weight_of_combination(&stu_resolve(g))
}

pub fn weight_of_combination(v: &ChordCombination) -> WeightPolynomial {
    let mut out = WeightPolynomial::default();
    for (d, &c) in v {
        out.add_scaled(c, &gl_weight(d));
    }
    out
}

/// Value of the gl(N) weight at `n` by summing `tr` over every assignment of
/// elementary matrices to the chords; independent of [`gl_weight`].
pub fn trace_weight(d: &ChordDiagram, n: usize) -> i128 {
    bn_contraction_weight(&BNGraph::from_chord_diagram(d), n)
}

/// Direct tensor contraction at `n`: every edge carries `sum E_ij (x) E_ji`,
/// every vertex `tr(x [y, z])` on its slots in cyclic order, the circle the
/// trace of the product of its legs.
pub fn bn_contraction_weight(g: &BNGraph, n: usize) -> i128 {
    let e = g.edges.len();
    // matrix at each end: (row, col)
    let mut circle = vec![(0usize, 0usize); g.points];
    let mut slots = vec![[(0usize, 0usize); 3]; g.vertices];
    let mut assign = vec![0usize; e];
    let mut total = 0i128;
    let product_trace = |mats: &[(usize, usize)]| -> i128 {
        let ok = (0..mats.len()).all(|t| mats[t].1 == mats[(t + 1) % mats.len()].0);
        ok as i128
    };
    loop {
        for (k, &(a, b)) in g.edges.iter().enumerate() {
            let (i, j) = (assign[k] / n, assign[k] % n);
            for (end, m) in [(a, (i, j)), (b, (j, i))] {
                match end {
                    End::Circle(p) => circle[p] = m,
                    End::Vertex(v, s) => slots[v][s] = m,
                }
            }
        }
        let mut term = if g.points == 0 { n as i128 } else { product_trace(&circle) };
        for s in &slots {
            if term == 0 {
                break;
            }
            term *= product_trace(&[s[0], s[1], s[2]]) - product_trace(&[s[0], s[2], s[1]]);
        }
        total += term;
        let mut k = 0;
        while k < e {
            assign[k] += 1;
            if assign[k] < n * n {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
        if k == e {
            return total;
        }
    }
}

/// Graphs with one internal vertex on legs `(p1, p2, p3)` in circle order
/// plus `k - 2` chords on the other positions.
pub fn y_graphs(k: usize) -> Vec<BNGraph> {
    if k < 2 {
        return Vec::new();
    }
    let points = 2 * k - 1;
    let mut out = Vec::new();
    for p1 in 0..points {
        for p2 in p1 + 1..points {
            for p3 in p2 + 1..points {
                let free: Vec<usize> = (0..points).filter(|&p| p != p1 && p != p2 && p != p3).collect();
                for m in matchings(&free) {
                    let mut edges = vec![
                        (End::Circle(p1), End::Vertex(0, 0)),
                        (End::Circle(p2), End::Vertex(0, 1)),
                        (End::Circle(p3), End::Vertex(0, 2)),
                    ];
                    edges.extend(m.into_iter().map(|(a, b)| (End::Circle(a), End::Circle(b))));
                    out.push(BNGraph { points, vertices: 1, edges });
                }
            }
        }
    }
    out
}

fn matchings(free: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if free.is_empty() {
        return vec![Vec::new()];
    }
    let a = free[0];
    let mut out = Vec::new();
    for i in 1..free.len() {
        let rest: Vec<usize> = free[1..].iter().copied().filter(|&x| x != free[i]).collect();
        for mut m in matchings(&rest) {
            m.push((a, free[i]));
            out.push(m);
        }
    }
    out
}

/// Relations among `k`-chord diagrams forced by STU: for every graph with
/// one internal vertex, the resolutions through its three legs agree.
pub fn stu_relations(k: usize) -> Vec<ChordCombination> {
    let mut out = Vec::new();
    for y in y_graphs(k) {
        let resolved: Vec<ChordCombination> = (0..3)
            .map(|s| {
                let (t, u) = y.stu(0, s).expect("all legs on the circle");
                let mut c = ChordCombination::new();
                *c.entry(t.to_chord_diagram().expect("no vertices")).or_insert(0) += 1;
                *c.entry(u.to_chord_diagram().expect("no vertices")).or_insert(0) -= 1;
                c
            })
            .collect();
        for s in 1..3 {
            let mut rel = resolved[0].clone();
            for (d, c) in &resolved[s] {
                *rel.entry(d.clone()).or_insert(0) -= c;
            }
            rel.retain(|_, c| *c != 0);
            if !rel.is_empty() {
                out.push(rel);
            }
        }
    }
    out
}

/// Dimension of the degree-`k` part of chord diagrams modulo STU.
pub fn a_space_dim(k: usize) -> usize {
    let diagrams = chord_diagrams(k);
    let index: BTreeMap<&ChordDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let rows: Vec<Vec<Rational>> = stu_relations(k)
        .iter()
        .map(|rel| {
            let mut row = vec![int(0); diagrams.len()];
            for (d, &c) in rel {
                row[index[d]] = int(c);
            }
            row
        })
        .collect();
    diagrams.len() - if rows.is_empty() { 0 } else { rank_of(&rows) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_canonical_form() {
        let a = ChordDiagram::new(&[(0, 1), (2, 3)]).unwrap();
        let b = ChordDiagram::new(&[(1, 2), (3, 0)]).unwrap();
        assert_eq!(a, b);
        let c = ChordDiagram::new(&[(0, 2), (1, 3)]).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bad_diagrams_rejected() {
        assert!(ChordDiagram::new(&[(0, 0)]).is_err());
        assert!(ChordDiagram::new(&[(0, 1), (1, 2)]).is_err());
        assert!(ChordDiagram::new(&[(0, 5)]).is_err());
    }

    #[test]
    fn diagram_counts() {
        // classes of perfect matchings under rotation
        let counts: Vec<usize> = (0..=4).map(|k| chord_diagrams(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 18]);
    }

    #[test]
    fn polynomial_display() {
        let mut p = WeightPolynomial::monomial(3);
        p.add_scaled(-1, &WeightPolynomial::monomial(1));
        assert_eq!(p.to_string(), "N^3 - N");
        assert_eq!(p.eval(2), 6);
        assert_eq!(WeightPolynomial::default().to_string(), "0");
    }

    #[test]
    fn reversed_vertex_flips_weight() {
        let g = BNGraph::new(
            3,
            1,
            vec![
                (End::Circle(0), End::Vertex(0, 0)),
                (End::Circle(1), End::Vertex(0, 1)),
                (End::Circle(2), End::Vertex(0, 2)),
            ],
        )
        .unwrap();
        let mut sum = weight_of_bn(&g);
        sum.add_scaled(1, &weight_of_bn(&g.reverse_vertex(0)));
        assert!(sum.is_zero());
    }

    #[test]
    fn loop_at_vertex_resolves_to_zero() {
        let g = BNGraph::new(
            1,
            1,
            vec![(End::Circle(0), End::Vertex(0, 0)), (End::Vertex(0, 1), End::Vertex(0, 2))],
        )
        .unwrap();
        assert!(stu_resolve(&g).is_empty());
    }
}
