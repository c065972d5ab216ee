//! Canonical bases of the graded pieces.
//!
//! For a target `(order, degree)` the vertex and edge counts are pinned by the
//! two grading equations; for every feasible shape we list all simple edge
//! sets (external small loops allowed) that meet the valence floors, then
//! canonicalize and deduplicate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{Canon, DecoratedGraph, Edge, Parity};

/// Vertex/edge/cross counts of one family of candidate graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub v_ext: usize,
    pub v_int: usize,
    pub edges: usize,
    pub crosses: usize,
}

/// Shapes with `e - v_i + x = k` and `2e - 3 v_i - v_e + x = m`, with at most
/// `max_crosses` crosses.
pub fn shapes(k: i64, m: i64, max_crosses: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    if k < 1 {
        return out;
    }
    for x in 0..=(max_crosses.min(k as usize) as i64) {
        // v_e + v_i = 2k - x - m
        let total = 2 * k - x - m;
        for v_ext in 1..=total.max(0) {
            let v_int = total - v_ext;
            let edges = k - x + v_int;
            if v_int < 0 || edges < 0 || v_ext < x {
                continue;
            }
            let (v_ext, v_int, edges) = (v_ext as usize, v_int as usize, edges as usize);
            let n = v_ext + v_int;
            let max_edges = n * (n - 1) / 2 + v_ext;
            // valence floor: uncrossed externals >= 1, internals >= 3
            let floor = (v_ext - x as usize) + 3 * v_int;
            if edges > max_edges || 2 * edges < floor {
                continue;
            }
            out.push(Shape { v_ext, v_int, edges, crosses: x as usize });
        }
    }
    out
}

/// Canonical basis of the unframed piece of bidegree `(k, m)`, sorted.
pub fn basis(parity: Parity, k: i64, m: i64) -> Vec<DecoratedGraph> {
    collect(parity, &shapes(k, m, 0))
}

/// Trivalent graphs of order `k`; the same set as `basis(parity, k, 0)`.
pub fn trivalent_basis(parity: Parity, k: i64) -> Vec<DecoratedGraph> {
    basis(parity, k, 0)
}

/// Canonical basis of the framed (odd, crossed) piece of framed bidegree `(k, m)`.
pub fn framed_basis(k: i64, m: i64) -> Vec<DecoratedGraph> {
    collect(Parity::Odd, &shapes(k, m, usize::MAX))
}

fn collect(parity: Parity, shapes: &[Shape]) -> Vec<DecoratedGraph> {
    let jobs: Vec<(Shape, Vec<usize>)> = shapes
        .iter()
        .flat_map(|s| cross_patterns(s.v_ext, s.crosses).into_iter().map(move |c| (*s, c)))
        .collect();
    let found: Vec<HashSet<DecoratedGraph>> = jobs
        .par_iter()
        .map(|(shape, crosses)| {
            let mut set = HashSet::new();
            for_each_edge_set(*shape, crosses, |pairs| {
                if pairs.iter().any(|&(a, b)| a == b && crosses.contains(&a)) {
                    return;
                }
                let edges = pairs.iter().map(|&(a, b)| orient(parity, a, b)).collect();
                let g = DecoratedGraph::new(parity, shape.v_ext, shape.v_int, edges, crosses.clone());
                if let Canon::Graph { graph, .. } = g.canonicalize_unchecked() {
                    set.insert(graph);
                }
            });
            set
        })
        .collect();
    let mut all: Vec<DecoratedGraph> = found.into_iter().flatten().collect::<HashSet<_>>().into_iter().collect();
    all.sort();
    all
}

fn orient(parity: Parity, a: usize, b: usize) -> Edge {
    let mut e = Edge::new(a, b);
    if a == b && parity == Parity::Odd {
        e.small_loop = Some(crate::graph::SmallLoopDecoration::STANDARD);
    }
    e
}

/// Cross placements up to rotation are not reduced here; canonicalization
/// merges them. Crossed vertices are listed in increasing order.
fn cross_patterns(v_ext: usize, x: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, x: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == x {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, x, cur, out);
            cur.pop();
        }
    }
    rec(0, v_ext, x, &mut cur, &mut out);
    out
}

/// Calls `f` with every simple edge set of the shape that satisfies the
/// valence floors and connectivity. Internal vertices come out sorted by
/// (valence descending, external-neighbour mask), which every isomorphism
/// class admits, so no class is lost.
pub(crate) fn for_each_edge_set(shape: Shape, crossed: &[usize], mut f: impl FnMut(&[(usize, usize)])) {
    let ve = shape.v_ext;
    let n = shape.v_ext + shape.v_int;
    let mut floor = vec![0usize; n];
    for (v, fl) in floor.iter_mut().enumerate() {
        *fl = if v < ve {
            if crossed.contains(&v) {
                0
            } else {
                1
            }
        } else {
            3
        };
    }
    let slack = (2 * shape.edges).saturating_sub(floor.iter().sum());
    let cap: Vec<usize> = floor.iter().map(|fl| fl + slack).collect();

    // candidate pairs row by row; external loops sit at the start of their row
    let mut cands: Vec<(usize, usize)> = Vec::new();
    let mut row_end = vec![0usize; n];
    for (a, end) in row_end.iter_mut().enumerate() {
        if a < ve {
            cands.push((a, a));
        }
        for b in a + 1..n {
            cands.push((a, b));
        }
        *end = cands.len();
    }

    let mut st = EdgeSearch {
        ve,
        n,
        target: shape.edges,
        floor,
        cap,
        cands,
        row_end,
        valence: vec![0; n],
        ext_mask: vec![0u64; n],
        chosen: Vec::with_capacity(shape.edges),
    };
    st.rec(0, 0, &mut f);
}

struct EdgeSearch {
    ve: usize,
    n: usize,
    target: usize,
    floor: Vec<usize>,
    cap: Vec<usize>,
    cands: Vec<(usize, usize)>,
    row_end: Vec<usize>,
    valence: Vec<usize>,
    ext_mask: Vec<u64>,
    chosen: Vec<(usize, usize)>,
}

impl EdgeSearch {
    fn rec(&mut self, idx: usize, row: usize, f: &mut impl FnMut(&[(usize, usize)])) {
        // close every row that ends here
        let mut row = row;
        while row < self.n && self.row_end[row] == idx {
            if !self.row_done(row) {
                return;
            }
            row += 1;
        }
        if self.chosen.len() == self.target {
            // remaining vertices must already meet their floors
            if (row..self.n).all(|v| self.valence[v] >= self.floor[v])
                && self.internal_order_ok(row)
                && self.connected()
            {
                f(&self.chosen);
            }
            return;
        }
        if idx == self.cands.len() {
            return;
        }
        let need = self.target - self.chosen.len();
        if self.cands.len() - idx < need {
            return;
        }
        let deficit: usize = (row..self.n)
            .map(|v| self.floor[v].saturating_sub(self.valence[v]))
            .sum();
        if deficit > 2 * need {
            return;
        }

        let (a, b) = self.cands[idx];
        let add = if a == b { 2 } else { 1 };
        let fits = if a == b {
            self.valence[a] + 2 <= self.cap[a]
        } else {
            self.valence[a] < self.cap[a] && self.valence[b] < self.cap[b]
        };
        if fits {
            self.valence[a] += add;
            if a != b {
                self.valence[b] += 1;
            }
            if a < self.ve && b >= self.ve {
                self.ext_mask[b] |= 1 << a;
            }
            self.chosen.push((a, b));
            self.rec(idx + 1, row, f);
            self.chosen.pop();
            if a < self.ve && b >= self.ve {
                self.ext_mask[b] &= !(1 << a);
            }
            self.valence[a] -= add;
            if a != b {
                self.valence[b] -= 1;
            }
        }
        self.rec(idx + 1, row, f);
    }

    /// Row `v` is finished: its valence is final.
    fn row_done(&self, v: usize) -> bool {
        if self.valence[v] < self.floor[v] {
            return false;
        }
        if v > self.ve && v >= 1 {
            return self.key(v - 1) <= self.key(v);
        }
        true
    }

    fn internal_order_ok(&self, from_row: usize) -> bool {
        let start = from_row.max(self.ve + 1);
        (start..self.n).all(|v| self.key(v - 1) <= self.key(v))
    }

    fn key(&self, v: usize) -> (std::cmp::Reverse<usize>, u64) {
        (std::cmp::Reverse(self.valence[v]), self.ext_mask[v])
    }

    fn connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for v in 1..self.ve {
            let (r0, r1) = (find(&mut parent, 0), find(&mut parent, v));
            parent[r1] = r0;
        }
        for &(a, b) in &self.chosen {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..self.n).all(|v| find(&mut parent, v) == root)
    }
}
