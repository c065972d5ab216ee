use std::collections::BTreeSet;

use decograph::enumerate::basis;
use decograph::homology::{cohomology_with, Differential};
use decograph::vector::int;
use decograph::weights::{
    a_space_dim, bn_contraction_weight, chord_diagrams, forget_marks, gl_weight, marked_average, stu_relations,
    stu_resolve_with, weight_of_bn, weight_of_combination, y_graphs, BNGraph, ChordDiagram, End, ResolveOrder,
};
use decograph::Parity;

/// `sum tr(prod)` over every index assignment; a chord `(a, b)` with `a < b`
/// puts `E_ij` at `a` and `E_ji` at `b`.
fn index_sum(partner: &[usize], n: usize) -> i128 {
    let chords: Vec<(usize, usize)> = (0..partner.len()).filter(|&a| a < partner[a]).map(|a| (a, partner[a])).collect();
    let k = chords.len();
    let mut total = 0;
    let mut idx = vec![0usize; 2 * k];
    loop {
        let mut mats = vec![(0, 0); partner.len()];
        for (c, &(a, b)) in chords.iter().enumerate() {
            let (i, j) = (idx[2 * c], idx[2 * c + 1]);
            mats[a] = (i, j);
            mats[b] = (j, i);
        }
        let len = mats.len();
        if (0..len).all(|t| mats[t].1 == mats[(t + 1) % len].0) {
            total += 1;
        }
        let mut p = 0;
        while p < idx.len() {
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
        if p == idx.len() {
            return if k == 0 { n as i128 } else { total };
        }
    }
}

/// Matchings of `2k` points counted up to rotation, by explicit orbits.
fn rotation_classes(k: usize) -> usize {
    fn matchings(free: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
        if free.is_empty() {
            return vec![Vec::new()];
        }
        let a = free[0];
        let mut out = Vec::new();
        for &b in &free[1..] {
            let rest: Vec<usize> = free.iter().copied().filter(|&x| x != a && x != b).collect();
            for mut m in matchings(rest) {
                m.push((a, b));
                out.push(m);
            }
        }
        out
    }
    let n = 2 * k;
    let mut classes = BTreeSet::new();
    for m in matchings((0..n).collect()) {
        let orbit_min = (0..n.max(1))
            .map(|r| {
                let mut rotated: Vec<(usize, usize)> = m
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = ((a + r) % n, (b + r) % n);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                rotated.sort();
                rotated
            })
            .min()
            .unwrap();
        classes.insert(orbit_min);
    }
    classes.len()
}

/// Two trivalent vertices joined by an edge, each with two legs on the circle.
fn two_vertex_graphs() -> Vec<BNGraph> {
    let mut out = Vec::new();
    for legs in [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]] {
        let edges = vec![
            (End::Vertex(0, 0), End::Vertex(1, 0)),
            (End::Vertex(0, 1), End::Circle(legs[0])),
            (End::Vertex(0, 2), End::Circle(legs[1])),
            (End::Vertex(1, 1), End::Circle(legs[2])),
            (End::Vertex(1, 2), End::Circle(legs[3])),
        ];
        out.push(BNGraph::new(4, 2, edges).unwrap());
    }
    // one extra chord across
    let edges = vec![
        (End::Vertex(0, 0), End::Vertex(1, 0)),
        (End::Vertex(0, 1), End::Circle(0)),
        (End::Vertex(0, 2), End::Circle(2)),
        (End::Vertex(1, 1), End::Circle(3)),
        (End::Vertex(1, 2), End::Circle(5)),
        (End::Circle(1), End::Circle(4)),
    ];
    out.push(BNGraph::new(6, 2, edges).unwrap());
    out
}

#[test]
fn diagram_counts_match_orbit_oracle() {
    for k in 0..=5 {
        assert_eq!(chord_diagrams(k).len(), rotation_classes(k), "k = {k}");
    }
}

#[test]
fn gl_weight_matches_index_sum() {
    for k in 0..=4 {
        for d in chord_diagrams(k) {
            let w = gl_weight(&d);
            assert!(!w.is_zero(), "{d}");
            for n in 2..=4 {
                assert_eq!(w.eval(n as i64), index_sum(d.partner(), n), "{d} at N = {n}");
            }
        }
    }
}

#[test]
fn gl_weight_of_small_diagrams() {
    let one = ChordDiagram::new(&[(0, 1)]).unwrap();
    assert_eq!(gl_weight(&one).to_string(), "N^2");
    let crossing = ChordDiagram::new(&[(0, 2), (1, 3)]).unwrap();
    assert_eq!(gl_weight(&crossing).to_string(), "N");
    let parallel = ChordDiagram::new(&[(0, 1), (2, 3)]).unwrap();
    assert_eq!(gl_weight(&parallel).to_string(), "N^3");
}

#[test]
fn stu_relations_have_zero_weight() {
    for k in 1..=5 {
        for rel in stu_relations(k) {
            assert!(weight_of_combination(&rel).is_zero());
        }
    }
}

#[test]
fn resolution_order_does_not_matter() {
    let mut graphs = two_vertex_graphs();
    graphs.extend(y_graphs(3));
    for g in &graphs {
        let first = stu_resolve_with(g, ResolveOrder::First);
        let last = stu_resolve_with(g, ResolveOrder::Last);
        assert_eq!(weight_of_combination(&first), weight_of_combination(&last));
        for n in 2..=3 {
            assert_eq!(weight_of_bn(g).eval(n as i64), bn_contraction_weight(g, n));
        }
    }
}

#[test]
fn vertex_reversal_negates() {
    for g in two_vertex_graphs() {
        let r = g.reverse_vertex(0);
        let mut sum = weight_of_bn(&g);
        sum.add_scaled(1, &weight_of_bn(&r));
        assert!(sum.is_zero());
    }
}

#[test]
fn quotient_dimensions() {
    let dims: Vec<usize> = (0..=5).map(a_space_dim).collect();
    assert_eq!(dims, [1, 1, 2, 3, 6, 10]);
}

#[test]
fn quotient_matches_short_chord_blind_cohomology() {
    for k in 2..=3 {
        let h = cohomology_with(Differential::Underline, Parity::Odd, k, 0).unwrap();
        assert_eq!(a_space_dim(k as usize), h.dim_h, "k = {k}");
        for v in &h.cocycles {
            let hit = v.iter().any(|(g, _)| {
                g.is_chord_diagram() && !gl_weight(&ChordDiagram::from_graph(g).unwrap()).is_zero()
            });
            assert!(hit, "{v}");
        }
    }
}

#[test]
fn marks_average_back_to_the_diagram() {
    for k in 1..=4 {
        for d in chord_diagrams(k) {
            let avg = marked_average(&d);
            let back = forget_marks(&avg);
            assert_eq!(back.len(), 1);
            assert_eq!(back[&d], int(1));
        }
    }
}

#[test]
fn chord_diagrams_round_trip_through_graphs() {
    for k in 1..=3 {
        for d in chord_diagrams(k) {
            let g = d.to_graph(Parity::Odd);
            assert!(g.is_chord_diagram());
            assert_eq!(ChordDiagram::from_graph(&g).unwrap(), d);
        }
        let count = basis(Parity::Even, k as i64, 0).iter().filter(|g| g.is_chord_diagram()).count();
        assert!(count <= chord_diagrams(k).len());
    }
}
