use std::sync::OnceLock;

use proptest::prelude::*;

use decograph::enumerate::basis;
use decograph::json::{graph_from_json, graph_to_json, vector_from_json, vector_to_json};
use decograph::vector::rat;
use decograph::{delta, Canon, DecoratedGraph, GraphVector, Parity};

fn pool() -> &'static Vec<DecoratedGraph> {
    static POOL: OnceLock<Vec<DecoratedGraph>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for parity in [Parity::Odd, Parity::Even] {
            for k in 1..=3 {
                for m in -3..=1 {
                    out.extend(basis(parity, k, m));
                }
            }
        }
        out
    })
}

fn canon(g: &DecoratedGraph) -> (DecoratedGraph, i32) {
    match g.canonicalize().unwrap() {
        Canon::Graph { graph, sign } => (graph, sign),
        Canon::Zero => panic!("basis graph {g} canonicalized to zero"),
    }
}

/// Relabeling that rotates the externals by `rot` and permutes the internals.
fn relabeling(g: &DecoratedGraph, rot: usize, internal: &[usize]) -> Vec<usize> {
    let ve = g.v_ext();
    let mut map: Vec<usize> = (0..ve).map(|i| (i + rot) % ve.max(1)).collect();
    map.extend(internal.iter().map(|&j| ve + j));
    map
}

fn shuffled(n: usize, seed: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, seed[i % seed.len()] % (i + 1));
    }
    p
}

/// A random decoration change: `(changed graph, sign)` with `g = sign * changed`.
fn decorate(g: &DecoratedGraph, rot: usize, seed: &[usize], flips: &[bool]) -> (DecoratedGraph, i32) {
    let internal = shuffled(g.v_int(), seed);
    let (mut h, mut sign) = g.relabel(&relabeling(g, rot, &internal));
    let order = shuffled(h.num_edges(), &seed[1..]);
    let (p, s) = h.permute_edges(&order);
    h = p;
    sign *= s;
    if g.parity() == Parity::Odd {
        for i in 0..h.num_edges() {
            if flips[i % flips.len()] {
                let (f, s) = h.flip_edge(i);
                h = f;
                sign *= s;
            }
            if flips[(i + 1) % flips.len()] {
                let (f, s) = h.swap_loop_order(i);
                h = f;
                sign *= s;
            }
        }
    }
    (h, sign)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_a_fixed_point(i in 0usize..10_000) {
        let g = &pool()[i % pool().len()];
        let (c, _) = canon(g);
        prop_assert_eq!(c.canonicalize().unwrap(), Canon::Graph { graph: c.clone(), sign: 1 });
    }

    #[test]
    fn decoration_changes_are_sign_equivariant(
        i in 0usize..10_000,
        rot in 0usize..8,
        seed in proptest::collection::vec(0usize..64, 4),
        flips in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let g = &pool()[i % pool().len()];
        let (h, sigma) = decorate(g, rot, &seed, &flips);
        let (cg, sg) = canon(g);
        let (ch, sh) = canon(&h);
        prop_assert_eq!(&cg, &ch);
        prop_assert_eq!(sg, sigma * sh);
        prop_assert_eq!((h.order(), h.degree()), (g.order(), g.degree()));
        prop_assert_eq!((cg.order(), cg.degree()), (g.order(), g.degree()));
    }

    #[test]
    fn delta_is_well_defined_on_classes(
        i in 0usize..10_000,
        rot in 0usize..8,
        seed in proptest::collection::vec(0usize..64, 4),
        flips in proptest::collection::vec(any::<bool>(), 5),
    ) {
        let g = &pool()[i % pool().len()];
        let (h, sigma) = decorate(g, rot, &seed, &flips);
        prop_assert_eq!(delta(g).unwrap(), delta(&h).unwrap().scale(&rat(sigma as i64, 1)));
    }

    #[test]
    fn delta_raises_degree_by_one(i in 0usize..10_000) {
        let g = &pool()[i % pool().len()];
        for (t, _) in delta(g).unwrap().iter() {
            prop_assert_eq!(t.order(), g.order());
            prop_assert_eq!(t.degree(), g.degree() + 1);
        }
    }

    #[test]
    fn json_round_trip(i in 0usize..10_000, j in 0usize..10_000, a in -5i64..5, b in 1i64..5) {
        let g = &pool()[i % pool().len()];
        prop_assert_eq!(&graph_from_json(&graph_to_json(g)).unwrap(), g);
        let text = graph_to_json(g);
        prop_assert_eq!(graph_to_json(&graph_from_json(&text).unwrap()), text);

        let h = pool()[j % pool().len()].clone();
        if h.parity() == g.parity() {
            let mut v = GraphVector::zero(g.parity());
            v.add_graph(&rat(a, b), g).unwrap();
            v.add_graph(&rat(1, 3), &h).unwrap();
            prop_assert_eq!(vector_from_json(&vector_to_json(&v)).unwrap(), v);
        }
    }
}

#[test]
fn grading_formulas() {
    // odd tripod: e = 3, v_i = 1, v_e = 3
    let t = DecoratedGraph::odd(3, 1, &[(4, 1), (4, 2), (4, 3)]);
    assert_eq!((t.order(), t.degree()), (2, 0));
    let d = DecoratedGraph::odd(4, 0, &[(1, 3), (2, 4)]);
    assert_eq!((d.order(), d.degree()), (2, 0));
    let x = DecoratedGraph::odd(1, 0, &[]).with_crosses(&[1]);
    assert_eq!((x.order(), x.degree()), (1, 0));
}

#[test]
fn parallel_edges_vanish() {
    let g = DecoratedGraph::odd(2, 0, &[(1, 2), (1, 2)]);
    assert!(g.canonicalize().unwrap().is_zero());
}

#[test]
fn internal_small_loops_are_malformed() {
    let g = DecoratedGraph::odd(2, 1, &[(3, 3), (1, 3), (2, 3)]);
    assert!(!g.is_valid());
}

fn same_raw(a: &DecoratedGraph, b: &DecoratedGraph) -> bool {
    let key = |g: &DecoratedGraph| -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .map(|e| if g.parity() == Parity::Even { (e.tail.min(e.head), e.tail.max(e.head)) } else { (e.tail, e.head) })
            .collect()
    };
    a.parity() == b.parity() && a.v_ext() == b.v_ext() && a.v_int() == b.v_int() && key(a) == key(b)
}

#[test]
fn zero_graphs_have_an_odd_symmetry() {
    // even chord on two points: the rotation is an odd external permutation
    let g = DecoratedGraph::even(2, 0, &[(1, 2)]);
    assert!(g.canonicalize().unwrap().is_zero());
    let (h, sigma) = g.relabel(&[1, 0]);
    assert!(same_raw(&g, &h));
    assert_eq!(sigma, -1);

    // two odd small loops: the rotation swaps them and is an odd vertex permutation
    let g = DecoratedGraph::odd(2, 0, &[(1, 1), (2, 2)]);
    assert!(g.canonicalize().unwrap().is_zero());
    let (h, s1) = g.relabel(&[1, 0]);
    let (h, s2) = h.permute_edges(&[1, 0]);
    assert_eq!(h, g);
    assert_eq!(s1 * s2, -1);

    // even: three parallel long chords, rotation by one is an odd 6-cycle
    let g = DecoratedGraph::even(6, 0, &[(1, 4), (2, 5), (3, 6)]);
    assert!(g.canonicalize().unwrap().is_zero());
    let (h, s1) = g.relabel(&[1, 2, 3, 4, 5, 0]);
    let (h, s2) = h.permute_edges(&[2, 0, 1]);
    assert!(same_raw(&g, &h));
    assert_eq!(s1 * s2, -1);
}

#[test]
fn basis_graphs_are_canonical_and_distinct() {
    let mut seen = std::collections::HashSet::new();
    for g in pool() {
        assert_eq!(g.canonicalize().unwrap(), Canon::Graph { graph: g.clone(), sign: 1 });
        assert!(seen.insert(g.clone()), "duplicate {g}");
    }
}
