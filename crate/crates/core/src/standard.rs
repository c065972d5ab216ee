//! Small named graphs and the explicit low-order combinations.

use crate::graph::{DecoratedGraph, Parity};
use crate::vector::{rat, GraphVector, Rational};
use crate::Result;

fn build(parity: Parity, v_ext: usize, v_int: usize, edges: &[(usize, usize)]) -> DecoratedGraph {
    match parity {
        Parity::Odd => DecoratedGraph::odd(v_ext, v_int, edges),
        Parity::Even => DecoratedGraph::even(v_ext, v_int, edges),
    }
}

/// Two crossing chords `(1,3), (2,4)` on four circle vertices.
pub fn crossing_chords(parity: Parity) -> DecoratedGraph {
    build(parity, 4, 0, &[(1, 3), (2, 4)])
}

/// One internal vertex joined to three circle vertices.
pub fn tripod(parity: Parity) -> DecoratedGraph {
    build(parity, 3, 1, &[(1, 4), (2, 4), (3, 4)])
}

/// `(1/4) D - (1/3) T` as printed, in either parity.
pub fn order_two_combination(parity: Parity) -> Result<GraphVector> {
    order_two_with(parity, rat(1, 4), rat(-1, 3))
}

pub fn order_two_with(parity: Parity, d: Rational, t: Rational) -> Result<GraphVector> {
    GraphVector::from_terms(parity, [(d, &crossing_chords(parity)), (t, &tripod(parity))])
}

type Pattern = (usize, usize, &'static [(usize, usize)]);

const ODD_THETA: [Pattern; 6] = [
    (4, 2, &[(1, 5), (2, 6), (3, 6), (4, 5), (5, 6)]),
    (6, 0, &[(1, 4), (2, 5), (3, 6)]),
    (3, 3, &[(1, 4), (2, 6), (3, 5), (6, 4), (6, 5), (5, 4)]),
    (5, 1, &[(1, 6), (2, 5), (3, 6), (4, 6)]),
    (6, 0, &[(1, 4), (2, 6), (3, 5)]),
    (2, 4, &[(1, 3), (2, 5), (5, 4), (5, 6), (6, 4), (6, 3), (4, 3)]),
];

const EVEN_THETA: [Pattern; 6] = [
    (4, 2, &[(1, 5), (2, 6), (3, 6), (4, 5), (5, 6)]),
    (4, 2, &[(1, 5), (2, 6), (3, 5), (4, 6), (5, 6)]),
    (6, 0, &[(1, 5), (2, 4), (3, 6)]),
    (5, 1, &[(1, 6), (2, 5), (3, 6), (4, 6)]),
    (3, 3, &[(1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (6, 4)]),
    (2, 4, &[(1, 3), (2, 4), (3, 5), (3, 6), (4, 6), (4, 5), (5, 6)]),
];

/// The six order-3 graphs entering the printed combination, in order.
pub fn order_three_graphs(parity: Parity) -> Vec<DecoratedGraph> {
    let table = match parity {
        Parity::Odd => &ODD_THETA,
        Parity::Even => &EVEN_THETA,
    };
    table.iter().map(|&(ve, vi, edges)| build(parity, ve, vi, edges)).collect()
}

/// Printed coefficients of the order-3 combination.
pub fn order_three_coefficients(parity: Parity) -> [Rational; 6] {
    match parity {
        Parity::Odd => [rat(1, 2), rat(1, 3), rat(1, 3), rat(-1, 1), rat(-1, 2), rat(1, 2)],
        Parity::Even => [rat(1, 2), rat(-1, 2), rat(-1, 2), rat(1, 1), rat(1, 1), rat(-3, 2)],
    }
}

pub fn order_three_combination(parity: Parity) -> Result<GraphVector> {
    order_three_with(parity, &order_three_coefficients(parity))
}

pub fn order_three_with(parity: Parity, coefficients: &[Rational; 6]) -> Result<GraphVector> {
    let graphs = order_three_graphs(parity);
    GraphVector::from_terms(parity, coefficients.iter().cloned().zip(graphs.iter()))
}
