//! Graphviz export: the circle as a cycle of bold arcs, edges dashed,
//! internal vertices filled.

use std::fmt::Write;

use crate::graph::{DecoratedGraph, Parity};

pub fn to_dot(g: &DecoratedGraph, name: &str) -> String {
    let mut s = String::new();
    let kind = if g.parity() == Parity::Odd { "digraph" } else { "graph" };
    let link = if g.parity() == Parity::Odd { "->" } else { "--" };
    writeln!(s, "{kind} \"{}\" {{", name.replace('"', "'")).unwrap();
    writeln!(s, "  layout=circo;").unwrap();
    writeln!(s, "  label=\"{g}\";").unwrap();
    for v in 0..g.v_ext() {
        let cross = if g.cross_at(v).is_some() { ", shape=doublecircle" } else { "" };
        writeln!(s, "  e{} [label=\"{}\", shape=circle{cross}];", v + 1, v + 1).unwrap();
    }
    for i in 0..g.v_int() {
        let label = if g.parity() == Parity::Odd { (g.v_ext() + i + 1).to_string() } else { String::new() };
        writeln!(s, "  i{} [label=\"{label}\", shape=circle, style=filled, fillcolor=black, fontcolor=white];", i + 1)
            .unwrap();
    }
    let node = |v: usize| {
        if v < g.v_ext() {
            format!("e{}", v + 1)
        } else {
            format!("i{}", v - g.v_ext() + 1)
        }
    };
    // a one-vertex circle is drawn as a bold self-arc
    for v in 0..g.v_ext() {
        let w = g.successor(v);
        let dir = if g.parity() == Parity::Odd { "" } else { ", dir=forward" };
        writeln!(s, "  {} {link} {} [style=bold, penwidth=3{dir}];", node(v), node(w)).unwrap();
    }
    for (idx, e) in g.edges().iter().enumerate() {
        let mut attrs = String::from("style=dashed");
        if g.parity() == Parity::Even {
            write!(attrs, ", label=\"{}\"", idx + 1).unwrap();
        }
        if let Some(d) = e.small_loop {
            write!(attrs, ", label=\"{:?}/{:?}\"", d.half_edge_order, d.arrow).unwrap();
        }
        writeln!(s, "  {} {link} {} [{attrs}];", node(e.tail), node(e.head)).unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tripod_dot_shape() {
        let g = DecoratedGraph::odd(3, 1, &[(1, 4), (2, 4), (3, 4)]);
        let dot = to_dot(&g, "tripod");
        assert!(dot.starts_with("digraph \"tripod\" {"));
        assert_eq!(dot.matches("style=bold").count(), 3);
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert_eq!(dot.matches("style=filled").count(), 1);
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn even_edges_are_labelled() {
        let g = DecoratedGraph::even(4, 0, &[(1, 3), (2, 4)]);
        let dot = to_dot(&g, "d");
        assert!(dot.starts_with("graph"));
        assert!(dot.contains("e2 -- e4 [style=dashed, label=\"2\"]"));
    }
}
