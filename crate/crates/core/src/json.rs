//! JSON schema for graphs, vectors and reports.
//!
//! Vertex references are 1-based: `{"ext": i}` for the i-th circle vertex,
//! `{"int": j}` for the j-th internal vertex. Odd edges are `"oriented"`
//! from `from` to `to`; even edges carry their `"label"`. Coefficients are
//! strings `"p/q"` (or `"p"`) so no precision is lost.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{Arrow, DecoratedGraph, Edge, HalfEdgeOrder, Parity, SmallLoopDecoration};
use crate::homology::CohomologyReport;
use crate::vector::{GraphVector, Rational};
use crate::weights::ChordDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexJson {
    #[serde(rename = "ext")]
    Ext(usize),
    #[serde(rename = "int")]
    Int(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: VertexJson,
    pub to: VertexJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oriented: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallLoopJson {
    pub vertex: usize,
    pub half_edge_order: String,
    pub arrow: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossJson {
    pub vertex: usize,
    pub label: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub parity: Parity,
    pub v_ext: usize,
    pub v_int: usize,
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub small_loops: Vec<SmallLoopJson>,
    #[serde(default)]
    pub crosses: Vec<CrossJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub graph: GraphJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub parity: Parity,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub version: String,
    pub parity: Parity,
    pub differential: String,
    pub order: i64,
    pub degree: i64,
    pub basis: Vec<GraphJson>,
    pub basis_labels: Vec<String>,
    pub dim_kernel: usize,
    pub rank_previous: usize,
    pub dim_h: usize,
    pub representatives: Vec<VectorJson>,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

impl From<&DecoratedGraph> for GraphJson {
    fn from(g: &DecoratedGraph) -> Self {
        let vref = |v: usize| {
            if v < g.v_ext() {
                VertexJson::Ext(v + 1)
            } else {
                VertexJson::Int(v - g.v_ext() + 1)
            }
        };
        let odd = g.parity() == Parity::Odd;
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| EdgeJson {
                from: vref(e.tail),
                to: vref(e.head),
                label: (!odd).then_some(i + 1),
                oriented: odd.then_some(true),
            })
            .collect();
        let small_loops = g
            .edges()
            .iter()
            .filter_map(|e| e.small_loop.map(|d| (e.tail, d)))
            .map(|(v, d)| SmallLoopJson {
                vertex: v + 1,
                half_edge_order: match d.half_edge_order {
                    HalfEdgeOrder::WithCircle => "with_circle",
                    HalfEdgeOrder::AgainstCircle => "against_circle",
                }
                .to_string(),
                arrow: match d.arrow {
                    Arrow::WithOrder => "with_order",
                    Arrow::AgainstOrder => "against_order",
                }
                .to_string(),
            })
            .collect();
        let crosses =
            g.crosses().iter().enumerate().map(|(a, &v)| CrossJson { vertex: v + 1, label: a + 1 }).collect();
        GraphJson { parity: g.parity(), v_ext: g.v_ext(), v_int: g.v_int(), edges, small_loops, crosses }
    }
}

impl TryFrom<&GraphJson> for DecoratedGraph {
    type Error = GraphError;

    fn try_from(j: &GraphJson) -> Result<Self> {
        let schema = |m: String| GraphError::Schema(m);
        let vid = |r: VertexJson| match r {
            VertexJson::Ext(i) if (1..=j.v_ext).contains(&i) => Ok(i - 1),
            VertexJson::Int(i) if (1..=j.v_int).contains(&i) => Ok(j.v_ext + i - 1),
            other => Err(schema(format!("vertex {other:?} out of range"))),
        };
        let mut edges: Vec<(usize, Edge)> = Vec::with_capacity(j.edges.len());
        for (pos, e) in j.edges.iter().enumerate() {
            let slot = match j.parity {
                Parity::Odd => {
                    if e.label.is_some() || e.oriented == Some(false) {
                        return Err(schema("odd edges are oriented and unlabelled".into()));
                    }
                    pos
                }
                Parity::Even => {
                    if e.oriented == Some(true) {
                        return Err(schema("even edges are not oriented".into()));
                    }
                    e.label.map_or(Ok(pos), |l| {
                        if (1..=j.edges.len()).contains(&l) {
                            Ok(l - 1)
                        } else {
                            Err(schema(format!("edge label {l} out of range")))
                        }
                    })?
                }
            };
            edges.push((slot, Edge::new(vid(e.from)?, vid(e.to)?)));
        }
        edges.sort_by_key(|&(slot, _)| slot);
        if edges.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(schema("repeated edge label".into()));
        }
        let mut edges: Vec<Edge> = edges.into_iter().map(|(_, e)| e).collect();

        let mut used = vec![false; edges.len()];
        for sl in &j.small_loops {
            let v = sl.vertex.checked_sub(1).filter(|&v| v < j.v_ext);
            let v = v.ok_or_else(|| schema(format!("small loop at vertex {}", sl.vertex)))?;
            let idx = (0..edges.len())
                .find(|&i| !used[i] && edges[i].tail == v && edges[i].head == v)
                .ok_or_else(|| schema(format!("no small loop edge at vertex {}", sl.vertex)))?;
            used[idx] = true;
            let half_edge_order = match sl.half_edge_order.as_str() {
                "with_circle" => HalfEdgeOrder::WithCircle,
                "against_circle" => HalfEdgeOrder::AgainstCircle,
                other => return Err(schema(format!("half_edge_order `{other}`"))),
            };
            let arrow = match sl.arrow.as_str() {
                "with_order" => Arrow::WithOrder,
                "against_order" => Arrow::AgainstOrder,
                other => return Err(schema(format!("arrow `{other}`"))),
            };
            edges[idx].small_loop = Some(SmallLoopDecoration { half_edge_order, arrow });
        }

        let mut crosses: Vec<(usize, usize)> = Vec::with_capacity(j.crosses.len());
        for c in &j.crosses {
            if c.vertex == 0 || c.label == 0 || c.label > j.crosses.len() {
                return Err(schema(format!("cross {} at vertex {}", c.label, c.vertex)));
            }
            crosses.push((c.label, c.vertex - 1));
        }
        crosses.sort_unstable();
        if crosses.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(schema("repeated cross label".into()));
        }
        Ok(DecoratedGraph::new(
            j.parity,
            j.v_ext,
            j.v_int,
            edges,
            crosses.into_iter().map(|(_, v)| v).collect(),
        ))
    }
}

pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| GraphError::Schema(format!("coefficient `{s}`: {e}")))
}

impl From<&GraphVector> for VectorJson {
    fn from(v: &GraphVector) -> Self {
        VectorJson {
            parity: v.parity(),
            terms: v
                .iter()
                .map(|(g, c)| TermJson { coefficient: rational_to_string(c), graph: GraphJson::from(g) })
                .collect(),
        }
    }
}

impl TryFrom<&VectorJson> for GraphVector {
    type Error = GraphError;

    fn try_from(j: &VectorJson) -> Result<Self> {
        let mut out = GraphVector::zero(j.parity);
        for t in &j.terms {
            let g = DecoratedGraph::try_from(&t.graph)?;
            out.add_graph(&parse_rational(&t.coefficient)?, &g)?;
        }
        Ok(out)
    }
}

impl From<&CohomologyReport> for CohomologyJson {
    fn from(r: &CohomologyReport) -> Self {
        CohomologyJson {
            version: VERSION.to_string(),
            parity: r.parity,
            differential: r.differential.as_str().to_string(),
            order: r.k,
            degree: r.m,
            basis: r.basis.iter().map(GraphJson::from).collect(),
            basis_labels: r.basis.iter().map(ToString::to_string).collect(),
            dim_kernel: r.dim_kernel,
            rank_previous: r.rank_previous,
            dim_h: r.dim_h,
            representatives: r.representatives.iter().map(VectorJson::from).collect(),
        }
    }
}

pub fn graph_to_json(g: &DecoratedGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}

pub fn graph_from_json(s: &str) -> Result<DecoratedGraph> {
    DecoratedGraph::try_from(&serde_json::from_str::<GraphJson>(s)?)
}

/// A single graph object or an array of them.
pub fn graphs_from_json(s: &str) -> Result<Vec<DecoratedGraph>> {
    let value: serde_json::Value = serde_json::from_str(s)?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| DecoratedGraph::try_from(&serde_json::from_value::<GraphJson>(v)?))
        .collect()
}

pub fn vector_to_json(v: &GraphVector) -> String {
    serde_json::to_string(&VectorJson::from(v)).expect("plain data serializes")
}

pub fn vector_from_json(s: &str) -> Result<GraphVector> {
    GraphVector::try_from(&serde_json::from_str::<VectorJson>(s)?)
}

/// Chord diagram as 1-based endpoint pairs on `2k` circle points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDiagramJson {
    pub chords: Vec<(usize, usize)>,
}

impl From<&ChordDiagram> for ChordDiagramJson {
    fn from(d: &ChordDiagram) -> Self {
        ChordDiagramJson { chords: d.chords().into_iter().map(|(a, b)| (a + 1, b + 1)).collect() }
    }
}

impl TryFrom<&ChordDiagramJson> for ChordDiagram {
    type Error = GraphError;

    fn try_from(j: &ChordDiagramJson) -> Result<Self> {
        if j.chords.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(GraphError::Schema("chord endpoints are 1-based".into()));
        }
        ChordDiagram::new(&j.chords.iter().map(|&(a, b)| (a - 1, b - 1)).collect::<Vec<_>>())
    }
}

/// A `{"chords": ..}` object or a decorated graph that is a chord diagram.
pub fn chord_diagram_from_json(s: &str) -> Result<ChordDiagram> {
    let value: serde_json::Value = serde_json::from_str(s)?;
    if value.get("chords").is_some() {
        ChordDiagram::try_from(&serde_json::from_value::<ChordDiagramJson>(value)?)
    } else {
        ChordDiagram::from_graph(&DecoratedGraph::try_from(&serde_json::from_value::<GraphJson>(value)?)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::rat;

    #[test]
    fn vertex_refs_are_tagged() {
        let g = DecoratedGraph::odd(3, 1, &[(1, 4), (2, 4), (3, 4)]);
        let s = graph_to_json(&g);
        assert!(s.contains(r#"{"from":{"ext":1},"to":{"int":1},"oriented":true}"#), "{s}");
    }

    #[test]
    fn even_labels_reorder_edges() {
        let s = r#"{"parity":"even","v_ext":4,"v_int":0,"edges":[
            {"from":{"ext":2},"to":{"ext":4},"label":2},
            {"from":{"ext":1},"to":{"ext":3},"label":1}]}"#;
        let g = graph_from_json(s).unwrap();
        assert_eq!(g, DecoratedGraph::even(4, 0, &[(1, 3), (2, 4)]));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(-3, 4)), "-3/4");
        assert_eq!(rational_to_string(&rat(6, 3)), "2");
        assert_eq!(parse_rational(" -3/4").unwrap(), rat(-3, 4));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn schema_errors() {
        assert!(graph_from_json(r#"{"parity":"odd","v_ext":1,"v_int":0,"edges":[{"from":{"ext":2},"to":{"ext":1}}]}"#).is_err());
        assert!(graph_from_json(r#"{"parity":"odd","v_ext":1,"v_int":0,"edges":[],"small_loops":[{"vertex":1,"half_edge_order":"with_circle","arrow":"with_order"}]}"#).is_err());
        assert!(graph_from_json(r#"{"parity":"even","v_ext":2,"v_int":0,"edges":[{"from":{"ext":1},"to":{"ext":2},"label":3}]}"#).is_err());
    }
}
