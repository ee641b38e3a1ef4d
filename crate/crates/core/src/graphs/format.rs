use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Digraph, GraphError};

#[derive(Serialize, Deserialize)]
struct AdjacencyJson {
    order: usize,
    arcs: Vec<Vec<usize>>,
}

pub(super) fn to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (t, h) in g.arcs() {
        writeln!(out, "  {t} -> {h};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub(super) fn to_json(g: &Digraph) -> String {
    let doc = AdjacencyJson { order: g.order(), arcs: g.to_out_lists() };
    serde_json::to_string(&doc).expect("adjacency lists always serialize")
}

pub(super) fn from_json(text: &str) -> Result<Digraph, GraphError> {
    let doc: AdjacencyJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    if doc.arcs.len() != doc.order {
        return Err(GraphError::Json(format!(
            "order is {} but {} out-lists were given",
            doc.order,
            doc.arcs.len()
        )));
    }
    Digraph::from_out_lists(doc.arcs)
}
