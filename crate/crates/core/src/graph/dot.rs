use std::fmt::Write;

use super::{Edge, FuncHandle, Manager, Node, NodeId};

fn node_name(id: NodeId) -> String {
    format!("n{}", id.index())
}

fn edge_label(edge: &Edge) -> String {
    if edge.word().is_empty() {
        String::new()
    } else {
        edge.word().to_string()
    }
}

impl Manager {
    /// Graphviz rendering: diamonds for inner nodes, boxes for terminals,
    /// dashed `x0 = 0` edges, solid `x0 = 1` edges, words as edge labels.
    pub fn dot(&self, h: &FuncHandle) -> String {
        let mut out = String::new();
        writeln!(out, "digraph lambdd {{").unwrap();
        writeln!(out, "  root [shape=point];").unwrap();
        let nodes = self.reachable_nodes(h.edge());
        for &id in &nodes {
            let (shape, label) = match self.node(id) {
                Node::Zero => ("box", "0"),
                Node::One => ("box", "1"),
                Node::Diamond { .. } => ("diamond", ""),
            };
            writeln!(out, "  {} [shape={shape}, label=\"{label}\"];", node_name(id)).unwrap();
        }
        writeln!(
            out,
            "  root -> {} [label=\"{}\"];",
            node_name(h.edge().target()),
            edge_label(h.edge())
        )
        .unwrap();
        for &id in &nodes {
            if let Node::Diamond { lo, hi } = self.node(id) {
                for (e, style) in [(lo, "dashed"), (hi, "solid")] {
                    writeln!(
                        out,
                        "  {} -> {} [style={style}, label=\"{}\"];",
                        node_name(id),
                        node_name(e.target()),
                        edge_label(e)
                    )
                    .unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
