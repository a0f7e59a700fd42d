use std::fmt::Write as _;

use diagram_core::{PlanarGraph, Presentation};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text for a realized diagram. The top path sits on the first
/// rank; each cell is a cluster holding a labelled box and the vertices it
/// creates.
pub fn render(p: &Presentation, g: &PlanarGraph) -> String {
    let mut s = String::from("digraph diagram {\n  rankdir=TB;\n  node [shape=point];\n");
    let top: Vec<String> = g.top_vertices.iter().map(|v| format!("v{}", v.0)).collect();
    let _ = writeln!(s, "  {{ rank=source; {}; }}", top.join("; "));
    for (i, cell) in g.cells.iter().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_c{i} {{");
        let _ = writeln!(s, "    label={};", quote(&format!("c{i}")));
        let _ = writeln!(s, "    c{i} [shape=box, label={}];", quote(&format!("r{} {}", cell.rel, cell.orient)));
        for e in &cell.bottom[..cell.bottom.len() - 1] {
            let _ = writeln!(s, "    v{};", g.edges[e.0].to.0);
        }
        s.push_str("  }\n");
        let _ = writeln!(s, "  v{} -> c{i} [style=invis];", cell.left.0);
        let _ = writeln!(s, "  c{i} -> v{} [style=invis];", cell.right.0);
    }
    for (i, e) in g.edges.iter().enumerate() {
        let _ = writeln!(s, "  v{} -> v{} [label={}, id=e{i}];", e.from.0, e.to.0, quote(p.name(e.letter)));
    }
    s.push_str("}\n");
    s
}
