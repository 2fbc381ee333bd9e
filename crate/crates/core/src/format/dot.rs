use std::fmt::Write;

use crate::graph::Graph;

/// Rendering knobs for [`to_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotOptions<'a> {
    pub name: Option<&'a str>,
    /// Per-vertex label overriding the graph's own labels.
    pub vertex_labels: Option<&'a [String]>,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Emits an undirected DOT graph. Vertices are listed in index order, then
/// edges in row-major order, so output is deterministic.
pub fn to_dot(g: &Graph, opts: &DotOptions<'_>) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape(opts.name.unwrap_or("G"))).unwrap();
    let labels = opts.vertex_labels.or(g.labels());
    for v in 0..g.n() {
        match labels {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", escape(&l[v])).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
