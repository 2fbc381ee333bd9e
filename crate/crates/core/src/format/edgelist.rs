use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list text format: a first line `n <count>`, then one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing `n <count>` header".into() })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count.parse::<usize>().map_err(|e| Error::Parse { line, message: e.to_string() })?,
        _ => return Err(Error::Parse { line, message: format!("expected `n <count>`, found `{header}`") }),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<_> = l.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(Error::Parse { line, message: format!("expected `u v`, found `{l}`") });
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse { line, message: e.to_string() });
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge-list text format read by [`from_edge_list_text`].
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
