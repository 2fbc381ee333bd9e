use std::fs;

use globcoal::format::{from_edge_list_text, from_graph6};
use globcoal::{FamilySpec, Graph, Partition};

use crate::Failure;

/// A graph together with the family it came from, if any.
pub struct Input {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
    pub source: String,
}

/// `file:<path>` (edge list), `g6:<string>` or `<family>:<params>`.
pub fn graph(source: &str) -> Result<Input, Failure> {
    if let Some(path) = source.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
        let graph = from_edge_list_text(&text)?;
        return Ok(Input { graph, family: None, source: source.to_string() });
    }
    if let Some(code) = source.strip_prefix("g6:") {
        let graph = from_graph6(code)?;
        return Ok(Input { graph, family: None, source: source.to_string() });
    }
    family(source)
}

pub fn family(spec: &str) -> Result<Input, Failure> {
    let spec: FamilySpec = spec.parse()?;
    let graph = globcoal::generate(&spec)?;
    let source = spec.to_string();
    Ok(Input { graph, family: Some(spec), source })
}

/// Inline JSON list of lists, `file:<path>` holding the same, or the
/// literal `singletons`.
pub fn partition(text: &str, n: usize) -> Result<Partition, Failure> {
    if text == "singletons" {
        return Ok(Partition::singletons(n));
    }
    let body = match text.strip_prefix("file:") {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::io(path, e))?,
        None => text.to_string(),
    };
    let lists: Vec<Vec<usize>> = serde_json::from_str(body.trim())
        .map_err(|e| Failure::new("malformed_partition", format!("partition is not a JSON list of lists: {e}")))?;
    Ok(Partition::from_lists(n, &lists)?)
}
