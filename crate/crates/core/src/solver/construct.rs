use crate::domination::{global_domatic, minimal_gds_within, CoverTables};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Lowest vertex alone, the rest together.
fn split(s: VertexSet) -> (VertexSet, VertexSet) {
    let first = s.first().expect("non-empty class");
    let head = VertexSet::singleton(s.universe(), first);
    (head, s - head)
}

/// A gc-partition with at least `2·d_g(G)` classes, built from a maximum
/// global domatic partition.
///
/// Each global dominating class is shrunk to a minimal one and cut in two;
/// the cut halves are partners of each other. Vertices shaved off the first
/// `k - 1` classes go to the last one, whose leftover set `A` either joins
/// the partition as its own class (if it has a partner) or is merged into
/// the second half of the last class.
pub fn construct_gc_from_domatic(g: &Graph) -> Result<Partition> {
    let n = g.n();
    if n == 1 {
        return Err(Error::TrivialGraph);
    }
    let domatic = global_domatic(g);
    let mut classes: Vec<VertexSet> = domatic.classes.classes().to_vec();
    let k = classes.len();
    let mut out = Vec::with_capacity(2 * k + 1);
    for i in 0..k - 1 {
        let trimmed = minimal_gds_within(g, classes[i])?;
        let surplus = classes[i] - trimmed;
        classes[k - 1] = classes[k - 1] | surplus;
        let (a, b) = split(trimmed);
        out.push(a);
        out.push(b);
    }
    let last = classes[k - 1];
    let trimmed = minimal_gds_within(g, last)?;
    let (a, b) = split(trimmed);
    let rest = last - trimmed;
    if rest.is_empty() {
        out.push(a);
        out.push(b);
        return Partition::new(n, out);
    }
    let t = CoverTables::new(g);
    out.push(a);
    out.push(b);
    let r = t.cover(rest.bits());
    let has_partner = out.iter().any(|c| {
        let (cg, cc) = t.cover(c.bits());
        (cg | r.0) == t.full && (cc | r.1) == t.full
    });
    if has_partner {
        out.push(rest);
    } else {
        let b = out.pop().expect("second half");
        out.push(b | rest);
    }
    Partition::new(n, out)
}

/// `{N(a)}` together with every other vertex as a singleton. The result is
/// not checked; callers run it through the verifier.
pub fn construct_center_partition(g: &Graph, a: usize) -> Result<Partition> {
    let n = g.n();
    if a >= n {
        return Err(Error::VertexOutOfRange { vertex: a, n });
    }
    let na = g.neighbors(a);
    let mut classes = Vec::with_capacity(n);
    if !na.is_empty() {
        classes.push(na);
    }
    classes.extend((0..n).filter(|&v| !na.contains(v)).map(|v| VertexSet::singleton(n, v)));
    Partition::new(n, classes)
}
