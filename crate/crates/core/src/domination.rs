//! Domination predicates and invariants.
//!
//! A set `S` dominates the complement graph exactly when every vertex
//! outside `S` has a non-neighbor inside `S`, so global domination is
//! decided from the adjacency rows of `G` alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Per-vertex coverage rows for `G` and its complement.
///
/// `closed[v]` is `N[v]` in `G`; `co_closed[v]` is `N[v]` in the
/// complement. A set dominates a graph iff the union of its rows is full,
/// which makes both predicates a handful of word operations and lets search
/// kernels maintain them incrementally.
#[derive(Clone, Debug)]
pub struct CoverTables {
    pub full: u64,
    pub closed: Vec<u64>,
    pub co_closed: Vec<u64>,
}

impl CoverTables {
    pub fn new(g: &Graph) -> Self {
        let full = g.vertices().bits();
        let closed: Vec<u64> = (0..g.n()).map(|v| g.closed_neighbors(v).bits()).collect();
        let co_closed = (0..g.n()).map(|v| full & !g.rows()[v]).collect();
        CoverTables { full, closed, co_closed }
    }

    #[inline]
    pub fn cover(&self, s: u64) -> (u64, u64) {
        let (mut a, mut b) = (0, 0);
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            a |= self.closed[v];
            b |= self.co_closed[v];
            bits &= bits - 1;
        }
        (a, b)
    }

    #[inline]
    pub fn is_dominating(&self, s: u64) -> bool {
        self.cover(s).0 == self.full
    }

    #[inline]
    pub fn is_global(&self, s: u64) -> bool {
        let (a, b) = self.cover(s);
        a == self.full && b == self.full
    }
}

/// Outcome of a global domination test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub dominates_g: bool,
    pub dominates_complement: bool,
    pub uncovered_g: VertexSet,
    pub uncovered_complement: VertexSet,
}

impl DominationReport {
    pub fn is_global(&self) -> bool {
        self.dominates_g && self.dominates_complement
    }
}

/// A minimum-size set together with its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinimumSet {
    pub size: usize,
    pub witness: VertexSet,
}

/// A partition into global dominating sets of maximum size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DomaticWitness {
    pub k: usize,
    pub classes: Partition,
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    s.iter().fold(0u64, |acc, v| acc | g.closed_neighbors(v).bits()) == g.vertices().bits()
}

pub fn is_global_dominating(g: &Graph, s: VertexSet) -> DominationReport {
    let covered = s.iter().fold(VertexSet::empty(g.n()), |acc, v| acc | g.closed_neighbors(v));
    let uncovered_g = covered.complement();
    // v is missed in the complement iff all of S sits inside N_G(v)
    let uncovered_complement =
        VertexSet::from_vertices(g.n(), s.complement().iter().filter(|&v| s.is_subset(g.neighbors(v))))
            .expect("subset of the universe");
    DominationReport {
        dominates_g: uncovered_g.is_empty(),
        dominates_complement: uncovered_complement.is_empty(),
        uncovered_g,
        uncovered_complement,
    }
}

/// Every vertex outside `s` has exactly one neighbor in `s`.
pub fn is_perfect_dominating(g: &Graph, s: VertexSet) -> bool {
    s.complement().iter().all(|v| (g.neighbors(v) & s).len() == 1)
}

/// Every vertex outside `s` has at most one neighbor in `s`.
pub fn at_most_one_neighbor(g: &Graph, s: VertexSet) -> bool {
    s.complement().iter().all(|v| (g.neighbors(v) & s).len() <= 1)
}

/// Finds a set of at most `limit` vertices covering `G` (and the complement
/// when `global`), branching on the closed neighborhood of the first
/// uncovered vertex.
fn cover_search(t: &CoverTables, global: bool, chosen: u64, cov: (u64, u64), limit: usize) -> Option<u64> {
    let missing_g = t.full & !cov.0;
    let missing_c = if global { t.full & !cov.1 } else { 0 };
    if missing_g == 0 && missing_c == 0 {
        return Some(chosen);
    }
    if limit == 0 {
        return None;
    }
    let candidates = if missing_g != 0 {
        t.closed[missing_g.trailing_zeros() as usize]
    } else {
        t.co_closed[missing_c.trailing_zeros() as usize]
    };
    let mut bits = candidates;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let next = (cov.0 | t.closed[w], cov.1 | t.co_closed[w]);
        if let Some(found) = cover_search(t, global, chosen | 1 << w, next, limit - 1) {
            return Some(found);
        }
    }
    None
}

fn minimum_cover(g: &Graph, global: bool) -> MinimumSet {
    let t = CoverTables::new(g);
    for k in 1..=g.n() {
        if let Some(s) = cover_search(&t, global, 0, (0, 0), k) {
            let witness = VertexSet::from_bits(g.n(), s).expect("in range");
            return MinimumSet { size: witness.len(), witness };
        }
    }
    unreachable!("the full vertex set dominates both G and its complement")
}

/// Domination number `γ(G)` with a witness.
pub fn gamma(g: &Graph) -> MinimumSet {
    minimum_cover(g, false)
}

/// Global domination number `γ_g(G)` with a witness.
pub fn gamma_g(g: &Graph) -> MinimumSet {
    minimum_cover(g, true)
}

/// Shrinks a global dominating set to an inclusion-minimal one by trying
/// to drop each vertex once, in ascending order.
///
/// One pass suffices: supersets of global dominating sets are global
/// dominating, so a vertex that could not be dropped earlier still cannot
/// be dropped from the smaller final set.
pub fn minimal_gds_within(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    let t = CoverTables::new(g);
    if !t.is_global(s.bits()) {
        return Err(Error::NotGlobalDominating);
    }
    let mut cur = s.bits();
    for v in s {
        let trial = cur & !(1 << v);
        if t.is_global(trial) {
            cur = trial;
        }
    }
    Ok(VertexSet::from_bits_unchecked(g.n(), cur))
}

struct DomaticSearch<'a> {
    t: &'a CoverTables,
    n: usize,
    k: usize,
    /// coverage of vertices `v..n`, per `v`
    suffix: Vec<(u64, u64)>,
    classes: Vec<u64>,
    cover: Vec<(u64, u64)>,
}

impl DomaticSearch<'_> {
    fn done(&self, c: usize) -> bool {
        self.cover[c].0 == self.t.full && self.cover[c].1 == self.t.full
    }

    fn feasible(&self, v: usize) -> bool {
        let (sg, sc) = self.suffix[v];
        if self.classes.len() < self.k && (sg != self.t.full || sc != self.t.full) {
            return false;
        }
        (0..self.classes.len())
            .all(|c| self.done(c) || ((self.cover[c].0 | sg) == self.t.full && (self.cover[c].1 | sc) == self.t.full))
    }

    fn run(&mut self, v: usize) -> bool {
        if self.classes.len() == self.k && (0..self.k).all(|c| self.done(c)) {
            return true;
        }
        if v == self.n || !self.feasible(v) {
            return false;
        }
        for c in 0..self.classes.len() {
            if self.done(c) {
                continue;
            }
            let saved = (self.classes[c], self.cover[c]);
            self.classes[c] |= 1 << v;
            self.cover[c] = (self.cover[c].0 | self.t.closed[v], self.cover[c].1 | self.t.co_closed[v]);
            if self.run(v + 1) {
                return true;
            }
            (self.classes[c], self.cover[c]) = saved;
        }
        if self.classes.len() < self.k {
            self.classes.push(1 << v);
            self.cover.push((self.t.closed[v], self.t.co_closed[v]));
            if self.run(v + 1) {
                return true;
            }
            self.classes.pop();
            self.cover.pop();
        }
        // leave v unassigned
        self.run(v + 1)
    }
}

/// Global domatic number `d_g(G)` with a witness partition.
///
/// Searches for `k` pairwise disjoint global dominating sets, starting at
/// `k = ⌊n / γ_g⌋`; unassigned vertices are added to the last class.
pub fn global_domatic(g: &Graph) -> DomaticWitness {
    let t = CoverTables::new(g);
    let n = g.n();
    let mut suffix = vec![(0u64, 0u64); n + 1];
    for v in (0..n).rev() {
        suffix[v] = (suffix[v + 1].0 | t.closed[v], suffix[v + 1].1 | t.co_closed[v]);
    }
    let upper = n / gamma_g(g).size;
    for k in (1..=upper).rev() {
        let mut search = DomaticSearch { t: &t, n, k, suffix: suffix.clone(), classes: Vec::new(), cover: Vec::new() };
        if search.run(0) {
            let mut classes: Vec<VertexSet> =
                search.classes.iter().map(|&b| VertexSet::from_bits_unchecked(n, b)).collect();
            let used = classes.iter().fold(VertexSet::empty(n), |acc, c| acc | *c);
            let last = classes.last_mut().expect("k >= 1");
            *last = *last | used.complement();
            let classes = Partition::new(n, classes).expect("disjoint cover");
            return DomaticWitness { k, classes };
        }
    }
    unreachable!("{{V}} is always a global domatic partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &edges)
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &edges)
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        g(n, &edges)
    }

    fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        g(rim + 1, &edges)
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn plain_domination() {
        let p5 = path(5);
        assert!(is_dominating(&p5, p5.vertices()));
        assert!(!is_dominating(&p5, VertexSet::empty(5)));
        assert!(is_dominating(&p5, set(5, &[1, 3])));
    }

    #[test]
    fn global_domination_reports() {
        let k3 = complete(3);
        let r = is_global_dominating(&k3, set(3, &[0, 1]));
        assert!(r.dominates_g && !r.dominates_complement);
        assert_eq!(r.uncovered_complement.to_vec(), vec![2]);
        assert!(is_global_dominating(&complete(5), VertexSet::full(5)).is_global());
        assert!(is_global_dominating(&path(5), set(5, &[0, 3])).is_global());
        let empty = is_global_dominating(&path(3), VertexSet::empty(3));
        assert!(!empty.dominates_g && !empty.dominates_complement);
    }

    #[test]
    fn global_domination_numbers() {
        assert_eq!(gamma_g(&wheel(3)).size, 4);
        assert_eq!(gamma_g(&wheel(6)).size, 3);
        assert_eq!(gamma_g(&cycle(4)).size, 2);
        assert_eq!(gamma_g(&path(5)).size, 2);
        assert_eq!(gamma(&path(5)).size, 2);
        assert_eq!(gamma(&wheel(6)).size, 1);
        let w = gamma_g(&wheel(6)).witness;
        assert!(w.contains(0), "the hub is in every γ_g-set of a wheel");
    }

    #[test]
    fn perfect_domination() {
        assert!(!is_perfect_dominating(&cycle(4), set(4, &[0, 2])));
        assert!(is_perfect_dominating(&path(4), set(4, &[0, 3])));
        assert!(is_perfect_dominating(&cycle(5), VertexSet::full(5)));
        assert!(!at_most_one_neighbor(&complete(4), set(4, &[0, 1])));
        assert!(at_most_one_neighbor(&path(5), set(5, &[0])));
        assert!(at_most_one_neighbor(&cycle(6), set(6, &[0, 3])));
    }

    #[test]
    fn minimal_subsets() {
        let p5 = path(5);
        let m = minimal_gds_within(&p5, p5.vertices()).unwrap();
        assert!(is_global_dominating(&p5, m).is_global());
        assert!(m.len() >= 2);
        for v in m {
            assert!(!is_global_dominating(&p5, m.without(v)).is_global());
        }
        assert_eq!(minimal_gds_within(&p5, m).unwrap(), m);
        let k3 = complete(3);
        assert_eq!(minimal_gds_within(&k3, k3.vertices()).unwrap(), k3.vertices());
        assert_eq!(minimal_gds_within(&k3, set(3, &[0])), Err(Error::NotGlobalDominating));
    }

    #[test]
    fn global_domatic_numbers() {
        let w = global_domatic(&cycle(4));
        assert_eq!(w.k, 2);
        assert_eq!(w.classes.to_lists(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(global_domatic(&complete(5)).k, 1);
        assert_eq!(global_domatic(&path(4)).k, 2);
        let single = global_domatic(&Graph::from_edge_list(1, &[]).unwrap());
        assert_eq!((single.k, single.classes.len()), (1, 1));
    }
}
