//! Exact maximum partitions by branch-and-bound.
//!
//! Vertices `0..n` are assigned to classes as a restricted growth string:
//! vertex `v` joins an existing class or opens class `k` only once classes
//! `0..k` exist, so every set partition is visited exactly once. Branches
//! are explored in lexicographic order of the string, and an incumbent is
//! replaced only by a strictly larger partition; the witness returned is
//! therefore the lexicographically least among the maximum ones.
//!
//! Two prunes keep the tree small:
//!
//! * class count: `k + (n - v)` classes is the most a branch can reach;
//! * monotonicity: supersets of (global) dominating sets stay (global)
//!   dominating, so a class that becomes one is dead. For `c` and `prc` a
//!   dominating singleton is allowed but may not grow.
//!
//! Partner conditions are checked only on complete assignments because a
//! partial class may still gain the vertices its partner is missing.

mod construct;

pub use construct::{construct_center_partition, construct_gc_from_domatic};

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coalition::Kind;
use crate::domination::CoverTables;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Node limit used when the caller does not set one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Search controls. Results do not depend on `threads`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: u64,
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub kind: Kind,
    pub value: usize,
    pub witness: Partition,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
    /// `false` when the budget ran out; `value` is then only a lower bound.
    pub exact: bool,
}

/// Number of leading vertices fixed before the search fans out.
const SPLIT_DEPTH: usize = 5;

#[derive(Clone)]
struct Incumbent {
    value: usize,
    labels: Vec<u8>,
}

struct Kernel<'a> {
    n: usize,
    kind: Kind,
    full: u64,
    t: &'a CoverTables,
    rows: &'a [u64],
    classes: [u64; 64],
    cover: [(u64, u64); 64],
    labels: [u8; 64],
    k: usize,
    lower: usize,
    best: Option<Incumbent>,
    nodes: u64,
    budget: u64,
    spent: &'a AtomicU64,
    exhausted: bool,
}

impl<'a> Kernel<'a> {
    fn new(g: &'a Graph, t: &'a CoverTables, kind: Kind, lower: usize, budget: u64, spent: &'a AtomicU64) -> Self {
        Kernel {
            n: g.n(),
            kind,
            full: t.full,
            t,
            rows: g.rows(),
            classes: [0; 64],
            cover: [(0, 0); 64],
            labels: [0; 64],
            k: 0,
            lower,
            best: None,
            nodes: 0,
            budget,
            spent,
            exhausted: false,
        }
    }

    #[inline]
    fn threshold(&self) -> usize {
        self.best.as_ref().map_or(self.lower, |b| b.value + 1)
    }

    /// Whether class `c` may stay as it is.
    #[inline]
    fn class_alive(&self, c: usize) -> bool {
        let (g, co) = self.cover[c];
        match self.kind {
            Kind::Gc => !(g == self.full && co == self.full),
            Kind::C | Kind::Prc => g != self.full || self.classes[c].count_ones() == 1,
        }
    }

    #[inline]
    fn place(&mut self, v: usize, c: usize) {
        if c == self.k {
            self.classes[c] = 0;
            self.cover[c] = (0, 0);
            self.k += 1;
        }
        self.classes[c] |= 1 << v;
        self.cover[c].0 |= self.t.closed[v];
        self.cover[c].1 |= self.t.co_closed[v];
        self.labels[v] = c as u8;
    }

    #[inline]
    fn unplace(&mut self, v: usize, c: usize, saved: (u64, (u64, u64))) {
        if self.classes[c] == 1 << v {
            self.k -= 1;
        }
        self.classes[c] = saved.0;
        self.cover[c] = saved.1;
    }

    fn at_most_one(&self, s: u64) -> bool {
        let mut outside = self.full & !s;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if (self.rows[v] & s).count_ones() > 1 {
                return false;
            }
        }
        true
    }

    fn perfect(&self, s: u64) -> bool {
        let mut outside = self.full & !s;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if (self.rows[v] & s).count_ones() != 1 {
                return false;
            }
        }
        true
    }

    /// Full partner check on a complete assignment.
    fn valid(&self) -> bool {
        let k = self.k;
        match self.kind {
            Kind::Gc => (0..k).all(|i| {
                (0..k).any(|j| {
                    j != i
                        && (self.cover[i].0 | self.cover[j].0) == self.full
                        && (self.cover[i].1 | self.cover[j].1) == self.full
                })
            }),
            Kind::C => {
                let dominating = |c: usize| self.cover[c].0 == self.full;
                (0..k).all(|i| {
                    dominating(i)
                        || (0..k).any(|j| j != i && !dominating(j) && (self.cover[i].0 | self.cover[j].0) == self.full)
                })
            }
            Kind::Prc => {
                let dominating = |c: usize| self.cover[c].0 == self.full;
                let mut half = [false; 64];
                for (c, h) in half.iter_mut().enumerate().take(k) {
                    *h = !dominating(c) && self.at_most_one(self.classes[c]);
                }
                (0..k).all(|i| {
                    dominating(i)
                        || (half[i]
                            && (0..k).any(|j| j != i && half[j] && self.perfect(self.classes[i] | self.classes[j])))
                })
            }
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            let total = self.spent.fetch_add(0x400, Ordering::Relaxed) + 0x400;
            if total > self.budget {
                self.exhausted = true;
            }
        }
        !self.exhausted
    }

    fn search(&mut self, v: usize) {
        if !self.tick() {
            return;
        }
        if self.k + (self.n - v) < self.threshold() {
            return;
        }
        if v == self.n {
            if self.valid() {
                self.best = Some(Incumbent { value: self.k, labels: self.labels[..self.n].to_vec() });
            }
            return;
        }
        let open = self.k;
        for c in 0..=open {
            let saved = if c < open { (self.classes[c], self.cover[c]) } else { (0, (0, 0)) };
            self.place(v, c);
            if self.class_alive(c) {
                self.search(v + 1);
            }
            self.unplace(v, c, saved);
            if self.exhausted {
                return;
            }
        }
    }

    /// Replays a fixed prefix of labels; `false` if the prefix is pruned.
    fn replay(&mut self, prefix: &[u8]) -> bool {
        for (v, &c) in prefix.iter().enumerate() {
            self.place(v, c as usize);
            if !self.class_alive(c as usize) {
                return false;
            }
        }
        true
    }
}

/// All restricted growth prefixes of length `depth`, in lexicographic order.
fn prefixes(depth: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &out {
            let open = p.iter().map(|&c| c + 1).max().unwrap_or(0);
            for c in 0..=open {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

struct Branch {
    best: Option<Incumbent>,
    nodes: u64,
    exhausted: bool,
}

fn run_branch(
    g: &Graph,
    t: &CoverTables,
    kind: Kind,
    lower: usize,
    budget: u64,
    spent: &AtomicU64,
    prefix: &[u8],
) -> Branch {
    let mut kernel = Kernel::new(g, t, kind, lower, budget, spent);
    if kernel.replay(prefix) {
        kernel.search(prefix.len());
    }
    Branch { best: kernel.best, nodes: kernel.nodes, exhausted: kernel.exhausted }
}

/// Maximum number of classes in a valid partition of `kind`, with the
/// lexicographically least witness.
///
/// The search is split into independent subtrees on the first few
/// vertices; each subtree runs with the same starting bound, so node counts
/// and witnesses are identical for every thread count.
pub fn max_partition(g: &Graph, kind: Kind, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let n = g.n();
    if kind == Kind::Gc && n == 1 {
        return Err(Error::TrivialGraph);
    }
    let t = CoverTables::new(g);
    // every graph on at least two vertices has a gc-partition with two or more classes
    let lower = if kind == Kind::Gc { 2 } else { 1 };
    let spent = AtomicU64::new(0);
    let depth = SPLIT_DEPTH.min(n);
    let roots = prefixes(depth);
    let work = |p: &Vec<u8>| run_branch(g, &t, kind, lower, opts.budget, &spent, p);
    let branches: Vec<Branch> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
        pool.install(|| roots.par_iter().map(work).collect())
    } else {
        roots.iter().map(work).collect()
    };
    let nodes_explored = branches.iter().map(|b| b.nodes).sum();
    let exhausted = branches.iter().any(|b| b.exhausted);
    let mut best: Option<&Incumbent> = None;
    for b in &branches {
        if let Some(inc) = &b.best {
            if !matches!(&best, Some(cur) if inc.value <= cur.value) {
                best = Some(inc);
            }
        }
    }
    let Some(best) = best else {
        return Err(if exhausted {
            Error::BudgetExhausted { budget: opts.budget }
        } else {
            Error::NoPartitionExists(kind)
        });
    };
    let labels: Vec<usize> = best.labels.iter().map(|&c| c as usize).collect();
    let witness = Partition::from_labels(&labels)?;
    Ok(SolveResult { kind, value: best.value, witness, nodes_explored, elapsed: start.elapsed(), exact: !exhausted })
}

/// `GC(G)`, panicking on budget exhaustion. Convenience for small graphs.
pub fn gc_number(g: &Graph) -> Result<usize> {
    exact_value(g, Kind::Gc)
}

fn exact_value(g: &Graph, kind: Kind) -> Result<usize> {
    let r = max_partition(g, kind, &SolveOptions::default())?;
    if !r.exact {
        return Err(Error::BudgetExhausted { budget: DEFAULT_BUDGET });
    }
    Ok(r.value)
}

/// `C(G)`.
pub fn c_number(g: &Graph) -> Result<usize> {
    exact_value(g, Kind::C)
}

/// `PRC(G)`.
pub fn prc_number(g: &Graph) -> Result<usize> {
    exact_value(g, Kind::Prc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::verify_partition;

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

    fn solve(graph: &Graph, kind: Kind) -> SolveResult {
        let r = max_partition(graph, kind, &SolveOptions::default()).unwrap();
        assert!(r.exact);
        assert_eq!(r.witness.len(), r.value);
        assert!(verify_partition(graph, &r.witness, kind).unwrap().valid);
        r
    }

    #[test]
    fn path_and_cycle_values() {
        assert_eq!(solve(&path(5), Kind::Gc).value, 4);
        assert_eq!(solve(&cycle(7), Kind::Gc).value, 5);
        assert_eq!(solve(&cycle(7), Kind::C).value, 5);
        assert_eq!(solve(&path(4), Kind::Prc).value, 4);
    }

    #[test]
    fn complete_bipartite() {
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(solve(&k23, Kind::Gc).value, 5);
    }

    #[test]
    fn trivial_graph() {
        let k1 = g(1, &[]);
        assert_eq!(max_partition(&k1, Kind::Gc, &SolveOptions::default()), Err(Error::TrivialGraph));
        assert_eq!(solve(&k1, Kind::C).value, 1);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let r = solve(&path(5), Kind::Gc);
        assert_eq!(r.witness.rgs(), vec![0, 1, 0, 2, 3]);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let g = cycle(9);
        let one = max_partition(&g, Kind::Gc, &SolveOptions { threads: 1, ..Default::default() }).unwrap();
        let four = max_partition(&g, Kind::Gc, &SolveOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(
            (one.value, one.witness.clone(), one.nodes_explored),
            (four.value, four.witness, four.nodes_explored)
        );
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = max_partition(&cycle(10), Kind::Gc, &SolveOptions { budget: 5000, threads: 1 });
        match r {
            Ok(r) => assert!(!r.exact),
            Err(e) => assert_eq!(e, Error::BudgetExhausted { budget: 5000 }),
        }
    }

    #[test]
    fn prefixes_are_restricted_growth_strings() {
        assert_eq!(prefixes(3).len(), 5);
        assert_eq!(prefixes(4).len(), 15);
        assert_eq!(prefixes(2), vec![vec![0, 0], vec![0, 1]]);
    }
}
