//! Isomorphism testing for small graphs.
//!
//! Colour refinement (1-dimensional Weisfeiler-Leman) gives an invariant
//! hash; equal hashes are confirmed by a backtracking search that maps
//! vertices only onto vertices of the same refined colour.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;

fn mix<T: Hash>(x: T) -> u64 {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    h.finish()
}

/// Stable colour classes after refinement, as comparable hashes.
fn refine(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut colours: Vec<u64> = (0..n).map(|v| mix(g.degree(v))).collect();
    let mut classes = distinct(&colours);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut around: Vec<u64> = g.neighbors(v).iter().map(|u| colours[u]).collect();
                around.sort_unstable();
                mix((colours[v], around))
            })
            .collect();
        let count = distinct(&next);
        colours = next;
        if count == classes {
            return colours;
        }
        classes = count;
    }
}

fn distinct(c: &[u64]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Isomorphism-invariant hash. Isomorphic graphs always agree; the converse
/// can fail (regular graphs of equal degree, for example).
pub fn invariant_hash(g: &Graph) -> u64 {
    let mut c = refine(g);
    c.sort_unstable();
    mix((g.n(), g.edge_count(), c))
}

/// Exact isomorphism test.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ca = refine(a);
    let cb = refine(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let n = a.n();
    // rarest colours first keeps the branching small
    let mut freq: HashMap<u64, usize> = HashMap::new();
    for &c in &ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (freq[&ca[v]], v));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.n() {
        if *used >> w & 1 == 1 || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
    }
    map[v] = usize::MAX;
    false
}

/// Collects graphs up to isomorphism, keeping the first representative of
/// each class in insertion order.
#[derive(Default)]
pub struct IsoSet {
    buckets: HashMap<u64, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is already present. Returns
    /// whether it was added.
    pub fn insert(&mut self, g: Graph) -> bool {
        let h = invariant_hash(&g);
        let bucket = self.buckets.entry(h).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_vec(self) -> Vec<Graph> {
        self.graphs
    }

    pub fn as_slice(&self) -> &[Graph] {
        &self.graphs
    }
}
