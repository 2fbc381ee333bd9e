//! Immutable simple graphs with bitset adjacency.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{universe_mask, VertexSet};
use crate::MAX_VERTICES;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// `adj[v]` is the open neighborhood of `v`. The complement graph is never
/// stored; [`Graph::complement_neighborhood`] derives it per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, labels: None })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & !universe_mask(n) != 0 {
                let vertex = 63 - (row & !universe_mask(n)).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            for u in VertexSet::from_bits_unchecked(n, row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Parse { line: v, message: format!("asymmetric adjacency between {v} and {u}") });
                }
            }
        }
        Ok(Graph { n, adj: rows, labels: None })
    }

    pub(crate) fn from_adjacency_unchecked(rows: Vec<u64>) -> Graph {
        Graph { n: rows.len(), adj: rows, labels: None }
    }

    /// Attaches display names. Labels are cosmetic and ignored by every
    /// algorithm.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParams(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n, self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits_unchecked(self.n, self.adj[v] | 1 << v)
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbors of `v` in the complement: `V \ (N(v) ∪ {v})`.
    pub fn complement_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.closed_neighbors(v).complement())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits_unchecked(self.n, self.adj[u] & !universe_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The complement graph, materialized. Labels carry over.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n).map(|v| self.closed_neighbors(v).complement().bits()).collect();
        Graph { n: self.n, adj, labels: self.labels.clone() }
    }

    /// Induced subgraph on `keep`, vertices renumbered in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let order = keep.to_vec();
        if order.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let k = order.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Adds one vertex adjacent to `neighbors`; the new vertex is `n`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let mut adj = self.adj.clone();
        for u in neighbors {
            adj[u] |= 1 << self.n;
        }
        adj.push(neighbors.bits());
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Returns a copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj, labels: self.labels.clone() })
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Vertices of degree `n - 1`.
    pub fn full_vertices(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) + 1 == self.n {
                s.insert(v);
            }
        }
        s
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for v in VertexSet::from_bits_unchecked(self.n, frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in VertexSet::from_bits_unchecked(self.n, next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Vertices at distance at most `radius` from `v`.
    pub fn ball(&self, v: usize, radius: usize) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        for _ in 0..radius {
            let mut next = 0u64;
            for u in VertexSet::from_bits_unchecked(self.n, frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
            if frontier == 0 {
                break;
            }
        }
        VertexSet::from_bits_unchecked(self.n, seen)
    }

    pub fn is_connected(&self) -> bool {
        self.ball(0, self.n).is_full()
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.ball(v, self.n);
            out.push(c);
            left = left - c;
        }
        out
    }

    /// Length of a shortest cycle, or [`Girth::Acyclic`].
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }

    /// Eccentricities, radius, diameter, girth and connectivity.
    pub fn metrics(&self) -> Metrics {
        let connected = self.is_connected();
        let ecc = connected.then(|| {
            (0..self.n).map(|v| self.distances_from(v).into_iter().map(|d| d.unwrap_or(0)).max().unwrap_or(0)).collect()
        });
        Metrics { connected, girth: self.girth(), ecc }
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A 2-coloring `(side0, side1)` when the graph is bipartite. Each
    /// component's least vertex lands in `side0`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let zero = VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| color[v] == 0)).ok()?;
        Some((zero, zero.complement()))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().into_iter().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Leaves, support vertices, full vertices and the leaf set of every
    /// support vertex.
    pub fn structure(&self) -> Structure {
        let mut leaves = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) == 1 {
                leaves.insert(v);
            }
        }
        let mut supports = VertexSet::empty(self.n);
        let mut leaf_sets = Vec::new();
        for u in 0..self.n {
            let l = self.neighbors(u) & leaves;
            if !l.is_empty() {
                supports.insert(u);
                leaf_sets.push(SupportLeaves { support: u, leaves: l });
            }
        }
        Structure { leaves, supports, full_vertices: self.full_vertices(), leaf_sets }
    }

    /// Sorts a tree into the radius-2 shapes that have a closed-form global
    /// coalition number.
    pub fn classify_radius2_tree(&self) -> Result<TreeClass> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let m = self.metrics();
        let radius = m.radius()?;
        let diameter = m.diameter()?;
        Ok(match (radius, diameter) {
            (0, _) | (1, _) => TreeClass::Star,
            (2, 3) => {
                let s = self.structure();
                let mut counts: Vec<usize> = s.leaf_sets.iter().map(|l| l.leaves.len()).collect();
                counts.sort_unstable_by(|a, b| b.cmp(a));
                if counts == [1, 1] {
                    TreeClass::P4
                } else {
                    TreeClass::DoubleStar { p: counts[0], q: counts[1] }
                }
            }
            (2, _) => {
                let ecc = m.eccentricities()?;
                let center = (0..self.n).find(|&v| ecc[v] == 2).expect("radius 2 has a central vertex");
                let ell = self.distances_from(center).iter().filter(|d| **d == Some(2)).count();
                TreeClass::Diam4 { center, ell }
            }
            _ => TreeClass::RadiusAtLeast3,
        })
    }
}

/// Girth of a graph. Acyclic graphs get a sentinel rather than a number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    Acyclic,
    Cycle(usize),
}

impl Girth {
    /// `true` when the graph has a cycle and every cycle has length at least `k`.
    pub fn is_cyclic_at_least(self, k: usize) -> bool {
        matches!(self, Girth::Cycle(g) if g >= k)
    }
}

/// Distance metrics of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub connected: bool,
    pub girth: Girth,
    ecc: Option<Vec<usize>>,
}

impl Metrics {
    pub fn eccentricities(&self) -> Result<&[usize]> {
        self.ecc.as_deref().ok_or(Error::Disconnected)
    }

    pub fn radius(&self) -> Result<usize> {
        Ok(*self.eccentricities()?.iter().min().expect("n >= 1"))
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(*self.eccentricities()?.iter().max().expect("n >= 1"))
    }

    /// Vertices whose eccentricity equals the radius.
    pub fn central_vertices(&self) -> Result<Vec<usize>> {
        let ecc = self.eccentricities()?;
        let r = self.radius()?;
        Ok((0..ecc.len()).filter(|&v| ecc[v] == r).collect())
    }
}

/// A support vertex together with its pendant leaves (`L_u`, `n_u = |L_u|`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportLeaves {
    pub support: usize,
    pub leaves: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub full_vertices: VertexSet,
    pub leaf_sets: Vec<SupportLeaves>,
}

impl Structure {
    /// Number of leaves hanging off `u`; zero when `u` is not a support.
    pub fn leaf_count(&self, u: usize) -> usize {
        self.leaf_sets.iter().find(|s| s.support == u).map_or(0, |s| s.leaves.len())
    }
}

/// Shape of a tree with respect to its radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TreeClass {
    Star,
    P4,
    /// Diameter 3 other than `P4`; `p >= q` leaf counts of the two supports.
    DoubleStar {
        p: usize,
        q: usize,
    },
    /// Radius 2, diameter 4; `ell` vertices sit at distance 2 from the
    /// unique central vertex.
    Diam4 {
        center: usize,
        ell: usize,
    },
    RadiusAtLeast3,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(65, &[]), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn k2_and_p4() {
        let k2 = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!((k2.degree(0), k2.degree(1), k2.edge_count()), (1, 1, 1));
        let p4 = path(4);
        assert_eq!(p4.structure().leaves.to_vec(), vec![0, 3]);
    }

    #[test]
    fn complement_neighborhoods() {
        let k3 = cycle(3);
        assert!(k3.complement_neighborhood(0).unwrap().is_empty());
        assert_eq!(path(4).complement_neighborhood(0).unwrap().to_vec(), vec![2, 3]);
        let c5 = cycle(5);
        for v in 0..5 {
            let far = c5.complement_neighborhood(v).unwrap().to_vec();
            assert_eq!(far, {
                let mut f = vec![(v + 2) % 5, (v + 3) % 5];
                f.sort();
                f
            });
        }
        assert!(k3.complement_neighborhood(3).is_err());
    }

    #[test]
    fn metrics_of_small_families() {
        let m = path(5).metrics();
        assert_eq!((m.radius().unwrap(), m.diameter().unwrap(), m.girth), (2, 4, Girth::Acyclic));
        let m = cycle(7).metrics();
        assert_eq!((m.radius().unwrap(), m.diameter().unwrap(), m.girth), (3, 3, Girth::Cycle(7)));
        // wheel W5: hub 0, rim 1..=5
        let mut edges: Vec<_> = (1..=5).map(|i| (0, i)).collect();
        edges.extend((0..5).map(|i| (1 + i, 1 + (i + 1) % 5)));
        let m = Graph::from_edge_list(6, &edges).unwrap().metrics();
        assert_eq!((m.radius().unwrap(), m.diameter().unwrap(), m.girth), (1, 2, Girth::Cycle(3)));
    }

    #[test]
    fn disconnected_metrics_error() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let m = g.metrics();
        assert!(!m.connected);
        assert_eq!(m.radius(), Err(Error::Disconnected));
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn structure_counts_leaves() {
        // S_{2,3}: a=0 with leaves 2,3; b=1 with leaves 4,5,6
        let g = Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        let s = g.structure();
        assert_eq!(s.supports.to_vec(), vec![0, 1]);
        assert_eq!((s.leaf_count(0), s.leaf_count(1)), (2, 3));
        assert!(cycle(6).structure().supports.is_empty());
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.structure().leaf_count(0), 4);
    }

    #[test]
    fn classifies_radius_two_trees() {
        let spider = Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(spider.classify_radius2_tree().unwrap(), TreeClass::Diam4 { center: 0, ell: 3 });
        let s32 = Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)]).unwrap();
        assert_eq!(s32.classify_radius2_tree().unwrap(), TreeClass::DoubleStar { p: 3, q: 2 });
        assert_eq!(path(7).classify_radius2_tree().unwrap(), TreeClass::RadiusAtLeast3);
        assert_eq!(path(4).classify_radius2_tree().unwrap(), TreeClass::P4);
        assert_eq!(cycle(4).classify_radius2_tree(), Err(Error::NotATree));
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(cycle(3).girth(), Girth::Cycle(3));
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Girth::Cycle(3));
        // two squares sharing an edge: girth 4
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)]).unwrap();
        assert_eq!(g.girth(), Girth::Cycle(4));
    }
}
