//! Exhaustive graph corpora, one representative per isomorphism class.
//!
//! Each corpus grows by a local move that every member of the class can be
//! undone by, so building level by level and deduplicating reaches all of
//! them:
//!
//! * connected graphs: a new vertex with any non-empty neighbourhood (every
//!   connected graph has a vertex whose removal keeps it connected);
//! * trees and unicyclic graphs: a new leaf;
//! * radius at least 3: edges added to a radius-3 tree (deleting a cycle
//!   edge keeps the graph connected and cannot shrink any distance);
//! * girth at least 6: a new vertex whose neighbours are pairwise at
//!   distance 4 or more.

use crate::graph::{Girth, Graph};
use crate::iso::IsoSet;
use crate::vertex_set::VertexSet;

fn k1() -> Graph {
    Graph::from_edge_list(1, &[]).expect("K1")
}

/// Connected graphs of each order `1..=max_n`; index `i` holds order `i + 1`.
pub fn connected_graphs_upto(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![k1()]];
    for n in 2..=max_n {
        let mut set = IsoSet::new();
        for g in &levels[n - 2] {
            let m = g.n();
            for bits in 1..(1u64 << m) {
                set.insert(g.with_vertex(VertexSet::from_bits_unchecked(m, bits)).expect("order fits"));
            }
        }
        levels.push(set.into_vec());
    }
    levels.truncate(max_n);
    levels
}

/// All connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_upto(n).pop().unwrap_or_default()
}

/// Trees of each order `1..=max_n`.
pub fn trees_upto(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![k1()]];
    for n in 2..=max_n {
        let mut set = IsoSet::new();
        for t in &levels[n - 2] {
            for v in 0..t.n() {
                set.insert(t.with_vertex(VertexSet::singleton(t.n(), v)).expect("order fits"));
            }
        }
        levels.push(set.into_vec());
    }
    levels.truncate(max_n);
    levels
}

pub fn trees(n: usize) -> Vec<Graph> {
    trees_upto(n).pop().unwrap_or_default()
}

fn radius(g: &Graph) -> Option<usize> {
    g.metrics().radius().ok()
}

/// Connected graphs on `n` vertices with radius at least 3.
pub fn connected_radius_at_least_3(n: usize) -> Vec<Graph> {
    let mut set = IsoSet::new();
    for t in trees(n) {
        if radius(&t).is_some_and(|r| r >= 3) {
            set.insert(t);
        }
    }
    let mut next = 0;
    while next < set.len() {
        let g = set.as_slice()[next].clone();
        next += 1;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let h = g.with_edge(u, v).expect("in range");
                if radius(&h).is_some_and(|r| r >= 3) {
                    set.insert(h);
                }
            }
        }
    }
    set.into_vec()
}

fn is_girth6_or_acyclic(g: &Graph) -> bool {
    match g.girth() {
        Girth::Acyclic => true,
        Girth::Cycle(c) => c >= 6,
    }
}

/// Connected graphs of each order `1..=max_n` with no cycle shorter than 6,
/// trees included.
fn connected_girth6_upto(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![k1()]];
    for n in 2..=max_n {
        let mut set = IsoSet::new();
        for g in &levels[n - 2] {
            let m = g.n();
            let far: Vec<u64> = (0..m)
                .map(|v| {
                    let d = g.distances_from(v);
                    (0..m).filter(|&u| d[u].is_some_and(|d| d >= 4)).fold(0u64, |acc, u| acc | 1 << u)
                })
                .collect();
            extend_far(g, &far, 0, 0, &mut set);
        }
        levels.push(set.into_vec());
    }
    levels.truncate(max_n);
    levels
}

/// Inserts `g` plus a vertex on every non-empty set of pairwise far vertices.
fn extend_far(g: &Graph, far: &[u64], from: usize, chosen: u64, out: &mut IsoSet) {
    for v in from..g.n() {
        if chosen & !far[v] != 0 {
            continue;
        }
        let s = chosen | 1 << v;
        let h = g.with_vertex(VertexSet::from_bits_unchecked(g.n(), s)).expect("order fits");
        debug_assert!(is_girth6_or_acyclic(&h));
        out.insert(h);
        extend_far(g, far, v + 1, s, out);
    }
}

fn disjoint_union(parts: &[&Graph]) -> Graph {
    let n: usize = parts.iter().map(|g| g.n()).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edge_list(n, &edges).expect("union fits")
}

/// Graphs on `n` vertices, connected or not, that contain a cycle and
/// whose shortest cycle has length at least 6.
pub fn girth_at_least_6(n: usize) -> Vec<Graph> {
    let comps = connected_girth6_upto(n);
    // components identified by (order, index), chosen in non-increasing order
    let mut keys: Vec<(usize, usize)> = Vec::new();
    for (i, level) in comps.iter().enumerate() {
        for j in 0..level.len() {
            keys.push((i + 1, j));
        }
    }
    keys.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut stack = Vec::new();
    choose_components(&comps, &keys, 0, n, &mut stack, &mut out);
    out
}

fn choose_components(
    comps: &[Vec<Graph>],
    keys: &[(usize, usize)],
    start: usize,
    left: usize,
    stack: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if left == 0 {
        let parts: Vec<&Graph> = stack.iter().map(|&(s, j)| &comps[s - 1][j]).collect();
        if parts.iter().any(|g| g.girth() != Girth::Acyclic) {
            out.push(disjoint_union(&parts));
        }
        return;
    }
    for (i, &(s, j)) in keys.iter().enumerate().skip(start) {
        if s > left {
            continue;
        }
        stack.push((s, j));
        choose_components(comps, keys, i, left - s, stack, out);
        stack.pop();
    }
}

fn cycle(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edge_list(k, &edges).expect("cycle")
}

/// Connected unicyclic graphs whose cycle has length `cycle_len` and whose
/// radius is at most `radius_cap`, of every order up to `max_n`.
///
/// Pendant vertices never lower the radius, so the radius filter is applied
/// while growing.
pub fn unicyclic_upto(cycle_len: usize, max_n: usize, radius_cap: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if cycle_len < 3 || max_n < cycle_len {
        return levels;
    }
    let base = cycle(cycle_len);
    let mut current = if radius(&base).is_some_and(|r| r <= radius_cap) { vec![base] } else { Vec::new() };
    levels.push(current.clone());
    for _ in cycle_len + 1..=max_n {
        let mut set = IsoSet::new();
        for g in &current {
            for v in 0..g.n() {
                let h = g.with_vertex(VertexSet::singleton(g.n(), v)).expect("order fits");
                if radius(&h).is_some_and(|r| r <= radius_cap) {
                    set.insert(h);
                }
            }
        }
        current = set.into_vec();
        levels.push(current.clone());
    }
    levels
}

/// Every set partition of `0..n` as a restricted growth string, in
/// lexicographic order.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions { labels: vec![0; n], started: false, done: n == 0 }
}

pub struct SetPartitions {
    labels: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.labels.clone());
        }
        let n = self.labels.len();
        // rightmost position that can still grow
        for i in (1..n).rev() {
            let cap = self.labels[..i].iter().max().map_or(0, |m| m + 1);
            if self.labels[i] < cap {
                self.labels[i] += 1;
                for x in &mut self.labels[i + 1..] {
                    *x = 0;
                }
                return Some(self.labels.clone());
            }
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=7).map(|n| set_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(set_partitions(3).nth(1), Some(vec![0, 0, 1]));
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = connected_graphs_upto(6).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = trees_upto(10).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn radius_three_corpus_matches_filtered_connected_graphs() {
        for n in 6..=7 {
            let direct = connected_graphs(n).into_iter().filter(|g| radius(g).unwrap() >= 3).count();
            assert_eq!(connected_radius_at_least_3(n).len(), direct);
        }
    }

    #[test]
    fn girth_six_small_orders() {
        // C6 alone at 6; C7 and C6 plus a pendant at 7; C6 + K1 is disconnected
        assert_eq!(girth_at_least_6(6).len(), 1);
        assert_eq!(girth_at_least_6(7).len(), 3);
        assert!(girth_at_least_6(5).is_empty());
    }

    #[test]
    fn unicyclic_small_cases() {
        let c5 = unicyclic_upto(5, 6, 2);
        assert_eq!(c5[0].len(), 1);
        assert_eq!(c5[1].len(), 1);
        assert_eq!(unicyclic_upto(3, 3, 2), vec![vec![cycle(3)]]);
        assert_eq!(unicyclic_upto(4, 4, 2)[0].len(), 1);
    }
}
