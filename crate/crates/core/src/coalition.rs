//! Coalition, global coalition and perfect coalition structures.
//!
//! The three partition kinds share one verifier skeleton and differ in two
//! places only: which sets count as "already dominating", and whether a
//! singleton dominating class is excused from needing a partner. Global
//! coalition partitions have no such exemption.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domination::{at_most_one_neighbor, CoverTables};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Which coalition notion a partition is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Coalition: plain domination.
    C,
    /// Global coalition: domination of `G` and its complement.
    Gc,
    /// Perfect coalition.
    Prc,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::C, Kind::Gc, Kind::Prc];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::C => "c",
            Kind::Gc => "gc",
            Kind::Prc => "prc",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Kind, String> {
        match s {
            "c" => Ok(Kind::C),
            "gc" => Ok(Kind::Gc),
            "prc" => Ok(Kind::Prc),
            other => Err(format!("unknown partition kind `{other}` (expected c, gc or prc)")),
        }
    }
}

/// Why a class fails the partition condition. Variant names are part of
/// the JSON output and do not change.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    /// A gc-partition class is itself a global dominating set.
    IsGlobalDominating,
    /// A c- or prc-partition class dominates `G` but is not a singleton, so
    /// the singleton exemption does not apply.
    IsDominatingSingletonExemption,
    /// The class has no partner of the required kind.
    NoPartner,
    /// Some vertex outside the class has two or more neighbors in it, so it
    /// can never be half of a perfect coalition.
    PerfectConditionFailed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub class: usize,
    pub reason: Reason,
}

/// Result of checking a partition against one of the three definitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionVerdict {
    pub valid: bool,
    pub kind: Kind,
    /// `partners[i]`: indices of the classes forming a coalition of `kind`
    /// with class `i`, ascending.
    pub partners: Vec<Vec<usize>>,
    pub violations: Vec<Violation>,
}

/// `GCG(G, π)`: one vertex per class, edges between gc-partners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionGraph {
    pub graph: Graph,
    pub class_map: Vec<VertexSet>,
}

fn check_pair(a: VertexSet, b: VertexSet) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_disjoint(b) {
        return Err(Error::OverlappingSets);
    }
    Ok(())
}

/// Pair tests for one graph with the coverage tables precomputed.
pub(crate) struct PairOracle<'g> {
    g: &'g Graph,
    t: CoverTables,
}

impl<'g> PairOracle<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        PairOracle { g, t: CoverTables::new(g) }
    }

    /// Whether `s` already "wins" on its own under `kind`.
    pub(crate) fn self_sufficient(&self, kind: Kind, s: u64) -> bool {
        match kind {
            Kind::Gc => self.t.is_global(s),
            Kind::C | Kind::Prc => self.t.is_dominating(s),
        }
    }

    fn perfect_half(&self, s: u64) -> bool {
        at_most_one_neighbor(self.g, VertexSet::from_bits_unchecked(self.g.n(), s))
    }

    fn perfect_union(&self, s: u64) -> bool {
        let rows = self.g.rows();
        let mut outside = self.t.full & !s;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            if (rows[v] & s).count_ones() != 1 {
                return false;
            }
        }
        true
    }

    pub(crate) fn is_pair(&self, kind: Kind, a: u64, b: u64) -> bool {
        if self.self_sufficient(kind, a) || self.self_sufficient(kind, b) {
            return false;
        }
        match kind {
            Kind::Gc => self.t.is_global(a | b),
            Kind::C => self.t.is_dominating(a | b),
            Kind::Prc => self.perfect_half(a) && self.perfect_half(b) && self.perfect_union(a | b),
        }
    }
}

/// Neither set is a global dominating set, their union is.
pub fn is_gc_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    check_pair(a, b)?;
    Ok(PairOracle::new(g).is_pair(Kind::Gc, a.bits(), b.bits()))
}

/// Neither set dominates `G`, their union does.
pub fn is_c_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    check_pair(a, b)?;
    Ok(PairOracle::new(g).is_pair(Kind::C, a.bits(), b.bits()))
}

/// Neither set dominates, outside vertices see each set at most once, and
/// the union is a perfect dominating set.
pub fn is_prc_pair(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    check_pair(a, b)?;
    Ok(PairOracle::new(g).is_pair(Kind::Prc, a.bits(), b.bits()))
}

/// Pair predicate for an arbitrary kind.
pub fn is_pair(g: &Graph, kind: Kind, a: VertexSet, b: VertexSet) -> Result<bool> {
    check_pair(a, b)?;
    Ok(PairOracle::new(g).is_pair(kind, a.bits(), b.bits()))
}

fn check_partition(g: &Graph, p: &Partition) -> Result<()> {
    if p.n() != g.n() {
        return Err(Error::MalformedPartition(format!("partition covers {} vertices, graph has {}", p.n(), g.n())));
    }
    Ok(())
}

/// Checks `p` against the partition definition of `kind`, returning every
/// partner relation and every violation.
pub fn verify_partition(g: &Graph, p: &Partition, kind: Kind) -> Result<PartitionVerdict> {
    check_partition(g, p)?;
    let oracle = PairOracle::new(g);
    let classes: Vec<u64> = p.classes().iter().map(|c| c.bits()).collect();
    let k = classes.len();
    let mut partners = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if oracle.is_pair(kind, classes[i], classes[j]) {
                partners[i].push(j);
                partners[j].push(i);
            }
        }
    }
    for list in &mut partners {
        list.sort_unstable();
    }
    let mut violations = Vec::new();
    for (i, &c) in classes.iter().enumerate() {
        let reason = match kind {
            Kind::Gc if oracle.self_sufficient(kind, c) => Some(Reason::IsGlobalDominating),
            Kind::C | Kind::Prc if oracle.self_sufficient(kind, c) => {
                (c.count_ones() != 1).then_some(Reason::IsDominatingSingletonExemption)
            }
            Kind::Prc if !oracle.perfect_half(c) => Some(Reason::PerfectConditionFailed),
            _ => partners[i].is_empty().then_some(Reason::NoPartner),
        };
        if let Some(reason) = reason {
            violations.push(Violation { class: i, reason });
        }
    }
    Ok(PartitionVerdict { valid: violations.is_empty(), kind, partners, violations })
}

/// Number of classes forming a global coalition with class `i`.
pub fn count_gc_partners(g: &Graph, p: &Partition, i: usize) -> Result<usize> {
    check_partition(g, p)?;
    let classes = p.classes();
    let a = *classes.get(i).ok_or(Error::ClassOutOfRange { index: i, len: classes.len() })?;
    let oracle = PairOracle::new(g);
    Ok(classes.iter().enumerate().filter(|&(j, b)| j != i && oracle.is_pair(Kind::Gc, a.bits(), b.bits())).count())
}

/// Upper bound on the number of gc-partners of a class `a`:
/// `max(Δ + 1, min(n − |a|, n − δ))`.
pub fn gc_partner_bound(g: &Graph, a: VertexSet) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = g.n();
    Ok((g.max_degree() + 1).max((n - a.len()).min(n - g.min_degree())))
}

/// Builds `GCG(G, π)`. `p` need not be a valid gc-partition.
pub fn build_gcg(g: &Graph, p: &Partition) -> Result<CoalitionGraph> {
    let verdict = verify_partition(g, p, Kind::Gc)?;
    let mut edges = Vec::new();
    for (i, list) in verdict.partners.iter().enumerate() {
        edges.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
    }
    let graph = Graph::from_edge_list(p.len(), &edges)?;
    Ok(CoalitionGraph { graph, class_map: p.classes().to_vec() })
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

    fn s(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn gc_pairs() {
        let k2 = path(2);
        assert!(is_gc_pair(&k2, s(2, &[0]), s(2, &[1])).unwrap());
        let p4 = path(4);
        assert!(is_gc_pair(&p4, s(4, &[0]), s(4, &[3])).unwrap());
        assert!(!is_gc_pair(&p4, s(4, &[0]), s(4, &[2])).unwrap());
        // {0,3} is global dominating in P4, so it has no gc-partner
        assert!(!is_gc_pair(&p4, s(4, &[0, 3]), s(4, &[1])).unwrap());
        assert_eq!(is_gc_pair(&p4, s(4, &[0, 1]), s(4, &[1])), Err(Error::OverlappingSets));
        assert_eq!(is_gc_pair(&p4, s(4, &[]), s(4, &[1])), Err(Error::EmptySet));
    }

    #[test]
    fn c_and_prc_pairs() {
        let p4 = path(4);
        assert!(is_c_pair(&p4, s(4, &[0]), s(4, &[2])).unwrap());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!is_c_pair(&star, s(4, &[0]), s(4, &[1])).unwrap());
        assert_eq!(is_c_pair(&star, s(4, &[0]), s(4, &[0])), Err(Error::OverlappingSets));
        assert!(is_prc_pair(&p4, s(4, &[0]), s(4, &[3])).unwrap());
        assert!(!is_prc_pair(&cycle(4), s(4, &[0]), s(4, &[2])).unwrap());
        assert!(!is_prc_pair(&cycle(3), s(3, &[0]), s(3, &[1])).unwrap());
    }

    #[test]
    fn verifies_cycle_singletons() {
        let v = verify_partition(&cycle(4), &Partition::singletons(4), Kind::Gc).unwrap();
        assert!(v.valid);
        let v = verify_partition(&cycle(3), &Partition::singletons(3), Kind::Gc).unwrap();
        assert!(!v.valid);
        assert!(v.violations.iter().all(|x| x.reason == Reason::NoPartner));
        assert_eq!(v.violations.len(), 3);
    }

    #[test]
    fn double_star_partition_from_the_radius_two_tree_argument() {
        // S_{3,2}: a=0 (leaves 2,3,4), b=1 (leaves 5,6)
        let t = g(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)]);
        let p = Partition::from_lists(7, &[vec![1], vec![0, 5, 6], vec![2], vec![3], vec![4]]).unwrap();
        let v = verify_partition(&t, &p, Kind::Gc).unwrap();
        assert!(v.valid);
        assert_eq!(v.partners[1], vec![0, 2, 3, 4]);
    }

    #[test]
    fn singleton_exemption_only_for_c_and_prc() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let p = Partition::from_lists(4, &[vec![0], vec![1, 2], vec![3]]).unwrap();
        assert!(verify_partition(&star, &p, Kind::C).unwrap().valid);
        let p = Partition::from_lists(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let v = verify_partition(&star, &p, Kind::C).unwrap();
        assert_eq!(v.violations[0], Violation { class: 0, reason: Reason::IsDominatingSingletonExemption });
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        let v = verify_partition(&k1, &Partition::singletons(1), Kind::Gc).unwrap();
        assert_eq!(v.violations[0].reason, Reason::IsGlobalDominating);
        assert!(verify_partition(&k1, &Partition::singletons(1), Kind::C).unwrap().valid);
    }

    #[test]
    fn prc_perfect_condition_reason() {
        // vertex 1 sees both members of {0,2}
        let c6 = cycle(6);
        let p = Partition::from_lists(6, &[vec![0, 2], vec![1], vec![3], vec![4], vec![5]]).unwrap();
        let v = verify_partition(&c6, &p, Kind::Prc).unwrap();
        assert!(v.violations.contains(&Violation { class: 0, reason: Reason::PerfectConditionFailed }));
    }

    #[test]
    fn partner_bound_arithmetic() {
        assert_eq!(gc_partner_bound(&path(2), s(2, &[0])).unwrap(), 2);
        assert_eq!(gc_partner_bound(&cycle(6), s(6, &[0, 1])).unwrap(), 4);
        assert_eq!(gc_partner_bound(&cycle(6), s(6, &[])), Err(Error::EmptySet));
    }

    #[test]
    fn partner_counts() {
        let k2 = path(2);
        let p = Partition::singletons(2);
        assert_eq!(count_gc_partners(&k2, &p, 0).unwrap(), 1);
        assert_eq!(count_gc_partners(&k2, &p, 1).unwrap(), 1);
        assert!(matches!(count_gc_partners(&k2, &p, 2), Err(Error::ClassOutOfRange { .. })));
        let p4 = path(4);
        let p = Partition::from_lists(4, &[vec![0, 3], vec![1], vec![2]]).unwrap();
        assert_eq!(count_gc_partners(&p4, &p, 0).unwrap(), 0);
    }

    #[test]
    fn coalition_graph_of_p4_singletons_is_a_matching() {
        let gcg = build_gcg(&path(4), &Partition::singletons(4)).unwrap();
        assert_eq!(gcg.graph.edges(), vec![(0, 3), (1, 2)]);
        let gcg = build_gcg(&path(2), &Partition::singletons(2)).unwrap();
        assert_eq!(gcg.graph.edges(), vec![(0, 1)]);
        let p = Partition::from_lists(4, &[vec![0, 3], vec![1], vec![2]]).unwrap();
        let gcg = build_gcg(&path(4), &p).unwrap();
        assert_eq!(gcg.graph.degree(0), 0);
    }
}
