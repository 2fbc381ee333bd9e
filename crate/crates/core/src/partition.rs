//! Vertex partitions.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An ordered list of pairwise disjoint, non-empty classes covering
/// `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    /// Validates and wraps `classes`. Order is preserved.
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Partition> {
        let mut seen = VertexSet::empty(n);
        for (i, c) in classes.iter().enumerate() {
            if c.universe() != n {
                return Err(Error::MalformedPartition(format!(
                    "class {i} lives in a universe of size {}",
                    c.universe()
                )));
            }
            if c.is_empty() {
                return Err(Error::MalformedPartition(format!("class {i} is empty")));
            }
            if !c.is_disjoint(seen) {
                let v = (*c & seen).first().unwrap();
                return Err(Error::MalformedPartition(format!("vertex {v} appears in more than one class")));
            }
            seen = seen | *c;
        }
        if let Some(v) = seen.complement().first() {
            return Err(Error::MalformedPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { n, classes })
    }

    /// Builds a partition from index lists, e.g. parsed JSON.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Partition> {
        let mut classes = Vec::with_capacity(lists.len());
        for l in lists {
            let mut c = VertexSet::empty(n);
            for &v in l {
                if v >= n {
                    return Err(Error::MalformedPartition(format!("vertex {v} out of range for {n} vertices")));
                }
                if c.contains(v) {
                    return Err(Error::MalformedPartition(format!("vertex {v} listed twice")));
                }
                c.insert(v);
            }
            classes.push(c);
        }
        Partition::new(n, classes)
    }

    /// Every vertex in its own class, in index order.
    pub fn singletons(n: usize) -> Partition {
        Partition { n, classes: (0..n).map(|v| VertexSet::singleton(n, v)).collect() }
    }

    /// Builds a partition from a class label per vertex. Classes are
    /// numbered by first appearance.
    pub fn from_labels(labels: &[usize]) -> Result<Partition> {
        let n = labels.len();
        let mut remap = std::collections::HashMap::new();
        let mut classes: Vec<VertexSet> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let idx = *remap.entry(l).or_insert_with(|| {
                classes.push(VertexSet::empty(n));
                classes.len() - 1
            });
            classes[idx].insert(v);
        }
        Partition::new(n, classes)
    }

    /// The restricted growth string: class index per vertex, classes
    /// numbered by their least vertex.
    pub fn rgs(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order.sort_by_key(|&i| self.classes[i].first());
        let mut out = vec![0; self.n];
        for (rank, &i) in order.iter().enumerate() {
            for v in self.classes[i] {
                out[v] = rank;
            }
        }
        out
    }

    /// Classes reordered by least vertex.
    pub fn normalized(&self) -> Partition {
        let mut classes = self.classes.clone();
        classes.sort_by_key(|c| c.first());
        Partition { n: self.n, classes }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.to_vec()).collect()
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.classes.iter())
    }
}
