// Reference solver: tries every set partition and checks the definitions
// literally on an adjacency matrix. Shares nothing with the library except
// `Graph::n` and `Graph::has_edge`.

#![allow(dead_code)]

use globcoal::Graph;

pub struct Oracle {
    n: usize,
    adj: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    C,
    Gc,
    Prc,
}

impl Oracle {
    pub fn new(g: &Graph) -> Oracle {
        let n = g.n();
        let adj = (0..n).map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect()).collect();
        Oracle { n, adj }
    }

    fn dominates(&self, s: &[usize]) -> bool {
        (0..self.n).all(|v| s.contains(&v) || s.iter().any(|&u| self.adj[u][v]))
    }

    fn dominates_complement(&self, s: &[usize]) -> bool {
        (0..self.n).all(|v| s.contains(&v) || s.iter().any(|&u| u != v && !self.adj[u][v]))
    }

    pub fn is_gds(&self, s: &[usize]) -> bool {
        self.dominates(s) && self.dominates_complement(s)
    }

    fn outside_sees_at_most_one(&self, s: &[usize]) -> bool {
        (0..self.n).filter(|v| !s.contains(v)).all(|v| s.iter().filter(|&&u| self.adj[u][v]).count() <= 1)
    }

    fn perfect(&self, s: &[usize]) -> bool {
        (0..self.n).filter(|v| !s.contains(v)).all(|v| s.iter().filter(|&&u| self.adj[u][v]).count() == 1)
    }

    fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().chain(b).copied().collect()
    }

    pub fn gc_pair(&self, a: &[usize], b: &[usize]) -> bool {
        !self.is_gds(a) && !self.is_gds(b) && self.is_gds(&Self::union(a, b))
    }

    fn c_pair(&self, a: &[usize], b: &[usize]) -> bool {
        !self.dominates(a) && !self.dominates(b) && self.dominates(&Self::union(a, b))
    }

    fn prc_pair(&self, a: &[usize], b: &[usize]) -> bool {
        !self.dominates(a)
            && !self.dominates(b)
            && self.outside_sees_at_most_one(a)
            && self.outside_sees_at_most_one(b)
            && self.perfect(&Self::union(a, b))
    }

    pub fn is_partition(&self, classes: &[Vec<usize>], kind: OracleKind) -> bool {
        classes.iter().enumerate().all(|(i, a)| {
            let exempt = kind != OracleKind::Gc && a.len() == 1 && self.dominates(a);
            if exempt {
                return true;
            }
            if kind == OracleKind::Gc && self.is_gds(a) {
                return false;
            }
            classes.iter().enumerate().any(|(j, b)| {
                j != i
                    && match kind {
                        OracleKind::Gc => self.gc_pair(a, b),
                        OracleKind::C => self.c_pair(a, b),
                        OracleKind::Prc => self.prc_pair(a, b),
                    }
            })
        })
    }

    /// Largest valid partition size, or `None` if no partition is valid.
    pub fn max(&self, kind: OracleKind) -> Option<usize> {
        let mut best = None;
        let mut labels = vec![0usize; self.n];
        self.sweep(1, &mut labels, &mut |classes| {
            if !matches!(best, Some(b) if classes.len() <= b) && self.is_partition(classes, kind) {
                best = Some(classes.len());
            }
        });
        best
    }

    /// Calls `f` on every set partition, classes in order of least element.
    pub fn sweep(&self, i: usize, labels: &mut Vec<usize>, f: &mut dyn FnMut(&[Vec<usize>])) {
        if self.n == 0 {
            return;
        }
        if i == self.n {
            let k = labels.iter().max().unwrap() + 1;
            let mut classes = vec![Vec::new(); k];
            for (v, &l) in labels.iter().enumerate() {
                classes[l].push(v);
            }
            f(&classes);
            return;
        }
        let k = labels[..i].iter().max().unwrap() + 1;
        for l in 0..=k {
            labels[i] = l;
            self.sweep(i + 1, labels, f);
        }
    }
}
