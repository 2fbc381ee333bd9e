//! Named graph families, their known `GC` values, and the partitions that
//! realise them.
//!
//! Vertex labels per family:
//!
//! | family | labels |
//! |---|---|
//! | `path:n`, `cycle:n` | `0..n` in order |
//! | `kbip:r,s` | sides `0..r` and `r..r+s` |
//! | `multipartite:n1,..` | parts consecutive, in the given order |
//! | `wheel:n`, `fan:n` | hub `0`, rim or path `1..=n` |
//! | `dstar:p,q` | `a = 0` with `p` leaves, `b = 1` with `q` leaves, `a`'s leaves first |
//! | `spider:l,x` | centre `0`, middles `1..=l`, leg ends `l+1..=2l`, then `x` leaves on the centre |
//! | `gk:k` | `u = 0`, `v_i = i`, `w_i = k + i` |
//! | `t1:r`, `t2:r,s,m` | sides `0..r` and `r..r+s`; vertex `i` loses its edge to `r + i` for `i < m` |
//! | `u5_*`, `u4_*`, `u3_*` | cycle `a, b, c, ..` first, then leaves grouped by support in cycle order |
//!
//! The unicyclic variants are reconstructed from the theorem statements
//! alone; their pictures are not available, so some shapes are inferred.
//! `u3_10:k` is a triangle `0 1 2`, a vertex `3` adjacent to `0` and to a
//! vertex `4` carrying `k` leaves. `u3_14:k,m` adds `m` leaves on `0`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Unicyclic {
    U5_1 { na: usize },
    U5_2 { na: usize, ne: usize },
    U5_3 { na: usize, nb: usize, ne: usize },
    U5_4 { nb: usize, ne: usize },
    U4_1 { na: usize },
    U4_2 { na: usize, nb: usize },
    U4_3 { na: usize, nc: usize },
    U3_1 { na: usize },
    U3_2 { nb: usize, nc: usize },
    U3_3 { na: usize, nb: usize, nc: usize },
    U3_10 { k: usize },
    U3_14 { k: usize, m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { r: usize, s: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Wheel { n: usize },
    Fan { n: usize },
    DoubleStar { p: usize, q: usize },
    Spider { legs: usize, extra: usize },
    Gk { k: usize },
    T1 { r: usize },
    T2 { r: usize, s: usize, matching: usize },
    Unicyclic(Unicyclic),
}

/// A closed-form value of `GC`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Bound {
    Exact(usize),
    AtLeast(usize),
}

impl Bound {
    pub fn value(self) -> usize {
        match self {
            Bound::Exact(v) | Bound::AtLeast(v) => v,
        }
    }

    /// Whether `actual` is consistent with the bound.
    pub fn admits(self, actual: usize) -> bool {
        match self {
            Bound::Exact(v) => actual == v,
            Bound::AtLeast(v) => actual >= v,
        }
    }
}

impl Unicyclic {
    fn tag(self) -> &'static str {
        use Unicyclic::*;
        match self {
            U5_1 { .. } => "u5_1",
            U5_2 { .. } => "u5_2",
            U5_3 { .. } => "u5_3",
            U5_4 { .. } => "u5_4",
            U4_1 { .. } => "u4_1",
            U4_2 { .. } => "u4_2",
            U4_3 { .. } => "u4_3",
            U3_1 { .. } => "u3_1",
            U3_2 { .. } => "u3_2",
            U3_3 { .. } => "u3_3",
            U3_10 { .. } => "u3_10",
            U3_14 { .. } => "u3_14",
        }
    }

    fn params(self) -> Vec<usize> {
        use Unicyclic::*;
        match self {
            U5_1 { na } | U4_1 { na } | U3_1 { na } => vec![na],
            U5_2 { na, ne } => vec![na, ne],
            U5_3 { na, nb, ne } => vec![na, nb, ne],
            U5_4 { nb, ne } => vec![nb, ne],
            U4_2 { na, nb } => vec![na, nb],
            U4_3 { na, nc } => vec![na, nc],
            U3_2 { nb, nc } => vec![nb, nc],
            U3_3 { na, nb, nc } => vec![na, nb, nc],
            U3_10 { k } => vec![k],
            U3_14 { k, m } => vec![k, m],
        }
    }

    fn from_parts(tag: &str, p: &[usize]) -> Option<Unicyclic> {
        use Unicyclic::*;
        Some(match (tag, p) {
            ("u5_1", &[na]) => U5_1 { na },
            ("u5_2", &[na, ne]) => U5_2 { na, ne },
            ("u5_3", &[na, nb, ne]) => U5_3 { na, nb, ne },
            ("u5_4", &[nb, ne]) => U5_4 { nb, ne },
            ("u4_1", &[na]) => U4_1 { na },
            ("u4_2", &[na, nb]) => U4_2 { na, nb },
            ("u4_3", &[na, nc]) => U4_3 { na, nc },
            ("u3_1", &[na]) => U3_1 { na },
            ("u3_2", &[nb, nc]) => U3_2 { nb, nc },
            ("u3_3", &[na, nb, nc]) => U3_3 { na, nb, nc },
            ("u3_10", &[k]) => U3_10 { k },
            ("u3_14", &[k, m]) => U3_14 { k, m },
            _ => return None,
        })
    }

    /// Cycle length and leaf count per cycle vertex.
    fn layout(self) -> Option<(usize, Vec<usize>)> {
        use Unicyclic::*;
        Some(match self {
            U5_1 { na } => (5, vec![na, 0, 0, 0, 0]),
            U5_2 { na, ne } => (5, vec![na, 0, 0, 0, ne]),
            U5_3 { na, nb, ne } => (5, vec![na, nb, 0, 0, ne]),
            U5_4 { nb, ne } => (5, vec![0, nb, 0, 0, ne]),
            U4_1 { na } => (4, vec![na, 0, 0, 0]),
            U4_2 { na, nb } => (4, vec![na, nb, 0, 0]),
            U4_3 { na, nc } => (4, vec![na, 0, nc, 0]),
            U3_1 { na } => (3, vec![na, 0, 0]),
            U3_2 { nb, nc } => (3, vec![0, nb, nc]),
            U3_3 { na, nb, nc } => (3, vec![na, nb, nc]),
            U3_10 { .. } | U3_14 { .. } => return None,
        })
    }
}

impl FamilySpec {
    fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "kbip",
            FamilySpec::CompleteMultipartite { .. } => "multipartite",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::DoubleStar { .. } => "dstar",
            FamilySpec::Spider { .. } => "spider",
            FamilySpec::Gk { .. } => "gk",
            FamilySpec::T1 { .. } => "t1",
            FamilySpec::T2 { .. } => "t2",
            FamilySpec::Unicyclic(u) => u.tag(),
        }
    }

    fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Fan { n } => vec![*n],
            FamilySpec::CompleteBipartite { r, s } => vec![*r, *s],
            FamilySpec::CompleteMultipartite { parts } => parts.clone(),
            FamilySpec::DoubleStar { p, q } => vec![*p, *q],
            FamilySpec::Spider { legs, extra } => vec![*legs, *extra],
            FamilySpec::Gk { k } => vec![*k],
            FamilySpec::T1 { r } => vec![*r],
            FamilySpec::T2 { r, s, matching } => vec![*r, *s, *matching],
            FamilySpec::Unicyclic(u) => u.params(),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => *n,
            FamilySpec::Wheel { n } | FamilySpec::Fan { n } => n + 1,
            FamilySpec::CompleteBipartite { r, s } | FamilySpec::T2 { r, s, .. } => r + s,
            FamilySpec::CompleteMultipartite { parts } => parts.iter().sum(),
            FamilySpec::DoubleStar { p, q } => p + q + 2,
            FamilySpec::Spider { legs, extra } => 1 + 2 * legs + extra,
            FamilySpec::Gk { k } => 2 * k + 1,
            FamilySpec::T1 { r } => 2 * r,
            FamilySpec::Unicyclic(u) => match u {
                Unicyclic::U3_10 { k } => 5 + k,
                Unicyclic::U3_14 { k, m } => 5 + k + m,
                _ => {
                    let (c, leaves) = u.layout().expect("cycle layout");
                    c + leaves.iter().sum::<usize>()
                }
            },
        }
    }

    /// Checks the parameter domain of each family.
    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParams(format!("{self}: {why}")));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n < 1 => return bad("needs n >= 1"),
            FamilySpec::Cycle { n } | FamilySpec::Wheel { n } if *n < 3 => return bad("needs n >= 3"),
            FamilySpec::Fan { n } if *n < 2 => return bad("needs n >= 2"),
            FamilySpec::CompleteBipartite { r, s } if *r < 1 || *s < 1 => return bad("parts must be non-empty"),
            FamilySpec::CompleteMultipartite { parts } if parts.len() < 2 || parts.contains(&0) => {
                return bad("needs at least two non-empty parts")
            }
            FamilySpec::DoubleStar { p, q } if *q < 1 || p < q => return bad("needs p >= q >= 1"),
            FamilySpec::Spider { legs, .. } if *legs < 2 => return bad("needs at least two legs"),
            FamilySpec::Gk { k } if *k < 2 => return bad("needs k >= 2"),
            FamilySpec::T1 { r } if *r < 2 => return bad("needs r >= 2"),
            FamilySpec::T2 { r, s, matching } if *r < 2 || *s < 2 || *matching >= (*r).min(*s) => {
                return bad("needs r, s >= 2 and matching < min(r, s)")
            }
            FamilySpec::Unicyclic(u) => {
                let needs_positive = match u {
                    Unicyclic::U3_14 { k, m } => vec![*k, *m],
                    other => other.params(),
                };
                if needs_positive.contains(&0) {
                    return bad("every support needs at least one leaf");
                }
            }
            _ => {}
        }
        let n = self.order();
        if n > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params().iter().map(usize::to_string).collect();
        write!(f, "{}:{}", self.tag(), p.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (tag, rest) = s.split_once(':').ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let tag = tag.trim().to_ascii_lowercase();
        let params: Vec<usize> = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidParams(format!("`{s}`: parameters must be non-negative integers")))?;
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("`{s}`: {tag} takes {k} parameter(s)")))
            }
        };
        let spec = match tag.as_str() {
            "path" => arity(1).map(|_| FamilySpec::Path { n: params[0] })?,
            "cycle" => arity(1).map(|_| FamilySpec::Cycle { n: params[0] })?,
            "complete" => arity(1).map(|_| FamilySpec::Complete { n: params[0] })?,
            "kbip" => arity(2).map(|_| FamilySpec::CompleteBipartite { r: params[0], s: params[1] })?,
            "multipartite" => FamilySpec::CompleteMultipartite { parts: params },
            "wheel" => arity(1).map(|_| FamilySpec::Wheel { n: params[0] })?,
            "fan" => arity(1).map(|_| FamilySpec::Fan { n: params[0] })?,
            "dstar" => arity(2).map(|_| FamilySpec::DoubleStar { p: params[0], q: params[1] })?,
            "spider" => arity(2).map(|_| FamilySpec::Spider { legs: params[0], extra: params[1] })?,
            "gk" => arity(1).map(|_| FamilySpec::Gk { k: params[0] })?,
            "t1" => arity(1).map(|_| FamilySpec::T1 { r: params[0] })?,
            "t2" => arity(3).map(|_| FamilySpec::T2 { r: params[0], s: params[1], matching: params[2] })?,
            t => match (Unicyclic::from_parts(t, &params), unicyclic_arity(t)) {
                (Some(u), _) => FamilySpec::Unicyclic(u),
                (None, Some(k)) => arity(k).map(|_| unreachable!())?,
                (None, None) => return Err(Error::UnknownFamily(s.to_string())),
            },
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn unicyclic_arity(tag: &str) -> Option<usize> {
    (1..=3).find(|&k| Unicyclic::from_parts(tag, &vec![1; k]).is_some())
}

fn cycle_edges(k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

/// Builds the graph of `spec` with the labelling documented above.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut e: Vec<(usize, usize)> = Vec::new();
    match spec {
        FamilySpec::Path { n } => e.extend((1..*n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { n } => e = cycle_edges(*n),
        FamilySpec::Complete { n } => {
            for u in 0..*n {
                e.extend((u + 1..*n).map(|v| (u, v)));
            }
        }
        FamilySpec::CompleteBipartite { r, s } => {
            for u in 0..*r {
                e.extend((*r..r + s).map(|v| (u, v)));
            }
        }
        FamilySpec::CompleteMultipartite { parts } => {
            let mut part_of = Vec::with_capacity(n);
            for (i, &size) in parts.iter().enumerate() {
                part_of.extend(vec![i; size]);
            }
            for u in 0..n {
                e.extend((u + 1..n).filter(|&v| part_of[u] != part_of[v]).map(|v| (u, v)));
            }
        }
        FamilySpec::Wheel { n } | FamilySpec::Fan { n } => {
            e.extend((1..=*n).map(|v| (0, v)));
            e.extend((1..*n).map(|i| (i, i + 1)));
            if matches!(spec, FamilySpec::Wheel { .. }) {
                e.push((*n, 1));
            }
        }
        FamilySpec::DoubleStar { p, q } => {
            e.push((0, 1));
            e.extend((2..2 + p).map(|v| (0, v)));
            e.extend((2 + p..2 + p + q).map(|v| (1, v)));
        }
        FamilySpec::Spider { legs, extra } => {
            for i in 1..=*legs {
                e.push((0, i));
                e.push((i, legs + i));
            }
            e.extend((2 * legs + 1..2 * legs + 1 + extra).map(|v| (0, v)));
        }
        FamilySpec::Gk { k } => {
            for i in 1..=*k {
                e.push((0, i));
                e.push((i, k + i));
                let next = if i == *k { 1 } else { i + 1 };
                e.push((k + i, k + next));
            }
        }
        FamilySpec::T1 { r } => bipartite_minus_matching(*r, *r, *r, &mut e),
        FamilySpec::T2 { r, s, matching } => bipartite_minus_matching(*r, *s, *matching, &mut e),
        FamilySpec::Unicyclic(u) => match u {
            Unicyclic::U3_10 { k } => unicyclic_off_triangle(*k, 0, &mut e),
            Unicyclic::U3_14 { k, m } => unicyclic_off_triangle(*k, *m, &mut e),
            _ => {
                let (c, leaves) = u.layout().expect("cycle layout");
                e = cycle_edges(c);
                let mut next = c;
                for (v, &count) in leaves.iter().enumerate() {
                    for _ in 0..count {
                        e.push((v, next));
                        next += 1;
                    }
                }
            }
        },
    }
    Graph::from_edge_list(n, &e)
}

fn bipartite_minus_matching(r: usize, s: usize, m: usize, e: &mut Vec<(usize, usize)>) {
    for u in 0..r {
        for v in r..r + s {
            if !(u < m && v == r + u) {
                e.push((u, v));
            }
        }
    }
}

fn unicyclic_off_triangle(k: usize, m: usize, e: &mut Vec<(usize, usize)>) {
    e.extend(cycle_edges(3));
    e.push((0, 3));
    e.push((3, 4));
    e.extend((5..5 + k).map(|v| (4, v)));
    e.extend((5 + k..5 + k + m).map(|v| (0, v)));
}

/// The value of `GC` that the literature states for `spec`.
pub fn closed_form_gc(spec: &FamilySpec) -> Result<Bound> {
    spec.validate()?;
    let n = spec.order();
    let none = || Err(Error::NoKnownFormula(spec.to_string()));
    Ok(match spec {
        FamilySpec::Path { n } => Bound::Exact(match n {
            1 => return none(),
            2..=4 => *n,
            5 => 4,
            6..=9 => 5,
            _ => 6,
        }),
        FamilySpec::Cycle { n } => Bound::Exact(match n {
            3 => 2,
            4 | 5 => 4,
            7 => 5,
            _ => 6,
        }),
        FamilySpec::Complete { n } if *n >= 2 => Bound::Exact(2),
        FamilySpec::Complete { .. } => return none(),
        FamilySpec::CompleteBipartite { r, s } => Bound::Exact(r + s),
        FamilySpec::CompleteMultipartite { parts } => {
            let hi = *parts.iter().max().expect("parts");
            let lo = *parts.iter().min().expect("parts");
            if parts.len() == 2 {
                Bound::Exact(hi + lo)
            } else {
                Bound::AtLeast(hi + lo)
            }
        }
        FamilySpec::Wheel { n } | FamilySpec::Fan { n } => Bound::Exact(n - 1),
        FamilySpec::DoubleStar { p: 1, q: 1 } => Bound::Exact(4),
        FamilySpec::DoubleStar { p, .. } => Bound::Exact(p + 2),
        FamilySpec::Spider { legs, .. } => Bound::Exact(legs + 2),
        FamilySpec::Gk { .. } => return none(),
        FamilySpec::T1 { .. } | FamilySpec::T2 { .. } => Bound::Exact(n),
        FamilySpec::Unicyclic(u) => Bound::Exact(match *u {
            Unicyclic::U5_1 { .. } | Unicyclic::U5_4 { .. } | Unicyclic::U4_3 { .. } => n - 1,
            Unicyclic::U5_2 { na, ne } => 4 + na.max(ne),
            Unicyclic::U5_3 { nb, ne, .. } => nb + ne + 4,
            Unicyclic::U4_1 { na: 1 } => 5,
            Unicyclic::U4_1 { .. } => n - 1,
            Unicyclic::U4_2 { na: 1, nb: 1 } => 5,
            Unicyclic::U4_2 { na, nb } => na.max(nb) + 3,
            Unicyclic::U3_1 { .. } | Unicyclic::U3_2 { .. } | Unicyclic::U3_10 { .. } | Unicyclic::U3_14 { .. } => {
                n - 1
            }
            Unicyclic::U3_3 { na, nb, nc } => {
                let mut c = [na, nb, nc];
                c.sort_unstable();
                c[2] + c[1] + 2
            }
        }),
    })
}

/// Builds a partition from explicit classes, every other vertex alone.
fn with_singletons(n: usize, classes: &[Vec<usize>]) -> Result<Partition> {
    let mut out: Vec<VertexSet> = Vec::new();
    let mut used = VertexSet::empty(n);
    for c in classes {
        let s = VertexSet::from_vertices(n, c.iter().copied())?;
        used = used | s;
        out.push(s);
    }
    out.extend((0..n).filter(|&v| !used.contains(v)).map(|v| VertexSet::singleton(n, v)));
    Partition::new(n, out)
}

/// Leaf labels of the cycle vertex `v` in a layout-based unicyclic graph.
fn leaves_of(u: Unicyclic, v: usize) -> Vec<usize> {
    let (c, leaves) = u.layout().expect("cycle layout");
    let start = c + leaves[..v].iter().sum::<usize>();
    (start..start + leaves[v]).collect()
}

fn union(mut a: Vec<usize>, b: &[usize]) -> Vec<usize> {
    a.extend_from_slice(b);
    a
}

/// The partition used to prove the lower half of the closed form.
pub fn proof_partition(spec: &FamilySpec) -> Result<Partition> {
    let g = generate(spec)?;
    let n = g.n();
    let none = || Err(Error::NoKnownConstruction(spec.to_string()));
    match spec {
        FamilySpec::Complete { n } if *n >= 2 => with_singletons(*n, &[(1..*n).collect()]),
        FamilySpec::CompleteBipartite { .. } | FamilySpec::T1 { .. } | FamilySpec::T2 { .. } => {
            Ok(Partition::singletons(n))
        }
        FamilySpec::CompleteMultipartite { parts } => multipartite_partition(parts),
        FamilySpec::Wheel { n: 3 } => with_singletons(4, &[vec![1, 2, 3]]),
        FamilySpec::Wheel { n: 4 } => with_singletons(5, &[vec![0, 1], vec![3, 4]]),
        FamilySpec::Wheel { n: r } => with_singletons(n, &[vec![0, 1], vec![3, r - 1]]),
        FamilySpec::Fan { n: 2 | 3 } => none(),
        FamilySpec::Fan { n: r } => with_singletons(n, &[vec![0, 1], vec![3, *r]]),
        FamilySpec::DoubleStar { p: 1, q: 1 } => Ok(Partition::singletons(4)),
        FamilySpec::DoubleStar { p, q } => {
            // {b}, {a} with b's leaves, then a's leaves alone
            let mut big = vec![0];
            big.extend(2 + p..2 + p + q);
            with_singletons(n, &[vec![1], big])
        }
        FamilySpec::Spider { legs, extra } => {
            let mut mid: Vec<usize> = (1..=*legs).collect();
            mid.extend(2 * legs + 1..2 * legs + 1 + extra);
            with_singletons(n, &[mid])
        }
        FamilySpec::Gk { k } => with_singletons(n, &[(1..=*k).collect()]),
        FamilySpec::Unicyclic(u) => unicyclic_partition(*u, n),
        _ => none(),
    }
}

fn multipartite_partition(parts: &[usize]) -> Result<Partition> {
    let n: usize = parts.iter().sum();
    let mut order: Vec<usize> = (0..parts.len()).collect();
    // largest part first, smallest last; ties keep input order
    order.sort_by_key(|&i| std::cmp::Reverse(parts[i]));
    let offsets: Vec<usize> = parts.iter().scan(0, |acc, &p| Some(std::mem::replace(acc, *acc + p))).collect();
    let smallest = *order.last().expect("parts");
    let nm = parts[smallest];
    let mut classes: Vec<Vec<usize>> = (0..nm).map(|j| vec![offsets[smallest] + j]).collect();
    for &i in &order[1..order.len() - 1] {
        for t in 0..parts[i] {
            classes[t.min(nm - 1)].push(offsets[i] + t);
        }
    }
    with_singletons(n, &classes)
}

fn unicyclic_partition(u: Unicyclic, n: usize) -> Result<Partition> {
    use Unicyclic::*;
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    match u {
        U5_1 { .. } => with_singletons(n, &[vec![a, d]]),
        U5_4 { .. } => with_singletons(n, &[vec![b, e]]),
        U5_2 { na, ne } if na >= ne => with_singletons(n, &[union(vec![a, d], &leaves_of(u, e))]),
        U5_2 { .. } => with_singletons(n, &[union(vec![e, b], &leaves_of(u, a))]),
        U5_3 { .. } => with_singletons(n, &[union(vec![b, e], &leaves_of(u, a))]),
        U4_1 { na: 1 } => Ok(Partition::singletons(n)),
        U4_1 { .. } | U4_3 { .. } => with_singletons(n, &[vec![a, c]]),
        U4_2 { na: 1, nb: 1 } => with_singletons(n, &[union(leaves_of(u, a), &leaves_of(u, b))]),
        U4_2 { na, nb } if na >= nb => with_singletons(n, &[union(vec![a, c], &leaves_of(u, b))]),
        U4_2 { .. } => with_singletons(n, &[union(vec![b, d], &leaves_of(u, a))]),
        U3_1 { .. } | U3_2 { .. } => with_singletons(n, &[vec![b, c]]),
        U3_3 { na, nb, nc } => {
            // N(x) for the support x with the fewest leaves
            let counts = [na, nb, nc];
            let x = (0..3).min_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("three supports");
            let mut class: Vec<usize> = (0..3).filter(|&i| i != x).collect();
            class.extend(leaves_of(u, x));
            with_singletons(n, &[class])
        }
        U3_10 { .. } | U3_14 { .. } => with_singletons(n, &[vec![0, 4]]),
    }
}

/// Membership in the complete-bipartite-minus-matching families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Membership {
    T1 { r: usize },
    T2 { r: usize, s: usize, matching: usize },
}

/// Whether `g` is `K_{r,s}` minus a matching of one of the two allowed
/// shapes. Sides are reported with `r <= s`.
pub fn is_t1_or_t2(g: &Graph) -> Option<Membership> {
    let comps = g.components();
    if comps.len() > 2 || !g.is_bipartite() {
        return None;
    }
    let n = g.n();
    // each component has two colourings; fix the first
    let base: Vec<(VertexSet, VertexSet)> = comps
        .iter()
        .map(|&c| {
            let h = g.induced(c).expect("component");
            let (x, _) = h.bipartition().expect("bipartite");
            let members = c.to_vec();
            let side_x = VertexSet::from_vertices(n, x.iter().map(|i| members[i])).expect("in range");
            (side_x, c - side_x)
        })
        .collect();
    let choices = if base.len() == 2 { 2 } else { 1 };
    let mut best = None;
    for flip in 0..choices {
        let (mut x, mut y) = base[0];
        if let Some(&(x2, y2)) = base.get(1) {
            if flip == 0 {
                x = x | x2;
                y = y | y2;
            } else {
                x = x | y2;
                y = y | x2;
            }
        }
        if let Some(m) = classify_sides(g, x, y) {
            best = Some(m);
            break;
        }
    }
    best
}

fn classify_sides(g: &Graph, x: VertexSet, y: VertexSet) -> Option<Membership> {
    let (x, y) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let (r, s) = (x.len(), y.len());
    if r < 2 {
        return None;
    }
    let mut missing = 0;
    for v in x {
        let gone = (y - g.neighbors(v)).len();
        if gone > 1 {
            return None;
        }
        missing += gone;
    }
    if y.iter().any(|v| (x - g.neighbors(v)).len() > 1) {
        return None;
    }
    if r == s && missing == r {
        Some(Membership::T1 { r })
    } else if missing < r {
        Some(Membership::T2 { r, s, matching: missing })
    } else {
        None
    }
}

/// Stars `K_{1,m}` with `m >= 1`.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// Connected unicyclic graphs whose cycle has length `cycle_len` and whose
/// radius is at most `radius_cap`, one per isomorphism class, in order of
/// increasing order from the bare cycle up to `max_n`.
pub fn enumerate_unicyclic(cycle_len: usize, max_n: usize, radius_cap: usize) -> Result<Vec<Graph>> {
    if !(3..=5).contains(&cycle_len) {
        return Err(Error::InvalidParams(format!("cycle length {cycle_len} is not 3, 4 or 5")));
    }
    if max_n > 12 {
        return Err(Error::InvalidParams(format!("max_n {max_n} exceeds 12")));
    }
    Ok(crate::enumerate::unicyclic_upto(cycle_len, max_n, radius_cap).into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::{verify_partition, Kind};

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["path:5", "kbip:2,3", "multipartite:3,2,2", "u5_2:2,1", "u3_14:1,2", "t2:3,4,1"] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert!(matches!("blob:3".parse::<FamilySpec>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("wheel:2".parse::<FamilySpec>(), Err(Error::InvalidParams(_))));
        assert!(matches!("t2:2,3,2".parse::<FamilySpec>(), Err(Error::InvalidParams(_))));
        assert!(matches!("u5_2:1".parse::<FamilySpec>(), Err(Error::InvalidParams(_))));
        assert!(matches!("dstar:1,2".parse::<FamilySpec>(), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn generator_shapes() {
        let g4 = generate(&spec("gk:4")).unwrap();
        assert_eq!((g4.n(), g4.edge_count(), g4.max_degree()), (9, 12, 4));
        let t1 = generate(&spec("t1:3")).unwrap();
        assert!(t1.is_bipartite());
        assert!((0..6).all(|v| t1.degree(v) == 2));
        assert!(t1.is_connected());
        let u = generate(&spec("u5_2:2,1")).unwrap();
        assert_eq!(u.n(), 8);
        assert_eq!(u.neighbors(0).to_vec(), vec![1, 4, 5, 6]);
        assert_eq!(u.neighbors(4).to_vec(), vec![0, 3, 7]);
        let w = generate(&spec("wheel:5")).unwrap();
        assert_eq!(w.degree(0), 5);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_gc(&spec("path:9")).unwrap(), Bound::Exact(5));
        assert_eq!(closed_form_gc(&spec("wheel:6")).unwrap(), Bound::Exact(5));
        assert_eq!(closed_form_gc(&spec("dstar:3,2")).unwrap(), Bound::Exact(5));
        assert_eq!(closed_form_gc(&spec("u3_3:3,2,1")).unwrap(), Bound::Exact(7));
        assert_eq!(closed_form_gc(&spec("multipartite:3,2,2")).unwrap(), Bound::AtLeast(5));
        assert!(matches!(closed_form_gc(&spec("gk:3")), Err(Error::NoKnownFormula(_))));
    }

    #[test]
    fn proof_partitions_verify() {
        for s in [
            "complete:5",
            "kbip:2,3",
            "multipartite:3,2,2",
            "multipartite:4,3,2,2",
            "wheel:3",
            "wheel:4",
            "wheel:6",
            "fan:4",
            "fan:6",
            "dstar:3,2",
            "dstar:1,1",
            "spider:3,1",
            "t1:3",
            "t2:3,3,1",
            "u5_1:2",
            "u5_2:1,3",
            "u5_3:1,2,1",
            "u5_4:1,1",
            "u4_1:1",
            "u4_1:2",
            "u4_2:1,1",
            "u4_2:1,3",
            "u4_3:1,2",
            "u3_1:2",
            "u3_2:1,2",
            "u3_3:1,2,3",
            "u3_10:2",
            "u3_14:1,1",
        ] {
            let fs = spec(s);
            let g = generate(&fs).unwrap();
            let p = proof_partition(&fs).unwrap();
            assert!(verify_partition(&g, &p, Kind::Gc).unwrap().valid, "{s}: {:?}", p.to_lists());
            assert!(closed_form_gc(&fs).unwrap().admits(p.len()), "{s}: size {}", p.len());
        }
    }

    #[test]
    fn membership() {
        let c6 = generate(&spec("cycle:6")).unwrap();
        assert_eq!(is_t1_or_t2(&c6), Some(Membership::T1 { r: 3 }));
        let k23 = generate(&spec("kbip:2,3")).unwrap();
        assert_eq!(is_t1_or_t2(&k23), Some(Membership::T2 { r: 2, s: 3, matching: 0 }));
        assert_eq!(is_t1_or_t2(&generate(&spec("cycle:5")).unwrap()), None);
        let two_k2 = generate(&spec("t1:2")).unwrap();
        assert_eq!(is_t1_or_t2(&two_k2), Some(Membership::T1 { r: 2 }));
        assert_eq!(is_t1_or_t2(&generate(&spec("path:4")).unwrap()), Some(Membership::T2 { r: 2, s: 2, matching: 1 }));
        assert!(is_star(&generate(&spec("kbip:1,4")).unwrap()));
        assert!(!is_star(&generate(&spec("path:4")).unwrap()));
    }

    #[test]
    fn unicyclic_corpus_is_clean() {
        for c in 3..=5 {
            let all = enumerate_unicyclic(c, 9, 2).unwrap();
            for (i, g) in all.iter().enumerate() {
                assert!(g.is_connected());
                assert_eq!(g.edge_count(), g.n());
                assert_eq!(g.girth(), crate::graph::Girth::Cycle(c));
                assert!(g.metrics().radius().unwrap() <= 2);
                for h in &all[..i] {
                    assert!(!crate::iso::is_isomorphic(g, h));
                }
            }
        }
        let six: Vec<_> = enumerate_unicyclic(5, 6, 2).unwrap().into_iter().filter(|g| g.n() == 6).collect();
        assert_eq!(six.len(), 1);
        assert!(enumerate_unicyclic(6, 8, 2).is_err());
        assert!(enumerate_unicyclic(3, 13, 2).is_err());
    }
}
