//! Sweeps that compare exact computations against the published results.
//!
//! Every check produces one row per instance. A row passes only when the
//! computation finished and agreed; budget exhaustion gives an
//! `inconclusive` row, and disagreements with a formula for an inferred
//! family shape give a `finding` rather than a failure.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::coalition::{count_gc_partners, gc_partner_bound, verify_partition, Kind};
use crate::domination::global_domatic;
use crate::enumerate::{
    connected_graphs, connected_graphs_upto, connected_radius_at_least_3, girth_at_least_6, set_partitions, trees_upto,
    unicyclic_upto,
};
use crate::error::{Error, Result};
use crate::families::{closed_form_gc, generate, is_star, is_t1_or_t2, proof_partition, FamilySpec};
use crate::format::to_graph6;
use crate::graph::{Graph, TreeClass};
use crate::partition::Partition;
use crate::solver::{construct_center_partition, construct_gc_from_domatic, max_partition, SolveOptions};

macro_rules! theorems {
    ($($variant:ident => $name:literal, $default:expr, $about:literal;)*) => {
        /// The checks available to [`check_theorem`].
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
        #[serde(rename_all = "snake_case")]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }

            /// Largest order checked when the caller does not choose one.
            pub fn default_max_n(self) -> usize {
                match self {
                    $(TheoremId::$variant => $default,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $about,)*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<TheoremId> {
                match s.to_ascii_lowercase().as_str() {
                    $($name => Ok(TheoremId::$variant),)*
                    _ => Err(Error::UnknownTheorem(s.to_string())),
                }
            }
        }
    };
}

theorems! {
    GcPaths => "gc_paths", 12, "GC of paths against the path table";
    GcCycles => "gc_cycles", 12, "GC of cycles against the cycle table";
    GcComplete => "gc_complete", 10, "GC(K_n) = 2";
    GcCompleteBipartite => "gc_complete_bipartite", 10, "GC(K_{r,s}) = r + s";
    GcMultipartite => "gc_multipartite", 9, "GC of complete multipartite graphs is at least n_1 + n_m";
    GcWheels => "gc_wheels", 10, "GC(W_n) = n - 1";
    GcFans => "gc_fans", 10, "GC(F_n) = n - 1";
    GcRadius2Trees => "gc_radius2_trees", 11, "radius-2 trees: l + 2 for diameter 4, p + 2 for double stars";
    PartnerBound => "partner_bound", 7, "partner counts in every gc-partition respect the degree bound";
    GcGe2dg => "gc_ge_2dg", 8, "the domatic construction yields a gc-partition with at least 2 d_g classes";
    GcEqCRad3 => "gc_eq_c_rad3", 10, "GC = C for connected graphs of radius at least 3";
    GcEqCGirth6 => "gc_eq_c_girth6", 10, "GC = C for graphs of girth at least 6";
    GcGePrc => "gc_ge_prc", 8, "GC >= PRC, and GC = n iff PRC = n, without full vertices";
    GcComplement => "gc_complement", 8, "GC(G) = GC of the complement";
    TreesGcN => "trees_gc_n", 10, "a tree has GC = n iff it is a star or P4";
    TriangleFreeGcN => "triangle_free_gc_n", 8, "triangle-free: GC = n iff star or in T1 or T2";
    TFamiliesPrc => "t_families_prc", 6, "members of T1 and T2 have PRC = n";
    UnicyclicExact => "unicyclic_exact", 11, "unicyclic closed forms on the reconstructed families";
    CenterBoundUnicyclic => "center_bound_unicyclic", 9, "GC >= n - |N(a)| + 1 via the N(a) partition";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Finding,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    /// Sort key, unique within a report.
    pub key: String,
    /// Family spec or a description of the corpus member.
    pub instance: String,
    pub n: usize,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub detail: String,
    pub graph6: String,
    /// The witness or offending partition, when one exists.
    pub partition: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: TheoremId,
    pub max_n: usize,
    pub summary: Summary,
    pub rows: Vec<Row>,
}

impl Report {
    /// No failures and no inconclusive rows.
    pub fn ok(&self) -> bool {
        self.summary.fail == 0 && self.summary.inconclusive == 0
    }

    /// Rows that are not passes: failures, findings, inconclusive.
    pub fn exceptions(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.status != Status::Pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest order checked; `None` uses the theorem's default.
    pub max_n: Option<usize>,
    pub budget: u64,
    pub threads: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_n: None, budget: crate::solver::DEFAULT_BUDGET, threads: 1 }
    }
}

/// One unit of work: a graph plus how to judge it.
struct Case {
    key: String,
    instance: String,
    graph: Graph,
    judge: Judge,
}

enum Judge {
    /// Solver value against a closed form; `finding` marks inferred shapes.
    Formula {
        spec: FamilySpec,
        finding: bool,
    },
    /// Solver value against a fixed expectation.
    Expect {
        value: usize,
        why: String,
    },
    Domatic,
    GcEqC,
    GcPrc,
    Complement,
    /// `GC = n` holds exactly when `member` does.
    FullIff {
        member: bool,
        what: &'static str,
    },
    PrcFull,
    PartnerSweep,
    PartnerSharp,
    Center {
        a: usize,
    },
}

struct Ctx {
    solve: SolveOptions,
}

impl Ctx {
    fn solve(&self, g: &Graph, kind: Kind) -> Result<crate::solver::SolveResult> {
        // the thread pool is used across instances, not inside one
        max_partition(g, kind, &SolveOptions { threads: 1, ..self.solve })
    }
}

fn row(case: &Case, status: Status, expected: String, actual: String, detail: String, p: Option<&Partition>) -> Row {
    Row {
        key: case.key.clone(),
        instance: case.instance.clone(),
        n: case.graph.n(),
        status,
        expected,
        actual,
        detail,
        graph6: to_graph6(&case.graph),
        partition: p.map(Partition::to_lists),
    }
}

fn inconclusive(case: &Case, e: &Error) -> Row {
    row(case, Status::Inconclusive, String::new(), String::new(), e.to_string(), None)
}

/// Exact value or an inconclusive row.
macro_rules! exact {
    ($ctx:expr, $case:expr, $g:expr, $kind:expr) => {
        match $ctx.solve($g, $kind) {
            Ok(r) if r.exact => r,
            Ok(_) => return inconclusive($case, &Error::BudgetExhausted { budget: $ctx.solve.budget }),
            Err(e @ Error::BudgetExhausted { .. }) => return inconclusive($case, &e),
            Err(e) => return row($case, Status::Fail, String::new(), String::new(), e.to_string(), None),
        }
    };
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn run_case(ctx: &Ctx, case: &Case) -> Row {
    let g = &case.graph;
    let n = g.n();
    match &case.judge {
        Judge::Formula { spec, finding } => {
            let bound = match closed_form_gc(spec) {
                Ok(b) => b,
                Err(e) => return row(case, Status::Fail, String::new(), String::new(), e.to_string(), None),
            };
            let r = exact!(ctx, case, g, Kind::Gc);
            let verified = verify_partition(g, &r.witness, Kind::Gc).map(|v| v.valid).unwrap_or(false);
            let expected = match bound {
                crate::families::Bound::Exact(v) => v.to_string(),
                crate::families::Bound::AtLeast(v) => format!(">={v}"),
            };
            let mut detail = String::new();
            let status = if !verified {
                detail = "solver witness rejected by the verifier".into();
                Status::Fail
            } else if bound.admits(r.value) {
                Status::Pass
            } else if *finding {
                detail = "inferred family shape disagrees with the formula".into();
                Status::Finding
            } else {
                Status::Fail
            };
            if status == Status::Pass {
                if let Ok(p) = proof_partition(spec) {
                    let ok = verify_partition(g, &p, Kind::Gc).map(|v| v.valid).unwrap_or(false);
                    if !ok || !bound.admits(p.len()) {
                        return row(
                            case,
                            Status::Fail,
                            expected,
                            r.value.to_string(),
                            "construction invalid".into(),
                            Some(&p),
                        );
                    }
                    detail = format!("construction of size {} verified", p.len());
                }
            }
            row(case, status, expected, r.value.to_string(), detail, Some(&r.witness))
        }
        Judge::Expect { value, why } => {
            let r = exact!(ctx, case, g, Kind::Gc);
            let verified = verify_partition(g, &r.witness, Kind::Gc).map(|v| v.valid).unwrap_or(false);
            let status = pass_if(verified && r.value == *value);
            row(case, status, value.to_string(), r.value.to_string(), why.clone(), Some(&r.witness))
        }
        Judge::Domatic => {
            let dg = global_domatic(g).k;
            match construct_gc_from_domatic(g) {
                Ok(p) => {
                    let ok = verify_partition(g, &p, Kind::Gc).map(|v| v.valid).unwrap_or(false);
                    let status = pass_if(ok && p.len() >= 2 * dg);
                    let detail = if ok { format!("d_g = {dg}") } else { format!("d_g = {dg}; construction invalid") };
                    row(case, status, format!(">={}", 2 * dg), p.len().to_string(), detail, Some(&p))
                }
                Err(e) => row(case, Status::Fail, format!(">={}", 2 * dg), String::new(), e.to_string(), None),
            }
        }
        Judge::GcEqC => {
            let gc = exact!(ctx, case, g, Kind::Gc);
            let c = exact!(ctx, case, g, Kind::C);
            let status = pass_if(gc.value == c.value);
            row(case, status, format!("C = {}", c.value), gc.value.to_string(), String::new(), Some(&gc.witness))
        }
        Judge::GcPrc => {
            let gc = exact!(ctx, case, g, Kind::Gc);
            let prc = match ctx.solve(g, Kind::Prc) {
                Ok(r) if r.exact => Some(r),
                Ok(_) => return inconclusive(case, &Error::BudgetExhausted { budget: ctx.solve.budget }),
                Err(Error::NoPartitionExists(_)) => None,
                Err(e) => return inconclusive(case, &e),
            };
            let prc_value = prc.as_ref().map_or(0, |r| r.value);
            let ge = gc.value >= prc_value;
            let iff = (gc.value == n) == (prc_value == n);
            let detail = match &prc {
                Some(_) => String::new(),
                None => "no prc-partition exists".into(),
            };
            row(case, pass_if(ge && iff), format!("PRC = {prc_value}"), gc.value.to_string(), detail, Some(&gc.witness))
        }
        Judge::Complement => {
            let a = exact!(ctx, case, g, Kind::Gc);
            let b = exact!(ctx, case, &g.complement(), Kind::Gc);
            row(
                case,
                pass_if(a.value == b.value),
                format!("GC(co-G) = {}", b.value),
                a.value.to_string(),
                String::new(),
                Some(&a.witness),
            )
        }
        Judge::FullIff { member, what } => {
            let r = exact!(ctx, case, g, Kind::Gc);
            let full = r.value == n;
            let status = pass_if(full == *member);
            let expected = if *member { format!("{n} ({what})") } else { format!("<{n}") };
            row(case, status, expected, r.value.to_string(), String::new(), Some(&r.witness))
        }
        Judge::PrcFull => {
            let r = exact!(ctx, case, g, Kind::Prc);
            row(case, pass_if(r.value == n), n.to_string(), r.value.to_string(), String::new(), Some(&r.witness))
        }
        Judge::PartnerSweep => partner_sweep(case),
        Judge::PartnerSharp => {
            let p = proof_partition(&"gk:4".parse().expect("spec")).expect("construction");
            let big = p.classes()[0];
            let partners = count_gc_partners(g, &p, 0).unwrap_or(0);
            let bound = gc_partner_bound(g, big).unwrap_or(0);
            let ok = verify_partition(g, &p, Kind::Gc).map(|v| v.valid).unwrap_or(false);
            let status = pass_if(ok && partners == bound && partners == 5);
            row(case, status, format!("bound {bound}"), format!("{partners} partners"), "sharpness".into(), Some(&p))
        }
        Judge::Center { a } => {
            let p = match construct_center_partition(g, *a) {
                Ok(p) => p,
                Err(e) => return row(case, Status::Fail, String::new(), String::new(), e.to_string(), None),
            };
            let valid = verify_partition(g, &p, Kind::Gc).map(|v| v.valid).unwrap_or(false);
            let target = n - g.degree(*a) + 1;
            if !valid {
                return row(
                    case,
                    Status::Pass,
                    format!(">={target}"),
                    "-".into(),
                    "N(a) partition not valid".into(),
                    Some(&p),
                );
            }
            let r = exact!(ctx, case, g, Kind::Gc);
            let status = pass_if(r.value >= target);
            row(case, status, format!(">={target}"), r.value.to_string(), "N(a) partition valid".into(), Some(&p))
        }
    }
}

/// Every gc-partition of `g` against the partner bound.
fn partner_sweep(case: &Case) -> Row {
    let g = &case.graph;
    let mut valid = 0;
    let mut tight = 0;
    for labels in set_partitions(g.n()) {
        let p = Partition::from_labels(&labels).expect("labels");
        if !verify_partition(g, &p, Kind::Gc).map(|v| v.valid).unwrap_or(false) {
            continue;
        }
        valid += 1;
        for (i, &c) in p.classes().iter().enumerate() {
            let partners = count_gc_partners(g, &p, i).expect("class index");
            let bound = gc_partner_bound(g, c).expect("class");
            if partners > bound {
                let detail = format!("class {i} has {partners} partners");
                return row(case, Status::Fail, format!("<={bound}"), partners.to_string(), detail, Some(&p));
            }
            if partners == bound {
                tight += 1;
            }
        }
    }
    let detail = format!("{valid} gc-partitions, {tight} classes at the bound");
    row(case, Status::Pass, "within bound".into(), valid.to_string(), detail, None)
}

fn family_case(key: String, spec: FamilySpec, finding: bool) -> Result<Case> {
    let graph = generate(&spec)?;
    Ok(Case { key, instance: spec.to_string(), graph, judge: Judge::Formula { spec, finding } })
}

fn spec(s: String) -> Result<FamilySpec> {
    s.parse()
}

fn corpus_case(prefix: &str, n: usize, i: usize, graph: Graph, judge: Judge) -> Case {
    let instance = format!("{prefix} #{i}");
    Case { key: format!("n{n:02}/{i:06}"), instance, graph, judge }
}

fn cases(id: TheoremId, max_n: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    match id {
        TheoremId::GcPaths => {
            for n in 2..=max_n {
                out.push(family_case(format!("{n:03}"), spec(format!("path:{n}"))?, false)?);
            }
        }
        TheoremId::GcCycles => {
            for n in 3..=max_n {
                out.push(family_case(format!("{n:03}"), spec(format!("cycle:{n}"))?, false)?);
            }
        }
        TheoremId::GcComplete => {
            for n in 2..=max_n {
                out.push(family_case(format!("{n:03}"), spec(format!("complete:{n}"))?, false)?);
            }
        }
        TheoremId::GcCompleteBipartite => {
            for r in 1..max_n {
                for s in r..=max_n - r {
                    out.push(family_case(format!("{r:03}-{s:03}"), spec(format!("kbip:{r},{s}"))?, false)?);
                }
            }
        }
        TheoremId::GcMultipartite => {
            let mut parts = Vec::new();
            multipartite_shapes(max_n, max_n, &mut Vec::new(), &mut parts);
            for p in parts {
                let key = p.iter().map(|x| format!("{x:02}")).collect::<Vec<_>>().join("-");
                let s = p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                out.push(family_case(key, spec(format!("multipartite:{s}"))?, false)?);
            }
        }
        TheoremId::GcWheels => {
            for n in 3..max_n {
                out.push(family_case(format!("{n:03}"), spec(format!("wheel:{n}"))?, false)?);
            }
        }
        TheoremId::GcFans => {
            for n in 2..max_n {
                out.push(family_case(format!("{n:03}"), spec(format!("fan:{n}"))?, false)?);
            }
        }
        TheoremId::GcRadius2Trees => {
            for (idx, level) in trees_upto(max_n).into_iter().enumerate() {
                let n = idx + 1;
                for (i, t) in level.into_iter().enumerate() {
                    let (value, why) = match t.classify_radius2_tree()? {
                        TreeClass::Diam4 { ell, .. } => (ell + 2, format!("diameter 4, l = {ell}")),
                        TreeClass::DoubleStar { p, q } => (p + 2, format!("double star S({p},{q})")),
                        _ => continue,
                    };
                    out.push(corpus_case("tree", n, i, t, Judge::Expect { value, why }));
                }
            }
        }
        TheoremId::PartnerBound => {
            for (idx, level) in connected_graphs_upto(max_n).into_iter().enumerate().skip(1) {
                for (i, g) in level.into_iter().enumerate() {
                    out.push(corpus_case("connected", idx + 1, i, g, Judge::PartnerSweep));
                }
            }
            let g4 = generate(&spec("gk:4".into())?)?;
            out.push(Case { key: "z/gk4".into(), instance: "gk:4".into(), graph: g4, judge: Judge::PartnerSharp });
        }
        TheoremId::GcGe2dg => {
            for (idx, level) in connected_graphs_upto(max_n).into_iter().enumerate().skip(1) {
                for (i, g) in level.into_iter().enumerate() {
                    out.push(corpus_case("connected", idx + 1, i, g, Judge::Domatic));
                }
            }
        }
        TheoremId::GcEqCRad3 => {
            for n in 1..=max_n {
                for (i, g) in connected_radius_at_least_3(n).into_iter().enumerate() {
                    out.push(corpus_case("radius>=3", n, i, g, Judge::GcEqC));
                }
            }
        }
        TheoremId::GcEqCGirth6 => {
            for n in 6..=max_n {
                for (i, g) in girth_at_least_6(n).into_iter().enumerate() {
                    out.push(corpus_case("girth>=6", n, i, g, Judge::GcEqC));
                }
            }
        }
        TheoremId::GcGePrc => {
            for (idx, level) in connected_graphs_upto(max_n).into_iter().enumerate().skip(1) {
                for (i, g) in level.into_iter().enumerate() {
                    if g.full_vertices().is_empty() {
                        out.push(corpus_case("connected", idx + 1, i, g, Judge::GcPrc));
                    }
                }
            }
        }
        TheoremId::GcComplement => {
            for n in 2..=max_n {
                for (i, g) in connected_graphs(n).into_iter().enumerate() {
                    out.push(corpus_case("connected", n, i, g, Judge::Complement));
                }
            }
        }
        TheoremId::TreesGcN => {
            for (idx, level) in trees_upto(max_n).into_iter().enumerate().skip(1) {
                let n = idx + 1;
                for (i, t) in level.into_iter().enumerate() {
                    let p4 = n == 4 && t.max_degree() == 2;
                    let member = is_star(&t) || p4;
                    out.push(corpus_case("tree", n, i, t, Judge::FullIff { member, what: "star or P4" }));
                }
            }
        }
        TheoremId::TriangleFreeGcN => {
            for n in 4..=max_n {
                for (i, g) in connected_graphs(n).into_iter().enumerate() {
                    if g.is_triangle_free() {
                        let member = is_star(&g) || is_t1_or_t2(&g).is_some();
                        out.push(corpus_case(
                            "triangle-free",
                            n,
                            i,
                            g,
                            Judge::FullIff { member, what: "star, T1 or T2" },
                        ));
                    }
                }
            }
        }
        TheoremId::TFamiliesPrc => {
            for r in 2..=max_n / 2 {
                let s = spec(format!("t1:{r}"))?;
                out.push(Case {
                    key: format!("t1/{r:02}"),
                    instance: s.to_string(),
                    graph: generate(&s)?,
                    judge: Judge::PrcFull,
                });
            }
            for r in 2..max_n {
                for s in r..=max_n - r {
                    for m in 0..r.min(s) {
                        let sp = spec(format!("t2:{r},{s},{m}"))?;
                        let key = format!("t2/{r:02}-{s:02}-{m:02}");
                        out.push(Case { key, instance: sp.to_string(), graph: generate(&sp)?, judge: Judge::PrcFull });
                    }
                }
            }
        }
        TheoremId::UnicyclicExact => {
            for s in unicyclic_specs(max_n) {
                let key = s.to_string();
                out.push(family_case(key, s, true)?);
            }
        }
        TheoremId::CenterBoundUnicyclic => {
            for c in 3..=5 {
                for level in unicyclic_upto(c, max_n, 2) {
                    for (i, g) in level.into_iter().enumerate() {
                        let n = g.n();
                        for a in g.metrics().central_vertices()? {
                            let instance = format!("cycle {c} #{i}, a = {a}");
                            let key = format!("c{c}/n{n:02}/{i:05}/a{a:02}");
                            out.push(Case { key, instance, graph: g.clone(), judge: Judge::Center { a } });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Part sizes in non-increasing order, at least three parts, summing to at
/// most `max_n`.
fn multipartite_shapes(max_n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let used: usize = cur.iter().sum();
    if cur.len() >= 3 {
        out.push(cur.clone());
    }
    for x in 1..=cap.min(max_n - used) {
        cur.push(x);
        multipartite_shapes(max_n, x, cur, out);
        cur.pop();
    }
}

/// Every reconstructed unicyclic family instance of order at most `max_n`.
pub fn unicyclic_specs(max_n: usize) -> Vec<FamilySpec> {
    let shapes: &[(&str, usize)] = &[
        ("u5_1", 1),
        ("u5_2", 2),
        ("u5_3", 3),
        ("u5_4", 2),
        ("u4_1", 1),
        ("u4_2", 2),
        ("u4_3", 2),
        ("u3_1", 1),
        ("u3_2", 2),
        ("u3_3", 3),
        ("u3_10", 1),
        ("u3_14", 2),
    ];
    let mut out = Vec::new();
    for &(tag, arity) in shapes {
        let mut params: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..arity {
            params = params.into_iter().flat_map(|p| (1..=max_n).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        for p in params {
            let text = p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            if let Ok(s) = format!("{tag}:{text}").parse::<FamilySpec>() {
                if s.order() <= max_n {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Runs one check over all instances up to the chosen order.
pub fn check_theorem(id: TheoremId, opts: &CheckOptions) -> Result<Report> {
    let max_n = opts.max_n.unwrap_or_else(|| id.default_max_n());
    if max_n > 12 {
        return Err(Error::InvalidParams(format!("max_n {max_n} is beyond desk scale (12)")));
    }
    let cases = cases(id, max_n)?;
    let ctx = Ctx { solve: SolveOptions { budget: opts.budget, threads: 1 } };
    let mut rows: Vec<Row> = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
        pool.install(|| cases.par_iter().map(|c| run_case(&ctx, c)).collect())
    } else {
        cases.iter().map(|c| run_case(&ctx, c)).collect()
    };
    rows.sort_by(|a, b| a.key.cmp(&b.key));
    let mut summary = Summary::default();
    for r in &rows {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Finding => summary.finding += 1,
            Status::Inconclusive => summary.inconclusive += 1,
        }
    }
    Ok(Report { theorem: id, max_n, summary, rows })
}
