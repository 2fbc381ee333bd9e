//! Command-line front end for `globcoal`.
//!
//! [`run`] takes the full argument vector and returns the exit code and the
//! text destined for stdout, so the binary is a two-line wrapper and tests
//! can drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 malformed input or usage error, 2 a partition or
//! theorem check came out invalid, 3 the search budget ran out.

use std::fmt::Write as _;
use std::io;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use globcoal::check::{self, Report};
use globcoal::format::{to_dot, to_edge_list_text, to_graph6, DotOptions};
use globcoal::{
    build_gcg, closed_form_gc, construct_center_partition, construct_gc_from_domatic, global_domatic, max_partition,
    proof_partition, verify_partition, CheckOptions, Graph, Kind, Partition, SolveOptions, TheoremId, DEFAULT_BUDGET,
};

mod input;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "globcoal", version, about = "Global coalitions in small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest c-, gc- or prc-partition, computed exactly.
    Compute {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "gc")]
        kind: Kind,
        #[command(flatten)]
        out: Output,
    },
    /// Check a partition against one of the three definitions.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "gc")]
        kind: Kind,
        /// JSON list of classes, `file:<path>`, or `singletons`.
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        out: Output,
    },
    /// Build a gc-partition without search.
    Construct {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "domatic")]
        method: Method,
        /// Centre vertex for `--method center`.
        #[arg(long)]
        vertex: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a named family member.
    Family {
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run theorem checks over families and exhaustive corpora.
    Check {
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// The gc-coalition graph of a partition.
    Gcg {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        out: Output,
    },
    /// List graphs of an exhaustive corpus as graph6.
    Enumerate {
        #[arg(long, value_enum)]
        class: Corpus,
        #[arg(long)]
        n: usize,
        /// Cycle length for `--class unicyclic`.
        #[arg(long)]
        cycle: Option<usize>,
        #[arg(long, default_value_t = 2)]
        radius_cap: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// `file:<path>` (edge list), `g6:<string>` or `<family>:<params>`.
    #[arg(long)]
    graph: Option<String>,
    /// `<family>:<params>`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Which {
    #[arg(long)]
    theorem: Option<String>,
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Search node limit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    threads: u64,
    /// Add `elapsed_ms` to JSON output.
    #[arg(long)]
    timing: bool,
    /// Wrap JSON output in a run record.
    #[arg(long)]
    record: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Domatic,
    Center,
    Proof,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Corpus {
    Connected,
    Trees,
    Radius3,
    Girth6,
    Unicyclic,
}

/// A run wrapped with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: Vec<String>,
    pub version: String,
    pub wall_ms: u64,
    pub exit_code: i32,
    pub result: Value,
}

/// An error bound for stdout as JSON.
#[derive(Debug)]
pub struct Failure {
    code: String,
    message: String,
    exit: i32,
}

impl Failure {
    fn new(code: &str, message: String) -> Failure {
        Failure { code: code.to_string(), message, exit: EXIT_ERROR }
    }

    fn io(path: &str, e: io::Error) -> Failure {
        Failure::new("io", format!("{path}: {e}"))
    }

    fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

impl From<globcoal::Error> for Failure {
    fn from(e: globcoal::Error) -> Failure {
        let exit = match e {
            globcoal::Error::BudgetExhausted { .. } => EXIT_BUDGET,
            _ => EXIT_ERROR,
        };
        Failure { code: e.code().to_string(), message: e.to_string(), exit }
    }
}

/// What a subcommand produced before formatting.
enum Body {
    Json(Value),
    Text(String),
}

struct Done {
    exit: i32,
    body: Body,
}

impl Done {
    fn json(exit: i32, v: Value) -> Done {
        Done { exit, body: Body::Json(v) }
    }

    fn text(exit: i32, s: String) -> Done {
        Done { exit, body: Body::Text(s) }
    }
}

/// Runs the tool on `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let start = Instant::now();
    let out = cli.command.output();
    let (timing, record) = (out.timing, out.record);
    let format = out.format.unwrap_or(cli.command.default_format());
    if (timing || record) && format != Format::Json {
        let f = Failure::new("invalid_flags", "--timing and --record apply to JSON output only".into());
        return (f.exit, render_json(&f.to_json()));
    }
    let done = match dispatch(cli.command, format) {
        Ok(d) => d,
        Err(f) => Done::json(f.exit, f.to_json()),
    };
    let text = match done.body {
        Body::Text(s) => s,
        Body::Json(mut v) => {
            let wall_ms = start.elapsed().as_millis() as u64;
            if timing {
                if let Value::Object(m) = &mut v {
                    m.insert("elapsed_ms".into(), json!(wall_ms));
                }
            }
            if record {
                let record = RunRecord {
                    command: argv.iter().skip(1).cloned().collect(),
                    version: env!("CARGO_PKG_VERSION").to_string(),
                    wall_ms,
                    exit_code: done.exit,
                    result: v,
                };
                v = serde_json::to_value(record).expect("record serializes");
            }
            render_json(&v)
        }
    };
    (done.exit, text)
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Compute { out, .. }
            | Command::Verify { out, .. }
            | Command::Construct { out, .. }
            | Command::Family { out, .. }
            | Command::Check { out, .. }
            | Command::Gcg { out, .. }
            | Command::Enumerate { out, .. } => out,
        }
    }

    fn default_format(&self) -> Format {
        match self {
            Command::Check { .. } => Format::Csv,
            _ => Format::Json,
        }
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format.to_possible_value().expect("named").get_name().to_string();
    Failure::new("unsupported_format", format!("`{command}` has no {name} output"))
}

fn load(source: &Source) -> Result<input::Input, Failure> {
    match (&source.graph, &source.family) {
        (Some(g), None) => input::graph(g),
        (None, Some(f)) => input::family(f),
        _ => Err(Failure::new("invalid_flags", "give exactly one of --graph and --family".into())),
    }
}

fn solve_options(out: &Output) -> SolveOptions {
    SolveOptions { budget: out.budget, threads: out.threads as usize }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn lists(p: &Partition) -> String {
    serde_json::to_string(p).expect("json")
}

fn dot_with_classes(g: &Graph, p: &Partition, name: &str) -> String {
    let labels: Vec<String> =
        (0..g.n()).map(|v| format!("{v} / {}", p.class_of(v).expect("partition covers the graph"))).collect();
    to_dot(g, &DotOptions { name: Some(name), vertex_labels: Some(&labels) })
}

fn dispatch(command: Command, format: Format) -> Result<Done, Failure> {
    match command {
        Command::Compute { source, kind, out } => compute(&source, kind, &out, format),
        Command::Verify { source, kind, partition, .. } => verify(&source, kind, &partition, format),
        Command::Construct { source, method, vertex, .. } => construct(&source, method, vertex, format),
        Command::Family { spec, .. } => family(&spec, format),
        Command::Check { which, max_n, out } => check(&which, max_n, &out, format),
        Command::Gcg { source, partition, .. } => gcg(&source, &partition, format),
        Command::Enumerate { class, n, cycle, radius_cap, .. } => enumerate(class, n, cycle, radius_cap, format),
    }
}

fn compute(source: &Source, kind: Kind, out: &Output, format: Format) -> Result<Done, Failure> {
    let input = load(source)?;
    let r = max_partition(&input.graph, kind, &solve_options(out))?;
    let exit = if r.exact { EXIT_OK } else { EXIT_BUDGET };
    Ok(match format {
        Format::Json => Done::json(
            exit,
            json!({
                "graph": input.source,
                "n": input.graph.n(),
                "kind": kind,
                "value": r.value,
                "exact": r.exact,
                "nodes_explored": r.nodes_explored,
                "witness": r.witness,
            }),
        ),
        Format::Text => {
            let bound = if r.exact { "" } else { " (lower bound, budget exhausted)" };
            let mut s = format!("{}({}) = {}{bound}\n", kind.as_str().to_uppercase(), input.source, r.value);
            for (i, c) in r.witness.classes().iter().enumerate() {
                writeln!(s, "  class {i}: {c}").unwrap();
            }
            Done::text(exit, s)
        }
        Format::Csv => Done::text(
            exit,
            csv_text(
                &["graph", "n", "kind", "value", "exact", "nodes_explored", "witness"],
                [vec![
                    input.source.clone(),
                    input.graph.n().to_string(),
                    kind.to_string(),
                    r.value.to_string(),
                    r.exact.to_string(),
                    r.nodes_explored.to_string(),
                    lists(&r.witness),
                ]],
            ),
        ),
        Format::Dot => Done::text(exit, dot_with_classes(&input.graph, &r.witness, &input.source)),
    })
}

fn verify(source: &Source, kind: Kind, partition: &str, format: Format) -> Result<Done, Failure> {
    let input = load(source)?;
    let p = input::partition(partition, input.graph.n())?;
    let v = verify_partition(&input.graph, &p, kind)?;
    let exit = if v.valid { EXIT_OK } else { EXIT_INVALID };
    Ok(match format {
        Format::Json => Done::json(
            exit,
            json!({
                "graph": input.source,
                "n": input.graph.n(),
                "kind": kind,
                "partition": p,
                "valid": v.valid,
                "partners": v.partners,
                "violations": v.violations,
            }),
        ),
        Format::Text => {
            let verdict = if v.valid { "valid" } else { "invalid" };
            let mut s = format!("{verdict} {kind}-partition with {} classes\n", p.len());
            for x in &v.violations {
                writeln!(s, "  class {} {}: {:?}", x.class, p.classes()[x.class], x.reason).unwrap();
            }
            Done::text(exit, s)
        }
        Format::Csv => {
            let rows = p.classes().iter().enumerate().map(|(i, c)| {
                let reasons: Vec<String> =
                    v.violations.iter().filter(|x| x.class == i).map(|x| format!("{:?}", x.reason)).collect();
                let partners: Vec<String> = v.partners[i].iter().map(usize::to_string).collect();
                vec![i.to_string(), c.to_string(), partners.join(" "), reasons.join(" ")]
            });
            Done::text(exit, csv_text(&["class", "members", "partners", "violations"], rows.collect::<Vec<_>>()))
        }
        Format::Dot => return Err(unsupported(format, "verify")),
    })
}

fn construct(source: &Source, method: Method, vertex: Option<usize>, format: Format) -> Result<Done, Failure> {
    let input = load(source)?;
    let g = &input.graph;
    let p = match method {
        Method::Domatic => construct_gc_from_domatic(g)?,
        Method::Center => {
            let a = vertex.ok_or_else(|| Failure::new("invalid_flags", "--method center needs --vertex".into()))?;
            construct_center_partition(g, a)?
        }
        Method::Proof => {
            let spec = input
                .family
                .as_ref()
                .ok_or_else(|| Failure::new("invalid_flags", "--method proof needs a family graph source".into()))?;
            proof_partition(spec)?
        }
    };
    let v = verify_partition(g, &p, Kind::Gc)?;
    let exit = if v.valid { EXIT_OK } else { EXIT_INVALID };
    Ok(match format {
        Format::Json => {
            let mut payload = json!({
                "graph": input.source,
                "n": g.n(),
                "method": method,
                "partition": p,
                "classes": p.len(),
                "valid": v.valid,
                "violations": v.violations,
            });
            let extra = match method {
                Method::Domatic => ("global_domatic_number", json!(global_domatic(g).k)),
                Method::Center => ("vertex", json!(vertex)),
                Method::Proof => {
                    let spec = input.family.as_ref().expect("checked above");
                    ("closed_form", json!(closed_form_gc(spec).ok()))
                }
            };
            payload.as_object_mut().expect("object").insert(extra.0.into(), extra.1);
            Done::json(exit, payload)
        }
        Format::Text => {
            let verdict = if v.valid { "valid" } else { "invalid" };
            let mut s = format!("{verdict} gc-partition with {} classes\n", p.len());
            for (i, c) in p.classes().iter().enumerate() {
                writeln!(s, "  class {i}: {c}").unwrap();
            }
            Done::text(exit, s)
        }
        Format::Dot => Done::text(exit, dot_with_classes(g, &p, &input.source)),
        Format::Csv => return Err(unsupported(format, "construct")),
    })
}

fn family(spec: &str, format: Format) -> Result<Done, Failure> {
    let input = input::family(spec)?;
    let spec = input.family.as_ref().expect("family source");
    let g = &input.graph;
    Ok(match format {
        Format::Json => Done::json(
            EXIT_OK,
            json!({
                "spec": input.source,
                "n": g.n(),
                "edges": g.edges(),
                "graph6": to_graph6(g),
                "closed_form": closed_form_gc(spec).ok(),
                "proof_partition": proof_partition(spec).ok(),
            }),
        ),
        Format::Text => Done::text(EXIT_OK, to_edge_list_text(g)),
        Format::Csv => {
            let rows = g.edges().into_iter().map(|(u, v)| vec![u.to_string(), v.to_string()]);
            Done::text(EXIT_OK, csv_text(&["u", "v"], rows.collect::<Vec<_>>()))
        }
        Format::Dot => Done::text(EXIT_OK, to_dot(g, &DotOptions { name: Some(&input.source), vertex_labels: None })),
    })
}

fn check(which: &Which, max_n: Option<usize>, out: &Output, format: Format) -> Result<Done, Failure> {
    let ids: Vec<TheoremId> = match &which.theorem {
        Some(t) => vec![t.parse()?],
        None => TheoremId::ALL.to_vec(),
    };
    let opts = CheckOptions { max_n, budget: out.budget, threads: out.threads as usize };
    let mut reports = Vec::with_capacity(ids.len());
    for id in ids {
        reports.push(check::check_theorem(id, &opts)?);
    }
    let fail = reports.iter().any(|r| r.summary.fail > 0);
    let inconclusive = reports.iter().any(|r| r.summary.inconclusive > 0);
    let exit = if fail {
        EXIT_INVALID
    } else if inconclusive {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(match format {
        Format::Json => Done::json(exit, json!({ "reports": reports })),
        Format::Csv => Done::text(exit, report_csv(&reports)),
        Format::Text => Done::text(exit, report_text(&reports)),
        Format::Dot => return Err(unsupported(format, "check")),
    })
}

fn report_csv(reports: &[Report]) -> String {
    let header = ["theorem", "key", "instance", "n", "status", "expected", "actual", "detail", "graph6", "partition"];
    let rows = reports.iter().flat_map(|rep| {
        rep.rows.iter().map(move |r| {
            vec![
                rep.theorem.to_string(),
                r.key.clone(),
                r.instance.clone(),
                r.n.to_string(),
                r.status.as_str().to_string(),
                r.expected.clone(),
                r.actual.clone(),
                r.detail.clone(),
                r.graph6.clone(),
                r.partition.as_ref().map(|p| serde_json::to_string(p).expect("json")).unwrap_or_default(),
            ]
        })
    });
    csv_text(&header, rows.collect::<Vec<_>>())
}

fn report_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for rep in reports {
        let m = rep.summary;
        writeln!(
            s,
            "{} (max n {}): {} pass, {} fail, {} finding, {} inconclusive",
            rep.theorem, rep.max_n, m.pass, m.fail, m.finding, m.inconclusive
        )
        .unwrap();
        for r in rep.exceptions() {
            writeln!(
                s,
                "  {} {}: expected {}, got {} {}",
                r.status.as_str(),
                r.instance,
                r.expected,
                r.actual,
                r.detail
            )
            .unwrap();
        }
    }
    s
}

fn gcg(source: &Source, partition: &str, format: Format) -> Result<Done, Failure> {
    let input = load(source)?;
    let p = input::partition(partition, input.graph.n())?;
    let cg = build_gcg(&input.graph, &p)?;
    let labels: Vec<String> = cg.class_map.iter().map(ToString::to_string).collect();
    Ok(match format {
        Format::Json => Done::json(
            EXIT_OK,
            json!({
                "graph": input.source,
                "partition": p,
                "vertices": cg.class_map,
                "edges": cg.graph.edges(),
            }),
        ),
        Format::Dot => {
            Done::text(EXIT_OK, to_dot(&cg.graph, &DotOptions { name: Some("GCG"), vertex_labels: Some(&labels) }))
        }
        Format::Text => {
            let mut s = String::new();
            for (i, j) in cg.graph.edges() {
                writeln!(s, "{} -- {}", labels[i], labels[j]).unwrap();
            }
            Done::text(EXIT_OK, s)
        }
        Format::Csv => {
            let rows = cg.graph.edges().into_iter().map(|(i, j)| vec![labels[i].clone(), labels[j].clone()]);
            Done::text(EXIT_OK, csv_text(&["a", "b"], rows.collect::<Vec<_>>()))
        }
    })
}

fn enumerate(
    class: Corpus,
    n: usize,
    cycle: Option<usize>,
    radius_cap: usize,
    format: Format,
) -> Result<Done, Failure> {
    use globcoal::enumerate as e;
    let cap = match class {
        Corpus::Connected => 9,
        Corpus::Radius3 => 10,
        _ => 12,
    };
    if n == 0 || n > cap {
        return Err(globcoal::Error::InvalidParams(format!("n must be between 1 and {cap} for this class")).into());
    }
    let graphs = match class {
        Corpus::Connected => e::connected_graphs(n),
        Corpus::Trees => e::trees(n),
        Corpus::Radius3 => e::connected_radius_at_least_3(n),
        Corpus::Girth6 => e::girth_at_least_6(n),
        Corpus::Unicyclic => {
            let c = cycle.ok_or_else(|| Failure::new("invalid_flags", "--class unicyclic needs --cycle".into()))?;
            globcoal::enumerate_unicyclic(c, n, radius_cap)?
        }
    };
    let codes: Vec<String> = graphs.iter().map(to_graph6).collect();
    Ok(match format {
        Format::Json => Done::json(EXIT_OK, json!({ "class": class, "n": n, "count": codes.len(), "graphs": codes })),
        Format::Text => Done::text(EXIT_OK, codes.iter().map(|c| format!("{c}\n")).collect()),
        Format::Csv => {
            let rows = graphs.iter().zip(&codes).map(|(g, c)| vec![g.n().to_string(), c.clone()]);
            Done::text(EXIT_OK, csv_text(&["n", "graph6"], rows.collect::<Vec<_>>()))
        }
        Format::Dot => return Err(unsupported(format, "enumerate")),
    })
}
