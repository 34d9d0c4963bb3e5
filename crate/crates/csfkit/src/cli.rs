//! Argument parsing and the subcommands. Every command builds a JSON value;
//! text and CSV are rendered from it.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csfkit_core::bijections::{verify_bijection, Reading, Which};
use csfkit_core::chromatic::{csf, is_e_positive, sink_comparison};
use csfkit_core::corrects::{m_set_summary, Family};
use csfkit_core::ganalogue::GHom;
use csfkit_core::symfunc::to_e_basis;
use csfkit_core::uio::enumerate_uios;
use csfkit_core::{limits, Graph, Partition, Uio};
use serde_json::{json, Map, Value};

use crate::verify::{self, CheckResult};
use crate::{json as js, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "csfkit", version, about = "Chromatic symmetric functions of unit interval orders")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Same as `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest degree for symmetric-function work.
    #[arg(long, global = true, env = "CSFKIT_MAX_DEGREE")]
    pub max_degree: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// A UIO as `s:3,4,4` or `u:0,1/2,1`; its incomparability graph is used.
    #[arg(long)]
    pub uio: Option<String>,
    /// A graph as `n:a-b,c-d` with 1-based vertices.
    #[arg(long, conflicts_with = "uio")]
    pub graph: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictArg {
    True,
    False,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingArg {
    Printed,
    Repaired,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all UIOs of a size in successor form.
    UioEnumerate {
        #[arg(long)]
        n: usize,
    },
    /// X_G in the e or m basis.
    Csf {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "m")]
        basis: String,
    },
    /// e, p, m or s G-analogue of a partition.
    Ganalogue {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        which: String,
        #[arg(long)]
        partition: String,
    },
    /// Build an explicit set and compare its monomial sum with m^U.
    Msets {
        #[arg(long)]
        uio: String,
        #[arg(long)]
        which: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Index bound reading for 2l1k.
        #[arg(long, value_enum, default_value_t = StrictArg::Both)]
        strict_last_index: StrictArg,
    },
    /// Run exhaustive checks.
    Verify {
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Check a bijection and its inverse on every input.
    VerifyBijection {
        #[arg(long)]
        which: String,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Check one UIO instead of all up to `--max-n`.
        #[arg(long)]
        uio: Option<String>,
        #[arg(long, value_enum, default_value_t = ReadingArg::Repaired)]
        reading: ReadingArg,
    },
    /// e-positivity of one graph, or of every inc(U) up to a size.
    Epositivity {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Sink counts of acyclic orientations against the e-coefficients.
    Sinks {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn parse_graph(s: &str) -> Result<Graph> {
    let bad = || Error::Usage(format!("graph must look like 4:1-2,1-3, got {s:?}"));
    let (n, rest) = s.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let mut edges = Vec::new();
    for e in rest.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (a, b) = e.split_once('-').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(bad());
        }
        edges.push((a - 1, b - 1));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_uio(s: &str) -> Result<Uio> {
    Ok(s.parse::<Uio>()?)
}

impl GraphInput {
    fn graph(&self) -> Result<Option<Graph>> {
        match (&self.uio, &self.graph) {
            (Some(u), _) => Ok(Some(parse_uio(u)?.incomparability_graph())),
            (None, Some(g)) => Ok(Some(parse_graph(g)?)),
            (None, None) => Ok(None),
        }
    }

    fn require(&self) -> Result<Graph> {
        self.graph()?.ok_or_else(|| Error::Usage("give --uio or --graph".into()))
    }
}

/// A command's JSON result and whether it verified.
struct Report {
    value: Value,
    ok: bool,
}

fn report(value: Value, ok: bool) -> Result<Report> {
    Ok(Report { value, ok })
}

fn family(which: &str, l: u32, k: Option<u32>, strict: bool) -> Result<Family> {
    let need_k = || k.ok_or_else(|| Error::Usage(format!("--k is required for {which}")));
    Ok(match which {
        "l1" => Family::L1 { l },
        "l1k" => Family::L1k { l, k: need_k()? },
        "l2" => Family::L2 { l },
        "l21" => Family::L21 { l },
        "2l1k" => Family::TwoL1k { l, k: need_k()?, strict },
        other => return Err(Error::Usage(format!("unknown set {other:?}; use l1, l1k, l2, l21 or 2l1k"))),
    })
}

fn cmd_msets(uio: &str, which: &str, l: u32, k: Option<u32>, strict: StrictArg) -> Result<Report> {
    let u = parse_uio(uio)?;
    let readings: Vec<bool> = match (which, strict) {
        ("2l1k", StrictArg::Both) => vec![true, false],
        ("2l1k", StrictArg::True) => vec![true],
        _ => vec![false],
    };
    let base = family(which, l, k, readings[0])?;
    let lambda = base.partition();
    limits_check_degree(lambda.weight() as usize)?;
    let oracle = GHom::new(&u.incomparability_graph()).m(&lambda)?;
    let gate = match base.check_gate() {
        Ok(()) => json!({"holds": true}),
        Err(csfkit_core::Error::Gated { detail, .. }) => json!({"holds": false, "detail": detail}),
        Err(e) => return Err(e.into()),
    };
    let gated_in = gate["holds"] == json!(true);
    let mut rows = Vec::new();
    let mut any_match = false;
    for &s in &readings {
        let f = family(which, l, k, s)?;
        let (count, sum) = m_set_summary(&u, f)?;
        let matches = sum == oracle;
        any_match |= matches;
        let mut row = json!({"cardinality": count, "monomial_sum": js::vpoly(&sum), "matches_oracle": matches});
        if which == "2l1k" {
            row["strict_last_index"] = json!(s);
        }
        rows.push(row);
    }
    let verdict = match (gated_in, any_match) {
        (true, true) => "match",
        (true, false) => "mismatch",
        (false, true) => "gated, match",
        (false, false) => "gated, mismatch",
    };
    let value = json!({
        "uio": u.to_string(),
        "which": which,
        "l": l,
        "k": k,
        "partition": js::partition(&lambda),
        "gate": gate,
        "oracle": js::vpoly(&oracle),
        "readings": rows,
        "verdict": verdict,
    });
    report(value, any_match || !gated_in)
}

fn limits_check_degree(d: usize) -> Result<()> {
    if d > limits::max_degree() {
        return Err(csfkit_core::Error::OverCap { what: "degree", size: d, cap: limits::max_degree() }.into());
    }
    Ok(())
}

fn check_value(c: &CheckResult) -> Value {
    serde_json::to_value(c).expect("plain data")
}

fn cmd_verify(theorem: &str, max_n: usize) -> Result<Report> {
    let names: Vec<&str> = if theorem == "all" { verify::THEOREMS.to_vec() } else { theorem.split(',').collect() };
    let mut checks = Vec::new();
    let mut ok = true;
    for name in names {
        let c = verify::run_theorem(name, max_n)?;
        ok &= c.passed;
        checks.push(check_value(&c));
    }
    let verdict = if ok { "all verified" } else { "failures found" };
    report(json!({"theorem": theorem, "max_n": max_n, "verdict": verdict, "checks": checks}), ok)
}

fn cmd_verify_bijection(
    which: &str,
    l: u32,
    k: u32,
    max_n: usize,
    uio: Option<&str>,
    reading: ReadingArg,
) -> Result<Report> {
    let w = Which::parse(which).ok_or_else(|| Error::Usage(format!("unknown bijection {which:?}; use l1k, l2 or l21")))?;
    let readings = match reading {
        ReadingArg::Printed => vec![Reading::Printed],
        ReadingArg::Repaired => vec![Reading::Repaired],
        ReadingArg::Both => vec![Reading::Printed, Reading::Repaired],
    };
    let mut out = Vec::new();
    let mut ok = true;
    for r in readings {
        let summary = match uio {
            Some(s) => {
                let u = parse_uio(s)?;
                let rep = verify_bijection(w, &u, l, k, r)?;
                verify::summarize(w, l, k, r, std::slice::from_ref(&rep))
            }
            None => verify::bijection_scan(w, l, k, r, max_n)?,
        };
        ok &= summary.passed;
        out.push(serde_json::to_value(&summary)?);
    }
    let mut value = json!({"which": which, "l": l, "readings": out, "verdict": if ok { "verified" } else { "failures found" }});
    if w == Which::L1k {
        value["k"] = json!(k);
    }
    match uio {
        Some(s) => value["uio"] = json!(parse_uio(s)?.to_string()),
        None => value["max_n"] = json!(max_n),
    }
    report(value, ok)
}

fn positivity_report(g: &Graph) -> Result<Report> {
    let r = is_e_positive(g)?;
    let value = json!({
        "graph": g.to_string(),
        "basis": "e",
        "coeffs": js::coeff_list(r.coeffs.iter()),
        "e_positive": r.positive,
        "min_coeff": r.min_coeff.to_string(),
        "witness": r.witness.as_ref().map(|w| w.parts().to_vec()),
    });
    report(value, r.positive)
}

fn sinks_report(g: &Graph) -> Result<Report> {
    let cmp = sink_comparison(g)?;
    let ok = cmp.values().all(|(a, b)| a == b);
    let per_j: Vec<Value> = cmp
        .iter()
        .map(|(j, (s, c))| json!({"j": j, "sinks": s.to_string(), "coeff_sum": c.to_string()}))
        .collect();
    report(json!({"graph": g.to_string(), "per_j": per_j, "match": ok}), ok)
}

fn check_report(c: CheckResult) -> Result<Report> {
    let ok = c.passed;
    report(check_value(&c), ok)
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::UioEnumerate { n } => {
            let us: Vec<String> = enumerate_uios(*n)?.iter().map(Uio::to_string).collect();
            report(json!({"n": n, "count": us.len(), "uios": us}), true)
        }
        Command::Csf { input, basis } => {
            let g = input.require()?;
            let x = csf(&g)?;
            let value = match basis.as_str() {
                "m" => js::coeff_map(x.terms()),
                "e" => js::coeff_map(to_e_basis(&x)?.terms()),
                other => return Err(Error::Usage(format!("X_G can be printed in the e or m basis, not {other:?}"))),
            };
            report(value, true)
        }
        Command::Ganalogue { input, which, partition } => {
            let g = input.require()?;
            let lambda: Partition = partition.parse()?;
            limits_check_degree(lambda.weight() as usize)?;
            let hom = GHom::new(&g);
            let p = match which.as_str() {
                "e" => hom.e_lambda(&lambda),
                "p" => hom.p_lambda(&lambda)?,
                "m" => hom.m(&lambda)?,
                "s" => hom.s(&lambda)?,
                other => return Err(Error::Usage(format!("unknown basis {other:?}; use e, p, m or s"))),
            };
            report(js::vpoly(&p), true)
        }
        Command::Msets { uio, which, l, k, strict_last_index } => cmd_msets(uio, which, *l, *k, *strict_last_index),
        Command::Verify { theorem, max_n } => cmd_verify(theorem, *max_n),
        Command::VerifyBijection { which, l, k, max_n, uio, reading } => {
            cmd_verify_bijection(which, *l, *k, *max_n, uio.as_deref(), *reading)
        }
        Command::Epositivity { input, max_n } => match (input.graph()?, max_n) {
            (Some(g), _) => positivity_report(&g),
            (None, Some(n)) => check_report(verify::e_positivity(*n)?),
            (None, None) => Err(Error::Usage("give --uio, --graph or --max-n".into())),
        },
        Command::Sinks { input, max_n } => match (input.graph()?, max_n) {
            (Some(g), _) => sinks_report(&g),
            (None, Some(n)) => check_report(verify::sinks(*n)?),
            (None, None) => Err(Error::Usage("give --uio, --graph or --max-n".into())),
        },
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(x))),
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                if x.is_object() {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{}\n", inline(x)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| x.is_number() || x.is_boolean()) && xs.len() <= 12,
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(xs) => xs.iter().map(inline).collect::<Vec<_>>().join(","),
        other => scalar(other),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The first array of objects in the report becomes the rows; otherwise the
/// top-level fields become `key,value` rows.
// the first list of plain values, for outputs without row objects
fn scalar_list(v: &Value) -> Option<(&String, &Vec<Value>)> {
    v.as_object()?.iter().find_map(|(k, x)| {
        let a = x.as_array()?;
        (!a.is_empty() && a.iter().all(|y| !y.is_object() && !y.is_array())).then_some((k, a))
    })
}

fn render_csv(v: &Value) -> String {
    let rows = v.as_object().and_then(|m| m.values().find(|x| x.as_array().is_some_and(|a| a.iter().any(Value::is_object))));
    let mut out = String::new();
    match rows.and_then(Value::as_array) {
        Some(rows) => {
            let mut header: Vec<String> = Vec::new();
            for r in rows.iter().filter_map(Value::as_object) {
                for k in r.keys() {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            out.push_str(&header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
            out.push('\n');
            for r in rows.iter().filter_map(Value::as_object) {
                let line: Vec<String> = header
                    .iter()
                    .map(|h| csv_field(&r.get(h).map(|x| if x.is_object() || x.is_array() { x.to_string() } else { scalar(x) }).unwrap_or_default()))
                    .collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
        None => {
            if let Some((k, list)) = scalar_list(v) {
                out.push_str(&csv_field(k));
                out.push('\n');
                for x in list {
                    out.push_str(&csv_field(&scalar(x)));
                    out.push('\n');
                }
                return out;
            }
            out.push_str("key,value\n");
            let empty = Map::new();
            let m = v.as_object().unwrap_or(&empty);
            for (k, x) in m {
                let s = if x.is_object() || x.is_array() { x.to_string() } else { scalar(x) };
                out.push_str(&format!("{},{}\n", csv_field(k), csv_field(&s)));
            }
        }
    }
    out
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("plain data");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(v, 0, &mut s);
            s
        }
        Format::Csv => render_csv(v),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    if let Some(d) = cli.max_degree {
        limits::set_max_degree(d);
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(Error::Usage(e.to_string())),
        },
        None => dispatch(&cli.command),
    };
    match result {
        Ok(r) => Outcome { stdout: render(&r.value, format), stderr: String::new(), code: if r.ok { 0 } else { 1 } },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
