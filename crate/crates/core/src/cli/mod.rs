//! The `homforge` command line.
//!
//! Exit codes: 0 yes/pass, 1 no/fail, 2 usage or input error, 3 budget
//! exhausted or inconclusive.

mod args;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use clap::Parser;
use serde_json::{json, Value};

pub use args::Cli;
use args::{
    Command, GenCommand, HomCommand, MinorCommand, ReduceCommand, TemplateArgs, TwCommand, VerifyArgs, VerifyKind,
};

use crate::cores::core_of;
use crate::minors::{find_grid_minor, find_minor_map, make_onto, MinorMap};
use crate::reductions::{
    all_graphs, clique_amplify, grohe_construct, make_core_template, make_grid_template, pcsp_construct,
    verify_amplify, verify_grohe, verify_pcsp, HardnessTemplate, PairIndexer,
};
use crate::solver::{count_homs, find_hom, find_hom_td, HomSearchResult, SearchBudget};
use crate::structures::io::{graph_from_dimacs, graph_to_dimacs, structure_from_json, structure_to_value};
use crate::structures::{clique, grid, grid_graph, random_graph, typed_grid, Family, Graph, Structure};
use crate::treewidth::{exact_treewidth, heuristic_decomposition};

/// An error with the name of the failing module error.
#[derive(Debug)]
struct Failure {
    name: String,
    message: String,
    /// A search ran out of budget somewhere below this error.
    exhausted: bool,
}

impl<E: std::error::Error + std::fmt::Debug> From<E> for Failure {
    fn from(e: E) -> Self {
        let debug = format!("{e:?}");
        let name = debug
            .split(|c: char| !c.is_alphanumeric() && c != '_')
            .next()
            .unwrap_or("Error")
            .to_string();
        Failure {
            name,
            message: e.to_string(),
            exhausted: debug.contains("BudgetExceeded"),
        }
    }
}

fn failure(name: &str, message: impl Into<String>) -> Failure {
    Failure {
        name: name.to_string(),
        message: message.into(),
        exhausted: false,
    }
}

/// What a command printed and how it ended.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn new(code: i32, text: impl Into<String>, json: Value) -> Self {
        Report {
            code,
            text: text.into(),
            json,
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json_mode = cli.json;
    match execute(&cli) {
        Ok(report) => {
            let written = if json_mode {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                )
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 2;
            }
            report.code
        }
        Err(f) => {
            if json_mode {
                let doc = json!({ "error": f.name, "message": f.message });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            }
            let _ = writeln!(err, "error: {}: {}", f.name, f.message);
            if f.exhausted {
                3
            } else {
                2
            }
        }
    }
}

fn budget(cli: &Cli) -> Result<SearchBudget, Failure> {
    let time = cli.time_limit_ms.map(Duration::from_millis);
    Ok(SearchBudget::new(cli.node_limit, time)?)
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| failure("Io", format!("{path}: {e}")))
}

fn is_json(path: &str) -> bool {
    Path::new(path).extension().is_some_and(|e| e == "json")
}

/// A generator spec such as `clique:3`, a `.json` structure, or a DIMACS
/// graph file.
fn load_structure(spec: &str) -> Result<Structure, Failure> {
    if let Ok(family) = spec.parse::<Family>() {
        return Ok(family.structure()?);
    }
    let text = read(spec)?;
    if is_json(spec) {
        Ok(structure_from_json(&text)?)
    } else {
        Ok(graph_from_dimacs(&text)?.to_structure())
    }
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    if !is_json(spec) && spec.parse::<Family>().is_err() {
        return Ok(graph_from_dimacs(&read(spec)?)?);
    }
    Ok(load_structure(spec)?.to_graph()?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| failure("Io", format!("{}: {e}", path.display())))
}

fn is_dimacs_path(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "dimacs" || e == "col")
}

/// Writes a structure as JSON, or as DIMACS when the extension asks for it.
fn save_structure(path: &Path, s: &Structure) -> Result<(), Failure> {
    if is_dimacs_path(path) {
        write_file(path, &graph_to_dimacs(&s.to_graph()?))
    } else {
        write_file(path, &pretty(&structure_to_value(s)))
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let budget = budget(cli)?;
    match &cli.command {
        Command::Hom(cmd) => hom(cmd, budget),
        Command::Core { input, output } => core(input, output.as_deref(), budget),
        Command::Tw(cmd) => tw(cmd),
        Command::Minor(cmd) => minor(cmd, budget),
        Command::Reduce(cmd) => reduce(cmd, budget),
        Command::Verify(args) => verify(args, budget),
        Command::Gen(cmd) => generate(cmd, cli.seed),
    }
}

fn hom_report(result: HomSearchResult, a: &Structure, b: &Structure) -> Report {
    match result {
        HomSearchResult::Found(h) => {
            let named = h.to_named(a, b);
            let text: String = named.iter().map(|(x, y)| format!("{x} -> {y}\n")).collect();
            Report::new(
                0,
                format!("found\n{text}"),
                json!({ "result": "found", "homomorphism": named }),
            )
        }
        HomSearchResult::NoneExists => Report::new(1, "none\n", json!({ "result": "none" })),
        HomSearchResult::BudgetExceeded => Report::new(3, "budget exceeded\n", json!({ "result": "budget_exceeded" })),
    }
}

fn hom(cmd: &HomCommand, budget: SearchBudget) -> Result<Report, Failure> {
    match cmd {
        HomCommand::Find { source, target } => {
            let (a, b) = (load_structure(source)?, load_structure(target)?);
            Ok(hom_report(find_hom(&a, &b, budget)?, &a, &b))
        }
        HomCommand::Td { source, target } => {
            let (a, b) = (load_structure(source)?, load_structure(target)?);
            let d = heuristic_decomposition(&a.gaifman_graph());
            Ok(hom_report(find_hom_td(&a, &b, &d)?, &a, &b))
        }
        HomCommand::Count { source, target } => {
            let (a, b) = (load_structure(source)?, load_structure(target)?);
            let n = count_homs(&a, &b)?;
            Ok(Report::new(0, format!("{n}\n"), json!({ "count": n })))
        }
    }
}

fn core(input: &str, output: Option<&Path>, budget: SearchBudget) -> Result<Report, Failure> {
    let a = load_structure(input)?;
    let r = core_of(&a, budget)?;
    if let Some(path) = output {
        save_structure(path, &r.core)?;
    }
    let names: Vec<&str> = r.core.elements().iter().map(String::as_str).collect();
    let retraction = r.retraction.to_named(&a, &r.core);
    Ok(Report::new(
        0,
        format!(
            "core has {} of {} elements: {}\n",
            r.core.len(),
            a.len(),
            names.join(" ")
        ),
        json!({
            "size": r.core.len(),
            "core": structure_to_value(&r.core),
            "retraction": retraction,
        }),
    ))
}

fn tw(cmd: &TwCommand) -> Result<Report, Failure> {
    let (input, output, exact) = match cmd {
        TwCommand::Exact { input, output } => (input, output, true),
        TwCommand::Heur { input, output } => (input, output, false),
    };
    let g = load_graph_or_gaifman(input)?;
    let (width, d) = if exact {
        exact_treewidth(&g)?
    } else {
        let d = heuristic_decomposition(&g);
        (d.width(), d)
    };
    let doc = d.to_value(&g);
    if let Some(path) = output {
        write_file(path, &pretty(&doc))?;
    }
    Ok(Report::new(
        0,
        format!("{width}\n"),
        json!({ "width": width, "decomposition": doc }),
    ))
}

/// Graphs load directly; other structures go through their Gaifman graph.
fn load_graph_or_gaifman(spec: &str) -> Result<Graph, Failure> {
    let s = match spec.parse::<Family>() {
        Ok(f) => f.structure()?,
        Err(_) if is_json(spec) => structure_from_json(&read(spec)?)?,
        Err(_) => return Ok(graph_from_dimacs(&read(spec)?)?),
    };
    Ok(s.gaifman_graph())
}

fn minor_report(found: Option<MinorMap>, output: Option<&Path>) -> Result<Report, Failure> {
    match found {
        Some(m) => {
            let doc = m.to_value();
            if let Some(path) = output {
                write_file(path, &pretty(&doc))?;
            }
            let text: String = m
                .branch_sets()
                .iter()
                .enumerate()
                .map(|(h, set)| {
                    let names: Vec<&str> = set.iter().map(|&g| m.target().vertex(g)).collect();
                    format!("{} -> {{{}}}\n", m.source().vertex(h), names.join(","))
                })
                .collect();
            Ok(Report::new(
                0,
                format!("found\n{text}"),
                json!({ "result": "found", "minor_map": doc }),
            ))
        }
        None => Ok(Report::new(1, "none\n", json!({ "result": "none" }))),
    }
}

fn minor(cmd: &MinorCommand, budget: SearchBudget) -> Result<Report, Failure> {
    let outcome = match cmd {
        MinorCommand::Find { h, g, output } => {
            find_minor_map(&load_graph(h)?, &load_graph(g)?, budget).map(|m| (m, output))
        }
        MinorCommand::Grid { g, k, output } => {
            find_grid_minor(&load_graph_or_gaifman(g)?, *k, budget).map(|m| (m, output))
        }
    };
    match outcome {
        Ok((m, output)) => minor_report(m, output.as_deref()),
        Err(crate::minors::MinorError::BudgetExceeded) => Ok(Report::new(
            3,
            "budget exceeded\n",
            json!({ "result": "budget_exceeded" }),
        )),
        Err(e) => Err(e.into()),
    }
}

fn template(args: &TemplateArgs, budget: SearchBudget) -> Result<HardnessTemplate, Failure> {
    parse_template(&args.template, args.a.as_deref(), args.k, budget)
}

fn parse_template(
    spec: &str,
    a: Option<&str>,
    k: Option<usize>,
    budget: SearchBudget,
) -> Result<HardnessTemplate, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || failure("Usage", format!("invalid template `{spec}`; expected grid:K:F or core"));
    match parts.as_slice() {
        ["grid", k, f] => {
            let k = k.parse().map_err(|_| usage())?;
            let f = f.parse().map_err(|_| usage())?;
            Ok(make_grid_template(k, f)?)
        }
        ["grid", k] => {
            let k = k.parse().map_err(|_| usage())?;
            Ok(make_grid_template(k, k)?)
        }
        ["core"] => {
            let a = a.ok_or_else(|| failure("Usage", "the core template needs --A"))?;
            let k = k.ok_or_else(|| failure("Usage", "the core template needs -k"))?;
            Ok(make_core_template(&load_structure(a)?, k, budget)?)
        }
        _ => Err(usage()),
    }
}

/// A minor map from the `k x K` grid onto `a`, searched for and completed.
fn grohe_minor(a: &Structure, k: usize, budget: SearchBudget) -> Result<MinorMap, Failure> {
    let big_k = PairIndexer::new(k).len();
    let grid = grid_graph(k, big_k).map_err(|e| failure("BadGridDimensions", e.to_string()))?;
    let m = find_minor_map(&grid, &a.gaifman_graph(), budget)?
        .ok_or_else(|| failure("NoGridMinor", format!("no {k}x{big_k} grid minor")))?;
    Ok(make_onto(&m)?)
}

fn reduce(cmd: &ReduceCommand, budget: SearchBudget) -> Result<Report, Failure> {
    match cmd {
        ReduceCommand::Grohe { a, mu, g, k, output } => {
            let a = load_structure(a)?;
            let g = load_graph(g)?;
            let mu = match mu {
                Some(path) => {
                    let big_k = PairIndexer::new(*k).len();
                    let grid = grid_graph(*k, big_k).map_err(|e| failure("BadGridDimensions", e.to_string()))?;
                    let value: Value = serde_json::from_str(&read(&path.to_string_lossy())?)?;
                    MinorMap::from_value(value, grid, a.gaifman_graph())?
                }
                None => grohe_minor(&a, *k, budget)?,
            };
            let inst = grohe_construct(&a, &mu, &g, *k)?;
            structure_report(&inst.m, output.as_deref())
        }
        ReduceCommand::Pcsp { template: t, g, output } => {
            let t = template(t, budget)?;
            let inst = pcsp_construct(&t.pair, &t.rhos, &load_graph(g)?)?;
            let mut report = structure_report(&inst.x, output.as_deref())?;
            report.json["size_bound"] = json!(inst.size_bound().to_string());
            Ok(report)
        }
        ReduceCommand::Amplify { g, k, l, output } => {
            let (h, m) = clique_amplify(&load_graph(g)?, *k, *l)?;
            if let Some(path) = output {
                if is_dimacs_path(path) {
                    write_file(path, &graph_to_dimacs(&h))?;
                } else {
                    write_file(path, &pretty(&structure_to_value(&h.to_structure())))?;
                }
            }
            Ok(Report::new(
                0,
                format!("m = {m}, {} vertices, {} edges\n", h.len(), h.edge_count()),
                json!({ "m": m, "vertices": h.len(), "edges": h.edge_count(), "graph": structure_to_value(&h.to_structure()) }),
            ))
        }
    }
}

fn structure_report(s: &Structure, output: Option<&Path>) -> Result<Report, Failure> {
    if let Some(path) = output {
        save_structure(path, s)?;
    }
    Ok(Report::new(
        0,
        format!("{} elements, {} tuples\n", s.len(), s.tuple_count()),
        json!({ "elements": s.len(), "tuples": s.tuple_count(), "structure": structure_to_value(s) }),
    ))
}

fn verify(args: &VerifyArgs, budget: SearchBudget) -> Result<Report, Failure> {
    let graphs = all_graphs(args.max_n);
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| failure("Usage", format!("--kind needs {flag}")));
    let report = match args.kind {
        VerifyKind::Grohe => {
            let a = load_structure(args.a.as_deref().ok_or_else(|| failure("Usage", "grohe needs --A"))?)?;
            let k = need(args.k, "-k")?;
            let mu = grohe_minor(&a, k, budget)?;
            verify_grohe(&a, &mu, k, &graphs, budget)?
        }
        VerifyKind::Pcsp => {
            let spec = args
                .template
                .as_deref()
                .ok_or_else(|| failure("Usage", "pcsp needs --template"))?;
            let t = parse_template(spec, args.a.as_deref(), args.k, budget)?;
            verify_pcsp(&t, &graphs, budget)?
        }
        VerifyKind::Amplify => verify_amplify(need(args.k, "-k")?, need(args.l, "-l")?, &graphs)?,
    };
    let mut text = format!(
        "{}: {} instances, {} passed, {} counterexamples, {} inconclusive\n",
        report.kind,
        report.instances,
        report.passed,
        report.counterexamples.len(),
        report.inconclusive.len()
    );
    for note in &report.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    for c in report.counterexamples.iter().chain(&report.inconclusive) {
        text.push_str(&format!("#{} {}: {}\n", c.id, c.graph, c.detail));
    }
    let json = serde_json::to_value(&report)?;
    Ok(Report::new(report.exit_code(), text, json))
}

fn generate(cmd: &GenCommand, seed: u64) -> Result<Report, Failure> {
    let (s, output) = match cmd {
        GenCommand::Clique { k, output } => (clique(*k)?, output),
        GenCommand::Grid { k, l, output } => (grid(*k, l.unwrap_or(*k))?, output),
        GenCommand::TypedGrid { k, l, output } => (typed_grid(*k, l.unwrap_or(*k))?, output),
        GenCommand::Random { n, p, output } => (random_graph(*n, *p, seed).to_structure(), output),
    };
    let doc = structure_to_value(&s);
    match output {
        Some(path) => {
            save_structure(path, &s)?;
            Ok(Report::new(
                0,
                format!("wrote {} elements to {}\n", s.len(), path.display()),
                json!({ "elements": s.len(), "path": path.display().to_string() }),
            ))
        }
        None => Ok(Report::new(0, pretty(&doc), doc)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("homforge").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["hom", "find", "clique:2", "clique:3"]).0, 0);
        assert_eq!(call(&["hom", "find", "clique:3", "clique:2"]).0, 1);
        assert_eq!(call(&["hom", "bogus"]).0, 2);
        let (code, _, err) = call(&["hom", "find", "missing.json", "clique:2"]);
        assert_eq!(code, 2);
        assert!(err.contains("Io"));
    }

    #[test]
    fn treewidth_of_grid() {
        let (code, out, _) = call(&["tw", "exact", "grid:3:3"]);
        assert_eq!((code, out.as_str()), (0, "3\n"));
    }

    #[test]
    fn domain_errors_are_named() {
        let (code, _, err) = call(&["gen", "clique", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("InvalidDimension"), "{err}");
    }
}
