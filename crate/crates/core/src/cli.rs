//! The `vsplit` command line: one subcommand per library operation.
//!
//! Exit codes: 0 computed, 1 verified false or no solution within the
//! cutoff, 2 usage or input error, 3 search budget exceeded.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::families::gen_family;
use crate::graph::{Graph, ParseMode};
use crate::io::{format_edge_list, parse_edge_list, ParsedGraph};
use crate::paths::{min_splits_to_paths, split_sequence_to_paths, trail_partition};
use crate::recognition::{recognize, GraphClass, RecognitionReport};
use crate::reduction::{extract_hampath, reduce_hampath_to_ivxs};
use crate::solver::{solve, Optimum, Param, Problem, SearchOptions, SplitMode};
use crate::splitting::{apply_sequence, make_exclusive, SplitSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `KEY value`
    #[default]
    Human,
    /// `KEY<TAB>VALUE`
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "vsplit", version, about = "Vertex splitting into interval, chordal and path-union graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Drop self-loops and duplicate edges instead of rejecting the input.
    #[arg(long, global = true)]
    lenient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide membership in a class, with a certificate or a forbidden witness.
    Recognize {
        /// chordal, interval, unit-interval, caterpillar-forest, union-of-paths, forest or tree
        class: GraphClass,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Optimal splitting into a disjoint union of paths.
    SplitPaths {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Minimum trail partition, one walk per line.
    Trails {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Exact optimum of a modification parameter by exhaustive search.
    Solve {
        /// ChVS, ChVXS, IVS, IVXS, UIVS, UIVXS, PVS, ChVD or ChED
        param: Param,
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Override the split mode implied by the parameter.
        #[arg(long)]
        mode: Option<SplitMode>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, env = "VSPLIT_BUDGET_NODES")]
        budget_nodes: Option<u64>,
        #[arg(long, env = "VSPLIT_BUDGET_SECS")]
        budget_secs: Option<f64>,
    },
    /// Apply a split sequence and print the resulting graph.
    Apply { graph: PathBuf, sequence: PathBuf },
    /// Check a split sequence or a `solve` report against a target class.
    Verify {
        graph: PathBuf,
        witness: PathBuf,
        /// Required unless the witness is a `solve` report.
        #[arg(long)]
        target: Option<GraphClass>,
    },
    /// Rewrite a split sequence into an exclusive one of no greater length.
    MakeExclusive {
        graph: PathBuf,
        sequence: PathBuf,
        #[arg(long)]
        target: GraphClass,
    },
    /// Subdivide a connected cubic graph into an exclusive interval splitting instance.
    Reduce {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Read a Hamiltonian path of the cubic source off a solution of its reduction.
    Extract { source: PathBuf, witness: PathBuf },
    /// Print a named graph or family member.
    Gen { tag: String, params: Vec<String> },
    /// Basic graph statistics.
    Stats {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

struct Out<'a> {
    w: &'a mut dyn Write,
    format: Format,
}

impl Out<'_> {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> Result<()> {
        let sep = match self.format {
            Format::Human => ' ',
            Format::Records => '\t',
        };
        writeln!(self.w, "{key}{sep}{value}")?;
        Ok(())
    }

    fn lines(&mut self, lines: &[(String, String)]) -> Result<()> {
        lines.iter().try_for_each(|(k, v)| self.kv(k, v))
    }

    fn raw(&mut self, text: &str) -> Result<()> {
        self.w.write_all(text.as_bytes())?;
        Ok(())
    }
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mode = if cli.lenient { ParseMode::Lenient } else { ParseMode::Strict };
    let mut out = Out { w: stdout, format: cli.format };
    match execute(cli.command, mode, &mut out, stderr) {
        Ok(code) => code,
        Err(Error::BudgetExceeded { nodes, secs }) => {
            let _ = writeln!(stderr, "vsplit: budget exceeded after {nodes} nodes and {secs:.3} s");
            EXIT_BUDGET
        }
        Err(e) => {
            let _ = writeln!(stderr, "vsplit: {e}");
            EXIT_USAGE
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &PathBuf, mode: ParseMode, stderr: &mut dyn Write) -> Result<ParsedGraph> {
    let parsed = parse_edge_list(&read_text(path)?, mode)?;
    let w = parsed.warnings;
    if w.total() > 0 {
        writeln!(stderr, "vsplit: dropped {} self-loop(s) and {} duplicate edge(s)", w.self_loops, w.duplicates)?;
    }
    Ok(parsed)
}

/// A witness file: either a bare split sequence or the output of `solve`.
struct WitnessFile {
    param: Option<Param>,
    optimum: Option<String>,
    witness: Vec<String>,
}

fn parse_witness_file(text: &str) -> WitnessFile {
    let mut file = WitnessFile { param: None, optimum: None, witness: Vec::new() };
    let mut is_report = false;
    for line in text.lines() {
        let (key, value) = line.split_once(['\t', ' ']).unwrap_or((line, ""));
        match key {
            "PARAM" => {
                is_report = true;
                file.param = value.trim().parse().ok();
            }
            "OPT" => file.optimum = Some(value.trim().to_string()),
            "WITNESS" => file.witness.push(value.trim().to_string()),
            _ => {}
        }
    }
    if !is_report {
        file.witness = text.lines().map(str::to_string).collect();
    }
    file
}

fn witness_sequence(file: &WitnessFile) -> Result<SplitSequence> {
    SplitSequence::parse(&file.witness.join("\n"))
}

fn parse_vertices(lines: &[String]) -> Result<Vec<usize>> {
    lines
        .iter()
        .flat_map(|l| l.split_whitespace())
        .map(|t| t.parse().map_err(|_| Error::Parse { line: 0, msg: format!("`{t}` is not a vertex id") }))
        .collect()
}

fn parse_edges(lines: &[String]) -> Result<Vec<(usize, usize)>> {
    lines
        .iter()
        .flat_map(|l| l.split_whitespace())
        .map(|t| {
            let bad = || Error::Parse { line: 0, msg: format!("`{t}` is not an edge `u-v`") };
            let (u, v) = t.split_once('-').ok_or_else(bad)?;
            Ok((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn verdict_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn execute(cmd: Command, mode: ParseMode, out: &mut Out<'_>, stderr: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Recognize { class, input } => {
            let g = read_graph(&input, mode, stderr)?.graph;
            let report = recognize(&g, class);
            out.kv("CLASS", class)?;
            out.lines(&report.lines())?;
            Ok(verdict_code(report.verdict))
        }
        Command::SplitPaths { input } => {
            let g = read_graph(&input, mode, stderr)?.graph;
            let seq = split_sequence_to_paths(&g);
            debug_assert_eq!(seq.len(), min_splits_to_paths(&g));
            out.kv("OPT", seq.len())?;
            for s in &seq {
                out.kv("SPLIT", s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Trails { input } => {
            let g = read_graph(&input, mode, stderr)?.graph;
            let tp = trail_partition(&g);
            out.kv("TRAILS", tp.len())?;
            for t in &tp.trails {
                out.kv("TRAIL", crate::recognition::join(&t.walk))?;
            }
            Ok(EXIT_OK)
        }
        Command::Solve { param, input, mode: split_mode, kmax, budget_nodes, budget_secs } => {
            let g = read_graph(&input, mode, stderr)?.graph;
            let mut opts = SearchOptions::new(kmax);
            opts.max_nodes = budget_nodes;
            opts.max_secs = budget_secs;
            let report = match (param.problem(), split_mode) {
                (Problem::Splits(c, _), Some(m)) => crate::solver::min_splits(&g, c, m, &opts)?,
                (_, Some(_)) => return Err(Error::Precondition(format!("--mode does not apply to {param}"))),
                _ => solve(&g, param, &opts)?,
            };
            out.lines(&report.lines())?;
            Ok(verdict_code(matches!(report.optimum, Optimum::Exact(_))))
        }
        Command::Apply { graph, sequence } => {
            let g = read_graph(&graph, mode, stderr)?.graph;
            let seq = witness_sequence(&parse_witness_file(&read_text(&sequence)?))?;
            let (h, _) = apply_sequence(&g, &seq)?;
            out.raw(&format_edge_list(&h))?;
            Ok(EXIT_OK)
        }
        Command::Verify { graph, witness, target } => {
            let g = read_graph(&graph, mode, stderr)?.graph;
            let file = parse_witness_file(&read_text(&witness)?);
            verify_witness_file(&g, &file, target, out)
        }
        Command::MakeExclusive { graph, sequence, target } => {
            let g = read_graph(&graph, mode, stderr)?.graph;
            let seq = witness_sequence(&parse_witness_file(&read_text(&sequence)?))?;
            out.raw(&make_exclusive(&g, &seq, target)?.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Reduce { input } => {
            let g = read_graph(&input, mode, stderr)?.graph;
            let inst = reduce_hampath_to_ivxs(&g)?;
            out.raw(&format!("# k = {}\n", inst.budget))?;
            out.raw(&format_edge_list(&inst.graph))?;
            Ok(EXIT_OK)
        }
        Command::Extract { source, witness } => {
            let g = read_graph(&source, mode, stderr)?.graph;
            let inst = reduce_hampath_to_ivxs(&g)?;
            let seq = witness_sequence(&parse_witness_file(&read_text(&witness)?))?;
            let path = extract_hampath(&inst, &seq)?;
            out.kv("PATH", crate::recognition::join(&path))?;
            Ok(EXIT_OK)
        }
        Command::Gen { tag, params } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            out.raw(&format_edge_list(&gen_family(&tag, &params)?))?;
            Ok(EXIT_OK)
        }
        Command::Stats { input } => {
            let parsed = read_graph(&input, mode, stderr)?;
            stats(&parsed, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn verify_witness_file(g: &Graph, file: &WitnessFile, target: Option<GraphClass>, out: &mut Out<'_>) -> Result<i32> {
    let problem = file.param.map(Param::problem);
    let target = target
        .or(problem.map(|p| p.target()))
        .ok_or_else(|| Error::Precondition("--target is required for a bare split sequence".into()))?;
    let expected = file.optimum.as_deref().and_then(|o| o.parse::<usize>().ok());
    let (h, size, exclusive_ok) = match problem {
        Some(Problem::VertexDeletion(_)) => {
            let vs = parse_vertices(&file.witness)?;
            if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            (g.without_vertices(&vs).0, vs.len(), true)
        }
        Some(Problem::EdgeDeletion(_)) => {
            let es = parse_edges(&file.witness)?;
            if let Some(&(u, v)) = es.iter().find(|&&(u, v)| u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
                return Err(Error::MissingEdge(u, v));
            }
            (g.without_edges(&es), es.len(), true)
        }
        Some(Problem::Splits(_, m)) => {
            let seq = witness_sequence(file)?;
            let ok = m == SplitMode::Inclusive || seq.is_exclusive();
            (apply_sequence(g, &seq)?.0, seq.len(), ok)
        }
        None => {
            let seq = witness_sequence(file)?;
            (apply_sequence(g, &seq)?.0, seq.len(), true)
        }
    };
    let report: RecognitionReport = recognize(&h, target);
    let size_ok = expected.is_none_or(|k| k == size);
    let valid = report.verdict && size_ok && exclusive_ok;
    out.kv("TARGET", target)?;
    out.kv("SIZE", size)?;
    if !exclusive_ok {
        out.kv("EXCLUSIVE", false)?;
    }
    if !size_ok {
        out.kv("EXPECTED", expected.unwrap_or_default())?;
    }
    out.lines(&report.lines())?;
    out.kv("VALID", valid)?;
    Ok(verdict_code(valid))
}

fn stats(parsed: &ParsedGraph, out: &mut Out<'_>) -> Result<()> {
    let g = &parsed.graph;
    out.kv("N", g.n())?;
    out.kv("M", g.m())?;
    out.kv("COMPONENTS", g.component_count())?;
    out.kv("MAX_DEGREE", g.max_degree())?;
    out.kv("CYCLOMATIC", g.cyclomatic_number())?;
    out.kv("TRIANGLE_FREE", g.is_triangle_free().0)?;
    out.kv("BIPARTITE", g.is_bipartite().is_bipartite())?;
    out.kv("ALPHA_AT_MOST_2", g.independence_at_most_two().0)?;
    out.kv("GIRTH", g.girth().map_or("none".to_string(), |x| x.to_string()))?;
    out.kv("PATH_SPLITS", min_splits_to_paths(g))?;
    if let Some(k) = parsed.budget {
        out.kv("BUDGET", k)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("vsplit").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    fn temp(name: &str, text: &str) -> String {
        let dir = std::env::temp_dir().join(format!("vsplit-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn claw_is_not_unit_interval() {
        let f = temp("claw.edges", "0 1\n0 2\n0 3\n");
        let (code, out, _) = run_str(&["recognize", "unit-interval", &f]);
        assert_eq!(code, 1);
        assert!(out.lines().any(|l| l == "WITNESS claw 0 1 2 3"), "{out}");
        let (code, out, _) = run_str(&["--format", "records", "recognize", "interval", &f]);
        assert_eq!(code, 0);
        assert!(out.starts_with("CLASS\tinterval\nVERDICT\ttrue\n"), "{out}");
    }

    #[test]
    fn split_paths_on_c6() {
        let f = temp("c6.edges", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
        let (code, out, _) = run_str(&["split-paths", &f]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "OPT 1");
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("SPLIT "));
        let (_, out, _) = run_str(&["trails", &f]);
        assert_eq!(out, "TRAILS 1\nTRAIL 0 1 2 3 4 5 0\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["recognize", "perfect", "x"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["stats", "/nonexistent/file"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.starts_with("vsplit: "));
        assert_eq!(run_str(&["gen", "cycle", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn solve_then_verify() {
        let f = temp("c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
        for param in ["ChVS", "ChVXS", "IVXS", "PVS", "ChVD", "ChED"] {
            let (code, out, _) = run_str(&["solve", param, &f, "--kmax", "3"]);
            assert_eq!(code, 0, "{param}: {out}");
            assert!(out.starts_with(&format!("PARAM {param}\n")));
            let r = temp(&format!("c5.{param}"), &out);
            let (code, vout, _) = run_str(&["verify", &f, &r]);
            assert_eq!(code, 0, "{param}: {vout}");
            assert!(vout.ends_with("VALID true\n"));
        }
        let (code, out, _) = run_str(&["solve", "PVS", &f, "--kmax", "0"]);
        assert_eq!(code, 1);
        assert!(out.contains("OPT >=1"));
        let (code, _, err) = run_str(&["solve", "ChVS", &f, "--budget-nodes", "0"]);
        assert_eq!(code, EXIT_BUDGET, "{err}");
    }

    #[test]
    fn bare_sequences() {
        let f = temp("c4.edges", "0 1\n1 2\n2 3\n3 0\n");
        let s = temp("c4.seq", "0 : 1 | 3\n");
        assert_eq!(run_str(&["verify", &f, &s]).0, EXIT_USAGE);
        let (code, out, _) = run_str(&["verify", &f, &s, "--target", "union-of-paths"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["apply", &f, &s]);
        assert_eq!(code, 0);
        assert!(out.starts_with("n 5\n"));
        let inc = temp("claw.seq", "0 : 1,2 | 2,3\n");
        let claw = temp("claw2.edges", "0 1\n0 2\n0 3\n");
        let (code, out, _) = run_str(&["make-exclusive", &claw, &inc, "--target", "unit-interval"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn gen_reduce_extract() {
        let (_, g, _) = run_str(&["gen", "cubic_sample", "fig2"]);
        let src = temp("fig2.edges", &g);
        let (code, inst, _) = run_str(&["reduce", &src]);
        assert_eq!(code, 0);
        assert!(inst.starts_with("# k = 4\nn 15\n"));
        let inst_file = temp("fig2.inst", &inst);
        let (_, st, _) = run_str(&["stats", &inst_file]);
        assert!(st.contains("N 15\n") && st.contains("BUDGET 4\n") && st.contains("BIPARTITE true\n"));
        let seq = temp("fig2.seq", "7 : 0 | 2\n8 : 0 | 5\n10 : 1 | 4\n13 : 3 | 5\n");
        let (code, out, err) = run_str(&["extract", &src, &seq]);
        assert_eq!(code, 0, "{err}");
        assert!(out.starts_with("PATH "));
    }
}
