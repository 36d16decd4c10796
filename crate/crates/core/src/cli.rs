//! Command-line front end. Exit codes: 0 positive verdict, 1 negative
//! verdict, 2 usage or data error.

use crate::census;
use crate::character::{achievable_graphs, edge_removal_set, suzgen_decide};
use crate::data::{fmt_set, Dataset};
use crate::graph::PrimeGraph;
use crate::group::{self, pgc_of_explicit, plan_solvable_recipe, realize_explicit_seeded, GroupError};
use crate::primes::{default_fermat, Prime};
use crate::realizability::{check_applicability, classify_psl213, Condition};
use clap::{Parser, Subcommand};
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "gkgraph", version, about = "Prime graph complements: deciders, constructions and data")]
pub struct Cli {
    /// Dataset file (defaults to $GKGRAPH_DATA, then the bundled data)
    #[arg(long, global = true)]
    pub data: Option<PathBuf>,
    /// Emit machine output as JSON lines
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the spot checks in `realize`
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Triangles, k-colorability and the solvable verdict
    Check {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Decide PSL(2,13)-solvable realizability
    #[command(name = "classify-psl213")]
    ClassifyPsl213 { graph: PathBuf },
    /// Classify every graph on a vertex set
    Enumerate {
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        exemplars: usize,
        /// Allow seven vertices
        #[arg(long)]
        force: bool,
    },
    /// Build a realizing recipe and verify it
    Realize {
        graph: PathBuf,
        #[arg(long, default_value_t = group::DEFAULT_ORDER_BOUND)]
        order_bound: u64,
    },
    /// Edge-removal sets from Brauer rows and the quotient decision
    Brauer {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Per-hypothesis report of the applicability criterion
    Applicability {
        #[arg(long)]
        group: String,
        /// Fermat primes to use (comma separated)
        #[arg(long, value_delimiter = ',')]
        fermat: Option<Vec<u64>>,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl Display) -> Result<(), Failure> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn json(&mut self, v: serde_json::Value) -> Result<(), Failure> {
        writeln!(self.out, "{}", serde_json::to_string(&v)?)?;
        Ok(())
    }
}

fn read_graph(path: &PathBuf) -> Result<PrimeGraph, Failure> {
    let s = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok(PrimeGraph::parse(&s)?)
}

fn prime(v: u64) -> Result<Prime, Failure> {
    Prime::new(v).ok_or_else(|| Failure(format!("{v} is not prime")))
}

fn fmt_coloring(c: &BTreeMap<Prime, usize>) -> String {
    c.iter().map(|(p, k)| format!("{p}:{k}")).collect::<Vec<_>>().join(" ")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, out };
    match dispatch(&cli, &mut ctx) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Outcome {
    match &cli.command {
        Command::Check { graph, k } => cmd_check(ctx, &read_graph(graph)?, *k),
        Command::ClassifyPsl213 { graph } => cmd_classify(ctx, &read_graph(graph)?),
        Command::Enumerate { vertices, out, exemplars, force } => {
            cmd_enumerate(ctx, vertices, out.as_ref(), *exemplars, *force)
        }
        Command::Realize { graph, order_bound } => {
            let data = Dataset::resolve(cli.data.as_deref())?;
            cmd_realize(ctx, &read_graph(graph)?, &data, *order_bound, cli.seed)
        }
        Command::Brauer { group, p, target } => {
            let data = Dataset::resolve(cli.data.as_deref())?;
            let target = target.as_ref().map(read_graph).transpose()?;
            cmd_brauer(ctx, &data, group, prime(*p)?, target.as_ref())
        }
        Command::Applicability { group, fermat } => {
            let data = Dataset::resolve(cli.data.as_deref())?;
            let fermat: BTreeSet<Prime> = match fermat {
                Some(list) => list.iter().map(|&v| prime(v)).collect::<Result<_, _>>()?,
                None => default_fermat().into_iter().collect(),
            };
            cmd_applicability(ctx, &data, group, &fermat)
        }
    }
}

fn cmd_check(ctx: &mut Ctx, g: &PrimeGraph, k: usize) -> Outcome {
    let triangles = g.triangles();
    let coloring = g.k_colorable(k, &BTreeMap::new())?;
    let realizable = triangles.is_empty() && k <= 3 && coloring.is_some();
    if ctx.json {
        ctx.json(json!({
            "command": "check",
            "triangles": triangles,
            "k": k,
            "colorable": coloring.is_some(),
            "coloring": coloring.as_ref().map(|c| &c.assignment),
            "solvable_realizable": realizable,
        }))?;
    } else {
        let tri: Vec<String> = triangles.iter().map(|t| format!("{}-{}-{}", t[0], t[1], t[2])).collect();
        ctx.line(format!("triangles: {}", if tri.is_empty() { "none".into() } else { tri.join(" ") }))?;
        match &coloring {
            Some(c) => ctx.line(format!("{k}-colorable: yes ({})", fmt_coloring(&c.assignment)))?,
            None => ctx.line(format!("{k}-colorable: no"))?,
        }
        ctx.line(format!("solvable-realizable: {}", if realizable { "yes" } else { "no" }))?;
    }
    Ok(realizable)
}

fn cmd_classify(ctx: &mut Ctx, g: &PrimeGraph) -> Outcome {
    let v = classify_psl213(g);
    if ctx.json {
        ctx.json(serde_json::to_value(&v)?)?;
    } else {
        ctx.line(format!("condition: {}", v.condition.label()))?;
        if let Some(x) = &v.x {
            ctx.line(format!("X: {}", fmt_set(x)))?;
        }
        if let Some(l) = &v.labeling {
            ctx.line(format!("labeling: a={} b={} c={} d={}", l.a, l.b, l.c, l.d))?;
        }
        if let Some(c) = &v.coloring {
            ctx.line(format!("coloring: {}", fmt_coloring(c)))?;
        }
        if let Some(n) = &v.refutation_note {
            ctx.line(format!("note: {n}"))?;
        }
    }
    Ok(v.realizable)
}

fn cmd_enumerate(ctx: &mut Ctx, vertices: &[u64], out: Option<&PathBuf>, per_class: usize, force: bool) -> Outcome {
    let vs: Vec<Prime> = vertices.iter().map(|&v| prime(v)).collect::<Result<_, _>>()?;
    let report = census::enumerate(&vs, per_class, force)?;
    if let Some(dir) = out {
        report.write_to(dir)?;
    }
    if ctx.json {
        let counts: BTreeMap<&str, u64> = report.counts.iter().map(|(c, n)| (c.label(), *n)).collect();
        ctx.json(
            json!({"command": "enumerate", "vertex_set": report.vertex_set, "total": report.total, "counts": counts}),
        )?;
    } else {
        ctx.line(format!(
            "vertices: {}",
            report.vertex_set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        ))?;
        ctx.line(format!("total: {}", report.total))?;
        for (c, n) in &report.counts {
            ctx.line(format!("condition {}: {n}", c.label()))?;
        }
    }
    Ok(true)
}

fn cmd_realize(ctx: &mut Ctx, g: &PrimeGraph, data: &Dataset, bound: u64, seed: u64) -> Outcome {
    let verdict = classify_psl213(g);
    match verdict.condition {
        Condition::None => {
            let note = verdict.refutation_note.unwrap_or_default();
            if ctx.json {
                ctx.json(json!({"command": "realize", "realizable": false, "note": note}))?;
            } else {
                ctx.line(format!("not realizable: {note}"))?;
            }
            Ok(false)
        }
        Condition::Cond1 => {
            let recipe = plan_solvable_recipe(g, None)?;
            let order = recipe.order();
            let check = match realize_explicit_seeded(&recipe, bound, seed) {
                Ok(group) => {
                    let got = pgc_of_explicit(&group)?;
                    if got == *g {
                        "MATCH".to_string()
                    } else {
                        format!("MISMATCH (computed {})", got.to_text())
                    }
                }
                Err(GroupError::OrderBoundExceeded { order, bound }) => {
                    format!("SKIPPED (order {order} exceeds bound {bound})")
                }
                Err(e) => return Err(e.into()),
            };
            let symbolic = if recipe.symbolic_pgc()? == *g { "MATCH" } else { "MISMATCH" };
            if ctx.json {
                ctx.json(json!({
                    "command": "realize", "realizable": true, "condition": "1", "recipe": recipe,
                    "order": order.to_string(), "explicit": check, "symbolic": symbolic,
                }))?;
            } else {
                ctx.line(serde_json::to_string_pretty(&recipe)?)?;
                ctx.line(format!("order: {order}"))?;
                ctx.line(format!("axioms: checked on 100 sampled triples (seed {seed})"))?;
                ctx.line(format!("verification (explicit): {check}"))?;
                ctx.line(format!("verification (symbolic): {symbolic}"))?;
            }
            Ok(!check.starts_with("MISMATCH") && symbolic == "MATCH")
        }
        _ => {
            let w = match group::realize_psl_symbolic(g, data) {
                Ok(w) => w,
                Err(GroupError::NotRealizable(why)) => {
                    ctx.line(format!("no data-backed witness: {why}"))?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let status = if w.matches { "MATCH" } else { "MISMATCH" };
            if ctx.json {
                ctx.json(json!({
                    "command": "realize", "realizable": true, "condition": w.verdict.condition.label(),
                    "witness": w, "symbolic": status,
                }))?;
            } else {
                ctx.line(serde_json::to_string_pretty(&w.recipe)?)?;
                ctx.line(format!("condition: {}", w.verdict.condition.label()))?;
                ctx.line(format!("nonsolvable factor: {}{}", w.group, if w.times_c2 { " (times C_2)" } else { "" }))?;
                let moved: Vec<String> =
                    w.relabel.iter().filter(|(a, b)| a != b).map(|(a, b)| format!("{a}->{b}")).collect();
                if !moved.is_empty() {
                    ctx.line(format!("relabeling: {}", moved.join(" ")))?;
                }
                ctx.line(format!("solvable part order: {}", w.recipe.order()))?;
                ctx.line(format!("verification (symbolic): {status}"))?;
            }
            Ok(w.matches)
        }
    }
}

fn cmd_brauer(ctx: &mut Ctx, data: &Dataset, group: &str, p: Prime, target: Option<&PrimeGraph>) -> Outcome {
    let base = data.get_pgc(group)?;
    let rows = data.brauer_rows(group, p)?;
    let family = rows.iter().map(|r| edge_removal_set(p, r)).collect::<Result<Vec<_>, _>>()?;
    let sets: Vec<String> = family
        .iter()
        .map(|f| f.within(base).iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" "))
        .collect();
    let decision = match target {
        Some(t) => Some(suzgen_decide(t, base, &family, p)?),
        None => None,
    };
    if ctx.json {
        ctx.json(json!({
            "command": "brauer", "group": group, "p": p, "rows": rows, "removal_sets": sets,
            "witness": decision.clone().flatten().map(|y| y.iter().map(|i| i + 1).collect::<Vec<_>>()),
            "achievable": achievable_graphs(base, &family).iter().map(|g| g.to_text()).collect::<Vec<_>>(),
        }))?;
    } else {
        for (i, (row, s)) in rows.iter().zip(&sets).enumerate() {
            ctx.line(format!("chi_{}: row {} removes {{{}}}", i + 1, fmt_set(row), s))?;
        }
        match &decision {
            Some(Some(y)) => {
                let names: Vec<String> = y.iter().map(|i| format!("chi_{}", i + 1)).collect();
                ctx.line(format!("witness Y = {{{}}}", names.join(", ")))?;
            }
            Some(None) => ctx.line("refused: no nonempty Y gives the target")?,
            None => {
                for g in achievable_graphs(base, &family) {
                    ctx.line(format!("achievable: {}", g.to_text()))?;
                }
            }
        }
    }
    Ok(!matches!(decision, Some(None)))
}

fn cmd_applicability(ctx: &mut Ctx, data: &Dataset, group: &str, fermat: &BTreeSet<Prime>) -> Outcome {
    let record = data.resolved(group)?;
    let report = check_applicability(&record, fermat)?;
    if ctx.json {
        ctx.json(serde_json::to_value(&report)?)?;
    } else {
        ctx.line(format!("group: {}", report.group))?;
        for l in report.lines() {
            ctx.line(l)?;
        }
    }
    Ok(report.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gkgraph").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn graph_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        write!(f, "{text}").unwrap();
        f
    }

    #[test]
    fn check_exit_codes() {
        let c5 = graph_file("2 3 5 7 11 ; 2-3 3-5 5-7 7-11 2-11");
        let k4 = graph_file("2 3 5 7 ; 2-3 2-5 2-7 3-5 3-7 5-7");
        let bad = graph_file("2 3 4");
        assert_eq!(run_capture(&["check", c5.path().to_str().unwrap()]).0, 0);
        assert_eq!(run_capture(&["check", k4.path().to_str().unwrap()]).0, 1);
        let (code, _, err) = run_capture(&["check", bad.path().to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
        assert_eq!(run_capture(&["check"]).0, 2);
    }

    #[test]
    fn realize_single_edge() {
        let f = graph_file("3 5 ; 3-5");
        let (code, out, _) = run_capture(&["realize", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("order: 75"));
        assert!(out.contains("verification (explicit): MATCH"));
    }

    #[test]
    fn brauer_paths() {
        let t = graph_file("2 3 7 13 ; 2-7 3-7");
        let (code, out, _) =
            run_capture(&["brauer", "--group", "PSL(2,13)", "--p", "13", "--target", t.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("witness Y = {chi_1}"));
        assert_eq!(run_capture(&["brauer", "--group", "HS", "--p", "7"]).0, 2);
    }
}
