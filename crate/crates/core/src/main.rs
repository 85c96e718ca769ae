use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use knotcert::certify::{certify, find_links};
use knotcert::diagram::{find_symmetry, Diagram};
use knotcert::fixtures;
use knotcert::graph::{
    apply_script, complete_map, g7_script, is_isomorphic, k7, parse_cycles, Graph, GraphFile, MoveScript,
    VertexMap,
};
use knotcert::invariants::DEFAULT_MAX_CROSSINGS;

/// Spatial-graph diagram certification.
///
/// Exit status: 0 when the checked property holds, 1 when it is refuted,
/// 2 on bad input or usage. Diagram arguments accept a path or
/// `builtin:NAME` for a bundled fixture (g7_figure2, k7_control, trefoil,
/// figure8, hopf). KNOTCERT_THREADS sets the worker count (0 = auto).
#[derive(Parser)]
#[command(name = "knotcert", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply a move script (default: the K7 -> G7 script) to a graph (default: K7).
    Construct {
        #[arg(long)]
        script: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit the graph after every step.
        #[arg(long)]
        intermediates: bool,
    },
    /// Check a diagram's structure and print its underlying graph.
    Validate {
        diagram: String,
        #[arg(long)]
        expect_graph: Option<PathBuf>,
    },
    /// Classify every cycle of a diagram as knotted or unknotted.
    Certify {
        diagram: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
        /// Write the JSON report here (`-` for standard output).
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record wall time in the report (makes it nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// List vertex-disjoint cycle pairs with nonzero linking number.
    Links {
        diagram: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check that a vertex permutation extends to a symmetry of the diagram.
    Symmetry {
        diagram: String,
        /// File holding cycle notation like `(c h)(e i)` or a JSON object.
        #[arg(long, conflicts_with = "cycles")]
        map: Option<PathBuf>,
        /// Cycle notation given inline.
        #[arg(long)]
        cycles: Option<String>,
        /// Reverse all rotations (orientation-reversing map of the sphere).
        #[arg(long)]
        reflect: bool,
        /// Exchange over and under at every crossing.
        #[arg(long)]
        flip: bool,
    },
    /// Decide whether two graph files are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
}

type Fallible<T> = Result<T, String>;

// Writes to stdout, ignoring a closed pipe.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

fn read(path: &Path) -> Fallible<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Fallible<()> {
    match path {
        None => {
            use std::io::Write;
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
        Some(p) if p == Path::new("-") => write_out(None, text),
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
    }
}

fn load_graph(path: &Path) -> Fallible<Graph> {
    Graph::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Returns the diagram and an id for reports.
fn load_diagram(arg: &str) -> Fallible<(Diagram, String)> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        let text = fixtures::by_name(name).ok_or_else(|| format!("no bundled diagram `{name}`"))?;
        let d = Diagram::parse(text).map_err(|e| format!("{arg}: {e}"))?;
        return Ok((d, name.to_string()));
    }
    let path = Path::new(arg);
    let d = Diagram::parse(&read(path)?).map_err(|e| format!("{arg}: {e}"))?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| arg.to_string());
    Ok((d, id))
}

fn pool() -> Fallible<rayon::ThreadPool> {
    let n = match std::env::var("KNOTCERT_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("KNOTCERT_THREADS must be a non-negative integer, got `{v}`"))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| e.to_string())
}

fn verdict(holds: bool) -> ExitCode {
    ExitCode::from(if holds { 0 } else { 1 })
}

#[derive(Serialize)]
struct ConstructOutput {
    result: GraphFile,
    intermediates: Vec<GraphFile>,
}

fn construct(
    script: Option<PathBuf>,
    graph: Option<PathBuf>,
    out: Option<PathBuf>,
    intermediates: bool,
) -> Fallible<ExitCode> {
    let script = match script {
        Some(p) => MoveScript::from_json(&read(&p)?).map_err(|e| format!("{}: {e}", p.display()))?,
        None => g7_script(),
    };
    let start = match graph {
        Some(p) => load_graph(&p)?,
        None => k7(),
    };
    let run = apply_script(&start, &script).map_err(|e| e.to_string())?;
    let text = if intermediates {
        let o = ConstructOutput {
            result: GraphFile::from(&run.result),
            intermediates: run.intermediates.iter().map(GraphFile::from).collect(),
        };
        serde_json::to_string_pretty(&o).expect("serializes") + "\n"
    } else {
        run.result.to_json()
    };
    write_out(out.as_deref(), &text)?;
    let degrees = run.result.degrees();
    eprintln!(
        "{} vertices, {} edges; degrees {}",
        run.result.vertex_count(),
        run.result.edge_count(),
        degrees
            .iter()
            .map(|(v, k)| format!("{v}:{k}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(ExitCode::SUCCESS)
}

fn validate(diagram: &str, expect: Option<PathBuf>) -> Fallible<ExitCode> {
    let (d, id) = load_diagram(diagram)?;
    let violations = d.validate();
    if !violations.is_empty() {
        say!("{id}: {} violation(s)", violations.len());
        for v in &violations {
            say!("  {v}");
        }
        return Ok(ExitCode::from(1));
    }
    let g = d.underlying_graph().map_err(|e| e.to_string())?;
    say!(
        "{id}: valid; {} vertices, {} crossings, {} arcs; underlying graph has {} edges",
        d.vertices.len(),
        d.crossings.len(),
        d.arc_count(),
        g.edge_count()
    );
    if let Some(p) = expect {
        let want = load_graph(&p)?;
        match is_isomorphic(&g, &want) {
            Some(m) => say!("isomorphic to {}: {}", p.display(), fmt_map(&m)),
            None => {
                say!("not isomorphic to {}", p.display());
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(diagram: &str, max: usize, report: Option<PathBuf>, timing: bool) -> Fallible<ExitCode> {
    let (d, id) = load_diagram(diagram)?;
    let t0 = Instant::now();
    let mut rep = pool()?
        .install(|| certify(&d, &id, max))
        .map_err(|e| e.to_string())?;
    if timing {
        rep.wall_time_ms = Some(t0.elapsed().as_millis());
    }
    let to_stdout = report.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        for r in &rep.records {
            let ids: Vec<&str> = r.crossings.iter().map(|c| c.0.as_str()).collect();
            let detail = r.polynomial_text.as_deref().or(r.reason.as_deref()).unwrap_or("");
            say!(
                "{:<28} {:<14} {:<12} {}",
                r.cycle.to_string(),
                ids.join(","),
                r.verdict,
                detail
            );
        }
        say!(
            "{}: {} cycles, {} knotted, {} inconclusive (max crossings {}): {}",
            rep.diagram,
            rep.cycle_count,
            rep.knotted_cycles,
            rep.inconclusive_cycles,
            rep.max_crossings,
            rep.summary.label()
        );
    }
    if let Some(p) = report {
        write_out(Some(&p), &rep.to_json())?;
    }
    Ok(verdict(rep.knotted_cycles == 0 && rep.inconclusive_cycles == 0))
}

fn links(diagram: &str, report: Option<PathBuf>) -> Fallible<ExitCode> {
    let (d, id) = load_diagram(diagram)?;
    let rep = pool()?
        .install(|| find_links(&d, &id))
        .map_err(|e| e.to_string())?;
    let to_stdout = report.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        for r in &rep.records {
            let ids: Vec<&str> = r.crossings.iter().map(|c| c.0.as_str()).collect();
            say!(
                "{:<20} {:<28} lk={:<3} {}",
                r.cycles[0].to_string(),
                r.cycles[1].to_string(),
                r.linking_number,
                ids.join(",")
            );
        }
        say!(
            "{}: {} disjoint pairs, {} linked, {} with odd linking number",
            rep.diagram,
            rep.pairs_examined,
            rep.linked_pairs,
            rep.odd_pairs
        );
    }
    if let Some(p) = report {
        write_out(Some(&p), &rep.to_json())?;
    }
    Ok(verdict(rep.linked_pairs > 0))
}

fn parse_map(text: &str) -> Fallible<VertexMap> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| format!("vertex map: {e}"))
    } else {
        parse_cycles(t).map_err(|e| e.to_string())
    }
}

fn fmt_map(m: &VertexMap) -> String {
    let moved: Vec<String> = m
        .iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| format!("{a}->{b}"))
        .collect();
    if moved.is_empty() {
        "identity".into()
    } else {
        moved.join(" ")
    }
}

fn symmetry(
    diagram: &str,
    map: Option<PathBuf>,
    cycles: Option<String>,
    reflect: bool,
    flip: bool,
) -> Fallible<ExitCode> {
    let (d, id) = load_diagram(diagram)?;
    let partial = match (map, cycles) {
        (Some(p), _) => parse_map(&read(&p)?)?,
        (None, Some(c)) => parse_map(&c)?,
        (None, None) => VertexMap::new(),
    };
    if let Some(v) = partial
        .keys()
        .chain(partial.values())
        .find(|v| !d.vertices.contains_key(*v))
    {
        return Err(format!("vertex map mentions unknown vertex `{v}`"));
    }
    let full = complete_map(d.vertices.keys().map(String::as_str), &partial);
    let r = d.resolve().map_err(|e| e.to_string())?;
    match find_symmetry(&d, &r, &full, reflect, flip).map_err(|e| e.to_string())? {
        Some(w) => {
            say!("{id}: symmetry holds; crossings {}", w.crossing_cycles());
            Ok(ExitCode::SUCCESS)
        }
        None => {
            say!("{id}: no symmetry extends {}", fmt_map(&full));
            Ok(ExitCode::from(1))
        }
    }
}

fn iso(first: &Path, second: &Path) -> Fallible<ExitCode> {
    let (g, h) = (load_graph(first)?, load_graph(second)?);
    match is_isomorphic(&g, &h) {
        Some(m) => {
            say!("{}", serde_json::to_string_pretty(&m).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        None => {
            say!("not isomorphic");
            Ok(ExitCode::from(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Construct {
            script,
            graph,
            out,
            intermediates,
        } => construct(script, graph, out, intermediates),
        Cmd::Validate {
            diagram,
            expect_graph,
        } => validate(&diagram, expect_graph),
        Cmd::Certify {
            diagram,
            max_crossings,
            report,
            timing,
        } => cmd_certify(&diagram, max_crossings, report, timing),
        Cmd::Links { diagram, report } => links(&diagram, report),
        Cmd::Symmetry {
            diagram,
            map,
            cycles,
            reflect,
            flip,
        } => symmetry(&diagram, map, cycles, reflect, flip),
        Cmd::Iso { first, second } => iso(&first, &second),
    };
    res.unwrap_or_else(|e| {
        eprintln!("knotcert: {e}");
        ExitCode::from(2)
    })
}
