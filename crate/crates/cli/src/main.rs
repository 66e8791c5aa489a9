use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use smorder::census::{self, CensusError, RankReport};
use smorder::families::{Family, FamilySpec};
use smorder::motif::fast_counts;
use smorder::spectral::{compare_moments, moment_sequence, spectral_moment};
use smorder::{
    cut_edge_count, emit_graph6, parse_edge_list, parse_graph6, BigUint, Canonicalizer, Graph,
};

#[derive(Parser)]
#[command(
    name = "smorder",
    version,
    about = "Spectral moments and the S-order of graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact spectral moments S_0 .. S_{n-1}.
    Moments {
        #[command(flatten)]
        input: GraphInput,
        /// Stop at S_K.
        #[arg(long, value_name = "K")]
        upto: Option<usize>,
    },
    /// Compare two graphs in the S-order.
    Compare { a: String, b: String },
    /// Count the twelve small subgraph patterns.
    Count {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build a named extremal graph and print it as graph6.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Clique orders a0,a1,... for star-of-cliques.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        /// Girth for ung.
        #[arg(long)]
        g: Option<usize>,
        /// Relabel to the canonical form used by `rank`.
        #[arg(long)]
        canonical: bool,
    },
    /// List the connected n-vertex graphs with k cut edges in S-order.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// graph6 catalog to use instead of the built-in enumeration.
        #[arg(long, value_name = "FILE")]
        from: Option<PathBuf>,
    },
    /// Check the extremal characterizations over a complete census.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        from: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// graph6 strings; read one per line from standard input when absent.
    graphs: Vec<String>,
    /// Read a single graph in edge-list format instead.
    #[arg(long, value_name = "PATH", conflicts_with = "graphs")]
    edge_list: Option<PathBuf>,
}

/// Failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("smorder: {}", e.0);
        return ExitCode::from(2);
    }
    let fmt = cli.format;
    let result = match cli.command {
        Command::Moments { input, upto } => cmd_moments(&input, upto, fmt),
        Command::Compare { a, b } => cmd_compare(&a, &b, fmt),
        Command::Count { input } => cmd_count(&input, fmt),
        Command::Construct {
            family,
            n,
            k,
            parts,
            g,
            canonical,
        } => cmd_construct(family, n, k, parts, g, canonical, fmt),
        Command::Rank { n, k, from } => cmd_rank(n, k, from, fmt),
        Command::Verify { n, from } => cmd_verify(n, from, fmt),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("smorder: {}", e.0);
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var("SMORDER_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| {
        UsageError(format!(
            "SMORDER_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    Ok(())
}

/// A parsed input graph and the label it is reported under.
struct Labeled {
    label: String,
    graph: Graph,
}

fn read_graphs(input: &GraphInput) -> Result<Vec<Labeled>, UsageError> {
    if let Some(path) = &input.edge_list {
        let text =
            fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        let graph = parse_edge_list(&text)?;
        let label = emit_graph6(&graph).unwrap_or_else(|_| path.display().to_string());
        return Ok(vec![Labeled { label, graph }]);
    }
    let texts: Vec<String> = if input.graphs.is_empty() {
        io::stdin()
            .lock()
            .lines()
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|l| !l.trim().is_empty())
            .collect()
    } else {
        input.graphs.clone()
    };
    if texts.is_empty() {
        return Err(UsageError("no input graphs".into()));
    }
    texts.iter().map(|t| parse_one(t)).collect()
}

fn parse_one(text: &str) -> Result<Labeled, UsageError> {
    let graph = parse_graph6(text.trim_end()).map_err(|e| UsageError(format!("`{text}`: {e}")))?;
    let label = emit_graph6(&graph)?;
    Ok(Labeled { label, graph })
}

fn emit(line: impl std::fmt::Display) {
    let mut out = io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(out, "{line}");
}

fn cmd_moments(input: &GraphInput, upto: Option<usize>, fmt: Format) -> CmdResult {
    let graphs = read_graphs(input)?;
    let several = graphs.len() > 1;
    for Labeled { label, graph } in &graphs {
        let seq = moment_sequence(graph).map_err(|e| UsageError(format!("{label}: {e}")))?;
        let last = upto.map_or(seq.order(), |u| seq.order().min(u + 1));
        if several && fmt == Format::Text {
            emit(format!("# {label}"));
        }
        for (k, s) in seq.values()[..last].iter().enumerate() {
            match fmt {
                Format::Text => emit(format!("{k} {s}")),
                Format::JsonLines => {
                    emit(json!({ "graph6": label, "k": k, "moment": s.to_string() }))
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(a: &str, b: &str, fmt: Format) -> CmdResult {
    let ga = parse_one(a)?;
    let gb = parse_one(b)?;
    let len = ga.graph.order().max(gb.graph.order());
    let sa = moments_to(&ga.graph, len)?;
    let sb = moments_to(&gb.graph, len)?;
    let res = compare_moments(&sa, &sb);
    let pivot_values = res.pivot.map(|p| (value_at(&sa, p), value_at(&sb, p)));
    match fmt {
        Format::Text => match (res.pivot, &pivot_values) {
            (Some(p), Some((x, y))) => {
                emit(format!("{}, pivot={p}, S_{p}: {x} vs {y}", res.relation))
            }
            _ => emit(res.relation),
        },
        Format::JsonLines => emit(json!({
            "a": ga.label,
            "b": gb.label,
            "relation": res.relation.to_string(),
            "pivot": res.pivot,
            "a_value": pivot_values.as_ref().map(|v| v.0.clone()),
            "b_value": pivot_values.as_ref().map(|v| v.1.clone()),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn moments_to(g: &Graph, len: usize) -> Result<Vec<BigUint>, UsageError> {
    if g.order() == 0 {
        return Err(UsageError("graph has no vertices".into()));
    }
    Ok((0..len).map(|k| spectral_moment(g, k)).collect())
}

fn value_at(seq: &[BigUint], i: usize) -> String {
    seq.get(i).map_or_else(|| "-".into(), ToString::to_string)
}

fn cmd_count(input: &GraphInput, fmt: Format) -> CmdResult {
    let graphs = read_graphs(input)?;
    let several = graphs.len() > 1;
    for Labeled { label, graph } in &graphs {
        let counts = fast_counts(graph);
        match fmt {
            Format::Text => {
                if several {
                    emit(format!("# {label}"));
                }
                for (m, c) in counts.iter() {
                    emit(format!("{m} {c}"));
                }
            }
            Format::JsonLines => {
                let mut obj = serde_json::Map::new();
                obj.insert("graph6".into(), json!(label));
                for (m, c) in counts.iter() {
                    obj.insert(m.name().into(), json!(c.to_string()));
                }
                emit(serde_json::Value::Object(obj));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(
    family: Family,
    n: usize,
    k: Option<usize>,
    parts: Vec<usize>,
    g: Option<usize>,
    canonical: bool,
    fmt: Format,
) -> CmdResult {
    let mut spec = FamilySpec::new(family, n).with_parts(parts);
    spec.k = k;
    spec.girth = g;
    let mut graph = spec.build()?;
    if canonical {
        graph = Canonicalizer::default().canonical_graph(&graph)?.0;
    }
    let g6 = emit_graph6(&graph)?;
    match fmt {
        Format::Text => emit(g6),
        Format::JsonLines => emit(json!({
            "family": family.name(),
            "n": n,
            "graph6": g6,
            "cut_edges": cut_edge_count(&graph).ok(),
        })),
    }
    Ok(ExitCode::SUCCESS)
}

/// Connected graphs of order `n`, from a catalog file or the built-in enumeration.
fn census_graphs(n: usize, from: Option<PathBuf>) -> Result<Vec<Graph>, UsageError> {
    let Some(path) = from else {
        return census::enumerate_connected(n).map_err(|e| match e {
            CensusError::AboveBuiltinBound(_) => UsageError(e.to_string()),
            other => other.into(),
        });
    };
    let ingest = census::ingest_graph6(&path, false)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    for d in &ingest.diagnostics {
        eprintln!("smorder: {}:{}: {}", path.display(), d.line, d.message);
    }
    let total = ingest.graphs.len();
    let graphs: Vec<Graph> = ingest
        .graphs
        .into_iter()
        .filter(|g| g.order() == n && g.is_connected())
        .collect();
    if graphs.len() < total {
        eprintln!(
            "smorder: skipped {} catalog graph(s) that are not connected on {n} vertices",
            total - graphs.len()
        );
    }
    if ingest.duplicates > 0 {
        eprintln!(
            "smorder: dropped {} isomorphic duplicate(s)",
            ingest.duplicates
        );
    }
    Ok(graphs)
}

fn cmd_rank(n: usize, k: usize, from: Option<PathBuf>, fmt: Format) -> CmdResult {
    if n > census::BUILTIN_MAX_ORDER && from.is_none() {
        return Err(CensusError::AboveBuiltinBound(n).into());
    }
    let graphs = census_graphs(n, from)?;
    let classes = census::classify(&graphs)?;
    let Some(class) = classes.get(&k) else {
        eprintln!("smorder: no connected {n}-vertex graph has exactly {k} cut edges");
        return Ok(ExitCode::SUCCESS);
    };
    let report = census::rank(class)?;
    for (i, r) in report.ordered.iter().enumerate() {
        let flags = rank_flags(&report, i);
        match fmt {
            Format::Text => {
                let tail = if flags.is_empty() {
                    String::new()
                } else {
                    format!(" {}", flags.join(","))
                };
                emit(format!("{} {}{tail}", r.graph6, r.moments));
            }
            Format::JsonLines => emit(json!({
                "n": n,
                "k": k,
                "index": i,
                "graph6": r.graph6,
                "moments": r.moments,
                "flags": flags,
            })),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rank_flags(report: &RankReport, i: usize) -> Vec<&'static str> {
    let len = report.len();
    let mut flags = Vec::new();
    if i == 0 {
        flags.push("first");
    }
    if i == 1 && len > 2 {
        flags.push("second");
    }
    if len > 2 && i == len - 2 {
        flags.push("second-last");
    }
    if i + 1 == len && len > 1 {
        flags.push("last");
    }
    if report.tie_groups.iter().any(|g| g.contains(&i)) {
        flags.push("tie");
    }
    flags
}

fn cmd_verify(n: usize, from: Option<PathBuf>, fmt: Format) -> CmdResult {
    if n > census::BUILTIN_MAX_ORDER && from.is_none() {
        return Err(CensusError::AboveBuiltinBound(n).into());
    }
    let graphs = census_graphs(n, from)?;
    let report = census::verify_theorems(n, &graphs)?;
    match fmt {
        Format::Text => print!("{report}"),
        Format::JsonLines => {
            for c in &report.claims {
                emit(serde_json::to_string(c)?);
            }
        }
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
