//! The `transor` command line.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use transor_core::oracle::{self, random_family};
use transor_core::orientation::orientation_from_labels;
use transor_core::{
    color_classes, count_orientations, decomposition_tree, enumerate_orientations, is_comparability, is_transitive,
    multiplex_partition, BigUint, Error as CoreError, Graph, GraphBuilder, VertexSet,
};

use crate::format::{parse_edge_list, write_edge_list};
use crate::output;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A `false` verdict from `check` or `verify`.
    pub const FALSE: i32 = 1;
    /// `oracle-compare` found a disagreement.
    pub const DISAGREEMENT: i32 = 2;
    /// Bad arguments or unparsable input.
    pub const USAGE: i32 = 64;
    /// The input is too large for the brute-force oracle.
    pub const ORACLE_SCALE: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const IO: i32 = 74;
}

#[derive(Debug, Parser)]
#[command(
    name = "transor",
    version,
    about = "Strong-module decomposition and transitive orientations of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file (edge list or DIMACS); stdin when absent or `-`
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the color classes and their spans
    Colors {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Print the decomposition tree
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Graphviz output instead of JSON
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the maximal multiplices, one per series or prime node
    Multiplexes {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the graph is a comparability graph (exit 0 or 1)
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Use the brute-force oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Count the transitive orientations
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Use the brute-force oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Stream transitive orientations, one JSON line each
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        /// Use the brute-force oracle (sorted output)
        #[arg(long)]
        oracle: bool,
    },
    /// Check that an orientation is transitive (exit 0 or 1)
    Verify {
        #[command(flatten)]
        input: Input,
        /// JSON list of ["tail","head"] pairs
        #[arg(long, value_name = "FILE")]
        orientation: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the fast path with the brute-force oracle
    OracleCompare {
        #[command(flatten)]
        input: Input,
        /// Check the seeded family of random graphs instead of an input file
        #[arg(long, value_name = "S", conflicts_with = "file")]
        seed: Option<u64>,
    },
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Scale(String),
    #[error("cannot read {0}")]
    NoInput(String, #[source] io::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => exit::USAGE,
            Failure::Scale(_) => exit::ORACLE_SCALE,
            Failure::NoInput(..) => exit::NO_INPUT,
            Failure::Io(_) => exit::IO,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::OracleScale { .. } => Failure::Scale(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    let _ = out.write_all(text.as_bytes());
                    exit::OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    exit::USAGE
                }
            };
        }
    };
    let result = dispatch(cli.command, stdin, out, err).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => exit::OK,
        Err(f) => {
            let _ = writeln!(err, "transor: {f}");
            f.code()
        }
    }
}

fn read_graph(input: &Input, stdin: &mut dyn Read, err: &mut dyn Write) -> Result<Graph, Failure> {
    let text = match &input.file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Failure::NoInput(path.display().to_string(), e))?
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::NoInput("stdin".into(), e))?;
            s
        }
    };
    let parsed = parse_edge_list(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    if parsed.duplicates > 0 {
        let s = if parsed.duplicates == 1 { "" } else { "s" };
        writeln!(err, "warning: {} duplicate edge line{s} ignored", parsed.duplicates)?;
    }
    if parsed.graph.vertex_count() == 0 {
        return Err(Failure::Usage("graph has no vertices".into()));
    }
    Ok(parsed.graph)
}

fn verdict(flag: bool) -> i32 {
    if flag {
        exit::OK
    } else {
        exit::FALSE
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Colors { input, json } => {
            let g = read_graph(&input, stdin, err)?;
            let colors = color_classes(&g);
            if json {
                let v = output::colors_json(&g, &colors);
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("colors serialize"))?;
            } else {
                out.write_all(output::colors_text(&g, &colors).as_bytes())?;
            }
            Ok(exit::OK)
        }
        Command::Decompose { input, dot, json: _ } => {
            let g = read_graph(&input, stdin, err)?;
            let tree = decomposition_tree(&g);
            if dot {
                let ms = multiplex_partition(&g, &tree, &color_classes(&g));
                out.write_all(output::tree_dot(&g, &tree, &ms).as_bytes())?;
            } else {
                writeln!(out, "{}", output::tree_json(&g, &tree))?;
            }
            Ok(exit::OK)
        }
        Command::Multiplexes { input, json: _ } => {
            let g = read_graph(&input, stdin, err)?;
            let tree = decomposition_tree(&g);
            let ms = multiplex_partition(&g, &tree, &color_classes(&g));
            writeln!(out, "{}", output::multiplexes_json(&g, &ms))?;
            Ok(exit::OK)
        }
        Command::Check { input, json, oracle } => {
            let g = read_graph(&input, stdin, err)?;
            let answer = if oracle {
                !oracle::reference_orientations(&g)?.is_empty()
            } else {
                is_comparability(&g)
            };
            if json {
                writeln!(out, "{{\"comparability\":{answer}}}")?;
            } else {
                writeln!(out, "comparability: {answer}")?;
            }
            Ok(verdict(answer))
        }
        Command::Count { input, json, oracle } => {
            let g = read_graph(&input, stdin, err)?;
            let n = if oracle {
                BigUint::from(oracle::reference_orientations(&g)?.len())
            } else {
                count_orientations(&g)
            };
            if json {
                writeln!(out, "{{\"count\":{n}}}")?;
            } else {
                writeln!(out, "{n}")?;
            }
            Ok(exit::OK)
        }
        Command::Enumerate { input, limit, oracle } => {
            let g = read_graph(&input, stdin, err)?;
            if oracle {
                let all = oracle::reference_orientations(&g)?;
                for o in all.iter().take(limit.unwrap_or(usize::MAX)) {
                    writeln!(out, "{}", output::orientation_json(&g, o))?;
                }
            } else {
                for o in enumerate_orientations(&g, limit) {
                    writeln!(out, "{}", output::orientation_json(&g, &o))?;
                }
            }
            Ok(exit::OK)
        }
        Command::Verify {
            input,
            orientation,
            json,
        } => {
            let g = read_graph(&input, stdin, err)?;
            let text = std::fs::read_to_string(&orientation)
                .map_err(|e| Failure::NoInput(orientation.display().to_string(), e))?;
            let pairs: Vec<(String, String)> =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", orientation.display())))?;
            let o = orientation_from_labels(&g, pairs.iter().map(|(t, h)| (t.as_str(), h.as_str())))?;
            let answer = is_transitive(&g, &o)?;
            if json {
                writeln!(out, "{{\"transitive\":{answer}}}")?;
            } else {
                writeln!(out, "transitive: {answer}")?;
            }
            Ok(verdict(answer))
        }
        Command::OracleCompare { input, seed } => {
            let graphs = match seed {
                Some(s) => random_family(s),
                None => vec![read_graph(&input, stdin, err)?],
            };
            for g in &graphs {
                if let Some(reason) = disagreement(g)? {
                    let (g, reason) = shrink(g.clone(), reason);
                    writeln!(out, "disagreement: {reason}")?;
                    writeln!(
                        out,
                        "minimal counterexample ({} vertices, {} edges):",
                        g.vertex_count(),
                        g.edge_count()
                    )?;
                    out.write_all(write_edge_list(&g).as_bytes())?;
                    return Ok(exit::DISAGREEMENT);
                }
            }
            match seed {
                Some(s) => writeln!(out, "agreement on {} random graphs from seed {s}", graphs.len())?,
                None => writeln!(out, "agreement: {} orientations", count_orientations(&graphs[0]))?,
            }
            Ok(exit::OK)
        }
    }
}

/// Largest count for which the streamed set is compared with the oracle set.
const COMPARE_SET_LIMIT: usize = 50_000;

/// Differences between the fast path and the oracle on `g`, if any.
fn disagreement(g: &Graph) -> Result<Option<String>, CoreError> {
    let reference = oracle::reference_orientations(g)?;
    let count = count_orientations(g);
    if count != BigUint::from(reference.len()) {
        return Ok(Some(format!("count {count}, oracle {}", reference.len())));
    }
    if is_comparability(g) == reference.is_empty() {
        return Ok(Some(format!(
            "comparability {}, oracle {}",
            is_comparability(g),
            !reference.is_empty()
        )));
    }
    if reference.len() <= COMPARE_SET_LIMIT {
        let fast: BTreeSet<_> = enumerate_orientations(g, None).collect();
        if fast.len() != reference.len() || !reference.iter().all(|o| fast.contains(o)) {
            return Ok(Some("enumerated set differs from oracle set".into()));
        }
    }
    if g.vertex_count() <= oracle::MAX_BRUTE_FORCE_VERTICES {
        let tree: BTreeSet<VertexSet> = decomposition_tree(g).strong_modules().into_iter().collect();
        if tree != oracle::brute_force_strong_modules(g)? {
            return Ok(Some("decomposition tree differs from oracle strong modules".into()));
        }
    }
    Ok(None)
}

/// Deletes vertices, then edges, while the disagreement persists.
fn shrink(mut g: Graph, mut reason: String) -> (Graph, String) {
    loop {
        let smaller = g
            .vertices()
            .map(|v| {
                let mut keep = g.vertex_set();
                keep.remove(v);
                g.induced_subgraph(&keep).expect("subset of V")
            })
            .chain(g.edges().map(|e| {
                let mut b = GraphBuilder::new();
                for l in g.labels() {
                    b.add_vertex(l.clone());
                }
                for f in g.edges().filter(|&f| f != e) {
                    b.add_edge(g.label(f.lo()).clone(), g.label(f.hi()).clone())
                        .expect("simple graph");
                }
                b.build()
            }))
            .filter(|h| h.vertex_count() > 0)
            .find_map(|h| match disagreement(&h) {
                Ok(Some(r)) => Some((h, r)),
                _ => None,
            });
        match smaller {
            Some((h, r)) => (g, reason) = (h, r),
            None => return (g, reason),
        }
    }
}
