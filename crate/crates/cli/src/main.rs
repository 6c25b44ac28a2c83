//! `mnt` — command-line front-end for the MNT/MNH toolkit.
//!
//! Thin adapters only: every subcommand parses flags, reads graph6, calls
//! the library, and prints. graph6 is the universal pipe format on
//! stdin/stdout; `--format json` switches machine output on. Identical
//! flags produce byte-identical stdout, including under any `--jobs`
//! count (wall-clock timing goes only to `--out` stats files).
//!
//! Exit codes: 0 success, 1 a `--assert` check failed, 2 usage or input
//! error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mnt_core::graph::Graph;
use mnt_core::search::{SearchConfig, SearchResult};
use mnt_core::{bounds, classify, constructions, graph6, laws, named, search};
use std::io::Read;
use std::path::PathBuf;

mod output;

const EXIT_ASSERT_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "mnt",
    about = "Exact tools for maximal nontraceable and maximal nonhamiltonian graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Read graph6 lines from a file.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Read graph6 lines from standard input.
    #[arg(long)]
    stdin: bool,
    /// Use a built-in graph from the catalog.
    #[arg(long, value_name = "NAME")]
    name: Option<String>,
}

impl InputArgs {
    fn read_graphs(&self) -> Result<Vec<Graph>> {
        let sources = usize::from(self.input.is_some())
            + usize::from(self.stdin)
            + usize::from(self.name.is_some());
        if sources != 1 {
            bail!("choose exactly one input: --in FILE, --stdin, or --name NAME");
        }
        if let Some(name) = &self.name {
            return Ok(vec![named::named(name).map_err(|e| anyhow!("{e}"))?]);
        }
        let text = if self.stdin {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            buf
        } else {
            let path = self.input.as_ref().expect("checked above");
            std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?
        };
        let graphs = graph6::read_graph6_stream(&text)
            .map_err(|(line, e)| anyhow!("line {line}: {e}"))?;
        if graphs.is_empty() {
            bail!("no graphs in input");
        }
        Ok(graphs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AssertProp {
    Traceable,
    Nontraceable,
    Hamiltonian,
    Nonhamiltonian,
    Mnt,
    Mnh,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs: traceable / hamiltonian / MNT / MNH, with certificates.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Exit 1 unless every input graph has the property.
        #[arg(long, value_enum)]
        assert: Option<AssertProp>,
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
    },
    /// Emit a construction as graph6.
    Construct {
        #[command(subcommand)]
        family: ConstructCommand,
    },
    /// List base edges eligible for the two-appendage extension.
    DkwEligible {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
    },
    /// Run the structural law checkers and report violations.
    Lemmas {
        #[command(flatten)]
        input: InputArgs,
        /// Remove enumeration caps (paths/cutsets) for n <= 10.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Lower/upper bounds and status of g(n) over a range.
    Bounds {
        /// Inclusive range, e.g. 8..13
        #[arg(long, value_name = "A..B")]
        range: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Isomorph-free exhaustive search for minimum MNT/MNH size.
    Search {
        #[arg(value_enum)]
        target: TargetArg,
        #[arg(short = 'n', long = "order", value_name = "N")]
        order: usize,
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
        /// Soft budget on generated classes (overrides MNT_MAX_CLASSES).
        #[arg(long, value_name = "C")]
        max_classes: Option<u64>,
        /// Write a checkpoint here after each completed level.
        #[arg(long, value_name = "FILE")]
        checkpoint: Option<PathBuf>,
        /// Resume from a checkpoint file.
        #[arg(long, value_name = "FILE")]
        resume: Option<PathBuf>,
        /// Directory for witness file and stats JSON.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Emit a built-in graph as graph6 (or list the catalog).
    Named {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Mnt,
    Mnh,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Two disjoint complete graphs K_k and K_l.
    DisjointCliques {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        l: usize,
    },
    /// Clique with two appendages on one attachment vertex.
    Zelinka1 {
        #[arg(long, value_name = "R")]
        clique: usize,
        /// Two appendage sizes from {1,2}, e.g. 1,2
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        sizes: Vec<usize>,
    },
    /// Clique with three appendages on three attachment vertices.
    Zelinka2 {
        #[arg(long, value_name = "R")]
        clique: usize,
        /// Three appendage sizes from {1,2}, e.g. 2,2,1
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        sizes: Vec<usize>,
    },
    /// Two-appendage extension of an eligible cubic MNH base.
    Dkw {
        /// Catalog name (petersen), a file with one graph6 line, or `-` for stdin.
        #[arg(long)]
        base: String,
        /// Attachment edge, e.g. 0,1
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        edge: Vec<usize>,
        /// Size of the second appendage (1 or 2).
        #[arg(long, value_name = "SIZE")]
        h2: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit 0.
            if e.use_stderr() {
                eprint!("{e}");
                std::process::exit(EXIT_USAGE);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

fn configure_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(k) = jobs {
        if k == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("initializing worker pool")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify {
            input,
            format,
            assert,
            jobs,
        } => {
            configure_jobs(jobs)?;
            let graphs = input.read_graphs()?;
            let reports = classify::classify_batch(&graphs, Default::default());
            output::print_classification(&graphs, &reports, format == Format::Json)?;
            if let Some(prop) = assert {
                let ok = reports.iter().all(|r| match prop {
                    AssertProp::Traceable => r.traceable,
                    AssertProp::Nontraceable => !r.traceable,
                    AssertProp::Hamiltonian => r.hamiltonian,
                    AssertProp::Nonhamiltonian => !r.hamiltonian,
                    AssertProp::Mnt => r.mnt,
                    AssertProp::Mnh => r.mnh,
                });
                if !ok {
                    return Ok(EXIT_ASSERT_FAILED);
                }
            }
            Ok(0)
        }
        Command::Construct { family } => {
            let g = build_construction(family)?;
            println!("{}", graph6::to_graph6(&g));
            Ok(0)
        }
        Command::DkwEligible { input, format, jobs } => {
            configure_jobs(jobs)?;
            let graphs = input.read_graphs()?;
            output::print_dkw_eligible(&graphs, format == Format::Json)?;
            Ok(0)
        }
        Command::Lemmas {
            input,
            exhaustive,
            format,
        } => {
            let graphs = input.read_graphs()?;
            let reports: Vec<laws::LemmaReport> =
                graphs.iter().map(|g| laws::check_all(g, exhaustive)).collect();
            output::print_lemma_reports(&reports, format == Format::Json)?;
            Ok(0)
        }
        Command::Bounds { range, format } => {
            let (a, b) = parse_range(&range)?;
            let mut rows = Vec::new();
            for n in a..=b {
                rows.push(bounds::g_status(n).map_err(|e| anyhow!("{e}"))?);
            }
            output::print_bounds(&rows, format == Format::Json)?;
            Ok(0)
        }
        Command::Search {
            target,
            order,
            jobs,
            max_classes,
            checkpoint,
            resume,
            out,
            format,
        } => {
            configure_jobs(jobs)?;
            let budget = max_classes.or_else(|| {
                std::env::var("MNT_MAX_CLASSES")
                    .ok()
                    .and_then(|v| v.parse().ok())
            });
            let resume = match resume {
                Some(path) => Some(search::load_checkpoint(&path).map_err(|e| anyhow!("{e}"))?),
                None => None,
            };
            let config = SearchConfig {
                max_classes: budget,
                checkpoint_path: checkpoint,
                resume,
                mode: Default::default(),
            };
            let outcome = match target {
                TargetArg::Mnt => search::min_mnt_size(order, &config),
                TargetArg::Mnh => search::min_mnh_size(order, &config),
            }
            .map_err(|e| anyhow!("{e}"))?;
            output::print_search_outcome(&outcome, format == Format::Json)?;
            if let Some(dir) = out {
                if matches!(outcome.result, SearchResult::Exact { .. }) {
                    let path =
                        search::write_witnesses(&dir, &outcome).map_err(|e| anyhow!("{e}"))?;
                    eprintln!("witnesses: {}", path.display());
                }
                let stats_path = dir.join(format!(
                    "{}-n{}-stats.json",
                    outcome.target, outcome.n
                ));
                std::fs::create_dir_all(&dir)?;
                std::fs::write(
                    &stats_path,
                    serde_json::to_string_pretty(&outcome.stats_json())?,
                )?;
                eprintln!("stats: {}", stats_path.display());
            }
            Ok(0)
        }
        Command::Named { name, list } => {
            if list || name.is_none() {
                for entry in named::CATALOG {
                    println!("{entry}");
                }
                return Ok(0);
            }
            let g = named::named(&name.expect("checked")).map_err(|e| anyhow!("{e}"))?;
            println!("{}", graph6::to_graph6(&g));
            Ok(0)
        }
    }
}

fn build_construction(cmd: ConstructCommand) -> Result<Graph> {
    let g = match cmd {
        ConstructCommand::DisjointCliques { k, l } => {
            constructions::disjoint_cliques(k, l).map_err(|e| anyhow!("{e}"))?
        }
        ConstructCommand::Zelinka1 { clique, sizes } => {
            let sizes: [usize; 2] = sizes
                .try_into()
                .map_err(|_| anyhow!("--sizes takes exactly two values"))?;
            constructions::zelinka_type1(clique, sizes).map_err(|e| anyhow!("{e}"))?
        }
        ConstructCommand::Zelinka2 { clique, sizes } => {
            let sizes: [usize; 3] = sizes
                .try_into()
                .map_err(|_| anyhow!("--sizes takes exactly three values"))?;
            constructions::zelinka_type2(clique, sizes).map_err(|e| anyhow!("{e}"))?
        }
        ConstructCommand::Dkw { base, edge, h2 } => {
            let base_graph = resolve_base(&base)?;
            let [y1, y2]: [usize; 2] = edge
                .try_into()
                .map_err(|_| anyhow!("--edge takes exactly two vertices"))?;
            constructions::dkw_construct(&base_graph, y1, y2, h2).map_err(|e| anyhow!("{e}"))?
        }
    };
    Ok(g)
}

fn resolve_base(base: &str) -> Result<Graph> {
    if base == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        let graphs =
            graph6::read_graph6_stream(&buf).map_err(|(line, e)| anyhow!("line {line}: {e}"))?;
        return graphs
            .into_iter()
            .next()
            .ok_or_else(|| anyhow!("no base graph on stdin"));
    }
    if let Ok(g) = named::named(base) {
        return Ok(g);
    }
    if let Ok(text) = std::fs::read_to_string(base) {
        let graphs =
            graph6::read_graph6_stream(&text).map_err(|(line, e)| anyhow!("line {line}: {e}"))?;
        return graphs
            .into_iter()
            .next()
            .ok_or_else(|| anyhow!("no base graph in {base}"));
    }
    graph6::from_graph6(base).map_err(|e| anyhow!("base `{base}`: {e}"))
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("range must look like A..B, got `{text}`"))?;
    let a: usize = a.trim().parse().context("range start")?;
    let b: usize = b.trim().parse().context("range end")?;
    if a > b {
        bail!("empty range {a}..{b}");
    }
    Ok((a, b))
}
