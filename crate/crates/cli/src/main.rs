//! `efgraph`: pebble games, graph families and reproducible experiments from
//! the command line.

mod interactive;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use efgraph::ef::{
    distinguishing_depth, distinguishing_width, duplicator_survives, extract_sentence, replay,
    Transcript,
};
use efgraph::experiments::{
    antipodal_products, core_theorem, cube_vs_c6, lemma44, lollipop_theorem, reproduce_table, s44,
    suite, threshold, upper_bounds, Report, SuiteConfig, ThresholdConfig,
};
use efgraph::families::{parse_graph_arg, FamilySpec, GraphSource};
use efgraph::graph::{format_graph6, invariants, JsonGraph};
use efgraph::logic::{defines_check, parse_formula, ClassFilter};
use efgraph::pattern::{profile, treewidth};
use efgraph::Graph;
use interactive::{Seat, Session};
use serde_json::{json, Value};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "efgraph",
    version,
    about = "Ehrenfeucht-Fraisse games and first-order distinguishability of small graphs"
)]
struct Cli {
    /// Seed for the random families and simulations.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; all cores by default.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest graphs in enumeration checks.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Record wall-clock `runtime_ms` in reports (breaks byte-identical output).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A graph argument: graph6, a JSON edge list, a family spec, or `@file`
/// holding any of these.
#[derive(Args)]
struct Pair {
    g: String,
    h: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a family spec (or any graph argument).
    Gen { spec: String },
    /// Basic invariants, plus the pattern profile of connected graphs.
    Invariants { graph: String },
    /// Distinguishing depth D(G, H).
    Efd {
        #[command(flatten)]
        pair: Pair,
        /// Also print a separating sentence of depth D.
        #[arg(long)]
        sentence: bool,
    },
    /// Distinguishing width W(G, H), or survival with a given pebble count.
    Efw {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        pebbles: Option<usize>,
    },
    /// Play against the engine in the terminal.
    Play {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 3)]
        pebbles: usize,
        /// Round limit; unbounded (capped at 50) when absent.
        #[arg(long)]
        rounds: Option<usize>,
        /// The side you play.
        #[arg(long, value_enum, default_value_t = Seat::Spoiler)]
        role: Seat,
        /// Where the transcript is saved.
        #[arg(long, default_value = "transcript.json")]
        transcript: PathBuf,
        /// Replay a saved transcript instead of playing.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Check that a sentence defines containment of a pattern on small graphs.
    Defines {
        /// Sentence in s-expression syntax.
        formula: String,
        pattern: String,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 0)]
        min_vertices: usize,
        #[arg(long, default_value_t = 0)]
        min_treewidth: usize,
        #[arg(long, default_value_t = 0)]
        min_connectivity: usize,
    },
    /// Lower-bound witnesses for the four-vertex patterns.
    ReproduceTable {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Exhaustive upper-bound checks.
    UpperBounds,
    /// The jellyfish pair separated only at depth 5.
    S44 {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Tallies for the structure lemma on graphs without S_{4,4}.
    Lemma44,
    /// The cube against the hexagon, and the antipodal products over K4.
    CubeC6 {
        /// Skip the 52/40-vertex antipodal-product pair.
        #[arg(long)]
        no_products: bool,
    },
    /// Lollipop treewidth and the multipartite width witness.
    Lollipop {
        #[arg(long, default_value_t = 3)]
        a: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Clique gadgets over gadget_A.
    CoreThm {
        #[arg(long, default_value_t = 3)]
        l0: usize,
        /// Cubic base graph.
        #[arg(long, default_value = r#"{"family":"complete","params":{"n":4}}"#)]
        base: String,
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Subgraph frequency in G(n, p) at the threshold.
    Threshold {
        #[arg(long, default_value = r#"{"family":"complete","params":{"n":3}}"#)]
        pattern: String,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Every experiment, sorted by name.
    Suite {
        #[arg(long, default_value_t = 4)]
        table_n: usize,
    },
}

fn graph(arg: &str) -> Result<Graph> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    Ok(parse_graph_arg(&text)?)
}

fn source(arg: &str) -> Result<GraphSource> {
    let t = arg.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).context("bad graph JSON");
    }
    Ok(GraphSource::Graph6(format_graph6(&graph(arg)?)?))
}

enum Output {
    Reports(Vec<Report>),
    Data { value: Value, text: String },
}

fn data(value: Value) -> Output {
    let text = match &value {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    };
    Output::Data { value, text }
}

fn render(out: &Output, format: Format) -> String {
    match (out, format) {
        (Output::Reports(r), Format::Json) => {
            serde_json::to_string_pretty(r).expect("reports serialize")
        }
        (Output::Reports(r), Format::Text) => {
            r.iter().map(Report::summary).collect::<Vec<_>>().join("\n")
        }
        (Output::Data { value, .. }, Format::Json) => {
            serde_json::to_string_pretty(value).expect("values serialize")
        }
        (Output::Data { text, .. }, Format::Text) => text.clone(),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn play(
    pair: &Pair,
    pebbles: usize,
    rounds: Option<usize>,
    role: Seat,
    path: &PathBuf,
) -> Result<Output> {
    let (g, h) = (graph(&pair.g)?, graph(&pair.h)?);
    let session = Session {
        g: &g,
        h: &h,
        pebbles,
        rounds,
        seat: role,
    };
    let stdin = std::io::stdin();
    let t = interactive::run(&session, &mut stdin.lock(), &mut std::io::stdout())?;
    std::fs::write(path, t.to_json()).with_context(|| format!("writing {}", path.display()))?;
    Ok(data(json!({
        "transcript": path.display().to_string(),
        "rounds_played": t.moves.len() / 2,
        "winner": t.winner,
    })))
}

fn run(cli: &Cli) -> Result<Output> {
    let nmax = |default: usize| cli.nmax.unwrap_or(default);
    Ok(match &cli.command {
        Command::Gen { spec } => {
            // --seed fills in a spec that does not carry its own
            let g = match (
                FamilySpec::from_json(spec),
                serde_json::from_str::<Value>(spec),
            ) {
                (Ok(mut s), Ok(v)) => {
                    if v.get("seed").is_none() {
                        s.seed = cli.seed;
                    }
                    s.build()?
                }
                _ => graph(spec)?,
            };
            let text = format_graph6(&g).unwrap_or_else(|_| g.to_json());
            Output::Data {
                value: serde_json::to_value(JsonGraph::from(&g))?,
                text,
            }
        }
        Command::Invariants { graph: arg } => {
            let g = graph(arg)?;
            let mut v = serde_json::to_value(invariants(&g))?;
            v["treewidth"] = treewidth(&g).map_or(Value::Null, Value::from);
            if g.n() > 0 && g.is_connected() {
                if let Ok(p) = profile(&g) {
                    v["profile"] = serde_json::to_value(p)?;
                }
            }
            data(v)
        }
        Command::Efd { pair, sentence } => {
            let (g, h) = (graph(&pair.g)?, graph(&pair.h)?);
            let d = distinguishing_depth(&g, &h)?;
            let mut v = json!({ "depth": d });
            if *sentence {
                v["sentence"] = extract_sentence(&g, &h, d)?.to_string().into();
            }
            data(v)
        }
        Command::Efw { pair, pebbles } => {
            let (g, h) = (graph(&pair.g)?, graph(&pair.h)?);
            match pebbles {
                Some(k) => data(
                    json!({ "pebbles": k, "duplicator_survives": duplicator_survives(&g, &h, *k)? }),
                ),
                None => data(json!({ "width": distinguishing_width(&g, &h)? })),
            }
        }
        Command::Play {
            pair,
            pebbles,
            rounds,
            role,
            transcript,
            replay: saved,
        } => match saved {
            Some(path) => {
                let (g, h) = (graph(&pair.g)?, graph(&pair.h)?);
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let t = Transcript::from_json(&text)?;
                let winner = replay(&g, &h, &t)?;
                data(
                    json!({ "winner": winner, "recorded_winner": t.winner, "consistent": winner == t.winner }),
                )
            }
            None => play(pair, *pebbles, *rounds, *role, transcript)?,
        },
        Command::Defines {
            formula,
            pattern,
            connected,
            min_vertices,
            min_treewidth,
            min_connectivity,
        } => {
            let phi = parse_formula(formula)?;
            let filter = ClassFilter {
                connected: *connected,
                min_vertices: *min_vertices,
                min_treewidth: *min_treewidth,
                min_connectivity: *min_connectivity,
            };
            Output::Reports(vec![defines_check(
                &phi,
                &graph(pattern)?,
                &filter,
                nmax(6),
            )?])
        }
        Command::ReproduceTable { n } => Output::Reports(reproduce_table(*n, cli.seed)?),
        Command::UpperBounds => Output::Reports(upper_bounds(nmax(7))?),
        Command::S44 { n } => Output::Reports(vec![s44(*n)?]),
        Command::Lemma44 => Output::Reports(vec![lemma44(nmax(8))?]),
        Command::CubeC6 { no_products } => {
            let mut r = vec![cube_vs_c6()?];
            if !no_products {
                r.push(antipodal_products()?);
            }
            Output::Reports(r)
        }
        Command::Lollipop { a, n } => Output::Reports(vec![lollipop_theorem(*a, *n)?]),
        Command::CoreThm { l0, base, l } => {
            Output::Reports(vec![core_theorem(*l0, source(base)?, *l)?])
        }
        Command::Threshold {
            pattern,
            n,
            trials,
            p,
            alpha,
        } => {
            let cfg = ThresholdConfig {
                pattern: source(pattern)?,
                n: *n,
                trials: *trials,
                seed: cli.seed,
                p: *p,
                alpha: *alpha,
            };
            Output::Reports(vec![threshold(&cfg)?])
        }
        Command::Suite { table_n } => Output::Reports(suite(&SuiteConfig {
            seed: cli.seed,
            nmax: nmax(7),
            table_n: *table_n,
            timings: cli.timings,
        })?),
    })
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()?;
    }
    let start = std::time::Instant::now();
    let mut out = run(&cli)?;
    if let (true, Output::Reports(reports)) = (cli.timings, &mut out) {
        let ms = start.elapsed().as_millis() as u64;
        for r in reports.iter_mut().filter(|r| r.runtime_ms == 0) {
            r.runtime_ms = ms;
        }
    }
    emit(&render(&out, cli.format), &cli.out)
}
