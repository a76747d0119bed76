//! `kchord`: build, decode, verify and search chord sets on a cycle.

mod selector;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use kchord_core::bounds::{bounds_table, BoundsRow, Instance};
use kchord_core::construct::{construct, ConstructionPlan, Gadget, Provenance, Witness};
use kchord_core::export::{parse_graph, to_dot, to_json};
use kchord_core::oracle::{brute_force_c, required_lengths, verify_property, SearchConfig, SearchStatus, Verdict, VerifyConfig};
use kchord_core::Error as CoreError;

use selector::{parse_list, LengthSelector};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "kchord", version, about = "Chord sets on C_n realizing every cycle length with exactly k chords")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Build the chord set for (n, k).
    Construct {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        k: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print witness cycles for selected lengths.
    Decode {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        k: u64,
        /// A length, a list `3,5..9`, `all`, or `sample:<count>`.
        #[arg(short)]
        l: LengthSelector,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20_000, env = "KCHORD_MAX_ALL_N")]
        max_all_n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check a graph file (JSON or `n=<int>` edge list) for the property.
    Verify {
        input: PathBuf,
        #[arg(short)]
        k: u64,
        #[arg(long, default_value = "all")]
        lengths: LengthSelector,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip constructed witnesses and search every length.
        #[arg(long)]
        oracle_only: bool,
        /// Per-length search budget in seconds.
        #[arg(long, env = "KCHORD_TIME_LIMIT")]
        time_limit: Option<u64>,
        #[arg(long, default_value_t = 1, env = "KCHORD_WORKERS")]
        workers: usize,
        #[arg(long, default_value_t = 20_000, env = "KCHORD_MAX_ALL_N")]
        max_all_n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact minimum chord counts by exhaustive search (n <= 12).
    Search {
        /// Values of n: `6`, `6..10`, `6,8`.
        #[arg(short)]
        n: String,
        #[arg(short)]
        k: u64,
        /// Total budget per n in seconds.
        #[arg(long, env = "KCHORD_TIME_LIMIT")]
        time_limit: Option<u64>,
        #[arg(long)]
        max_chords: Option<usize>,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 1, env = "KCHORD_WORKERS")]
        workers: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Lower bounds, the upper bound and the constructed count side by side.
    Bounds {
        #[arg(short)]
        n: String,
        #[arg(short)]
        k: u64,
        /// Add exact values from exhaustive search where n <= 12.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn gadget_list(gadgets: &[Gadget]) -> String {
    gadgets.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

fn describe(w: &Witness) -> String {
    let how = match &w.provenance {
        Provenance::Short { digits } => format!("L1 digits={digits} closed by {{m,1}}"),
        Provenance::Long { j, digits } => format!("L2 j={j} digits={digits} closed by {{n,1}}"),
        Provenance::Tail { gadgets } => format!("tail {}", gadget_list(gadgets)),
    };
    let chords: Vec<String> = w.cycle.chord_edges.iter().map(ToString::to_string).collect();
    format!("l={} {how} chords {}", w.cycle.length, chords.join(" "))
}

fn cmd_construct(n: u64, k: u64, format: Format) -> Result<Outcome> {
    let full = construct(n, k)?;
    if full.exceeds_stated_bound() {
        eprintln!(
            "warning: {} chords exceed k*ceil(n^(1/k)) + k^2 = {}",
            full.chord_count(),
            full.stated_bound()
        );
    }
    let text = match format {
        Format::Json => to_json(&full)?,
        Format::Dot => to_dot(full.graph(), &format!("F_{k}({n})")),
        Format::Human | Format::Csv => {
            let plan = full.plan();
            let mut s = String::new();
            writeln!(s, "n={n} k={k} b={} m={} alpha={}", plan.b(), plan.m(), plan.alpha())?;
            writeln!(s, "q: {}", plan.q().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))?;
            let list = |it: &mut dyn Iterator<Item = kchord_core::Chord>| {
                it.map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            };
            writeln!(s, "plan chords ({}): {}", plan.chords().len(), list(&mut plan.chords().iter().copied()))?;
            writeln!(s, "tail chords ({}): {}", full.tail_added().len(), list(&mut full.tail_added().iter().copied()))?;
            for t in full.tails() {
                writeln!(s, "  l={} {}", t.length, gadget_list(&t.gadgets))?;
            }
            writeln!(
                s,
                "chord count {} (k*b + k^2 = {}, with {{1,m}} counted separately {})",
                full.chord_count(),
                full.stated_bound(),
                full.budget()
            )?;
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_decode(n: u64, k: u64, sel: &LengthSelector, seed: u64, max_all: u64, format: Format) -> Result<Outcome> {
    let full = construct(n, k)?;
    let (lo, hi) = full.required_range();
    let lengths = sel.resolve(lo, hi, seed, max_all)?;
    let mut text = String::new();
    for l in lengths {
        let w = full.witness(l)?;
        match format {
            Format::Human => writeln!(text, "{}\n  vertices: {:?}", describe(&w), w.cycle.vertices)?,
            _ => text.push_str(&to_json(&w.cycle)?),
        }
    }
    Ok(Outcome::ok(text))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    input: &PathBuf,
    k: u64,
    sel: &LengthSelector,
    seed: u64,
    oracle_only: bool,
    time_limit: Option<u64>,
    workers: usize,
    max_all: u64,
    format: Format,
) -> Result<Outcome> {
    let raw = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let g = parse_graph(&raw)?;
    let n = g.n();
    let (lo, hi) = required_lengths(n, k);
    let lengths = sel.resolve(lo, hi, seed, max_all)?;
    let full = if !oracle_only && ConstructionPlan::threshold(k).is_ok_and(|t| n >= t) { Some(construct(n, k)?) } else { None };
    let witnesses = |l: u64| full.as_ref().and_then(|f| f.witness(l).ok()).map(|w| w.cycle.vertices);
    let cfg = VerifyConfig { time_limit: time_limit.map(Duration::from_secs), workers };
    let report = verify_property(&g, k, &lengths, Some(witnesses), &cfg)?;
    let code = match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let text = match format {
        Format::Human => {
            let mut s = String::new();
            writeln!(s, "n={n} k={k} chords={} verdict={:?}", report.chord_count, report.verdict)?;
            if let Some(note) = &report.excluded {
                writeln!(s, "note: {note}")?;
            }
            for e in &report.entries {
                write!(s, "l={} {:?}", e.length, e.status)?;
                if let Some(d) = &e.discrepancy {
                    write!(s, " ({d})")?;
                }
                s.push('\n');
            }
            s
        }
        _ => to_json(&report)?,
    };
    Ok(Outcome { text, code })
}

fn cmd_search(ns: &[u64], k: u64, cfg: &SearchConfig, format: Format) -> Result<Outcome> {
    let mut text = String::new();
    let mut code = 0;
    if format != Format::Json {
        text.push_str("n,k,c_exact_or_bound,status,seconds\n");
    }
    for &n in ns {
        let out = brute_force_c(n, k, cfg, None)?;
        if format == Format::Json {
            text.push_str(&to_json(&out)?);
            if out.exact().is_none() {
                code = EXIT_INCONCLUSIVE;
            }
            continue;
        }
        let (value, status) = match &out.status {
            SearchStatus::Exact { value, .. } => (*value, "exact"),
            SearchStatus::Inconclusive { lower_bound, .. } => {
                code = EXIT_INCONCLUSIVE;
                (*lower_bound, "inconclusive")
            }
        };
        let ms = out.elapsed.as_millis();
        writeln!(text, "{n},{k},{value},{status},{}.{:03}", ms / 1000, ms % 1000)?;
    }
    Ok(Outcome { text, code })
}

fn cmd_bounds(ns: &[u64], k: u64, exact: bool, format: Format) -> Result<Outcome> {
    let mut instances = Vec::with_capacity(ns.len());
    for &n in ns {
        let exact = if exact && n <= kchord_core::oracle::MAX_SEARCH_N {
            brute_force_c(n, k, &SearchConfig::default(), None)?.exact().map(|v| v as u64)
        } else {
            None
        };
        instances.push(Instance { n, k, exact });
    }
    let rows = bounds_table(&instances)?;
    let text = match format {
        Format::Json => to_json(&rows)?,
        _ => {
            let mut s = String::from(BoundsRow::CSV_HEADER);
            s.push('\n');
            for r in &rows {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Construct { n, k, format } => cmd_construct(*n, *k, *format),
        Command::Decode { n, k, l, seed, max_all_n, format } => cmd_decode(*n, *k, l, *seed, *max_all_n, *format),
        Command::Verify { input, k, lengths, seed, oracle_only, time_limit, workers, max_all_n, format } => {
            cmd_verify(input, *k, lengths, *seed, *oracle_only, *time_limit, *workers, *max_all_n, *format)
        }
        Command::Search { n, k, time_limit, max_chords, no_symmetry, workers, format } => {
            let cfg = SearchConfig {
                max_chords: *max_chords,
                time_limit: time_limit.map(Duration::from_secs),
                symmetry: !no_symmetry,
                workers: *workers,
            };
            cmd_search(&parse_list(n)?, *k, &cfg, *format)
        }
        Command::Bounds { n, k, exact, format } => cmd_bounds(&parse_list(n)?, *k, *exact, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            match e.downcast_ref::<CoreError>() {
                Some(CoreError::BelowThreshold { required, .. }) => {
                    eprintln!("error: requires n ≥ (k+2)^k = {required}");
                }
                _ => eprintln!("error: {e:#}"),
            }
            ExitCode::from(EXIT_USAGE)
        }
    }
}
