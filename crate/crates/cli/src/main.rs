use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use shiftchain_core::cnf::parse_model;
use shiftchain_core::format::{
    parse_any, parse_coloring, write_coloring, write_ordered, write_shift_chain,
};
use shiftchain_core::hunt::{hunt, HuntConfig, Strategy};
use shiftchain_core::*;

/// Build, check, color and search shift-chain hypergraphs.
#[derive(Parser)]
#[command(name = "shiftchain", version)]
struct Cli {
    /// Limits file with `key=value` lines (exhaustive_cap, enumerate_max_n,
    /// construct_max_m).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write the m-uniform shift-chain with no polychromatic 3-coloring.
    Construct {
        m: usize,
        /// Output file; stdout if omitted (the trace then goes to stderr).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that a file holds a shift-chain and report the edge bound.
    Validate { path: PathBuf },
    /// Decide whether a k-coloring with the given property exists.
    /// Exit status 0 = found, 1 = none, 2 = error.
    Verify {
        path: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Proper)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Oracle::Backtrack)]
        oracle: Oracle,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness, if any, as a coloring file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Properly color a shift-chain with at most 3 colors.
    Color {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring. Exit status 0 = passes, 1 = fails, 2 = error.
    Check {
        instance: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Proper)]
        mode: ModeArg,
    },
    /// Write the k-colorability question as DIMACS CNF.
    Encode {
        path: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Proper)]
        mode: ModeArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Turn a SAT solver model back into a coloring.
    Decode {
        model: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Look for shift-chains with no proper 2-coloring.
    Hunt {
        #[arg(long)]
        m: usize,
        /// Vertex counts, `LO..HI` (inclusive) or a single number.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        /// Edge counts, `LO..HI` (inclusive) or a single number.
        #[arg(long, value_parser = parse_range)]
        edges_range: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Random)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Draw an instance as SVG, one polyline per edge.
    Render {
        path: PathBuf,
        /// Fill vertices by this coloring.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Thicken edges that are monochromatic under --coloring.
        #[arg(long, requires = "coloring")]
        highlight_monochromatic: bool,
        /// Print vertex numbers.
        #[arg(long)]
        labels: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Union of two instances on the same vertex set.
    Union {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Backtracking worker threads.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Fix vertex 1 to color 1 during backtracking.
    #[arg(long)]
    symmetry_breaking: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Proper,
    Polychromatic,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Proper => Mode::Proper,
            ModeArg::Polychromatic => Mode::Polychromatic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Exhaustive,
    Backtrack,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Random,
    Enumerate,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => parse(s).map(|n| (n, n)),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn load_chain(path: &Path) -> Result<ShiftChain> {
    let h = parse_any(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    h.to_shift_chain()
        .with_context(|| format!("{} is not a shift-chain", path.display()))
}

fn load(path: &Path) -> Result<OrderedHypergraph> {
    parse_any(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn limits(config: Option<&Path>) -> Result<Limits> {
    match config {
        Some(path) => {
            Limits::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
        }
        None => Ok(Limits::default()),
    }
}

fn report(name: &str, out: &SearchOutcome) {
    match &out.witness {
        Some(w) => println!(
            "{name}: {} {}-coloring found after {} nodes: {}",
            out.mode,
            out.k,
            out.nodes_explored,
            w.colors()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ),
        None => println!(
            "{name}: no {} {}-coloring ({} nodes)",
            out.mode, out.k, out.nodes_explored
        ),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let config = cli.config.as_deref();
    match cli.command {
        Cmd::Construct { m, out } => {
            let (h, trace) = construct_non_polychromatic(m, &limits(config)?)?;
            emit(out.as_deref(), &write_shift_chain(&h))?;
            if out.is_some() {
                print!("{}", trace.to_text());
            } else {
                eprint!("{}", trace.to_text());
            }
        }
        Cmd::Validate { path } => {
            let h = load(&path)?;
            match h.to_shift_chain() {
                Ok(chain) => {
                    let b = edge_bound(&chain);
                    println!(
                        "shift-chain: m={} n={} t={}",
                        chain.m(),
                        chain.n(),
                        chain.len()
                    );
                    println!("edge bound: {} <= {}", b.count, b.bound);
                }
                Err(e) => {
                    println!("not a shift-chain: {e}");
                    return Ok(1);
                }
            }
        }
        Cmd::Verify {
            path,
            k,
            mode,
            oracle,
            search,
            witness,
        } => {
            let h = load(&path)?;
            let mode = Mode::from(mode);
            let mut outcomes = Vec::new();
            if oracle != Oracle::Backtrack {
                let out = exhaustive_search(&h, k, mode, &limits(config)?)?;
                report("exhaustive", &out);
                outcomes.push(out);
            }
            if oracle != Oracle::Exhaustive {
                let options = SearchOptions {
                    workers: search.workers.max(1),
                    symmetry_breaking: search.symmetry_breaking,
                };
                let out = backtracking_search(&h, k, mode, &options)?;
                report("backtracking", &out);
                outcomes.push(out);
            }
            if outcomes.windows(2).any(|w| w[0].found() != w[1].found()) {
                bail!("exhaustive and backtracking searches disagree");
            }
            for w in outcomes.iter().filter_map(|o| o.witness.as_ref()) {
                if !satisfies(&h, w, mode)? {
                    bail!("search returned a coloring that fails its verifier");
                }
            }
            match outcomes.iter().find_map(|o| o.witness.as_ref()) {
                Some(w) => {
                    if let Some(path) = witness {
                        emit(Some(&path), &write_coloring(w))?;
                    }
                }
                None => return Ok(1),
            }
        }
        Cmd::Color { path, out } => {
            let h = load_chain(&path)?;
            emit(out.as_deref(), &write_coloring(&greedy_proper_3(&h)?))?;
        }
        Cmd::Check {
            instance,
            coloring,
            mode,
        } => {
            let h = load(&instance)?;
            let c = parse_coloring(&read(&coloring)?)
                .with_context(|| format!("parsing {}", coloring.display()))?;
            let mode = Mode::from(mode);
            if satisfies(&h, &c, mode)? {
                println!("{mode}: ok");
            } else {
                println!("{mode}: fails");
                return Ok(1);
            }
        }
        Cmd::Encode { path, k, mode, out } => {
            let h = load(&path)?;
            emit(out.as_deref(), &encode(&h, k, mode.into())?.to_dimacs())?;
        }
        Cmd::Decode { model, n, k, out } => {
            let lits = parse_model(&read(&model)?)
                .with_context(|| format!("parsing {}", model.display()))?;
            emit(out.as_deref(), &write_coloring(&decode_model(&lits, n, k)?))?;
        }
        Cmd::Hunt {
            m,
            n_range,
            edges_range,
            seed,
            budget,
            strategy,
            workers,
        } => {
            let cfg = HuntConfig {
                m,
                n_range: n_range.0..=n_range.1,
                edges_range: edges_range.0..=edges_range.1,
                seed,
                budget,
                strategy: match strategy {
                    StrategyArg::Random => Strategy::Random,
                    StrategyArg::Enumerate => Strategy::Enumerate,
                },
                workers,
            };
            print!("{}", hunt(&cfg, &limits(config)?)?.to_text());
        }
        Cmd::Render {
            path,
            coloring,
            highlight_monochromatic,
            labels,
            out,
        } => {
            let h = load(&path)?;
            let coloring = match coloring {
                Some(p) => Some(
                    parse_coloring(&read(&p)?)
                        .with_context(|| format!("parsing {}", p.display()))?,
                ),
                None => None,
            };
            let mut cfg = RenderConfig {
                labels,
                ..RenderConfig::default()
            };
            if let (true, Some(c)) = (highlight_monochromatic, &coloring) {
                if c.n() != h.n() {
                    bail!("coloring has {} vertices, instance has {}", c.n(), h.n());
                }
                cfg.highlight = h
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.coords().iter().all(|&v| c.color(v) == c.color(e.first())))
                    .map(|(i, _)| i)
                    .collect();
            }
            emit(out.as_deref(), &render_svg(&h, coloring.as_ref(), &cfg)?)?;
        }
        Cmd::Union { first, second, out } => {
            let u = union(&load(&first)?, &load(&second)?)?;
            emit(out.as_deref(), &write_ordered(&u))?;
            let verdict = if u.to_shift_chain().is_ok() {
                "yes"
            } else {
                "no"
            };
            if out.is_some() {
                println!("shift-chain: {verdict}");
            } else {
                eprintln!("shift-chain: {verdict}");
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
