use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use wspm_core::bench::{bench, BenchRecord};
use wspm_core::cactus::build_cactus;
use wspm_core::cuts::{self, DEFAULT_CAP};
use wspm_core::generate::{gen, Family};
use wspm_core::reduction::forward_phase_observed;
use wspm_core::solver::{ExactBackend, DEFAULT_BUDGET};
use wspm_core::{io, verify_wspm, wspm_with, Error, WspmOptions};

#[global_allocator]
static GLOBAL: mimalloc::MiMalloc = mimalloc::MiMalloc;

/// Well-spread perfect matchings of bridgeless cubic graphs.
///
/// Graphs are edge lists: a line `n m`, then one `u v` line per edge; the
/// i-th edge line is edge id i. Files ending in `.g6` are read as graph6.
/// Set WSPM_LOG (e.g. WSPM_LOG=debug) for progress output.
#[derive(Parser)]
#[command(name = "wspm", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Exact,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a well-spread perfect matching, one edge id per line.
    Solve {
        graph: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
        /// Check the result against every cut before writing it.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "exact")]
        backend: Backend,
        /// Maximum edge choices per piece in the exact search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Edge count up to which cuts are enumerated by brute force.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Solve both variants of every piece in parallel.
        #[arg(long)]
        speculative: bool,
    },
    /// Check a matching; exit 0 if well-spread and perfect, 1 otherwise.
    Verify {
        graph: PathBuf,
        matching: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Write a graph: theta, k4, k33, petersen, h8, block, necklace:K,
    /// random:N[:SEED].
    Gen {
        family: String,
        /// Seed for random families; overrides one given in the name.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Print every reduction step of the forward phase.
    Trace {
        graph: PathBuf,
        /// Write a DOT file of the cactus after each step into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// List bridges, 2-edge-cuts and 3-edge-cuts.
    Cuts {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Cactus inspection.
    Cactus {
        #[command(subcommand)]
        cmd: CactusCmd,
    },
    /// Forward-phase timing on necklaces of doubling size, as CSV.
    Bench {
        #[arg(long, default_value_t = 128)]
        kmin: usize,
        #[arg(long, default_value_t = 4096)]
        kmax: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CactusCmd {
    /// Print the cactus in DOT format.
    Dump {
        graph: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> anyhow::Result<wspm_core::CubicGraph> {
    Ok(io::load(path)?)
}

/// 2 for bad input, 3 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::HasBridge(_)
            | Error::NotCubic { .. }
            | Error::Parse { .. }
            | Error::Input(_)
            | Error::BadParams(_),
        ) => 2,
        _ => 3,
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Solve {
            graph,
            o,
            verify,
            backend: Backend::Exact,
            budget,
            cap,
            speculative,
        } => {
            let g = load(&graph)?;
            let opts = WspmOptions {
                budget,
                cap,
                verify,
                speculative,
            };
            let m = wspm_with(&g, &opts, &ExactBackend { budget, cap })?;
            emit(&o, &io::format_matching(&m))?;
        }
        Cmd::Verify {
            graph,
            matching,
            cap,
        } => {
            let g = load(&graph)?;
            let m = io::load_matching(&matching, &g)?;
            let report = verify_wspm(&g, &m, cap);
            print!("{report}");
            if !report.is_valid() {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Gen { family, seed, o } => {
            let mut fam: Family = family.parse()?;
            if let (Family::Random { seed: s, .. }, Some(seed)) = (&mut fam, seed) {
                *s = seed;
            }
            emit(&o, &io::format_edge_list(&gen(&fam)?))?;
        }
        Cmd::Trace { graph, dot, o } => {
            let g = load(&graph)?;
            let (t, phi) = build_cactus(&g)?;
            if let Some(dir) = &dot {
                fs::create_dir_all(dir)?;
                fs::write(dir.join("step-0.dot"), t.to_dot())?;
            }
            let mut text = String::new();
            let mut dot_err = None;
            let plan = forward_phase_observed(&g, t, &phi, |s| {
                let r = s.record;
                text.push_str(&format!(
                    "{}: removed ({},{}) added ({},{}) piece_sizes ({},{})\n",
                    r.step, r.e1, r.e2, r.e1p, r.e2p, r.continuing_size, r.separated_size
                ));
                if let Some(dir) = &dot {
                    let path = dir.join(format!("step-{}.dot", r.step));
                    if let Err(e) = fs::write(&path, s.cactus.to_dot()) {
                        dot_err.get_or_insert(e);
                    }
                }
            })?;
            if let Some(e) = dot_err {
                return Err(e.into());
            }
            text.push_str(&format!(
                "records {} pieces {} vertices {} ops {}\n",
                plan.k(),
                plan.pieces.len(),
                plan.piece_vertex_total(),
                plan.ops
            ));
            emit(&o, &text)?;
        }
        Cmd::Cuts { graph, cap, o } => {
            let g = load(&graph)?;
            let mut text = String::new();
            for b in cuts::enumerate_bridges(&g) {
                text.push_str(&format!("bridge {b}\n"));
            }
            for c in cuts::enumerate_2_edge_cuts(&g) {
                text.push_str(&format!("2-cut {c}\n"));
            }
            match cuts::enumerate_3_edge_cuts(&g, cap) {
                Ok(list) => {
                    for c in list {
                        text.push_str(&format!("3-cut {c}\n"));
                    }
                }
                Err(e) => text.push_str(&format!("3-cuts skipped: {e}\n")),
            }
            emit(&o, &text)?;
        }
        Cmd::Cactus {
            cmd: CactusCmd::Dump { graph, o },
        } => {
            let g = load(&graph)?;
            let (t, _) = build_cactus(&g)?;
            emit(&o, &t.to_dot())?;
        }
        Cmd::Bench { kmin, kmax, o } => {
            let mut text = format!("{}\n", BenchRecord::CSV_HEADER);
            for r in bench(kmin, kmax)? {
                text.push_str(&r.to_csv());
                text.push('\n');
            }
            emit(&o, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("WSPM_LOG")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
