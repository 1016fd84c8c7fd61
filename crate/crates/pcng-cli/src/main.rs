//! `pcng` — exact analyses of the payment-channel network creation game:
//! player costs, social optima, stability checks, equilibrium enumeration,
//! parameter sweeps, and best-response dynamics.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pcng_cli::{
    caps_from_env, condition_line, cost_table, enumerate_document, enumerate_parallel,
    equilibrium_summary, grid_csv, optimum_document, parse_rational, parse_topology,
    region_document, render_ext, render_set, trajectory_log, CliError,
};
use pcng_core::closed_form::{ne_predicate, social_optimum, TopologySpec, Verdict};
use pcng_core::dynamics::{run as run_dynamics, Schedule};
use pcng_core::equilibrium::{is_nash, EnumerateOptions, NashCheck};
use pcng_core::game::{GameParams, StrategyProfile};
use pcng_core::region::Window;
use pcng_core::sweep::{sweep_grid, SymmetryMode};

#[derive(Parser)]
#[command(
    name = "pcng",
    version,
    about = "Exact-arithmetic analysis of the payment-channel network creation game"
)]
struct Cli {
    /// Worker threads for enumeration-backed commands.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    /// Closed-form catalog only; exits 5 when it has no answer.
    Analytic,
    /// Exhaustive deviation scan with a witness on instability.
    Brute,
    /// Catalog first, brute force as confirmation.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Per-player cost breakdown and social cost of a profile file.
    Cost {
        /// Profile file (`n=<k>` header, then `u -> v` channel lines).
        #[arg(long)]
        file: PathBuf,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
    },
    /// Closed-form social optimum across complete, star, and path.
    Optimum {
        /// Player count.
        #[arg(long)]
        n: usize,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
    },
    /// Stability check of a named topology or a profile file.
    Check {
        /// Named topology: complete, star, path, circle, biclique:R:S.
        #[arg(long, conflicts_with = "file")]
        topology: Option<String>,
        /// Custom profile file instead of a named topology.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Player count (required with --topology).
        #[arg(long)]
        n: Option<usize>,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
        #[arg(long, value_enum, default_value_t = CheckMode::Both)]
        mode: CheckMode,
    },
    /// Enumerate every stable profile on n players.
    Enumerate {
        /// Player count.
        #[arg(long)]
        n: usize,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
        /// Keep one representative per isomorphism class of networks.
        #[arg(long)]
        dedup: bool,
    },
    /// Price of anarchy and stability via exhaustive enumeration.
    Poa {
        /// Player count.
        #[arg(long)]
        n: usize,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
    },
    /// Rasterize a topology's stability region to CSV plus a region file.
    Sweep {
        /// Named topology: complete, star, path, circle, biclique:R:S.
        #[arg(long)]
        topology: String,
        /// Player count.
        #[arg(long)]
        n: usize,
        /// Lower edge of the b window.
        #[arg(long, default_value = "0")]
        b_min: String,
        /// Upper edge of the b window.
        #[arg(long, default_value = "3/2")]
        b_max: String,
        /// Lower edge of the c window.
        #[arg(long, default_value = "0")]
        c_min: String,
        /// Upper edge of the c window.
        #[arg(long, default_value = "3/2")]
        c_max: String,
        /// Cells per axis.
        #[arg(long, default_value_t = 21)]
        resolution: usize,
        /// CSV destination (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Region-file destination (stdout when omitted).
        #[arg(long)]
        region_out: Option<PathBuf>,
    },
    /// Run best-response dynamics from a profile file.
    Dynamics {
        /// Starting profile file (`n=<k>` header, then `u -> v` channel lines).
        #[arg(long)]
        file: PathBuf,
        /// Betweenness weight (fraction or decimal).
        #[arg(long)]
        b: String,
        /// Closeness weight (fraction or decimal).
        #[arg(long)]
        c: String,
        /// round-robin, largest-improvement, or seeded-random.
        #[arg(long, default_value = "round-robin")]
        schedule: String,
        /// Seed for the seeded-random schedule.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Budget of applied moves.
        #[arg(long, default_value_t = 1000)]
        max_iters: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn read_profile(path: &Path) -> Result<StrategyProfile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    StrategyProfile::parse(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn game_params(n: usize, b: &str, c: &str) -> Result<GameParams, CliError> {
    Ok(GameParams::new(n, parse_rational(b)?, parse_rational(c)?)?)
}

fn write_or_print(doc: &str, target: Option<&Path>) -> Result<(), CliError> {
    match target {
        Some(path) => fs::write(path, doc)
            .map_err(|e| CliError::Other(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{doc}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let caps = caps_from_env()?;
    match cli.command {
        Command::Cost { file, b, c } => {
            let profile = read_profile(&file)?;
            let params = game_params(profile.n(), &b, &c)?;
            print!("{}", cost_table(&profile, &params)?);
            Ok(())
        }
        Command::Optimum { n, b, c } => {
            let params = game_params(n, &b, &c)?;
            print!("{}", optimum_document(&social_optimum(&params), &params));
            Ok(())
        }
        Command::Check {
            topology,
            file,
            n,
            b,
            c,
            mode,
        } => {
            let (spec, profile) = match (&topology, &file) {
                (Some(name), None) => {
                    let spec = parse_topology(name)?;
                    let n = n.ok_or_else(|| {
                        CliError::Parse(String::from("--topology also needs --n"))
                    })?;
                    let profile = spec.canonical_profile(n)?;
                    (spec, profile)
                }
                (None, Some(path)) => {
                    let profile = read_profile(path)?;
                    (TopologySpec::Custom(profile.clone()), profile)
                }
                _ => {
                    return Err(CliError::Parse(String::from(
                        "pass exactly one of --topology or --file",
                    )))
                }
            };
            let params = game_params(profile.n(), &b, &c)?;
            println!("topology: {}", spec.name());
            println!("players: {}", profile.n());

            let mut analytic_refused = None;
            if mode != CheckMode::Brute {
                let verdict = ne_predicate(&spec, &params);
                let answer = match verdict.verdict {
                    Verdict::Yes => "yes",
                    Verdict::No => "no",
                    Verdict::Unknown => "unknown",
                };
                println!("analytic verdict: {answer}");
                for ineq in &verdict.binding_inequalities {
                    println!("{}", condition_line(ineq));
                }
                if let Some(note) = &verdict.note {
                    println!("  note: {note}");
                }
                if verdict.verdict == Verdict::Unknown && mode == CheckMode::Analytic {
                    analytic_refused = Some(CliError::Unknown(String::from(
                        "no closed-form rule covers this input; rerun with --mode brute or both",
                    )));
                }
            }
            if mode != CheckMode::Analytic {
                match is_nash(&profile, &params, &caps)? {
                    NashCheck::Stable => println!("brute-force verdict: yes"),
                    NashCheck::Unstable(witness) => {
                        println!("brute-force verdict: no");
                        println!(
                            "  witness: player {} deviates {} -> {} (delta {})",
                            witness.player,
                            render_set(&witness.from),
                            render_set(&witness.to),
                            render_ext(&witness.delta)
                        );
                    }
                }
            }
            match analytic_refused {
                Some(err) => Err(err),
                None => Ok(()),
            }
        }
        Command::Enumerate { n, b, c, dedup } => {
            let params = game_params(n, &b, &c)?;
            let options = EnumerateOptions {
                dedup_isomorphic: dedup,
                caps,
            };
            let report = enumerate_parallel(&params, &options, cli.threads)?;
            print!("{}", enumerate_document(&report, &params));
            Ok(())
        }
        Command::Poa { n, b, c } => {
            let params = game_params(n, &b, &c)?;
            let options = EnumerateOptions {
                dedup_isomorphic: false,
                caps,
            };
            let report = enumerate_parallel(&params, &options, cli.threads)?;
            print!("{}", equilibrium_summary(&report, &params));
            Ok(())
        }
        Command::Sweep {
            topology,
            n,
            b_min,
            b_max,
            c_min,
            c_max,
            resolution,
            out,
            region_out,
        } => {
            if resolution < 2 {
                return Err(CliError::Parse(String::from(
                    "--resolution must be at least 2",
                )));
            }
            let spec = parse_topology(&topology)?;
            let window = Window {
                b_min: parse_rational(&b_min)?,
                b_max: parse_rational(&b_max)?,
                c_min: parse_rational(&c_min)?,
                c_max: parse_rational(&c_max)?,
            };
            if window.b_min >= window.b_max || window.c_min >= window.c_max {
                return Err(CliError::Parse(String::from(
                    "the sweep window must have positive extent on both axes",
                )));
            }
            let map = sweep_grid(&spec, n, &window, resolution, SymmetryMode::Reduced, &caps)?;
            let grid = map.grid.as_ref().expect("sweep_grid always rasterizes");
            write_or_print(&grid_csv(grid), out.as_deref())?;
            write_or_print(&region_document(&map), region_out.as_deref())?;
            Ok(())
        }
        Command::Dynamics {
            file,
            b,
            c,
            schedule,
            seed,
            max_iters,
        } => {
            let initial = read_profile(&file)?;
            let params = game_params(initial.n(), &b, &c)?;
            let schedule = match schedule.trim() {
                "round-robin" => Schedule::RoundRobin,
                "largest-improvement" => Schedule::LargestImprovement,
                "seeded-random" => Schedule::SeededRandom(seed),
                other => {
                    return Err(CliError::Parse(format!(
                        "unknown schedule `{other}`; expected round-robin, largest-improvement, or seeded-random"
                    )))
                }
            };
            if max_iters == 0 {
                return Err(CliError::Parse(String::from(
                    "--max-iters must be at least 1",
                )));
            }
            let trajectory = run_dynamics(&initial, &params, schedule, max_iters, &caps)?;
            print!("{}", trajectory_log(&trajectory));
            Ok(())
        }
    }
}
