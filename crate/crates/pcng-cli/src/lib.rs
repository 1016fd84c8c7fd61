//! Building blocks for the `pcng` binary: exact rational parsing, dual
//! fraction/decimal rendering, the stable text formats (cost table, sweep
//! CSV, region file, trajectory log), and the threaded enumeration driver.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use pcng_core::closed_form::{OptimumReport, TopologySpec};
use pcng_core::dynamics::{Outcome, Trajectory};
use pcng_core::equilibrium::{
    enumerate_chunk, enumerate_nash, merge_chunks, Caps, EnumerateOptions, EquilibriumError,
    EquilibriumReport,
};
use pcng_core::game::{player_cost, social_cost, GameError, GameParams, StrategyProfile};
use pcng_core::rational::{ExtRat, Rat};
use pcng_core::region::Inequality;
use pcng_core::sweep::{Grid, ParameterMap, SweepError};

/// Failure classes, each with its own process exit code: bad input is 3,
/// refused resource caps are 4, an analytic verdict of "unknown" with no
/// brute-force fallback is 5, anything else is 1. (Usage errors exit 2
/// via the argument parser.)
#[derive(Debug)]
pub enum CliError {
    /// Malformed weights, topology strings, or input files.
    Parse(String),
    /// The computation was refused by a size cap.
    Cap(String),
    /// The closed-form catalog cannot answer and brute force was not
    /// requested.
    Unknown(String),
    /// Unexpected failures (I/O while writing output, worker panics).
    Other(String),
}

impl CliError {
    /// The process exit code this failure maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Cap(_) => 4,
            CliError::Unknown(_) => 5,
            CliError::Other(_) => 1,
        }
    }

    /// Human-readable description for stderr.
    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Cap(m) | CliError::Unknown(m) | CliError::Other(m) => m,
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<EquilibriumError> for CliError {
    fn from(e: EquilibriumError) -> Self {
        match e {
            EquilibriumError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            EquilibriumError::Game(inner) => CliError::Parse(inner.to_string()),
        }
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<pcng_core::closed_form::TopologyError> for CliError {
    fn from(e: pcng_core::closed_form::TopologyError) -> Self {
        CliError::Parse(e.to_string())
    }
}

/// Parses `p/q`, a decimal such as `0.1` (kept exact: 1/10), or a plain
/// integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rat, CliError> {
    let t = text.trim();
    let fail = || CliError::Parse(format!("cannot parse `{t}` as a rational number"));
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| fail())?;
        let d: BigInt = den.trim().parse().map_err(|_| fail())?;
        if d.is_zero() {
            return Err(CliError::Parse(format!("`{t}` has a zero denominator")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if !frac.chars().all(|ch| ch.is_ascii_digit()) {
            return Err(fail());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            other => other.parse().map_err(|_| fail())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().map_err(|_| fail())?
        };
        let numerator = if negative {
            whole * &scale - frac
        } else {
            whole * &scale + frac
        };
        return Ok(Rat::new(numerator, scale));
    }
    let n: BigInt = t.parse().map_err(|_| fail())?;
    Ok(Rat::from_integer(n))
}

/// Renders a rational in the dual format the whole CLI uses: the exact
/// fraction followed by a decimal approximation, e.g. `56/5 (11.2)`.
pub fn render_rat(r: &Rat) -> String {
    let approx = r.to_f64().unwrap_or(f64::NAN);
    format!("{r} ({approx})")
}

/// Dual-format rendering with infinities spelled `inf` / `-inf`.
pub fn render_ext(e: &ExtRat) -> String {
    match e {
        ExtRat::NegInf => String::from("-inf"),
        ExtRat::PosInf => String::from("inf"),
        ExtRat::Finite(r) => render_rat(r),
    }
}

fn render_option(v: &Option<Rat>) -> String {
    match v {
        Some(r) => render_rat(r),
        None => String::from("none"),
    }
}

/// Renders a strategy as `{1,3}`; the empty strategy is `{}`.
pub fn render_set(set: &BTreeSet<usize>) -> String {
    let body: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(","))
}

/// Parses `complete | star | path | circle | biclique:R:S`.
pub fn parse_topology(text: &str) -> Result<TopologySpec, CliError> {
    let t = text.trim().to_ascii_lowercase();
    match t.as_str() {
        "complete" => return Ok(TopologySpec::Complete),
        "star" => return Ok(TopologySpec::Star),
        "path" => return Ok(TopologySpec::Path),
        "circle" => return Ok(TopologySpec::Circle),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("biclique:") {
        if let Some((r, s)) = rest.split_once(':') {
            let parse = |v: &str| {
                v.trim().parse::<usize>().map_err(|_| {
                    CliError::Parse(format!("biclique sides must be integers, got `{rest}`"))
                })
            };
            return Ok(TopologySpec::Biclique {
                r: parse(r)?,
                s: parse(s)?,
            });
        }
        return Err(CliError::Parse(String::from(
            "biclique form is biclique:R:S",
        )));
    }
    Err(CliError::Parse(format!(
        "unknown topology `{text}`; expected complete, star, path, circle, or biclique:R:S"
    )))
}

/// Default caps with the enumeration ceiling optionally overridden by the
/// `PCNG_MAX_N` environment variable.
pub fn caps_from_env() -> Result<Caps, CliError> {
    let mut caps = Caps::default();
    if let Ok(raw) = std::env::var("PCNG_MAX_N") {
        caps.enumerate_n = raw.trim().parse().map_err(|_| {
            CliError::Parse(format!("PCNG_MAX_N must be an integer, got `{raw}`"))
        })?;
    }
    Ok(caps)
}

/// Full equilibrium enumeration, fanned out over `threads` workers on
/// independent slices of the graph list and merged back into one report.
pub fn enumerate_parallel(
    params: &GameParams,
    options: &EnumerateOptions,
    threads: usize,
) -> Result<EquilibriumReport, CliError> {
    let threads = threads.max(1);
    if threads == 1 {
        return Ok(enumerate_nash(params, options)?);
    }
    let chunks = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|index| scope.spawn(move || enumerate_chunk(params, options, index, threads)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect::<Result<Vec<_>, EquilibriumError>>()
    })?;
    Ok(merge_chunks(params, chunks, options))
}

fn weight_header(params: &GameParams) -> String {
    format!(
        "players: {}\nb = {}\nc = {}\n",
        params.n(),
        render_rat(params.b()),
        render_rat(params.c())
    )
}

/// Per-player cost table plus the social total, tab-separated.
pub fn cost_table(profile: &StrategyProfile, params: &GameParams) -> Result<String, CliError> {
    let mut out = weight_header(params);
    out.push_str("player\tlinks\tbetweenness\tcloseness\ttotal\n");
    for u in 0..profile.n() {
        let part = player_cost(profile, u, params)?;
        let _ = writeln!(
            out,
            "{u}\t{}\t{}\t{}\t{}",
            part.link_cost,
            render_rat(&part.betweenness_term),
            render_ext(&part.closeness_term),
            render_ext(&part.total)
        );
    }
    let total = social_cost(profile, params)?;
    let _ = writeln!(out, "social cost: {}", render_ext(&total));
    Ok(out)
}

/// The closed-form optimum comparison across the three candidate shapes.
pub fn optimum_document(report: &OptimumReport, params: &GameParams) -> String {
    let mut out = weight_header(params);
    let _ = writeln!(out, "complete cost: {}", render_rat(&report.complete_cost));
    let _ = writeln!(out, "star cost: {}", render_rat(&report.star_cost));
    let _ = writeln!(out, "path cost: {}", render_rat(&report.path_cost));
    let kinds: Vec<String> = report.optimal_kinds.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "optimal shape: {}", kinds.join(", "));
    let _ = writeln!(out, "optimal cost: {}", render_rat(&report.optimal_cost));
    out
}

/// Summary block shared by `enumerate` and `poa`.
pub fn equilibrium_summary(report: &EquilibriumReport, params: &GameParams) -> String {
    let mut out = weight_header(params);
    let _ = writeln!(out, "stable profiles: {}", report.nash_profiles.len());
    let _ = writeln!(out, "optimum cost: {}", render_rat(&report.optimum_cost));
    let _ = writeln!(out, "worst stable cost: {}", render_option(&report.worst_cost));
    let _ = writeln!(out, "best stable cost: {}", render_option(&report.best_cost));
    let _ = writeln!(out, "price of anarchy: {}", render_option(&report.poa));
    let _ = writeln!(out, "price of stability: {}", render_option(&report.pos));
    out
}

/// The full enumeration document: summary plus every stable profile.
pub fn enumerate_document(report: &EquilibriumReport, params: &GameParams) -> String {
    let mut out = equilibrium_summary(report, params);
    for (index, profile) in report.nash_profiles.iter().enumerate() {
        let _ = writeln!(out, "profile {}:", index + 1);
        out.push_str(&profile.render());
    }
    out
}

/// One CSV row per grid cell: exact fraction centers and a 0/1 verdict,
/// outer loop ascending in `b`.
pub fn grid_csv(grid: &Grid) -> String {
    let mut out = String::from("b,c,is_ne\n");
    for i in 0..grid.resolution {
        for j in 0..grid.resolution {
            let (b, c) = grid.center(i, j);
            let _ = writeln!(out, "{b},{c},{}", u8::from(grid.verdicts[i][j]));
        }
    }
    out
}

/// The region file: one `a0 + a1*b + a2*c >= 0 # provenance` line per
/// half-plane, then the polygon corners as exact fraction pairs.
pub fn region_document(map: &ParameterMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# stability region: {} on {} players", map.topology.name(), map.n);
    if !map.feasible {
        let _ = writeln!(out, "# empty region: the half-plane system is infeasible");
    }
    for halfplane in &map.halfplanes {
        let _ = writeln!(out, "{halfplane} # {}", halfplane.label);
    }
    for (b, c) in &map.region_vertices {
        let _ = writeln!(out, "vertex {b} {c}");
    }
    out
}

/// Renders one binding condition line for verdict documents.
pub fn condition_line(ineq: &Inequality) -> String {
    format!("  binding: {ineq} # {}", ineq.label)
}

/// The step-per-line trajectory log, ending with the final profile in the
/// standard profile format.
pub fn trajectory_log(trajectory: &Trajectory) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schedule: {}", trajectory.schedule);
    let _ = writeln!(out, "initial profile:");
    out.push_str(&trajectory.initial.render());
    for (index, step) in trajectory.steps.iter().enumerate() {
        let _ = writeln!(
            out,
            "step {}: player {}: {} -> {} (delta {})",
            index + 1,
            step.mover,
            render_set(&step.from),
            render_set(&step.to),
            render_ext(&step.delta)
        );
    }
    match &trajectory.outcome {
        Outcome::ConvergedToNash => {
            let _ = writeln!(
                out,
                "outcome: converged to a stable profile after {} move(s)",
                trajectory.steps.len()
            );
        }
        Outcome::CycleDetected { start, period } => {
            let _ = writeln!(
                out,
                "outcome: cycle detected (period {period}, first reached after {start} move(s))"
            );
        }
        Outcome::MaxItersReached => {
            let _ = writeln!(out, "outcome: move budget exhausted before stabilizing");
        }
    }
    let _ = writeln!(out, "final profile:");
    out.push_str(&trajectory.final_profile.render());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcng_core::rational::{rat, rat_int};

    #[test]
    fn rationals_parse_in_all_three_spellings() {
        assert_eq!(parse_rational("3/10").unwrap(), rat(3, 10));
        assert_eq!(parse_rational(" 0.1 ").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("1.").unwrap(), rat_int(1));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn rendering_is_dual_format() {
        assert_eq!(render_rat(&rat(56, 5)), "56/5 (11.2)");
        assert_eq!(render_rat(&rat_int(18)), "18 (18)");
        assert_eq!(render_ext(&ExtRat::PosInf), "inf");
        assert_eq!(render_set(&BTreeSet::from([1, 3])), "{1,3}");
        assert_eq!(render_set(&BTreeSet::new()), "{}");
    }

    #[test]
    fn topology_strings_round_trip() {
        assert_eq!(parse_topology("star").unwrap(), TopologySpec::Star);
        assert_eq!(
            parse_topology("BICLIQUE:3:4").unwrap(),
            TopologySpec::Biclique { r: 3, s: 4 }
        );
        assert!(parse_topology("torus").is_err());
        assert!(parse_topology("biclique:3").is_err());
    }

    #[test]
    fn parallel_enumeration_matches_single_threaded() {
        let params = GameParams::new(4, rat(1, 5), rat(3, 2)).unwrap();
        let options = EnumerateOptions::default();
        let single = enumerate_nash(&params, &options).unwrap();
        let fanned = enumerate_parallel(&params, &options, 3).unwrap();
        assert_eq!(single, fanned);
    }
}
