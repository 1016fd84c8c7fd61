//! Best-response dynamics: starting from any profile, players take turns
//! replacing their strategy with an exhaustive best response, moving only
//! on a strict improvement. The run ends at a stable profile, in a detected
//! cycle, or at the move budget.
//!
//! The move order is not part of the game, so it is an explicit schedule
//! choice: round-robin probing, always-move-the-biggest-saver, or a seeded
//! uniform pick among the players who can improve. Identical inputs
//! (including the seed) always produce identical trajectories.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use crate::equilibrium::{best_response, Caps, EquilibriumError};
use crate::game::{GameParams, StrategyProfile};
use crate::rational::ExtRat;

/// Which player gets to move next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// Players probe in id order, wrapping around; a full silent round
    /// means no one can improve.
    RoundRobin,
    /// Every round, the player with the most negative achievable cost
    /// change moves (ties: lowest id).
    LargestImprovement,
    /// Every round, a uniformly seeded pick among the players who can
    /// improve.
    SeededRandom(u64),
}

impl core::fmt::Display for Schedule {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Schedule::RoundRobin => f.write_str("round-robin"),
            Schedule::LargestImprovement => f.write_str("largest-improvement"),
            Schedule::SeededRandom(seed) => write!(f, "seeded-random({seed})"),
        }
    }
}

/// One applied move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// The player who moved.
    pub mover: usize,
    /// Her strategy before the move.
    pub from: BTreeSet<usize>,
    /// The strategy she moved to (her lexicographically smallest best
    /// response).
    pub to: BTreeSet<usize>,
    /// Exact cost change, always strictly negative.
    pub delta: ExtRat,
}

/// How a run ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// No player can strictly improve: the final profile is stable.
    ConvergedToNash,
    /// The move sequence revisited an earlier state exactly.
    CycleDetected {
        /// Index into `steps` where the repeating segment begins.
        start: usize,
        /// Number of moves in the repeating segment.
        period: usize,
    },
    /// The move budget ran out first.
    MaxItersReached,
}

/// A full dynamics run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    /// The starting profile.
    pub initial: StrategyProfile,
    /// The schedule used.
    pub schedule: Schedule,
    /// Every applied move, in order.
    pub steps: Vec<StepRecord>,
    /// How the run ended.
    pub outcome: Outcome,
    /// The profile after the last move.
    pub final_profile: StrategyProfile,
}

/// Applies one best-response move for `u` if it strictly improves her cost;
/// among equally good responses the lexicographically smallest target set
/// wins. Returns `None` when `u` is already best-responding.
pub fn step(
    profile: &StrategyProfile,
    u: usize,
    params: &GameParams,
    caps: &Caps,
) -> Result<Option<(StrategyProfile, StepRecord)>, EquilibriumError> {
    let report = best_response(profile, u, params, caps)?;
    if !report.improves() {
        return Ok(None);
    }
    let to = report.best_strategies[0].clone();
    let delta = report.best_cost.sub(&report.current_cost);
    let next = profile
        .with_strategy(u, to.clone())
        .expect("a best response is a valid strategy");
    Ok(Some((
        next,
        StepRecord {
            mover: u,
            from: profile.strategy(u).clone(),
            to,
            delta,
        },
    )))
}

/// Runs best-response dynamics from `initial` until stability, a detected
/// cycle, or `max_iters` applied moves (probes that do not move are free).
///
/// Cycle detection compares full profiles (ownership included) at the
/// points where the dynamics is memoryless: after each applied move under
/// the deterministic schedules. Seeded-random runs skip detection — a
/// revisited profile continues with a fresh random draw, so it proves
/// nothing — and simply exhaust the budget.
pub fn run(
    initial: &StrategyProfile,
    params: &GameParams,
    schedule: Schedule,
    max_iters: usize,
    caps: &Caps,
) -> Result<Trajectory, EquilibriumError> {
    assert!(max_iters >= 1, "the move budget must be positive");
    match schedule {
        Schedule::RoundRobin => run_round_robin(initial, params, max_iters, caps),
        Schedule::LargestImprovement => run_largest(initial, params, max_iters, caps),
        Schedule::SeededRandom(seed) => run_seeded(initial, params, seed, max_iters, caps),
    }
}

fn run_round_robin(
    initial: &StrategyProfile,
    params: &GameParams,
    max_iters: usize,
    caps: &Caps,
) -> Result<Trajectory, EquilibriumError> {
    let n = initial.n();
    let mut profile = initial.clone();
    let mut steps: Vec<StepRecord> = Vec::new();
    // State after a move is (profile, next prober); the future is a pure
    // function of it, so a repeat is a proven cycle.
    let mut seen: BTreeMap<(String, usize), usize> = BTreeMap::new();
    seen.insert((profile.render(), 0), 0);
    let mut pos = 0usize;
    let mut idle = 0usize;
    let outcome = loop {
        if idle == n {
            break Outcome::ConvergedToNash;
        }
        match step(&profile, pos, params, caps)? {
            None => {
                idle += 1;
                pos = (pos + 1) % n;
            }
            Some((next, record)) => {
                profile = next;
                steps.push(record);
                idle = 0;
                pos = (pos + 1) % n;
                let key = (profile.render(), pos);
                if let Some(&start) = seen.get(&key) {
                    break Outcome::CycleDetected {
                        start,
                        period: steps.len() - start,
                    };
                }
                seen.insert(key, steps.len());
                if steps.len() == max_iters {
                    break Outcome::MaxItersReached;
                }
            }
        }
    };
    Ok(finish(initial, Schedule::RoundRobin, steps, outcome, profile))
}

fn run_largest(
    initial: &StrategyProfile,
    params: &GameParams,
    max_iters: usize,
    caps: &Caps,
) -> Result<Trajectory, EquilibriumError> {
    let n = initial.n();
    let mut profile = initial.clone();
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    seen.insert(profile.render(), 0);
    let outcome = loop {
        let mut chosen: Option<(StrategyProfile, StepRecord)> = None;
        for u in 0..n {
            if let Some((next, record)) = step(&profile, u, params, caps)? {
                let beats = chosen
                    .as_ref()
                    .is_none_or(|(_, best)| record.delta < best.delta);
                if beats {
                    chosen = Some((next, record));
                }
            }
        }
        match chosen {
            None => break Outcome::ConvergedToNash,
            Some((next, record)) => {
                profile = next;
                steps.push(record);
                let key = profile.render();
                if let Some(&start) = seen.get(&key) {
                    break Outcome::CycleDetected {
                        start,
                        period: steps.len() - start,
                    };
                }
                seen.insert(key, steps.len());
                if steps.len() == max_iters {
                    break Outcome::MaxItersReached;
                }
            }
        }
    };
    Ok(finish(
        initial,
        Schedule::LargestImprovement,
        steps,
        outcome,
        profile,
    ))
}

fn run_seeded(
    initial: &StrategyProfile,
    params: &GameParams,
    seed: u64,
    max_iters: usize,
    caps: &Caps,
) -> Result<Trajectory, EquilibriumError> {
    let n = initial.n();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut profile = initial.clone();
    let mut steps: Vec<StepRecord> = Vec::new();
    let outcome = loop {
        let mut movable: Vec<(StrategyProfile, StepRecord)> = Vec::new();
        for u in 0..n {
            if let Some(applied) = step(&profile, u, params, caps)? {
                movable.push(applied);
            }
        }
        if movable.is_empty() {
            break Outcome::ConvergedToNash;
        }
        let pick = (rng.next_u64() % movable.len() as u64) as usize;
        let (next, record) = movable.swap_remove(pick);
        profile = next;
        steps.push(record);
        if steps.len() == max_iters {
            break Outcome::MaxItersReached;
        }
    };
    Ok(finish(
        initial,
        Schedule::SeededRandom(seed),
        steps,
        outcome,
        profile,
    ))
}

fn finish(
    initial: &StrategyProfile,
    schedule: Schedule,
    steps: Vec<StepRecord>,
    outcome: Outcome,
    final_profile: StrategyProfile,
) -> Trajectory {
    Trajectory {
        initial: initial.clone(),
        schedule,
        steps,
        outcome,
        final_profile,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::TopologySpec;
    use crate::equilibrium::is_nash;
    use crate::game::profile_from_links;
    use crate::rational::{rat, Rat};

    fn params(n: usize, b: Rat, c: Rat) -> GameParams {
        GameParams::new(n, b, c).unwrap()
    }

    fn set(vals: &[usize]) -> BTreeSet<usize> {
        vals.iter().copied().collect()
    }

    #[test]
    fn stable_starts_converge_without_moving() {
        let caps = Caps::default();
        let complete = TopologySpec::Complete.canonical_profile(4).unwrap();
        let t = run(
            &complete,
            &params(4, rat(1, 10), rat(3, 2)),
            Schedule::RoundRobin,
            50,
            &caps,
        )
        .unwrap();
        assert_eq!(t.outcome, Outcome::ConvergedToNash);
        assert!(t.steps.is_empty());
        assert_eq!(t.final_profile, complete);

        // 1 - (5-3)/2 * 1/10 - 1/5 = 7/10 >= 0: the hub-owned star holds.
        let star = TopologySpec::Star.canonical_profile(5).unwrap();
        let t = run(
            &star,
            &params(5, rat(1, 10), rat(1, 5)),
            Schedule::LargestImprovement,
            50,
            &caps,
        )
        .unwrap();
        assert_eq!(t.outcome, Outcome::ConvergedToNash);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn below_unit_closeness_the_first_mover_sheds_channels() {
        let caps = Caps::default();
        let complete = TopologySpec::Complete.canonical_profile(4).unwrap();
        let p = params(4, rat(1, 10), rat(9, 10));
        let (next, record) = step(&complete, 0, &p, &caps).unwrap().unwrap();
        assert_eq!(record.to, set(&[1]), "keeping one channel is the deepest cut");
        assert_eq!(record.delta, ExtRat::finite(rat(-1, 5)));
        assert_eq!(next.strategy(0), &set(&[1]));
    }

    #[test]
    fn isolated_player_connects_to_a_dominating_set() {
        let caps = Caps::default();
        let empty = StrategyProfile::empty(3).unwrap();
        let p = params(3, rat(1, 10), rat(1, 2));
        let (_, record) = step(&empty, 0, &p, &caps).unwrap().unwrap();
        // No channels exist among 1 and 2, so only {1,2} reaches everyone.
        assert_eq!(record.to, set(&[1, 2]));
        assert_eq!(record.delta, ExtRat::NegInf);

        let t = run(&empty, &p, Schedule::RoundRobin, 50, &caps).unwrap();
        assert_eq!(t.outcome, Outcome::ConvergedToNash);
        assert_eq!(t.steps.len(), 1);
        assert!(is_nash(&t.final_profile, &p, &caps).unwrap().is_stable());
    }

    #[test]
    fn every_recorded_move_strictly_improves_and_replays() {
        let caps = Caps::default();
        let path = TopologySpec::Path.canonical_profile(6).unwrap();
        let p = params(6, rat(1, 5), rat(1, 5));
        let t = run(&path, &p, Schedule::RoundRobin, 60, &caps).unwrap();
        assert!(!t.steps.is_empty(), "long lines are never stable");
        assert_eq!(t.steps[0].mover, 0);
        let mut replay = path.clone();
        for record in &t.steps {
            assert!(record.delta < ExtRat::zero());
            let before = crate::game::player_cost(&replay, record.mover, &p)
                .unwrap()
                .total;
            assert_eq!(replay.strategy(record.mover), &record.from);
            replay = replay.with_strategy(record.mover, record.to.clone()).unwrap();
            let after = crate::game::player_cost(&replay, record.mover, &p)
                .unwrap()
                .total;
            assert_eq!(after.sub(&before), record.delta);
        }
        assert_eq!(replay, t.final_profile);
        if t.outcome == Outcome::ConvergedToNash {
            assert!(is_nash(&t.final_profile, &p, &caps).unwrap().is_stable());
        }
    }

    #[test]
    fn largest_improvement_picks_the_deepest_saving_first() {
        let caps = Caps::default();
        let complete = TopologySpec::Complete.canonical_profile(4).unwrap();
        let p = params(4, rat(1, 10), rat(9, 10));
        let t = run(&complete, &p, Schedule::LargestImprovement, 50, &caps).unwrap();
        assert_eq!(t.steps[0].mover, 0, "ties break to the lowest id");
        assert_eq!(t.steps[0].delta, ExtRat::finite(rat(-1, 5)));
        if t.outcome == Outcome::ConvergedToNash {
            assert!(is_nash(&t.final_profile, &p, &caps).unwrap().is_stable());
        }
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let caps = Caps::default();
        let path = TopologySpec::Path.canonical_profile(5).unwrap();
        let p = params(5, rat(1, 2), rat(1, 2));
        let a = run(&path, &p, Schedule::SeededRandom(42), 40, &caps).unwrap();
        let b = run(&path, &p, Schedule::SeededRandom(42), 40, &caps).unwrap();
        assert_eq!(a, b);
        let other = run(&path, &p, Schedule::SeededRandom(7), 40, &caps).unwrap();
        assert_eq!(other.schedule, Schedule::SeededRandom(7));
    }

    #[test]
    fn the_move_budget_is_respected() {
        let caps = Caps::default();
        // A two-hub handoff: 0 and 1 both pay for the same channel, and 2
        // hangs off 1. Multiple moves are needed; budget 1 cuts it short.
        let profile = profile_from_links(4, &[(0, 1), (1, 0), (1, 2), (2, 3)]).unwrap();
        let p = params(4, rat(1, 10), rat(9, 10));
        let t = run(&profile, &p, Schedule::RoundRobin, 1, &caps).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert!(matches!(
            t.outcome,
            Outcome::MaxItersReached | Outcome::ConvergedToNash
        ));
    }
}
