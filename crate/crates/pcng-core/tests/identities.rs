//! Cross-checks of the cost primitives against independent oracles:
//! betweenness against explicit shortest-path enumeration, and the
//! whole-network accounting identities on randomized profiles.

mod common;

use std::collections::BTreeSet;

use pcng_core::game::{
    build_network, freeman_betweenness, graph_statistics, player_cost, profile_from_links,
    social_cost, GameParams, StrategyProfile,
};
use pcng_core::rational::{rat, rat_int, ExtRat};
use proptest::prelude::*;

use common::SplitMix64;

fn profile_from_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> StrategyProfile {
    let links: Vec<(usize, usize)> = slots
        .iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, &(i, j))| (i, j))
        .collect();
    profile_from_links(n, &links).unwrap()
}

#[test]
fn betweenness_matches_explicit_path_enumeration() {
    for n in 2..=5 {
        let slots = common::edge_slots(n);
        for mask in common::connected_graph_masks(n) {
            let adj = common::adjacency(n, &slots, mask);
            let net = build_network(&profile_from_mask(n, &slots, mask));
            for u in 0..n {
                assert_eq!(
                    freeman_betweenness(&net, u),
                    common::freeman_by_path_enumeration(n, &adj, u),
                    "n={n} mask={mask:#b} u={u}"
                );
            }
        }
    }
    // Six players: a deterministic slice of the 26k connected graphs.
    let n = 6;
    let slots = common::edge_slots(n);
    for (pos, mask) in common::connected_graph_masks(n).iter().enumerate() {
        if pos % 17 != 0 {
            continue;
        }
        let adj = common::adjacency(n, &slots, *mask);
        let net = build_network(&profile_from_mask(n, &slots, *mask));
        for u in 0..n {
            assert_eq!(
                freeman_betweenness(&net, u),
                common::freeman_by_path_enumeration(n, &adj, u)
            );
        }
    }
}

#[test]
fn betweenness_cost_is_the_ceiling_minus_freeman() {
    let n = 5;
    let slots = common::edge_slots(n);
    let ceiling = rat_int(((n - 1) * (n - 2)) as i64);
    for mask in common::connected_graph_masks(n).into_iter().step_by(7) {
        let net = build_network(&profile_from_mask(n, &slots, mask));
        for u in 0..n {
            assert_eq!(
                pcng_core::game::betweenness_cost(&net, u),
                ceiling.clone() - freeman_betweenness(&net, u)
            );
        }
    }
}

#[test]
fn accounting_identities_hold_on_random_profiles() {
    let mut rng = SplitMix64(0xfeed_beef);
    let weights = [
        (rat(3, 7), rat(5, 11)),
        (rat(0, 1), rat(2, 3)),
        (rat(9, 5), rat(1, 7)),
    ];
    for round in 0..300 {
        let n = 3 + (round % 6);
        let profile = common::random_connected_profile(n, &mut rng);
        let net = build_network(&profile);
        assert!(net.is_connected());
        assert_eq!(profile.mutual_initiation(), None);

        let edge_count = rat_int(net.edge_count() as i64);
        let mut closeness_sum = ExtRat::zero();
        for u in 0..n {
            closeness_sum = closeness_sum.add(&pcng_core::game::closeness_cost(&net, u));
        }
        let cube = rat_int((n * (n - 1) * (n - 2)) as i64);
        for (b, c) in &weights {
            let params = GameParams::new(n, b.clone(), c.clone()).unwrap();
            let expected = ExtRat::finite(edge_count.clone() + b.clone() * cube.clone())
                .add(&closeness_sum.scale(&(c.clone() - b.clone())));
            assert_eq!(social_cost(&profile, &params).unwrap(), expected);
        }

        let stats = graph_statistics(&net);
        let mean_len = match stats.average_distance {
            ExtRat::Finite(v) => v,
            _ => unreachable!("connected network"),
        };
        assert_eq!(
            stats.average_freeman_betweenness,
            rat_int((n - 1) as i64) * (mean_len - rat_int(1))
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Social cost is exactly the sum of the individual costs, on any
    /// profile (connected or not, redundant channels included).
    #[test]
    fn social_cost_adds_up(n in 2usize..7, seed in any::<u64>()) {
        let mut rng = SplitMix64(seed);
        let mut strategies: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, strategy) in strategies.iter_mut().enumerate() {
            for v in 0..n {
                if v != u && rng.below(3) == 0 {
                    strategy.insert(v);
                }
            }
        }
        let profile = StrategyProfile::new(strategies).unwrap();
        let params = GameParams::new(n, rat(2, 5), rat(7, 9)).unwrap();
        let mut sum = ExtRat::zero();
        for u in 0..n {
            sum = sum.add(&player_cost(&profile, u, &params).unwrap().total);
        }
        prop_assert_eq!(social_cost(&profile, &params).unwrap(), sum);
    }

    /// Relabeling the players never changes the social cost.
    #[test]
    fn social_cost_is_label_invariant(seed in any::<u64>(), rot in 1usize..5) {
        let mut rng = SplitMix64(seed);
        let n = 5;
        let profile = common::random_connected_profile(n, &mut rng);
        let relabel = |v: usize| (v + rot) % n;
        let mut moved: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for u in 0..n {
            moved[relabel(u)] = profile.strategy(u).iter().map(|&v| relabel(v)).collect();
        }
        let rotated = StrategyProfile::new(moved).unwrap();
        let params = GameParams::new(n, rat(1, 3), rat(4, 5)).unwrap();
        prop_assert_eq!(
            social_cost(&profile, &params).unwrap(),
            social_cost(&rotated, &params).unwrap()
        );
    }

    /// A player's cost breakdown recombines to her total.
    #[test]
    fn breakdown_recombines(seed in any::<u64>()) {
        let mut rng = SplitMix64(seed);
        let n = 6;
        let profile = common::random_connected_profile(n, &mut rng);
        let params = GameParams::new(n, rat(5, 8), rat(3, 4)).unwrap();
        for u in 0..n {
            let part = player_cost(&profile, u, &params).unwrap();
            let expected = ExtRat::finite(
                rat_int(part.link_cost as i64) + params.b().clone() * part.betweenness_term.clone(),
            )
            .add(&part.closeness_term.scale(params.c()));
            prop_assert_eq!(part.total, expected);
        }
    }
}
