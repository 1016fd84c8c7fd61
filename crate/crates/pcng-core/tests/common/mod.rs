//! Shared oracles for the integration suites. Everything here is written
//! from scratch against the definitions — explicit path enumeration,
//! exhaustive dominating-set search, mask-level graph scans — so that
//! agreement with the library is a genuine cross-check, not a tautology.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pcng_core::game::StrategyProfile;
use pcng_core::rational::{rat_int, Rat};
use num_traits::Zero;

/// Deterministic 64-bit generator (SplitMix64) so test inputs are
/// reproducible without pulling the library's own randomness into the
/// oracle side.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Unordered vertex pairs in lexicographic order; bit `i` of a graph mask
/// selects the `i`-th pair as an edge.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            slots.push((i, j));
        }
    }
    slots
}

/// Neighbor bitmasks of the graph selected by `mask`.
pub fn adjacency(n: usize, slots: &[(usize, usize)], mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (bit, &(i, j)) in slots.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    adj
}

fn mask_connected(n: usize, adj: &[u64]) -> bool {
    let mut seen: u64 = 1;
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[v];
        }
        if grown == seen {
            break;
        }
        seen = grown;
    }
    seen == (1 << n) - 1
}

/// Every labeled connected graph on `n` vertices, as edge-slot masks in
/// ascending order.
pub fn connected_graph_masks(n: usize) -> Vec<u64> {
    let slots = edge_slots(n);
    let mut out = Vec::new();
    for mask in 0..(1u64 << slots.len()) {
        if mask_connected(n, &adjacency(n, &slots, mask)) {
            out.push(mask);
        }
    }
    out
}

/// Breadth-first distances from `src`; `u32::MAX` marks unreachable.
pub fn bfs_distances(n: usize, adj: &[u64], src: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; n];
    dist[src] = 0;
    let mut frontier: u64 = 1 << src;
    let mut seen = frontier;
    let mut level = 0u32;
    while frontier != 0 {
        level += 1;
        let mut next: u64 = 0;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v];
        }
        next &= !seen;
        seen |= next;
        let mut newly = next;
        while newly != 0 {
            let v = newly.trailing_zeros() as usize;
            newly &= newly - 1;
            dist[v] = level;
        }
        frontier = next;
    }
    dist
}

/// Sum of pairwise distances (unordered) plus the edge count — the
/// quantity the distance bounds constrain. `None` when disconnected.
pub fn distance_plus_edges(n: usize, slots: &[(usize, usize)], mask: u64) -> Option<u64> {
    let adj = adjacency(n, slots, mask);
    let mut total = 0u64;
    for u in 0..n {
        let dist = bfs_distances(n, &adj, u);
        for (v, d) in dist.iter().enumerate() {
            if v == u {
                continue;
            }
            if *d == u32::MAX {
                return None;
            }
            total += u64::from(*d);
        }
    }
    Some(total / 2 + u64::from(mask.count_ones()))
}

/// Freeman betweenness of `u` by explicitly enumerating every shortest
/// path between every ordered pair and counting the ones that pass
/// through `u` as an interior vertex.
pub fn freeman_by_path_enumeration(n: usize, adj: &[u64], u: usize) -> Rat {
    fn walk(
        adj: &[u64],
        dist_s: &[u32],
        cur: usize,
        target: usize,
        via: bool,
        u: usize,
    ) -> (u64, u64) {
        if cur == target {
            return (1, u64::from(via));
        }
        let mut total = 0;
        let mut through = 0;
        let mut next = adj[cur];
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if dist_s[w] == dist_s[cur] + 1 && dist_s[w] <= dist_s[target] {
                let (t, v) = walk(adj, dist_s, w, target, via || (w == u && w != target), u);
                total += t;
                through += v;
            }
        }
        (total, through)
    }

    let mut sum = Rat::zero();
    for s in 0..n {
        if s == u {
            continue;
        }
        let dist_s = bfs_distances(n, adj, s);
        for r in 0..n {
            if r == u || r == s || dist_s[r] == u32::MAX {
                continue;
            }
            let (total, through) = walk(adj, &dist_s, s, r, false, u);
            assert!(total > 0);
            sum += rat_int(through as i64) / rat_int(total as i64);
        }
    }
    sum
}

/// Every minimum-cardinality dominating set of the graph, found by
/// exhaustive search in ascending set size.
pub fn minimum_dominating_sets(n: usize, adj: &[u64]) -> Vec<BTreeSet<usize>> {
    let full = (1u64 << n) - 1;
    for size in 0..=n {
        let mut hits = Vec::new();
        for set in 0..(1u64 << n) {
            if set.count_ones() as usize != size {
                continue;
            }
            let mut covered = 0u64;
            let mut rest = set;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                covered |= adj[v] | (1 << v);
            }
            if covered == full {
                hits.push((0..n).filter(|v| set >> v & 1 == 1).collect());
            }
        }
        if !hits.is_empty() {
            return hits;
        }
    }
    unreachable!("the full vertex set always dominates");
}

/// A uniformly scrambled connected profile: a random spanning tree plus
/// random extra pairs, each channel initiated by exactly one random
/// endpoint (so no edge is paid twice).
pub fn random_connected_profile(n: usize, rng: &mut SplitMix64) -> StrategyProfile {
    let mut strategies: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut link = |a: usize, b: usize, rng: &mut SplitMix64| {
        if rng.below(2) == 0 {
            strategies[a].insert(b);
        } else {
            strategies[b].insert(a);
        }
    };
    for v in 1..n {
        let parent = rng.below(v as u64) as usize;
        link(parent, v, rng);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.below(4) == 0 {
                link(i, j, rng);
            }
        }
    }
    // Scrub accidental double initiation from the extra-pair pass.
    for i in 0..n {
        let dupes: Vec<usize> = strategies[i]
            .iter()
            .copied()
            .filter(|&j| j < i && strategies[j].contains(&i))
            .collect();
        for j in dupes {
            strategies[i].remove(&j);
        }
    }
    StrategyProfile::new(strategies).expect("generated strategies are in range")
}
