//! Brute-force game solving: best responses, stability checks with explicit
//! improving-deviation witnesses, exhaustive enumeration of stable profiles,
//! and the worst/best-case cost ratios against the social optimum.
//!
//! Best responses are found by exhaustive search — computing one is NP-hard
//! in general, so there is nothing smarter to do exactly. The search space
//! is kept honest but small: a candidate strategy never includes a player
//! who already initiates a channel to the deviator, because paying for a
//! second copy of an existing channel adds link cost without changing the
//! network.
//!
//! Enumeration walks every connected graph on `n` labeled vertices
//! (ascending edge count, then ascending bitmask) and every edge-ownership
//! orientation of each graph. Doubly-owned channels never occur in a stable
//! profile — dropping the duplicate payment always improves — so
//! orientations cover all candidates. For each graph and player `u`, a
//! table of candidate costs over all prospective neighborhoods `A` is
//! folded into superset minima, after which checking one orientation is a
//! table lookup per player and whole subtrees of the orientation search are
//! pruned by their most permissive reachable incoming set.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::closed_form::social_optimum;
use crate::game::{
    player_cost, profile_from_links, social_cost, GameError, GameParams, StrategyProfile,
};
use crate::rational::{rat_int, ExtRat, Rat};

/// Size caps for the exponential-time operations. Exceeding a cap is a hard
/// error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for per-profile scans ([`best_response`], [`is_nash`]):
    /// one scan evaluates up to `2^(n-1)` candidate strategies.
    pub check_n: usize,
    /// Largest `n` for [`enumerate_nash`]: the search walks every connected
    /// graph and every ownership orientation.
    pub enumerate_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            check_n: 16,
            enumerate_n: 6,
        }
    }
}

/// Errors from the brute-force operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EquilibriumError {
    /// The player count exceeds the configured cap for this operation.
    #[error("{operation} is capped at n={cap} (got n={n}); raise the cap to override")]
    CapExceeded {
        /// Which operation hit the cap.
        operation: &'static str,
        /// Requested player count.
        n: usize,
        /// Configured cap.
        cap: usize,
    },
    /// Invalid profile/parameter combination.
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A unilateral deviation that strictly lowers the deviating player's cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeviationWitness {
    /// The deviating player.
    pub player: usize,
    /// Her strategy in the profile under test.
    pub from: BTreeSet<usize>,
    /// The improving strategy.
    pub to: BTreeSet<usize>,
    /// Exact cost change (strictly negative; `-inf` when the deviation
    /// makes an unreachable part of the network reachable).
    pub delta: ExtRat,
}

/// Outcome of a stability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NashCheck {
    /// No player can strictly lower her cost by changing her own channels.
    Stable,
    /// At least one player can; the witness carries the most negative
    /// improvement (ties: lowest player id, then lexicographically smallest
    /// target set).
    Unstable(DeviationWitness),
}

impl NashCheck {
    /// True for [`NashCheck::Stable`].
    pub fn is_stable(&self) -> bool {
        matches!(self, NashCheck::Stable)
    }

    /// The witness of an unstable profile, if any.
    pub fn witness(&self) -> Option<&DeviationWitness> {
        match self {
            NashCheck::Stable => None,
            NashCheck::Unstable(w) => Some(w),
        }
    }
}

/// `a` is a better (more canonical) witness than `b`: more negative delta,
/// then lower player id, then lexicographically smaller target set.
fn better_witness(a: &DeviationWitness, b: &DeviationWitness) -> bool {
    (a.delta.clone(), a.player, a.to.clone()) < (b.delta.clone(), b.player, b.to.clone())
}

/// All candidate strategies worth scanning for `u`: subsets of the players
/// other than `u` who do not already initiate a channel to `u` (adding such
/// a player pays for a duplicate channel, which is strictly dominated).
fn scan_targets(profile: &StrategyProfile, u: usize) -> Vec<usize> {
    let incoming = profile.incoming(u);
    (0..profile.n())
        .filter(|v| *v != u && !incoming.contains(v))
        .collect()
}

/// Checks whether any player has a strictly improving unilateral deviation.
/// Equal-cost alternatives do not break stability.
pub fn is_nash(
    profile: &StrategyProfile,
    params: &GameParams,
    caps: &Caps,
) -> Result<NashCheck, EquilibriumError> {
    let n = profile.n();
    if n > caps.check_n {
        return Err(EquilibriumError::CapExceeded {
            operation: "is_nash",
            n,
            cap: caps.check_n,
        });
    }
    let mut best: Option<DeviationWitness> = None;
    for u in 0..n {
        let current = player_cost(profile, u, params)?.total;
        let targets = scan_targets(profile, u);
        for mask in 0u64..(1 << targets.len()) {
            let to = subset(&targets, mask);
            let candidate = profile
                .with_strategy(u, to.clone())
                .expect("scan targets are valid channel targets");
            let cost = player_cost(&candidate, u, params)?.total;
            if cost >= current {
                continue;
            }
            let witness = DeviationWitness {
                player: u,
                from: profile.strategy(u).clone(),
                to,
                delta: cost.sub(&current),
            };
            if best.as_ref().is_none_or(|b| better_witness(&witness, b)) {
                best = Some(witness);
            }
        }
    }
    Ok(match best {
        None => NashCheck::Stable,
        Some(witness) => NashCheck::Unstable(witness),
    })
}

fn subset(targets: &[usize], mask: u64) -> BTreeSet<usize> {
    targets
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, v)| *v)
        .collect()
}

/// Result of an exhaustive best-response search for one player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestResponseReport {
    /// The responding player.
    pub player: usize,
    /// Her cost under the profile as given.
    pub current_cost: ExtRat,
    /// The minimal cost achievable by changing only her own channels.
    pub best_cost: ExtRat,
    /// Every strategy attaining `best_cost`, in ascending lexicographic
    /// order of the target sets.
    pub best_strategies: Vec<BTreeSet<usize>>,
}

impl BestResponseReport {
    /// True when the best response strictly beats the current strategy.
    pub fn improves(&self) -> bool {
        self.best_cost < self.current_cost
    }
}

/// Exhaustively minimizes `u`'s cost over all strategies, holding everyone
/// else fixed. Returns all minimizers (exact rational comparison).
pub fn best_response(
    profile: &StrategyProfile,
    u: usize,
    params: &GameParams,
    caps: &Caps,
) -> Result<BestResponseReport, EquilibriumError> {
    let n = profile.n();
    if n > caps.check_n {
        return Err(EquilibriumError::CapExceeded {
            operation: "best_response",
            n,
            cap: caps.check_n,
        });
    }
    let current_cost = player_cost(profile, u, params)?.total;
    let targets = scan_targets(profile, u);
    let mut best_cost: Option<ExtRat> = None;
    let mut best_strategies: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0u64..(1 << targets.len()) {
        let to = subset(&targets, mask);
        let candidate = profile
            .with_strategy(u, to.clone())
            .expect("scan targets are valid channel targets");
        let cost = player_cost(&candidate, u, params)?.total;
        match &best_cost {
            Some(b) if cost > *b => {}
            Some(b) if cost == *b => best_strategies.push(to),
            _ => {
                best_cost = Some(cost);
                best_strategies = vec![to];
            }
        }
    }
    best_strategies.sort();
    Ok(BestResponseReport {
        player: u,
        current_cost,
        best_cost: best_cost.expect("the empty strategy is always a candidate"),
        best_strategies,
    })
}

/// Options for [`enumerate_nash`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep only the first stable profile of each isomorphism class of the
    /// underlying undirected graph (ownership ignored by the grouping).
    pub dedup_isomorphic: bool,
    /// Size caps.
    pub caps: Caps,
}


/// Everything [`enumerate_nash`] finds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumReport {
    /// All stable profiles in enumeration order (graphs by ascending edge
    /// count then bitmask; orientations lexicographic, lower owner first),
    /// optionally deduplicated.
    pub nash_profiles: Vec<StrategyProfile>,
    /// Largest social cost among stable profiles (`None` when there are
    /// none).
    pub worst_cost: Option<Rat>,
    /// Smallest social cost among stable profiles.
    pub best_cost: Option<Rat>,
    /// Minimum social cost over *all* connected networks, found by brute
    /// force and cross-checked against the closed form.
    pub optimum_cost: Rat,
    /// `worst_cost / optimum_cost`; `None` when no stable profile exists.
    pub poa: Option<Rat>,
    /// `best_cost / optimum_cost`; `None` when no stable profile exists.
    pub pos: Option<Rat>,
}

/// One stable profile tagged with its position in the global enumeration
/// order: `(edge count, graph bitmask, orientation rank)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedEquilibrium {
    /// Global sort key.
    pub order: (usize, u64, u64),
    /// The stable profile.
    pub profile: StrategyProfile,
}

/// Partial enumeration output from one partition worker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationChunk {
    /// Stable profiles found in this chunk, already in global order.
    pub equilibria: Vec<RankedEquilibrium>,
    /// Minimum social cost over this chunk's connected graphs.
    pub min_social_cost: Option<Rat>,
}

/// Enumerates every stable profile on `params.n()` players and reports the
/// cost spread against the brute-force social optimum.
pub fn enumerate_nash(
    params: &GameParams,
    options: &EnumerateOptions,
) -> Result<EquilibriumReport, EquilibriumError> {
    let chunk = enumerate_chunk(params, options, 0, 1)?;
    Ok(merge_chunks(params, vec![chunk], options))
}

/// Worst-case stable cost over the optimum, with default options and caps.
pub fn price_of_anarchy(params: &GameParams) -> Result<Option<Rat>, EquilibriumError> {
    Ok(enumerate_nash(params, &EnumerateOptions::default())?.poa)
}

/// Best-case stable cost over the optimum, with default options and caps.
pub fn price_of_stability(params: &GameParams) -> Result<Option<Rat>, EquilibriumError> {
    Ok(enumerate_nash(params, &EnumerateOptions::default())?.pos)
}

/// The `chunk_index`-th of `chunk_count` independent slices of the
/// enumeration (connected graphs are dealt round-robin to chunks). Chunks
/// may run concurrently; [`merge_chunks`] recombines a *complete* set of
/// chunks deterministically.
pub fn enumerate_chunk(
    params: &GameParams,
    options: &EnumerateOptions,
    chunk_index: usize,
    chunk_count: usize,
) -> Result<EnumerationChunk, EquilibriumError> {
    assert!(chunk_count >= 1 && chunk_index < chunk_count, "bad chunk split");
    let n = params.n();
    if n > options.caps.enumerate_n {
        return Err(EquilibriumError::CapExceeded {
            operation: "enumerate_nash",
            n,
            cap: options.caps.enumerate_n,
        });
    }
    let slots = edge_slots(n);
    let incident = incident_slot_masks(n, &slots);
    let mut masks: Vec<u64> = (0..(1u64 << slots.len()))
        .filter(|mask| is_connected_mask(n, &adjacency_from_mask(n, &slots, *mask)))
        .collect();
    masks.sort_by_key(|mask| (mask.count_ones(), *mask));

    let mut memo: BTreeMap<(usize, u64), Rc<PlayerTables>> = BTreeMap::new();
    let mut equilibria: Vec<RankedEquilibrium> = Vec::new();
    let mut min_social_cost: Option<Rat> = None;

    for (i, &mask) in masks.iter().enumerate() {
        if i % chunk_count != chunk_index {
            continue;
        }
        let adj = adjacency_from_mask(n, &slots, mask);
        let edge_count = mask.count_ones() as usize;

        let mut tables: Vec<Rc<PlayerTables>> = Vec::with_capacity(n);
        let mut targets: Vec<ExtRat> = Vec::with_capacity(n);
        for u in 0..n {
            let rest_mask = mask & !incident[u];
            let table = memo
                .entry((u, rest_mask))
                .or_insert_with(|| {
                    let mut rest_adj = adjacency_from_mask(n, &slots, rest_mask);
                    rest_adj[u] = 0;
                    Rc::new(PlayerTables::build(n, u, &rest_adj, params))
                })
                .clone();
            targets.push(table.h[adj[u] as usize].clone());
            tables.push(table);
        }

        // Social cost of the graph (ownership-independent): the candidate
        // cost of each player's actual neighborhood already includes her
        // degree, so the degree sum double-counts edges by exactly one
        // edge-count's worth.
        let social: Rat = targets
            .iter()
            .map(|t| {
                t.as_finite()
                    .expect("connected networks have finite costs")
                    .clone()
            })
            .sum::<Rat>()
            - rat_int(edge_count as i64);
        if min_social_cost.as_ref().is_none_or(|m| social < *m) {
            min_social_cost = Some(social);
        }

        // A graph admits a stable orientation only if every player is
        // already best-responding when granted her most permissive
        // incoming set (her full neighborhood).
        let viable = (0..n).all(|u| tables[u].m[adj[u] as usize] == targets[u]);
        if !viable {
            continue;
        }

        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, uv)| *uv)
            .collect();
        let mut search = OrientationSearch {
            n,
            graph_mask: mask,
            edge_count,
            edges: &edges,
            tables: &tables,
            targets: &targets,
            inc: vec![0; n],
            unassigned: adj.clone(),
            owners: vec![0; edges.len()],
            rank: 0,
            out: &mut equilibria,
        };
        search.descend(0);
    }

    Ok(EnumerationChunk {
        equilibria,
        min_social_cost,
    })
}

/// Recombines a complete set of enumeration chunks into the final report.
pub fn merge_chunks(
    params: &GameParams,
    chunks: Vec<EnumerationChunk>,
    options: &EnumerateOptions,
) -> EquilibriumReport {
    let mut min_social_cost: Option<Rat> = None;
    let mut all: Vec<RankedEquilibrium> = Vec::new();
    for chunk in chunks {
        if let Some(m) = chunk.min_social_cost {
            if min_social_cost.as_ref().is_none_or(|cur| m < *cur) {
                min_social_cost = Some(m);
            }
        }
        all.extend(chunk.equilibria);
    }
    all.sort_by_key(|x| x.order);

    let n = params.n();
    let optimum_cost = min_social_cost.expect("every n >= 2 has a connected network");
    let closed = social_optimum(params).optimal_cost;
    assert_eq!(
        optimum_cost, closed,
        "brute-force optimum disagrees with the closed form"
    );

    let kept: Vec<StrategyProfile> = if options.dedup_isomorphic {
        let slots = edge_slots(n);
        let perms = permutations(n);
        let mut canon_memo: BTreeMap<u64, u64> = BTreeMap::new();
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        let mut kept = Vec::new();
        for ranked in &all {
            let mask = ranked.order.1;
            let key = *canon_memo
                .entry(mask)
                .or_insert_with(|| canonical_graph_key(&slots, mask, &perms));
            if seen.insert(key) {
                kept.push(ranked.profile.clone());
            }
        }
        kept
    } else {
        all.iter().map(|r| r.profile.clone()).collect()
    };

    let mut worst_cost: Option<Rat> = None;
    let mut best_cost: Option<Rat> = None;
    for profile in &kept {
        let cost = social_cost(profile, params)
            .expect("enumerated profiles match the parameters")
            .into_finite()
            .expect("stable networks are connected");
        if worst_cost.as_ref().is_none_or(|w| cost > *w) {
            worst_cost = Some(cost.clone());
        }
        if best_cost.as_ref().is_none_or(|b| cost < *b) {
            best_cost = Some(cost);
        }
    }
    let poa = worst_cost.as_ref().map(|w| w / &optimum_cost);
    let pos = best_cost.as_ref().map(|b| b / &optimum_cost);
    EquilibriumReport {
        nash_profiles: kept,
        worst_cost,
        best_cost,
        optimum_cost,
        poa,
        pos,
    }
}

/// All unordered vertex pairs in lexicographic order; pair `k` owns bit `k`
/// of a graph bitmask.
fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            slots.push((u, v));
        }
    }
    slots
}

/// Per-vertex masks of the slots touching that vertex.
fn incident_slot_masks(n: usize, slots: &[(usize, usize)]) -> Vec<u64> {
    let mut incident = vec![0u64; n];
    for (k, &(u, v)) in slots.iter().enumerate() {
        incident[u] |= 1 << k;
        incident[v] |= 1 << k;
    }
    incident
}

/// Adjacency bitmasks (one `u64` of neighbor bits per vertex) of a graph
/// bitmask.
fn adjacency_from_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (k, &(u, v)) in slots.iter().enumerate() {
        if mask & (1 << k) != 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn is_connected_mask(n: usize, adj: &[u64]) -> bool {
    let all = (1u64 << n) - 1;
    let mut reached: u64 = 1;
    loop {
        let mut next = reached;
        let mut fm = reached;
        while fm != 0 {
            let v = fm.trailing_zeros() as usize;
            fm &= fm - 1;
            next |= adj[v];
        }
        if next == reached {
            return reached == all;
        }
        reached = next;
    }
}

/// Candidate-cost and superset-minimum tables for one player against a
/// fixed rest graph (the channels among the other players). Entry `A` of
/// `h` is `|A| + b*betweenness + c*closeness` when the player's
/// neighborhood is exactly the vertex set `A`; entry `I` of `m` is the
/// minimum of `h` over all `A ⊇ I`.
struct PlayerTables {
    h: Vec<ExtRat>,
    m: Vec<ExtRat>,
}

impl PlayerTables {
    fn build(n: usize, u: usize, rest_adj: &[u64], params: &GameParams) -> Self {
        let size = 1usize << n;
        let others: u64 = ((1u64 << n) - 1) & !(1 << u);
        let mut h = vec![ExtRat::PosInf; size];
        let mut a: u64 = 0;
        loop {
            h[a as usize] = candidate_cost(n, u, rest_adj, a, params);
            if a == others {
                break;
            }
            a = a.wrapping_sub(others) & others;
        }
        let mut m = h.clone();
        for v in 0..n {
            if v == u {
                continue;
            }
            let bit = 1usize << v;
            for i in 0..size {
                if i & bit == 0 && i & (1 << u) == 0 && m[i | bit] < m[i] {
                    m[i] = m[i | bit].clone();
                }
            }
        }
        PlayerTables { h, m }
    }
}

/// `|A| + b*betweenness_u + c*closeness_u` in the network formed by the
/// rest graph plus a channel from `u` to each member of `A`.
fn candidate_cost(
    n: usize,
    u: usize,
    rest_adj: &[u64],
    a_mask: u64,
    params: &GameParams,
) -> ExtRat {
    if a_mask == 0 {
        // No channels at all leaves everyone unreachable from u.
        return ExtRat::PosInf;
    }
    let mut adj = rest_adj.to_vec();
    adj[u] = a_mask;
    let mut am = a_mask;
    while am != 0 {
        let v = am.trailing_zeros() as usize;
        am &= am - 1;
        adj[v] |= 1 << u;
    }
    let graph = MaskGraph { n, adj };

    let (dist_u, cnt_u) = graph.bfs_counts(u);
    let mut total_dist: u64 = 0;
    for (r, d) in dist_u.iter().enumerate() {
        if r == u {
            continue;
        }
        if *d == u32::MAX {
            return ExtRat::PosInf;
        }
        total_dist += u64::from(*d);
    }
    let closeness = rat_int((total_dist - (n as u64 - 1)) as i64);

    // Share of shortest paths between the other players that pass through
    // u; pairs are unordered here and doubled, matching the ordered-pair
    // definition.
    let mut routed = Rat::zero();
    for s in 0..n {
        if s == u {
            continue;
        }
        let (dist_s, cnt_s) = graph.bfs_counts(s);
        for r in (s + 1)..n {
            if r == u {
                continue;
            }
            if dist_s[u] != u32::MAX
                && dist_u[r] != u32::MAX
                && dist_s[u] + dist_u[r] == dist_s[r]
            {
                let through = cnt_s[u] * cnt_u[r];
                routed += rat_int(2) * rat_int(through as i64) / rat_int(cnt_s[r] as i64);
            }
        }
    }
    let betweenness = rat_int(((n - 1) * (n - 2)) as i64) - routed;
    let links = rat_int(i64::from(a_mask.count_ones()));
    ExtRat::finite(links + params.b() * betweenness + params.c() * closeness)
}

/// A small graph as adjacency bitmasks, for the inner enumeration loops.
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    /// Level-by-level shortest-path distances and path counts from `s`
    /// (`u32::MAX` marks unreachable vertices).
    fn bfs_counts(&self, s: usize) -> (Vec<u32>, Vec<u64>) {
        let mut dist = vec![u32::MAX; self.n];
        let mut cnt = vec![0u64; self.n];
        dist[s] = 0;
        cnt[s] = 1;
        let mut visited: u64 = 1 << s;
        let mut frontier: u64 = 1 << s;
        let mut d = 0u32;
        while frontier != 0 {
            d += 1;
            let mut next: u64 = 0;
            let mut fm = frontier;
            while fm != 0 {
                let v = fm.trailing_zeros() as usize;
                fm &= fm - 1;
                next |= self.adj[v];
            }
            next &= !visited;
            let mut nm = next;
            while nm != 0 {
                let w = nm.trailing_zeros() as usize;
                nm &= nm - 1;
                dist[w] = d;
                let mut parents = self.adj[w] & frontier;
                while parents != 0 {
                    let v = parents.trailing_zeros() as usize;
                    parents &= parents - 1;
                    cnt[w] += cnt[v];
                }
            }
            visited |= next;
            frontier = next;
        }
        (dist, cnt)
    }
}

/// Depth-first assignment of an owner to each edge, lexicographic (lower
/// endpoint first). A branch survives only while every touched player could
/// still end up best-responding under her most permissive remaining
/// incoming set; reaching a leaf therefore certifies stability.
struct OrientationSearch<'a> {
    n: usize,
    graph_mask: u64,
    edge_count: usize,
    edges: &'a [(usize, usize)],
    tables: &'a [Rc<PlayerTables>],
    targets: &'a [ExtRat],
    inc: Vec<u64>,
    unassigned: Vec<u64>,
    owners: Vec<usize>,
    rank: u64,
    out: &'a mut Vec<RankedEquilibrium>,
}

impl OrientationSearch<'_> {
    fn descend(&mut self, depth: usize) {
        if depth == self.edges.len() {
            self.emit();
            return;
        }
        let (a, b) = self.edges[depth];
        self.unassigned[a] &= !(1 << b);
        self.unassigned[b] &= !(1 << a);
        for (owner, receiver) in [(a, b), (b, a)] {
            self.inc[receiver] |= 1 << owner;
            self.owners[depth] = owner;
            if self.viable(a) && self.viable(b) {
                self.descend(depth + 1);
            }
            self.inc[receiver] &= !(1 << owner);
        }
        self.unassigned[a] |= 1 << b;
        self.unassigned[b] |= 1 << a;
    }

    fn viable(&self, v: usize) -> bool {
        let most_permissive = (self.inc[v] | self.unassigned[v]) as usize;
        self.tables[v].m[most_permissive] == self.targets[v]
    }

    fn emit(&mut self) {
        let links: Vec<(usize, usize)> = self
            .edges
            .iter()
            .zip(&self.owners)
            .map(|(&(a, b), &owner)| (owner, if owner == a { b } else { a }))
            .collect();
        let profile =
            profile_from_links(self.n, &links).expect("orientation links are valid channels");
        self.out.push(RankedEquilibrium {
            order: (self.edge_count, self.graph_mask, self.rank),
            profile,
        });
        self.rank += 1;
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn recurse(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                recurse(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    recurse(n, &mut current, &mut used, &mut out);
    out
}

/// Canonical key of a graph bitmask under vertex relabeling: the minimum
/// relabeled bitmask over all permutations.
fn canonical_graph_key(slots: &[(usize, usize)], mask: u64, perms: &[Vec<usize>]) -> u64 {
    let mut index = BTreeMap::new();
    for (k, &(u, v)) in slots.iter().enumerate() {
        index.insert((u, v), k);
    }
    let mut best = u64::MAX;
    for perm in perms {
        let mut relabeled: u64 = 0;
        for (k, &(u, v)) in slots.iter().enumerate() {
            if mask & (1 << k) != 0 {
                let (mut pu, mut pv) = (perm[u], perm[v]);
                if pu > pv {
                    core::mem::swap(&mut pu, &mut pv);
                }
                relabeled |= 1 << index[&(pu, pv)];
            }
        }
        best = best.min(relabeled);
    }
    best
}
