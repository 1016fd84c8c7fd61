//! Strategy profiles, the derived undirected network, and exact costs.
//!
//! A strategy for player `u` is the set of peers she initiates channels to.
//! The network everyone routes over is the *undirected* union of all
//! initiated channels: a channel exists between `u` and `v` iff at least one
//! of the two initiated it. Initiating is what costs: if both endpoints
//! initiate the same channel, the network gains a single edge but both pay
//! link cost 1. (Such doubly-paid channels are legal inputs, though no
//! rational player keeps one.)
//!
//! Costs combine three exact terms per player `u`:
//!
//! * link cost `|s_u|` — channels she initiated;
//! * betweenness cost `(n-1)(n-2) - freeman_u` — the maximum possible
//!   Freeman betweenness minus hers, so the *best* intermediaries pay 0;
//! * closeness cost `sum over r != u of (d(u,r) - 1)` — 0 when she is
//!   adjacent to everyone, `+inf` when someone is unreachable.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::{rat_int, ExtRat, Rat};

/// Fixed game parameters: player count and the two cost weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameParams {
    n: usize,
    b: Rat,
    c: Rat,
}

impl GameParams {
    /// Validates and builds game parameters. Requires `n >= 2`, a
    /// nonnegative betweenness weight `b` and a strictly positive closeness
    /// weight `c`.
    pub fn new(n: usize, b: Rat, c: Rat) -> Result<Self, GameError> {
        if n < 2 {
            return Err(GameError::PlayerCountTooSmall { n });
        }
        if b < Rat::zero() {
            return Err(GameError::NegativeBetweennessWeight);
        }
        if c <= Rat::zero() {
            return Err(GameError::NonPositiveClosenessWeight);
        }
        Ok(GameParams { n, b, c })
    }

    /// Number of players.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Betweenness weight `b >= 0`.
    pub fn b(&self) -> &Rat {
        &self.b
    }

    /// Closeness weight `c > 0`.
    pub fn c(&self) -> &Rat {
        &self.c
    }

    /// The maximum Freeman betweenness `(n-1)(n-2)` as a rational.
    pub fn betweenness_ceiling(&self) -> Rat {
        betweenness_ceiling(self.n)
    }
}

/// `(n-1)(n-2)`: the Freeman betweenness of a vertex lying on every
/// shortest path between every ordered pair of other vertices.
pub fn betweenness_ceiling(n: usize) -> Rat {
    rat_int(((n - 1) * (n - 2)) as i64)
}

/// Validation errors for game parameters and strategy profiles.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    /// The game needs at least two players.
    #[error("player count must be at least 2, got {n}")]
    PlayerCountTooSmall {
        /// Offending count.
        n: usize,
    },
    /// `b` must be nonnegative.
    #[error("betweenness weight b must be nonnegative")]
    NegativeBetweennessWeight,
    /// `c` must be strictly positive.
    #[error("closeness weight c must be strictly positive")]
    NonPositiveClosenessWeight,
    /// A player listed herself as a channel target.
    #[error("player {player} initiates a channel to herself")]
    SelfLink {
        /// Offending player.
        player: usize,
    },
    /// A channel target is not a player id.
    #[error("player {player} initiates a channel to {target}, outside 0..{n}")]
    TargetOutOfRange {
        /// Initiating player.
        player: usize,
        /// Offending target.
        target: usize,
        /// Player count.
        n: usize,
    },
    /// A player id passed to an operation is not within `0..n`.
    #[error("player {player} is outside 0..{n}")]
    PlayerOutOfRange {
        /// Offending player id.
        player: usize,
        /// Player count.
        n: usize,
    },
    /// A profile's player count does not match the parameters it is used
    /// with.
    #[error("profile has {profile_n} players but parameters expect {params_n}")]
    PlayerCountMismatch {
        /// Players in the profile.
        profile_n: usize,
        /// Players per the game parameters.
        params_n: usize,
    },
}

/// One strategy per player: the sets of channel targets each player
/// initiates. Immutable after construction; "mutating" operations return
/// fresh profiles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrategyProfile {
    strategies: Vec<BTreeSet<usize>>,
}

impl StrategyProfile {
    /// Validates and builds a profile from one target set per player.
    pub fn new(strategies: Vec<BTreeSet<usize>>) -> Result<Self, GameError> {
        let n = strategies.len();
        if n < 2 {
            return Err(GameError::PlayerCountTooSmall { n });
        }
        for (u, targets) in strategies.iter().enumerate() {
            for &v in targets {
                if v == u {
                    return Err(GameError::SelfLink { player: u });
                }
                if v >= n {
                    return Err(GameError::TargetOutOfRange {
                        player: u,
                        target: v,
                        n,
                    });
                }
            }
        }
        Ok(StrategyProfile { strategies })
    }

    /// A profile in which nobody initiates anything (fully disconnected).
    pub fn empty(n: usize) -> Result<Self, GameError> {
        StrategyProfile::new(vec![BTreeSet::new(); n])
    }

    /// Number of players.
    pub fn n(&self) -> usize {
        self.strategies.len()
    }

    /// The target set of player `u`.
    pub fn strategy(&self, u: usize) -> &BTreeSet<usize> {
        &self.strategies[u]
    }

    /// All strategies, indexed by player.
    pub fn strategies(&self) -> &[BTreeSet<usize>] {
        &self.strategies
    }

    /// Number of channels player `u` initiates (her link cost).
    pub fn link_count(&self, u: usize) -> usize {
        self.strategies[u].len()
    }

    /// Total number of initiated channels, counting both initiations of a
    /// doubly-initiated channel.
    pub fn total_links(&self) -> usize {
        self.strategies.iter().map(BTreeSet::len).sum()
    }

    /// The undirected edge set of the induced network, as `(low, high)`
    /// pairs.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for (u, targets) in self.strategies.iter().enumerate() {
            for &v in targets {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        edges
    }

    /// The players that initiate a channel *to* `u` (their links survive any
    /// unilateral move by `u`).
    pub fn incoming(&self, u: usize) -> BTreeSet<usize> {
        (0..self.n())
            .filter(|&v| v != u && self.strategies[v].contains(&u))
            .collect()
    }

    /// Returns a doubly-initiated channel if one exists: `(u, v)` with both
    /// `v in s_u` and `u in s_v`.
    pub fn mutual_initiation(&self) -> Option<(usize, usize)> {
        for (u, targets) in self.strategies.iter().enumerate() {
            for &v in targets {
                if v > u && self.strategies[v].contains(&u) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// A copy of the profile with player `u`'s strategy replaced.
    pub fn with_strategy(
        &self,
        u: usize,
        strategy: BTreeSet<usize>,
    ) -> Result<Self, GameError> {
        if u >= self.n() {
            return Err(GameError::PlayerOutOfRange {
                player: u,
                n: self.n(),
            });
        }
        let mut strategies = self.strategies.clone();
        strategies[u] = strategy;
        StrategyProfile::new(strategies)
    }

    /// Renders the profile in the standard text format: a header `n=<int>`
    /// followed by one `u -> v` line per initiated channel, players
    /// ascending, targets ascending. [`StrategyProfile::parse`] inverts this
    /// losslessly, including ownership direction.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n());
        for (u, targets) in self.strategies.iter().enumerate() {
            for &v in targets {
                let _ = writeln!(out, "{u} -> {v}");
            }
        }
        out
    }

    /// Parses the standard profile text format. Blank lines are ignored;
    /// anything else malformed is reported with its 1-based line number.
    pub fn parse(text: &str) -> Result<Self, ProfileParseError> {
        let mut lines = text.lines().enumerate();
        let (header_line, n) = loop {
            match lines.next() {
                Some((idx, raw)) => {
                    let line = raw.trim();
                    if line.is_empty() {
                        continue;
                    }
                    break (idx + 1, line.to_string());
                }
                None => {
                    return Err(ProfileParseError {
                        line: 1,
                        message: String::from("missing n=<int> header"),
                    })
                }
            }
        };
        let n: usize = n
            .strip_prefix("n=")
            .ok_or_else(|| ProfileParseError {
                line: header_line,
                message: String::from("expected n=<int> header"),
            })?
            .trim()
            .parse()
            .map_err(|_| ProfileParseError {
                line: header_line,
                message: String::from("player count is not an integer"),
            })?;
        if n < 2 {
            return Err(ProfileParseError {
                line: header_line,
                message: String::from("player count must be at least 2"),
            });
        }
        let mut strategies = vec![BTreeSet::new(); n];
        for (idx, raw) in lines {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let (left, right) = line.split_once("->").ok_or_else(|| ProfileParseError {
                line: line_no,
                message: String::from("expected a `u -> v` channel line"),
            })?;
            let parse_id = |token: &str| -> Result<usize, ProfileParseError> {
                token.trim().parse().map_err(|_| ProfileParseError {
                    line: line_no,
                    message: String::from("player id is not an integer"),
                })
            };
            let u = parse_id(left)?;
            let v = parse_id(right)?;
            if u >= n || v >= n {
                return Err(ProfileParseError {
                    line: line_no,
                    message: String::from("player id outside 0..n"),
                });
            }
            if u == v {
                return Err(ProfileParseError {
                    line: line_no,
                    message: String::from("self-link"),
                });
            }
            if !strategies[u].insert(v) {
                return Err(ProfileParseError {
                    line: line_no,
                    message: String::from("duplicate channel line"),
                });
            }
        }
        StrategyProfile::new(strategies).map_err(|err| ProfileParseError {
            line: header_line,
            message: err.to_string(),
        })
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parse failure for the profile text format, with a 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("profile line {line}: {message}")]
pub struct ProfileParseError {
    /// 1-based line number of the offending line.
    pub line: usize,
    /// Human-readable description of the problem.
    pub message: String,
}

/// The undirected network induced by a strategy profile, with all-pairs
/// distance and shortest-path-count caches.
#[derive(Clone, Debug)]
pub struct PaymentNetwork {
    n: usize,
    adjacency: Vec<BTreeSet<usize>>,
    // dist[u][v]: BFS distance, None when unreachable.
    dist: Vec<Vec<Option<u32>>>,
    // count[u][v]: number of distinct shortest u-v paths (0 when
    // unreachable). Fits u64 comfortably at the supported scales.
    count: Vec<Vec<u64>>,
}

/// Builds the undirected network of a profile and populates its distance
/// and shortest-path-count caches (one BFS per vertex).
pub fn build_network(profile: &StrategyProfile) -> PaymentNetwork {
    let n = profile.n();
    let mut adjacency = vec![BTreeSet::new(); n];
    for (u, v) in profile.edges() {
        adjacency[u].insert(v);
        adjacency[v].insert(u);
    }
    PaymentNetwork::from_adjacency(adjacency)
}

impl PaymentNetwork {
    /// Builds a network directly from an undirected adjacency structure.
    /// (Used internally; profiles are the public entry point.)
    pub(crate) fn from_adjacency(adjacency: Vec<BTreeSet<usize>>) -> Self {
        let n = adjacency.len();
        let mut dist = Vec::with_capacity(n);
        let mut count = Vec::with_capacity(n);
        for src in 0..n {
            let (d, m) = bfs_counts(&adjacency, src);
            dist.push(d);
            count.push(m);
        }
        PaymentNetwork {
            n,
            adjacency,
            dist,
            count,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbors of `u` in the undirected network.
    pub fn neighbors(&self, u: usize) -> &BTreeSet<usize> {
        &self.adjacency[u]
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Shortest-path distance, `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u][v]
    }

    /// Number of distinct shortest `u`-`v` paths (0 when unreachable,
    /// 1 when `u == v`).
    pub fn path_count(&self, u: usize, v: usize) -> u64 {
        self.count[u][v]
    }

    /// True when every vertex can reach every other vertex.
    pub fn is_connected(&self) -> bool {
        self.dist[0].iter().all(Option::is_some)
    }
}

/// One BFS from `src`: distances and shortest-path counts to every vertex.
fn bfs_counts(adjacency: &[BTreeSet<usize>], src: usize) -> (Vec<Option<u32>>, Vec<u64>) {
    let n = adjacency.len();
    let mut dist = vec![None; n];
    let mut count = vec![0u64; n];
    dist[src] = Some(0);
    count[src] = 1;
    let mut frontier = vec![src];
    let mut level = 0u32;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            let paths_to_u = count[u];
            for &v in &adjacency[u] {
                match dist[v] {
                    None => {
                        dist[v] = Some(level);
                        count[v] = paths_to_u;
                        next.push(v);
                    }
                    Some(d) if d == level => {
                        count[v] += paths_to_u;
                    }
                    _ => {}
                }
            }
        }
        frontier = next;
    }
    (dist, count)
}

/// Freeman betweenness of `u`: over all ordered pairs `(s, r)` of other
/// vertices with at least one `s`-`r` path, the fraction of shortest `s`-`r`
/// paths passing through `u`, summed exactly. Ranges over `[0, (n-1)(n-2)]`.
pub fn freeman_betweenness(net: &PaymentNetwork, u: usize) -> Rat {
    let n = net.n();
    let mut total = Rat::zero();
    for s in 0..n {
        if s == u {
            continue;
        }
        for r in 0..n {
            if r == u || r == s {
                continue;
            }
            let (d_sr, d_su, d_ur) = (net.dist[s][r], net.dist[s][u], net.dist[u][r]);
            let Some(d_sr) = d_sr else { continue };
            if let (Some(d_su), Some(d_ur)) = (d_su, d_ur) {
                if d_su + d_ur == d_sr {
                    let through = net.count[s][u] * net.count[u][r];
                    if through > 0 {
                        total += Rat::new(BigInt::from(through), BigInt::from(net.count[s][r]));
                    }
                }
            }
        }
    }
    total
}

/// Betweenness cost of `u`: `(n-1)(n-2)` minus her Freeman betweenness.
/// Zero exactly when `u` lies on all shortest paths between all ordered
/// pairs (a star center); maximal when she intermediates nothing.
pub fn betweenness_cost(net: &PaymentNetwork, u: usize) -> Rat {
    betweenness_ceiling(net.n()) - freeman_betweenness(net, u)
}

/// Closeness cost of `u`: `sum over r != u of (d(u,r) - 1)`, or `+inf` if
/// some vertex is unreachable.
pub fn closeness_cost(net: &PaymentNetwork, u: usize) -> ExtRat {
    let mut sum: u64 = 0;
    for r in 0..net.n() {
        if r == u {
            continue;
        }
        match net.dist[u][r] {
            Some(d) => sum += u64::from(d) - 1,
            None => return ExtRat::PosInf,
        }
    }
    ExtRat::from_int(sum as i64)
}

/// A player's exact cost, broken into its three terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostBreakdown {
    /// Channels the player initiated: `|s_u|`.
    pub link_cost: usize,
    /// Betweenness cost *before* weighting by `b`.
    pub betweenness_term: Rat,
    /// Closeness cost *before* weighting by `c`; `+inf` when disconnected.
    pub closeness_term: ExtRat,
    /// `link_cost + b * betweenness_term + c * closeness_term`.
    pub total: ExtRat,
}

/// Exact cost of player `u` under the given parameters.
pub fn player_cost(
    profile: &StrategyProfile,
    u: usize,
    params: &GameParams,
) -> Result<CostBreakdown, GameError> {
    check_compatible(profile, params)?;
    if u >= profile.n() {
        return Err(GameError::PlayerOutOfRange {
            player: u,
            n: profile.n(),
        });
    }
    let net = build_network(profile);
    Ok(player_cost_in(&net, profile, u, params))
}

/// As [`player_cost`], reusing an already-built network for the profile.
pub(crate) fn player_cost_in(
    net: &PaymentNetwork,
    profile: &StrategyProfile,
    u: usize,
    params: &GameParams,
) -> CostBreakdown {
    let link_cost = profile.link_count(u);
    let betweenness_term = betweenness_cost(net, u);
    let closeness_term = closeness_cost(net, u);
    let total = ExtRat::finite(rat_int(link_cost as i64) + params.b() * &betweenness_term)
        .add(&closeness_term.scale(params.c()));
    CostBreakdown {
        link_cost,
        betweenness_term,
        closeness_term,
        total,
    }
}

/// Sum of all players' costs; `+inf` iff the network is disconnected.
pub fn social_cost(profile: &StrategyProfile, params: &GameParams) -> Result<ExtRat, GameError> {
    check_compatible(profile, params)?;
    let net = build_network(profile);
    let mut total = ExtRat::zero();
    for u in 0..profile.n() {
        total = total.add(&player_cost_in(&net, profile, u, params).total);
    }
    Ok(total)
}

fn check_compatible(profile: &StrategyProfile, params: &GameParams) -> Result<(), GameError> {
    if profile.n() != params.n() {
        return Err(GameError::PlayerCountMismatch {
            profile_n: profile.n(),
            params_n: params.n(),
        });
    }
    Ok(())
}

/// Whole-network distance and betweenness summaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStatistics {
    /// Number of undirected edges `k`.
    pub edge_count: usize,
    /// Per-vertex distance sums `d(v) = sum over u of d(v, u)`; `+inf` on
    /// disconnection.
    pub per_vertex_distance: Vec<ExtRat>,
    /// Total distance `d(G)`: the sum of `d(u, v)` over unordered pairs,
    /// i.e. `(1/2) * sum of d(v)`.
    pub total_distance: ExtRat,
    /// Mean distance over unordered pairs: `d(G) / C(n, 2)`.
    pub average_distance: ExtRat,
    /// Mean Freeman betweenness over all vertices (finite even on
    /// disconnected networks, where unreachable pairs simply contribute
    /// nothing).
    pub average_freeman_betweenness: Rat,
}

/// Computes [`GraphStatistics`] for a network.
pub fn graph_statistics(net: &PaymentNetwork) -> GraphStatistics {
    let n = net.n();
    let mut per_vertex = Vec::with_capacity(n);
    let mut total_twice = ExtRat::zero();
    for v in 0..n {
        let mut sum: u64 = 0;
        let mut reachable = true;
        for u in 0..n {
            match net.dist[v][u] {
                Some(d) => sum += u64::from(d),
                None => {
                    reachable = false;
                    break;
                }
            }
        }
        let d_v = if reachable {
            ExtRat::from_int(sum as i64)
        } else {
            ExtRat::PosInf
        };
        total_twice = total_twice.add(&d_v);
        per_vertex.push(d_v);
    }
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let total_distance = total_twice.scale(&half);
    let pairs = rat_int((n * (n - 1) / 2) as i64);
    let average_distance = total_distance.scale(&pairs.recip());
    let mut freeman_sum = Rat::zero();
    for u in 0..n {
        freeman_sum += freeman_betweenness(net, u);
    }
    let average_freeman_betweenness = freeman_sum / rat_int(n as i64);
    GraphStatistics {
        edge_count: net.edge_count(),
        per_vertex_distance: per_vertex,
        total_distance,
        average_distance,
        average_freeman_betweenness,
    }
}

/// Convenience: a profile from explicit `(owner, target)` channel pairs.
pub fn profile_from_links(
    n: usize,
    links: &[(usize, usize)],
) -> Result<StrategyProfile, GameError> {
    let mut strategies: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in links {
        if u >= n {
            return Err(GameError::PlayerOutOfRange { player: u, n });
        }
        strategies[u].insert(v);
    }
    StrategyProfile::new(strategies)
}
