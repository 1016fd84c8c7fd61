//! Exact parameter maps over the `(b, c)` plane: for a fixed topology, the
//! set of weights making the canonical profile stable, computed from affine
//! deviation costs and half-plane intersection — no grids involved — plus an
//! optional grid rasterization for plotting.
//!
//! The key fact: for a fixed profile and a fixed deviation, the deviator's
//! cost change is *affine* in `(b, c)` — links contribute a constant,
//! betweenness scales `b`, closeness scales `c`. Each deviation therefore
//! contributes a half-plane `Δcost >= 0`, and the stability region is the
//! intersection over all deviations by all players.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::closed_form::{TopologyError, TopologySpec};
use crate::equilibrium::Caps;
use crate::game::{player_cost, GameError, GameParams, StrategyProfile};
use crate::rational::{rat_int, ExtRat, Rat};
use crate::region::{domain_conditions, feasible, polygon_vertices, prune, Inequality, Window};

/// Exact affine expansion of one deviation's cost change:
/// `Δcost(b, c) = d_links + b * d_betweenness + c * d_closeness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeviationCoefficients {
    /// Change in the number of initiated channels.
    pub d_links: i64,
    /// Change in the (unweighted) betweenness cost.
    pub d_betweenness: Rat,
    /// Change in the (unweighted) closeness cost; `+inf` when the deviation
    /// cuts the deviator off from part of the network, `-inf` when it
    /// reconnects her.
    pub d_closeness: ExtRat,
}

impl DeviationCoefficients {
    /// Evaluates `Δcost` at concrete weights.
    pub fn delta_at(&self, b: &Rat, c: &Rat) -> ExtRat {
        ExtRat::finite(rat_int(self.d_links) + b * &self.d_betweenness)
            .add(&self.d_closeness.scale(c))
    }

    /// The non-improvement condition `Δcost >= 0` as a half-plane, or
    /// `None` when `d_closeness` is infinite (then the deviation never
    /// improves, or always does, regardless of the weights).
    pub fn halfplane(&self, label: String) -> Option<Inequality> {
        match &self.d_closeness {
            ExtRat::Finite(d_close) => Some(Inequality::weak(
                rat_int(self.d_links),
                self.d_betweenness.clone(),
                d_close.clone(),
                label,
            )),
            _ => None,
        }
    }
}

/// Computes the exact affine coefficients of the cost change when `u`
/// switches to `new_strategy`, everyone else fixed.
///
/// The profile must leave `u` connected or the deviation must reconnect
/// her; when both sides leave `u` cut off, the change in closeness is
/// indeterminate and this function panics.
pub fn deviation_coefficients(
    profile: &StrategyProfile,
    u: usize,
    new_strategy: &BTreeSet<usize>,
    n_params: &GameParams,
) -> Result<DeviationCoefficients, GameError> {
    let before = player_cost(profile, u, n_params)?;
    let after_profile = profile.with_strategy(u, new_strategy.clone())?;
    let after = player_cost(&after_profile, u, n_params)?;
    Ok(DeviationCoefficients {
        d_links: after.link_cost as i64 - before.link_cost as i64,
        d_betweenness: &after.betweenness_term - &before.betweenness_term,
        d_closeness: after.closeness_term.sub(&before.closeness_term),
    })
}

/// Whether deviation scans cover one representative player per symmetry
/// orbit of the canonical topology, or every player.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryMode {
    /// One representative per orbit: hub plus one leaf for stars, a single
    /// player for rings, one player per subset for bicliques. Any relabeling
    /// that fixes the canonical ownership maps one orbit member's deviations
    /// onto another's, so the half-plane systems coincide.
    Reduced,
    /// Scan every player (validation mode).
    Full,
}

/// Errors from parameter-map computation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    /// Player count exceeds the per-profile scan cap.
    #[error("ne_region is capped at n={cap} (got n={n}); raise the cap to override")]
    CapExceeded {
        /// Requested player count.
        n: usize,
        /// Configured cap.
        cap: usize,
    },
    /// The topology cannot be instantiated on this player count.
    #[error(transparent)]
    Topology(#[from] TopologyError),
    /// Invalid profile or parameters.
    #[error(transparent)]
    Game(#[from] GameError),
}

/// A boolean raster of the stability region over a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    /// The rastered window.
    pub window: Window,
    /// Cells per axis.
    pub resolution: usize,
    /// `verdicts[i][j]`: the half-plane test at the center of the cell with
    /// `b` index `i` (ascending) and `c` index `j` (ascending).
    pub verdicts: Vec<Vec<bool>>,
    /// `boundary[i][j]`: the cell is not uniformly inside or outside, so
    /// the region's edge passes through or near it.
    pub boundary: Vec<Vec<bool>>,
}

impl Grid {
    /// Exact center of cell `(i, j)`.
    pub fn center(&self, i: usize, j: usize) -> (Rat, Rat) {
        (
            cell_coordinate(&self.window.b_min, &self.window.b_max, self.resolution, i),
            cell_coordinate(&self.window.c_min, &self.window.c_max, self.resolution, j),
        )
    }
}

fn cell_coordinate(lo: &Rat, hi: &Rat, resolution: usize, index: usize) -> Rat {
    lo + (hi - lo) * rat_int(2 * index as i64 + 1) / rat_int(2 * resolution as i64)
}

/// The full description of one topology's stability region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterMap {
    /// The topology analyzed.
    pub topology: TopologySpec,
    /// Player count.
    pub n: usize,
    /// Irredundant half-planes whose intersection (within `b >= 0, c > 0`)
    /// is the stability region; each labeled with the deviation it came
    /// from.
    pub halfplanes: Vec<Inequality>,
    /// Whether the region contains any admissible point at all (exact
    /// rational feasibility, not grid-dependent).
    pub feasible: bool,
    /// Corners of the region clipped to the window, in counterclockwise
    /// order (closure convention: boundary points of strict conditions are
    /// included).
    pub region_vertices: Vec<(Rat, Rat)>,
    /// Raster, when requested.
    pub grid: Option<Grid>,
}

fn render_set(set: &BTreeSet<usize>) -> String {
    let mut out = String::from("{");
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{v}"));
    }
    out.push('}');
    out
}

/// Representative players, one per ownership-preserving symmetry orbit.
fn orbit_representatives(topology: &TopologySpec, n: usize, mode: SymmetryMode) -> Vec<usize> {
    if matches!(mode, SymmetryMode::Full) {
        return (0..n).collect();
    }
    match topology {
        // Swapping two leaves of the hub-owned star, or rotating the ring,
        // or permuting within a biclique subset, keeps ownership intact.
        TopologySpec::Star => {
            if n <= 2 {
                (0..n).collect()
            } else {
                alloc::vec![0, 1]
            }
        }
        TopologySpec::Circle => alloc::vec![0],
        TopologySpec::Biclique { r, .. } => alloc::vec![0, *r],
        // The lower-id-pays convention of the complete network, the
        // mirror-broken ownership of short paths, and arbitrary custom
        // profiles admit no ownership-preserving relabeling in general.
        _ => (0..n).collect(),
    }
}

/// Computes the exact stability region of a topology's canonical profile:
/// every deviation of every (representative) player becomes a half-plane
/// `Δcost >= 0`, and the pruned intersection is returned together with its
/// feasibility and its corners within the standard window.
pub fn ne_region(
    topology: &TopologySpec,
    n: usize,
    mode: SymmetryMode,
    caps: &Caps,
) -> Result<ParameterMap, SweepError> {
    ne_region_in(topology, n, mode, caps, &Window::standard())
}

/// As [`ne_region`], with the polygon clipped to a caller-chosen window.
pub fn ne_region_in(
    topology: &TopologySpec,
    n: usize,
    mode: SymmetryMode,
    caps: &Caps,
    window: &Window,
) -> Result<ParameterMap, SweepError> {
    if n > caps.check_n {
        return Err(SweepError::CapExceeded {
            n,
            cap: caps.check_n,
        });
    }
    let profile = topology.canonical_profile(n)?;
    // The coefficients are parameter-independent; any valid weights do.
    let probe = GameParams::new(n, rat_int(0), rat_int(1)).expect("probe weights are valid");

    let mut system: Vec<Inequality> = Vec::new();
    for u in orbit_representatives(topology, n, mode) {
        let incoming = profile.incoming(u);
        let targets: Vec<usize> = (0..n)
            .filter(|v| *v != u && !incoming.contains(v))
            .collect();
        for mask in 0u64..(1 << targets.len()) {
            let to: BTreeSet<usize> = targets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, v)| *v)
                .collect();
            if to == *profile.strategy(u) {
                continue;
            }
            let coeffs = deviation_coefficients(&profile, u, &to, &probe)?;
            let label = format!(
                "player {u}: {} -> {}",
                render_set(profile.strategy(u)),
                render_set(&to)
            );
            if let Some(halfplane) = coeffs.halfplane(label) {
                system.push(halfplane);
            }
        }
    }

    let domain = domain_conditions();
    let halfplanes = prune(system, &domain);
    let mut clipped: Vec<Inequality> = halfplanes.clone();
    clipped.extend(domain.iter().cloned());
    let refs: Vec<&Inequality> = clipped.iter().collect();
    let is_feasible = feasible(&refs);
    let region_vertices = if is_feasible {
        polygon_vertices(&clipped, window)
    } else {
        Vec::new()
    };
    Ok(ParameterMap {
        topology: topology.clone(),
        n,
        halfplanes,
        feasible: is_feasible,
        region_vertices,
        grid: None,
    })
}

/// Rasterizes the stability region over a window: exact half-plane tests at
/// every cell center, with boundary-straddling cells flagged separately.
pub fn sweep_grid(
    topology: &TopologySpec,
    n: usize,
    window: &Window,
    resolution: usize,
    mode: SymmetryMode,
    caps: &Caps,
) -> Result<ParameterMap, SweepError> {
    assert!(resolution >= 2, "a raster needs at least 2 cells per axis");
    let mut map = ne_region_in(topology, n, mode, caps, window)?;
    let mut conditions: Vec<Inequality> = map.halfplanes.clone();
    conditions.extend(domain_conditions());

    let mut verdicts = Vec::with_capacity(resolution);
    let mut boundary = Vec::with_capacity(resolution);
    for i in 0..resolution {
        let b_lo = window_edge(&window.b_min, &window.b_max, resolution, i);
        let b_hi = window_edge(&window.b_min, &window.b_max, resolution, i + 1);
        let b_mid = cell_coordinate(&window.b_min, &window.b_max, resolution, i);
        let mut verdict_row = Vec::with_capacity(resolution);
        let mut boundary_row = Vec::with_capacity(resolution);
        for j in 0..resolution {
            let c_lo = window_edge(&window.c_min, &window.c_max, resolution, j);
            let c_hi = window_edge(&window.c_min, &window.c_max, resolution, j + 1);
            let c_mid = cell_coordinate(&window.c_min, &window.c_max, resolution, j);
            verdict_row.push(conditions.iter().all(|cond| cond.satisfied_at(&b_mid, &c_mid)));
            boundary_row.push(cell_straddles(
                &conditions,
                [
                    (&b_lo, &c_lo),
                    (&b_lo, &c_hi),
                    (&b_hi, &c_lo),
                    (&b_hi, &c_hi),
                ],
            ));
        }
        verdicts.push(verdict_row);
        boundary.push(boundary_row);
    }
    map.grid = Some(Grid {
        window: window.clone(),
        resolution,
        verdicts,
        boundary,
    });
    Ok(map)
}

fn window_edge(lo: &Rat, hi: &Rat, resolution: usize, index: usize) -> Rat {
    lo + (hi - lo) * rat_int(index as i64) / rat_int(resolution as i64)
}

/// True when the cell is neither entirely inside the region nor entirely
/// outside it, judged exactly from the four corners (each condition is
/// linear, so its extrema over the cell sit at corners).
fn cell_straddles(conditions: &[Inequality], corners: [(&Rat, &Rat); 4]) -> bool {
    let entirely_in = conditions
        .iter()
        .all(|cond| corners.iter().all(|(b, c)| cond.satisfied_at(b, c)));
    if entirely_in {
        return false;
    }
    let entirely_out = conditions
        .iter()
        .any(|cond| corners.iter().all(|(b, c)| !cond.satisfied_at(b, c)));
    !entirely_out
}
