//! Exact-arithmetic analysis of a payment-channel network creation game.
//!
//! Players 0..n build a communication network by opening channels (edges).
//! Each player chooses the set of peers she initiates channels to; the union
//! of all initiated channels forms an undirected network. A player's cost is
//!
//! ```text
//! cost_u = |s_u| + b * betweenness_u + c * closeness_u
//! ```
//!
//! where `|s_u|` is the number of channels she pays for, `betweenness_u`
//! measures how little traffic she intermediates (lower is better for her
//! fee income, so it enters as a cost), and `closeness_u` measures how far
//! she sits from everyone else. All arithmetic is exact: weights `b`, `c`
//! and every centrality value are rationals, and infinities arising from
//! disconnected networks are modelled explicitly.
//!
//! The crate is `no_std` (it requires only `alloc`) and is organised as:
//!
//! * [`game`] — strategy profiles, the derived network, centralities, costs.
//! * [`closed_form`] — named topologies, closed-form social optima and
//!   stability predicates, distance bounds.
//! * [`equilibrium`] — exhaustive best responses, equilibrium checking and
//!   enumeration, price of anarchy / stability.
//! * [`sweep`] — exact `(b, c)` stability regions as half-plane systems and
//!   grid evaluations.
//! * [`dynamics`] — best-response dynamics with convergence and cycle
//!   reporting.
//! * [`rational`] and [`region`] — supporting exact scalar and half-plane
//!   machinery.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod closed_form;
pub mod dynamics;
pub mod equilibrium;
pub mod game;
pub mod rational;
pub mod region;
pub mod sweep;

pub use rational::{ExtRat, Rat};
