//! Exact half-plane systems over the `(b, c)` weight plane.
//!
//! Stability conditions in this game are conjunctions of affine inequalities
//! `a0 + a1*b + a2*c >= 0` (weak) or `> 0` (strict). This module provides
//! exact feasibility testing via Fourier–Motzkin elimination, implication
//! and redundancy pruning, region equivalence, and vertex enumeration of a
//! region clipped to a rectangular window — all in rational arithmetic, so
//! empty-region and boundary decisions are never resolution artifacts.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Rat;

/// One affine condition `a0 + a1*b + a2*c >= 0` (or `> 0` when strict),
/// carrying a human-readable provenance label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    a0: Rat,
    a1: Rat,
    a2: Rat,
    strict: bool,
    /// Where the condition came from (e.g. which player/deviation).
    pub label: String,
}

impl Inequality {
    /// Weak condition `a0 + a1*b + a2*c >= 0`.
    pub fn weak(a0: Rat, a1: Rat, a2: Rat, label: impl Into<String>) -> Self {
        Inequality {
            a0,
            a1,
            a2,
            strict: false,
            label: label.into(),
        }
    }

    /// Strict condition `a0 + a1*b + a2*c > 0`.
    pub fn strict(a0: Rat, a1: Rat, a2: Rat, label: impl Into<String>) -> Self {
        Inequality {
            a0,
            a1,
            a2,
            strict: true,
            label: label.into(),
        }
    }

    /// Constant coefficient `a0`.
    pub fn a0(&self) -> &Rat {
        &self.a0
    }

    /// Coefficient of `b`.
    pub fn a1(&self) -> &Rat {
        &self.a1
    }

    /// Coefficient of `c`.
    pub fn a2(&self) -> &Rat {
        &self.a2
    }

    /// True for `> 0`, false for `>= 0`.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Value of the affine form at a point.
    pub fn value_at(&self, b: &Rat, c: &Rat) -> Rat {
        &self.a0 + &self.a1 * b + &self.a2 * c
    }

    /// Whether the point satisfies the condition.
    pub fn satisfied_at(&self, b: &Rat, c: &Rat) -> bool {
        let v = self.value_at(b, c);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }

    /// The same condition scaled to coprime integer coefficients (the scale
    /// is positive, so orientation is preserved). Two conditions describe
    /// the same half-plane with the same boundary iff their canonical
    /// triples and strictness match.
    pub fn canonical_triple(&self) -> (BigInt, BigInt, BigInt) {
        let lcm = self
            .a0
            .denom()
            .lcm(self.a1.denom())
            .lcm(self.a2.denom());
        let scale = |r: &Rat| (r * Rat::from_integer(lcm.clone())).to_integer();
        let (i0, i1, i2) = (scale(&self.a0), scale(&self.a1), scale(&self.a2));
        let gcd = i0.gcd(&i1).gcd(&i2);
        if gcd.is_zero() {
            (i0, i1, i2)
        } else {
            (&i0 / &gcd, &i1 / &gcd, &i2 / &gcd)
        }
    }

    /// The negation: `not (e >= 0)` is `-e > 0`, and `not (e > 0)` is
    /// `-e >= 0`.
    fn negated(&self) -> Inequality {
        Inequality {
            a0: -&self.a0,
            a1: -&self.a1,
            a2: -&self.a2,
            strict: !self.strict,
            label: self.label.clone(),
        }
    }

    /// The weak closure of the condition (`>` relaxed to `>=`).
    pub fn closure(&self) -> Inequality {
        let mut weak = self.clone();
        weak.strict = false;
        weak
    }

    /// True when the condition holds everywhere (`0 >= 0`); false when it
    /// holds nowhere (`0 > 0`); `None` when it actually depends on `(b, c)`.
    pub fn constant_truth(&self) -> Option<bool> {
        if self.a0.is_zero() && self.a1.is_zero() && self.a2.is_zero() {
            Some(!self.strict)
        } else if self.a1.is_zero() && self.a2.is_zero() {
            Some(if self.strict {
                self.a0.is_positive()
            } else {
                !self.a0.is_negative()
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i0, i1, i2) = self.canonical_triple();
        let rel = if self.strict { ">" } else { ">=" };
        write!(f, "{i0} + {i1}*b + {i2}*c {rel} 0")
    }
}

/// The standard domain restriction: `b >= 0` and `c > 0`.
pub fn domain_conditions() -> Vec<Inequality> {
    use crate::rational::rat_int;
    alloc::vec![
        Inequality::weak(rat_int(0), rat_int(1), rat_int(0), "domain: b >= 0"),
        Inequality::strict(rat_int(0), rat_int(0), rat_int(1), "domain: c > 0"),
    ]
}

/// A one-variable bound collected during elimination: `value` with a
/// strictness flag.
#[derive(Clone)]
struct Bound {
    value: Rat,
    strict: bool,
}

/// Exact feasibility of a conjunction of conditions over `(b, c) in Q^2`
/// via Fourier–Motzkin elimination of `b`, then interval analysis on `c`.
pub fn feasible(system: &[&Inequality]) -> bool {
    // Split on the sign of the b-coefficient.
    let mut lowers: Vec<&Inequality> = Vec::new(); // a1 > 0: b bounded below
    let mut uppers: Vec<&Inequality> = Vec::new(); // a1 < 0: b bounded above
    // Conditions on c alone, as (e0, e2, strict): e0 + e2*c REL 0.
    let mut single: Vec<(Rat, Rat, bool)> = Vec::new();
    for ineq in system {
        match ineq.a1.cmp(&Rat::zero()) {
            Ordering::Greater => lowers.push(ineq),
            Ordering::Less => uppers.push(ineq),
            Ordering::Equal => single.push((ineq.a0.clone(), ineq.a2.clone(), ineq.strict)),
        }
    }
    // Combine each lower/upper pair; the b terms cancel exactly.
    for low in &lowers {
        for up in &uppers {
            let pos = -&up.a1; // > 0
            let e0 = &low.a0 * &pos + &up.a0 * &low.a1;
            let e2 = &low.a2 * &pos + &up.a2 * &low.a1;
            single.push((e0, e2, low.strict || up.strict));
        }
    }
    // One-variable feasibility over c.
    let mut best_lower: Option<Bound> = None;
    let mut best_upper: Option<Bound> = None;
    for (e0, e2, strict) in single {
        match e2.cmp(&Rat::zero()) {
            Ordering::Equal => {
                let ok = if strict {
                    e0.is_positive()
                } else {
                    !e0.is_negative()
                };
                if !ok {
                    return false;
                }
            }
            Ordering::Greater => {
                // c >= -e0/e2 (or >)
                let bound = Bound {
                    value: -e0 / e2,
                    strict,
                };
                best_lower = Some(match best_lower {
                    None => bound,
                    Some(prev) => tighter_lower(prev, bound),
                });
            }
            Ordering::Less => {
                // c <= -e0/e2 (or <)
                let bound = Bound {
                    value: -e0 / e2,
                    strict,
                };
                best_upper = Some(match best_upper {
                    None => bound,
                    Some(prev) => tighter_upper(prev, bound),
                });
            }
        }
    }
    match (best_lower, best_upper) {
        (Some(lo), Some(hi)) => match lo.value.cmp(&hi.value) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => !lo.strict && !hi.strict,
        },
        _ => true,
    }
}

fn tighter_lower(a: Bound, b: Bound) -> Bound {
    match a.value.cmp(&b.value) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal => Bound {
            value: a.value,
            strict: a.strict || b.strict,
        },
    }
}

fn tighter_upper(a: Bound, b: Bound) -> Bound {
    match a.value.cmp(&b.value) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => Bound {
            value: a.value,
            strict: a.strict || b.strict,
        },
    }
}

/// True when every point satisfying `system` also satisfies `target`
/// (i.e. `system AND NOT target` is infeasible).
pub fn implies(system: &[&Inequality], target: &Inequality) -> bool {
    let negation = target.negated();
    let mut extended: Vec<&Inequality> = system.to_vec();
    extended.push(&negation);
    !feasible(&extended)
}

/// Removes duplicate and implied conditions. `context` conditions (e.g. the
/// `b >= 0, c > 0` domain) participate in implication tests but are not
/// part of the returned system. The result is sorted by canonical
/// coefficients, so equal systems prune to identical output regardless of
/// input order.
pub fn prune(system: Vec<Inequality>, context: &[Inequality]) -> Vec<Inequality> {
    // Sort and drop exact duplicates (keeping the first label) and
    // tautologies.
    let mut sorted = system;
    sorted.sort_by(|x, y| {
        (x.canonical_triple(), x.strict).cmp(&(y.canonical_triple(), y.strict))
    });
    sorted.dedup_by(|x, y| {
        x.canonical_triple() == y.canonical_triple() && x.strict == y.strict
    });
    sorted.retain(|ineq| ineq.constant_truth() != Some(true));

    // Greedily drop conditions implied by the rest plus the context.
    let mut keep: Vec<bool> = alloc::vec![true; sorted.len()];
    for i in 0..sorted.len() {
        let mut rest: Vec<&Inequality> = Vec::new();
        for (j, ineq) in sorted.iter().enumerate() {
            if j != i && keep[j] {
                rest.push(ineq);
            }
        }
        rest.extend(context.iter());
        if implies(&rest, &sorted[i]) {
            keep[i] = false;
        }
    }
    sorted
        .into_iter()
        .zip(keep)
        .filter_map(|(ineq, k)| k.then_some(ineq))
        .collect()
}

/// True when the two systems carve out exactly the same subset of the
/// context region (mutual implication of every condition).
pub fn region_equivalent(a: &[Inequality], b: &[Inequality], context: &[Inequality]) -> bool {
    let a_sys: Vec<&Inequality> = a.iter().chain(context.iter()).collect();
    let b_sys: Vec<&Inequality> = b.iter().chain(context.iter()).collect();
    b.iter().all(|ineq| implies(&a_sys, ineq)) && a.iter().all(|ineq| implies(&b_sys, ineq))
}

/// A rectangular clip window in the `(b, c)` plane (closed box).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    /// Smallest `b` of the box.
    pub b_min: Rat,
    /// Largest `b` of the box.
    pub b_max: Rat,
    /// Smallest `c` of the box.
    pub c_min: Rat,
    /// Largest `c` of the box.
    pub c_max: Rat,
}

impl Window {
    /// The default sweep window `[0, 3/2] x [0, 3/2]` (the closure of the
    /// usual `(0, 3/2]^2` figure window).
    pub fn standard() -> Self {
        use crate::rational::{rat, rat_int};
        Window {
            b_min: rat_int(0),
            b_max: rat(3, 2),
            c_min: rat_int(0),
            c_max: rat(3, 2),
        }
    }

    /// Validates `b_min <= b_max` and `c_min <= c_max`.
    pub fn is_valid(&self) -> bool {
        self.b_min <= self.b_max && self.c_min <= self.c_max
    }

    fn contains(&self, b: &Rat, c: &Rat) -> bool {
        *b >= self.b_min && *b <= self.b_max && *c >= self.c_min && *c <= self.c_max
    }
}

/// A line `a0 + a1*b + a2*c = 0` used for vertex candidates.
struct Line {
    a0: Rat,
    a1: Rat,
    a2: Rat,
}

fn intersect(p: &Line, q: &Line) -> Option<(Rat, Rat)> {
    // Solve a1*b + a2*c = -a0 for both lines (Cramer's rule).
    let det = &p.a1 * &q.a2 - &p.a2 * &q.a1;
    if det.is_zero() {
        return None;
    }
    let rhs_p = -&p.a0;
    let rhs_q = -&q.a0;
    let b = (&rhs_p * &q.a2 - &p.a2 * &rhs_q) / &det;
    let c = (&p.a1 * &rhs_q - &rhs_p * &q.a1) / &det;
    Some((b, c))
}

/// Vertices of the closure of the region `system AND window`, ordered
/// counterclockwise. Candidates are intersections of condition boundaries
/// and window borders; each must satisfy every condition weakly and lie in
/// the closed window. Degenerate regions yield fewer than three vertices;
/// an infeasible region yields none.
pub fn polygon_vertices(system: &[Inequality], window: &Window) -> Vec<(Rat, Rat)> {
    use crate::rational::rat_int;
    let mut lines: Vec<Line> = system
        .iter()
        .filter(|ineq| ineq.constant_truth().is_none())
        .map(|ineq| Line {
            a0: ineq.a0.clone(),
            a1: ineq.a1.clone(),
            a2: ineq.a2.clone(),
        })
        .collect();
    // Window borders as lines.
    lines.push(Line {
        a0: -window.b_min.clone(),
        a1: rat_int(1),
        a2: rat_int(0),
    });
    lines.push(Line {
        a0: -window.b_max.clone(),
        a1: rat_int(1),
        a2: rat_int(0),
    });
    lines.push(Line {
        a0: -window.c_min.clone(),
        a1: rat_int(0),
        a2: rat_int(1),
    });
    lines.push(Line {
        a0: -window.c_max.clone(),
        a1: rat_int(0),
        a2: rat_int(1),
    });

    let mut candidates: Vec<(Rat, Rat)> = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if let Some((b, c)) = intersect(&lines[i], &lines[j]) {
                if window.contains(&b, &c)
                    && system.iter().all(|ineq| ineq.closure().satisfied_at(&b, &c))
                {
                    candidates.push((b, c));
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    if candidates.len() < 3 {
        return candidates;
    }

    // Order counterclockwise around the centroid with exact comparisons.
    let len = rat_int(candidates.len() as i64);
    let cb: Rat = candidates.iter().map(|(b, _)| b).sum::<Rat>() / &len;
    let cc: Rat = candidates.iter().map(|(_, c)| c).sum::<Rat>() / &len;
    let half = |db: &Rat, dc: &Rat| -> u8 {
        // 0 for the upper half-plane (dc > 0, or dc == 0 and db > 0).
        if dc.is_positive() || (dc.is_zero() && db.is_positive()) {
            0
        } else {
            1
        }
    };
    candidates.sort_by(|p, q| {
        let (pb, pc) = (&p.0 - &cb, &p.1 - &cc);
        let (qb, qc) = (&q.0 - &cb, &q.1 - &cc);
        half(&pb, &pc)
            .cmp(&half(&qb, &qc))
            .then_with(|| {
                // Cross product sign: positive means p is counterclockwise
                // before q within the same half.
                let cross = &pb * &qc - &pc * &qb;
                cross.cmp(&Rat::zero()).reverse()
            })
            .then_with(|| {
                // Same ray: nearer point first.
                let dp = &pb * &pb + &pc * &pc;
                let dq = &qb * &qb + &qc * &qc;
                dp.cmp(&dq)
            })
    });
    candidates
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn w(a0: i64, a1: i64, a2: i64) -> Inequality {
        Inequality::weak(rat_int(a0), rat_int(a1), rat_int(a2), "test")
    }

    #[test]
    fn feasibility_basic() {
        // b >= 0, c > 0 is feasible.
        let d = domain_conditions();
        let refs: Vec<&Inequality> = d.iter().collect();
        assert!(feasible(&refs));

        // c > 0 and -c >= 0 is not.
        let up = w(0, 0, -1);
        let sys = [&d[1], &up];
        assert!(!feasible(&sys));

        // Strict pair meeting at a point only: c > 1 and 1 - c > 0.
        let lo = Inequality::strict(rat_int(-1), rat_int(0), rat_int(1), "lo");
        let hi = Inequality::strict(rat_int(1), rat_int(0), rat_int(-1), "hi");
        assert!(!feasible(&[&lo, &hi]));
        // Weak versions meet at c = 1.
        assert!(feasible(&[&lo.closure(), &hi.closure()]));
    }

    #[test]
    fn feasibility_needs_elimination() {
        // b + c <= 1, b >= 3/4, c >= 3/4 infeasible; relax to 3/8 feasible.
        let cap = w(1, -1, -1);
        let b_lo = Inequality::weak(rat(-3, 4), rat_int(1), rat_int(0), "b");
        let c_lo = Inequality::weak(rat(-3, 4), rat_int(0), rat_int(1), "c");
        assert!(!feasible(&[&cap, &b_lo, &c_lo]));
        let b_lo2 = Inequality::weak(rat(-3, 8), rat_int(1), rat_int(0), "b");
        let c_lo2 = Inequality::weak(rat(-3, 8), rat_int(0), rat_int(1), "c");
        assert!(feasible(&[&cap, &b_lo2, &c_lo2]));
    }

    #[test]
    fn implication_and_pruning() {
        let domain = domain_conditions();
        // Within b >= 0, c > 0: 1 - b - 2c >= 0 implies 2 - b - 2c >= 0.
        let tight = w(1, -1, -2);
        let loose = w(2, -1, -2);
        let sys: Vec<&Inequality> = [&tight].into_iter().chain(domain.iter()).collect();
        assert!(implies(&sys, &loose));
        let pruned = prune(alloc::vec![tight.clone(), loose], &domain);
        assert_eq!(pruned.len(), 1);
        assert_eq!(pruned[0].canonical_triple(), tight.canonical_triple());
    }

    #[test]
    fn canonical_triples_are_scale_free() {
        let a = Inequality::weak(rat(1, 2), rat(-1, 4), rat(-1, 2), "a");
        let b = w(2, -1, -2);
        assert_eq!(a.canonical_triple(), b.canonical_triple());
        // Orientation is preserved: the reverse inequality differs.
        let c = w(-2, 1, 2);
        assert_ne!(a.canonical_triple(), c.canonical_triple());
    }

    #[test]
    fn region_equivalence() {
        let domain = domain_conditions();
        let a = alloc::vec![w(1, -1, -2)];
        let b = alloc::vec![w(2, -2, -4), w(5, -1, -2)];
        assert!(region_equivalent(&a, &b, &domain));
        let c = alloc::vec![w(1, -2, -2)];
        assert!(!region_equivalent(&a, &c, &domain));
    }

    #[test]
    fn vertices_of_a_clipped_half_plane() {
        // 2 - b - 2c >= 0 in the standard window: quadrilateral
        // (0,0), (3/2,0), (3/2,1/4), (0,1).
        let sys = alloc::vec![w(2, -1, -2)];
        let verts = polygon_vertices(&sys, &Window::standard());
        assert_eq!(verts.len(), 4);
        assert!(verts.contains(&(rat_int(0), rat_int(0))));
        assert!(verts.contains(&(rat(3, 2), rat_int(0))));
        assert!(verts.contains(&(rat(3, 2), rat(1, 4))));
        assert!(verts.contains(&(rat_int(0), rat_int(1))));
    }

    #[test]
    fn vertices_of_empty_region_are_empty() {
        let sys = alloc::vec![w(-1, 0, -1)]; // -1 - c >= 0: impossible for c >= 0
        let verts = polygon_vertices(&sys, &Window::standard());
        assert!(verts.is_empty());
    }
}
