//! Finite-dimensionality deciders.
//!
//! For a pure type I set the generated Lie algebra is finite dimensional iff
//! the generator graph has no directed cycle through a positive-weight vertex.
//! For a pure type II set (after stripping weight-zero spectators) it is
//! finite dimensional iff the generators can be reordered so that
//!
//! 1. proportional coefficient vectors `beta(i) ~ beta(j)` have
//!    `<beta(i), p(i) - p(j)> = 0`, and
//! 2. for every non-proportional pair placed `i` before `j`:
//!    `<beta(j), p(i)> = 0` and some `r >= 0` has
//!    `<beta(i), p(j) + r p(i)> = 0`.
//!
//! Condition 1 does not depend on the order, and condition 2 constrains each
//! non-proportional pair independently, so the search over all reorderings
//! collapses: a valid order exists iff no pair fails in both directions and
//! the orientations forced by one-sided pairs form an acyclic relation. The
//! deciders return checkable witnesses either way; [`verify_witness`]
//! re-validates them from scratch.
//!
//! Mixed sets and sets containing Laurent-only elements get an honest
//! `Undecided` (the capped closure engine remains available as a
//! semidecision).

use num_traits::{One, Signed, Zero};

use crate::derivation::{
    classify_type1, classify_type2, DerivationClass, HomogeneousDerivation, TypeIIData,
};
use crate::error::{Error, Result};
use crate::graph::{gamma_type1, gamma_type2, DiGraph, TopoResult};
use crate::vector::{Int, LatticeVector, Rat, RationalVector};

/// Decision outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite,
    Infinite,
    Undecided,
}

/// A decision together with its checkable witness. Generator indices refer to
/// positions in the input sequence (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub witness: Witness,
}

/// One entry of the annihilating-exponent table of a finite type II set:
/// `<beta(earlier), p(later) + r * p(earlier)> = 0` with `r` minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RTableEntry {
    pub earlier: usize,
    pub later: usize,
    pub r: Int,
}

/// Why a type II set fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Type2Violation {
    /// Proportional coefficient vectors with `<beta(i), p(i) - p(j)> != 0`.
    ProportionalWeightMismatch { i: usize, j: usize, pairing: Rat },
    /// Neither order of the pair satisfies condition 2.
    NoFeasibleOrientation {
        i: usize,
        j: usize,
        forward: OrientationCheck,
        backward: OrientationCheck,
    },
    /// One-sided pairs force a cyclic precedence.
    PrecedenceCycle { cycle: Vec<usize> },
}

/// The two halves of condition 2 for a fixed orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientationCheck {
    /// `<beta(later), p(earlier)> = 0`?
    pub pairing_vanishes: bool,
    /// Some `r >= 0` with `<beta(earlier), p(later) + r p(earlier)> = 0`?
    pub exponent_exists: bool,
}

impl OrientationCheck {
    pub fn holds(&self) -> bool {
        self.pairing_vanishes && self.exponent_exists
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The empty set generates the zero algebra.
    Empty,
    /// All cycle vertices have weight zero (empty set means acyclic).
    Type1Finite {
        cycle_vertices: Vec<usize>,
    },
    /// A directed cycle through a positive-weight generator.
    Type1Infinite {
        cycle: Vec<usize>,
        positive_vertex: usize,
    },
    /// A valid ordering of the positive-weight generators with the full
    /// annihilating-exponent table; weight-zero generators ride along.
    Type2Finite {
        order: Vec<usize>,
        r_table: Vec<RTableEntry>,
        spectators: Vec<usize>,
    },
    Type2Infinite(Type2Violation),
    /// Generators of both polynomial types; no criterion applies.
    Mixed {
        type1: Vec<usize>,
        type2: Vec<usize>,
        laurent: Vec<usize>,
    },
    /// Laurent-only generators present; no criterion applies.
    LaurentPresent {
        laurent: Vec<usize>,
    },
}

/// The smallest `r >= 0` with `<beta, p_other + r * p_self> = 0`, if any.
/// The equation is linear in `r`, so the solution is unique when it exists;
/// minimality is automatic.
pub fn find_r(
    beta: &RationalVector,
    p_self: &LatticeVector,
    p_other: &LatticeVector,
) -> Result<Option<Int>> {
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    let constant = beta.pairing(p_other)?;
    if constant.is_zero() {
        return Ok(Some(Int::zero()));
    }
    let slope = beta.pairing(p_self)?;
    if slope.is_zero() {
        return Ok(None);
    }
    let ratio = -constant / slope;
    if ratio.is_integer() && ratio.is_positive() {
        Ok(Some(ratio.to_integer()))
    } else {
        Ok(None)
    }
}

fn orientation_check(earlier: &TypeIIData, later: &TypeIIData) -> Result<OrientationCheck> {
    let pairing_vanishes = later.coeffs.pairing(&earlier.degree)?.is_zero();
    let exponent_exists = find_r(&earlier.coeffs, &earlier.degree, &later.degree)?.is_some();
    Ok(OrientationCheck {
        pairing_vanishes,
        exponent_exists,
    })
}

/// Whether placing `earlier` before `later` satisfies condition 2. The
/// coefficient vectors must not be proportional.
pub fn orientation_feasible(earlier: &TypeIIData, later: &TypeIIData) -> Result<bool> {
    if earlier.coeffs.is_proportional_to(&later.coeffs)? {
        return Err(Error::ProportionalCoefficients);
    }
    Ok(orientation_check(earlier, later)?.holds())
}

/// Decides a pure type I set: finite iff every generator-graph cycle runs
/// through weight-zero vertices only.
pub fn decide_type1(gens: &[HomogeneousDerivation]) -> Result<DecisionReport> {
    if gens.is_empty() {
        return Ok(DecisionReport {
            verdict: Verdict::Finite,
            witness: Witness::Empty,
        });
    }
    let data = classify_type1(gens)?;
    let graph = gamma_type1(&data)?;
    let cycle_vertices = graph.cycle_vertices();
    let positive = cycle_vertices
        .iter()
        .copied()
        .find(|&v| data[v].weight().is_positive());
    match positive {
        None => Ok(DecisionReport {
            verdict: Verdict::Finite,
            witness: Witness::Type1Finite {
                cycle_vertices: cycle_vertices.into_iter().collect(),
            },
        }),
        Some(v) => {
            let cycle = graph
                .cycle_through(v)
                .expect("cycle vertices lie on a cycle");
            Ok(DecisionReport {
                verdict: Verdict::Infinite,
                witness: Witness::Type1Infinite {
                    cycle,
                    positive_vertex: v,
                },
            })
        }
    }
}

/// Decides a pure type II set per the reorderability criterion.
pub fn decide_type2(gens: &[HomogeneousDerivation]) -> Result<DecisionReport> {
    if gens.is_empty() {
        return Ok(DecisionReport {
            verdict: Verdict::Finite,
            witness: Witness::Empty,
        });
    }
    let data = classify_type2(gens)?;
    let active: Vec<usize> = (0..data.len())
        .filter(|&i| !data[i].is_spectator())
        .collect();
    let spectators: Vec<usize> = (0..data.len())
        .filter(|&i| data[i].is_spectator())
        .collect();

    // Condition 1 on proportional pairs.
    for (slot, &x) in active.iter().enumerate() {
        for &y in &active[slot + 1..] {
            if data[x].coeffs.is_proportional_to(&data[y].coeffs)? {
                let diff = data[x].degree.checked_sub(&data[y].degree)?;
                let pairing = data[x].coeffs.pairing(&diff)?;
                if !pairing.is_zero() {
                    return Ok(DecisionReport {
                        verdict: Verdict::Infinite,
                        witness: Witness::Type2Infinite(
                            Type2Violation::ProportionalWeightMismatch {
                                i: x,
                                j: y,
                                pairing,
                            },
                        ),
                    });
                }
            }
        }
    }

    // Condition 2: collect forced orientations of non-proportional pairs.
    let mut forced = DiGraph::new(active.len());
    for ai in 0..active.len() {
        for aj in (ai + 1)..active.len() {
            let (x, y) = (active[ai], active[aj]);
            if data[x].coeffs.is_proportional_to(&data[y].coeffs)? {
                continue;
            }
            let forward = orientation_check(&data[x], &data[y])?;
            let backward = orientation_check(&data[y], &data[x])?;
            match (forward.holds(), backward.holds()) {
                (false, false) => {
                    return Ok(DecisionReport {
                        verdict: Verdict::Infinite,
                        witness: Witness::Type2Infinite(Type2Violation::NoFeasibleOrientation {
                            i: x,
                            j: y,
                            forward,
                            backward,
                        }),
                    });
                }
                (true, false) => forced.add_edge(ai, aj)?,
                (false, true) => forced.add_edge(aj, ai)?,
                (true, true) => {}
            }
        }
    }

    match forced.topological_order() {
        TopoResult::Ordered(slots) => {
            let order: Vec<usize> = slots.into_iter().map(|s| active[s]).collect();
            let mut r_table = Vec::new();
            for oi in 0..order.len() {
                for oj in (oi + 1)..order.len() {
                    let (x, y) = (order[oi], order[oj]);
                    if data[x].coeffs.is_proportional_to(&data[y].coeffs)? {
                        continue;
                    }
                    let r = find_r(&data[x].coeffs, &data[x].degree, &data[y].degree)?
                        .expect("orientation in the emitted order is feasible");
                    r_table.push(RTableEntry {
                        earlier: x,
                        later: y,
                        r,
                    });
                }
            }
            Ok(DecisionReport {
                verdict: Verdict::Finite,
                witness: Witness::Type2Finite {
                    order,
                    r_table,
                    spectators,
                },
            })
        }
        TopoResult::Cycle(cycle) => Ok(DecisionReport {
            verdict: Verdict::Infinite,
            witness: Witness::Type2Infinite(Type2Violation::PrecedenceCycle {
                cycle: cycle.into_iter().map(|s| active[s]).collect(),
            }),
        }),
    }
}

/// Classifies the generators and dispatches to the matching decider. Mixed
/// sets and sets containing Laurent-only elements come back `Undecided`.
pub fn decide(gens: &[HomogeneousDerivation]) -> DecisionReport {
    if gens.is_empty() {
        return DecisionReport {
            verdict: Verdict::Finite,
            witness: Witness::Empty,
        };
    }
    let mut type1 = Vec::new();
    let mut type2 = Vec::new();
    let mut laurent = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        match g.classify() {
            DerivationClass::TypeI(_) => type1.push(i),
            DerivationClass::TypeII(_) => type2.push(i),
            DerivationClass::LaurentOnly | DerivationClass::Zero => laurent.push(i),
        }
    }
    if !laurent.is_empty() {
        let witness = if type1.is_empty() && type2.is_empty() {
            Witness::LaurentPresent { laurent }
        } else {
            Witness::Mixed {
                type1,
                type2,
                laurent,
            }
        };
        return DecisionReport {
            verdict: Verdict::Undecided,
            witness,
        };
    }
    match (type1.is_empty(), type2.is_empty()) {
        (false, true) => decide_type1(gens).expect("all generators are type I"),
        (true, false) => decide_type2(gens).expect("all generators are type II"),
        _ => DecisionReport {
            verdict: Verdict::Undecided,
            witness: Witness::Mixed {
                type1,
                type2,
                laurent,
            },
        },
    }
}

/// A failed necessary condition reported by [`pairwise_diagnostics`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// Proportional coefficient vectors whose degrees pair differently:
    /// `<beta, p(i) - p(j)> != 0`.
    ProportionalWeightMismatch { i: usize, j: usize, pairing: Rat },
    /// No `r >= 0` annihilates `<beta(earlier), p(later) + r p(earlier)>`.
    NoAnnihilatingExponent { earlier: usize, later: usize },
    /// Both minimal exponents of the pair are >= 1; at most one may be.
    ClashingMinimalExponents { i: usize, j: usize, r: Int, s: Int },
    /// A directed cycle in the pairing graph.
    PairingCycle { cycle: Vec<usize> },
}

impl Finding {
    /// Stable identifier of the violated condition.
    pub fn condition(&self) -> &'static str {
        match self {
            Finding::ProportionalWeightMismatch { .. } => "proportional-weight-mismatch",
            Finding::NoAnnihilatingExponent { .. } => "no-annihilating-exponent",
            Finding::ClashingMinimalExponents { .. } => "clashing-minimal-exponents",
            Finding::PairingCycle { .. } => "pairing-cycle",
        }
    }
}

/// Evaluates every pairwise necessary condition on a type II set and reports
/// each failure. Weight-zero generators are spectators and produce no
/// findings. An empty report does not by itself certify finiteness; the
/// reorderability decider is the complete test.
pub fn pairwise_diagnostics(gens: &[HomogeneousDerivation]) -> Result<Vec<Finding>> {
    let data = classify_type2(gens)?;
    let active: Vec<usize> = (0..data.len())
        .filter(|&i| !data[i].is_spectator())
        .collect();
    let mut findings = Vec::new();

    for (slot, &x) in active.iter().enumerate() {
        for &y in &active[slot + 1..] {
            if data[x].coeffs.is_proportional_to(&data[y].coeffs)? {
                let diff = data[x].degree.checked_sub(&data[y].degree)?;
                let pairing = data[x].coeffs.pairing(&diff)?;
                if !pairing.is_zero() {
                    findings.push(Finding::ProportionalWeightMismatch {
                        i: x,
                        j: y,
                        pairing,
                    });
                }
                continue;
            }
            let r = find_r(&data[x].coeffs, &data[x].degree, &data[y].degree)?;
            let s = find_r(&data[y].coeffs, &data[y].degree, &data[x].degree)?;
            if r.is_none() {
                findings.push(Finding::NoAnnihilatingExponent {
                    earlier: x,
                    later: y,
                });
            }
            if s.is_none() {
                findings.push(Finding::NoAnnihilatingExponent {
                    earlier: y,
                    later: x,
                });
            }
            if let (Some(r), Some(s)) = (r, s) {
                if r >= Int::one() && s >= Int::one() {
                    findings.push(Finding::ClashingMinimalExponents { i: x, j: y, r, s });
                }
            }
        }
    }

    // Cycles of the pairing graph, one witness per strongly connected
    // component.
    let active_data: Vec<TypeIIData> = active.iter().map(|&i| data[i].clone()).collect();
    let graph = gamma_type2(&active_data)?;
    for comp in graph.sccs() {
        if comp.len() < 2 {
            continue;
        }
        let cycle = graph
            .cycle_through(comp[0])
            .expect("component of size >= 2 has a cycle");
        findings.push(Finding::PairingCycle {
            cycle: cycle.into_iter().map(|s| active[s]).collect(),
        });
    }

    Ok(findings)
}

/// Re-validates a decision report against its generator set from scratch.
pub fn verify_witness(gens: &[HomogeneousDerivation], report: &DecisionReport) -> bool {
    match &report.witness {
        Witness::Empty => report.verdict == Verdict::Finite && gens.is_empty(),
        Witness::Type1Finite { cycle_vertices } => {
            if report.verdict != Verdict::Finite {
                return false;
            }
            let Ok(data) = classify_type1(gens) else {
                return false;
            };
            let Ok(graph) = gamma_type1(&data) else {
                return false;
            };
            let recomputed: Vec<usize> = graph.cycle_vertices().into_iter().collect();
            recomputed == *cycle_vertices
                && cycle_vertices.iter().all(|&v| data[v].weight().is_zero())
        }
        Witness::Type1Infinite {
            cycle,
            positive_vertex,
        } => {
            if report.verdict != Verdict::Infinite {
                return false;
            }
            let Ok(data) = classify_type1(gens) else {
                return false;
            };
            let Ok(graph) = gamma_type1(&data) else {
                return false;
            };
            cycle.len() >= 2
                && cycle.first() == cycle.last()
                && cycle.windows(2).all(|w| graph.has_edge(w[0], w[1]))
                && cycle.contains(positive_vertex)
                && data[*positive_vertex].weight().is_positive()
        }
        Witness::Type2Finite {
            order,
            r_table,
            spectators,
        } => {
            if report.verdict != Verdict::Finite {
                return false;
            }
            let Ok(data) = classify_type2(gens) else {
                return false;
            };
            let mut expected_active: Vec<usize> = (0..data.len())
                .filter(|&i| !data[i].is_spectator())
                .collect();
            let mut sorted_order = order.clone();
            sorted_order.sort_unstable();
            expected_active.sort_unstable();
            if sorted_order != expected_active {
                return false;
            }
            let expected_spectators: Vec<usize> = (0..data.len())
                .filter(|&i| data[i].is_spectator())
                .collect();
            if *spectators != expected_spectators {
                return false;
            }
            // Condition 1.
            for (slot, &x) in order.iter().enumerate() {
                for &y in &order[slot + 1..] {
                    match data[x].coeffs.is_proportional_to(&data[y].coeffs) {
                        Ok(true) => {
                            let Ok(diff) = data[x].degree.checked_sub(&data[y].degree) else {
                                return false;
                            };
                            match data[x].coeffs.pairing(&diff) {
                                Ok(v) if v.is_zero() => {}
                                _ => return false,
                            }
                        }
                        Ok(false) => {
                            // Condition 2 with the table's r, including
                            // minimality.
                            let Some(entry) =
                                r_table.iter().find(|e| e.earlier == x && e.later == y)
                            else {
                                return false;
                            };
                            let Ok(pairing) = data[y].coeffs.pairing(&data[x].degree) else {
                                return false;
                            };
                            if !pairing.is_zero() {
                                return false;
                            }
                            let point =
                                data[y].degree.checked_add(&data[x].degree.scaled(&entry.r));
                            let Ok(point) = point else { return false };
                            match data[x].coeffs.pairing(&point) {
                                Ok(v) if v.is_zero() => {}
                                _ => return false,
                            }
                            if entry.r.is_positive() {
                                let prev = entry.r.clone() - Int::one();
                                let Ok(point) =
                                    data[y].degree.checked_add(&data[x].degree.scaled(&prev))
                                else {
                                    return false;
                                };
                                match data[x].coeffs.pairing(&point) {
                                    Ok(v) if !v.is_zero() => {}
                                    _ => return false,
                                }
                            }
                        }
                        Err(_) => return false,
                    }
                }
            }
            true
        }
        Witness::Type2Infinite(violation) => {
            if report.verdict != Verdict::Infinite {
                return false;
            }
            let Ok(data) = classify_type2(gens) else {
                return false;
            };
            match violation {
                Type2Violation::ProportionalWeightMismatch { i, j, pairing } => {
                    let Ok(true) = data[*i].coeffs.is_proportional_to(&data[*j].coeffs) else {
                        return false;
                    };
                    let Ok(diff) = data[*i].degree.checked_sub(&data[*j].degree) else {
                        return false;
                    };
                    matches!(data[*i].coeffs.pairing(&diff), Ok(v) if !v.is_zero() && v == *pairing)
                }
                Type2Violation::NoFeasibleOrientation { i, j, .. } => {
                    matches!(orientation_feasible(&data[*i], &data[*j]), Ok(false))
                        && matches!(orientation_feasible(&data[*j], &data[*i]), Ok(false))
                }
                Type2Violation::PrecedenceCycle { cycle } => {
                    if cycle.len() < 3 || cycle.first() != cycle.last() {
                        return false;
                    }
                    // Every step of the cycle must be a forced orientation.
                    cycle.windows(2).all(|w| {
                        matches!(orientation_feasible(&data[w[0]], &data[w[1]]), Ok(true))
                            && matches!(orientation_feasible(&data[w[1]], &data[w[0]]), Ok(false))
                    })
                }
            }
        }
        Witness::Mixed {
            type1,
            type2,
            laurent,
        } => {
            if report.verdict != Verdict::Undecided {
                return false;
            }
            let check = |indices: &[usize], pred: fn(&DerivationClass) -> bool| {
                indices.iter().all(|&i| pred(&gens[i].classify()))
            };
            check(type1, DerivationClass::is_type1)
                && check(type2, DerivationClass::is_type2)
                && laurent
                    .iter()
                    .all(|&i| matches!(gens[i].classify(), DerivationClass::LaurentOnly))
                && type1.len() + type2.len() + laurent.len() == gens.len()
        }
        Witness::LaurentPresent { laurent } => {
            report.verdict == Verdict::Undecided
                && laurent
                    .iter()
                    .all(|&i| matches!(gens[i].classify(), DerivationClass::LaurentOnly))
        }
    }
}
