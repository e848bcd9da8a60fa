//! Merging alternating cycles.
//!
//! [`merge_pair`] tries, in order: a good pair of edges; the parallel-edge
//! propagation between appropriately labelled cycles (and the explicit
//! cycles of its two failure branches); the mixed-star construction; the
//! chord splice for monochromatic stars; and finally the color-domination
//! verdict. Whenever no explicit pattern instantiates (short cycles make
//! indices collide) an exhaustive search over `V(C1) ∪ V(C2)` decides.
//! [`solve_hamiltonian`] drives these merges over a whole cycle factor.

mod domination;
mod good_pair;
mod label;
mod patterns;
mod solve;
mod triangle;

use std::fmt;

use thiserror::Error;

use crate::cycle::AltCycle;
use crate::graph::{Color, ColoredMultigraph};
use crate::oracle::oracle_merge;
use crate::predicates::{first_two_m_violation, TwoPath};

pub use domination::{
    build_domination_digraph, color_dominates, cycle_components, DominationDigraph,
};
pub use good_pair::{find_good_pair, good_pairs, merge_good_pair, GoodPair, Orientation};
pub use label::{appropriately_label, check_parallel_edges, orient_at, ParallelEdges};
pub use patterns::{chord_splice, lemma2_case1, lemma2_case2, mixed_star};
pub use solve::{
    solve_hamiltonian, solve_with_trace, Certificate, Obstacle, SolveResult, TraceEvent,
};
pub use triangle::merge_domination_triangle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("no {color} edge between {x} and {y}")]
    NoSuchEdge { x: usize, y: usize, color: Color },
    #[error("{0:?} is not a good pair for these cycles")]
    InvalidPair(GoodPair),
    #[error("invalid domination triangle: {0}")]
    InvalidTriangle(String),
    #[error("domination digraph structure violated ({reason}) at cycles {cycles:?}")]
    StructureViolation { reason: String, cycles: Vec<usize> },
    #[error(
        "cycles {0:?} and {1:?} neither merge nor dominate, and no closure violation explains it"
    )]
    Unresolved(Vec<usize>, Vec<usize>),
}

/// Which construction produced a merged cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MergeKind {
    GoodPair,
    Lemma2Case1,
    Lemma2Case2,
    Case1,
    Case31,
    TriangleMono,
    TriangleMixed,
    Oracle,
}

impl fmt::Display for MergeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MergeKind::GoodPair => "good-pair",
            MergeKind::Lemma2Case1 => "lemma2-case1",
            MergeKind::Lemma2Case2 => "lemma2-case2",
            MergeKind::Case1 => "case1",
            MergeKind::Case31 => "case3.1",
            MergeKind::TriangleMono => "triangle-mono",
            MergeKind::TriangleMixed => "triangle-mixed",
            MergeKind::Oracle => "oracle",
        })
    }
}

/// Which of the two input cycles dominates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    FirstOverSecond,
    SecondOverFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergeOutcome {
    /// One alternating cycle on `V(C1) ∪ V(C2)`.
    Merged {
        cycle: AltCycle,
        kind: MergeKind,
    },
    /// The dominating cycle `color`-dominates the other, relative to its
    /// own labelling as passed in.
    Dominates {
        direction: Direction,
        color: Color,
    },
    NotAdjacent,
    /// The pair sits in a part of the graph that is not 2-M-closed.
    Inapplicable(TwoPath),
}

/// Cross edges `(x, y, color)` with `x` on `c1`, `y` on `c2`, sorted by vertex.
fn cross_edges(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Vec<(usize, usize, Color)> {
    let mut xs = c1.vertices().to_vec();
    let mut ys = c2.vertices().to_vec();
    xs.sort_unstable();
    ys.sort_unstable();
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            out.extend(g.colors_between(x, y).map(|c| (x, y, c)));
        }
    }
    out
}

/// Tries `build` on every appropriately labelled orientation of the pair,
/// both role orders, anchors in vertex order; returns the first sequence
/// that is an alternating cycle of `g`.
fn first_labelled<F>(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
    mut build: F,
) -> Option<AltCycle>
where
    F: FnMut(&AltCycle, &AltCycle, Color) -> Vec<Vec<usize>>,
{
    for (first, second) in [(c1, c2), (c2, c1)] {
        for (x, y, c) in cross_edges(g, first, second) {
            let Ok((a, b)) = appropriately_label(g, first, second, x, y, c) else {
                continue;
            };
            for seq in build(&a, &b, c) {
                if let Some(cycle) = AltCycle::infer(g, seq) {
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn try_lemma2(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
) -> Option<(AltCycle, MergeKind)> {
    if let Some(c) = first_labelled(g, c1, c2, |a, b, _| {
        lemma2_case1(a, b).into_iter().collect()
    }) {
        return Some((c, MergeKind::Lemma2Case1));
    }
    first_labelled(g, c1, c2, |a, b, _| {
        lemma2_case2(a, b).into_iter().collect()
    })
    .map(|c| (c, MergeKind::Lemma2Case2))
}

/// Both colors from `x_1` into `I_b`, with `y_1` on the labelling color
/// and `y_3` on the other.
fn try_mixed_star(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<AltCycle> {
    first_labelled(g, c1, c2, |a, b, c| {
        if b.len() >= 4 && g.has_color(a.at(0), b.at(2), c.other()) {
            mixed_star(a, b).into_iter().collect()
        } else {
            Vec::new()
        }
    })
}

/// All of `x_1`'s edges into `b` have the labelling color `c`; look for a
/// chord of the other color inside `I_a` or of color `c` inside `P_a`.
fn try_chord_splice(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<AltCycle> {
    first_labelled(g, c1, c2, |a, b, c| {
        let x1 = a.at(0);
        if !b.vertices().iter().all(|&y| g.has_color(x1, y, c)) {
            return Vec::new();
        }
        let n = a.len() as isize;
        let mut out = Vec::new();
        for p in 1..=n {
            for q in (p + 2..=n).step_by(2) {
                let odd = p % 2 == 1;
                let chord = if odd { c.other() } else { c };
                if g.has_color(a.at(p - 1), a.at(q - 1), chord) {
                    out.extend(chord_splice(a, b, p, q, odd));
                    out.extend(chord_splice(a, b, p, q, !odd));
                }
            }
        }
        out
    })
}

fn union_violation(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<TwoPath> {
    let mut union: Vec<usize> = c1.vertices().iter().chain(c2.vertices()).copied().collect();
    union.sort_unstable();
    first_two_m_violation(&g.induced(&union)).map(|w| TwoPath {
        x1: union[w.x1],
        x2: union[w.x2],
        x3: union[w.x3],
        ..w
    })
}

fn exhaustive(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
) -> Result<MergeOutcome, EngineError> {
    if let Some(cycle) = oracle_merge(g, c1, c2) {
        return Ok(MergeOutcome::Merged {
            cycle,
            kind: MergeKind::Oracle,
        });
    }
    match union_violation(g, c1, c2) {
        Some(w) => Ok(MergeOutcome::Inapplicable(w)),
        None => Err(EngineError::Unresolved(
            c1.vertices().to_vec(),
            c2.vertices().to_vec(),
        )),
    }
}

/// Merges two disjoint alternating cycles or explains why they cannot be.
pub fn merge_pair(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
) -> Result<MergeOutcome, EngineError> {
    let cross = cross_edges(g, c1, c2);
    let Some(&(x, y, c)) = cross.first() else {
        return Ok(MergeOutcome::NotAdjacent);
    };
    if let Some(p) = find_good_pair(g, c1, c2) {
        let cycle = merge_good_pair(g, c1, c2, &p)?;
        return Ok(MergeOutcome::Merged {
            cycle,
            kind: MergeKind::GoodPair,
        });
    }

    let (a, b) = appropriately_label(g, c1, c2, x, y, c)?;
    let propagated = check_parallel_edges(g, &a, &b);
    if let ParallelEdges::Violation(w) = propagated {
        return Ok(MergeOutcome::Inapplicable(w));
    }
    let complete = c1
        .vertices()
        .iter()
        .all(|&u| c2.vertices().iter().all(|&v| g.adjacent(u, v)));
    if !complete || !matches!(propagated, ParallelEdges::Complete(_)) {
        if let Some((cycle, kind)) = try_lemma2(g, c1, c2) {
            return Ok(MergeOutcome::Merged { cycle, kind });
        }
        return exhaustive(g, c1, c2);
    }

    if let Some(cycle) = try_mixed_star(g, c1, c2) {
        return Ok(MergeOutcome::Merged {
            cycle,
            kind: MergeKind::Case1,
        });
    }
    if let Some(cycle) = try_chord_splice(g, c1, c2) {
        return Ok(MergeOutcome::Merged {
            cycle,
            kind: MergeKind::Case31,
        });
    }
    if let Some(color) = color_dominates(g, c1, c2) {
        return Ok(MergeOutcome::Dominates {
            direction: Direction::FirstOverSecond,
            color,
        });
    }
    if let Some(color) = color_dominates(g, c2, c1) {
        return Ok(MergeOutcome::Dominates {
            direction: Direction::SecondOverFirst,
            color,
        });
    }
    exhaustive(g, c1, c2)
}
