use std::fmt;

use crate::cycle::AltCycle;
use crate::factor::find_alternating_cycle_factor;
use crate::graph::{Color, ColoredMultigraph};
use crate::predicates::{exists_alternating_path, first_two_m_violation, PairWitness, TwoPath};

use super::domination::{cycle_components, DominationDigraph};
use super::triangle::merge_domination_triangle;
use super::{merge_pair, Direction, EngineError, MergeKind, MergeOutcome};

/// What blocks the last merges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstacle {
    /// Cycle `source` (trace id) `color`-dominates every other cycle of
    /// its component.
    Dominating { source: usize, color: Color },
    /// The graph itself is disconnected.
    Disconnected,
}

/// No alternating path from `vertex` to `target` starts with `missing`,
/// whatever its last color. That pair then has neither a same-colored nor
/// a mixed-colored pair of end colors available, so `g` is not
/// color-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub obstacle: Obstacle,
    pub vertex: usize,
    pub target: usize,
    pub missing: Color,
}

impl Certificate {
    /// Rechecks the certificate with the path predicates alone.
    pub fn check(&self, g: &ColoredMultigraph) -> bool {
        let n = g.vertex_count();
        self.vertex < n
            && self.target < n
            && self.vertex != self.target
            && Color::BOTH.into_iter().all(|last| {
                exists_alternating_path(g, self.vertex, self.target, self.missing, last).is_none()
            })
    }

    /// The failing pair in color-connectivity terms.
    pub fn pair_witness(&self) -> PairWitness {
        let m = self.missing;
        let (x, y) = (self.vertex.min(self.target), self.vertex.max(self.target));
        // Reversing a path swaps its end colors.
        let ends = |last: Color| {
            if x == self.vertex {
                (m, last)
            } else {
                (last, m)
            }
        };
        PairWitness {
            x,
            y,
            missing: [ends(m), ends(m.other())],
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("certificate ")?;
        match self.obstacle {
            Obstacle::Dominating { source, color } => write!(f, "source {source} color {color}")?,
            Obstacle::Disconnected => f.write_str("disconnected")?,
        }
        write!(
            f,
            " vertex {} target {} missing {}",
            self.vertex, self.target, self.missing
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    HamiltonianCycle(AltCycle),
    NoFactor,
    NotColorConnected(Certificate),
    NotTwoMClosed(TwoPath),
}

impl SolveResult {
    pub fn cycle(&self) -> Option<&AltCycle> {
        match self {
            SolveResult::HamiltonianCycle(c) => Some(c),
            _ => None,
        }
    }
}

/// One step of the solver, printed one per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Merge {
        kind: MergeKind,
        from: Vec<usize>,
        into: usize,
    },
    Dominate {
        from: usize,
        to: usize,
        color: Color,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Merge { kind, from, into } => {
                write!(f, "merge {kind}")?;
                for id in from {
                    write!(f, " {id}")?;
                }
                write!(f, " -> {into}")
            }
            TraceEvent::Dominate { from, to, color } => write!(f, "dominate {from} {to} {color}"),
        }
    }
}

/// Merges the first mergeable pair in ascending position order. Records
/// the dominations met on the way in `arcs` (position indices).
fn merge_some_pair(
    g: &ColoredMultigraph,
    cycles: &[AltCycle],
    arcs: &mut Vec<(usize, usize, Color)>,
) -> Result<Option<(usize, usize, AltCycle, MergeKind)>, EngineError> {
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            match merge_pair(g, &cycles[i], &cycles[j])? {
                MergeOutcome::Merged { cycle, kind } => return Ok(Some((i, j, cycle, kind))),
                MergeOutcome::Dominates { direction, color } => arcs.push(match direction {
                    Direction::FirstOverSecond => (i, j, color),
                    Direction::SecondOverFirst => (j, i, color),
                }),
                MergeOutcome::NotAdjacent => {}
                MergeOutcome::Inapplicable(w) => {
                    return Err(EngineError::StructureViolation {
                        reason: format!("closure violation {w} inside a closed graph"),
                        cycles: vec![i, j],
                    })
                }
            }
        }
    }
    Ok(None)
}

/// Builds an alternating Hamiltonian cycle of a 2-M-closed graph, or
/// explains why none exists. See [`solve_with_trace`].
pub fn solve_hamiltonian(g: &ColoredMultigraph) -> Result<SolveResult, EngineError> {
    solve_with_trace(g).map(|(r, _)| r)
}

/// Finds a cycle factor, then merges pairs of cycles and domination
/// triangles until one cycle is left. When nothing merges, the
/// domination digraph is checked to be an acyclic tournament per
/// component and its source yields the certificate.
///
/// Errors mean the merge machinery contradicted itself; they are never
/// expected on valid input.
pub fn solve_with_trace(
    g: &ColoredMultigraph,
) -> Result<(SolveResult, Vec<TraceEvent>), EngineError> {
    let mut trace = Vec::new();
    if let Some(w) = first_two_m_violation(g) {
        return Ok((SolveResult::NotTwoMClosed(w), trace));
    }
    let n = g.vertex_count();
    let factor = match find_alternating_cycle_factor(g) {
        Some(f) if n >= 2 => f,
        _ => return Ok((SolveResult::NoFactor, trace)),
    };

    let mut cycles = factor.cycles;
    let mut ids: Vec<usize> = (0..cycles.len()).collect();
    let mut next_id = cycles.len();
    let mut replace = |cycles: &mut Vec<AltCycle>,
                       ids: &mut Vec<usize>,
                       positions: &[usize],
                       merged: AltCycle| {
        let from: Vec<usize> = positions.iter().map(|&p| ids[p]).collect();
        let mut sorted = positions.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        for p in sorted {
            cycles.remove(p);
            ids.remove(p);
        }
        let into = next_id;
        next_id += 1;
        cycles.push(merged);
        ids.push(into);
        (from, into)
    };

    while cycles.len() > 1 {
        let mut arcs = Vec::new();
        if let Some((i, j, cycle, kind)) = merge_some_pair(g, &cycles, &mut arcs)? {
            let (from, into) = replace(&mut cycles, &mut ids, &[i, j], cycle);
            trace.push(TraceEvent::Merge { kind, from, into });
            continue;
        }
        let digraph = DominationDigraph::new(cycles.len(), arcs);
        trace.extend(
            digraph
                .arcs
                .iter()
                .map(|&(i, j, color)| TraceEvent::Dominate {
                    from: ids[i],
                    to: ids[j],
                    color,
                }),
        );
        if let Some(t) = digraph.find_triangle() {
            let colors = [
                arc_color(&digraph, t[0], t[1]),
                arc_color(&digraph, t[1], t[2]),
                arc_color(&digraph, t[2], t[0]),
            ];
            let (cycle, kind) = merge_domination_triangle(
                g,
                [&cycles[t[0]], &cycles[t[1]], &cycles[t[2]]],
                colors,
            )?;
            let (from, into) = replace(&mut cycles, &mut ids, &t, cycle);
            trace.push(TraceEvent::Merge { kind, from, into });
            continue;
        }
        digraph.verify(g, &cycles).map_err(|e| relabel(e, &ids))?;
        return Ok((
            SolveResult::NotColorConnected(certificate(g, &cycles, &ids, &digraph)?),
            trace,
        ));
    }
    let cycle = cycles
        .pop()
        .expect("a factor of a nonempty graph has a cycle");
    Ok((SolveResult::HamiltonianCycle(cycle), trace))
}

fn arc_color(d: &DominationDigraph, i: usize, j: usize) -> Color {
    d.arc(i, j).expect("triangle arcs are present")
}

fn relabel(e: EngineError, ids: &[usize]) -> EngineError {
    match e {
        EngineError::StructureViolation { reason, cycles } => EngineError::StructureViolation {
            reason,
            cycles: cycles.into_iter().map(|p| ids[p]).collect(),
        },
        other => other,
    }
}

fn certificate(
    g: &ColoredMultigraph,
    cycles: &[AltCycle],
    ids: &[usize],
    digraph: &DominationDigraph,
) -> Result<Certificate, EngineError> {
    let components = cycle_components(g, cycles);
    if components.len() > 1 {
        let vertex = cycles[components[0][0]].vertices()[0];
        let target = cycles[components[1][0]].vertices()[0];
        return Ok(Certificate {
            obstacle: Obstacle::Disconnected,
            vertex,
            target,
            missing: Color::Blue,
        });
    }
    let all: Vec<usize> = (0..cycles.len()).collect();
    let source = digraph
        .source_in(&all)
        .ok_or_else(|| EngineError::StructureViolation {
            reason: "no source in the domination digraph".into(),
            cycles: ids.to_vec(),
        })?;
    let target_pos = usize::from(source == 0);
    let color = arc_color(digraph, source, target_pos);
    Ok(Certificate {
        obstacle: Obstacle::Dominating {
            source: ids[source],
            color,
        },
        vertex: cycles[source].vertices()[0],
        target: cycles[target_pos].vertices()[0],
        missing: color.other(),
    })
}
