//! Alternating cycle factors via perfect matching.
//!
//! Each vertex `v` is split into `v_B` and `v_R`; blue edges of `G` join
//! blue copies and red edges join red copies. A perfect matching of this
//! gadget gives every vertex exactly one blue and one red partner, which is
//! precisely a spanning alternating 2-regular subgraph.

use crate::cycle::{AltCycle, CycleFactor};
use crate::graph::{Color, ColoredMultigraph};
use crate::matching::{maximum_matching, Matching, PlainGraph};
use crate::oracle;

/// The split graph on `2n` vertices: `2v` is `v_B`, `2v + 1` is `v_R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub plain: PlainGraph,
}

impl GadgetGraph {
    pub fn build(g: &ColoredMultigraph) -> Self {
        let mut plain = PlainGraph::new(2 * g.vertex_count());
        for (u, v, c) in g.edges() {
            plain.add_edge(Self::copy(u, c), Self::copy(v, c));
        }
        GadgetGraph { plain }
    }

    pub fn copy(v: usize, c: Color) -> usize {
        2 * v + (c == Color::Red) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorOptions {
    /// Shortest cycle admitted. `2` allows blue/red parallel pairs as
    /// 2-cycles; `4` restricts to cycles of a simple graph.
    pub min_cycle_len: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { min_cycle_len: 2 }
    }
}

/// Turns a perfect gadget matching into cycles, starting each cycle at the
/// smallest unvisited vertex and leaving along its blue partner.
fn decode(n: usize, matching: &Matching) -> CycleFactor {
    let partner = |v: usize, c: Color| {
        matching
            .mate(GadgetGraph::copy(v, c))
            .expect("perfect matching")
            / 2
    };
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vertices = Vec::new();
        let mut colors = Vec::new();
        let mut v = start;
        let mut c = Color::Blue;
        loop {
            seen[v] = true;
            vertices.push(v);
            colors.push(c);
            v = partner(v, c);
            c = c.other();
            if v == start {
                break;
            }
        }
        cycles.push(AltCycle::from_parts_unchecked(vertices, colors));
    }
    CycleFactor::new(cycles)
}

/// An alternating cycle factor of `g`, 2-cycles allowed.
pub fn find_alternating_cycle_factor(g: &ColoredMultigraph) -> Option<CycleFactor> {
    find_alternating_cycle_factor_with(g, FactorOptions::default())
}

/// As [`find_alternating_cycle_factor`], honoring `opts.min_cycle_len`.
///
/// The matching reduction cannot forbid 2-cycles, so when the matched
/// factor contains one and longer cycles are required this falls back to
/// the exhaustive search in [`oracle::oracle_factor_with`].
pub fn find_alternating_cycle_factor_with(
    g: &ColoredMultigraph,
    opts: FactorOptions,
) -> Option<CycleFactor> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(CycleFactor::default());
    }
    let gadget = GadgetGraph::build(g);
    let matching = maximum_matching(&gadget.plain);
    if !matching.is_perfect() {
        return None;
    }
    let factor = decode(n, &matching);
    if factor.cycles.iter().all(|c| c.len() >= opts.min_cycle_len) {
        Some(factor)
    } else {
        oracle::oracle_factor_with(g, opts.min_cycle_len)
    }
}
