use std::collections::VecDeque;

use crate::cycle::{AltCycle, CycleFactor};
use crate::graph::{Color, ColoredMultigraph};

use super::EngineError;

fn only(g: &ColoredMultigraph, u: usize, v: usize, c: Color) -> bool {
    g.has_color(u, v, c) && !g.has_color(u, v, c.other())
}

/// `Some(c)` when `c1` c-dominates `c2`, using the I/P split of `c1` as
/// labelled:
///
/// * every vertex of `c1` is adjacent to every vertex of `c2`;
/// * `G[I]` is complete in color `c` only, `G[P]` complete in the other color only;
/// * edges `I`–`c2` have color `c` only, edges `P`–`c2` the other color only.
///
/// Rotating `c1` by an odd amount swaps I and P and flips the color.
pub fn color_dominates(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<Color> {
    let i_set = c1.i_set();
    let p_set = c1.p_set();
    Color::BOTH.into_iter().find(|&c| {
        let d = c.other();
        let inside = |set: &[usize], col| {
            set.iter()
                .enumerate()
                .all(|(k, &u)| set[k + 1..].iter().all(|&v| only(g, u, v, col)))
        };
        let across = |set: &[usize], col| {
            set.iter()
                .all(|&u| c2.vertices().iter().all(|&y| only(g, u, y, col)))
        };
        inside(&i_set, c) && inside(&p_set, d) && across(&i_set, c) && across(&p_set, d)
    })
}

/// Colored arcs `(i, j, c)`: cycle `i` c-dominates cycle `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DominationDigraph {
    pub nodes: usize,
    pub arcs: Vec<(usize, usize, Color)>,
}

impl DominationDigraph {
    pub fn new(nodes: usize, mut arcs: Vec<(usize, usize, Color)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        DominationDigraph { nodes, arcs }
    }

    /// Arcs from `color_dominates` over all ordered pairs, without checks.
    pub fn from_cycles(g: &ColoredMultigraph, cycles: &[AltCycle]) -> Self {
        let mut arcs = Vec::new();
        for (i, a) in cycles.iter().enumerate() {
            for (j, b) in cycles.iter().enumerate() {
                if i != j {
                    if let Some(c) = color_dominates(g, a, b) {
                        arcs.push((i, j, c));
                    }
                }
            }
        }
        Self::new(cycles.len(), arcs)
    }

    pub fn arc(&self, i: usize, j: usize) -> Option<Color> {
        self.arcs
            .iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map(|&(_, _, c)| c)
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arcs.iter().filter(|&&(a, _, _)| a == i).count()
    }

    /// Lexicographically first directed triangle `i -> j -> k -> i`.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for &(i, j, _) in &self.arcs {
            for &(j2, k, _) in &self.arcs {
                if j2 == j && k != i && self.arc(k, i).is_some() {
                    return Some([i, j, k]);
                }
            }
        }
        None
    }

    /// Topological order, or `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.nodes];
        for &(_, j, _) in &self.arcs {
            indegree[j] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.nodes).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(a, b, _) in &self.arcs {
                if a == v {
                    indegree[b] -= 1;
                    if indegree[b] == 0 {
                        queue.push_back(b);
                    }
                }
            }
        }
        (order.len() == self.nodes).then_some(order)
    }

    /// Node of out-degree `|component| - 1` inside `component`.
    pub fn source_in(&self, component: &[usize]) -> Option<usize> {
        component.iter().copied().find(|&i| {
            component
                .iter()
                .filter(|&&j| j != i)
                .all(|&j| self.arc(i, j).is_some())
        })
    }

    /// Checks the structure a non-mergeable factor must have: arc colors
    /// agree with `c[x_{1,i}, x_{1,j}]`, no symmetric arcs, all out-arcs of
    /// a node share a color, a tournament on every adjacency component,
    /// and no directed cycle.
    pub fn verify(&self, g: &ColoredMultigraph, cycles: &[AltCycle]) -> Result<(), EngineError> {
        let violation = |reason: &str, cycles: Vec<usize>| EngineError::StructureViolation {
            reason: reason.to_string(),
            cycles,
        };
        for &(i, j, c) in &self.arcs {
            if !only(g, cycles[i].vertices()[0], cycles[j].vertices()[0], c) {
                return Err(violation(
                    "arc color disagrees with c[x_1i, x_1j]",
                    vec![i, j],
                ));
            }
            if self.arc(j, i).is_some() {
                return Err(violation("symmetric arc", vec![i, j]));
            }
            for &(i2, k, c2) in &self.arcs {
                if i2 == i && c2 != c {
                    return Err(violation(
                        "out-arcs of one cycle differ in color",
                        vec![i, j, k],
                    ));
                }
            }
        }
        for component in cycle_components(g, cycles) {
            for (a, &i) in component.iter().enumerate() {
                for &j in &component[a + 1..] {
                    if self.arc(i, j).is_none() && self.arc(j, i).is_none() {
                        return Err(violation("not a tournament", vec![i, j]));
                    }
                }
            }
        }
        if self.topological_order().is_none() {
            let witness = self.find_triangle().map(Vec::from).unwrap_or_default();
            return Err(violation("directed cycle", witness));
        }
        Ok(())
    }
}

/// Connected components of the cycle-adjacency graph (cycles joined by at
/// least one edge), each listed in ascending index order.
pub fn cycle_components(g: &ColoredMultigraph, cycles: &[AltCycle]) -> Vec<Vec<usize>> {
    let l = cycles.len();
    let adjacent = |i: usize, j: usize| {
        cycles[i]
            .vertices()
            .iter()
            .any(|&x| cycles[j].vertices().iter().any(|&y| g.adjacent(x, y)))
    };
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for s in 0..l {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if !seen[j] && adjacent(i, j) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Domination digraph of `factor`, verified. A structure violation means
/// the input is not 2-M-closed or some merge was missed.
pub fn build_domination_digraph(
    g: &ColoredMultigraph,
    factor: &CycleFactor,
) -> Result<DominationDigraph, EngineError> {
    let d = DominationDigraph::from_cycles(g, &factor.cycles);
    d.verify(g, &factor.cycles)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    #[test]
    fn triangle_and_order() {
        let d = DominationDigraph::new(3, vec![(0, 1, Blue), (1, 2, Blue), (2, 0, Red)]);
        assert_eq!(d.find_triangle(), Some([0, 1, 2]));
        assert!(d.topological_order().is_none());

        let acyclic = DominationDigraph::new(3, vec![(0, 1, Blue), (0, 2, Blue), (1, 2, Red)]);
        assert_eq!(acyclic.find_triangle(), None);
        assert_eq!(acyclic.topological_order(), Some(vec![0, 1, 2]));
        assert_eq!(acyclic.source_in(&[0, 1, 2]), Some(0));
        assert_eq!(acyclic.out_degree(0), 2);
    }

    #[test]
    fn no_cross_edges_no_domination() {
        let g = ColoredMultigraph::from_edges(
            4,
            [(0, 1, Blue), (0, 1, Red), (2, 3, Blue), (2, 3, Red)],
        )
        .unwrap();
        let c1 = AltCycle::new(vec![0, 1], vec![Blue, Red]).unwrap();
        let c2 = AltCycle::new(vec![2, 3], vec![Blue, Red]).unwrap();
        assert_eq!(color_dominates(&g, &c1, &c2), None);
        assert_eq!(cycle_components(&g, &[c1, c2]), vec![vec![0], vec![1]]);
    }
}
