//! Exhaustive searches used as ground truth. Exact, exponential, meant for
//! graphs of about a dozen vertices.

use crate::cycle::{AltCycle, CycleFactor};
use crate::graph::{Color, ColoredMultigraph};
use crate::predicates::AltPath;

/// An alternating Hamiltonian cycle by backtracking from vertex 0.
///
/// Vertex 0 has one blue and one red cycle edge, so the search fixes the
/// blue one as the first edge.
pub fn oracle_hamiltonian(g: &ColoredMultigraph) -> Option<AltCycle> {
    let n = g.vertex_count();
    if n < 2 || n % 2 == 1 {
        return None;
    }
    let has_both = |v| {
        Color::BOTH
            .into_iter()
            .all(|c| g.neighbors(v, c).next().is_some())
    };
    if !(0..n).all(has_both) {
        return None;
    }
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut path = vec![0];
    if hamiltonian_extend(g, &mut visited, &mut path, Color::Blue) {
        let colors = (0..n)
            .map(|k| if k % 2 == 0 { Color::Blue } else { Color::Red })
            .collect();
        Some(AltCycle::from_parts_unchecked(path, colors))
    } else {
        None
    }
}

fn hamiltonian_extend(
    g: &ColoredMultigraph,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    need: Color,
) -> bool {
    let n = visited.len();
    let end = *path.last().expect("path starts at vertex 0");
    if path.len() == n {
        return need == Color::Red && g.has_color(end, path[0], Color::Red);
    }
    let candidates: Vec<usize> = g.neighbors(end, need).filter(|&u| !visited[u]).collect();
    for u in candidates {
        visited[u] = true;
        path.push(u);
        if hamiltonian_extend(g, visited, path, need.other()) {
            return true;
        }
        path.pop();
        visited[u] = false;
    }
    false
}

/// Alternating cycle on exactly the vertex set `vertices`.
pub fn oracle_cycle_on(g: &ColoredMultigraph, vertices: &[usize]) -> Option<AltCycle> {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let sub = g.induced(&sorted);
    let cycle = oracle_hamiltonian(&sub)?;
    let mapped = cycle.vertices().iter().map(|&v| sorted[v]).collect();
    Some(AltCycle::from_parts_unchecked(
        mapped,
        cycle.colors().to_vec(),
    ))
}

/// Alternating cycle with vertex set `V(C1) ∪ V(C2)`.
pub fn oracle_merge(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<AltCycle> {
    let union: Vec<usize> = c1.vertices().iter().chain(c2.vertices()).copied().collect();
    oracle_cycle_on(g, &union)
}

/// Alternating cycle factor by enumerating cycles through the smallest
/// uncovered vertex. Independent of the matching reduction.
pub fn oracle_factor(g: &ColoredMultigraph) -> Option<CycleFactor> {
    oracle_factor_with(g, 2)
}

pub fn oracle_factor_with(g: &ColoredMultigraph, min_cycle_len: usize) -> Option<CycleFactor> {
    let mut covered = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    factor_search(g, min_cycle_len.max(2), &mut covered, &mut cycles)
        .then(|| CycleFactor::new(cycles))
}

fn factor_search(
    g: &ColoredMultigraph,
    min_len: usize,
    covered: &mut Vec<bool>,
    cycles: &mut Vec<AltCycle>,
) -> bool {
    let Some(start) = covered.iter().position(|&c| !c) else {
        return true;
    };
    covered[start] = true;
    let mut path = vec![start];
    let found = cycle_through(g, min_len, covered, &mut path, Color::Blue, cycles);
    if !found {
        covered[start] = false;
    }
    found
}

/// Extends `path` (starting blue at `path[0]`) and, at every closable
/// length, recurses on the remaining vertices.
fn cycle_through(
    g: &ColoredMultigraph,
    min_len: usize,
    covered: &mut Vec<bool>,
    path: &mut Vec<usize>,
    need: Color,
    cycles: &mut Vec<AltCycle>,
) -> bool {
    let end = *path.last().expect("non-empty path");
    let k = path.len();
    if k >= min_len
        && k.is_multiple_of(2)
        && need == Color::Red
        && g.has_color(end, path[0], Color::Red)
    {
        let colors = (0..k)
            .map(|i| if i % 2 == 0 { Color::Blue } else { Color::Red })
            .collect();
        cycles.push(AltCycle::from_parts_unchecked(path.clone(), colors));
        if factor_search(g, min_len, covered, cycles) {
            return true;
        }
        cycles.pop();
    }
    let candidates: Vec<usize> = g.neighbors(end, need).filter(|&u| !covered[u]).collect();
    for u in candidates {
        covered[u] = true;
        path.push(u);
        if cycle_through(g, min_len, covered, path, need.other(), cycles) {
            return true;
        }
        path.pop();
        covered[u] = false;
    }
    false
}

/// For every `y`, whether some alternating path from `x` starting with
/// `first` ends at `y` with a blue (`[y][0]`) or red (`[y][1]`) edge.
/// Enumerates every simple alternating path out of `x`.
pub fn alternating_path_table(g: &ColoredMultigraph, x: usize, first: Color) -> Vec<[bool; 2]> {
    let n = g.vertex_count();
    let mut table = vec![[false; 2]; n];
    if x >= n {
        return table;
    }
    let mut visited = vec![false; n];
    visited[x] = true;
    fn walk(
        g: &ColoredMultigraph,
        at: usize,
        c: Color,
        visited: &mut [bool],
        table: &mut [[bool; 2]],
    ) {
        let next: Vec<usize> = g.neighbors(at, c).filter(|&u| !visited[u]).collect();
        for u in next {
            table[u][(c == Color::Red) as usize] = true;
            visited[u] = true;
            walk(g, u, c.other(), visited, table);
            visited[u] = false;
        }
    }
    walk(g, x, first, &mut visited, &mut table);
    table
}

/// First alternating `(x, y)`-path in lexicographic order with the given
/// end colors, by plain enumeration of simple paths.
pub fn oracle_alt_path(
    g: &ColoredMultigraph,
    x: usize,
    y: usize,
    first: Color,
    last: Color,
) -> Option<AltPath> {
    let n = g.vertex_count();
    if x == y || x >= n || y >= n {
        return None;
    }
    fn walk(
        g: &ColoredMultigraph,
        y: usize,
        last: Color,
        c: Color,
        visited: &mut [bool],
        path: &mut AltPath,
    ) -> bool {
        let at = *path.vertices.last().expect("non-empty path");
        if at == y {
            return path.colors.last() == Some(&last);
        }
        let next: Vec<usize> = g.neighbors(at, c).filter(|&u| !visited[u]).collect();
        for u in next {
            visited[u] = true;
            path.vertices.push(u);
            path.colors.push(c);
            if walk(g, y, last, c.other(), visited, path) {
                return true;
            }
            path.vertices.pop();
            path.colors.pop();
            visited[u] = false;
        }
        false
    }
    let mut visited = vec![false; n];
    visited[x] = true;
    let mut path = AltPath {
        vertices: vec![x],
        colors: Vec::new(),
    };
    walk(g, y, last, first, &mut visited, &mut path).then_some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{validate_cycle, validate_factor};
    use Color::*;

    fn square() -> ColoredMultigraph {
        ColoredMultigraph::from_edges(4, [(0, 1, Blue), (1, 2, Red), (2, 3, Blue), (3, 0, Red)])
            .unwrap()
    }

    #[test]
    fn hamiltonian_square() {
        let g = square();
        let c = oracle_hamiltonian(&g).unwrap();
        assert_eq!(c.to_string(), "cycle 0 1 2 3 : B R B R");
        assert!(validate_cycle(&g, &c));
    }

    #[test]
    fn hamiltonian_absent() {
        let mut k4 = ColoredMultigraph::empty(4);
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v, Blue).unwrap();
            }
        }
        assert!(oracle_hamiltonian(&k4).is_none());
        assert!(oracle_hamiltonian(&ColoredMultigraph::empty(1)).is_none());
        let pair = ColoredMultigraph::from_edges(2, [(0, 1, Blue), (0, 1, Red)]).unwrap();
        assert_eq!(oracle_hamiltonian(&pair).unwrap().len(), 2);
    }

    #[test]
    fn factor_square() {
        let g = square();
        let f = oracle_factor(&g).unwrap();
        assert!(validate_factor(&g, &f));
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn alt_path_single_edge() {
        let g = ColoredMultigraph::from_edges(2, [(0, 1, Blue)]).unwrap();
        assert!(oracle_alt_path(&g, 0, 1, Red, Red).is_none());
        assert_eq!(
            oracle_alt_path(&g, 0, 1, Blue, Blue).unwrap().vertices,
            vec![0, 1]
        );
        assert_eq!(
            alternating_path_table(&g, 0, Blue),
            vec![[false, false], [true, false]]
        );
    }

    #[test]
    fn cycle_on_subset() {
        let mut g = ColoredMultigraph::empty(6);
        for (u, v, c) in square().edges() {
            g.add_edge(u + 2, v + 2, c).unwrap();
        }
        let c = oracle_cycle_on(&g, &[5, 2, 3, 4]).unwrap();
        assert!(validate_cycle(&g, &c));
        assert_eq!(c.vertices(), &[2, 3, 4, 5]);
        assert!(oracle_cycle_on(&g, &[0, 1, 2, 3]).is_none());
    }
}
