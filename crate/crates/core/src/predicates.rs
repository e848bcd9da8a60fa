//! Structural predicates on 2-edge-colored multigraphs, each with a
//! checkable witness when it fails.

use std::fmt;

use crate::graph::{Color, ColoredMultigraph};

/// A 2-path `(x1, x2, x3)` with edge colors `c1 = c[x1,x2]`, `c2 = c[x2,x3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoPath {
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub c1: Color,
    pub c2: Color,
}

impl TwoPath {
    pub fn is_monochromatic(&self) -> bool {
        self.c1 == self.c2
    }

    /// The path exists in `g` with its stated colors and `x1`, `x3` are not adjacent.
    pub fn is_open_in(&self, g: &ColoredMultigraph) -> bool {
        self.x1 != self.x2
            && self.x2 != self.x3
            && self.x1 != self.x3
            && g.has_color(self.x1, self.x2, self.c1)
            && g.has_color(self.x2, self.x3, self.c2)
            && !g.adjacent(self.x1, self.x3)
    }
}

impl fmt::Display for TwoPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "2path {} {} {} {} {}",
            self.x1, self.x2, self.x3, self.c1, self.c2
        )
    }
}

/// A simple alternating path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltPath {
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
}

impl AltPath {
    pub fn first_color(&self) -> Option<Color> {
        self.colors.first().copied()
    }

    pub fn last_color(&self) -> Option<Color> {
        self.colors.last().copied()
    }

    /// Distinct vertices, joined by edges of the stated colors, colors alternating.
    pub fn is_valid_in(&self, g: &ColoredMultigraph) -> bool {
        let k = self.vertices.len();
        if k < 2 || self.colors.len() != k - 1 {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.vertices
            .windows(2)
            .zip(&self.colors)
            .all(|(w, &c)| g.has_color(w[0], w[1], c))
            && self.colors.windows(2).all(|w| w[0] != w[1])
    }
}

fn two_paths(g: &ColoredMultigraph, monochromatic: bool) -> Vec<TwoPath> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            if x2 == x1 || !g.adjacent(x1, x2) {
                continue;
            }
            for x3 in x1 + 1..n {
                if x3 == x2 || g.adjacent(x1, x3) {
                    continue;
                }
                let found = Color::BOTH.into_iter().find_map(|c1| {
                    let c2 = if monochromatic { c1 } else { c1.other() };
                    (g.has_color(x1, x2, c1) && g.has_color(x2, x3, c2)).then_some(TwoPath {
                        x1,
                        x2,
                        x3,
                        c1,
                        c2,
                    })
                });
                out.extend(found);
            }
        }
    }
    out
}

/// Every monochromatic 2-path whose endpoints are non-adjacent, one per
/// vertex triple with `x1 < x3`, in lexicographic order.
pub fn two_m_violations(g: &ColoredMultigraph) -> Vec<TwoPath> {
    two_paths(g, true)
}

/// Same as [`two_m_violations`] for non-monochromatic 2-paths.
pub fn two_nm_violations(g: &ColoredMultigraph) -> Vec<TwoPath> {
    two_paths(g, false)
}

pub fn is_2m_closed(g: &ColoredMultigraph) -> bool {
    first_two_m_violation(g).is_none()
}

pub fn is_2nm_closed(g: &ColoredMultigraph) -> bool {
    two_nm_violations(g).is_empty()
}

/// Early-exit variant of [`two_m_violations`].
pub fn first_two_m_violation(g: &ColoredMultigraph) -> Option<TwoPath> {
    let n = g.vertex_count();
    for x1 in 0..n {
        for x2 in 0..n {
            if x2 == x1 || !g.adjacent(x1, x2) {
                continue;
            }
            for x3 in x1 + 1..n {
                if x3 == x2 || g.adjacent(x1, x3) {
                    continue;
                }
                for c in Color::BOTH {
                    if g.has_color(x1, x2, c) && g.has_color(x2, x3, c) {
                        return Some(TwoPath {
                            x1,
                            x2,
                            x3,
                            c1: c,
                            c2: c,
                        });
                    }
                }
            }
        }
    }
    None
}

/// An alternating 3-path `(x1, x2, x3, x4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreePath {
    pub vertices: [usize; 4],
    pub colors: [Color; 3],
}

impl fmt::Display for ThreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.vertices;
        let [p, q, r] = self.colors;
        write!(f, "3path {a} {b} {c} {d} {p} {q} {r}")
    }
}

/// Whether some alternating 4-cycle `(x1, y, w, x4, x1)` exists.
pub fn closes_alternating(g: &ColoredMultigraph, x1: usize, x4: usize) -> bool {
    let n = g.vertex_count();
    g.colors_between(x1, x4).any(|b| {
        let a = b.other();
        g.neighbors(x1, a).filter(|&y| y != x4).any(|y| {
            (0..n).any(|w| w != x1 && w != y && g.has_color(y, w, b) && g.has_color(w, x4, a))
        })
    })
}

/// First alternating 3-path (lexicographic) that cannot be closed by an
/// alternating 4-cycle, or `None` if the graph is closed-alternating.
pub fn closed_alternating_violation(g: &ColoredMultigraph) -> Option<ThreePath> {
    let n = g.vertex_count();
    let mut closable: Vec<Option<bool>> = vec![None; n * n];
    for x1 in 0..n {
        for x2 in 0..n {
            for c1 in g.colors_between(x1, x2) {
                let c2 = c1.other();
                for x3 in g.neighbors(x2, c2).filter(|&x| x != x1) {
                    for x4 in g.neighbors(x3, c1).filter(|&x| x != x1 && x != x2) {
                        let ok = *closable[x1 * n + x4]
                            .get_or_insert_with(|| closes_alternating(g, x1, x4));
                        if !ok {
                            return Some(ThreePath {
                                vertices: [x1, x2, x3, x4],
                                colors: [c1, c2, c1],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_closed_alternating(g: &ColoredMultigraph) -> bool {
    closed_alternating_violation(g).is_none()
}

struct PathSearch<'g> {
    g: &'g ColoredMultigraph,
    target: usize,
    last: Color,
    visited: Vec<bool>,
    vertices: Vec<usize>,
    colors: Vec<Color>,
}

impl PathSearch<'_> {
    /// Can an alternating walk through unvisited vertices reach `target`,
    /// arriving with `last`, starting from `from` which was entered via `came`?
    /// Necessary for a simple path to exist, so failing it prunes exactly.
    fn walk_reaches(&self, from: usize, came: Color) -> bool {
        let n = self.g.vertex_count();
        let idx = |v: usize, c: Color| 2 * v + (c == Color::Red) as usize;
        let mut seen = vec![false; 2 * n];
        let mut stack = vec![(from, came)];
        seen[idx(from, came)] = true;
        while let Some((v, c)) = stack.pop() {
            let next = c.other();
            for u in self.g.neighbors(v, next) {
                if u == self.target {
                    if next == self.last {
                        return true;
                    }
                    continue;
                }
                if self.visited[u] || seen[idx(u, next)] {
                    continue;
                }
                seen[idx(u, next)] = true;
                stack.push((u, next));
            }
        }
        false
    }

    fn extend(&mut self, at: usize, color: Color) -> bool {
        let neighbors: Vec<usize> = self.g.neighbors(at, color).collect();
        for u in neighbors {
            if u == self.target {
                if color == self.last {
                    self.vertices.push(u);
                    self.colors.push(color);
                    return true;
                }
                continue;
            }
            if self.visited[u] || !self.walk_reaches(u, color) {
                continue;
            }
            self.visited[u] = true;
            self.vertices.push(u);
            self.colors.push(color);
            if self.extend(u, color.other()) {
                return true;
            }
            self.visited[u] = false;
            self.vertices.pop();
            self.colors.pop();
        }
        false
    }
}

/// Some simple alternating `(x, y)`-path whose first edge is `first` and
/// last edge is `last`. Exact depth-first search; exponential in the worst
/// case, pruned by alternating-walk reachability.
pub fn exists_alternating_path(
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
    let mut search = PathSearch {
        g,
        target: y,
        last,
        visited: vec![false; n],
        vertices: vec![x],
        colors: Vec::new(),
    };
    search.visited[x] = true;
    search.extend(x, first).then_some(AltPath {
        vertices: search.vertices,
        colors: search.colors,
    })
}

/// Why a pair `(x, y)` fails color-connectivity: no path realizes
/// `missing[0]` (one of BB/RR) and none realizes `missing[1]` (one of BR/RB),
/// each given as `(first, last)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub missing: [(Color, Color); 2],
}

impl fmt::Display for PairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(a, b), (c, d)] = self.missing;
        write!(f, "pair {} {} missing {a}{b} {c}{d}", self.x, self.y)
    }
}

/// Color-connectivity of a single pair. Paths need not be disjoint.
pub fn pair_witness(g: &ColoredMultigraph, x: usize, y: usize) -> Option<PairWitness> {
    use Color::{Blue, Red};
    let has = |f, l| exists_alternating_path(g, x, y, f, l).is_some();
    let same = [(Blue, Blue), (Red, Red)]
        .into_iter()
        .find(|&(f, l)| !has(f, l));
    let same = same?;
    let cross = [(Blue, Red), (Red, Blue)]
        .into_iter()
        .find(|&(f, l)| !has(f, l));
    cross.map(|cross| PairWitness {
        x,
        y,
        missing: [same, cross],
    })
}

/// First pair `x < y` that is not color-connected. The condition is
/// symmetric under reversing paths, so ordered pairs add nothing.
pub fn color_connectivity_violation(g: &ColoredMultigraph) -> Option<PairWitness> {
    let n = g.vertex_count();
    (0..n).find_map(|x| (x + 1..n).find_map(|y| pair_witness(g, x, y)))
}

pub fn is_color_connected(g: &ColoredMultigraph) -> bool {
    color_connectivity_violation(g).is_none()
}
