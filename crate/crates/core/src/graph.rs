//! Loopless 2-edge-colored multigraphs over dense integer vertices.
//!
//! Every unordered pair of distinct vertices carries at most one blue and at
//! most one red edge. Same-colored parallel edges collapse to one logical
//! edge; a blue and a red edge on the same pair are both kept.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Edge color. Blue sorts before Red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Blue, Color::Red];

    pub fn other(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
        }
    }

    fn bit(self) -> u8 {
        match self {
            Color::Blue => 0b01,
            Color::Red => 0b10,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" | "blue" => Ok(Color::Blue),
            "R" | "r" | "red" => Ok(Color::Red),
            other => Err(format!("unknown color `{other}` (expected B or R)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateHeader,
    Malformed(String),
    Graph(GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {}", describe(.kind))]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::MissingHeader => "expected `n <count>` before any edge".to_string(),
        ParseErrorKind::DuplicateHeader => "duplicate `n` record".to_string(),
        ParseErrorKind::Malformed(msg) => msg.clone(),
        ParseErrorKind::Graph(err) => err.to_string(),
    }
}

/// A loopless 2-edge-colored multigraph on vertices `0..n`.
///
/// Storage is a symmetric `n x n` table of color bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredMultigraph {
    n: usize,
    cells: Vec<u8>,
}

impl ColoredMultigraph {
    pub fn empty(n: usize) -> Self {
        ColoredMultigraph {
            n,
            cells: vec![0; n * n],
        }
    }

    /// Builds a graph from `(u, v, color)` triples.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut g = Self::empty(n);
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of logical edges, counting a two-colored pair twice.
    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Inserts the colored edge `{u, v}`. Re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize, c: Color) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.cells[u * self.n + v] |= c.bit();
        self.cells[v * self.n + u] |= c.bit();
        Ok(())
    }

    /// Consuming variant of [`add_edge`](Self::add_edge) for builder chains.
    pub fn with_edge(mut self, u: usize, v: usize, c: Color) -> Result<Self, GraphError> {
        self.add_edge(u, v, c)?;
        Ok(self)
    }

    #[inline]
    fn cell(&self, u: usize, v: usize) -> u8 {
        if u >= self.n || v >= self.n {
            0
        } else {
            self.cells[u * self.n + v]
        }
    }

    /// Infallible presence test; out-of-range vertices simply have no edges.
    #[inline]
    pub fn has_color(&self, u: usize, v: usize, c: Color) -> bool {
        self.cell(u, v) & c.bit() != 0
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.cell(u, v) != 0
    }

    pub fn has_edge_any(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacent(u, v))
    }

    pub fn has_edge_color(&self, u: usize, v: usize, c: Color) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.has_color(u, v, c))
    }

    /// Colors present on the pair `{u, v}`, Blue first.
    pub fn colors_between(&self, u: usize, v: usize) -> impl Iterator<Item = Color> + '_ {
        let cell = self.cell(u, v);
        Color::BOTH.into_iter().filter(move |c| cell & c.bit() != 0)
    }

    /// Neighbors of `v` along edges of color `c`, in ascending order.
    pub fn neighbors(&self, v: usize, c: Color) -> impl Iterator<Item = usize> + '_ {
        let row = if v < self.n {
            &self.cells[v * self.n..(v + 1) * self.n]
        } else {
            &[][..]
        };
        row.iter()
            .enumerate()
            .filter(move |(_, &cell)| cell & c.bit() != 0)
            .map(|(u, _)| u)
    }

    pub fn neighbors_by_color(&self, v: usize, c: Color) -> Result<Vec<usize>, GraphError> {
        self.check(v)?;
        Ok(self.neighbors(v, c).collect())
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted by `(u, v, color)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).flat_map(move |v| self.colors_between(u, v).map(move |c| (u, v, c)))
        })
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> ColoredMultigraph {
        let k = vertices.len();
        let mut sub = ColoredMultigraph::empty(k);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                sub.cells[i * k + j] = self.cell(a, b);
            }
        }
        sub
    }

    /// `true` when every edge of `self` is also an edge of `other`.
    pub fn is_subgraph_of(&self, other: &ColoredMultigraph) -> bool {
        self.n == other.n
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(&a, &b)| a & !b == 0)
    }

    /// Connected components (ignoring colors), each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in 0..self.n {
                    if !seen[u] && self.adjacent(u, v) {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, ParseError> {
        let mut graph: Option<ColoredMultigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |kind| ParseError { line, kind };
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields[0] {
                "n" => {
                    if graph.is_some() {
                        return Err(err(ParseErrorKind::DuplicateHeader));
                    }
                    let [_, count] = fields[..] else {
                        return Err(err(ParseErrorKind::Malformed(
                            "expected `n <count>`".into(),
                        )));
                    };
                    let count = parse_index(count).map_err(&err)?;
                    graph = Some(ColoredMultigraph::empty(count));
                }
                "e" => {
                    let Some(g) = graph.as_mut() else {
                        return Err(err(ParseErrorKind::MissingHeader));
                    };
                    let [_, u, v, c] = fields[..] else {
                        return Err(err(ParseErrorKind::Malformed(
                            "expected `e <u> <v> <B|R>`".into(),
                        )));
                    };
                    let u = parse_index(u).map_err(&err)?;
                    let v = parse_index(v).map_err(&err)?;
                    let c = match c {
                        "B" => Color::Blue,
                        "R" => Color::Red,
                        other => {
                            return Err(err(ParseErrorKind::Malformed(format!(
                                "unknown color `{other}` (expected B or R)"
                            ))))
                        }
                    };
                    g.add_edge(u, v, c)
                        .map_err(|e| err(ParseErrorKind::Graph(e)))?;
                }
                other => {
                    return Err(err(ParseErrorKind::Malformed(format!(
                        "unknown record `{other}`"
                    ))))
                }
            }
        }
        graph.ok_or(ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::MissingHeader,
        })
    }

    /// Canonical text form: the `n` line, then edges by `(min, max, Blue-before-Red)`.
    pub fn serialize_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v, c) in self.edges() {
            out.push_str(&format!("e {u} {v} {c}\n"));
        }
        out
    }
}

fn parse_index(s: &str) -> Result<usize, ParseErrorKind> {
    s.parse::<usize>().map_err(|_| {
        ParseErrorKind::Malformed(format!("expected a non-negative integer, got `{s}`"))
    })
}

impl FromStr for ColoredMultigraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_text(s)
    }
}

impl fmt::Debug for ColoredMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredMultigraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    #[test]
    fn empty_graphs() {
        let g = ColoredMultigraph::empty(3);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(ColoredMultigraph::empty(0).vertex_count(), 0);
        assert_eq!(ColoredMultigraph::empty(2).has_edge_any(0, 1), Ok(false));
    }

    #[test]
    fn add_edge_is_symmetric_and_idempotent() {
        let once = ColoredMultigraph::empty(2).with_edge(0, 1, Blue).unwrap();
        assert_eq!(once.has_edge_color(0, 1, Blue), Ok(true));
        assert_eq!(once.has_edge_color(1, 0, Blue), Ok(true));
        assert_eq!(once.has_edge_color(0, 1, Red), Ok(false));
        let twice = once.clone().with_edge(1, 0, Blue).unwrap();
        assert_eq!(once, twice);
        assert_eq!(twice.edge_count(), 1);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = ColoredMultigraph::empty(2);
        assert_eq!(g.add_edge(0, 0, Blue), Err(GraphError::Loop(0)));
        assert_eq!(
            g.add_edge(0, 2, Red),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        );
        assert!(g.has_edge_any(0, 5).is_err());
        assert!(g.neighbors_by_color(9, Blue).is_err());
    }

    #[test]
    fn red_edge_queries() {
        let g = ColoredMultigraph::empty(3).with_edge(0, 1, Red).unwrap();
        assert_eq!(g.has_edge_any(0, 1), Ok(true));
        assert_eq!(g.has_edge_color(1, 0, Red), Ok(true));
        assert_eq!(g.neighbors_by_color(2, Red), Ok(vec![]));
        assert_eq!(g.neighbors_by_color(0, Red), Ok(vec![1]));
    }

    #[test]
    fn both_colors_on_one_pair() {
        let g = ColoredMultigraph::from_edges(2, [(0, 1, Red), (0, 1, Blue)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.colors_between(1, 0).collect::<Vec<_>>(), vec![Blue, Red]);
    }

    #[test]
    fn parse_single_edge() {
        let g = ColoredMultigraph::parse_text("n 2\ne 0 1 B\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_color(0, 1, Blue));
        assert!(!g.has_color(0, 1, Red));
    }

    #[test]
    fn serialize_is_canonical() {
        let text =
            "# alternating 4-cycle\nn 4\n\ne 3 0 R\ne 2 3 B  # tail comment\ne 1 2 R\ne 1 0 B\n";
        let g = ColoredMultigraph::parse_text(text).unwrap();
        assert_eq!(
            g.serialize_text(),
            "n 4\ne 0 1 B\ne 0 3 R\ne 1 2 R\ne 2 3 B\n"
        );
        assert_eq!(
            ColoredMultigraph::parse_text(&g.serialize_text()).unwrap(),
            g
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = ColoredMultigraph::parse_text("n 2\ne 0 0 B\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::Graph(GraphError::Loop(0)));

        let err = ColoredMultigraph::parse_text("e 0 1 B\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
        assert_eq!(err.line, 1);

        let err = ColoredMultigraph::parse_text("n 3\n\ne 0 1 G\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(err.kind, ParseErrorKind::Malformed(_)));

        let err = ColoredMultigraph::parse_text("n 3\ne 0 5 R\n").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::Graph(GraphError::OutOfRange { vertex: 5, n: 3 })
        );

        assert!(ColoredMultigraph::parse_text("n 2\nn 2\n").is_err());
        assert!(ColoredMultigraph::parse_text("n x\n").is_err());
        assert!(ColoredMultigraph::parse_text("n 2\ne 0 1\n").is_err());
        assert!(ColoredMultigraph::parse_text("").is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g =
            ColoredMultigraph::from_edges(4, [(0, 1, Blue), (1, 3, Red), (2, 3, Blue)]).unwrap();
        let sub = g.induced(&[3, 1]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1, Red)]);
    }

    #[test]
    fn components_ignore_color() {
        let g = ColoredMultigraph::from_edges(5, [(0, 3, Blue), (3, 4, Red), (1, 2, Red)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3, 4], vec![1, 2]]);
    }
}
