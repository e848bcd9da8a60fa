//! Alternating cycles and cycle factors.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Color, ColoredMultigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least two vertices, got {0}")]
    TooShort(usize),
    #[error("{vertices} vertices but {colors} edge colors")]
    LengthMismatch { vertices: usize, colors: usize },
    #[error("vertex {0} repeats")]
    RepeatedVertex(usize),
    #[error("edges {0} and {1} share a color")]
    NotAlternating(usize, usize),
}

/// An alternating cycle `(x_1, ..., x_m, x_1)`.
///
/// `colors[k]` is the color of the edge from `vertices[k]` to
/// `vertices[(k + 1) % m]`. Colors alternate cyclically, so `m` is even; a
/// 2-cycle uses one blue and one red edge on the same pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AltCycle {
    vertices: Vec<usize>,
    colors: Vec<Color>,
}

impl AltCycle {
    /// Checks the structural invariants (not membership in any graph).
    pub fn new(vertices: Vec<usize>, colors: Vec<Color>) -> Result<Self, CycleError> {
        let cycle = AltCycle { vertices, colors };
        cycle.structure()?;
        Ok(cycle)
    }

    /// Wraps the parts without checking anything. Run
    /// [`validate_cycle`] before trusting the result.
    pub fn from_parts_unchecked(vertices: Vec<usize>, colors: Vec<Color>) -> Self {
        AltCycle { vertices, colors }
    }

    /// Colors a closed vertex sequence alternately, trying a blue first edge
    /// and then a red one. Returns `None` if neither coloring lies in `g`.
    pub fn infer(g: &ColoredMultigraph, vertices: Vec<usize>) -> Option<Self> {
        let m = vertices.len();
        if m < 2 || m % 2 == 1 {
            return None;
        }
        Color::BOTH.into_iter().find_map(|first| {
            let colors: Vec<Color> = (0..m)
                .map(|k| if k % 2 == 0 { first } else { first.other() })
                .collect();
            let cycle = AltCycle {
                vertices: vertices.clone(),
                colors,
            };
            validate_cycle(g, &cycle).then_some(cycle)
        })
    }

    fn structure(&self) -> Result<(), CycleError> {
        let m = self.vertices.len();
        if m < 2 {
            return Err(CycleError::TooShort(m));
        }
        if self.colors.len() != m {
            return Err(CycleError::LengthMismatch {
                vertices: m,
                colors: self.colors.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) {
                return Err(CycleError::RepeatedVertex(v));
            }
        }
        for k in 0..m {
            if self.colors[k] == self.colors[(k + 1) % m] {
                return Err(CycleError::NotAlternating(k, (k + 1) % m));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Vertex at cyclic position `k` (0-based, taken mod `len`).
    pub fn at(&self, k: isize) -> usize {
        let m = self.len() as isize;
        self.vertices[k.rem_euclid(m) as usize]
    }

    /// Color of the edge leaving cyclic position `k`.
    pub fn color_at(&self, k: isize) -> Color {
        let m = self.len() as isize;
        self.colors[k.rem_euclid(m) as usize]
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertices at odd 1-based positions: `x_1, x_3, ...`.
    pub fn i_set(&self) -> Vec<usize> {
        self.vertices.iter().step_by(2).copied().collect()
    }

    /// Vertices at even 1-based positions: `x_2, x_4, ...`.
    pub fn p_set(&self) -> Vec<usize> {
        self.vertices.iter().skip(1).step_by(2).copied().collect()
    }

    /// `(x_1, x_m, x_{m-1}, ..., x_2)`. Keeps the I and P sets.
    pub fn reverse(&self) -> AltCycle {
        let m = self.len();
        let vertices = (0..m).map(|k| self.vertices[(m - k) % m]).collect();
        let colors = (0..m).map(|k| self.colors[m - 1 - k]).collect();
        AltCycle { vertices, colors }
    }

    /// Starts the cycle at `x_{k+1}`; `rotate(m)` is the identity.
    pub fn rotate(&self, k: usize) -> AltCycle {
        let mut vertices = self.vertices.clone();
        let mut colors = self.colors.clone();
        if !vertices.is_empty() {
            let k = k % vertices.len();
            vertices.rotate_left(k);
            colors.rotate_left(k);
        }
        AltCycle { vertices, colors }
    }

    /// Representative used for equality in tests: smallest vertex first,
    /// then the direction with the smaller second vertex (for 2-cycles, a
    /// blue first edge).
    pub fn canonical(&self) -> AltCycle {
        let Some(start) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
        else {
            return self.clone();
        };
        let forward = self.rotate(start);
        let backward = forward.reverse();
        let key = |c: &AltCycle| (c.vertices.get(1).copied(), c.colors.clone());
        if key(&backward) < key(&forward) {
            backward
        } else {
            forward
        }
    }

    /// Edges as `(u, v, color)` in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let m = self.len();
        (0..m).map(move |k| (self.vertices[k], self.vertices[(k + 1) % m], self.colors[k]))
    }
}

impl fmt::Display for AltCycle {
    /// `cycle v1 ... vk : c1 ... ck`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, " :")?;
        for c in &self.colors {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// Checks every [`AltCycle`] invariant against `g`.
pub fn validate_cycle(g: &ColoredMultigraph, cycle: &AltCycle) -> bool {
    cycle.structure().is_ok()
        && cycle.vertices.iter().all(|&v| v < g.vertex_count())
        && cycle.edges().all(|(u, v, c)| g.has_color(u, v, c))
}

/// Vertex-disjoint alternating cycles meant to cover the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleFactor {
    pub cycles: Vec<AltCycle>,
}

impl CycleFactor {
    pub fn new(cycles: Vec<AltCycle>) -> Self {
        CycleFactor { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Sorted canonical cycles, for order-insensitive comparison.
    pub fn canonical(&self) -> Vec<AltCycle> {
        let mut cycles: Vec<_> = self.cycles.iter().map(AltCycle::canonical).collect();
        cycles.sort_by(|a, b| a.vertices.cmp(&b.vertices).then(a.colors.cmp(&b.colors)));
        cycles
    }
}

impl fmt::Display for CycleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Every cycle valid in `g`, pairwise disjoint, covering all of `V(g)`.
pub fn validate_factor(g: &ColoredMultigraph, factor: &CycleFactor) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for cycle in &factor.cycles {
        if !validate_cycle(g, cycle) {
            return false;
        }
        for &v in cycle.vertices() {
            if std::mem::replace(&mut covered[v], true) {
                return false;
            }
        }
    }
    covered.into_iter().all(|c| c)
}
