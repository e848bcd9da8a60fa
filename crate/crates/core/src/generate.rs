//! Seeded instance generators. Every generator is a pure function of its
//! parameters and seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::factor::find_alternating_cycle_factor;
use crate::graph::{Color, ColoredMultigraph};
use crate::oracle::oracle_hamiltonian;
use crate::predicates::{is_2nm_closed, is_color_connected, two_m_violations, two_nm_violations};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coin(rng: &mut ChaCha8Rng) -> Color {
    if rng.random_bool(0.5) {
        Color::Blue
    } else {
        Color::Red
    }
}

/// Complete graph, one uniformly random color per pair.
pub fn gen_complete(n: usize, seed: u64) -> ColoredMultigraph {
    let mut rng = rng(seed);
    let mut g = ColoredMultigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, coin(&mut rng)).expect("indices in range");
        }
    }
    g
}

/// Each pair is joined with probability `density`; a joined pair gets both
/// colors with probability `parallel`, otherwise one random color.
pub fn gen_random(
    n: usize,
    density: f64,
    parallel: f64,
    seed: u64,
) -> Result<ColoredMultigraph, GenError> {
    for (name, p) in [("density", density), ("parallel", parallel)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenError::InvalidParameter(format!(
                "{name} must lie in [0, 1], got {p}"
            )));
        }
    }
    let mut rng = rng(seed);
    let mut g = ColoredMultigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !rng.random_bool(density) {
                continue;
            }
            if rng.random_bool(parallel) {
                g.add_edge(u, v, Color::Blue).expect("indices in range");
                g.add_edge(u, v, Color::Red).expect("indices in range");
            } else {
                g.add_edge(u, v, coin(&mut rng)).expect("indices in range");
            }
        }
    }
    Ok(g)
}

/// Color given to edges added by [`closure_2m_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColorChoice {
    Blue,
    Red,
    #[default]
    Random,
}

/// [`closure_2m_with`] using random colors.
pub fn closure_2m(g: &ColoredMultigraph, seed: u64) -> ColoredMultigraph {
    closure_2m_with(g, ColorChoice::Random, seed)
}

/// Closes every open monochromatic 2-path, first violation first, until
/// none is left. The result contains `g` and is 2-M-closed; a closed input
/// comes back unchanged.
pub fn closure_2m_with(g: &ColoredMultigraph, choice: ColorChoice, seed: u64) -> ColoredMultigraph {
    let mut rng = rng(seed);
    let mut g = g.clone();
    while let Some(w) = two_m_violations(&g).into_iter().next() {
        let c = match choice {
            ColorChoice::Blue => Color::Blue,
            ColorChoice::Red => Color::Red,
            ColorChoice::Random => coin(&mut rng),
        };
        g.add_edge(w.x1, w.x3, c)
            .expect("violation endpoints are vertices");
    }
    g
}

/// Two alternating cycles of lengths `2 k1` and `2 k2` joined by exactly
/// four red edges between the blue edges `[x_1, x_2]` and `[y_1, y_2]`,
/// with red chords inside each cycle until the graph is 2-NM-closed.
///
/// The result is 2-NM-closed, color-connected and has an alternating cycle
/// factor, but no alternating Hamiltonian cycle; all four facts are checked
/// before returning.
pub fn gen_counterexample(k1: usize, k2: usize) -> Result<ColoredMultigraph, GenError> {
    if k1 < 2 || k2 < 2 {
        return Err(GenError::InvalidParameter(format!(
            "cycle half-lengths must be at least 2, got {k1} and {k2}"
        )));
    }
    let (n1, n2) = (2 * k1, 2 * k2);
    let mut g = ColoredMultigraph::empty(n1 + n2);
    for (base, len) in [(0, n1), (n1, n2)] {
        for i in 0..len {
            let c = if i % 2 == 0 { Color::Blue } else { Color::Red };
            g.add_edge(base + i, base + (i + 1) % len, c)
                .expect("indices in range");
        }
    }
    let (x1, x2, y1, y2) = (0, 1, n1, n1 + 1);
    for (u, v) in [(x1, y1), (x2, y2), (x1, y2), (x2, y1)] {
        g.add_edge(u, v, Color::Red).expect("indices in range");
    }
    while let Some(w) = two_nm_violations(&g).into_iter().next() {
        if (w.x1 < n1) != (w.x3 < n1) {
            return Err(GenError::ConstructionFailed(format!(
                "closure would add a cross edge {} {}",
                w.x1, w.x3
            )));
        }
        g.add_edge(w.x1, w.x3, Color::Red)
            .expect("violation endpoints are vertices");
    }

    type Check = (&'static str, fn(&ColoredMultigraph) -> bool);
    let checks: [Check; 4] = [
        ("2-NM-closed", is_2nm_closed),
        ("color-connected", is_color_connected),
        ("has an alternating cycle factor", |g| {
            find_alternating_cycle_factor(g).is_some()
        }),
        ("has no alternating Hamiltonian cycle", |g| {
            oracle_hamiltonian(g).is_none()
        }),
    ];
    for (what, check) in checks {
        if !check(&g) {
            return Err(GenError::ConstructionFailed(format!(
                "result is not {what}"
            )));
        }
    }
    Ok(g)
}

/// Complete graph built around alternating cycles of the given even
/// lengths (2 allowed, as a blue/red parallel pair), where cycle `i`
/// dominates every cycle `j > i`: inside its own even positions only the
/// domination color, inside its odd positions only the other color, and
/// every edge to a later cycle colored by the parity of its end. The first
/// cycle dominates in `first`, later ones in random colors; remaining pairs
/// inside a cycle get random colors.
///
/// Such a graph is 2-M-closed and has an alternating cycle factor but is
/// not color-connected whenever there are at least two cycles.
pub fn gen_dominated(
    lengths: &[usize],
    first: Color,
    seed: u64,
) -> Result<ColoredMultigraph, GenError> {
    if let Some(&bad) = lengths.iter().find(|&&m| m < 2 || m % 2 == 1) {
        return Err(GenError::InvalidParameter(format!(
            "cycle lengths must be even and at least 2, got {bad}"
        )));
    }
    let mut rng = rng(seed);
    let n: usize = lengths.iter().sum();
    let mut g = ColoredMultigraph::empty(n);
    let mut starts = Vec::with_capacity(lengths.len());
    let mut base = 0;
    for &m in lengths {
        starts.push(base);
        base += m;
    }
    let cycle_of = |v: usize| {
        starts
            .iter()
            .rposition(|&s| s <= v)
            .expect("vertex lies in some cycle")
    };
    let colors: Vec<Color> = (0..lengths.len())
        .map(|i| if i == 0 { first } else { coin(&mut rng) })
        .collect();

    for (i, (&s, &m)) in starts.iter().zip(lengths).enumerate() {
        let c = colors[i];
        for k in 0..m {
            // Edge k -> k+1 has color c for even k, so even positions form I.
            let col = if k % 2 == 0 { c } else { c.other() };
            g.add_edge(s + k, s + (k + 1) % m, col)
                .expect("indices in range");
        }
        for a in 0..m {
            for b in a + 1..m {
                if g.adjacent(s + a, s + b) {
                    continue;
                }
                let col = match (a % 2, b % 2) {
                    (0, 0) => c,
                    (1, 1) => c.other(),
                    _ => coin(&mut rng),
                };
                g.add_edge(s + a, s + b, col).expect("indices in range");
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let (i, j) = (cycle_of(u), cycle_of(v));
            if i == j {
                continue;
            }
            let pos = u - starts[i];
            let col = if pos % 2 == 0 {
                colors[i]
            } else {
                colors[i].other()
            };
            g.add_edge(u, v, col).expect("indices in range");
        }
    }
    Ok(g)
}

/// Generator family with its size parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete {
        n: usize,
    },
    Random {
        n: usize,
        density: f64,
        parallel: f64,
    },
    Closure2m {
        n: usize,
        density: f64,
        parallel: f64,
        color: ColorChoice,
    },
    Counterexample {
        k1: usize,
        k2: usize,
    },
    Dominated {
        lengths: Vec<usize>,
        color: Color,
    },
}

/// A family plus seed; identical specs give identical graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<ColoredMultigraph, GenError> {
        let seed = self.seed;
        match &self.family {
            Family::Complete { n } => Ok(gen_complete(*n, seed)),
            Family::Random {
                n,
                density,
                parallel,
            } => gen_random(*n, *density, *parallel, seed),
            Family::Closure2m {
                n,
                density,
                parallel,
                color,
            } => {
                let base = gen_random(*n, *density, *parallel, seed)?;
                Ok(closure_2m_with(&base, *color, seed.wrapping_add(1)))
            }
            Family::Counterexample { k1, k2 } => gen_counterexample(*k1, *k2),
            Family::Dominated { lengths, color } => gen_dominated(lengths, *color, seed),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::is_2m_closed;

    #[test]
    fn complete_is_closed_and_deterministic() {
        for seed in 0..20 {
            let g = gen_complete(6, seed);
            assert_eq!(g.edge_count(), 15);
            assert!(is_2m_closed(&g));
            assert!(is_2nm_closed(&g));
            assert_eq!(g, gen_complete(6, seed));
        }
        assert_eq!(gen_complete(1, 3).edge_count(), 0);
    }

    #[test]
    fn closure_of_blue_path() {
        let g =
            ColoredMultigraph::from_edges(3, [(0, 1, Color::Blue), (1, 2, Color::Blue)]).unwrap();
        let h = closure_2m_with(&g, ColorChoice::Red, 0);
        assert!(h.has_color(0, 2, Color::Red));
        assert_eq!(h.edge_count(), 3);
        assert_eq!(closure_2m(&h, 9), h);
    }

    #[test]
    fn closure_is_a_closure() {
        for seed in 0..30 {
            let g = gen_random(8, 0.3, 0.1, seed).unwrap();
            let h = closure_2m(&g, seed);
            assert!(is_2m_closed(&h));
            assert!(g.is_subgraph_of(&h));
            assert_eq!(closure_2m(&h, seed + 1), h);
        }
    }

    #[test]
    fn counterexample_small() {
        let g = gen_counterexample(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(matches!(
            gen_counterexample(1, 2),
            Err(GenError::InvalidParameter(_))
        ));
    }

    #[test]
    fn dominated_is_closed() {
        let g = gen_dominated(&[4, 4, 2], Color::Blue, 5).unwrap();
        assert!(is_2m_closed(&g));
        assert!(!is_color_connected(&g));
        assert!(find_alternating_cycle_factor(&g).is_some());
        assert!(gen_dominated(&[3], Color::Blue, 0).is_err());
    }

    #[test]
    fn random_rejects_bad_probability() {
        assert!(gen_random(4, 1.5, 0.0, 0).is_err());
    }
}
