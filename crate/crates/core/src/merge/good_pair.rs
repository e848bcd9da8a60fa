use crate::cycle::{validate_cycle, AltCycle};
use crate::graph::{Color, ColoredMultigraph};

use super::EngineError;

/// Which monochromatic 4-cycle closes the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// `(x_i, y_j, y_{j+1}, x_{i+1}, x_i)`
    Straight,
    /// `(x_i, y_{j+1}, y_j, x_{i+1}, x_i)`
    Crossed,
}

/// Cycle edges `[x_i, x_{i+1}]` of `C1` and `[y_j, y_{j+1}]` of `C2` that
/// lie on a monochromatic 4-cycle. Indices are 0-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodPair {
    pub i: usize,
    pub j: usize,
    pub orientation: Orientation,
    pub color: Color,
}

impl GoodPair {
    /// Rechecks the 4-cycle in `g`.
    pub fn holds(&self, g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> bool {
        let (i, j) = (self.i as isize, self.j as isize);
        let c = self.color;
        if self.i >= c1.len() || self.j >= c2.len() || c1.color_at(i) != c || c2.color_at(j) != c {
            return false;
        }
        let (xi, xn) = (c1.at(i), c1.at(i + 1));
        let (yj, yn) = (c2.at(j), c2.at(j + 1));
        match self.orientation {
            Orientation::Straight => g.has_color(xi, yj, c) && g.has_color(xn, yn, c),
            Orientation::Crossed => g.has_color(xi, yn, c) && g.has_color(xn, yj, c),
        }
    }
}

/// Every good pair between the two cycles, in `(i, j, orientation)` order.
pub fn good_pairs(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Vec<GoodPair> {
    let mut out = Vec::new();
    for i in 0..c1.len() {
        for j in 0..c2.len() {
            let color = c1.colors()[i];
            if c2.colors()[j] != color {
                continue;
            }
            for orientation in [Orientation::Straight, Orientation::Crossed] {
                let p = GoodPair {
                    i,
                    j,
                    orientation,
                    color,
                };
                if p.holds(g, c1, c2) {
                    out.push(p);
                }
            }
        }
    }
    out
}

pub fn find_good_pair(g: &ColoredMultigraph, c1: &AltCycle, c2: &AltCycle) -> Option<GoodPair> {
    good_pairs(g, c1, c2).into_iter().next()
}

/// Swaps the two good-pair edges for the two cross edges of the 4-cycle:
/// `(x_i, y_j, y_{j-1}, ..., y_{j+1}, x_{i+1}, ..., x_{i-1})` for a straight
/// pair, `(x_i, y_{j+1}, y_{j+2}, ..., y_j, x_{i+1}, ..., x_{i-1})` for a
/// crossed one.
pub fn merge_good_pair(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
    p: &GoodPair,
) -> Result<AltCycle, EngineError> {
    if !p.holds(g, c1, c2) {
        return Err(EngineError::InvalidPair(*p));
    }
    let (n, m) = (c1.len() as isize, c2.len() as isize);
    let (i, j) = (p.i as isize, p.j as isize);
    let mut vertices = vec![c1.at(i)];
    let mut colors = vec![p.color];
    for t in 0..m {
        let (k, out) = match p.orientation {
            Orientation::Straight => (j - t, c2.color_at(j - t - 1)),
            Orientation::Crossed => (j + 1 + t, c2.color_at(j + 1 + t)),
        };
        vertices.push(c2.at(k));
        colors.push(if t == m - 1 { p.color } else { out });
    }
    for t in 1..n {
        vertices.push(c1.at(i + t));
        colors.push(c1.color_at(i + t));
    }
    let merged = AltCycle::from_parts_unchecked(vertices, colors);
    if validate_cycle(g, &merged) {
        Ok(merged)
    } else {
        Err(EngineError::InvalidPair(*p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    /// Two squares 0..4 and 4..8 with the blue 4-cycle (0, 4, 5, 1) planted.
    fn planted() -> (ColoredMultigraph, AltCycle, AltCycle) {
        let mut g = ColoredMultigraph::empty(8);
        for base in [0, 4] {
            for k in 0..4 {
                let c = if k % 2 == 0 { Blue } else { Red };
                g.add_edge(base + k, base + (k + 1) % 4, c).unwrap();
            }
        }
        g.add_edge(0, 4, Blue).unwrap();
        g.add_edge(1, 5, Blue).unwrap();
        let c1 = AltCycle::new(vec![0, 1, 2, 3], vec![Blue, Red, Blue, Red]).unwrap();
        let c2 = AltCycle::new(vec![4, 5, 6, 7], vec![Blue, Red, Blue, Red]).unwrap();
        (g, c1, c2)
    }

    #[test]
    fn finds_and_merges_planted_pair() {
        let (g, c1, c2) = planted();
        let p = find_good_pair(&g, &c1, &c2).unwrap();
        assert_eq!(
            p,
            GoodPair {
                i: 0,
                j: 0,
                orientation: Orientation::Straight,
                color: Blue
            }
        );
        let merged = merge_good_pair(&g, &c1, &c2, &p).unwrap();
        assert_eq!(merged.vertices(), &[0, 4, 7, 6, 5, 1, 2, 3]);
        assert!(validate_cycle(&g, &merged));
        assert_eq!(merged.len(), 8);
    }

    #[test]
    fn crossed_orientation() {
        let (_, c1, c2) = planted();
        // Reversing C2 turns the straight pair into a crossed one.
        let c2r = c2.rotate(1).reverse();
        let (g, _, _) = planted();
        let p = find_good_pair(&g, &c1, &c2r).unwrap();
        assert_eq!(p.orientation, Orientation::Crossed);
        let merged = merge_good_pair(&g, &c1, &c2r, &p).unwrap();
        assert!(validate_cycle(&g, &merged));
        assert_eq!(merged.vertices()[0], 0);
        assert_eq!(merged.vertices()[1], 4);
        assert_eq!(merged.vertices()[2], 7);
    }

    #[test]
    fn no_cross_edges_no_pair() {
        let (mut g, c1, c2) = planted();
        g = {
            let mut h = ColoredMultigraph::empty(8);
            for (u, v, c) in g.edges() {
                if (u < 4) == (v < 4) {
                    h.add_edge(u, v, c).unwrap();
                }
            }
            h
        };
        assert!(find_good_pair(&g, &c1, &c2).is_none());
        let bogus = GoodPair {
            i: 0,
            j: 0,
            orientation: Orientation::Straight,
            color: Blue,
        };
        assert!(matches!(
            merge_good_pair(&g, &c1, &c2, &bogus),
            Err(EngineError::InvalidPair(_))
        ));
    }

    #[test]
    fn two_cycle_partner() {
        // A blue/red double pair {0,1} next to the square 2..6 with a blue
        // 4-cycle through the square's blue edge 2-3.
        let mut g = ColoredMultigraph::from_edges(
            6,
            [(0, 1, Blue), (0, 1, Red), (0, 2, Blue), (1, 3, Blue)],
        )
        .unwrap();
        for k in 0..4 {
            let c = if k % 2 == 0 { Blue } else { Red };
            g.add_edge(2 + k, 2 + (k + 1) % 4, c).unwrap();
        }
        let c1 = AltCycle::new(vec![0, 1], vec![Blue, Red]).unwrap();
        let c2 = AltCycle::new(vec![2, 3, 4, 5], vec![Blue, Red, Blue, Red]).unwrap();
        let p = find_good_pair(&g, &c1, &c2).unwrap();
        let merged = merge_good_pair(&g, &c1, &c2, &p).unwrap();
        assert_eq!(merged.len(), 6);
        assert!(validate_cycle(&g, &merged));
    }
}
