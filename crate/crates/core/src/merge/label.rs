use crate::cycle::AltCycle;
use crate::graph::{Color, ColoredMultigraph};
use crate::predicates::TwoPath;

use super::EngineError;

/// Rotates `cycle` to start at `v` and picks the direction whose first
/// edge has color `c`. Every cycle vertex has one incident cycle edge of
/// each color, so this always succeeds when `v` is on the cycle.
pub fn orient_at(cycle: &AltCycle, v: usize, c: Color) -> Result<AltCycle, EngineError> {
    let pos = cycle.position(v).ok_or(EngineError::NotOnCycle(v))?;
    let rotated = cycle.rotate(pos);
    Ok(if rotated.colors()[0] == c {
        rotated
    } else {
        rotated.reverse()
    })
}

/// Relabels both cycles so that `x` and `y` come first and
/// `c[x_1, x_2] = c[y_1, y_2] = c[x_1, y_1] = c`.
pub fn appropriately_label(
    g: &ColoredMultigraph,
    c1: &AltCycle,
    c2: &AltCycle,
    x: usize,
    y: usize,
    c: Color,
) -> Result<(AltCycle, AltCycle), EngineError> {
    let a = orient_at(c1, x, c)?;
    let b = orient_at(c2, y, c)?;
    if !g.has_color(x, y, c) {
        return Err(EngineError::NoSuchEdge { x, y, color: c });
    }
    Ok((a, b))
}

/// Outcome of propagating parallel edges `[x_{1+k}, y_{1+k}]` from an
/// appropriately labelled anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParallelEdges {
    /// Every parallel edge exists and consecutive ones differ in color.
    /// Listed as `(x_{1+k}, y_{1+k}, color)` for `k` in `0..lcm(n, m)`.
    Complete(Vec<(usize, usize, Color)>),
    /// A monochromatic 2-path whose closing edge is missing.
    Violation(TwoPath),
    /// The predicted edge is absent but no 2-path forces it directly; in a
    /// 2-M-closed graph the two cycles then merge.
    Missing { x: usize, y: usize },
    /// Two consecutive parallel edges share their only color, which spans a
    /// good pair.
    SameColor { x: usize, y: usize },
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Walks the parallel edges of an appropriately labelled pair.
///
/// Precondition: `a` and `b` are labelled with respect to `[a[0], b[0]]`
/// and no good pair exists between them.
pub fn check_parallel_edges(g: &ColoredMultigraph, a: &AltCycle, b: &AltCycle) -> ParallelEdges {
    let (n, m) = (a.len(), b.len());
    let steps = n / gcd(n, m) * m;
    let mut color = a.colors()[0];
    let mut out = Vec::with_capacity(steps);
    for k in 0..steps as isize {
        let (xk, yk) = (a.at(k), b.at(k));
        let (xn, yn) = (a.at(k + 1), b.at(k + 1));
        out.push((xk, yk, color));
        if k as usize == steps - 1 {
            break;
        }
        // (x_{k+1}, x_k, y_k) and (x_k, y_k, y_{k+1}) are monochromatic.
        let mono = |x1, x2, x3| TwoPath {
            x1,
            x2,
            x3,
            c1: color,
            c2: color,
        };
        if !g.adjacent(xn, yk) {
            return ParallelEdges::Violation(mono(xn, xk, yk));
        }
        if !g.adjacent(xk, yn) {
            return ParallelEdges::Violation(mono(xk, yk, yn));
        }
        let next = color.other();
        if !g.has_color(xn, yn, next) {
            if g.adjacent(xn, yn) {
                return ParallelEdges::SameColor { x: xn, y: yn };
            }
            if g.has_color(xk, yn, color) {
                return ParallelEdges::Violation(mono(xn, xk, yn));
            }
            if g.has_color(xn, yk, color) {
                return ParallelEdges::Violation(mono(yn, yk, xn));
            }
            return ParallelEdges::Missing { x: xn, y: yn };
        }
        color = next;
    }
    ParallelEdges::Complete(out)
}
