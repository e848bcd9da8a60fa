//! Explicit merged-cycle vertex sequences for appropriately labelled pairs
//! `a = (x_1, ..., x_n)` and `b = (y_1, ..., y_m)`. Indices below are
//! 1-based and cyclic, matching the usual cycle notation. Each builder
//! returns `None` when the cycles are too short for its pattern; callers
//! color and validate the sequence against the graph.

use crate::cycle::AltCycle;

struct Labels<'a> {
    a: &'a AltCycle,
    b: &'a AltCycle,
}

impl Labels<'_> {
    fn x(&self, i: isize) -> usize {
        self.a.at(i - 1)
    }

    fn y(&self, j: isize) -> usize {
        self.b.at(j - 1)
    }
}

fn is_simple(seq: &[usize]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn finish(seq: Vec<usize>, expected: usize) -> Option<Vec<usize>> {
    (seq.len() == expected && is_simple(&seq)).then_some(seq)
}

/// `(y_m, y_2, y_1, x_3, ..., x_n, x_2, x_1, y_3, ..., y_{m-1})`, the cycle
/// that closes the first branch of the parallel-edge lemma.
pub fn lemma2_case1(a: &AltCycle, b: &AltCycle) -> Option<Vec<usize>> {
    let (n, m) = (a.len() as isize, b.len() as isize);
    if n < 4 || m < 4 {
        return None;
    }
    let l = Labels { a, b };
    let mut seq = vec![l.y(m), l.y(2), l.y(1)];
    seq.extend((3..=n).map(|i| l.x(i)));
    seq.extend([l.x(2), l.x(1)]);
    seq.extend((3..m).map(|j| l.y(j)));
    finish(seq, (n + m) as usize)
}

/// `(x_4, x_2, x_3, y_2, y_3, ..., y_m, y_1, x_1, x_n, ..., x_5)`, the
/// second branch of the parallel-edge lemma.
pub fn lemma2_case2(a: &AltCycle, b: &AltCycle) -> Option<Vec<usize>> {
    let (n, m) = (a.len() as isize, b.len() as isize);
    if n < 4 {
        return None;
    }
    let l = Labels { a, b };
    let mut seq = vec![l.x(4), l.x(2), l.x(3)];
    seq.extend((2..=m + 1).map(|j| l.y(j)));
    seq.push(l.x(1));
    seq.extend((5..=n).rev().map(|i| l.x(i)));
    finish(seq, (n + m) as usize)
}

/// Mixed colors from `x_1` into `I_b` with `[x_1, y_1]` of the labelling
/// color and `[x_1, y_3]` of the other one. Interleaves the cycles in
/// blocks `y_{2t+1}, y_{2t+2}, x_{2t+2}, x_{2t+1}`:
///
/// * `n <= m`: `(y_1, y_2, x_2, x_1, y_3, y_4, x_4, x_3, ..., y_n, x_n, x_{n-1}, y_{n+1}, ..., y_m)`
/// * `n > m`: `(y_1, y_2, x_2, x_1, ..., y_{m-2}, x_{m-2}, x_{m-3}, y_{m-1}, y_m, x_n, x_{n-1}, ..., x_{m-1})`
pub fn mixed_star(a: &AltCycle, b: &AltCycle) -> Option<Vec<usize>> {
    let (n, m) = (a.len() as isize, b.len() as isize);
    let l = Labels { a, b };
    let block = |t: isize| {
        [
            l.y(2 * t + 1),
            l.y(2 * t + 2),
            l.x(2 * t + 2),
            l.x(2 * t + 1),
        ]
    };
    let mut seq = Vec::new();
    if n <= m {
        for t in 0..n / 2 {
            seq.extend(block(t));
        }
        seq.extend((n + 1..=m).map(|j| l.y(j)));
    } else {
        for t in 0..m / 2 - 1 {
            seq.extend(block(t));
        }
        seq.extend([l.y(m - 1), l.y(m)]);
        seq.extend((m - 1..=n).rev().map(|i| l.x(i)));
    }
    finish(seq, (n + m) as usize)
}

/// Chord `[x_p, x_q]` with `p < q` of equal parity. Cuts the cycle edges
/// `[x_{p-1}, x_p]` and `[x_{q-1}, x_q]`, joins the two arcs through the
/// chord, and closes through `b` entered at `y_1`:
///
/// `(y_1, x_{p-1}, x_{p-2}, ..., x_q, x_p, x_{p+1}, ..., x_{q-1}, <b>)`
///
/// where `<b>` is `y_m, ..., y_2` when `descending_b` and `y_2, ..., y_m`
/// otherwise. An odd chord (inside `I_a`) uses the descending tail, an even
/// chord (inside `P_a`) the ascending one.
pub fn chord_splice(
    a: &AltCycle,
    b: &AltCycle,
    p: isize,
    q: isize,
    descending_b: bool,
) -> Option<Vec<usize>> {
    let (n, m) = (a.len() as isize, b.len() as isize);
    if !(1 <= p && p < q && q <= n && (q - p) % 2 == 0) {
        return None;
    }
    let l = Labels { a, b };
    let mut seq = vec![l.y(1)];
    let down = n - (q - p);
    seq.extend((0..down).map(|t| l.x(p - 1 - t)));
    seq.extend((p..q).map(|i| l.x(i)));
    if descending_b {
        seq.extend((2..=m).rev().map(|j| l.y(j)));
    } else {
        seq.extend((2..=m).map(|j| l.y(j)));
    }
    finish(seq, (n + m) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::*;

    fn cycle(vs: &[usize]) -> AltCycle {
        let colors = (0..vs.len())
            .map(|k| if k % 2 == 0 { Blue } else { Red })
            .collect();
        AltCycle::new(vs.to_vec(), colors).unwrap()
    }

    // x_i = i - 1 + 0 (vertices 0..n), y_j = 100 + j - 1.
    fn xs(n: usize) -> AltCycle {
        cycle(&(0..n).collect::<Vec<_>>())
    }
    fn ys(m: usize) -> AltCycle {
        cycle(&(100..100 + m).collect::<Vec<_>>())
    }

    #[test]
    fn mixed_star_short_first() {
        // (y1, y2, x2, x1, y3, y4, x4, x3, y5, y6)
        let seq = mixed_star(&xs(4), &ys(6)).unwrap();
        assert_eq!(seq, vec![100, 101, 1, 0, 102, 103, 3, 2, 104, 105]);
        let eq = mixed_star(&xs(4), &ys(4)).unwrap();
        assert_eq!(eq, vec![100, 101, 1, 0, 102, 103, 3, 2]);
    }

    #[test]
    fn mixed_star_long_first() {
        // (y1, y2, x2, x1, y3, y4, x6, x5, x4, x3)
        let seq = mixed_star(&xs(6), &ys(4)).unwrap();
        assert_eq!(seq, vec![100, 101, 1, 0, 102, 103, 5, 4, 3, 2]);
    }

    #[test]
    fn chord_splice_odd_and_even() {
        // p = 1, q = 3 on a 6-cycle: (y1, x6, x5, x4, x3, x1, x2, y4, y3, y2)
        let odd = chord_splice(&xs(6), &ys(4), 1, 3, true).unwrap();
        assert_eq!(odd, vec![100, 5, 4, 3, 2, 0, 1, 103, 102, 101]);
        // p = 2, q = 4: (y1, x1, x6, x5, x4, x2, x3, y2, y3, y4)
        let even = chord_splice(&xs(6), &ys(4), 2, 4, false).unwrap();
        assert_eq!(even, vec![100, 0, 5, 4, 3, 1, 2, 101, 102, 103]);
        assert!(chord_splice(&xs(6), &ys(4), 1, 2, true).is_none());
    }

    #[test]
    fn lemma_sequences() {
        let c1 = lemma2_case1(&xs(4), &ys(4)).unwrap();
        assert_eq!(c1, vec![103, 101, 100, 2, 3, 1, 0, 102]);
        let c2 = lemma2_case2(&xs(6), &ys(4)).unwrap();
        assert_eq!(c2, vec![3, 1, 2, 101, 102, 103, 100, 0, 5, 4]);
        assert!(lemma2_case1(&xs(2), &ys(4)).is_none());
    }
}
