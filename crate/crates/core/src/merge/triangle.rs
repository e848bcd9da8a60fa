use crate::cycle::AltCycle;
use crate::graph::{Color, ColoredMultigraph};

use super::domination::color_dominates;
use super::{EngineError, MergeKind};

/// Reverses `c` if needed so its first edge has color `first`. Reversal
/// keeps `I_c` and `P_c`, so dominations are unaffected.
fn with_first(c: &AltCycle, first: Color) -> AltCycle {
    if c.colors()[0] == first {
        c.clone()
    } else {
        c.reverse()
    }
}

/// Merges a directed 3-cycle of dominations `c[0] -> c[1] -> c[2] -> c[0]`
/// with arc colors `colors[k]` for `c[k] -> c[k+1]`.
///
/// Monochromatic triangle of color `a`: every cycle starts with an
/// `a`-edge and they are concatenated. Mixed triangle: rotate so the colors
/// read `(a, a, b)`; the first two cycles are traversed forward and the
/// third backwards, `x_{m_3,3}, ..., x_{1,3}`, all starting with an `a`-edge.
pub fn merge_domination_triangle(
    g: &ColoredMultigraph,
    cycles: [&AltCycle; 3],
    colors: [Color; 3],
) -> Result<(AltCycle, MergeKind), EngineError> {
    for k in 0..3 {
        if color_dominates(g, cycles[k], cycles[(k + 1) % 3]) != Some(colors[k]) {
            return Err(EngineError::InvalidTriangle(format!(
                "cycle {k} does not {}-dominate cycle {}",
                colors[k],
                (k + 1) % 3
            )));
        }
    }
    let (seq, kind) = if colors[0] == colors[1] && colors[1] == colors[2] {
        let a = colors[0];
        let seq: Vec<usize> = cycles
            .iter()
            .flat_map(|c| with_first(c, a).vertices().to_vec())
            .collect();
        (seq, MergeKind::TriangleMono)
    } else {
        let r = (0..3).find(|&r| colors[r] == colors[(r + 1) % 3]).expect(
            "a non-monochromatic 3-sequence of two colors has one equal cyclic neighbor pair",
        );
        let a = colors[r];
        let c1 = with_first(cycles[r], a);
        let c2 = with_first(cycles[(r + 1) % 3], a);
        let c3 = with_first(cycles[(r + 2) % 3], a);
        let mut seq = c1.vertices().to_vec();
        seq.extend_from_slice(c2.vertices());
        seq.extend(c3.vertices().iter().rev());
        (seq, MergeKind::TriangleMixed)
    };
    AltCycle::infer(g, seq).map(|c| (c, kind)).ok_or_else(|| {
        EngineError::InvalidTriangle("merged sequence is not an alternating cycle".into())
    })
}
