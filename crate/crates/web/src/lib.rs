//! Browser bindings. Each exported function has a plain-Rust counterpart
//! so the logic is testable natively.

use altham::predicates::{color_connectivity_violation, first_two_m_violation};
use altham::{
    find_alternating_cycle_factor, solve_with_trace, AltCycle, Color, ColorChoice,
    ColoredMultigraph, Family, GenSpec, SolveResult,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Families offered by the page: `complete`, `closure-2m`, `counterexample`
/// (two cycles of about `n / 2` vertices, each between 4 and 8) and
/// `dominated` (4-cycles, then a 2-cycle if `n` leaves room).
pub fn generate_text(family: &str, n: usize, seed: u64) -> Result<String, String> {
    let family = match family {
        "complete" => Family::Complete { n },
        "closure-2m" => Family::Closure2m {
            n,
            density: 0.3,
            parallel: 0.15,
            color: ColorChoice::Random,
        },
        "counterexample" => {
            let half = (n / 2).clamp(4, 8);
            Family::Counterexample {
                k1: half / 2,
                k2: half - half / 2,
            }
        }
        "dominated" => {
            let mut lengths = vec![4; n / 4];
            if n % 4 >= 2 {
                lengths.push(2);
            }
            if lengths.len() < 2 {
                lengths = vec![2, 2];
            }
            Family::Dominated {
                lengths,
                color: if seed.is_multiple_of(2) {
                    Color::Blue
                } else {
                    Color::Red
                },
            }
        }
        other => return Err(format!("unknown family {other}")),
    };
    GenSpec { family, seed }
        .generate()
        .map(|g| g.serialize_text())
        .map_err(|e| e.to_string())
}

fn cycle_json(c: &AltCycle) -> Value {
    let colors: Vec<String> = c.colors().iter().map(|c| c.to_string()).collect();
    json!({ "vertices": c.vertices(), "colors": colors })
}

/// Everything the page draws, as JSON: edges, closure and connectivity
/// verdicts, a cycle factor, and the solver's result with its trace.
pub fn analyze_value(text: &str) -> Result<Value, String> {
    let g: ColoredMultigraph = text
        .parse()
        .map_err(|e: altham::ParseError| e.to_string())?;
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v, c)| json!([u, v, c.to_string()]))
        .collect();
    let factor: Vec<Value> = find_alternating_cycle_factor(&g)
        .map(|f| f.cycles.iter().map(cycle_json).collect())
        .unwrap_or_default();
    let (result, trace) = solve_with_trace(&g).map_err(|e| e.to_string())?;
    let result = match result {
        SolveResult::HamiltonianCycle(c) => {
            json!({ "kind": "hamiltonian", "cycle": cycle_json(&c) })
        }
        SolveResult::NoFactor => json!({ "kind": "no-factor" }),
        SolveResult::NotColorConnected(cert) => json!({
            "kind": "not-color-connected",
            "certificate": cert.to_string(),
            "vertex": cert.vertex,
            "target": cert.target,
        }),
        SolveResult::NotTwoMClosed(w) => json!({
            "kind": "not-2m-closed",
            "witness": w.to_string(),
            "path": [w.x1, w.x2, w.x3],
        }),
    };
    Ok(json!({
        "n": g.vertex_count(),
        "edges": edges,
        "twoMClosed": first_two_m_violation(&g).is_none(),
        "colorConnected": color_connectivity_violation(&g).is_none(),
        "factor": factor,
        "result": result,
        "trace": trace.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    }))
}

#[wasm_bindgen]
pub fn generate(family: &str, n: usize, seed: u32) -> Result<String, JsError> {
    generate_text(family, n, u64::from(seed)).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_value(text)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn export_dot(text: &str) -> Result<String, JsError> {
    let g: ColoredMultigraph = text
        .parse()
        .map_err(|e: altham::ParseError| JsError::new(&e.to_string()))?;
    let cycle = solve_with_trace(&g)
        .ok()
        .and_then(|(r, _)| r.cycle().cloned());
    Ok(altham::export_dot(&g, cycle.as_ref()))
}
