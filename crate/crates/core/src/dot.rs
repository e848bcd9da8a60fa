//! Graphviz output: blue edges solid, red edges dashed.

use std::fmt::Write;

use crate::cycle::AltCycle;
use crate::graph::{Color, ColoredMultigraph};

/// DOT text for `g`, edges in sorted order. Edges of `highlight` are drawn
/// bold.
pub fn export_dot(g: &ColoredMultigraph, highlight: Option<&AltCycle>) -> String {
    let on_cycle = |u: usize, v: usize, c: Color| {
        highlight.is_some_and(|cy| {
            cy.edges()
                .any(|(a, b, col)| col == c && (a.min(b), a.max(b)) == (u, v))
        })
    };
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").expect("writing to a String");
    }
    for (u, v, c) in g.edges() {
        let (color, style) = match c {
            Color::Blue => ("blue", "solid"),
            Color::Red => ("red", "dashed"),
        };
        let bold = if on_cycle(u, v, c) {
            ", penwidth=3"
        } else {
            ""
        };
        writeln!(out, "  {u} -- {v} [color={color}, style={style}{bold}];")
            .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
