//! Alternating cycles in 2-edge-colored multigraphs.
//!
//! A 2-M-closed graph (every monochromatic 2-path has its ends adjacent)
//! has an alternating Hamiltonian cycle exactly when it is color-connected
//! and has an alternating cycle factor. This crate decides the three
//! conditions and, when they hold, builds the cycle by merging the cycles
//! of a factor. When they fail it returns a checkable witness.
//!
//! ```
//! use altham::{solve_hamiltonian, validate_cycle, ColoredMultigraph, SolveResult};
//!
//! let g: ColoredMultigraph = "n 4\ne 0 1 B\ne 1 2 R\ne 2 3 B\ne 3 0 R\n".parse().unwrap();
//! match solve_hamiltonian(&g).unwrap() {
//!     SolveResult::HamiltonianCycle(c) => assert!(validate_cycle(&g, &c)),
//!     other => panic!("{other:?}"),
//! }
//! ```

pub mod cycle;
pub mod dot;
pub mod factor;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod merge;
pub mod oracle;
pub mod predicates;

pub use cycle::{validate_cycle, validate_factor, AltCycle, CycleError, CycleFactor};
pub use dot::export_dot;
pub use factor::{
    find_alternating_cycle_factor, find_alternating_cycle_factor_with, FactorOptions,
};
pub use generate::{
    closure_2m, closure_2m_with, gen_complete, gen_counterexample, gen_dominated, gen_random,
    ColorChoice, Family, GenError, GenSpec,
};
pub use graph::{Color, ColoredMultigraph, GraphError, ParseError, ParseErrorKind};
pub use merge::{
    merge_pair, solve_hamiltonian, solve_with_trace, Certificate, EngineError, MergeKind,
    MergeOutcome, Obstacle, SolveResult, TraceEvent,
};
pub use predicates::{
    color_connectivity_violation, exists_alternating_path, is_2m_closed, is_2nm_closed,
    is_closed_alternating, is_color_connected, AltPath, PairWitness, ThreePath, TwoPath,
};
