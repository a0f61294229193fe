//! End-to-end workflows over the core crates: counterexample-guided program
//! minimization, constraint learning against a reference program, a
//! benchmark runner, and the `crasp` command-line front end.

pub mod bench;
pub mod cli;
pub mod learn;
pub mod minimize;
pub mod refine;

pub use bench::{bench, render_json, render_table, BenchOptions, BenchRow, BenchTasks, TaskReport};
pub use learn::{learn_constrained, LearnOptions, Learned};
pub use minimize::{minimize, MinimizeOptions, Minimized};
pub use refine::{shape_of, RefineOptions, RefinementRun, Round, Termination, WorkflowError};
