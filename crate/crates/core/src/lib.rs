//! Pomax games and their element-removal relatives, solved exactly, along
//! with the reductions from 3-SAT and QBF to pomax posets.

pub mod cli;
pub mod generators;
pub mod io;
pub mod poset;
pub mod reductions;
pub mod rules;
pub mod solver;
pub mod subset;

pub use poset::{build_poset, BlockingTriple, Cell, Color, ColorCounts, ColoredPoset, PosetError};
pub use rules::{
    check_monotonicity, EngineError, GameState, Grid, GroundStructure, Move, Removability,
    RemovalRule, RuleKind, TreeGraph,
};
pub use solver::{
    balanced_value, game_value, game_value_with, is_balanced, outcome, random_playout, tree_value,
    verify_value, GameValue, Outcome, SolveError, Solver, SolverConfig,
};
pub use subset::{ElementSubset, MAX_ELEMENTS};
