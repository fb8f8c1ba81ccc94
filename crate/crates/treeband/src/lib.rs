//! Tree-layouts and treebandwidth.

pub mod cli;
pub mod coloring;
pub mod decomp;
pub mod error;
pub mod flow;
pub mod graph;
pub mod layout;
pub mod obstructions;
pub mod searchgame;
pub mod solver;
pub mod spqr;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
