//! Coloring claw-free graphs within codegree bounds: graph parameters, class
//! recognizers, constructive colorers driven by structural certificates,
//! instance generators, and an exact oracle to check them against.

pub mod campaign;
pub mod certificates;
pub mod colorers;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod params;
pub mod recognition;

pub use error::{Error, Result};
pub use graph::{CliqueCover, Coloring, Graph, ListAssignment, Matching, Multigraph};
