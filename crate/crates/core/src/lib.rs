//! Vertex splitting toward interval, unit interval, chordal and path-union
//! graphs: recognition with certificates, split sequences, the exact
//! path-union splitter, brute-force solvers, the Hamiltonian-path reduction
//! and generators for the standard separating examples.

pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod paths;
pub mod recognition;
pub mod reduction;
pub mod solver;
pub mod splitting;

pub use error::{Error, Result};
pub use graph::{Bipartition, BuildWarnings, ComponentDecomposition, Graph, ParseMode};
pub use recognition::{recognize, Certificate, GraphClass, Pattern, RecognitionReport, Witness};
pub use splitting::{apply_sequence, apply_split, DescendantMap, Split, SplitSequence};
