//! Minimization of finite fuzzy interpretations under Goedel semantics.
//!
//! The pipeline: encode an interpretation as a fuzzy labeled graph, compute its
//! greatest fuzzy auto-bisimulation as a compact fuzzy partition, then select
//! representatives level by level with a max-priority queue.

pub mod bisim;
pub mod cli;
pub mod concepts;
pub mod degree;
pub mod error;
pub mod format;
pub mod fuzzy;
pub mod genbench;
pub mod minimize;
pub mod model;
pub mod partition;

pub use degree::{biresiduum, inf_all, residuum, tnorm, Degree};
pub use error::{Error, Result};
pub use fuzzy::{FuzzyRelation, FuzzySet};
pub use model::{Features, FuzzyInterpretation, InterpretationBuilder, Signature, SizeStats};
