//! Spectral goodness-of-fit tests for the number of communities in
//! stochastic block models, built around the centered non-backtracking
//! operator.

pub mod eig;
pub mod error;
pub mod estimate;
pub mod graph;
pub mod harness;
pub mod io;
pub mod model;
pub mod operators;
pub mod rng;
pub mod stats;

pub use faer;

pub use eig::{Complex64, EigOptions, Spectrum, SymmetricSpectrum};
pub use error::{Error, Result};
pub use estimate::{Dendrogram, Embedding, Labels};
pub use graph::Graph;
pub use model::{BlockModelSpec, QFamily};
pub use operators::{LinearOperator, ModelEstimate};
pub use rng::RngSeed;
pub use stats::{NullDistribution, StatKind, TestOutcome};
