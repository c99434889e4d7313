//! Preference-conditioned experience replay for class-incremental learning.
//!
//! The crate treats the stability–plasticity trade-off of replay-based
//! continual learning as a two-objective optimization problem. One
//! preference-conditioned model (a shared encoder plus a hypernetwork that
//! emits the final linear layer from a preference vector) covers a whole
//! family of trade-offs; at inference the trade-off is picked per sample by
//! minimum prediction entropy.
//!
//! Module map:
//! - [`autodiff`] — dense-tensor reverse-mode differentiation and SGD
//! - [`nn`] — encoder, hypernetwork, classification head, checkpoints
//! - [`replay`] — fixed-capacity reservoir buffer over past examples
//! - [`prefs`] — preference vectors, Dirichlet sampling, scalarizations
//! - [`moo`] — Pareto dominance, front filtering, MGDA gradient combination
//! - [`learner`] — training/inference procedures for all learner kinds
//! - [`stream`] — synthetic and tabular class-incremental task streams
//! - [`eval`] — metrics, front sweeps, experiment harness, result files

pub mod autodiff;
pub mod error;
pub mod eval;
pub mod learner;
pub mod moo;
pub mod nn;
pub mod prefs;
pub mod replay;
pub mod rng;
pub mod stream;

pub use error::{Error, Result};
