//! Gridless line spectral estimation from complete or incompletely sampled
//! sinusoidal data.
//!
//! The crate solves the atomic norm denoising family (GL-Lasso / GL-SR-Lasso /
//! GL-LAD-Lasso / noiseless basis pursuit) and gridless SPICE as semidefinite
//! programs over the bordered-Toeplitz PSD cone using ADMM, recovers
//! frequencies and powers by Vandermonde (Prony) decomposition, selects the
//! model order with SORTE, refines frequencies with root-MUSIC, and provides
//! grid-based l1 baselines for comparison.
//!
//! Module map:
//! - [`signal`]: sample sets, sinusoid models, signal synthesis and noise.
//! - [`toeplitz`]: Hermitian Toeplitz operator, adjoint, PSD projection and
//!   Vandermonde decomposition.
//! - [`solver`]: the ADMM engine for the SDP family, regularization parameter
//!   computation, atomic norm evaluation, dual certificates, covariance
//!   fitting objective.
//! - [`gls`]: gridless SPICE facade built on the solver equivalences.
//! - [`postprocess`]: SORTE model order selection, root-MUSIC refinement and
//!   amplitude refitting.
//! - [`gridbaseline`]: grid-based l1 denoising and grid-vs-gridless sandwich
//!   checks.

pub mod error;
pub mod gls;
pub mod gridbaseline;
pub mod linalg;
pub mod postprocess;
pub mod signal;
pub mod solver;
pub mod toeplitz;

mod nnls;
mod roots;

pub use error::{Error, Result};
pub use linalg::{C64, CMat, CVec};
