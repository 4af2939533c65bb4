//! Simulation and verification toolkit for heat flow with a fading
//! viscoelastic memory term.
//!
//! The model is a quasilinear parabolic equation on a box with homogeneous
//! Dirichlet data, where a relaxation kernel `g` convolves the history of the
//! Laplacian:
//!
//! ```text
//!   A(t) |u_t|^(m-2) u_t - lap u + int_0^t g(t-s) lap u(s) ds = 0
//! ```
//!
//! The crate provides: relaxation-kernel constructors and their decay
//! certificates, tensor-grid spatial operators in 1D/2D, product-quadrature
//! evaluation of the memory term (direct or compressed into a short sum of
//! exponentials), an implicit time stepper for the `m`-damped flow, and trace
//! analysis that checks the energy-dissipation identity and fits the
//! theoretical decay envelopes.

pub mod amatrix;
pub mod analysis;
pub mod config;
pub mod envelope;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod memory;
pub mod mesh;
pub mod presets;
pub mod quad;
pub mod report;
pub mod soe;
pub mod solver;
pub mod study;

pub use amatrix::MatrixA;
pub use analysis::EnergyTrace;
pub use config::RunConfig;
pub use envelope::{DecayEnvelope, EnvelopeKind};
pub use error::{Error, Result};
pub use kernel::{KernelCertificate, RelaxationKernel, XiFunction};
pub use memory::HistoryBuffer;
pub use mesh::{Field, Mesh};
pub use soe::CompressedKernel;
pub use solver::{SolverConfig, TimeMesh};
