//! Exact constant-term computations for the q-Dyson, q-Morris and
//! Baker–Forrester families of Laurent polynomials.
//!
//! The crate is layered bottom-up: [`qring`] holds scalars in `q`, [`laurent`]
//! the sparse multivariate polynomials and the constant-term engine,
//! [`products`] the product builders, [`closedform`] the right-hand sides.
//! [`roots`], [`splitting`] and [`gxseries`] verify the structural results,
//! and [`suites`] bundles everything into named verification runs.

pub mod closedform;
pub mod error;
pub mod gxseries;
pub mod laurent;
pub mod products;
pub mod qring;
pub mod roots;
pub mod splitting;
pub mod suites;

pub use error::{Error, Result};
pub use laurent::{ExpVec, MLaurent};
pub use products::Shape;
pub use qring::{qbinom, qpoch, QFrac, QLaurent};
