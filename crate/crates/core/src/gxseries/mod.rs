//! Constant terms of rational functions by iterated partial fractions, and
//! the rational functions `Q(d|u;k)` whose constant terms locate the roots.

mod lemq;
mod quk;
mod series;

pub use lemq::*;
pub use quk::*;
pub use series::*;
