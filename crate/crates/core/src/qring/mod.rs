//! Exact arithmetic in the parameter `q`.

mod frac;
mod interp;
mod pochhammer;
mod poly;
mod text;

pub use frac::{ratio, QFrac};
pub use interp::{interpolate, UniPoly};
pub use pochhammer::{qbinom, qpoch};
pub(crate) use pochhammer::{poch, qbinom_i, qfact};
pub use poly::QLaurent;
pub(crate) use poly::rat_pow;
