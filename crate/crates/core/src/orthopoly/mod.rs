//! Special functions: terminating hypergeometric sums, dual Hahn
//! polynomials and the classical families they reduce to.

pub mod classical;
pub mod dual_hahn;
pub mod hypergeometric;

pub use classical::{hermite, hermite_function, krawtchouk_symmetric, laguerre, parabose};
pub use dual_hahn::{DualHahnParams, GridFunction};
pub use hypergeometric::{hyp3f2_unit, terminating_sum, SeriesField};
