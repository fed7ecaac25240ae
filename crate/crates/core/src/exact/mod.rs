//! Exact scalar and polynomial arithmetic, q-shifted factorials and
//! terminating basic hypergeometric series.

pub mod poly;
pub mod qseries;
pub mod rational;

pub use poly::DensePoly;
pub use qseries::{joukowski_poch, qhyper, qhyper_poly, qpoch, qpoch_multi, QSeriesParams, SeriesArg, SeriesParam};
pub use rational::{r, rat, Rational};
