//! Exact arithmetic for q-hypergeometric orthogonal polynomial schemes built
//! from three sequences `x_k`, `h_k`, `g_k`.

pub mod catalog;
pub mod classifier;
pub mod engine;
pub mod error;
pub mod exact;
pub mod limits;
pub mod par;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
