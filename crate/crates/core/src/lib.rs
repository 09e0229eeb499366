//! Chromatic polynomials and the real parts of their roots.
//!
//! Everything that decides a theorem-level claim runs in exact arithmetic:
//! chromatic polynomials by several independent routes, Sturm sequences and
//! Hermite–Biehler interlacing for Hurwitz (quasi-)stability. A
//! configurable-precision root finder supplies numerical cross-checks and
//! root clouds.

pub mod chromatic;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod poly;
pub mod rootfind;
pub mod stability;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::{IntPoly, RatPoly};
