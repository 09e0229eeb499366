//! Exact univariate polynomial arithmetic over the integers and rationals.

pub mod decimal;
mod falling;
mod int;
mod interlace;
mod rat;
pub mod sturm;

pub use falling::{from_falling_factorial, to_falling_factorial};
pub use int::IntPoly;
pub use interlace::{interlaces, InterlaceKind, Interlacing};
pub use rat::{int_rat, rat, RatPoly};
pub use sturm::{
    has_all_real_roots, isolate_real_roots, real_root_count, sturm_sequence, Bound, Interval,
    RealRootedness, RootCounter, SturmDiagnostic, SturmSequence, SturmViolation,
};
