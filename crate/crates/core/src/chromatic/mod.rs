//! Chromatic polynomials by deletion–contraction, closed forms, and
//! enumeration oracles, plus the coefficient identities built on them.

mod bipartite;
mod broken_cycle;
mod deletion;
mod formulas;
mod record;
mod table;

pub use bipartite::{chromatic_polynomial_bipartite, stirling2_row, MAX_BIPARTITE_ORDER};
pub use broken_cycle::{broken_cycle_coefficients, identity_labels, MAX_BROKEN_CYCLE_ORDER, MAX_BROKEN_CYCLE_SIZE};
pub use deletion::{chromatic_number, chromatic_number_of, chromatic_polynomial, ChromaticEngine, MAX_DELETION_ORDER};
pub use formulas::{
    binom, factorial_coeffs_by_counting, h_bipartite_formula, h_formula_small_codegree, h_n3, h_n4,
    h_n4_negative_k4_term, inequality_1_sides, shifted_quotient, shifted_quotient_of, CodegreeCoefficients,
    InequalitySides, ShiftedQuotient, MAX_COUNTING_ORDER,
};
pub use record::ChromaticRecord;
pub use table::{labeled_table, LabeledTable, PolyClass};
