//! Window-complete solvers for the auxiliary exponential equations and the
//! exponent bound for `x^2 + C = y^n`.
//!
//! Every solver is exhaustive inside its caller-supplied exponent window; the
//! returned records are re-verified against their defining equation when built.

mod record;
mod sieve;
mod solvers;
mod theorem4;

pub use record::{EquationTag, SpecialSolutionRecord};
pub use solvers::{
    lemma4_scan, solve_2_minus, solve_2_plus, solve_lemma2, solve_p_minus, solve_p_plus,
};
pub use theorem4::{
    theorem4_bound, theorem4_enumerate, PowerSolution, PowerSolutionStatus, Theorem4Bound,
    LISTED_EXCEPTIONS,
};
