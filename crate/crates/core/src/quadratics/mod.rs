//! Quadratic-field machinery: continued fractions of `sqrt(D)`, Pell equations,
//! Stormer's criterion, norm representations and class-group exponents.

mod forms;
mod norms;
mod pell;

pub use forms::{class_exponent, field_discriminant, reduced_forms, ClassGroupInfo, QuadForm};
pub use norms::{lemma1_divisibility_check, norm_least_exponent, norm_representation, NormWitness};
pub use pell::{
    cf_sqrt, convergents, pell_fundamental, pell_power, stormer_least, ContinuedFraction,
    PellSolution,
};
