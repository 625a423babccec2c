//! Exhaustive and certified solvers for exponential Diophantine equations.
//!
//! The central object is the generalized Pillai equation
//!
//! ```text
//! (-1)^u r a^x + (-1)^v s b^y = c        x, y >= 0, u, v in {0, 1}
//! ```
//!
//! together with a handful of auxiliary equations (`p^r +- p^s + 1 = z^2`,
//! `z^2 = w^r +- w^s +- 1`, `(1 + sqrt(-D))^r = m +- sqrt(-D)`) and the
//! exponent bound for `x^2 + C = y^n` with prime-power `x`, `y`.
//!
//! Modules:
//! - [`arith`]: primality, roots, perfect powers, valuations, factorization.
//! - [`quadratics`]: continued fractions of `sqrt(D)`, Pell equations, norm
//!   representations and class-group exponents of imaginary quadratic fields.
//! - [`special_eqs`]: window-complete solvers for the auxiliary equations and
//!   the `x^2 + C = y^n` bound and enumerator.
//! - [`pillai`]: the bound engine, certified enumeration, family equivalence and
//!   the classification of exceptional `(p, q, c)` triples.

pub mod arith;
pub mod error;
pub mod pillai;
pub mod quadratics;
mod serde_text;
pub mod special_eqs;

pub use error::{Error, Result};
