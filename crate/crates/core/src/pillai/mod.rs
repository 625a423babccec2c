//! Solutions of `(-1)^u r a^x + (-1)^v s b^y = c` in nonnegative `x`, `y`.
//!
//! Certified enumeration (r = s = 1, gcd(a, b) = 1) takes its exponent ceilings from
//! a Mignotte-type bound; bounded enumeration accepts any instance and a user window.

mod bound;
mod classify;
mod enumerate;
mod family;
mod residues;
mod scan;
mod table;
mod types;

pub use bound::{mignotte_bound, mignotte_rhs, BoundCertificate, BoundMethod, CATALAN_WINDOW, G_FLOOR};
pub use classify::{
    classify_exception, is_theorem2_exception, ExceptionClassification, ExceptionKind, FermatForm,
    MersenneForm,
};
pub use enumerate::{certify, count_solutions, enumerate_solutions};
pub use family::same_family;
pub use scan::{scan_box, ScanItem};
pub use table::{
    verify_lemma9_families, verify_theorem3_table, ExpectedRow, ExpectedTable, FamilyWindows,
    TableReport, TableRow,
};
pub use types::{EquationForm, PillaiInstance, PillaiSolution, SolutionSet};
