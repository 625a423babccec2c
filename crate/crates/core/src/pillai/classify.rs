use serde::Serialize;

use crate::arith::{is_fermat_prime, is_mersenne_prime, is_prime, power_of_base_u64};

/// Triples with three or more solutions outside the parametric families, `p < q`.
pub(crate) const SPORADIC: [(u64, u64, u64); 13] = [
    (2, 3, 1),
    (2, 3, 5),
    (2, 3, 7),
    (2, 3, 11),
    (2, 3, 13),
    (2, 3, 17),
    (2, 5, 3),
    (2, 5, 7),
    (2, 5, 9),
    (2, 11, 7),
    (3, 5, 2),
    (3, 5, 4),
    (3, 13, 10),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FermatForm {
    /// `c = F - 2`.
    FMinus2,
    /// `c = 2F - 1`.
    TwoFMinus1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MersenneForm {
    /// `c = M + 2`.
    MPlus2,
    /// `c = 2M + 1`.
    TwoMPlus1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ExceptionKind {
    Sporadic { name: String },
    /// `F = 2^t + 1 > 5` prime.
    FermatFamily { form: FermatForm, t: u32 },
    /// `M = 2^t - 1 > 3` prime.
    MersenneFamily { form: MersenneForm, t: u32 },
    /// `(3, 3^n + (-1)^delta 2, 2)`.
    ThreePowerFamily { n: u32, delta: u8 },
    /// `(2, 2^t + (-1)^delta 3, 3)`.
    TwoPowerFamily { t: u32, delta: u8 },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionClassification {
    /// Ordered so that `p < q`.
    pub triple: (u64, u64, u64),
    pub kind: ExceptionKind,
}

impl ExceptionClassification {
    pub fn is_exception(&self) -> bool {
        self.kind != ExceptionKind::None
    }
}

/// `t` with `n = 2^t + offset`, if any.
fn two_exponent(n: u64, offset: i64) -> Option<u32> {
    let m = n as i128 - offset as i128;
    if m < 1 {
        return None;
    }
    power_of_base_u64(m as u64, 2)
}

fn family_kind(p: u64, q: u64, c: u64) -> ExceptionKind {
    if p == 2 {
        if let Some(t) = two_exponent(q, 1).filter(|&t| q > 5 && is_fermat_prime(t)) {
            if c == q - 2 {
                return ExceptionKind::FermatFamily { form: FermatForm::FMinus2, t };
            }
            if c == 2 * q - 1 {
                return ExceptionKind::FermatFamily { form: FermatForm::TwoFMinus1, t };
            }
        }
        if let Some(t) = two_exponent(q, -1).filter(|&t| q > 3 && is_mersenne_prime(t)) {
            if c == q + 2 {
                return ExceptionKind::MersenneFamily { form: MersenneForm::MPlus2, t };
            }
            if c == 2 * q + 1 {
                return ExceptionKind::MersenneFamily { form: MersenneForm::TwoMPlus1, t };
            }
        }
        if c == 3 {
            for (delta, offset) in [(0u8, 3i64), (1, -3)] {
                if let Some(t) = two_exponent(q, offset) {
                    let excluded = delta == 1 && [2, 3, 7].contains(&t);
                    if t > 1 && !excluded {
                        return ExceptionKind::TwoPowerFamily { t, delta };
                    }
                }
            }
        }
    }
    if p == 3 && c == 2 {
        for (delta, offset) in [(0u8, 2i64), (1, -2)] {
            let m = q as i128 - offset as i128;
            if m < 1 {
                continue;
            }
            if let Some(n) = power_of_base_u64(m as u64, 3) {
                if n > 1 && (n, delta) != (3, 1) {
                    return ExceptionKind::ThreePowerFamily { n, delta };
                }
            }
        }
    }
    ExceptionKind::None
}

/// Matches `(p, q, c)` or `(q, p, c)` against the exceptional triples for the
/// general sign equation with prime bases.
pub fn classify_exception(p: u64, q: u64, c: u64) -> ExceptionClassification {
    let (p, q) = (p.min(q), p.max(q));
    let triple = (p, q, c);
    let kind = if p == q || !is_prime(p as u128) || !is_prime(q as u128) {
        ExceptionKind::None
    } else if SPORADIC.contains(&triple) {
        ExceptionKind::Sporadic { name: format!("({p},{q},{c})") }
    } else {
        family_kind(p, q, c)
    };
    ExceptionClassification { triple, kind }
}

/// Exceptions for `|p^x - q^y| = c`: four sporadic triples and `(2, F, F - 2)` for
/// every Fermat prime `F`, including 3 and 5.
pub fn is_theorem2_exception(p: u64, q: u64, c: u64) -> bool {
    let (p, q) = (p.min(q), p.max(q));
    if [(3, 5, 2), (2, 3, 5), (2, 3, 7), (2, 11, 7)].contains(&(p, q, c)) {
        return true;
    }
    p == 2
        && c + 2 == q
        && two_exponent(q, 1).is_some_and(|t| t >= 1 && is_fermat_prime(t))
}
