use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Below this the linear-forms estimate gives nothing; `G` is never taken smaller.
pub const G_FLOOR: f64 = 2409.08;

const SLOPE: f64 = 22.997;
const SHIFT: f64 = 2.405;
const SAFETY: f64 = 1.001;

/// Exponent window used for `c = 1`, where the bound does not apply.
pub const CATALAN_WINDOW: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    MignotteFixedPoint,
    #[serde(rename = "floor_1m")]
    Floor1m,
    Uncertified,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCertificate {
    /// Present only for [`BoundMethod::MignotteFixedPoint`].
    pub g_star: Option<f64>,
    pub x_max: u32,
    pub y_max: u32,
    pub method: BoundMethod,
    pub conditions_met: bool,
}

impl BoundCertificate {
    pub fn uncertified(x_max: u32, y_max: u32) -> Self {
        BoundCertificate { g_star: None, x_max, y_max, method: BoundMethod::Uncertified, conditions_met: false }
    }

    pub(crate) fn catalan_window() -> Self {
        BoundCertificate {
            g_star: None,
            x_max: CATALAN_WINDOW,
            y_max: CATALAN_WINDOW,
            method: BoundMethod::Floor1m,
            conditions_met: false,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.method != BoundMethod::Uncertified
    }
}

/// `2 ln c / (ln a ln b) + 22.997 (ln G + 2.405)^2`.
pub fn mignotte_rhs(a: u64, b: u64, c: u64, g: f64) -> f64 {
    let (la, lb, lc) = ((a as f64).ln(), (b as f64).ln(), (c as f64).ln());
    2.0 * lc / (la * lb) + SLOPE * (g.ln() + SHIFT).powi(2)
}

/// Ceilings on `x` and `y` for `a^x - b^y = +-c` with `gcd(a, b) = 1`, `c > 1`.
///
/// The right-hand side is symmetric in `a` and `b`, so one `G` covers both signs.
pub fn mignotte_bound(a: u64, b: u64, c: u64) -> Result<BoundCertificate> {
    if a < 2 || b < 2 || a.gcd(&b) != 1 {
        return Err(Error::CertificationUnavailable(format!("gcd({a}, {b}) != 1")));
    }
    if c <= 1 {
        return Err(Error::CertificationUnavailable(format!("c = {c} <= 1")));
    }
    let mut g = G_FLOOR;
    loop {
        let next = G_FLOOR.max(mignotte_rhs(a, b, c, g));
        let done = (next - g).abs() <= 1e-9 * g;
        g = next;
        if done {
            break;
        }
    }
    let g_star = g * SAFETY;
    debug_assert!(g_star >= mignotte_rhs(a, b, c, g_star));
    let ceil = |v: f64| -> u32 { v.ceil() as u32 };
    Ok(BoundCertificate {
        g_star: Some(g_star),
        y_max: ceil(g_star * (a as f64).ln()),
        x_max: ceil(g_star * (b as f64).ln()),
        method: BoundMethod::MignotteFixedPoint,
        conditions_met: true,
    })
}
