//! Continued fractions of quadratic surds and the Pell equation.

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Continued fraction `sqrt(D) = [a0; period, period, ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    d: u64,
    a0: u64,
    period: Vec<u64>,
}

impl ContinuedFraction {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a0(&self) -> u64 {
        self.a0
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// Partial quotient `a_i`.
    pub fn term(&self, i: usize) -> u64 {
        if i == 0 {
            self.a0
        } else {
            self.period[(i - 1) % self.period.len()]
        }
    }
}

/// Expands `sqrt(D)` until the `(P, Q)` state returns to its value after the first step.
pub fn cf_sqrt(d: u64) -> Result<ContinuedFraction> {
    let a0 = d.sqrt();
    if a0 * a0 == d {
        return Err(Error::PerfectSquare(d));
    }
    // state (m, q) for the complete quotient (m + sqrt(D)) / q
    let mut m = a0;
    let mut q = d - a0 * a0;
    let first = (m, q);
    let mut period = Vec::new();
    loop {
        let a = (a0 + m) / q;
        period.push(a);
        m = a * q - m;
        q = (d - m * m) / q;
        if (m, q) == first {
            break;
        }
    }
    Ok(ContinuedFraction { d, a0, period })
}

/// First `k` convergents `p_i / q_i`.
pub fn convergents(cf: &ContinuedFraction, k: usize) -> Vec<(BigUint, BigUint)> {
    let mut out = Vec::with_capacity(k);
    let (mut p_prev, mut p) = (BigUint::one(), BigUint::from(cf.a0));
    let (mut q_prev, mut q) = (BigUint::zero(), BigUint::one());
    for i in 0..k {
        if i > 0 {
            let a = BigUint::from(cf.term(i));
            let p_next = &a * &p + &p_prev;
            let q_next = &a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        out.push((p.clone(), q.clone()));
    }
    out
}

/// A solution of `X^2 - D Y^2 = norm` with `norm = +-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PellSolution {
    d: u64,
    #[serde(serialize_with = "crate::serde_text::display")]
    x: BigUint,
    #[serde(serialize_with = "crate::serde_text::display")]
    y: BigUint,
    norm: i8,
}

impl PellSolution {
    pub fn new(d: u64, x: BigUint, y: BigUint, norm: i8) -> Result<Self> {
        if norm != 1 && norm != -1 {
            return Err(Error::InconsistentPell(format!("norm {norm} is not +-1")));
        }
        if !pell_identity_holds(d, &x, &y, norm) {
            return Err(Error::InconsistentPell(format!("{x}^2 - {d}*{y}^2 != {norm}")));
        }
        Ok(PellSolution { d, x, y, norm })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    pub fn norm(&self) -> i8 {
        self.norm
    }
}

pub(crate) fn pell_identity_holds(d: u64, x: &BigUint, y: &BigUint, norm: i8) -> bool {
    let lhs = x * x;
    let rhs = BigUint::from(d) * y * y;
    match norm {
        1 => lhs == rhs + 1u8,
        -1 => lhs + 1u8 == rhs,
        _ => false,
    }
}

/// Least positive solution of `X^2 - D Y^2 = norm`, read off the convergent at the
/// end of the first (norm `-1` or even period) or second period.
pub fn pell_fundamental(d: u64, norm: i8) -> Result<Option<PellSolution>> {
    if norm != 1 && norm != -1 {
        return Err(Error::InvalidArgument(format!("norm {norm} is not +-1")));
    }
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    let index = match (norm, len % 2) {
        (-1, 0) => return Ok(None),
        (-1, _) => len - 1,
        (_, 0) => len - 1,
        _ => 2 * len - 1,
    };
    let (x, y) = convergents(&cf, index + 1).pop().expect("nonempty");
    PellSolution::new(d, x, y, norm).map(Some)
}

/// `(X_n, Y_n)` with `X_n + Y_n sqrt(D) = (X_1 + Y_1 sqrt(D))^n`.
pub fn pell_power(base: &PellSolution, n: u32) -> (BigUint, BigUint) {
    assert!(n >= 1, "exponent must be positive");
    let d = BigUint::from(base.d);
    let mul = |(a, b): (&BigUint, &BigUint), (c, e): (&BigUint, &BigUint)| {
        (a * c + &d * b * e, a * e + b * c)
    };
    let mut acc = (BigUint::one(), BigUint::zero());
    let mut sq = (base.x.clone(), base.y.clone());
    let mut k = n;
    loop {
        if k & 1 == 1 {
            acc = mul((&acc.0, &acc.1), (&sq.0, &sq.1));
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        sq = mul((&sq.0, &sq.1), (&sq.0, &sq.1));
    }
    acc
}

/// Stormer's hypothesis for a solution `(X, Y)`: every prime factor of `Y` divides `D`.
///
/// When it holds, `(X, Y)` is the least solution of its norm.
pub fn stormer_least(d: u64, x: &BigUint, y: &BigUint, norm: i8) -> Result<bool> {
    if y.is_zero() || x.is_zero() || !pell_identity_holds(d, x, y, norm) {
        return Err(Error::InconsistentPell(format!("{x}^2 - {d}*{y}^2 != {norm}")));
    }
    // strip every factor Y shares with D; what remains has only primes outside D
    let d_big = BigUint::from(d);
    let mut rest = y.clone();
    loop {
        let g = rest.gcd(&d_big);
        if g.is_one() {
            break;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
    Ok(rest.is_one())
}
