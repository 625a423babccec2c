use num_integer::Integer;
use serde::Serialize;

use crate::arith::{
    factor, is_prime, is_unit_or_prime_power, jacobi, lcm_all, perfect_power_u64, squarefree_split,
    SquarefreeSplit,
};
use crate::error::{Error, Result};
use crate::quadratics::class_exponent;

/// `(x, y, n)` triples excluded from the divisibility claim.
pub const LISTED_EXCEPTIONS: [(u64, u64, u32); 2] = [(7, 3, 4), (401, 11, 5)];

/// The exponent bound `N = 2 * 3^u * h(-P) * lcm(q - (-P/q))` for `x^2 + C = y^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem4Bound {
    pub split: SquarefreeSplit,
    pub u_flag: u32,
    pub h: u64,
    pub lcm_part: u64,
    pub n: u64,
}

impl Theorem4Bound {
    pub fn c(&self) -> u64 {
        self.split.c
    }
}

/// `(-P / q)`, with the value 0 at `q = 2`.
fn chi(p: u64, q: u64) -> i64 {
    if q == 2 {
        0
    } else {
        jacobi(-(p as i64), q).expect("q is odd") as i64
    }
}

pub fn theorem4_bound(c: u64) -> Result<Theorem4Bound> {
    let split = squarefree_split(c)?;
    let p = split.p;
    let u_flag = u32::from(p > 3 && p % 8 == 3);
    // h is the exponent of the class group of Q(sqrt(-P))
    let h = class_exponent(p)?.exponent;
    let lcm_part = lcm_all(factor(split.q)?.primes().map(|q| (q as i64 - chi(p, q)) as u64));
    let n = 2 * 3u64.pow(u_flag) * h * lcm_part;
    Ok(Theorem4Bound { split, u_flag, h, lcm_part, n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PowerSolutionStatus {
    ListedException,
    Cube,
    DividesBound,
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSolution {
    pub x: u64,
    pub y: u64,
    pub n: u32,
    pub status: PowerSolutionStatus,
}

/// Largest `x` for which `x^2 + C` still fits in a `u64`.
const X_CEILING: u64 = 1 << 31;

/// Solutions of `x^2 + C = y^n` with `1 <= x <= x_max`, `x` and `y` each 1 or a prime
/// power, `gcd(x, y) = 1`, and `n` the largest exponent for which `x^2 + C` is an
/// `n`-th power.
pub fn theorem4_enumerate(c: u64, x_max: u64) -> Result<Vec<PowerSolution>> {
    let bound = theorem4_bound(c)?;
    if x_max > X_CEILING || c > u64::MAX / 2 {
        return Err(Error::InvalidArgument(format!("x_max = {x_max} exceeds 2^31")));
    }
    let mut out = Vec::new();
    for x in 1..=x_max {
        if !is_unit_or_prime_power(x) {
            continue;
        }
        let v = x * x + c;
        let (y, n) = perfect_power_u64(v).unwrap_or((v, 1));
        // y is not itself a perfect power, so "prime power" means prime
        if !is_prime(y as u128) || x.gcd(&y) != 1 {
            continue;
        }
        let status = if LISTED_EXCEPTIONS.contains(&(x, y, n)) {
            PowerSolutionStatus::ListedException
        } else if n == 3 {
            PowerSolutionStatus::Cube
        } else if bound.n % n as u64 == 0 {
            PowerSolutionStatus::DividesBound
        } else {
            PowerSolutionStatus::Violation
        };
        out.push(PowerSolution { x, y, n, status });
    }
    Ok(out)
}
