use num_integer::Integer;
use serde::Serialize;

use super::is_prime;
use crate::error::{Error, Result};

/// A positive integer with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Factor `n >= 1` by trial division followed by Pollard's rho (Brent variant).
pub fn factor(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
    }
    split(rest, &mut primes);
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInteger { value: n, factors })
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n as u128) {
        out.push(n);
        return;
    }
    let sqrt = num_integer::Roots::sqrt(&n);
    if sqrt * sqrt == n {
        split(sqrt, out);
        split(sqrt, out);
        return;
    }
    let mut seed = 1;
    let d = loop {
        if let Some(d) = brent(n, seed) {
            break d;
        }
        seed += 1;
    };
    split(d, out);
    split(n / d, out);
}

fn brent(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let m = 128;
    let mut g = 1;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = ((q as u128 * x.abs_diff(y) as u128) % n as u128) as u64;
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Split of an even `C` into squarefree `P`, `Q` with `C / P` a square and
/// `P * Q` the radical of `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquarefreeSplit {
    pub c: u64,
    pub p: u64,
    pub q: u64,
}

/// `P` collects the primes with odd exponent in `C`, `Q` the primes with even
/// positive exponent.
pub fn squarefree_split(c: u64) -> Result<SquarefreeSplit> {
    if c == 0 || c % 2 == 1 {
        return Err(Error::OddValue(format!("C = {c}")));
    }
    let f = factor(c)?;
    let (mut p, mut q) = (1u64, 1u64);
    for &(prime, e) in f.factors() {
        if e % 2 == 1 {
            p *= prime;
        } else {
            q *= prime;
        }
    }
    Ok(SquarefreeSplit { c, p, q })
}
