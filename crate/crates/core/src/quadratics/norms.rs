//! Representations of `+-p^t` as norms `r^2 - D s^2` with side conditions
//! `r, s != 0`, `gcd(r, sD) = 1` and `u | s`, and the least exponent for which
//! such a representation exists.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::forms::is_squarefree;
use super::pell::pell_fundamental;
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// `sign * p^exponent = r^2 - D s^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormWitness {
    #[serde(serialize_with = "crate::serde_text::display")]
    pub r: BigInt,
    #[serde(serialize_with = "crate::serde_text::display")]
    pub s: BigInt,
    pub sign: i8,
    pub exponent: u32,
}

/// Checked parameters of a norm-representation problem.
#[derive(Debug, Clone, Copy)]
struct NormProblem {
    d: i64,
    u: u64,
    p: u64,
}

impl NormProblem {
    fn new(d: i64, u: u64, p: u64) -> Result<Self> {
        if d == 0 || !is_squarefree(d.unsigned_abs()) {
            return Err(Error::NotSquarefree(d));
        }
        if u == 0 {
            return Err(Error::InvalidArgument("u must be positive".into()));
        }
        if p == 2 || !is_prime(p as u128) {
            return Err(Error::NotPrime(format!("{p} (odd prime required)")));
        }
        if u % p == 0 || d.unsigned_abs() % p == 0 {
            return Err(Error::InvalidArgument(format!("{p} divides u*D")));
        }
        Ok(NormProblem { d, u, p })
    }

    fn modulus(&self, t: u32) -> Result<i128> {
        (self.p as i128)
            .checked_pow(t)
            .filter(|&m| m < 1i128 << 62)
            .ok_or_else(|| Error::InvalidArgument(format!("{}^{t} exceeds the search range", self.p)))
    }

    /// Any representation of `+p^t` or `-p^t`.
    fn represent(&self, t: u32) -> Result<Option<NormWitness>> {
        let m = self.modulus(t)?;
        let u = self.u as i128;
        let found = if self.d < 0 {
            let dd = self.d.unsigned_abs() as i128 * u * u;
            cornacchia_all(dd, m, self.p as i128, t).into_iter().map(|(r, k)| (r, k, 1i8)).next()
        } else if self.d == 1 {
            difference_of_squares(u, self.p as i128, t)
        } else {
            let dd = self.d as i128 * u * u;
            [1i8, -1]
                .into_iter()
                .find_map(|sign| generalized_pell(dd, sign as i128 * m, self.p as i128, t).map(|(r, k)| (r, k, sign)))
        };
        Ok(found.map(|(r, k, sign)| NormWitness {
            r,
            s: k * BigInt::from(self.u),
            sign,
            exponent: t,
        }))
    }
}

fn check_witness(d: i64, p: u64, w: &NormWitness) -> bool {
    let norm = &w.r * &w.r - BigInt::from(d) * &w.s * &w.s;
    let target = BigInt::from(w.sign) * BigInt::from(p).pow(w.exponent);
    norm == target
        && !w.r.is_zero()
        && !w.s.is_zero()
        && w.r.gcd(&(&w.s * BigInt::from(d))).is_one()
}

/// A witness for `+-p^t = r^2 - D s^2` under the side conditions, if one exists.
pub fn norm_representation(d: i64, u: u64, p: u64, t: u32) -> Result<Option<NormWitness>> {
    let problem = NormProblem::new(d, u, p)?;
    let w = problem.represent(t)?;
    if let Some(w) = &w {
        debug_assert!(check_witness(d, p, w), "bad witness {w:?}");
    }
    Ok(w)
}

/// The least `t <= t_max` for which `+-p^t` is such a norm.
pub fn norm_least_exponent(d: i64, u: u64, p: u64, t_max: u32) -> Result<Option<u32>> {
    let problem = NormProblem::new(d, u, p)?;
    for t in 1..=t_max {
        if problem.represent(t)?.is_some() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Checks that every expressible exponent `n <= n_max` is a multiple of the least one.
pub fn lemma1_divisibility_check(d: i64, u: u64, p: u64, n_max: u32) -> Result<bool> {
    let problem = NormProblem::new(d, u, p)?;
    let mut least = None;
    for n in 1..=n_max {
        if problem.represent(n)?.is_some() {
            match least {
                None => least = Some(n),
                Some(t) if n % t != 0 => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

fn mul_mod(a: i128, b: i128, m: i128) -> i128 {
    (a * b).rem_euclid(m)
}

fn pow_mod(mut base: i128, mut e: i128, m: i128) -> i128 {
    let mut acc = 1 % m;
    base = base.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Square roots of `a` modulo the odd prime `p` (Tonelli-Shanks).
fn sqrt_mod_prime(a: i128, p: i128) -> Option<i128> {
    let a = a.rem_euclid(p);
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1).expect("non-residue exists");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Both square roots of `a` modulo `p^t` (`p` odd, `p` not dividing `a`), via Hensel lifting.
fn sqrt_mod_prime_power(a: i128, p: i128, t: u32) -> Option<[i128; 2]> {
    let mut z = sqrt_mod_prime(a, p)?;
    let mut modulus = p;
    for _ in 1..t {
        modulus *= p;
        let f = (z * z - a).rem_euclid(modulus);
        let inv = (2 * z).extended_gcd(&modulus).x.rem_euclid(modulus);
        z = (z - mul_mod(f, inv, modulus)).rem_euclid(modulus);
    }
    Some([z, modulus - z])
}

/// Primitive solutions of `x^2 + d y^2 = m` (Cornacchia), up to sign.
fn cornacchia_all(d: i128, m: i128, p: i128, t: u32) -> Vec<(BigInt, BigInt)> {
    let Some(roots) = sqrt_mod_prime_power(-d, p, t) else {
        return Vec::new();
    };
    let bound = m.sqrt();
    let mut out = Vec::new();
    for root in roots {
        let z = if 2 * root > m { m - root } else { root };
        let (mut r0, mut r1) = (m, z);
        while r1 > bound || r1 * r1 > m {
            (r0, r1) = (r1, r0 % r1);
        }
        let _ = r0;
        let rest = m - r1 * r1;
        if rest % d != 0 {
            continue;
        }
        let y2 = rest / d;
        let y = y2.sqrt();
        if y * y == y2 && y != 0 && r1 != 0 && r1.gcd(&y) == 1 {
            out.push((BigInt::from(r1), BigInt::from(y)));
            if d == 1 {
                out.push((BigInt::from(y), BigInt::from(r1)));
            }
        }
    }
    out
}

/// `r^2 - u^2 k^2 = +-p^t` by splitting into the factors `r - uk` and `r + uk`.
fn difference_of_squares(u: i128, p: i128, t: u32) -> Option<(BigInt, BigInt, i8)> {
    for i in 0..=t {
        let lo = p.pow(i);
        let hi = p.pow(t - i);
        for (f1, f2) in [(lo, hi), (-lo, -hi), (lo, -hi), (-lo, hi)] {
            // r - uk = f1, r + uk = f2
            if (f1 + f2) % 2 != 0 || (f2 - f1) % (2 * u) != 0 {
                continue;
            }
            let r = (f1 + f2) / 2;
            let k = (f2 - f1) / (2 * u);
            if r != 0 && k != 0 && r.gcd(&(k * u)) == 1 {
                return Some((BigInt::from(r), BigInt::from(k), (f1 * f2).signum() as i8));
            }
        }
    }
    None
}

/// A primitive solution of `x^2 - d y^2 = n` for nonsquare `d > 0` and
/// `|n| = p^t`, by the continued-fraction method of Lagrange, Matthews and Mollin.
fn generalized_pell(d: i128, n: i128, p: i128, t: u32) -> Option<(BigInt, BigInt)> {
    let abs_n = n.abs();
    let roots = sqrt_mod_prime_power(d, p, t)?;
    let sqrt_d = d.sqrt();
    let negative_unit = u64::try_from(d)
        .ok()
        .and_then(|dd| pell_fundamental(dd, -1).ok().flatten())
        .map(|s| (BigInt::from(s.x().clone()), BigInt::from(s.y().clone())));
    let d_big = BigInt::from(d);
    for root in roots {
        let z = if 2 * root > abs_n { root - abs_n } else { root };
        let (p0, q0) = (z, abs_n);
        let (mut pi, mut qi) = (p0, q0);
        let (mut a_prev, mut a_cur) = (BigInt::zero(), BigInt::one()); // A_{-2}, A_{-1}
        let (mut b_prev, mut b_cur) = (BigInt::one(), BigInt::zero()); // B_{-2}, B_{-1}
        let mut seen = HashSet::new();
        for i in 0.. {
            if i >= 1 && qi.abs() == 1 {
                // (G_{i-1}, B_{i-1}) has norm (-1)^i Q_i Q_0
                let g = BigInt::from(q0) * &a_cur - BigInt::from(p0) * &b_cur;
                let y = b_cur.clone();
                let norm = &g * &g - &d_big * &y * &y;
                if norm == BigInt::from(n) {
                    return Some((g.abs(), y.abs()));
                }
                if let Some((ux, uy)) = &negative_unit {
                    let x2 = &g * ux + &d_big * &y * uy;
                    let y2 = &g * uy + &y * ux;
                    return Some((x2.abs(), y2.abs()));
                }
            }
            if !seen.insert((pi, qi)) {
                break;
            }
            let a = if qi > 0 {
                Integer::div_floor(&(pi + sqrt_d), &qi)
            } else {
                Integer::div_floor(&(pi + sqrt_d + 1), &qi)
            };
            let a_big = BigInt::from(a);
            let a_next = &a_big * &a_cur + &a_prev;
            let b_next = &a_big * &b_cur + &b_prev;
            a_prev = std::mem::replace(&mut a_cur, a_next);
            b_prev = std::mem::replace(&mut b_cur, b_next);
            pi = a * qi - pi;
            qi = (d - pi * pi) / qi;
        }
    }
    None
}
