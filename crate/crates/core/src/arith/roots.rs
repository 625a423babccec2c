use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `(floor(sqrt(n)), exact)`.
pub fn integer_sqrt(n: &BigUint) -> (BigUint, bool) {
    let root = n.sqrt();
    let exact = &root * &root == *n;
    (root, exact)
}

/// Exact square root of a machine integer, if it is a square.
pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Returns `e` such that `n = base^e`, or `None`.
///
/// Works by repeated exact division, so the answer never depends on
/// floating-point logarithms.
pub fn power_of_base(n: &BigUint, base: &BigUint) -> Option<u32> {
    assert!(*base > BigUint::one(), "base must exceed 1");
    if n.is_zero() {
        return None;
    }
    let mut rest = n.clone();
    let mut e = 0u32;
    while !rest.is_one() {
        let (q, r) = rest.div_rem(base);
        if !r.is_zero() {
            return None;
        }
        rest = q;
        e += 1;
    }
    Some(e)
}

/// Machine-integer version of [`power_of_base`].
pub fn power_of_base_u64(mut n: u64, base: u64) -> Option<u32> {
    assert!(base > 1, "base must exceed 1");
    if n == 0 {
        return None;
    }
    let mut e = 0;
    while n > 1 {
        if n % base != 0 {
            return None;
        }
        n /= base;
        e += 1;
    }
    Some(e)
}

/// Largest-exponent representation `n = base^k` with `k > 1`, if any.
pub fn is_perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    if *n < BigUint::from(4u8) {
        return None;
    }
    if let Some(small) = n.to_u64() {
        return perfect_power_u64(small).map(|(b, k)| (BigUint::from(b), k));
    }
    let bits = n.bits() as u32;
    for k in (2..=bits).rev() {
        let root = n.nth_root(k);
        if root > BigUint::one() && root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

/// Machine-integer version of [`is_perfect_power`].
pub fn perfect_power_u64(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    let bits = 64 - n.leading_zeros();
    for k in (2..=bits).rev() {
        let root = n.nth_root(k);
        if root > 1 && root.checked_pow(k) == Some(n) {
            return Some((root, k));
        }
    }
    None
}

/// `v_p(b)`: the largest `e` with `p^e | b`.
pub fn valuation(p: &BigUint, b: &BigInt) -> Result<u32> {
    if b.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if *p < BigUint::from(2u8) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if let Some(small) = p.to_u128() {
        if !super::is_prime(small) {
            return Err(Error::NotPrime(p.to_string()));
        }
    }
    let mut rest = b.abs().to_biguint().expect("absolute value");
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}
