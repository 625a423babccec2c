//! Deterministic primality testing and generation of Fermat and Mersenne primes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Upper limit of the range on which Miller-Rabin with the first thirteen primes
/// as witnesses is known to be deterministic (Sorenson and Webster).
const MR13_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

/// Deterministic primality test.
///
/// Below `2^64` this is a strong-pseudoprime test with the first twelve primes
/// as witnesses; up to `3.3 * 10^24` the thirteen-prime witness set is used.
/// Anything larger falls back to trial division, which is exact but slow.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = p as u128;
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    if let Ok(small) = u64::try_from(n) {
        return SMALL_PRIMES[..12].iter().all(|&w| strong_probable_prime_u64(small, w));
    }
    if n < MR13_LIMIT {
        let big = BigUint::from(n);
        return SMALL_PRIMES
            .iter()
            .all(|&w| strong_probable_prime_big(&big, &BigUint::from(w)));
    }
    trial_division(n)
}

/// Primality of an arbitrary-precision value in the range supported by [`is_prime`].
///
/// Returns `None` when the value does not fit in 128 bits.
pub fn is_prime_big(n: &BigUint) -> Option<bool> {
    n.to_u128().map(is_prime)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, witness: u64) -> bool {
    let d_full = n - 1;
    let shift = d_full.trailing_zeros();
    let d = d_full >> shift;
    let mut x = pow_mod_u64(witness, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..shift {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn strong_probable_prime_big(n: &BigUint, witness: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let shift = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> shift;
    let mut x = witness.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..shift {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

fn trial_division(n: u128) -> bool {
    let mut d: u128 = 43;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Lucas-Lehmer test for `2^t - 1`.
pub fn is_mersenne_prime(t: u32) -> bool {
    match t {
        0 | 1 => false,
        2 => true,
        _ if !is_prime(t as u128) => false,
        _ => {
            let m = (BigUint::one() << t) - 1u32;
            let two = BigUint::from(2u32);
            let mut s = BigUint::from(4u32);
            for _ in 0..t - 2 {
                s = (&s * &s + &m - &two) % &m;
            }
            s.is_zero()
        }
    }
}

/// Pepin's test for `2^t + 1`, `t >= 1`. Only powers of two can give primes.
pub fn is_fermat_prime(t: u32) -> bool {
    if t == 0 || !t.is_power_of_two() {
        return false;
    }
    if t == 1 {
        return true;
    }
    let f = (BigUint::one() << t) + 1u32;
    let exp = (&f - 1u32) >> 1;
    BigUint::from(3u32).modpow(&exp, &f) == &f - 1u32
}

/// All primes `2^t + 1 <= limit` with `t >= 1`, ascending.
pub fn fermat_primes(limit: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut t = 1u32;
    loop {
        let candidate = (BigUint::one() << t) + 1u32;
        if &candidate > limit {
            break;
        }
        if is_fermat_prime(t) {
            out.push(candidate);
        }
        t += 1;
    }
    out
}

/// All primes `2^t - 1 <= limit`, ascending.
pub fn mersenne_primes(limit: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut t = 2u32;
    loop {
        let candidate = (BigUint::one() << t) - 1u32;
        if &candidate > limit {
            break;
        }
        if is_mersenne_prime(t) {
            out.push(candidate);
        }
        t += 1;
    }
    out
}

/// Primes up to `limit` by a plain sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}
