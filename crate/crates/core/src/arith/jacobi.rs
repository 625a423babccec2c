use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi_symbol(a: &BigInt, n: &BigInt) -> Result<i8> {
    if n.sign() != Sign::Plus || n.is_even() {
        return Err(Error::InvalidModulus(n.to_string()));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1i8;
    let three = BigInt::from(3u8);
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        let n_mod_8 = (&n & BigInt::from(7u8)).to_u8_lossy();
        if twos % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a & &three) == three && (&n & &three) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { result } else { 0 })
}

/// Convenience wrapper over machine integers.
pub fn jacobi(a: i64, n: u64) -> Result<i8> {
    jacobi_symbol(&BigInt::from(a), &BigInt::from(n))
}

trait LowByte {
    fn to_u8_lossy(&self) -> u8;
}

impl LowByte for BigInt {
    fn to_u8_lossy(&self) -> u8 {
        let (_, bytes) = self.abs().to_bytes_le();
        bytes.first().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::{is_prime, pow_mod_u64};

    fn euler(a: i64, p: u64) -> i8 {
        let r = a.rem_euclid(p as i64) as u64;
        if r == 0 {
            return 0;
        }
        match pow_mod_u64(r, (p - 1) / 2, p) {
            1 => 1,
            v if v == p - 1 => -1,
            _ => unreachable!(),
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(jacobi(1, 9).unwrap(), 1);
        assert_eq!(jacobi(2, 15).unwrap(), 1);
        assert_eq!(jacobi(6, 15).unwrap(), 0);
    }

    #[test]
    fn rejects_even_or_nonpositive_modulus() {
        assert!(jacobi(3, 8).is_err());
        assert!(jacobi(3, 0).is_err());
        assert!(jacobi_symbol(&BigInt::from(3), &BigInt::from(-7)).is_err());
    }

    #[test]
    fn matches_euler_criterion_on_primes() {
        for p in (3..=500u64).filter(|&p| is_prime(p as u128)) {
            for a in -600i64..=600 {
                assert_eq!(jacobi(a, p).unwrap(), euler(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn multiplicative_in_modulus() {
        for m in (1..=500u64).step_by(2) {
            for n in (1..=500u64 / m).step_by(2) {
                for a in -40i64..40 {
                    let lhs = jacobi(a, m * n).unwrap();
                    let rhs = jacobi(a, m).unwrap() * jacobi(a, n).unwrap();
                    assert_eq!(lhs, rhs, "a={a} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn zero_iff_common_factor() {
        for n in (1..200u64).step_by(2) {
            for a in 0..200i64 {
                let g = num_integer::gcd(a as u64, n);
                assert_eq!(jacobi(a, n).unwrap() == 0, g > 1, "a={a} n={n}");
            }
        }
    }
}
