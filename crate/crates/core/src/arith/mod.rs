//! Arbitrary-precision number-theory primitives shared by the solvers.

mod factor;
mod jacobi;
mod primes;
mod roots;

pub use factor::{factor, squarefree_split, FactoredInteger, SquarefreeSplit};
pub use jacobi::{jacobi, jacobi_symbol};
pub use primes::{
    fermat_primes, is_fermat_prime, is_mersenne_prime, is_prime, is_prime_big, mersenne_primes,
    primes_up_to,
};
pub use roots::{
    exact_sqrt_u128, integer_sqrt, is_perfect_power, perfect_power_u64, power_of_base,
    power_of_base_u64, valuation,
};

/// Whether `n` is `1` or a power of a single prime.
pub fn is_unit_or_prime_power(n: u64) -> bool {
    if n <= 1 {
        return n == 1;
    }
    match perfect_power_u64(n) {
        Some((base, _)) => is_prime(base as u128),
        None => is_prime(n as u128),
    }
}

/// Least common multiple of a list; `1` for the empty list.
pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values
        .into_iter()
        .fold(1, |acc, v| num_integer::lcm(acc, v))
}
