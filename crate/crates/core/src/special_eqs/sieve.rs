//! Cheap non-square rejection by quadratic residues.

use num_bigint::BigUint;

use crate::arith::integer_sqrt;

const FACTORS: [u64; 10] = [64, 63, 65, 11, 17, 19, 23, 29, 31, 37];

/// Product of [`FACTORS`]; values are reduced modulo this before the table lookups.
pub(crate) const MODULUS: u64 = 64 * 63 * 65 * 11 * 17 * 19 * 23 * 29 * 31 * 37;

pub(crate) struct SquareSieve {
    tables: Vec<Vec<bool>>,
}

impl SquareSieve {
    pub(crate) fn new() -> Self {
        let tables = FACTORS
            .iter()
            .map(|&m| {
                let mut t = vec![false; m as usize];
                for z in 0..m {
                    t[(z * z % m) as usize] = true;
                }
                t
            })
            .collect();
        SquareSieve { tables }
    }

    /// False only when `v` (given modulo [`MODULUS`]) is certainly not a square.
    pub(crate) fn admits(&self, v: u64) -> bool {
        FACTORS.iter().zip(&self.tables).all(|(&m, t)| t[(v % m) as usize])
    }
}

pub(crate) fn add_mod(a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % MODULUS as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64) -> u64 {
    add_mod(a, MODULUS - b % MODULUS)
}

/// Residues of `base^0 .. base^max_exp` modulo [`MODULUS`].
pub(crate) fn power_residues(base: u64, max_exp: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(max_exp as usize + 1);
    let mut cur = 1 % MODULUS;
    for _ in 0..=max_exp {
        out.push(cur);
        cur = ((cur as u128 * base as u128) % MODULUS as u128) as u64;
    }
    out
}

pub(crate) fn powers(base: u64, max_exp: u32) -> Vec<BigUint> {
    let b = BigUint::from(base);
    let mut out = Vec::with_capacity(max_exp as usize + 1);
    let mut cur = BigUint::from(1u32);
    for _ in 0..=max_exp {
        out.push(cur.clone());
        cur *= &b;
    }
    out
}

pub(crate) fn exact_root(v: &BigUint) -> Option<BigUint> {
    let (r, exact) = integer_sqrt(v);
    exact.then_some(r)
}
