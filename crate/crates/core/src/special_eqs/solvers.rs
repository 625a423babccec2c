use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::record::{EquationTag, SpecialSolutionRecord};
use super::sieve::{add_mod, exact_root, power_residues, powers, sub_mod, SquareSieve};
use crate::arith::{is_prime, is_unit_or_prime_power};
use crate::error::{Error, Result};

/// All `(D, r, m)` in the window with `(1 + sqrt(-D))^r = m +- sqrt(-D)`.
///
/// `D` ranges over `D = 2 mod 4` and over `D = 0 mod 4` with `1 + D` a prime power.
pub fn solve_lemma2(d_max: u64, r_max: u32) -> Vec<SpecialSolutionRecord> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        let admissible = d % 4 == 2 || (d % 4 == 0 && is_unit_or_prime_power(d + 1));
        if !admissible {
            continue;
        }
        let dd = BigInt::from(d);
        let (mut re, mut im) = (BigInt::one(), BigInt::one());
        for r in 2..=r_max {
            let next_re = &re - &im * &dd;
            im += &re;
            re = next_re;
            if im == BigInt::one() || im == -BigInt::one() {
                let rec = SpecialSolutionRecord::new(
                    EquationTag::L2,
                    vec![dd.clone(), BigInt::from(r), re.clone()],
                )
                .expect("expansion is exact");
                out.push(rec);
            }
        }
    }
    out
}

/// `(r, s, z)` with `base^r + sign * base^s + 1 = z^2`, `r_max >= r >= s >= 1`
/// (strictly `r > s` when `strict`).
fn two_term_scan(base: u64, plus: bool, strict: bool, r_max: u32) -> Vec<(u32, u32, BigInt)> {
    let sieve = SquareSieve::new();
    let res = power_residues(base, r_max);
    let pw = powers(base, r_max);
    let mut out = Vec::new();
    for r in 1..=r_max {
        let s_top = if strict { r - 1 } else { r };
        for s in 1..=s_top {
            let ri = r as usize;
            let si = s as usize;
            let v = if plus {
                add_mod(add_mod(res[ri], res[si]), 1)
            } else {
                add_mod(sub_mod(res[ri], res[si]), 1)
            };
            if !sieve.admits(v) {
                continue;
            }
            let exact = if plus { &pw[ri] + &pw[si] + 1u32 } else { &pw[ri] - &pw[si] + 1u32 };
            if let Some(z) = exact_root(&exact) {
                out.push((r, s, BigInt::from(z)));
            }
        }
    }
    out
}

fn odd_prime(p: u64, redirect: &str) -> Result<()> {
    if p == 2 {
        return Err(Error::InvalidArgument(format!("p = 2 is handled by {redirect}")));
    }
    if !is_prime(p as u128) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(())
}

fn lemma_record(tag: EquationTag, z: BigInt, p: u64, r: u32, s: u32) -> SpecialSolutionRecord {
    SpecialSolutionRecord::new(tag, vec![z, BigInt::from(p), BigInt::from(r), BigInt::from(s)])
        .expect("checked by exact square root")
}

fn binary_record(tag: EquationTag, r: u32, s: u32, z: BigInt) -> SpecialSolutionRecord {
    SpecialSolutionRecord::new(tag, vec![BigInt::from(r), BigInt::from(s), z])
        .expect("checked by exact square root")
}

/// All `(z, p, r, s)` with `p^r - p^s + 1 = z^2`, `r_max >= r > s >= 1`.
pub fn solve_p_minus(p: u64, r_max: u32) -> Result<Vec<SpecialSolutionRecord>> {
    odd_prime(p, "solve_2_minus")?;
    Ok(two_term_scan(p, false, true, r_max)
        .into_iter()
        .map(|(r, s, z)| lemma_record(EquationTag::L3, z, p, r, s))
        .collect())
}

/// All `(z, p, r, s)` with `p^r + p^s + 1 = z^2`, `r_max >= r >= s >= 1`.
pub fn solve_p_plus(p: u64, r_max: u32) -> Result<Vec<SpecialSolutionRecord>> {
    odd_prime(p, "solve_2_plus")?;
    Ok(two_term_scan(p, true, false, r_max)
        .into_iter()
        .map(|(r, s, z)| lemma_record(EquationTag::L5, z, p, r, s))
        .collect())
}

/// All `(r, s, z)` with `2^r - 2^s + 1 = z^2`, `r_max >= r > s >= 1`.
pub fn solve_2_minus(r_max: u32) -> Vec<SpecialSolutionRecord> {
    two_term_scan(2, false, true, r_max)
        .into_iter()
        .map(|(r, s, z)| binary_record(EquationTag::L6, r, s, z))
        .collect()
}

/// All `(r, s, z)` with `2^r + 2^s + 1 = z^2`, `r_max >= r >= s >= 1`.
pub fn solve_2_plus(r_max: u32) -> Vec<SpecialSolutionRecord> {
    two_term_scan(2, true, false, r_max)
        .into_iter()
        .map(|(r, s, z)| binary_record(EquationTag::L7, r, s, z))
        .collect()
}

/// Solutions of `z^2 = w^r + e1 w^s + e2` with `3 <= w <= w_max`, `r` even,
/// `r_max >= r > s >= 1`. None are expected; anything returned is a counterexample.
pub fn lemma4_scan(w_max: u64, r_max: u32) -> Vec<SpecialSolutionRecord> {
    let sieve = SquareSieve::new();
    let mut out = Vec::new();
    for w in 3..=w_max {
        let res = power_residues(w, r_max);
        let pw = powers(w, r_max);
        for r in (2..=r_max).step_by(2) {
            for s in 1..r {
                let (ri, si) = (r as usize, s as usize);
                for e1 in [1i64, -1] {
                    let head = if e1 == 1 { add_mod(res[ri], res[si]) } else { sub_mod(res[ri], res[si]) };
                    let head_exact = if e1 == 1 { &pw[ri] + &pw[si] } else { &pw[ri] - &pw[si] };
                    for e2 in [1i64, -1] {
                        let v = if e2 == 1 { add_mod(head, 1) } else { sub_mod(head, 1) };
                        if !sieve.admits(v) {
                            continue;
                        }
                        let exact = if e2 == 1 { &head_exact + 1u32 } else { &head_exact - 1u32 };
                        if exact.is_zero() {
                            continue;
                        }
                        if let Some(z) = exact_root(&exact) {
                            let params = vec![
                                BigInt::from(z),
                                BigInt::from(w),
                                BigInt::from(r),
                                BigInt::from(s),
                                BigInt::from(e1),
                                BigInt::from(e2),
                            ];
                            out.push(
                                SpecialSolutionRecord::new(EquationTag::L4, params)
                                    .expect("checked by exact square root"),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}
