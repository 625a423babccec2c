//! Residue prefilter for enumeration.
//!
//! Every true solution satisfies its equation modulo a large prime, so a table of
//! `s b^y mod M` turns each candidate `x` into one lookup. Hits are confirmed exactly.

use num_bigint::BigInt;

use super::types::{PillaiInstance, PillaiSolution};

/// The prime `2^62 - 57`.
pub(crate) const MODULUS: u64 = (1 << 62) - 57;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn add_mod(a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % MODULUS as u128) as u64
}

fn sub_mod(a: u64, b: u64) -> u64 {
    add_mod(a, MODULUS - b % MODULUS)
}

/// Sorted `(s b^y mod M, y)` for `0 <= y <= y_max`.
pub(crate) struct PowerTable {
    entries: Vec<(u64, u32)>,
}

impl PowerTable {
    pub(crate) fn new(b: u64, s: u64, y_max: u32) -> Self {
        let mut entries = Vec::with_capacity(y_max as usize + 1);
        let step = b % MODULUS;
        let mut cur = s % MODULUS;
        for y in 0..=y_max {
            entries.push((cur, y));
            cur = mul_mod(cur, step);
        }
        entries.sort_unstable();
        PowerTable { entries }
    }

    fn lookup(&self, residue: u64) -> impl Iterator<Item = u32> + '_ {
        let start = self.entries.partition_point(|&(r, _)| r < residue);
        self.entries[start..].iter().take_while(move |&&(r, _)| r == residue).map(|&(_, y)| y)
    }
}

/// Every solution with `x <= x_max`, `y <= y_max` whose sign pair the form admits.
/// `table` must cover at least `y_max`.
pub(crate) fn solutions_in_window(
    inst: &PillaiInstance,
    x_max: u32,
    y_max: u32,
    table: &PowerTable,
) -> Vec<PillaiSolution> {
    let target = BigInt::from(inst.c);
    let c_res = inst.c % MODULUS;
    let pairs = inst.form.sign_pairs();
    let mut out = Vec::new();
    let mut a_res = inst.r % MODULUS;
    // r a^x while it is small enough to compare with c directly
    let mut exact: Option<u128> = Some(inst.r as u128);
    for x in 0..=x_max {
        for &(u, v) in pairs {
            let below_c = exact.is_some_and(|e| e < inst.c as u128);
            let at_most_c = exact.is_some_and(|e| e <= inst.c as u128);
            let residue = match (u, v) {
                (0, 0) if below_c => sub_mod(c_res, a_res),
                (0, 0) => continue,
                (0, 1) if at_most_c => continue,
                (0, 1) => sub_mod(a_res, c_res),
                _ => add_mod(a_res, c_res),
            };
            for y in table.lookup(residue).filter(|&y| y <= y_max) {
                if inst.evaluate(x, y, u, v) == target {
                    out.push(PillaiSolution { x, y, u, v });
                }
            }
        }
        a_res = mul_mod(a_res, inst.a % MODULUS);
        exact = exact.and_then(|e| e.checked_mul(inst.a as u128));
    }
    out
}
