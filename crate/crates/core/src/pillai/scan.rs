use rayon::prelude::*;
use serde::Serialize;

use super::classify::{classify_exception, ExceptionClassification};
use super::enumerate::{certify, enumerate_with_table};
use super::residues::PowerTable;
use super::types::{EquationForm, PillaiInstance, SolutionSet};
use crate::arith::primes_up_to;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanItem {
    pub triple: (u64, u64, u64),
    pub set: SolutionSet,
    pub classification: ExceptionClassification,
}

/// Every `(p, q, c)` with primes `p < q <= prime_limit` and `1 <= c <= c_limit`
/// having at least `threshold` solutions in certified mode, ascending.
///
/// Runs on the current rayon pool; the result does not depend on its size.
pub fn scan_box(
    prime_limit: u64,
    c_limit: u64,
    threshold: usize,
    form: EquationForm,
) -> Result<Vec<ScanItem>> {
    let primes = primes_up_to(prime_limit);
    let pairs: Vec<(u64, u64)> = primes
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| primes[i + 1..].iter().map(move |&q| (p, q)))
        .collect();
    let per_pair: Vec<Result<Vec<ScanItem>>> =
        pairs.par_iter().map(|&(p, q)| scan_pair(p, q, c_limit, threshold, form)).collect();
    let mut out = Vec::new();
    for items in per_pair {
        out.extend(items?);
    }
    Ok(out)
}

fn scan_pair(
    p: u64,
    q: u64,
    c_limit: u64,
    threshold: usize,
    form: EquationForm,
) -> Result<Vec<ScanItem>> {
    if c_limit == 0 {
        return Ok(Vec::new());
    }
    // ceilings grow with c, so the table for the largest c serves them all
    let widest = certify(&PillaiInstance::simple(p, q, c_limit)?.with_form(form))?;
    let table = PowerTable::new(q, 1, widest.y_max.max(super::bound::CATALAN_WINDOW));
    let mut out = Vec::new();
    for c in 1..=c_limit {
        let inst = PillaiInstance::simple(p, q, c)?.with_form(form);
        let set = enumerate_with_table(&inst, certify(&inst)?, &table)?;
        if set.len() >= threshold {
            out.push(ScanItem { triple: (p, q, c), set, classification: classify_exception(p, q, c) });
        }
    }
    Ok(out)
}
