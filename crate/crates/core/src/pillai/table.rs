use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_solutions;
use super::types::PillaiInstance;
use crate::arith::{is_fermat_prime, is_mersenne_prime, is_prime};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/theorem3.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub triple: [u64; 3],
    pub identity: String,
    pub solutions: Vec<[u32; 4]>,
}

/// The sporadic rows of the exceptional-triple table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTable {
    pub rows: Vec<ExpectedRow>,
}

impl ExpectedTable {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN).expect("bundled fixture parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }
}

/// Which members of the parametric families to instantiate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyWindows {
    pub fermat_max: u64,
    pub mersenne_max: u64,
    pub n_range: (u32, u32),
    pub t_range: (u32, u32),
}

impl Default for FamilyWindows {
    fn default() -> Self {
        FamilyWindows { fermat_max: 65537, mersenne_max: 8191, n_range: (2, 10), t_range: (2, 10) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub triple: (u64, u64, u64),
    pub expected: Vec<(u32, u32, u8, u8)>,
    pub actual: Vec<(u32, u32, u8, u8)>,
    /// The enumerated solutions written as one chain of equalities.
    pub identity: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub sporadic_rows: usize,
    pub family_rows: usize,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl TableReport {
    fn new(rows: Vec<TableRow>, sporadic_rows: usize, notes: Vec<String>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        let family_rows = rows.len() - sporadic_rows;
        TableReport { rows, sporadic_rows, family_rows, notes, pass }
    }
}

struct Job {
    label: String,
    triple: (u64, u64, u64),
    expected: Vec<(u32, u32, u8, u8)>,
}

fn run(job: Job) -> Result<TableRow> {
    let (p, q, c) = job.triple;
    let set = enumerate_solutions(&PillaiInstance::simple(p, q, c)?, None)?;
    let mut expected = job.expected;
    expected.sort();
    let actual = set.tuples();
    Ok(TableRow {
        label: job.label,
        triple: job.triple,
        pass: actual == expected,
        identity: set.identity(),
        expected,
        actual,
    })
}

fn run_all(jobs: Vec<Job>) -> Result<Vec<TableRow>> {
    jobs.into_par_iter().map(run).collect()
}

fn fermat_jobs(t: u32) -> Vec<Job> {
    let f = (1u64 << t) + 1;
    vec![
        Job {
            label: format!("F - 2, F = {f}"),
            triple: (2, f, f - 2),
            expected: vec![(t, 0, 0, 1), (1, 1, 1, 0), (t + 1, 1, 0, 1)],
        },
        Job {
            label: format!("2F - 1, F = {f}"),
            triple: (2, f, 2 * f - 1),
            expected: vec![(t + 1, 0, 0, 0), (t, 1, 0, 0), (2 * t, 2, 1, 0)],
        },
    ]
}

fn mersenne_jobs(t: u32) -> Vec<Job> {
    let m = (1u64 << t) - 1;
    vec![
        Job {
            label: format!("M + 2, M = {m}"),
            triple: (2, m, m + 2),
            expected: vec![(t, 0, 0, 0), (1, 1, 0, 0), (t + 1, 1, 0, 1)],
        },
        Job {
            label: format!("2M + 1, M = {m}"),
            triple: (2, m, 2 * m + 1),
            expected: vec![(t + 1, 0, 0, 1), (t, 1, 0, 0), (2 * t, 2, 0, 1)],
        },
    ]
}

/// Exponents `t` with `2^t + 1` a Fermat prime above 5 and at most `limit`.
fn fermat_exponents(limit: u64) -> Vec<u32> {
    (3..63).filter(|&t| (1u64 << t) < limit && is_fermat_prime(t)).collect()
}

fn mersenne_exponents(limit: u64) -> Vec<u32> {
    (3..63).filter(|&t| (1u64 << t) - 1 <= limit && is_mersenne_prime(t)).collect()
}

/// Checks every sporadic row of `table` and the parametric families in `windows`
/// for exact agreement with certified enumeration.
pub fn verify_theorem3_table(table: &ExpectedTable, windows: &FamilyWindows) -> Result<TableReport> {
    let mut jobs: Vec<Job> = table
        .rows
        .iter()
        .map(|row| {
            let [p, q, c] = row.triple;
            Job {
                label: format!("sporadic ({p},{q},{c})"),
                triple: (p, q, c),
                expected: row.solutions.iter().map(|s| (s[0], s[1], s[2] as u8, s[3] as u8)).collect(),
            }
        })
        .collect();
    let sporadic_rows = jobs.len();
    let mut notes = Vec::new();

    let fermat = fermat_exponents(windows.fermat_max);
    if fermat.is_empty() {
        notes.push(format!("no Fermat prime F with 5 < F <= {}; Fermat families skipped", windows.fermat_max));
    }
    jobs.extend(fermat.into_iter().flat_map(fermat_jobs));
    let mersenne = mersenne_exponents(windows.mersenne_max);
    if mersenne.is_empty() {
        notes.push(format!("no Mersenne prime M with 3 < M <= {}; Mersenne families skipped", windows.mersenne_max));
    }
    jobs.extend(mersenne.into_iter().flat_map(mersenne_jobs));

    for n in windows.n_range.0.max(2)..=windows.n_range.1 {
        for delta in [0u8, 1] {
            let q = if delta == 0 { 3u64.pow(n) + 2 } else { 3u64.pow(n) - 2 };
            if (n, delta) == (3, 1) || !is_prime(q as u128) {
                continue;
            }
            let third = if delta == 0 { (n, 1, 1, 0) } else { (n, 1, 0, 1) };
            jobs.push(Job {
                label: format!("3^n + (-1)^d 2, n = {n}, d = {delta}"),
                triple: (3, q, 2),
                expected: vec![(0, 0, 0, 0), (1, 0, 0, 1), third],
            });
        }
    }
    for t in windows.t_range.0.max(2)..=windows.t_range.1 {
        for delta in [0u8, 1] {
            let q = if delta == 0 { (1u64 << t) + 3 } else { (1u64 << t) - 3 };
            if (delta == 1 && [2, 3, 7].contains(&t)) || !is_prime(q as u128) {
                continue;
            }
            let third = if delta == 0 { (t, 1, 1, 0) } else { (t, 1, 0, 1) };
            jobs.push(Job {
                label: format!("2^t + (-1)^d 3, t = {t}, d = {delta}"),
                triple: (2, q, 3),
                expected: vec![(1, 0, 0, 0), (2, 0, 0, 1), third],
            });
        }
    }
    Ok(TableReport::new(run_all(jobs)?, sporadic_rows, notes))
}

/// The four Fermat and Mersenne families for every `t` in range where `2^t + 1` is a
/// Fermat prime above 5 or `2^t - 1` a Mersenne prime above 3.
pub fn verify_lemma9_families(t_range: RangeInclusive<u32>) -> Result<TableReport> {
    let mut jobs = Vec::new();
    for t in t_range.filter(|&t| t < 63) {
        if t >= 3 && is_mersenne_prime(t) {
            jobs.extend(mersenne_jobs(t));
        }
        if t >= 3 && is_fermat_prime(t) {
            jobs.extend(fermat_jobs(t));
        }
    }
    let notes = if jobs.is_empty() { vec!["no family members in range".to_string()] } else { Vec::new() };
    Ok(TableReport::new(run_all(jobs)?, 0, notes))
}
