//! One function per subcommand: validated parameters in, report out.

use std::collections::BTreeSet;

use pillai_core::pillai::{
    self, BoundCertificate, EquationForm, ExceptionKind, ExpectedTable, FamilyWindows, PillaiInstance,
    SolutionSet, TableRow,
};
use pillai_core::special_eqs::{self, EquationTag, PowerSolutionStatus, SpecialSolutionRecord};
use pillai_core::arith::primes_up_to;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{Item, Report};

fn cert_json(cert: &BoundCertificate) -> Value {
    serde_json::to_value(cert).expect("certificate serializes")
}

fn window_marker(window: Value) -> Value {
    json!({ "method": "window", "complete_within": window })
}

fn set_item(id: String, set: &SolutionSet, pass: bool, extra: Value) -> Item {
    Item {
        id,
        pass,
        summary: format!("{} solutions: {}", set.len(), set.identity()),
        certificate: cert_json(&set.certificate),
        data: json!({ "instance": set.instance, "solutions": set.solutions, "extra": extra }),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub r: u64,
    pub s: u64,
    pub form: EquationForm,
    pub x_max: Option<u32>,
    pub y_max: Option<u32>,
}

pub fn solve(p: &SolveParams) -> Result<Report, CliError> {
    let inst = PillaiInstance::new(p.a, p.b, p.c, p.r, p.s)?.with_form(p.form);
    let ceiling = match (p.x_max, p.y_max) {
        (Some(x), Some(y)) => Some((x, y)),
        (None, None) => None,
        _ => return Err(CliError::Usage("--x-max and --y-max go together".into())),
    };
    let set = pillai::enumerate_solutions(&inst, ceiling)?;
    let mut notes = Vec::new();
    match set.certificate.method {
        pillai::BoundMethod::Uncertified => notes.push(format!(
            "bounded mode: complete only for x <= {}, y <= {}; uncertified",
            set.certificate.x_max, set.certificate.y_max
        )),
        pillai::BoundMethod::Floor1m => notes.push(format!(
            "c = 1: fixed window x, y <= {}; completeness not certified",
            pillai::CATALAN_WINDOW
        )),
        pillai::BoundMethod::MignotteFixedPoint => notes.push(format!(
            "certified: G* = {:.4}, x <= {}, y <= {}",
            set.certificate.g_star.unwrap_or_default(),
            set.certificate.x_max,
            set.certificate.y_max
        )),
    }
    let items = set
        .solutions
        .iter()
        .map(|s| Item {
            id: format!("x={} y={} u={} v={}", s.x, s.y, s.u, s.v),
            pass: true,
            summary: format!("{} = {}", s.identity(&inst), inst.c),
            certificate: cert_json(&set.certificate),
            data: json!(s),
        })
        .collect();
    Ok(Report::new("solve", json!(p), items, notes))
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanParams {
    pub primes: u64,
    pub c: u64,
    pub threshold: usize,
    pub form: EquationForm,
}

pub fn scan(p: &ScanParams) -> Result<Report, CliError> {
    if p.form == EquationForm::Difference {
        return Err(CliError::Usage("scan supports the general and abs-difference forms".into()));
    }
    let found = pillai::scan_box(p.primes, p.c, p.threshold, p.form)?;
    let items = found
        .iter()
        .map(|it| {
            let (a, b, c) = it.triple;
            let (pass, label) = match p.form {
                EquationForm::AbsDifference => {
                    let ok = it.set.len() <= 2 || pillai::is_theorem2_exception(a, b, c);
                    (ok, if ok { "listed exception".to_string() } else { "unlisted".to_string() })
                }
                _ => (it.classification.is_exception(), kind_label(&it.classification.kind)),
            };
            let mut item = set_item(format!("({a},{b},{c})"), &it.set, pass, json!(it.classification));
            item.summary = format!("[{label}] {}", item.summary);
            item
        })
        .collect();
    Ok(Report::new("scan", json!(p), items, Vec::new()))
}

fn kind_label(kind: &ExceptionKind) -> String {
    match kind {
        ExceptionKind::Sporadic { .. } => "sporadic".into(),
        ExceptionKind::FermatFamily { t, .. } => format!("Fermat family, t = {t}"),
        ExceptionKind::MersenneFamily { t, .. } => format!("Mersenne family, t = {t}"),
        ExceptionKind::ThreePowerFamily { n, delta } => format!("3^n family, n = {n}, d = {delta}"),
        ExceptionKind::TwoPowerFamily { t, delta } => format!("2^t family, t = {t}, d = {delta}"),
        ExceptionKind::None => "unclassified".into(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

pub fn bound(p: &BoundParams) -> Result<Report, CliError> {
    let cert = pillai::mignotte_bound(p.a, p.b, p.c)?;
    let g = cert.g_star.expect("fixed-point certificate carries G");
    let rhs = pillai::mignotte_rhs(p.a, p.b, p.c, g);
    let pass = g >= pillai::G_FLOOR && g >= rhs;
    let item = Item {
        id: format!("({},{},{})", p.a, p.b, p.c),
        pass,
        summary: format!("G* = {g:.6}, RHS(G*) = {rhs:.6}, x <= {}, y <= {}", cert.x_max, cert.y_max),
        certificate: cert_json(&cert),
        data: json!({ "rhs_at_g_star": rhs }),
    };
    Ok(Report::new("bound", json!(p), vec![item], Vec::new()))
}

/// Expected-value lists for the auxiliary equations.
#[derive(Debug, Clone, Deserialize)]
struct SpecialFixture {
    #[serde(rename = "L2")]
    l2: FixtureEntry,
    #[serde(rename = "L3")]
    l3: FixtureEntry,
    #[serde(rename = "L4")]
    l4: FixtureEntry,
    #[serde(rename = "L5")]
    l5: FixtureEntry,
    #[serde(rename = "L6")]
    l6: FixtureEntry,
    #[serde(rename = "L7")]
    l7: FixtureEntry,
}

#[derive(Debug, Clone, Deserialize)]
struct FixtureEntry {
    sporadic: Vec<Vec<i64>>,
}

const SPECIAL_FIXTURE: &str = include_str!("../data/special.json");

#[derive(Debug, Clone, Serialize)]
pub struct SpecialParams {
    pub tag: EquationTag,
    pub r_max: u32,
    /// Primes scanned for L3 and L5.
    pub primes: Vec<u64>,
    pub d_max: u64,
    pub w_max: u64,
}

impl SpecialParams {
    /// Fills unset windows with the per-equation defaults.
    pub fn resolve(
        tag: EquationTag,
        r_max: Option<u32>,
        p: Option<u64>,
        p_max: Option<u64>,
        d_max: Option<u64>,
        w_max: Option<u64>,
    ) -> Result<Self, CliError> {
        let r_default = match tag {
            EquationTag::L2 => 25,
            EquationTag::L4 => 14,
            _ => 40,
        };
        let primes = match (p, p_max) {
            (Some(_), Some(_)) => return Err(CliError::Usage("give --p or --p-max, not both".into())),
            (Some(p), None) => vec![p],
            (None, limit) => primes_up_to(limit.unwrap_or(97)).into_iter().filter(|&q| q > 2).collect(),
        };
        Ok(SpecialParams {
            tag,
            r_max: r_max.unwrap_or(r_default),
            primes,
            d_max: d_max.unwrap_or(100),
            w_max: w_max.unwrap_or(60),
        })
    }
}

fn expected_special(p: &SpecialParams) -> BTreeSet<Vec<i64>> {
    let fx: SpecialFixture = serde_json::from_str(SPECIAL_FIXTURE).expect("bundled fixture parses");
    let r_max = p.r_max as i64;
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    match p.tag {
        EquationTag::L2 => out.extend(
            fx.l2.sporadic.into_iter().filter(|t| t[0] <= p.d_max as i64 && t[1] <= r_max),
        ),
        EquationTag::L3 | EquationTag::L5 => {
            let entry = if p.tag == EquationTag::L3 { fx.l3 } else { fx.l5 };
            out.extend(
                entry.sporadic.into_iter().filter(|t| p.primes.contains(&(t[1] as u64)) && t[2] <= r_max),
            )
        }
        EquationTag::L4 => out.extend(fx.l4.sporadic),
        EquationTag::L6 => {
            out.extend((2..=r_max / 2).map(|t| vec![2 * t, t + 1, (1i64 << t) - 1]));
            out.extend(fx.l6.sporadic.into_iter().filter(|t| t[0] <= r_max));
        }
        EquationTag::L7 => {
            out.extend((1..=r_max / 2).map(|t| vec![2 * t, t + 1, (1i64 << t) + 1]));
            out.extend(fx.l7.sporadic.into_iter().filter(|t| t[0] <= r_max));
        }
    }
    out
}

fn solve_special(p: &SpecialParams) -> Result<Vec<SpecialSolutionRecord>, CliError> {
    Ok(match p.tag {
        EquationTag::L2 => special_eqs::solve_lemma2(p.d_max, p.r_max),
        EquationTag::L3 => {
            let mut all = Vec::new();
            for &q in &p.primes {
                all.extend(special_eqs::solve_p_minus(q, p.r_max)?);
            }
            all
        }
        EquationTag::L5 => {
            let mut all = Vec::new();
            for &q in &p.primes {
                all.extend(special_eqs::solve_p_plus(q, p.r_max)?);
            }
            all
        }
        EquationTag::L4 => special_eqs::lemma4_scan(p.w_max, p.r_max),
        EquationTag::L6 => special_eqs::solve_2_minus(p.r_max),
        EquationTag::L7 => special_eqs::solve_2_plus(p.r_max),
    })
}

pub fn special(p: &SpecialParams) -> Result<Report, CliError> {
    let found = solve_special(p)?;
    let expected = expected_special(p);
    let window = window_marker(json!({ "r_max": p.r_max, "d_max": p.d_max, "w_max": p.w_max, "primes": p.primes.len() }));
    let mut seen = BTreeSet::new();
    let mut items: Vec<Item> = found
        .iter()
        .map(|rec| {
            let t = rec.params_i64().unwrap_or_default();
            let pass = expected.contains(&t);
            seen.insert(t);
            Item {
                id: rec.to_string(),
                pass,
                summary: if pass { "expected".into() } else { "not in the expected list".into() },
                certificate: window.clone(),
                data: json!(rec),
            }
        })
        .collect();
    for missing in expected.iter().filter(|t| !seen.contains(*t)) {
        items.push(Item {
            id: format!("{}{:?}", p.tag, missing),
            pass: false,
            summary: "expected but not found".into(),
            certificate: window.clone(),
            data: json!({ "tag": p.tag, "params": missing }),
        });
    }
    let notes = vec![format!("{}: {}", p.tag, p.tag.equation())];
    Ok(Report::new("special", json!(p), items, notes))
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem4Params {
    pub c_from: u64,
    pub c_to: u64,
    pub x_max: u64,
}

pub fn theorem4(p: &Theorem4Params) -> Result<Report, CliError> {
    if p.c_from == p.c_to && p.c_from % 2 == 1 {
        return Err(CliError::Usage(format!("C = {} must be even", p.c_from)));
    }
    let cs: Vec<u64> = (p.c_from..=p.c_to).filter(|c| c % 2 == 0).collect();
    let rows: Result<Vec<Item>, CliError> = {
        use rayon::prelude::*;
        cs.par_iter()
            .map(|&c| {
                let bound = special_eqs::theorem4_bound(c)?;
                let sols = special_eqs::theorem4_enumerate(c, p.x_max)?;
                let violations = sols.iter().filter(|s| s.status == PowerSolutionStatus::Violation).count();
                let flagged: Vec<String> = sols
                    .iter()
                    .filter(|s| s.status == PowerSolutionStatus::ListedException)
                    .map(|s| format!("({},{},{})", s.x, s.y, s.n))
                    .collect();
                let nontrivial = sols.iter().filter(|s| s.n > 1).count();
                let mut summary = format!(
                    "N = {}, {} solutions ({} with n > 1), {} violations",
                    bound.n,
                    sols.len(),
                    nontrivial,
                    violations
                );
                if !flagged.is_empty() {
                    summary.push_str(&format!(", listed exception {}", flagged.join(" ")));
                }
                Ok(Item {
                    id: format!("C={c}"),
                    pass: violations == 0,
                    summary,
                    certificate: window_marker(json!({ "x_max": p.x_max })),
                    data: json!({ "bound": bound, "solutions": sols }),
                })
            })
            .collect()
    };
    Ok(Report::new("theorem4", json!(p), rows?, Vec::new()))
}

#[derive(Debug, Clone, Serialize)]
pub struct TablesParams {
    pub windows: FamilyWindows,
    pub table: Option<String>,
}

fn row_item(group: &str, row: &TableRow) -> Item {
    let (p, q, c) = row.triple;
    let summary = if row.pass {
        row.identity.clone()
    } else {
        format!("expected {:?}, got {:?}", row.expected, row.actual)
    };
    Item {
        id: format!("{group} ({p},{q},{c})"),
        pass: row.pass,
        summary,
        certificate: json!({ "method": "certified enumeration" }),
        data: json!(row),
    }
}

pub fn verify_tables(p: &TablesParams) -> Result<Report, CliError> {
    let table = match &p.table {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            ExpectedTable::from_json(&text)?
        }
        None => ExpectedTable::builtin(),
    };
    let t3 = pillai::verify_theorem3_table(&table, &p.windows)?;
    let t_top = 63 - (p.windows.fermat_max.max(p.windows.mersenne_max + 1)).leading_zeros();
    let l9 = pillai::verify_lemma9_families(3..=t_top)?;
    let mut items: Vec<Item> = t3.rows.iter().map(|r| row_item("table", r)).collect();
    let in_window = |r: &&TableRow| {
        let q = r.triple.1;
        if r.label.starts_with('M') || r.label.starts_with("2M") {
            q <= p.windows.mersenne_max
        } else {
            q <= p.windows.fermat_max
        }
    };
    items.extend(l9.rows.iter().filter(in_window).map(|r| row_item("families", r)));
    let mut notes = t3.notes.clone();
    notes.push(format!("{} sporadic rows, {} family instances", t3.sporadic_rows, t3.family_rows));
    notes.extend(l9.notes.iter().map(|n| format!("families: {n}")));
    Ok(Report::new("verify-tables", json!(p), items, notes))
}
