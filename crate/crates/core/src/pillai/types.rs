use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::bound::BoundCertificate;
use crate::error::{Error, Result};

/// Which sign patterns `(u, v)` an instance admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationForm {
    /// All of `(0,0)`, `(0,1)`, `(1,0)`.
    #[default]
    General,
    /// `r a^x - s b^y = c` only.
    Difference,
    /// `|r a^x - s b^y| = c`.
    AbsDifference,
}

impl EquationForm {
    pub fn sign_pairs(&self) -> &'static [(u8, u8)] {
        match self {
            EquationForm::General => &[(0, 0), (0, 1), (1, 0)],
            EquationForm::Difference => &[(0, 1)],
            EquationForm::AbsDifference => &[(0, 1), (1, 0)],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EquationForm::General => "general",
            EquationForm::Difference => "difference",
            EquationForm::AbsDifference => "abs-difference",
        }
    }
}

impl fmt::Display for EquationForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EquationForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(EquationForm::General),
            "difference" => Ok(EquationForm::Difference),
            "abs-difference" | "abs_difference" => Ok(EquationForm::AbsDifference),
            _ => Err(Error::InvalidArgument(format!("unknown equation form {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PillaiInstance {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub r: u64,
    pub s: u64,
    pub form: EquationForm,
    /// `gcd(r a, s b) = 1`.
    pub coprime: bool,
}

impl PillaiInstance {
    pub fn new(a: u64, b: u64, c: u64, r: u64, s: u64) -> Result<Self> {
        if a < 2 || b < 2 || c < 1 || r < 1 || s < 1 {
            return Err(Error::InvalidInstance(format!(
                "need a, b >= 2 and c, r, s >= 1; got (a,b,c,r,s) = ({a},{b},{c},{r},{s})"
            )));
        }
        let coprime = (r as u128 * a as u128).gcd(&(s as u128 * b as u128)) == 1;
        Ok(PillaiInstance { a, b, c, r, s, form: EquationForm::General, coprime })
    }

    /// `r = s = 1`.
    pub fn simple(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a, b, c, 1, 1)
    }

    pub fn with_form(mut self, form: EquationForm) -> Self {
        self.form = form;
        self
    }

    /// Certified enumeration needs `r = s = 1` and `gcd(a, b) = 1`.
    pub fn is_certifiable(&self) -> bool {
        self.r == 1 && self.s == 1 && self.a.gcd(&self.b) == 1
    }

    pub fn a_term(&self, x: u32) -> BigInt {
        BigInt::from(self.r) * BigInt::from(self.a).pow(x)
    }

    pub fn b_term(&self, y: u32) -> BigInt {
        BigInt::from(self.s) * BigInt::from(self.b).pow(y)
    }

    /// `(-1)^u r a^x + (-1)^v s b^y`.
    pub fn evaluate(&self, x: u32, y: u32, u: u8, v: u8) -> BigInt {
        let ta = self.a_term(x);
        let tb = self.b_term(y);
        (if u == 1 { -ta } else { ta }) + (if v == 1 { -tb } else { tb })
    }
}

impl fmt::Display for PillaiInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.a, self.b, self.c, self.r, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PillaiSolution {
    pub x: u32,
    pub y: u32,
    pub u: u8,
    pub v: u8,
}

impl PillaiSolution {
    /// Rejects tuples that do not satisfy the instance or use a sign pair its form excludes.
    pub fn new(instance: &PillaiInstance, x: u32, y: u32, u: u8, v: u8) -> Result<Self> {
        if u > 1 || v > 1 || !instance.form.sign_pairs().contains(&(u, v)) {
            return Err(Error::NotASolution { x, y });
        }
        if instance.evaluate(x, y, u, v) != BigInt::from(instance.c) {
            return Err(Error::NotASolution { x, y });
        }
        Ok(PillaiSolution { x, y, u, v })
    }

    /// The unique sign pair making `(x, y)` a solution, if any.
    pub fn with_signs(instance: &PillaiInstance, x: u32, y: u32) -> Option<Self> {
        let mut found = instance
            .form
            .sign_pairs()
            .iter()
            .filter_map(|&(u, v)| Self::new(instance, x, y, u, v).ok());
        let first = found.next();
        assert!(found.next().is_none(), "two sign pairs for one (x, y)");
        first
    }

    /// The solution written out, e.g. `-2^3 + 3^2`.
    pub fn identity(&self, instance: &PillaiInstance) -> String {
        let term = |coef: u64, base: u64, e: u32| -> String {
            let power = match e {
                0 => None,
                1 => Some(base.to_string()),
                _ => Some(format!("{base}^{e}")),
            };
            match (coef, power) {
                (1, None) => "1".to_string(),
                (1, Some(p)) => p,
                (k, None) => k.to_string(),
                (k, Some(p)) => format!("{k}*{p}"),
            }
        };
        let first = term(instance.r, instance.a, self.x);
        let second = term(instance.s, instance.b, self.y);
        let lead = if self.u == 1 { "-" } else { "" };
        let op = if self.v == 1 { "-" } else { "+" };
        format!("{lead}{first} {op} {second}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionSet {
    pub instance: PillaiInstance,
    /// Sorted by `(x, y)`; no two share an `(x, y)` pair.
    pub solutions: Vec<PillaiSolution>,
    pub certificate: BoundCertificate,
}

impl SolutionSet {
    pub fn new(
        instance: PillaiInstance,
        mut solutions: Vec<PillaiSolution>,
        certificate: BoundCertificate,
    ) -> Result<Self> {
        solutions.sort();
        solutions.dedup();
        for w in solutions.windows(2) {
            if (w[0].x, w[0].y) == (w[1].x, w[1].y) {
                return Err(Error::InvalidInstance(format!("duplicate pair ({}, {})", w[0].x, w[0].y)));
            }
        }
        for s in &solutions {
            PillaiSolution::new(&instance, s.x, s.y, s.u, s.v)?;
        }
        Ok(SolutionSet { instance, solutions, certificate })
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn tuples(&self) -> Vec<(u32, u32, u8, u8)> {
        self.solutions.iter().map(|s| (s.x, s.y, s.u, s.v)).collect()
    }

    /// All solutions joined as one chain of equalities ending in `c`.
    pub fn identity(&self) -> String {
        let mut parts: Vec<String> =
            self.solutions.iter().map(|s| s.identity(&self.instance)).collect();
        parts.push(self.instance.c.to_string());
        parts.join(" = ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_validation() {
        assert!(PillaiInstance::new(1, 3, 5, 1, 1).is_err());
        assert!(PillaiInstance::new(2, 3, 0, 1, 1).is_err());
        assert!(PillaiInstance::new(2, 3, 5, 0, 1).is_err());
        assert!(PillaiInstance::new(2, 3, 5, 1, 1).unwrap().coprime);
        assert!(!PillaiInstance::new(2, 3, 5, 3, 1).unwrap().coprime);
        assert!(!PillaiInstance::new(4, 6, 2, 1, 1).unwrap().is_certifiable());
    }

    #[test]
    fn solutions_are_checked() {
        let inst = PillaiInstance::simple(2, 5, 3).unwrap();
        assert!(PillaiSolution::new(&inst, 7, 3, 0, 1).is_ok());
        assert!(PillaiSolution::new(&inst, 7, 3, 1, 0).is_err());
        assert!(PillaiSolution::new(&inst, 7, 2, 0, 1).is_err());
        let diff = inst.with_form(EquationForm::Difference);
        assert!(PillaiSolution::new(&diff, 1, 1, 1, 0).is_err());
        assert_eq!(PillaiSolution::with_signs(&inst, 1, 1).unwrap().u, 1);
        assert_eq!(PillaiSolution::new(&inst, 7, 3, 0, 1).unwrap().identity(&inst), "2^7 - 5^3");
        assert_eq!(PillaiSolution::new(&inst, 2, 0, 0, 1).unwrap().identity(&inst), "2^2 - 1");
        assert_eq!(PillaiSolution::new(&inst, 1, 1, 1, 0).unwrap().identity(&inst), "-2 + 5");
    }
}
