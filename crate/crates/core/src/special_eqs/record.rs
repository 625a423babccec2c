use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which auxiliary equation a record solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EquationTag {
    /// `(1 + sqrt(-D))^r = m +- sqrt(-D)`; parameters `(D, r, m)`.
    L2,
    /// `p^r - p^s + 1 = z^2`; parameters `(z, p, r, s)`.
    L3,
    /// `z^2 = w^r + e1 w^s + e2`; parameters `(z, w, r, s, e1, e2)`.
    L4,
    /// `p^r + p^s + 1 = z^2`; parameters `(z, p, r, s)`.
    L5,
    /// `2^r - 2^s + 1 = z^2`; parameters `(r, s, z)`.
    L6,
    /// `2^r + 2^s + 1 = z^2`; parameters `(r, s, z)`.
    L7,
}

impl EquationTag {
    pub const ALL: [EquationTag; 6] = [Self::L2, Self::L3, Self::L4, Self::L5, Self::L6, Self::L7];

    pub fn equation(&self) -> &'static str {
        match self {
            Self::L2 => "(1 + sqrt(-D))^r = m +- sqrt(-D)",
            Self::L3 => "p^r - p^s + 1 = z^2",
            Self::L4 => "z^2 = w^r + e1*w^s + e2",
            Self::L5 => "p^r + p^s + 1 = z^2",
            Self::L6 => "2^r - 2^s + 1 = z^2",
            Self::L7 => "2^r + 2^s + 1 = z^2",
        }
    }

    fn arity(&self) -> usize {
        match self {
            Self::L2 | Self::L6 | Self::L7 => 3,
            Self::L3 | Self::L5 => 4,
            Self::L4 => 6,
        }
    }
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for EquationTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown equation tag {s:?}")))
    }
}

/// A verified solution tuple of one of the auxiliary equations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SpecialSolutionRecord {
    tag: EquationTag,
    #[serde(serialize_with = "crate::serde_text::display_seq")]
    params: Vec<BigInt>,
}

impl SpecialSolutionRecord {
    pub fn new(tag: EquationTag, params: Vec<BigInt>) -> Result<Self> {
        if params.len() != tag.arity() || !holds(tag, &params) {
            let shown: Vec<String> = params.iter().map(|p| p.to_string()).collect();
            return Err(Error::FalseRecord(format!("{tag} {shown:?}")));
        }
        Ok(SpecialSolutionRecord { tag, params })
    }

    pub fn from_i64(tag: EquationTag, params: &[i64]) -> Result<Self> {
        Self::new(tag, params.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn tag(&self) -> EquationTag {
        self.tag
    }

    pub fn params(&self) -> &[BigInt] {
        &self.params
    }

    /// Parameters as machine integers, when they fit.
    pub fn params_i64(&self) -> Option<Vec<i64>> {
        self.params.iter().map(|v| v.to_i64()).collect()
    }
}

impl fmt::Display for SpecialSolutionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.tag, body.join(", "))
    }
}

fn exponent(v: &BigInt) -> Option<u32> {
    v.to_u32()
}

fn holds(tag: EquationTag, params: &[BigInt]) -> bool {
    let sq = |z: &BigInt| z * z;
    match tag {
        EquationTag::L2 => {
            let (Some(r), true) = (exponent(&params[1]), params[0].is_positive()) else {
                return false;
            };
            let d = &params[0];
            // (1 + sqrt(-D))^r = re + im sqrt(-D)
            let (mut re, mut im) = (BigInt::one(), BigInt::zero());
            for _ in 0..r {
                let next_re = &re - &im * d;
                im += &re;
                re = next_re;
            }
            re == params[2] && im.abs().is_one()
        }
        EquationTag::L3 | EquationTag::L5 => {
            let (Some(r), Some(s)) = (exponent(&params[2]), exponent(&params[3])) else {
                return false;
            };
            let p = &params[1];
            if !p.is_positive() || !params[0].is_positive() {
                return false;
            }
            let lhs = if tag == EquationTag::L3 {
                p.pow(r) - p.pow(s) + 1
            } else {
                p.pow(r) + p.pow(s) + 1
            };
            lhs == sq(&params[0])
        }
        EquationTag::L4 => {
            let (Some(r), Some(s)) = (exponent(&params[2]), exponent(&params[3])) else {
                return false;
            };
            let (e1, e2) = (&params[4], &params[5]);
            if !(e1.abs().is_one() && e2.abs().is_one()) || !params[0].is_positive() {
                return false;
            }
            let w = &params[1];
            sq(&params[0]) == w.pow(r) + e1 * w.pow(s) + e2
        }
        EquationTag::L6 | EquationTag::L7 => {
            let (Some(r), Some(s)) = (exponent(&params[0]), exponent(&params[1])) else {
                return false;
            };
            if !params[2].is_positive() {
                return false;
            }
            let two = |e: u32| BigInt::from(BigUint::one() << e);
            let lhs = if tag == EquationTag::L6 { two(r) - two(s) + 1 } else { two(r) + two(s) + 1 };
            lhs == sq(&params[2])
        }
    }
}
