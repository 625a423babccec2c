//! Positive definite binary quadratic forms and the class group of an
//! imaginary quadratic field.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The form `a x^2 + b xy + c y^2` with negative discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let form = QuadForm { a, b, c };
        if a <= 0 || form.discriminant() >= 0 {
            return Err(Error::InvalidArgument(format!("{form} is not positive definite")));
        }
        Ok(form)
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// The principal form of the given discriminant.
    pub fn identity(discriminant: i64) -> Self {
        let b = discriminant.rem_euclid(2);
        QuadForm { a: 1, b, c: (b * b - discriminant) / 4 }
    }

    pub fn is_reduced(&self) -> bool {
        let Self { a, b, c } = *self;
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    pub fn inverse(&self) -> Self {
        QuadForm { a: self.a, b: -self.b, c: self.c }.reduce()
    }

    /// The unique reduced form properly equivalent to `self`.
    pub fn reduce(self) -> Self {
        let disc = self.discriminant() as i128;
        let (mut a, mut b) = (self.a as i128, self.b as i128);
        let mut c = self.c as i128;
        loop {
            if !(-a < b && b <= a) {
                let r = Integer::div_floor(&(a - b), &(2 * a));
                b += 2 * r * a;
                c = (b * b - disc) / (4 * a);
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            break;
        }
        QuadForm { a: a as i64, b: b as i64, c: c as i64 }
    }

    /// Gauss composition, returned reduced.
    pub fn compose(&self, other: &QuadForm) -> QuadForm {
        assert_eq!(self.discriminant(), other.discriminant(), "discriminants differ");
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let (a1, b1) = (f1.a as i128, f1.b as i128);
        let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (y1, d) = if a2 % a1 == 0 {
            (0, a1)
        } else {
            let e = a2.extended_gcd(&a1);
            (e.x, e.gcd)
        };
        let (x2, y2, d1) = if s % d == 0 {
            (0, -1, d)
        } else {
            let e = s.extended_gcd(&d);
            (e.x, -e.y, e.gcd)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).mod_floor(&v1);
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
        QuadForm { a: a3 as i64, b: b3 as i64, c: c3 as i64 }.reduce()
    }

    pub fn pow(&self, mut n: u64) -> QuadForm {
        let mut acc = QuadForm::identity(self.discriminant());
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    /// Order of the class in the class group.
    pub fn order(&self) -> u64 {
        let identity = QuadForm::identity(self.discriminant());
        let mut k = 1;
        let mut acc = self.reduce();
        while acc != identity {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }
}

/// All primitive reduced forms of a negative discriminant, in `(a, b)` order.
pub fn reduced_forms(discriminant: i64) -> Vec<QuadForm> {
    assert!(discriminant < 0 && discriminant.rem_euclid(4) <= 1, "not a discriminant");
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -discriminant {
        for b in -a + 1..=a {
            if (b - discriminant).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - discriminant;
            if num % (4 * a) != 0 {
                continue;
            }
            let form = QuadForm { a, b, c: num / (4 * a) };
            if form.is_reduced() && form.is_primitive() {
                out.push(form);
            }
        }
        a += 1;
    }
    out
}

/// Class number and class-group exponent of `Q(sqrt(-P))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassGroupInfo {
    pub p: u64,
    pub discriminant: i64,
    /// Number of classes.
    pub order: u64,
    /// Least `h` with every class to the `h` principal.
    pub exponent: u64,
}

/// Discriminant of the maximal order of `Q(sqrt(-P))` for squarefree `P`.
pub fn field_discriminant(p: u64) -> i64 {
    if p % 4 == 3 {
        -(p as i64)
    } else {
        -4 * p as i64
    }
}

pub fn class_exponent(p: u64) -> Result<ClassGroupInfo> {
    if p == 0 || !is_squarefree(p) {
        return Err(Error::NotSquarefree(p as i64));
    }
    let discriminant = field_discriminant(p);
    let forms = reduced_forms(discriminant);
    let exponent = forms.iter().map(QuadForm::order).fold(1, |acc, o| acc.lcm(&o));
    Ok(ClassGroupInfo { p, discriminant, order: forms.len() as u64, exponent })
}

pub(crate) fn is_squarefree(n: u64) -> bool {
    crate::arith::factor(n)
        .map(|f| f.factors().iter().all(|&(_, e)| e == 1))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_group_examples() {
        let g = class_exponent(1).unwrap();
        assert_eq!((g.order, g.exponent), (1, 1));
        let g = class_exponent(5).unwrap();
        assert_eq!((g.order, g.exponent, g.discriminant), (2, 2, -20));
        assert_eq!(
            reduced_forms(-20),
            vec![QuadForm { a: 1, b: 0, c: 5 }, QuadForm { a: 2, b: 2, c: 3 }]
        );
        let g = class_exponent(10).unwrap();
        assert_eq!((g.order, g.exponent), (2, 2));
        assert!(class_exponent(12).is_err());
    }

    #[test]
    fn known_class_numbers() {
        // h(-d) for the fundamental discriminants -3, -4, -7, -8, ..., -23, -47, -71
        let known = [(3u64, 1u64), (1, 1), (7, 1), (2, 1), (11, 1), (19, 1), (43, 1), (67, 1), (163, 1),
            (23, 3), (47, 5), (71, 7), (14, 4), (17, 4), (21, 4), (26, 6), (30, 4), (65, 8)];
        for (p, h) in known {
            assert_eq!(class_exponent(p).unwrap().order, h, "P = {p}");
        }
        // non-cyclic: Q(sqrt(-21)) has class group C2 x C2, Q(sqrt(-30)) too
        assert_eq!(class_exponent(21).unwrap().exponent, 2);
        assert_eq!(class_exponent(30).unwrap().exponent, 2);
        assert_eq!(class_exponent(65).unwrap().exponent, 4);
    }

    #[test]
    fn reduction_is_idempotent_and_preserves_discriminant() {
        for a in 1..30i64 {
            for b in -40..40i64 {
                for c in 1..30i64 {
                    let Ok(f) = QuadForm::new(a, b, c) else { continue };
                    let r = f.reduce();
                    assert!(r.is_reduced(), "{f} -> {r}");
                    assert_eq!(r.discriminant(), f.discriminant());
                    assert_eq!(r.reduce(), r);
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        for p in [5u64, 14, 17, 21, 26, 30, 41, 47, 65, 71, 89, 95] {
            let disc = field_discriminant(p);
            let forms = reduced_forms(disc);
            let id = QuadForm::identity(disc);
            let info = class_exponent(p).unwrap();
            for f in &forms {
                assert_eq!(f.compose(&id), *f);
                assert_eq!(f.compose(&f.inverse()), id);
                assert_eq!(f.pow(info.exponent), id);
                assert_eq!(info.order % f.order(), 0);
                for g in &forms {
                    let fg = f.compose(g);
                    assert!(forms.contains(&fg));
                    assert_eq!(fg, g.compose(f));
                    for h in &forms {
                        assert_eq!(fg.compose(h), f.compose(&g.compose(h)));
                    }
                }
            }
        }
    }
}
