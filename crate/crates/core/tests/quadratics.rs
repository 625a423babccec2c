use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use pillai_core::quadratics::{
    class_exponent, pell_fundamental, pell_power, reduced_forms, QuadForm,
};
use proptest::prelude::*;

/// Chakravala: the least solution of x^2 - d y^2 = 1 by cyclic descent.
fn chakravala(d: i64) -> (BigInt, BigInt) {
    let dd = BigInt::from(d);
    let m0 = (d as f64).sqrt().round() as i64;
    let (mut a, mut b, mut k) = (BigInt::from(m0), BigInt::one(), BigInt::from(m0 * m0 - d));
    while !k.is_one() {
        let kabs = k.abs();
        let ki = kabs.to_i64().unwrap();
        let start = (1..=ki)
            .find(|m| ((&a + &b * m) % &kabs).is_zero())
            .expect("congruence solvable");
        let root = (d as f64).sqrt();
        let mut best = start;
        let mut m = start;
        while (m as f64) < root + ki as f64 {
            if ((m * m - d).abs(), m) < ((best * best - d).abs(), best) {
                best = m;
            }
            m += ki;
        }
        let mb = BigInt::from(best);
        let na = (&a * &mb + &dd * &b) / &kabs;
        let nb = (&a + &b * &mb) / &kabs;
        k = BigInt::from(best * best - d) / &k;
        a = na.abs();
        b = nb.abs();
    }
    (a, b)
}

#[test]
fn pell_fundamental_matches_chakravala() {
    for d in 2..=200i64 {
        if d.sqrt() * d.sqrt() == d {
            continue;
        }
        let sol = pell_fundamental(d as u64, 1).unwrap().unwrap();
        let (x, y) = chakravala(d);
        assert_eq!((BigInt::from(sol.x().clone()), BigInt::from(sol.y().clone())), (x, y), "D = {d}");
    }
}

#[test]
fn pell_fundamental_matches_brute_force_for_small_solutions() {
    for d in 2..=200u64 {
        if d.sqrt() * d.sqrt() == d {
            continue;
        }
        for norm in [1i64, -1] {
            let brute = (1..=100_000u64).find_map(|y| {
                let v = (d * y * y) as i64 + norm;
                let x = (v as u64).sqrt();
                (x * x == v as u64).then_some((x, y))
            });
            let got = pell_fundamental(d, norm as i8).unwrap();
            match (brute, got) {
                (Some((x, y)), Some(s)) => {
                    assert_eq!((s.x().clone(), s.y().clone()), (BigUint::from(x), BigUint::from(y)))
                }
                (None, Some(s)) => assert!(s.y() > &BigUint::from(100_000u32), "D = {d}"),
                (Some(_), None) => panic!("D = {d} norm {norm}: missed a solution"),
                (None, None) => {}
            }
        }
    }
}

#[test]
fn negative_pell_squares_to_positive() {
    for d in 2..=500u64 {
        if let Ok(Some(s)) = pell_fundamental(d, -1) {
            let sq = pell_power(&s, 2);
            let plus = pell_fundamental(d, 1).unwrap().unwrap();
            assert_eq!(sq, (plus.x().clone(), plus.y().clone()), "D = {d}");
        }
    }
}

/// Class numbers by counting reduced forms directly from the definition.
fn brute_class_number(disc: i64) -> u64 {
    let mut count = 0;
    for a in 1..=disc.abs() {
        for b in -a..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && (b == -a || a == c)) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn class_numbers_match_direct_count() {
    for p in 1..=300u64 {
        let Ok(info) = class_exponent(p) else { continue };
        assert_eq!(info.order, brute_class_number(info.discriminant), "P = {p}");
        assert_eq!(info.order % info.exponent, 0);
    }
}

fn disc_strategy() -> impl Strategy<Value = i64> {
    (3i64..2000).prop_map(|n| if n % 4 == 0 || n % 4 == 3 { -n } else { -4 * n })
}

proptest! {
    #[test]
    fn composition_is_associative_and_commutative(disc in disc_strategy(), i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let forms = reduced_forms(disc);
        let (f, g, h) = (&forms[i % forms.len()], &forms[j % forms.len()], &forms[k % forms.len()]);
        prop_assert_eq!(f.compose(g), g.compose(f));
        prop_assert_eq!(f.compose(g).compose(h), f.compose(&g.compose(h)));
        prop_assert_eq!(f.compose(&f.inverse()), QuadForm::identity(disc));
        prop_assert_eq!(f.pow(f.order()), QuadForm::identity(disc));
    }

    #[test]
    fn pell_powers_keep_the_norm(d in 2u64..400, n in 1u32..12) {
        prop_assume!(d.sqrt() * d.sqrt() != d);
        let base = pell_fundamental(d, 1).unwrap().unwrap();
        let (x, y) = pell_power(&base, n);
        prop_assert_eq!(&x * &x, BigUint::from(d) * &y * &y + 1u32);
    }
}
