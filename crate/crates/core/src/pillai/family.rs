use num_bigint::BigUint;

use super::types::SolutionSet;
use crate::arith::perfect_power_u64;

/// The integer `g` with `n = g^k` and `k` maximal.
fn primitive_root(n: u64) -> u64 {
    perfect_power_u64(n).map_or(n, |(g, _)| g)
}

/// Whether two solution sets belong to the same family: `a`, `A` powers of one
/// integer, likewise `b`, `B`, and a rational `k = C / c` matching every solution's
/// two terms `k r a^x = R A^X`, `k s b^y = S B^Y` one-to-one.
pub fn same_family(first: &SolutionSet, second: &SolutionSet) -> bool {
    let (i, j) = (&first.instance, &second.instance);
    if primitive_root(i.a) != primitive_root(j.a)
        || primitive_root(i.b) != primitive_root(j.b)
        || first.len() != second.len()
    {
        return false;
    }
    let (c, cc) = (BigUint::from(i.c), BigUint::from(j.c));
    // k r a^x = R A^X  <=>  C r a^x = c R A^X
    let terms = |set: &SolutionSet, scale: &BigUint| -> Vec<(BigUint, BigUint)> {
        let inst = &set.instance;
        set.solutions
            .iter()
            .map(|s| {
                let ta = scale * BigUint::from(inst.r) * BigUint::from(inst.a).pow(s.x);
                let tb = scale * BigUint::from(inst.s) * BigUint::from(inst.b).pow(s.y);
                (ta, tb)
            })
            .collect()
    };
    let mut lhs = terms(first, &cc);
    let mut rhs = terms(second, &c);
    lhs.sort();
    rhs.sort();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pillai::{enumerate_solutions, PillaiInstance, PillaiSolution};

    fn set(a: u64, b: u64, c: u64, r: u64, s: u64, sols: &[(u32, u32)]) -> SolutionSet {
        let inst = PillaiInstance::new(a, b, c, r, s).unwrap();
        let solutions = sols.iter().map(|&(x, y)| PillaiSolution::with_signs(&inst, x, y).unwrap()).collect();
        SolutionSet::new(inst, solutions, crate::pillai::BoundCertificate::uncertified(20, 20)).unwrap()
    }

    #[test]
    fn families() {
        let base = enumerate_solutions(&PillaiInstance::simple(2, 3, 13).unwrap(), None).unwrap();
        assert!(same_family(&base, &base));
        // k = 2 and a rebased to 4 = 2^2: 2*2^2 = 2*4^1, 2*2^4 = 2*4^2, 2*2^8 = 2*4^4
        let scaled = set(4, 3, 26, 2, 2, &[(1, 2), (2, 1), (4, 5)]);
        assert!(same_family(&base, &scaled));
        assert!(same_family(&scaled, &base));
        let other = enumerate_solutions(&PillaiInstance::simple(2, 3, 5).unwrap(), None).unwrap();
        assert!(!same_family(&base, &other));
        let swapped = enumerate_solutions(&PillaiInstance::simple(2, 5, 3).unwrap(), None).unwrap();
        assert!(!same_family(&other, &swapped));
        // same bases and scale but a different exponent
        let wrong = set(4, 3, 26, 2, 2, &[(1, 2), (2, 1)]);
        assert!(!same_family(&base, &wrong));
    }
}
