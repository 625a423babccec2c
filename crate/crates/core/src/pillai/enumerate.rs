use super::bound::{mignotte_bound, BoundCertificate};
use super::residues::{solutions_in_window, PowerTable};
use super::types::{PillaiInstance, SolutionSet};
use crate::error::{Error, Result};

/// Largest user window accepted in bounded mode.
const MAX_WINDOW: u32 = 10_000_000;

/// The certificate certified enumeration would use for this instance.
pub fn certify(instance: &PillaiInstance) -> Result<BoundCertificate> {
    if !instance.is_certifiable() {
        return Err(Error::CertificationUnavailable(format!(
            "{instance}: certified mode needs r = s = 1 and gcd(a, b) = 1"
        )));
    }
    if instance.c == 1 {
        return Ok(BoundCertificate::catalan_window());
    }
    mignotte_bound(instance.a, instance.b, instance.c)
}

/// All solutions, either certified complete (`ceiling = None`) or complete within
/// `x <= x_max`, `y <= y_max`.
pub fn enumerate_solutions(
    instance: &PillaiInstance,
    ceiling: Option<(u32, u32)>,
) -> Result<SolutionSet> {
    let certificate = match ceiling {
        Some((x_max, y_max)) => {
            if x_max > MAX_WINDOW || y_max > MAX_WINDOW {
                return Err(Error::InvalidArgument(format!("window exceeds {MAX_WINDOW}")));
            }
            BoundCertificate::uncertified(x_max, y_max)
        }
        None => certify(instance)?,
    };
    let table = PowerTable::new(instance.b, instance.s, certificate.y_max);
    enumerate_with_table(instance, certificate, &table)
}

pub(crate) fn enumerate_with_table(
    instance: &PillaiInstance,
    certificate: BoundCertificate,
    table: &PowerTable,
) -> Result<SolutionSet> {
    let found = solutions_in_window(instance, certificate.x_max, certificate.y_max, table);
    SolutionSet::new(*instance, found, certificate)
}

/// Number of solutions; certified mode only.
pub fn count_solutions(instance: &PillaiInstance) -> Result<usize> {
    Ok(enumerate_solutions(instance, None)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pillai::{BoundMethod, EquationForm};

    fn tuples(a: u64, b: u64, c: u64) -> Vec<(u32, u32, u8, u8)> {
        enumerate_solutions(&PillaiInstance::simple(a, b, c).unwrap(), None).unwrap().tuples()
    }

    #[test]
    fn known_sets() {
        let diff = PillaiInstance::simple(2, 5, 3).unwrap().with_form(EquationForm::Difference);
        let set = enumerate_solutions(&diff, None).unwrap();
        assert_eq!(set.tuples(), vec![(2, 0, 0, 1), (3, 1, 0, 1), (7, 3, 0, 1)]);
        assert_eq!(tuples(2, 3, 13), vec![(2, 2, 0, 0), (4, 1, 0, 1), (8, 5, 0, 1)]);
        assert!(tuples(2, 3, 6).is_empty());
        assert_eq!(tuples(3, 13, 10), vec![(1, 1, 1, 0), (2, 0, 0, 0), (7, 3, 1, 0)]);
        assert_eq!(tuples(3, 5, 2).len(), 4);
        assert_eq!(tuples(2, 5, 3).len(), 5);
    }

    #[test]
    fn modes() {
        let inst = PillaiInstance::new(2, 7, 5, 1, 5).unwrap();
        assert!(matches!(count_solutions(&inst), Err(Error::CertificationUnavailable(_))));
        let set = enumerate_solutions(&inst, Some((30, 30))).unwrap();
        assert_eq!(set.certificate.method, BoundMethod::Uncertified);
        assert!(enumerate_solutions(&PillaiInstance::simple(4, 6, 2).unwrap(), None).is_err());
        let one = enumerate_solutions(&PillaiInstance::simple(2, 3, 1).unwrap(), None).unwrap();
        assert_eq!(one.certificate.method, BoundMethod::Floor1m);
        assert_eq!(one.len(), 4);
    }
}
