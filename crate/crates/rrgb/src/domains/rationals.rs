//! The rational numbers as a reduction ring (the field case).
//!
//! Ordering: `0 ≺ a` for every nonzero `a`; distinct nonzero elements are
//! incomparable. Every nonzero element reduces to 0 in one step by any
//! nonzero reducer, so normal forms modulo a nonempty basis are always 0.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::DomainError;
use crate::ring::{EnumerableReduction, ReductionRing, ReductionStep};

/// The field of exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl ReductionRing for Rationals {
    type Element = BigRational;

    fn describe(&self) -> String {
        "Q".to_string()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn validate(&self, a: &BigRational) -> Result<(), DomainError> {
        if !a.denom().is_positive() {
            return Err(DomainError::DescriptorMismatch(
                "rational with nonpositive denominator".into(),
            ));
        }
        if a.numer().gcd(a.denom()) != BigInt::one() && !a.numer().is_zero() {
            return Err(DomainError::DescriptorMismatch(
                "rational not in lowest terms".into(),
            ));
        }
        Ok(())
    }

    fn order_below(&self, a: &BigRational, b: &BigRational) -> bool {
        a.is_zero() && !b.is_zero()
    }

    fn reduce_step(
        &self,
        a: &BigRational,
        c: &BigRational,
    ) -> Result<Option<ReductionStep<BigRational>>, DomainError> {
        if c.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        if a.is_zero() {
            return Ok(None);
        }
        Ok(Some(ReductionStep {
            reducer: c.clone(),
            multiplier: a / c,
            result: BigRational::zero(),
        }))
    }

    fn mntcr(
        &self,
        c1: &BigRational,
        c2: &BigRational,
    ) -> Result<Vec<BigRational>, DomainError> {
        if c1.is_zero() || c2.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        Ok(vec![BigRational::one()])
    }

    fn red_tag(&self, basis: &[BigRational]) -> String {
        if basis.iter().any(|c| !c.is_zero()) {
            "red=all_nonzero".to_string()
        } else {
            "red=none".to_string()
        }
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

impl EnumerableReduction for Rationals {
    fn all_reducts(
        &self,
        a: &BigRational,
        c: &BigRational,
    ) -> Result<Vec<BigRational>, DomainError> {
        if c.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        if a.is_zero() {
            Ok(vec![])
        } else {
            Ok(vec![BigRational::zero()])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_is_exact() {
        let r = Rationals;
        assert_eq!(r.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(r.mul(&q(2, 3), &q(3, 2)), r.one());
    }

    #[test]
    fn only_zero_is_below() {
        let r = Rationals;
        assert!(r.order_below(&r.zero(), &q(7, 1)));
        assert!(!r.order_below(&q(1, 2), &q(7, 1)));
        assert!(!r.order_below(&q(7, 1), &q(7, 1)));
    }

    #[test]
    fn every_nonzero_reduces_to_zero() {
        let r = Rationals;
        let s = r.reduce_step(&q(3, 4), &q(7, 2)).unwrap().unwrap();
        assert!(s.result.is_zero());
        assert_eq!(s.multiplier, q(3, 14));
        assert!(r.reduce_step(&r.zero(), &q(1, 1)).unwrap().is_none());
        assert_eq!(
            r.reduce_step(&q(1, 1), &r.zero()),
            Err(DomainError::ZeroReducer)
        );
    }

    #[test]
    fn mntcr_is_one() {
        let r = Rationals;
        assert_eq!(r.mntcr(&q(5, 3), &q(-2, 7)).unwrap(), vec![r.one()]);
    }
}
