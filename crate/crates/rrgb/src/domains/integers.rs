//! The integers as a reduction ring.
//!
//! Ordering: `a ≺ b` iff `|a| < |b|`, or `|a| = |b|` with `a > 0 > b`. This
//! is a total well-founded order with unique minimum 0, under which the
//! canonical reduct of `a` modulo `c` is the smallest representative of the
//! class `a + cZ` (ties resolved toward the nonnegative value), i.e. classic
//! symmetric remainder with nonnegative preference.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_traits::{Signed, Zero};

use crate::error::DomainError;
use crate::ring::{EnumerableReduction, ReductionRing, ReductionStep};

/// The ring of arbitrary-precision integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

impl Integers {
    /// The ≺-least element of the congruence class `a + |c|·Z`, i.e. the
    /// remainder of minimal absolute value with ties going to the
    /// nonnegative representative.
    pub fn class_minimum(&self, a: &BigInt, c: &BigInt) -> BigInt {
        let q = c.abs();
        let r0 = a.mod_floor(&q);
        if &r0 * 2 > q {
            r0 - q
        } else {
            r0
        }
    }
}

impl ReductionRing for Integers {
    type Element = BigInt;

    fn describe(&self) -> String {
        "Z".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::from(1)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn validate(&self, _a: &BigInt) -> Result<(), DomainError> {
        Ok(())
    }

    fn order_below(&self, a: &BigInt, b: &BigInt) -> bool {
        let (aa, ab) = (a.abs(), b.abs());
        aa < ab || (aa == ab && a.is_positive() && b.is_negative())
    }

    fn reduce_step(
        &self,
        a: &BigInt,
        c: &BigInt,
    ) -> Result<Option<ReductionStep<BigInt>>, DomainError> {
        if c.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        let b = self.class_minimum(a, c);
        if !self.order_below(&b, a) {
            return Ok(None);
        }
        let multiplier = (a - &b) / c;
        debug_assert_eq!(a - &multiplier * c, b);
        Ok(Some(ReductionStep {
            reducer: c.clone(),
            multiplier,
            result: b,
        }))
    }

    fn mntcr(&self, c1: &BigInt, c2: &BigInt) -> Result<Vec<BigInt>, DomainError> {
        if c1.is_zero() || c2.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        // Exhaustive scan in ascending ≺ order up to 2·lcm(|c1|,|c2|); the
        // first non-trivial common reducible is the unique ≺-minimal one
        // since the order is total.
        let bound = c1.abs().lcm(&c2.abs()) * 2;
        let mut mag = BigInt::zero();
        while mag <= bound {
            let candidates = if mag.is_zero() {
                vec![BigInt::zero()]
            } else {
                vec![mag.clone(), -&mag]
            };
            for candidate in candidates {
                let s1 = self.reduce_step(&candidate, c1)?;
                let s2 = self.reduce_step(&candidate, c2)?;
                if let (Some(s1), Some(s2)) = (s1, s2) {
                    if s1.result != s2.result {
                        return Ok(vec![candidate]);
                    }
                }
            }
            mag += 1;
        }
        Ok(vec![])
    }

    fn red_tag(&self, basis: &[BigInt]) -> String {
        match basis.iter().filter(|c| !c.is_zero()).map(|c| c.abs()).min() {
            Some(m) => format!("min_abs={m}"),
            None => "min_abs=none".to_string(),
        }
    }

    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

impl EnumerableReduction for Integers {
    fn all_reducts(&self, a: &BigInt, c: &BigInt) -> Result<Vec<BigInt>, DomainError> {
        if c.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        // Every b ≡ a (mod |c|) with b ≺ a lies in [−|a|, |a|].
        let q = c.abs();
        let lo = -a.abs();
        let hi = a.abs();
        let mut b = &lo + (a - &lo).mod_floor(&q);
        let mut out = Vec::new();
        while b <= hi {
            if self.order_below(&b, a) {
                out.push(b.clone());
            }
            b += &q;
        }
        Ok(out)
    }
}

/// All integers with `|x| ≤ bound`, in ascending numeric order. The window
/// is closed downward under reduction: every reduct of a member is a member.
pub fn integer_window(bound: u64) -> Vec<BigInt> {
    let b = bound as i128;
    (-b..=b).map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn order_examples() {
        let r = Integers;
        assert!(r.order_below(&z(0), &z(5)));
        assert!(!r.order_below(&z(3), &z(3)));
        assert!(r.order_below(&z(4), &z(-4)));
        assert!(!r.order_below(&z(-4), &z(4)));
        assert!(r.order_below(&z(-3), &z(4)));
    }

    #[test]
    fn order_is_total_and_transitive_on_window() {
        let r = Integers;
        let window = integer_window(20);
        for a in &window {
            for b in &window {
                if a != b {
                    assert!(
                        r.order_below(a, b) ^ r.order_below(b, a),
                        "not total at {a}, {b}"
                    );
                }
                for c in &window {
                    if r.order_below(a, b) && r.order_below(b, c) {
                        assert!(r.order_below(a, c), "not transitive at {a},{b},{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_step_examples() {
        let r = Integers;
        let s = r.reduce_step(&z(7), &z(3)).unwrap().unwrap();
        assert_eq!(s.multiplier, z(2));
        assert_eq!(s.result, z(1));

        assert!(r.reduce_step(&z(0), &z(3)).unwrap().is_none());
        assert_eq!(r.reduce_step(&z(5), &z(0)), Err(DomainError::ZeroReducer));

        // Ties round toward the nonnegative remainder.
        let s = r.reduce_step(&z(10), &z(4)).unwrap().unwrap();
        assert_eq!(s.result, z(2));
        // A negative value at tie magnitude flips sign.
        let s = r.reduce_step(&z(-2), &z(4)).unwrap().unwrap();
        assert_eq!(s.result, z(2));
        assert_eq!(s.multiplier, z(-1));
    }

    #[test]
    fn reduct_is_class_minimum_and_descends() {
        let r = Integers;
        for a in -40i64..=40 {
            for c in [1i64, 2, 3, 4, 5, 6, 7, 12] {
                if let Some(s) = r.reduce_step(&z(a), &z(c)).unwrap() {
                    assert_eq!(&z(a) - &s.multiplier * &z(c), s.result);
                    assert!(r.order_below(&s.result, &z(a)));
                    // no congruent value sits strictly below the canonical one
                    for b in r.all_reducts(&z(a), &z(c)).unwrap() {
                        assert!(!r.order_below(&b, &s.result));
                    }
                } else {
                    assert!(r.all_reducts(&z(a), &z(c)).unwrap().is_empty());
                }
            }
        }
    }

    #[test]
    fn mntcr_is_minimal_nontrivial() {
        let r = Integers;
        let m = r.mntcr(&z(4), &z(6)).unwrap();
        assert_eq!(m, vec![z(-3)]);
        // self pair: canonical reducts always coincide, so nothing survives
        assert_eq!(r.mntcr(&z(4), &z(4)).unwrap(), Vec::<BigInt>::new());
        assert_eq!(r.mntcr(&z(4), &z(-4)).unwrap(), Vec::<BigInt>::new());
        assert_eq!(r.mntcr(&z(0), &z(4)), Err(DomainError::ZeroReducer));
    }
}
