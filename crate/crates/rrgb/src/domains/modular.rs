//! Integer quotient rings Z/n, not necessarily free of zero divisors.
//!
//! Residues are stored as canonical representatives in `0..n`. The ordering
//! maps each representative into the symmetric range (ties at `n/2` staying
//! positive) and applies the integer rule, which yields a total well-founded
//! order with minimum 0. Multiplier selection is a full search over all `n`
//! multipliers, as the spec of the domain demands.

use crate::error::DomainError;
use crate::ring::{EnumerableReduction, FiniteRing, ReductionRing, ReductionStep};

/// The quotient ring Z/n for a fixed modulus `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularRing {
    modulus: u64,
}

impl ModularRing {
    pub fn new(modulus: u64) -> Result<Self, DomainError> {
        if modulus < 2 {
            return Err(DomainError::InvalidRing(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(ModularRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Symmetric-range representative: `r` for `2r ≤ n`, else `r − n`.
    fn symmetric(&self, r: u64) -> i128 {
        if 2 * (r as u128) <= self.modulus as u128 {
            r as i128
        } else {
            r as i128 - self.modulus as i128
        }
    }

    fn check(&self, a: u64) -> Result<(), DomainError> {
        if a >= self.modulus {
            Err(DomainError::DescriptorMismatch(format!(
                "residue {a} out of range for modulus {}",
                self.modulus
            )))
        } else {
            Ok(())
        }
    }

    /// Ring elements sorted ascending in ≺; used for deterministic scans.
    pub fn elements_ascending(&self) -> Vec<u64> {
        let mut all: Vec<u64> = (0..self.modulus).collect();
        all.sort_by(|a, b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.order_below(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        all
    }
}

impl ReductionRing for ModularRing {
    type Element = u64;

    fn describe(&self) -> String {
        format!("Z/{}", self.modulus)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.modulus - *a % self.modulus) % self.modulus
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn validate(&self, a: &u64) -> Result<(), DomainError> {
        self.check(*a)
    }

    fn order_below(&self, a: &u64, b: &u64) -> bool {
        let (sa, sb) = (self.symmetric(*a), self.symmetric(*b));
        sa.abs() < sb.abs() || (sa.abs() == sb.abs() && sa > 0 && sb < 0)
    }

    fn reduce_step(
        &self,
        a: &u64,
        c: &u64,
    ) -> Result<Option<ReductionStep<u64>>, DomainError> {
        if *c == 0 {
            return Err(DomainError::ZeroReducer);
        }
        self.check(*a)?;
        self.check(*c)?;
        let mut best: Option<(u64, u64)> = None; // (b, m); m ascends, so the
                                                 // first m reaching the least b wins ties
        for m in 0..self.modulus {
            let b = self.sub(a, &self.mul(&m, c));
            if !self.order_below(&b, a) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bb, _)) => self.order_below(&b, bb),
            };
            if better {
                best = Some((b, m));
            }
        }
        Ok(best.map(|(b, m)| ReductionStep {
            reducer: *c,
            multiplier: m,
            result: b,
        }))
    }

    fn mntcr(&self, c1: &u64, c2: &u64) -> Result<Vec<u64>, DomainError> {
        if *c1 == 0 || *c2 == 0 {
            return Err(DomainError::ZeroReducer);
        }
        // Full enumeration: every non-trivial common reducible, ascending in ≺.
        let mut out = Vec::new();
        for a in self.elements_ascending() {
            let s1 = self.reduce_step(&a, c1)?;
            let s2 = self.reduce_step(&a, c2)?;
            if let (Some(s1), Some(s2)) = (s1, s2) {
                if s1.result != s2.result {
                    out.push(a);
                }
            }
        }
        Ok(out)
    }

    fn red_tag(&self, basis: &[u64]) -> String {
        if self.modulus > 1024 {
            return format!("basis={}", basis.len());
        }
        let red = (0..self.modulus)
            .filter(|a| {
                basis
                    .iter()
                    .filter(|c| **c != 0)
                    .any(|c| self.reduce_step(a, c).map(|s| s.is_some()).unwrap_or(false))
            })
            .count();
        format!("red={red}/{}", self.modulus)
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl EnumerableReduction for ModularRing {
    fn all_reducts(&self, a: &u64, c: &u64) -> Result<Vec<u64>, DomainError> {
        if *c == 0 {
            return Err(DomainError::ZeroReducer);
        }
        self.check(*a)?;
        self.check(*c)?;
        let mut out: Vec<u64> = (0..self.modulus)
            .map(|m| self.sub(a, &self.mul(&m, c)))
            .filter(|b| self.order_below(b, a))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl FiniteRing for ModularRing {
    fn elements(&self) -> Vec<u64> {
        (0..self.modulus).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_integers_mod_n() {
        for n in 2..=16u64 {
            let r = ModularRing::new(n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(r.add(&a, &b), (a + b) % n);
                    assert_eq!(r.mul(&a, &b), (a * b) % n);
                    assert_eq!(r.add(&a, &r.neg(&a)), 0);
                }
            }
        }
    }

    #[test]
    fn zero_divisors_exist() {
        let r = ModularRing::new(6).unwrap();
        assert_eq!(r.mul(&2, &3), 0);
    }

    #[test]
    fn order_is_total_wellfounded() {
        for n in [4u64, 5, 6, 8, 9, 12] {
            let r = ModularRing::new(n).unwrap();
            for a in 0..n {
                assert!(!r.order_below(&a, &a));
                if a != 0 {
                    assert!(r.order_below(&0, &a));
                }
                for b in 0..n {
                    if a != b {
                        assert!(r.order_below(&a, &b) ^ r.order_below(&b, &a));
                    }
                }
            }
        }
    }

    #[test]
    fn ascending_order_z8() {
        let r = ModularRing::new(8).unwrap();
        assert_eq!(r.elements_ascending(), vec![0, 1, 7, 2, 6, 3, 5, 4]);
    }

    #[test]
    fn reduce_step_is_exhaustive_minimum() {
        let r = ModularRing::new(8).unwrap();
        // 6 - 4m over Z/8 hits {6, 2}; 2 is the ≺-least valid reduct.
        let s = r.reduce_step(&6, &4).unwrap().unwrap();
        assert_eq!(s.result, 2);
        assert_eq!(s.multiplier, 1);
        // the result must be the ≺-minimum of all one-step reducts
        for n in [4u64, 6, 8, 9, 12] {
            let r = ModularRing::new(n).unwrap();
            for a in 0..n {
                for c in 1..n {
                    let reducts = r.all_reducts(&a, &c).unwrap();
                    match r.reduce_step(&a, &c).unwrap() {
                        Some(s) => {
                            assert!(reducts.contains(&s.result));
                            for b in &reducts {
                                assert!(!r.order_below(b, &s.result));
                            }
                        }
                        None => assert!(reducts.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn mntcr_enumerates_nontrivial_common_reducibles() {
        let r = ModularRing::new(6).unwrap();
        // sources 2, 3, 4 all reduce differently by 2 and by 3
        let m = r.mntcr(&2, &3).unwrap();
        assert_eq!(m.len(), 3);
        for a in &m {
            let s1 = r.reduce_step(a, &2).unwrap().unwrap();
            let s2 = r.reduce_step(a, &3).unwrap().unwrap();
            assert_ne!(s1.result, s2.result);
        }
        // identical constituents: canonical reducts coincide, all trivial
        assert!(r.mntcr(&2, &2).unwrap().is_empty());
    }

    #[test]
    fn residue_out_of_range_is_rejected() {
        let r = ModularRing::new(6).unwrap();
        assert!(r.validate(&6).is_err());
        assert!(r.validate(&5).is_ok());
        assert!(ModularRing::new(1).is_err());
    }
}
