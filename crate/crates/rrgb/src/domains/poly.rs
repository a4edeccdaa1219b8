//! Multivariate polynomials represented as tuples of monomials, over any
//! coefficient domain that is itself a reduction ring.
//!
//! A polynomial is a coefficient/exponent-vector list kept strictly
//! descending in the ring's monomial order with no zero coefficients.
//! The polynomial ordering compares coefficient functions position-wise at
//! the largest exponent vector where they differ, using the coefficient
//! domain's ordering (a missing monomial counts as coefficient zero, which
//! is minimal in every supported coefficient domain). Reduction targets the
//! highest monomial whose exponent vector is divisible by the reducer's
//! leading monomial and whose coefficient admits a coefficient-level step.

use std::cmp::Ordering;

use crate::error::DomainError;
use crate::ring::{ReductionRing, ReductionStep};

use super::monomial::{exp_add, exp_divides, exp_lcm, exp_sub, MonomialOrder};

/// One coefficient–exponent pair of a polynomial tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<C> {
    pub coeff: C,
    pub exps: Vec<u32>,
}

/// A polynomial as a tuple of monomials, strictly descending in the ambient
/// monomial order, with nonzero coefficients only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyTuple<C> {
    pub monomials: Vec<Monomial<C>>,
}

impl<C> PolyTuple<C> {
    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// The polynomial reduction ring over a coefficient reduction ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<C: ReductionRing> {
    coeff: C,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<C: ReductionRing> PolyRing<C> {
    pub fn new(coeff: C, vars: Vec<String>, order: MonomialOrder) -> Result<Self, DomainError> {
        if vars.is_empty() {
            return Err(DomainError::InvalidRing(
                "polynomial ring needs at least one variable".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(DomainError::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(DomainError::InvalidRing(format!(
                    "duplicate variable name {v:?}"
                )));
            }
        }
        Ok(PolyRing { coeff, vars, order })
    }

    pub fn coefficient_ring(&self) -> &C {
        &self.coeff
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Canonicalizes an arbitrary monomial list: sorts descending, merges
    /// equal exponent vectors, drops zero coefficients.
    pub fn from_monomials(&self, monomials: Vec<Monomial<C::Element>>) -> PolyTuple<C::Element> {
        let mut ms = monomials;
        ms.sort_by(|m1, m2| self.order.compare(&m2.exps, &m1.exps));
        let mut out: Vec<Monomial<C::Element>> = Vec::with_capacity(ms.len());
        for m in ms {
            match out.last_mut() {
                Some(last) if last.exps == m.exps => {
                    last.coeff = self.coeff.add(&last.coeff, &m.coeff);
                }
                _ => out.push(m),
            }
        }
        out.retain(|m| !self.coeff.is_zero(&m.coeff));
        PolyTuple { monomials: out }
    }

    /// Builds a polynomial from (coefficient, exponents) pairs.
    pub fn poly(&self, terms: &[(C::Element, &[u32])]) -> PolyTuple<C::Element> {
        self.from_monomials(
            terms
                .iter()
                .map(|(c, e)| Monomial {
                    coeff: c.clone(),
                    exps: e.to_vec(),
                })
                .collect(),
        )
    }

    /// First entry of the sorted monomial tuple. Errors on zero.
    pub fn leading_monomial<'a>(
        &self,
        p: &'a PolyTuple<C::Element>,
    ) -> Result<&'a Monomial<C::Element>, DomainError> {
        p.monomials.first().ok_or(DomainError::NoLeadingMonomial)
    }

    fn mul_monomial(
        &self,
        p: &PolyTuple<C::Element>,
        m: &Monomial<C::Element>,
    ) -> PolyTuple<C::Element> {
        self.from_monomials(
            p.monomials
                .iter()
                .map(|t| Monomial {
                    coeff: self.coeff.mul(&t.coeff, &m.coeff),
                    exps: exp_add(&t.exps, &m.exps),
                })
                .collect(),
        )
    }
}

impl<C: ReductionRing> ReductionRing for PolyRing<C> {
    type Element = PolyTuple<C::Element>;

    fn describe(&self) -> String {
        format!(
            "poly({}; {}; {})",
            self.coeff.describe(),
            self.vars.join(","),
            self.order
        )
    }

    fn zero(&self) -> Self::Element {
        PolyTuple { monomials: vec![] }
    }

    fn one(&self) -> Self::Element {
        PolyTuple {
            monomials: vec![Monomial {
                coeff: self.coeff.one(),
                exps: vec![0; self.num_vars()],
            }],
        }
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let mut ms = a.monomials.clone();
        ms.extend(b.monomials.iter().cloned());
        self.from_monomials(ms)
    }

    fn neg(&self, a: &Self::Element) -> Self::Element {
        PolyTuple {
            monomials: a
                .monomials
                .iter()
                .map(|m| Monomial {
                    coeff: self.coeff.neg(&m.coeff),
                    exps: m.exps.clone(),
                })
                .collect(),
        }
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        let mut ms = Vec::with_capacity(a.monomials.len() * b.monomials.len());
        for x in &a.monomials {
            for y in &b.monomials {
                ms.push(Monomial {
                    coeff: self.coeff.mul(&x.coeff, &y.coeff),
                    exps: exp_add(&x.exps, &y.exps),
                });
            }
        }
        self.from_monomials(ms)
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        a.is_zero()
    }

    fn validate(&self, a: &Self::Element) -> Result<(), DomainError> {
        for (i, m) in a.monomials.iter().enumerate() {
            if m.exps.len() != self.num_vars() {
                return Err(DomainError::ExponentLengthMismatch {
                    left: m.exps.len(),
                    right: self.num_vars(),
                });
            }
            self.coeff.validate(&m.coeff)?;
            if self.coeff.is_zero(&m.coeff) {
                return Err(DomainError::DescriptorMismatch(
                    "zero coefficient in monomial tuple".into(),
                ));
            }
            if i > 0 && self.order.compare(&a.monomials[i - 1].exps, &m.exps) != Ordering::Greater {
                return Err(DomainError::DescriptorMismatch(
                    "monomials not strictly descending".into(),
                ));
            }
        }
        Ok(())
    }

    fn order_below(&self, a: &Self::Element, b: &Self::Element) -> bool {
        // position-wise comparison at the largest differing exponent vector
        let zero = self.coeff.zero();
        let mut pa = a.monomials.iter().peekable();
        let mut pb = b.monomials.iter().peekable();
        loop {
            match (pa.peek(), pb.peek()) {
                (None, None) => return false, // equal
                (Some(ma), None) => {
                    return self.coeff.order_below(&ma.coeff, &zero);
                }
                (None, Some(mb)) => {
                    return self.coeff.order_below(&zero, &mb.coeff);
                }
                (Some(ma), Some(mb)) => match self.order.compare(&ma.exps, &mb.exps) {
                    Ordering::Greater => return self.coeff.order_below(&ma.coeff, &zero),
                    Ordering::Less => return self.coeff.order_below(&zero, &mb.coeff),
                    Ordering::Equal => {
                        if ma.coeff != mb.coeff {
                            return self.coeff.order_below(&ma.coeff, &mb.coeff);
                        }
                        pa.next();
                        pb.next();
                    }
                },
            }
        }
    }

    fn reduce_step(
        &self,
        a: &Self::Element,
        c: &Self::Element,
    ) -> Result<Option<ReductionStep<Self::Element>>, DomainError> {
        if c.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        let clm = self.leading_monomial(c)?;
        for target in &a.monomials {
            if !exp_divides(&clm.exps, &target.exps) {
                continue;
            }
            let Some(cstep) = self.coeff.reduce_step(&target.coeff, &clm.coeff)? else {
                continue;
            };
            let multiplier = Monomial {
                coeff: cstep.multiplier,
                exps: exp_sub(&target.exps, &clm.exps),
            };
            let result = self.sub(a, &self.mul_monomial(c, &multiplier));
            debug_assert!(self.order_below(&result, a));
            return Ok(Some(ReductionStep {
                reducer: c.clone(),
                multiplier: PolyTuple {
                    monomials: vec![multiplier],
                },
                result,
            }));
        }
        Ok(None)
    }

    fn mntcr(
        &self,
        c1: &Self::Element,
        c2: &Self::Element,
    ) -> Result<Vec<Self::Element>, DomainError> {
        if c1.is_zero() || c2.is_zero() {
            return Err(DomainError::ZeroReducer);
        }
        let lm1 = self.leading_monomial(c1)?;
        let lm2 = self.leading_monomial(c2)?;
        let gamma = exp_lcm(&lm1.exps, &lm2.exps)?;
        // One candidate per coefficient-level mntcr, lifted onto the lcm
        // monomial. Over a field the coefficient-level answer is ⟨1⟩, which
        // gives the classical monic lcm of the leading monomials.
        let coeff_sources = self.coeff.mntcr(&lm1.coeff, &lm2.coeff)?;
        Ok(coeff_sources
            .into_iter()
            .map(|t| PolyTuple {
                monomials: vec![Monomial {
                    coeff: t,
                    exps: gamma.clone(),
                }],
            })
            .collect())
    }

    fn red_tag(&self, basis: &[Self::Element]) -> String {
        let mut lms: Vec<&[u32]> = basis
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.monomials[0].exps.as_slice())
            .collect();
        lms.sort();
        lms.dedup();
        let minimal = lms
            .iter()
            .filter(|e| !lms.iter().any(|d| d != *e && exp_divides(d, e)))
            .count();
        format!("lm_gens={minimal}")
    }

    fn render(&self, a: &Self::Element) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, m) in a.monomials.iter().enumerate() {
            let coeff = self.coeff.render(&m.coeff);
            let vars: Vec<String> = self
                .vars
                .iter()
                .zip(&m.exps)
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let term = if vars.is_empty() {
                coeff
            } else if coeff == "1" {
                vars.join("*")
            } else if coeff == "-1" {
                format!("-{}", vars.join("*"))
            } else {
                format!("{coeff}*{}", vars.join("*"))
            };
            if i == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::integers::Integers;
    use crate::domains::rationals::Rationals;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn qring() -> PolyRing<Rationals> {
        PolyRing::new(
            Rationals,
            vec!["x".to_string(), "y".to_string()],
            MonomialOrder::Lex,
        )
        .unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn ring_identity_x2_minus_1() {
        let r = qring();
        let xp1 = r.poly(&[(q(1), &[1, 0]), (q(1), &[0, 0])]);
        let xm1 = r.poly(&[(q(1), &[1, 0]), (q(-1), &[0, 0])]);
        let expect = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        assert_eq!(r.mul(&xp1, &xm1), expect);
    }

    #[test]
    fn leading_monomial_examples() {
        let r = qring();
        let xy_m1 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        assert_eq!(r.leading_monomial(&xy_m1).unwrap().exps, vec![1, 1]);
        let x2_m1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        assert_eq!(r.leading_monomial(&x2_m1).unwrap().exps, vec![2, 0]);
        assert!(r.leading_monomial(&r.zero()).is_err());

        let dr = PolyRing::new(
            Rationals,
            vec!["x".into(), "y".into()],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let p = dr.poly(&[(q(1), &[1, 0]), (q(1), &[0, 2])]);
        assert_eq!(dr.leading_monomial(&p).unwrap().exps, vec![0, 2]);
    }

    #[test]
    fn reduce_step_monomial_division() {
        let r = qring();
        let a = r.poly(&[(q(1), &[2, 1])]); // x^2 y
        let c = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]); // x^2 - 1
        let s = r.reduce_step(&a, &c).unwrap().unwrap();
        assert_eq!(s.multiplier, r.poly(&[(q(1), &[0, 1])])); // y
        assert_eq!(s.result, r.poly(&[(q(1), &[0, 1])])); // y
        assert!(r.order_below(&s.result, &a));
    }

    #[test]
    fn inner_monomials_are_reducible() {
        // x^2 + x y modulo {x y - 1}: the inner monomial is the target
        let r = qring();
        let a = r.poly(&[(q(1), &[2, 0]), (q(1), &[1, 1])]);
        let c = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let s = r.reduce_step(&a, &c).unwrap().unwrap();
        let expect = r.poly(&[(q(1), &[2, 0]), (q(1), &[0, 0])]); // x^2 + 1
        assert_eq!(s.result, expect);
    }

    #[test]
    fn integer_coefficients_shrink_leading_coefficient() {
        let r = PolyRing::new(Integers, vec!["x".to_string()], MonomialOrder::Lex).unwrap();
        let a = r.poly(&[(BigInt::from(5), &[1])]);
        let c = r.poly(&[(BigInt::from(2), &[1])]);
        let s = r.reduce_step(&a, &c).unwrap().unwrap();
        assert_eq!(s.result, r.poly(&[(BigInt::from(1), &[1])]));
        assert!(r.order_below(&s.result, &a));
    }

    #[test]
    fn mntcr_is_lcm_of_leading_monomials() {
        let r = qring();
        let c1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        let c2 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let m = r.mntcr(&c1, &c2).unwrap();
        assert_eq!(m, vec![r.poly(&[(q(1), &[2, 1])])]); // x^2 y
    }

    #[test]
    fn render_is_readable() {
        let r = qring();
        let p = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        assert_eq!(r.render(&p), "x^2 - 1");
        let p = r.poly(&[(q(-1), &[1, 0]), (q(1), &[0, 1])]);
        assert_eq!(r.render(&p), "-x + y");
        let p = r.poly(&[(q(3), &[1, 2])]);
        assert_eq!(r.render(&p), "3*x*y^2");
        assert_eq!(r.render(&r.zero()), "0");
    }

    #[test]
    fn validate_rejects_malformed_tuples() {
        let r = qring();
        // wrong arity
        let bad = PolyTuple {
            monomials: vec![Monomial {
                coeff: q(1),
                exps: vec![1],
            }],
        };
        assert!(r.validate(&bad).is_err());
        // zero coefficient
        let bad = PolyTuple {
            monomials: vec![Monomial {
                coeff: q(0),
                exps: vec![1, 0],
            }],
        };
        assert!(r.validate(&bad).is_err());
        // ascending order
        let bad = PolyTuple {
            monomials: vec![
                Monomial {
                    coeff: q(1),
                    exps: vec![0, 1],
                },
                Monomial {
                    coeff: q(1),
                    exps: vec![1, 0],
                },
            ],
        };
        assert!(r.validate(&bad).is_err());
        assert!(r.validate(&r.poly(&[(q(1), &[1, 0]), (q(1), &[0, 1])])).is_ok());
    }
}
