//! Textbook Buchberger over rational coefficients, used purely as an
//! independent cross-check for the generic engine on polynomial domains.
//!
//! The division loop here is the classical multivariate division with
//! remainder (leading term first, irreducible leading terms moved out); it
//! deliberately shares no code with the engine's reduce_step/normal_form
//! path. Only distinct index pairs are considered and the S-polynomial
//! difference is reduced directly, exactly as in the polynomials-over-fields
//! setting.

use std::collections::VecDeque;

use num_rational::BigRational;

use crate::domains::monomial::{exp_add, exp_divides, exp_lcm, exp_sub};
use crate::domains::poly::{Monomial, PolyRing, PolyTuple};
use crate::domains::rationals::Rationals;
use crate::ring::ReductionRing;

use super::OracleError;

pub type QPoly = PolyTuple<BigRational>;
pub type QPolyRing = PolyRing<Rationals>;

fn mul_monomial(p: &QPoly, m: &Monomial<BigRational>) -> QPoly {
    // multiplying by a single monomial preserves the sort order
    PolyTuple {
        monomials: p
            .monomials
            .iter()
            .map(|t| Monomial {
                coeff: &t.coeff * &m.coeff,
                exps: exp_add(&t.exps, &m.exps),
            })
            .collect(),
    }
}

/// Classical multivariate division: the remainder of `f` on division by the
/// (nonzero) elements of `basis`. No monomial of the remainder is divisible
/// by any leading monomial of the basis.
pub fn classical_normal_form(ring: &QPolyRing, f: &QPoly, basis: &[QPoly]) -> QPoly {
    let mut p = f.clone();
    let mut remainder: Vec<Monomial<BigRational>> = Vec::new();
    'outer: while let Some(lt) = p.monomials.first().cloned() {
        for g in basis.iter().filter(|g| !g.is_zero()) {
            let glm = &g.monomials[0];
            if exp_divides(&glm.exps, &lt.exps) {
                let factor = Monomial {
                    coeff: &lt.coeff / &glm.coeff,
                    exps: exp_sub(&lt.exps, &glm.exps),
                };
                p = ring.sub(&p, &mul_monomial(g, &factor));
                continue 'outer;
            }
        }
        remainder.push(lt);
        p.monomials.remove(0);
    }
    ring.from_monomials(remainder)
}

/// The classical S-polynomial of two nonzero polynomials.
pub fn s_polynomial(ring: &QPolyRing, f: &QPoly, g: &QPoly) -> Result<QPoly, OracleError> {
    let flm = f.monomials.first().ok_or(OracleError::Domain(
        crate::error::DomainError::ZeroReducer,
    ))?;
    let glm = g.monomials.first().ok_or(OracleError::Domain(
        crate::error::DomainError::ZeroReducer,
    ))?;
    let gamma = exp_lcm(&flm.exps, &glm.exps)?;
    let one = BigRational::from_integer(1.into());
    let left = mul_monomial(
        f,
        &Monomial {
            coeff: &one / &flm.coeff,
            exps: exp_sub(&gamma, &flm.exps),
        },
    );
    let right = mul_monomial(
        g,
        &Monomial {
            coeff: &one / &glm.coeff,
            exps: exp_sub(&gamma, &glm.exps),
        },
    );
    Ok(ring.sub(&left, &right))
}

/// Textbook Buchberger completion over the rationals: distinct pairs only,
/// S-polynomial differences reduced to remainder directly.
pub fn classical_buchberger(ring: &QPolyRing, gens: &[QPoly]) -> Result<Vec<QPoly>, OracleError> {
    let mut basis: Vec<QPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push_back((i, j));
        }
    }
    let mut guard = 0u64;
    while let Some((i, j)) = queue.pop_front() {
        guard += 1;
        if guard > 200_000 {
            return Err(OracleError::LimitExceeded);
        }
        let s = s_polynomial(ring, &basis[i], &basis[j])?;
        let r = classical_normal_form(ring, &s, &basis);
        if !r.is_zero() {
            for t in 0..basis.len() {
                queue.push_back((t, basis.len()));
            }
            basis.push(r);
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::MonomialOrder;
    use num_bigint::BigInt;

    fn ring() -> QPolyRing {
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
    fn division_reduces_spoly_of_joinable_pair() {
        let r = ring();
        let c1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        let c2 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let s = s_polynomial(&r, &c1, &c2).unwrap();
        // lcm is x²y: y·(x²−1) − x·(xy−1) = x − y
        let expect = r.poly(&[(q(1), &[1, 0]), (q(-1), &[0, 1])]);
        assert_eq!(s, expect);
        let nf = classical_normal_form(&r, &s, &[c1, c2]);
        assert_eq!(nf, s); // x − y is already irreducible modulo the pair
    }

    #[test]
    fn singleton_is_its_own_basis() {
        let r = ring();
        let p = r.poly(&[(q(1), &[2, 1]), (q(3), &[0, 0])]);
        let out = classical_buchberger(&r, std::slice::from_ref(&p)).unwrap();
        assert_eq!(out, vec![p]);
    }

    #[test]
    fn all_spolys_of_output_reduce_to_zero() {
        let r = ring();
        let c1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        let c2 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let out = classical_buchberger(&r, &[c1, c2]).unwrap();
        for i in 0..out.len() {
            for j in (i + 1)..out.len() {
                let s = s_polynomial(&r, &out[i], &out[j]).unwrap();
                assert!(classical_normal_form(&r, &s, &out).is_zero());
            }
        }
    }
}
