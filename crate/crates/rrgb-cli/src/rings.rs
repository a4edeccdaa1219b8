//! Runtime dispatch from a parsed descriptor to a concrete ring instance.

use rrgb::domains::{Integers, ModularRing, MonomialOrder, PolyRing, Rationals};
use rrgb::error::DomainError;
use rrgb::{IntegerPolyRing, RationalPolyRing, ResiduePolyRing, RingDescriptor};

pub enum AnyRing {
    Rationals(Rationals),
    Integers(Integers),
    Modular(ModularRing),
    RationalPoly(RationalPolyRing),
    IntegerPoly(IntegerPolyRing),
    ResiduePoly(ResiduePolyRing),
}

pub fn instantiate(desc: &RingDescriptor) -> Result<AnyRing, DomainError> {
    desc.validate()?;
    Ok(match desc {
        RingDescriptor::Rationals => AnyRing::Rationals(Rationals),
        RingDescriptor::Integers => AnyRing::Integers(Integers),
        RingDescriptor::Quotient { modulus } => AnyRing::Modular(ModularRing::new(*modulus)?),
        RingDescriptor::Poly { coeff, vars, order } => {
            let vars = vars.clone();
            let order = *order;
            match **coeff {
                RingDescriptor::Rationals => {
                    AnyRing::RationalPoly(mk_poly(Rationals, vars, order)?)
                }
                RingDescriptor::Integers => AnyRing::IntegerPoly(mk_poly(Integers, vars, order)?),
                RingDescriptor::Quotient { modulus } => {
                    AnyRing::ResiduePoly(mk_poly(ModularRing::new(modulus)?, vars, order)?)
                }
                RingDescriptor::Poly { .. } => {
                    return Err(DomainError::InvalidRing(
                        "polynomial coefficients over a polynomial ring are unsupported".into(),
                    ))
                }
            }
        }
    })
}

fn mk_poly<C: rrgb::ReductionRing>(
    coeff: C,
    vars: Vec<String>,
    order: MonomialOrder,
) -> Result<PolyRing<C>, DomainError> {
    PolyRing::new(coeff, vars, order)
}
