//! Gröbner bases in reduction rings.
//!
//! A reduction ring is a unital commutative ring with a partial Noetherian
//! ordering under which single-step reduction (`b = a − m·c` with `b ≺ a`)
//! makes sense; a Gröbner basis is a tuple modulo which that reduction is
//! confluent. This crate provides:
//!
//! * the abstract contract ([`ring::ReductionRing`]) and a generic engine
//!   for normal forms and critical pairs ([`engine`]),
//! * the critical-pair/completion loop with termination-measure traces and
//!   the membership/equality deciders ([`buchberger`]),
//! * four concrete domains: exact rationals, integers, integer quotient
//!   rings and multivariate polynomial tuples over any of those
//!   ([`domains`]),
//! * exhaustive brute-force verification on finite universes plus a
//!   textbook classical Buchberger cross-check ([`oracle`]).
//!
//! Completion over `Z/6`:
//!
//! ```
//! use rrgb::buchberger::{gb, is_member, GbConfig};
//! use rrgb::domains::ModularRing;
//!
//! let ring = ModularRing::new(6).unwrap();
//! let out = gb(&ring, &[2, 3], &GbConfig::default()).unwrap();
//! assert!(is_member(&ring, &1, &out.basis));
//! ```

pub mod buchberger;
pub mod descriptor;
pub mod domains;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod ring;
pub mod syntax;

pub use descriptor::RingDescriptor;
pub use error::{DomainError, GbError};
pub use ring::{CriticalPair, EnumerableReduction, FiniteRing, ReductionRing, ReductionStep};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Exact integer scalar.
pub type Integer = num_bigint::BigInt;
/// Canonical residue representative in `0..n`.
pub type Residue = u64;

/// Polynomial tuples over each scalar domain.
pub type RationalPoly = domains::PolyTuple<Rational>;
pub type IntegerPoly = domains::PolyTuple<Integer>;
pub type ResiduePoly = domains::PolyTuple<Residue>;

/// Concrete polynomial ring instances.
pub type RationalPolyRing = domains::PolyRing<domains::Rationals>;
pub type IntegerPolyRing = domains::PolyRing<domains::Integers>;
pub type ResiduePolyRing = domains::PolyRing<domains::ModularRing>;
