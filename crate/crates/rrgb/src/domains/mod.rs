//! Concrete reduction-ring domains: exact rationals, integers, integer
//! quotient rings, and multivariate polynomial tuples over any of those.

pub mod integers;
pub mod modular;
pub mod monomial;
pub mod poly;
pub mod rationals;

pub use integers::{integer_window, Integers};
pub use modular::ModularRing;
pub use monomial::{exp_divides, exp_lcm, total_degree, MonomialOrder};
pub use poly::{Monomial, PolyRing, PolyTuple};
pub use rationals::Rationals;
