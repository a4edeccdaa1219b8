//! The reduction-ring contract.
//!
//! A reduction ring is a unital commutative ring carrying a partial
//! Noetherian ordering `≺` together with a notion of single-step reduction:
//! `a` reduces to `b` modulo `c` iff `b = a − m·c` for some multiplier `m`
//! and `b ≺ a`. Everything downstream (normal forms, critical pairs, the
//! completion loop, the confluence oracle) is generic over this trait.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::DomainError;

/// One reduction step `a → b` with its witnesses.
///
/// Invariants: `result = input − multiplier · reducer` and `result ≺ input`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep<E> {
    /// The basis element `c` used.
    pub reducer: E,
    /// The multiplier `m`.
    pub multiplier: E,
    /// The reduct `b`.
    pub result: E,
}

/// A critical pair `⟨b, b̄⟩` descending from a minimal non-trivial common
/// reducible `a` of two basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair<E> {
    /// `b`, the one-step reduct of `source` by the first reducer.
    pub first: E,
    /// `b̄`, the one-step reduct of `source` by the second reducer.
    pub second: E,
    /// The common reducible `a` both components descend from.
    pub source: E,
    /// 1-based basis indices `(k, l)` of the two reducers.
    pub reducers: (usize, usize),
}

/// The abstract reduction-ring contract.
///
/// Elements are plain values with no back-pointer to their ring; every
/// operation receives the ambient ring. Implementations must be pure: equal
/// inputs always produce equal outputs, and all values are immutable.
pub trait ReductionRing {
    /// Canonical element representation of this domain.
    type Element: Clone + PartialEq + Eq + Hash + Debug;

    /// Human-readable ring description, e.g. `Z/8` or `poly(Q; x,y; lex)`.
    fn describe(&self) -> String;

    fn zero(&self) -> Self::Element;

    fn one(&self) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn neg(&self, a: &Self::Element) -> Self::Element;

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }

    /// Checks that `a` is a canonical member of this ring (residue in range,
    /// reduced fraction, sorted nonzero monomials of the right arity, ...).
    fn validate(&self, a: &Self::Element) -> Result<(), DomainError>;

    /// The strict part of the domain's Noetherian ordering: `a ≺ b`.
    fn order_below(&self, a: &Self::Element, b: &Self::Element) -> bool;

    /// The canonical single reduction step of `a` by `c`, per the domain's
    /// multiplier selection rule, or `None` when no multiplier produces a
    /// strictly smaller result. Errors when `c = 0`.
    fn reduce_step(
        &self,
        a: &Self::Element,
        c: &Self::Element,
    ) -> Result<Option<ReductionStep<Self::Element>>, DomainError>;

    /// The minimal non-trivial common reducibles of `c1` and `c2`, in a
    /// deterministic order. Errors when either argument is zero.
    fn mntcr(
        &self,
        c1: &Self::Element,
        c2: &Self::Element,
    ) -> Result<Vec<Self::Element>, DomainError>;

    /// Display-level proxy for the reducible-set component of the §-style
    /// termination measure; used in traces and stats, never in assertions.
    fn red_tag(&self, basis: &[Self::Element]) -> String;

    /// Renders an element in the textual syntax the CLI parses back.
    fn render(&self, a: &Self::Element) -> String;
}

/// Complete enumeration of single-step reducts under *any* multiplier, for
/// domains where that set is finite and computable. This is the oracle's
/// edge relation; the engine's `reduce_step` must always pick one of these.
pub trait EnumerableReduction: ReductionRing {
    /// Every `b` with `b = a − m·c` for some multiplier `m` and `b ≺ a`.
    /// Deterministic order; empty when no reduction applies. Errors on `c = 0`.
    fn all_reducts(
        &self,
        a: &Self::Element,
        c: &Self::Element,
    ) -> Result<Vec<Self::Element>, DomainError>;
}

/// Rings with finitely many elements, enumerable for exhaustive checks.
pub trait FiniteRing: ReductionRing {
    /// All elements of the ring, in a deterministic order.
    fn elements(&self) -> Vec<Self::Element>;
}
