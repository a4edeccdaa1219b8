//! Domain-generic reduction: reducibility, normal forms, critical pairs.
//!
//! Zero basis entries are skipped everywhere (reduction by zero never
//! decreases anything), so callers may pass unstripped bases.

use crate::error::DomainError;
use crate::ring::{CriticalPair, ReductionRing, ReductionStep};

/// Reducer-selection strategy for `normal_form`. The default tries reducers
/// in ascending basis index and takes the first applicable step; the
/// alternative exists to witness confluence (normal forms modulo a Gröbner
/// basis must not depend on the strategy).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LowestIndexFirst,
    HighestIndexFirst,
}

fn scan_order(len: usize, strategy: Strategy) -> Box<dyn Iterator<Item = usize>> {
    match strategy {
        Strategy::LowestIndexFirst => Box::new(0..len),
        Strategy::HighestIndexFirst => Box::new((0..len).rev()),
    }
}

/// The first applicable canonical step under the strategy, together with the
/// 1-based index of the reducer used.
pub fn find_step<R: ReductionRing>(
    ring: &R,
    a: &R::Element,
    basis: &[R::Element],
    strategy: Strategy,
) -> Option<(usize, ReductionStep<R::Element>)> {
    for k in scan_order(basis.len(), strategy) {
        let c = &basis[k];
        if ring.is_zero(c) {
            continue;
        }
        let step = ring
            .reduce_step(a, c)
            .expect("nonzero reducer cannot raise zero-reducer error");
        if let Some(step) = step {
            return Some((k + 1, step));
        }
    }
    None
}

/// Is `a` reducible modulo the basis, i.e. `a ∈ red[C]`?
pub fn is_reducible<R: ReductionRing>(ring: &R, a: &R::Element, basis: &[R::Element]) -> bool {
    find_step(ring, a, basis, Strategy::LowestIndexFirst).is_some()
}

/// Fully reduces `a` modulo the basis and records every step taken.
/// Terminates because each step strictly descends in the Noetherian order.
pub fn normal_form_chain<R: ReductionRing>(
    ring: &R,
    a: &R::Element,
    basis: &[R::Element],
    strategy: Strategy,
) -> (R::Element, Vec<(usize, ReductionStep<R::Element>)>) {
    let mut current = a.clone();
    let mut chain = Vec::new();
    while let Some((k, step)) = find_step(ring, &current, basis, strategy) {
        debug_assert!(ring.order_below(&step.result, &current));
        current = step.result.clone();
        chain.push((k, step));
    }
    (current, chain)
}

/// The normal form of `a` modulo the basis under the fixed strategy.
pub fn normal_form<R: ReductionRing>(
    ring: &R,
    a: &R::Element,
    basis: &[R::Element],
    strategy: Strategy,
) -> R::Element {
    normal_form_chain(ring, a, basis, strategy).0
}

/// Normal form plus the number of reduction steps performed.
pub fn normal_form_counted<R: ReductionRing>(
    ring: &R,
    a: &R::Element,
    basis: &[R::Element],
    strategy: Strategy,
) -> (R::Element, u64) {
    let mut current = a.clone();
    let mut steps = 0u64;
    while let Some((_, step)) = find_step(ring, &current, basis, strategy) {
        current = step.result;
        steps += 1;
    }
    (current, steps)
}

/// The critical pairs of `ck` and `cl`: one per minimal non-trivial common
/// reducible, components produced by the canonical reduction step of each
/// reducer. `k` and `l` are the 1-based basis indices recorded for traces.
pub fn critical_pairs<R: ReductionRing>(
    ring: &R,
    ck: &R::Element,
    cl: &R::Element,
    k: usize,
    l: usize,
) -> Result<Vec<CriticalPair<R::Element>>, DomainError> {
    let sources = ring.mntcr(ck, cl)?;
    let mut out = Vec::with_capacity(sources.len());
    for a in sources {
        let first = ring
            .reduce_step(&a, ck)?
            .expect("mntcr element must be one-step reducible by its first reducer")
            .result;
        let second = ring
            .reduce_step(&a, cl)?
            .expect("mntcr element must be one-step reducible by its second reducer")
            .result;
        out.push(CriticalPair {
            first,
            second,
            source: a,
            reducers: (k, l),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{Integers, ModularRing, MonomialOrder, PolyRing, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn q(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn reducibility_examples() {
        let r = Integers;
        assert!(!is_reducible(&r, &z(1), &[z(4), z(6)]));
        assert!(is_reducible(&r, &z(10), &[z(4), z(6)]));
        assert!(!is_reducible(&r, &z(5), &[]));
        // zero basis entries are ignored
        assert!(!is_reducible(&r, &z(5), &[z(0)]));
        let m = ModularRing::new(8).unwrap();
        assert!(is_reducible(&m, &6, &[4]));
    }

    #[test]
    fn normal_form_on_empty_basis_is_identity() {
        let r = Integers;
        assert_eq!(normal_form(&r, &z(42), &[], Strategy::default()), z(42));
    }

    #[test]
    fn normal_form_is_irreducible_and_idempotent() {
        let r = Integers;
        let basis = [z(4), z(6)];
        let nf = normal_form(&r, &z(10), &basis, Strategy::default());
        assert_eq!(nf, z(2));
        assert!(!is_reducible(&r, &nf, &basis));
        assert_eq!(normal_form(&r, &nf, &basis, Strategy::default()), nf);
    }

    #[test]
    fn normal_form_chain_strictly_descends() {
        let r = Integers;
        let basis = [z(5), z(7)];
        let (_, chain) = normal_form_chain(&r, &z(100), &basis, Strategy::default());
        let mut prev = z(100);
        for (k, step) in chain {
            assert!((1..=basis.len()).contains(&k));
            assert_eq!(&prev - &step.multiplier * &step.reducer, step.result);
            assert!(r.order_below(&step.result, &prev));
            prev = step.result;
        }
    }

    #[test]
    fn strategy_picks_reducer_order() {
        // x^2 y modulo ⟨x^2 − 1, x y − 1⟩: lowest-index-first gives y,
        // highest-index-first gives x.
        let r = PolyRing::new(
            Rationals,
            vec!["x".to_string(), "y".to_string()],
            MonomialOrder::Lex,
        )
        .unwrap();
        let a = r.poly(&[(q(1), &[2, 1])]);
        let c1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        let c2 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let basis = [c1, c2];
        let low = normal_form(&r, &a, &basis, Strategy::LowestIndexFirst);
        let high = normal_form(&r, &a, &basis, Strategy::HighestIndexFirst);
        assert_eq!(low, r.poly(&[(q(1), &[0, 1])]));
        assert_eq!(high, r.poly(&[(q(1), &[1, 0])]));
    }

    #[test]
    fn critical_pair_of_the_running_example() {
        let r = PolyRing::new(
            Rationals,
            vec!["x".to_string(), "y".to_string()],
            MonomialOrder::Lex,
        )
        .unwrap();
        let c1 = r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]);
        let c2 = r.poly(&[(q(1), &[1, 1]), (q(-1), &[0, 0])]);
        let pairs = critical_pairs(&r, &c1, &c2, 1, 2).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].source, r.poly(&[(q(1), &[2, 1])]));
        assert_eq!(pairs[0].first, r.poly(&[(q(1), &[0, 1])]));
        assert_eq!(pairs[0].second, r.poly(&[(q(1), &[1, 0])]));
        assert_eq!(pairs[0].reducers, (1, 2));
    }

    #[test]
    fn self_pair_over_univariate_rationals() {
        let r = PolyRing::new(Rationals, vec!["x".to_string()], MonomialOrder::Lex).unwrap();
        let c = r.poly(&[(q(1), &[2]), (q(-1), &[0])]);
        let pairs = critical_pairs(&r, &c, &c, 1, 1).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].source, r.poly(&[(q(1), &[2])]));
        assert_eq!(pairs[0].first, r.one());
        assert_eq!(pairs[0].second, r.one());
    }

    #[test]
    fn modular_pairs_match_enumeration() {
        let m = ModularRing::new(6).unwrap();
        let pairs = critical_pairs(&m, &2, &3, 1, 2).unwrap();
        assert_eq!(pairs.len(), 3);
        for p in &pairs {
            assert_ne!(p.first, p.second);
        }
    }
}
