//! Independent verification machinery: exhaustive reduction graphs over
//! finite universes, confluence and connectibility checks, the main-theorem
//! criterion, ideal enumeration on finite rings, and a textbook classical
//! Buchberger implementation for cross-validation on polynomials over
//! fields.
//!
//! Unlike the engine, which commits to one canonical multiplier per step,
//! the graph here contains an edge for *every* admissible multiplier; each
//! engine step is therefore one of the oracle's edges, never the reverse.

pub mod classical;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::DomainError;
use crate::ring::{EnumerableReduction, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    Domain(DomainError),
    /// An edge failed to descend, or the graph contains a cycle: the
    /// domain's order is broken.
    OrderViolation(String),
    /// A reduct fell outside the supplied universe.
    UniverseNotClosed(String),
    /// The classical cross-check exceeded its safety bound.
    LimitExceeded,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Domain(e) => write!(f, "{e}"),
            OracleError::OrderViolation(what) => write!(f, "domain order violation: {what}"),
            OracleError::UniverseNotClosed(what) => {
                write!(f, "universe not closed under reduction: {what}")
            }
            OracleError::LimitExceeded => write!(f, "oracle safety limit exceeded"),
        }
    }
}

impl std::error::Error for OracleError {}

impl From<DomainError> for OracleError {
    fn from(e: DomainError) -> Self {
        OracleError::Domain(e)
    }
}

/// The one-step reduction relation `→_C` over a finite universe, with an
/// edge for every admissible multiplier.
#[derive(Debug, Clone)]
pub struct ReductionGraph<E> {
    nodes: Vec<E>,
    index: HashMap<E, usize>,
    out_edges: Vec<Vec<usize>>,
}

impl<E: Clone + Eq + std::hash::Hash + fmt::Debug> ReductionGraph<E> {
    pub fn build<R>(ring: &R, basis: &[R::Element], universe: &[R::Element]) -> Result<Self, OracleError>
    where
        R: EnumerableReduction<Element = E>,
    {
        let mut nodes = Vec::new();
        let mut index = HashMap::new();
        for u in universe {
            if !index.contains_key(u) {
                index.insert(u.clone(), nodes.len());
                nodes.push(u.clone());
            }
        }
        let mut out_edges = vec![Vec::new(); nodes.len()];
        for (ai, a) in nodes.iter().enumerate() {
            for c in basis.iter().filter(|c| !ring.is_zero(c)) {
                for b in ring.all_reducts(a, c)? {
                    if !ring.order_below(&b, a) {
                        return Err(OracleError::OrderViolation(format!(
                            "edge {a:?} -> {b:?} does not descend"
                        )));
                    }
                    let bi = *index.get(&b).ok_or_else(|| {
                        OracleError::UniverseNotClosed(format!("reduct {b:?} of {a:?} missing"))
                    })?;
                    out_edges[ai].push(bi);
                }
            }
        }
        for edges in &mut out_edges {
            edges.sort_unstable();
            edges.dedup();
        }
        let graph = ReductionGraph {
            nodes,
            index,
            out_edges,
        };
        graph.check_acyclic()?;
        Ok(graph)
    }

    fn check_acyclic(&self) -> Result<(), OracleError> {
        // iterative three-color DFS; a back edge would mean a broken order
        let n = self.nodes.len();
        let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < self.out_edges[v].len() {
                    let w = self.out_edges[v][*next];
                    *next += 1;
                    match color[w] {
                        0 => {
                            color[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => {
                            return Err(OracleError::OrderViolation(format!(
                                "reduction cycle through {:?}",
                                self.nodes[w]
                            )));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn is_terminal(&self, e: &E) -> bool {
        self.index
            .get(e)
            .map(|&i| self.out_edges[i].is_empty())
            .unwrap_or(false)
    }

    /// For every node, the set of terminal elements reachable from it (its
    /// normal forms under the any-multiplier relation).
    pub fn normal_form_sets(&self) -> Vec<HashSet<usize>> {
        let n = self.nodes.len();
        let mut memo: Vec<Option<HashSet<usize>>> = vec![None; n];
        for start in 0..n {
            if memo[start].is_some() {
                continue;
            }
            // post-order over the DAG
            let mut stack = vec![(start, false)];
            while let Some((v, expanded)) = stack.pop() {
                if memo[v].is_some() {
                    continue;
                }
                if expanded {
                    let mut set = HashSet::new();
                    if self.out_edges[v].is_empty() {
                        set.insert(v);
                    } else {
                        for &w in &self.out_edges[v] {
                            set.extend(memo[w].as_ref().expect("child computed").iter().copied());
                        }
                    }
                    memo[v] = Some(set);
                } else {
                    stack.push((v, true));
                    for &w in &self.out_edges[v] {
                        if memo[w].is_none() {
                            stack.push((w, false));
                        }
                    }
                }
            }
        }
        memo.into_iter().map(|s| s.expect("computed")).collect()
    }

    pub fn node(&self, i: usize) -> &E {
        &self.nodes[i]
    }

    /// Undirected connected-component labels.
    fn components(&self) -> Vec<usize> {
        let n = self.nodes.len();
        let mut undirected: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, outs) in self.out_edges.iter().enumerate() {
            for &w in outs {
                undirected[v].push(w);
                undirected[w].push(v);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = next;
            while let Some(v) = queue.pop_front() {
                for &w in &undirected[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }
}

/// `red[C]` over the given universe: everything reducible by some basis
/// element under some multiplier.
pub fn red_set<R: EnumerableReduction>(
    ring: &R,
    basis: &[R::Element],
    universe: &[R::Element],
) -> Result<HashSet<R::Element>, OracleError> {
    let mut out = HashSet::new();
    for a in universe {
        for c in basis.iter().filter(|c| !ring.is_zero(c)) {
            if !ring.all_reducts(a, c)?.is_empty() {
                out.insert(a.clone());
                break;
            }
        }
    }
    Ok(out)
}

/// Confluence of `→_C` over the universe. For a terminating relation this
/// is equivalent to every element having exactly one terminal descendant.
pub fn is_confluent<R: EnumerableReduction>(
    ring: &R,
    basis: &[R::Element],
    universe: &[R::Element],
) -> Result<bool, OracleError> {
    let graph = ReductionGraph::build(ring, basis, universe)?;
    Ok(graph.normal_form_sets().iter().all(|s| s.len() == 1))
}

/// Are `b` and `b̄` joined by an undirected reduction path in which every
/// element (endpoints included) is strictly below `a`?
pub fn connectible_below<R: EnumerableReduction>(
    ring: &R,
    b: &R::Element,
    bbar: &R::Element,
    a: &R::Element,
    basis: &[R::Element],
    universe: &[R::Element],
) -> Result<bool, OracleError> {
    if !ring.order_below(b, a) || !ring.order_below(bbar, a) {
        return Ok(false);
    }
    let restricted: Vec<R::Element> = universe
        .iter()
        .filter(|x| ring.order_below(x, a))
        .cloned()
        .collect();
    let graph = ReductionGraph::build(ring, basis, &restricted)?;
    let (Some(&bi), Some(&bbi)) = (graph.index.get(b), graph.index.get(bbar)) else {
        return Err(OracleError::UniverseNotClosed(format!(
            "{b:?} or {bbar:?} not in the universe below {a:?}"
        )));
    };
    let labels = graph.components();
    Ok(labels[bi] == labels[bbi])
}

/// The finite confluence criterion: for all (not necessarily distinct)
/// basis elements and all their minimal non-trivial common reducibles,
/// some critical pair connects below its source.
pub fn main_theorem_criterion<R: EnumerableReduction>(
    ring: &R,
    basis: &[R::Element],
    universe: &[R::Element],
) -> Result<bool, OracleError> {
    let nonzero: Vec<&R::Element> = basis.iter().filter(|c| !ring.is_zero(c)).collect();
    for (ki, ck) in nonzero.iter().enumerate() {
        for cl in &nonzero[ki..] {
            for a in ring.mntcr(ck, cl)? {
                let firsts = ring.all_reducts(&a, ck)?;
                let seconds = ring.all_reducts(&a, cl)?;
                // one restricted graph per source; pairs share components
                let restricted: Vec<R::Element> = universe
                    .iter()
                    .filter(|x| ring.order_below(x, &a))
                    .cloned()
                    .collect();
                let graph = ReductionGraph::build(ring, basis, &restricted)?;
                let labels = graph.components();
                let mut connected = false;
                'search: for b in &firsts {
                    for bbar in &seconds {
                        let (Some(&bi), Some(&bbi)) =
                            (graph.index.get(b), graph.index.get(bbar))
                        else {
                            return Err(OracleError::UniverseNotClosed(format!(
                                "critical pair of {a:?} escapes the universe"
                            )));
                        };
                        if labels[bi] == labels[bbi] {
                            connected = true;
                            break 'search;
                        }
                    }
                }
                if !connected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The ideal generated by the basis over a finite ring, by fixpoint
/// closure of `{0}` under `s + r·c`.
pub fn ideal_enumerate<R: FiniteRing>(ring: &R, basis: &[R::Element]) -> HashSet<R::Element> {
    let elements = ring.elements();
    let mut set = HashSet::new();
    set.insert(ring.zero());
    for _round in 0..=elements.len() {
        let snapshot: Vec<R::Element> = set.iter().cloned().collect();
        let before = set.len();
        for s in &snapshot {
            for c in basis {
                for r in &elements {
                    set.insert(ring.add(s, &ring.mul(r, c)));
                }
            }
        }
        if set.len() == before {
            break;
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchberger::{gb, GbConfig};
    use crate::domains::{integer_window, Integers, ModularRing};
    use num_bigint::BigInt;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn red_set_examples() {
        let m = ModularRing::new(6).unwrap();
        let all = m.elements();
        assert!(red_set(&m, &[], &all).unwrap().is_empty());
        let red2 = red_set(&m, &[2], &all).unwrap();
        assert_eq!(red2, HashSet::from([2, 3, 4, 5]));
        // monotone under appending
        let red23 = red_set(&m, &[2, 3], &all).unwrap();
        assert!(red2.is_subset(&red23));
    }

    #[test]
    fn empty_basis_is_confluent() {
        let m = ModularRing::new(5).unwrap();
        assert!(is_confluent(&m, &[], &m.elements()).unwrap());
    }

    #[test]
    fn nonzero_singleton_over_prime_modulus_is_confluent() {
        let m = ModularRing::new(5).unwrap();
        for c in 1..5u64 {
            assert!(is_confluent(&m, &[c], &m.elements()).unwrap());
        }
    }

    #[test]
    fn raw_basis_4_6_is_not_confluent_over_integers() {
        // 6 has the two normal forms 0 and 2 modulo {4, 6}
        let r = Integers;
        let universe = integer_window(48);
        assert!(!is_confluent(&r, &[z(4), z(6)], &universe).unwrap());
        // after completion it is confluent
        let out = gb(&r, &[z(4), z(6)], &GbConfig::default()).unwrap();
        assert!(is_confluent(&r, out.basis.elements(), &universe).unwrap());
    }

    #[test]
    fn connectible_below_examples() {
        let m = ModularRing::new(6).unwrap();
        let all = m.elements();
        // x connectible to itself below anything above it
        assert!(connectible_below(&m, &1, &1, &2, &[], &all).unwrap());
        assert!(!connectible_below(&m, &2, &2, &1, &[], &all).unwrap());
        // empty basis: only equal-and-below connects
        assert!(!connectible_below(&m, &1, &0, &2, &[], &all).unwrap());
    }

    #[test]
    fn criterion_vacuous_on_empty_basis() {
        let m = ModularRing::new(8).unwrap();
        assert!(main_theorem_criterion(&m, &[], &m.elements()).unwrap());
    }

    #[test]
    fn criterion_matches_confluence_exhaustively_on_small_rings() {
        // Theorem-1 instance check: agreement on every basis of size ≤ 2
        for n in [4u64, 5, 6] {
            let m = ModularRing::new(n).unwrap();
            let all = m.elements();
            let mut bases: Vec<Vec<u64>> = vec![];
            for c1 in 1..n {
                bases.push(vec![c1]);
                for c2 in c1..n {
                    bases.push(vec![c1, c2]);
                }
            }
            for basis in bases {
                let confluent = is_confluent(&m, &basis, &all).unwrap();
                let criterion = main_theorem_criterion(&m, &basis, &all).unwrap();
                assert_eq!(confluent, criterion, "mismatch on Z/{n} basis {basis:?}");
            }
        }
    }

    #[test]
    fn ideal_enumeration_examples() {
        let m = ModularRing::new(6).unwrap();
        assert_eq!(ideal_enumerate(&m, &[]), HashSet::from([0]));
        assert_eq!(ideal_enumerate(&m, &[2]), HashSet::from([0, 2, 4]));
        assert_eq!(ideal_enumerate(&m, &[2, 3]), HashSet::from([0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn gb_preserves_enumerated_ideal() {
        for n in [4u64, 6, 8, 9] {
            let m = ModularRing::new(n).unwrap();
            for c1 in 1..n {
                for c2 in c1..n {
                    let gens = vec![c1, c2];
                    let out = gb(&m, &gens, &GbConfig::default()).unwrap();
                    assert_eq!(
                        ideal_enumerate(&m, &gens),
                        ideal_enumerate(&m, out.basis.elements()),
                        "ideal changed on Z/{n} gens {gens:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn engine_normal_form_is_a_graph_terminal() {
        use crate::engine::{normal_form, Strategy};
        // the deterministic strategy must land on a terminal node that the
        // any-multiplier graph can reach from the start element
        let r = Integers;
        let basis = [z(4), z(6)];
        let universe = integer_window(48);
        let graph = ReductionGraph::build(&r, &basis, &universe).unwrap();
        let nf_sets = graph.normal_form_sets();
        for start in [z(10), z(7), z(-13), z(30)] {
            let nf = normal_form(&r, &start, &basis, Strategy::LowestIndexFirst);
            assert!(graph.is_terminal(&nf));
            let si = *graph.index.get(&start).unwrap();
            let ni = *graph.index.get(&nf).unwrap();
            assert!(nf_sets[si].contains(&ni), "nf {nf} unreachable from {start}");
        }
        // the spec's raw-basis value: 10 reduces to 2, which is irreducible
        assert_eq!(
            normal_form(&r, &z(10), &basis, Strategy::LowestIndexFirst),
            z(2)
        );
    }

    #[test]
    fn unique_normal_forms_iff_local_joinability() {
        // second, independent computation of confluence: every one-step
        // peak joins at some common reachable element (Newman's lemma for
        // terminating relations). Both verdicts must agree on every basis.
        fn reachable(graph: &ReductionGraph<u64>) -> Vec<HashSet<usize>> {
            let n = graph.nodes.len();
            let mut memo: Vec<Option<HashSet<usize>>> = vec![None; n];
            fn go(
                v: usize,
                edges: &[Vec<usize>],
                memo: &mut Vec<Option<HashSet<usize>>>,
            ) -> HashSet<usize> {
                if let Some(m) = &memo[v] {
                    return m.clone();
                }
                let mut set = HashSet::from([v]);
                for &w in &edges[v] {
                    set.extend(go(w, edges, memo));
                }
                memo[v] = Some(set.clone());
                set
            }
            (0..n).map(|v| go(v, &graph.out_edges, &mut memo)).collect()
        }

        for n in [5u64, 6, 8] {
            let m = ModularRing::new(n).unwrap();
            let all = m.elements();
            for c1 in 1..n {
                for c2 in c1..n {
                    let basis = vec![c1, c2];
                    let graph = ReductionGraph::build(&m, &basis, &all).unwrap();
                    let unique_nf = graph.normal_form_sets().iter().all(|s| s.len() == 1);
                    let reach = reachable(&graph);
                    let mut locally_joinable = true;
                    for v in 0..graph.nodes.len() {
                        for &b1 in &graph.out_edges[v] {
                            for &b2 in &graph.out_edges[v] {
                                if reach[b1].is_disjoint(&reach[b2]) {
                                    locally_joinable = false;
                                }
                            }
                        }
                    }
                    assert_eq!(
                        unique_nf, locally_joinable,
                        "Newman disagreement on Z/{n} basis {basis:?}"
                    );
                    assert_eq!(
                        unique_nf,
                        is_confluent(&m, &basis, &all).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn engine_steps_are_oracle_edges() {
        use crate::engine::{find_step, Strategy};
        let m = ModularRing::new(12).unwrap();
        let basis = [4u64, 9];
        for a in m.elements() {
            if let Some((k, step)) = find_step(&m, &a, &basis, Strategy::LowestIndexFirst) {
                let reducts = m.all_reducts(&a, &basis[k - 1]).unwrap();
                assert!(reducts.contains(&step.result));
            }
        }
    }
}
