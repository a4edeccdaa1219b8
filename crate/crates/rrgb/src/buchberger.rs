//! The critical-pair/completion loop, its queue bookkeeping, the
//! termination-measure trace, and the normal-form deciders built on top.
//!
//! The recursion is realized as an explicit state loop, one iteration per
//! recursive call: base case (empty queue, empty critical tuple) returns the
//! accumulator; with an empty critical tuple the next index pair is popped
//! and its critical pairs are loaded; otherwise the head critical pair is
//! resolved by reducing both components to normal forms, subtracting, and
//! appending the difference when it is nonzero. Both components must be
//! reduced *before* subtracting; reducing the difference directly is not
//! sound in a general reduction ring.

use std::collections::VecDeque;

use crate::engine::{critical_pairs, normal_form, normal_form_counted, Strategy};
use crate::error::GbError;
use crate::ring::{CriticalPair, ReductionRing};

/// The accumulator tuple. Indexing is 1-based in every API and trace.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Basis<E> {
    elements: Vec<E>,
}

impl<E> Basis<E> {
    pub fn new(elements: Vec<E>) -> Self {
        Basis { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// 1-based element access.
    pub fn get(&self, k: usize) -> Option<&E> {
        if k == 0 {
            None
        } else {
            self.elements.get(k - 1)
        }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<E> {
        self.elements
    }
}

/// Index pairs awaiting processing, consumed front to back.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairQueue {
    pairs: VecDeque<(usize, usize)>,
}

impl PairQueue {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.pairs.iter()
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        self.pairs.pop_front()
    }
}

/// All index pairs `(k, l)` with `1 ≤ k ≤ l ≤ n`, ascending lexicographic.
/// Self-pairs are included: in a reduction ring even one-element bases have
/// critical situations to check.
pub fn pairs(n: usize) -> PairQueue {
    let mut q = VecDeque::new();
    for k in 1..=n {
        for l in k..=n {
            q.push_back((k, l));
        }
    }
    PairQueue { pairs: q }
}

/// Appends `⟨1,n⟩, ⟨2,n⟩, …, ⟨n,n⟩` to the queue after the basis grew to
/// length `n`. Errors if the queue already mentions an index ≥ n.
pub fn update(queue: &PairQueue, n: usize) -> Result<PairQueue, GbError> {
    if let Some((k, l)) = queue.iter().find(|(k, l)| *k >= n || *l >= n) {
        return Err(GbError::StateCorruption(format!(
            "pair ({k},{l}) already present while appending index {n}"
        )));
    }
    let mut q = queue.clone();
    for k in 1..=n {
        q.pairs.push_back((k, n));
    }
    Ok(q)
}

/// Appends a nonzero element at index `|C|+1`, leaving existing indices
/// untouched.
pub fn app<R: ReductionRing>(
    ring: &R,
    basis: &Basis<R::Element>,
    h: &R::Element,
) -> Result<Basis<R::Element>, GbError> {
    if ring.is_zero(h) {
        return Err(GbError::ZeroAppend);
    }
    let mut elements = basis.elements.clone();
    elements.push(h.clone());
    Ok(Basis { elements })
}

/// The full argument quintuple of the recursion.
#[derive(Debug, Clone)]
pub struct GbState<E> {
    pub basis: Basis<E>,
    pub queue: PairQueue,
    pub i: usize,
    pub j: usize,
    pub crit: VecDeque<CriticalPair<E>>,
}

impl<E> GbState<E> {
    /// The initial state: all index pairs queued, indices 1, empty critical
    /// tuple.
    pub fn initial(basis: Basis<E>) -> Self {
        let queue = pairs(basis.len());
        GbState {
            basis,
            queue,
            i: 1,
            j: 1,
            crit: VecDeque::new(),
        }
    }
}

/// What a single recursion step did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceAction {
    /// Base case: queue and critical tuple both empty, accumulator returned.
    Base,
    /// Loaded the critical pairs of `(k, l)`.
    LoadPair { k: usize, l: usize },
    /// Head critical pair resolved to h = 0.
    HZero,
    /// Head critical pair produced a nonzero h, appended to the basis.
    HAdded,
}

/// One recursion record: the action taken and the pre-transition measure
/// snapshot (reducible-set proxy, queue length, critical-tuple length).
#[derive(Debug, Clone)]
pub struct TraceStep<E> {
    pub action: TraceAction,
    pub basis_len: usize,
    pub queue_len: usize,
    pub crit_len: usize,
    pub red_tag: String,
    pub added: Option<E>,
}

/// Per-recursion trace of the completion run; always recorded, printed on
/// demand. The measure snapshots must strictly decrease lexicographically
/// (reducible set grows ≻ queue shrinks ≻ critical tuple shrinks).
#[derive(Debug, Clone)]
pub struct GbTrace<E> {
    pub steps: Vec<TraceStep<E>>,
}

impl<E> Default for GbTrace<E> {
    fn default() -> Self {
        GbTrace { steps: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GbStats {
    /// Total recursion steps (state transitions), base case included.
    pub transitions: u64,
    /// Eq.-(3) steps: index pairs whose critical pairs were loaded.
    pub pairs_processed: u64,
    /// Critical pairs that resolved to zero.
    pub h_zero: u64,
    /// Elements appended to the accumulator.
    pub elements_added: u64,
    /// Single reduction steps performed inside cpd normal forms.
    pub reductions: u64,
}

/// Safety configuration for the loop.
#[derive(Debug, Clone, Copy)]
pub struct GbConfig {
    /// A would-be divergence (e.g. a defective user domain) becomes a
    /// diagnosable error after this many state transitions.
    pub step_limit: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            step_limit: 1_000_000,
        }
    }
}

/// Result of a completion run.
#[derive(Debug, Clone)]
pub struct GbOutcome<E> {
    pub basis: Basis<E>,
    pub trace: GbTrace<E>,
    pub stats: GbStats,
}

fn cpd_counted<R: ReductionRing>(
    ring: &R,
    b: &R::Element,
    bbar: &R::Element,
    i: usize,
    j: usize,
    basis: &Basis<R::Element>,
) -> Result<(R::Element, u64), GbError> {
    for idx in [i, j] {
        if idx == 0 || idx > basis.len() {
            return Err(GbError::IndexOutOfRange {
                index: idx,
                len: basis.len(),
            });
        }
    }
    // Reduce both components fully first; only then subtract.
    let (g, s1) = normal_form_counted(ring, b, basis.elements(), Strategy::LowestIndexFirst);
    let (gbar, s2) = normal_form_counted(ring, bbar, basis.elements(), Strategy::LowestIndexFirst);
    Ok((ring.sub(&g, &gbar), s1 + s2))
}

/// The critical-pair difference `h = nf(b) − nf(b̄)` modulo the current
/// accumulator, where `b, b̄` descend from a critical pair of `C_i, C_j`.
pub fn cpd<R: ReductionRing>(
    ring: &R,
    b: &R::Element,
    bbar: &R::Element,
    i: usize,
    j: usize,
    basis: &Basis<R::Element>,
) -> Result<R::Element, GbError> {
    cpd_counted(ring, b, bbar, i, j, basis).map(|(h, _)| h)
}

/// Runs the recursion from an arbitrary state until the base case, recording
/// one trace step per recursive call.
pub fn gbaux<R: ReductionRing>(
    ring: &R,
    state: GbState<R::Element>,
    config: &GbConfig,
) -> Result<GbOutcome<R::Element>, GbError> {
    let mut state = state;
    let mut trace = GbTrace::default();
    let mut stats = GbStats::default();
    loop {
        if stats.transitions >= config.step_limit {
            return Err(GbError::StepLimitExceeded {
                limit: config.step_limit,
            });
        }
        stats.transitions += 1;
        // pre-transition measure snapshot
        let basis_len = state.basis.len();
        let queue_len = state.queue.len();
        let crit_len = state.crit.len();
        let red_tag = ring.red_tag(state.basis.elements());

        let (action, added) = if let Some(pair) = state.crit.pop_front() {
            let (h, reductions) =
                cpd_counted(ring, &pair.first, &pair.second, state.i, state.j, &state.basis)?;
            stats.reductions += reductions;
            if ring.is_zero(&h) {
                stats.h_zero += 1;
                (TraceAction::HZero, None)
            } else {
                let basis = app(ring, &state.basis, &h)?;
                let queue = update(&state.queue, basis.len())?;
                state.basis = basis;
                state.queue = queue;
                stats.elements_added += 1;
                (TraceAction::HAdded, Some(h))
            }
        } else if let Some((k, l)) = state.queue.pop() {
            let ck = state
                .basis
                .get(k)
                .ok_or(GbError::IndexOutOfRange {
                    index: k,
                    len: state.basis.len(),
                })?
                .clone();
            let cl = state
                .basis
                .get(l)
                .ok_or(GbError::IndexOutOfRange {
                    index: l,
                    len: state.basis.len(),
                })?
                .clone();
            state.crit = critical_pairs(ring, &ck, &cl, k, l)?.into();
            state.i = k;
            state.j = l;
            stats.pairs_processed += 1;
            (TraceAction::LoadPair { k, l }, None)
        } else {
            trace.steps.push(TraceStep {
                action: TraceAction::Base,
                basis_len,
                queue_len,
                crit_len,
                red_tag,
                added: None,
            });
            return Ok(GbOutcome {
                basis: state.basis,
                trace,
                stats,
            });
        };
        trace.steps.push(TraceStep {
            action,
            basis_len,
            queue_len,
            crit_len,
            red_tag,
            added,
        });
    }
}

/// Computes a Gröbner basis of the ideal generated by the input tuple.
/// Zero generators are stripped first; the input is a prefix of the output.
pub fn gb<R: ReductionRing>(
    ring: &R,
    generators: &[R::Element],
    config: &GbConfig,
) -> Result<GbOutcome<R::Element>, GbError> {
    let stripped: Vec<R::Element> = generators
        .iter()
        .filter(|g| !ring.is_zero(g))
        .cloned()
        .collect();
    gbaux(ring, GbState::initial(Basis::new(stripped)), config)
}

/// Ideal membership via unique normal forms: `f ∈ ⟨G⟩` iff `nf(f, G) = 0`.
/// `G` must be a Gröbner basis for the verdict to be sound.
pub fn is_member<R: ReductionRing>(ring: &R, f: &R::Element, basis: &Basis<R::Element>) -> bool {
    let nf = normal_form(ring, f, basis.elements(), Strategy::LowestIndexFirst);
    ring.is_zero(&nf)
}

/// Ideal equality: complete both sides, then test mutual membership of the
/// original generators.
pub fn ideals_equal<R: ReductionRing>(
    ring: &R,
    c1: &[R::Element],
    c2: &[R::Element],
    config: &GbConfig,
) -> Result<bool, GbError> {
    let g1 = gb(ring, c1, config)?;
    let g2 = gb(ring, c2, config)?;
    let forward = c1.iter().all(|f| is_member(ring, f, &g2.basis));
    let backward = c2.iter().all(|f| is_member(ring, f, &g1.basis));
    Ok(forward && backward)
}
