//! Command execution: parse elements, run the library, shape a report.

use num_integer::Integer as NumInteger;
use num_traits::{Signed, Zero};

use rrgb::buchberger::{cpd, gb, is_member, GbConfig, GbOutcome};
use rrgb::domains::{integer_window, Integers, ModularRing, Rationals};
use rrgb::engine::critical_pairs;
use rrgb::error::{DomainError, GbError};
use rrgb::oracle::classical::{classical_buchberger, classical_normal_form, s_polynomial};
use rrgb::oracle::{ideal_enumerate, is_confluent, main_theorem_criterion, OracleError};
use rrgb::ring::FiniteRing;
use rrgb::syntax::ElementSyntax;
use rrgb::{Integer, RationalPolyRing, ReductionRing};

use crate::output::{trace_entries, CheckBody, Report, ResultBody, Stats};

/// Failure with the process exit code it maps to: 1 domain/parse errors,
/// 2 failed checks, 3 step-limit exhaustion.
#[derive(Debug)]
pub struct RunError {
    pub exit: i32,
    pub message: String,
}

impl From<DomainError> for RunError {
    fn from(e: DomainError) -> Self {
        RunError {
            exit: 1,
            message: e.to_string(),
        }
    }
}

impl From<GbError> for RunError {
    fn from(e: GbError) -> Self {
        let exit = match e {
            GbError::StepLimitExceeded { .. } => 3,
            _ => 1,
        };
        RunError {
            exit,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for RunError {
    fn from(e: OracleError) -> Self {
        let exit = match e {
            OracleError::Domain(_) => 1,
            _ => 2,
        };
        RunError {
            exit,
            message: e.to_string(),
        }
    }
}

pub fn parse_list<R: ElementSyntax>(ring: &R, srcs: &[String]) -> Result<Vec<R::Element>, RunError> {
    let mut out = Vec::with_capacity(srcs.len());
    for s in srcs {
        let e = ring.parse_element(s)?;
        ring.validate(&e)?;
        out.push(e);
    }
    Ok(out)
}

pub fn split_list(src: &str) -> Result<Vec<String>, RunError> {
    let parts: Vec<String> = src
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(RunError {
            exit: 1,
            message: "expected a nonempty comma-separated element list".into(),
        });
    }
    Ok(parts)
}

pub fn run_gb<R: ElementSyntax>(
    ring: &R,
    gens_src: &[String],
    trace: bool,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    let gens = parse_list(ring, gens_src)?;
    let out = gb(ring, &gens, cfg)?;
    Ok(Report {
        ring: ring.describe(),
        result: ResultBody::Basis {
            basis: out.basis.elements().iter().map(|e| ring.render(e)).collect(),
        },
        stats: out.stats.into(),
        trace: trace_entries(ring, &out.trace, trace),
    })
}

pub fn run_nf<R: ElementSyntax>(
    ring: &R,
    of: &str,
    basis_src: &[String],
) -> Result<Report, RunError> {
    let target = ring.parse_element(of)?;
    ring.validate(&target)?;
    let basis = parse_list(ring, basis_src)?;
    let (nf, steps) = rrgb::engine::normal_form_counted(
        ring,
        &target,
        &basis,
        rrgb::engine::Strategy::LowestIndexFirst,
    );
    Ok(Report {
        ring: ring.describe(),
        result: ResultBody::NormalForm {
            normal_form: ring.render(&nf),
        },
        stats: Stats {
            reductions: steps,
            ..Stats::default()
        },
        trace: Vec::new(),
    })
}

pub fn run_member<R: ElementSyntax>(
    ring: &R,
    element: &str,
    ideal_src: &[String],
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    let f = ring.parse_element(element)?;
    ring.validate(&f)?;
    let gens = parse_list(ring, ideal_src)?;
    let out = gb(ring, &gens, cfg)?;
    let member = is_member(ring, &f, &out.basis);
    Ok(Report {
        ring: ring.describe(),
        result: ResultBody::Member { member },
        stats: out.stats.into(),
        trace: Vec::new(),
    })
}

pub fn run_equal<R: ElementSyntax>(
    ring: &R,
    first_src: &[String],
    second_src: &[String],
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    let c1 = parse_list(ring, first_src)?;
    let c2 = parse_list(ring, second_src)?;
    let g1 = gb(ring, &c1, cfg)?;
    let g2 = gb(ring, &c2, cfg)?;
    let equal = c1.iter().all(|f| is_member(ring, f, &g2.basis))
        && c2.iter().all(|f| is_member(ring, f, &g1.basis));
    let mut stats: Stats = g1.stats.into();
    let s2: Stats = g2.stats.into();
    stats.transitions += s2.transitions;
    stats.pairs_processed += s2.pairs_processed;
    stats.h_zero += s2.h_zero;
    stats.elements_added += s2.elements_added;
    stats.reductions += s2.reductions;
    Ok(Report {
        ring: ring.describe(),
        result: ResultBody::Equal { equal },
        stats,
        trace: Vec::new(),
    })
}

/// Which universe the `check` command may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Full,
    Radius(u64),
}

fn check_report<R: ReductionRing>(ring: &R, body: CheckBody, out: &GbOutcome<R::Element>) -> Report {
    Report {
        ring: ring.describe(),
        result: ResultBody::Check(body),
        stats: out.stats.into(),
        trace: Vec::new(),
    }
}

pub fn run_check_modular(
    ring: &ModularRing,
    basis_src: &[String],
    bound: Option<Bound>,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    if matches!(bound, Some(Bound::Radius(_))) {
        return Err(RunError {
            exit: 1,
            message: "a numeric --bound applies to Z only; Z/n checks are exhaustive (--bound full)"
                .into(),
        });
    }
    let gens = parse_list(ring, basis_src)?;
    let out = gb(ring, &gens, cfg)?;
    let all = ring.elements();
    let g = out.basis.elements();
    let input_confluent = is_confluent(ring, &gens, &all)?;
    let input_criterion = main_theorem_criterion(ring, &gens, &all)?;
    let body = CheckBody {
        gb_confluent: is_confluent(ring, g, &all)?,
        gb_criterion: main_theorem_criterion(ring, g, &all)?,
        ideal_preserved: ideal_enumerate(ring, &gens) == ideal_enumerate(ring, g),
        input_confluent,
        input_criterion,
        criterion_agreement: input_confluent == input_criterion,
        method: "exhaustive".into(),
    };
    Ok(check_report(ring, body, &out))
}

pub fn run_check_integers(
    ring: &Integers,
    basis_src: &[String],
    bound: Option<Bound>,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    let gens = parse_list(ring, basis_src)?;
    let out = gb(ring, &gens, cfg)?;
    let g = out.basis.elements();
    let max_abs: u64 = gens
        .iter()
        .map(|c| {
            let a = c.abs();
            u64::try_from(&a).unwrap_or(u64::MAX / 16)
        })
        .max()
        .unwrap_or(1);
    let radius = match bound {
        Some(Bound::Radius(r)) => r,
        Some(Bound::Full) => {
            return Err(RunError {
                exit: 1,
                message: "--bound full is not available over Z; give a window radius".into(),
            })
        }
        None => (8 * max_abs).max(8),
    };
    let window = integer_window(radius);
    let input_confluent = is_confluent(ring, &gens, &window)?;
    let input_criterion = main_theorem_criterion(ring, &gens, &window)?;
    // over Z the ideal is gcd·Z; membership must agree with divisibility
    let gcd = gens
        .iter()
        .fold(Integer::zero(), |acc, c| acc.gcd(c));
    let mut ideal_preserved = g.iter().all(|e| (e % &gcd).is_zero() || gcd.is_zero());
    for x in -100i64..=100 {
        let x = Integer::from(x);
        let divisible = !gcd.is_zero() && (&x % &gcd).is_zero() || x.is_zero();
        if is_member(ring, &x, &out.basis) != divisible {
            ideal_preserved = false;
            break;
        }
    }
    let body = CheckBody {
        gb_confluent: is_confluent(ring, g, &window)?,
        gb_criterion: main_theorem_criterion(ring, g, &window)?,
        ideal_preserved,
        input_confluent,
        input_criterion,
        criterion_agreement: input_confluent == input_criterion,
        method: format!("window<={radius}"),
    };
    Ok(check_report(ring, body, &out))
}

pub fn run_check_rationals(
    ring: &Rationals,
    basis_src: &[String],
    bound: Option<Bound>,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    if matches!(bound, Some(Bound::Radius(_))) {
        return Err(RunError {
            exit: 1,
            message: "a numeric --bound applies to Z only".into(),
        });
    }
    let gens = parse_list(ring, basis_src)?;
    let out = gb(ring, &gens, cfg)?;
    let g = out.basis.elements();
    // over a field every nonzero element reduces straight to 0; the sampled
    // universe of generators plus 0 and 1 is closed under reduction
    let mut universe = vec![ring.zero(), ring.one()];
    universe.extend(gens.iter().cloned());
    universe.extend(g.iter().cloned());
    let input_confluent = is_confluent(ring, &gens, &universe)?;
    let input_criterion = main_theorem_criterion(ring, &gens, &universe)?;
    let nontrivial = gens.iter().any(|e| !ring.is_zero(e));
    let body = CheckBody {
        gb_confluent: is_confluent(ring, g, &universe)?,
        gb_criterion: main_theorem_criterion(ring, g, &universe)?,
        ideal_preserved: !nontrivial || is_member(ring, &ring.one(), &out.basis),
        input_confluent,
        input_criterion,
        criterion_agreement: input_confluent == input_criterion,
        method: "field".into(),
    };
    Ok(check_report(ring, body, &out))
}

/// Normal-form witness: every critical pair of every index pair resolves to
/// cpd = 0 modulo the basis. Sound for the Gröbner property (the two
/// reduction chains connect the pair below its source).
fn cpd_witness<R: ReductionRing>(
    ring: &R,
    basis: &rrgb::buchberger::Basis<R::Element>,
) -> Result<bool, RunError> {
    let elems = basis.elements();
    for k in 1..=elems.len() {
        for l in k..=elems.len() {
            let (ck, cl) = (&elems[k - 1], &elems[l - 1]);
            if ring.is_zero(ck) || ring.is_zero(cl) {
                continue;
            }
            for pair in critical_pairs(ring, ck, cl, k, l)? {
                let h = cpd(ring, &pair.first, &pair.second, k, l, basis)?;
                if !ring.is_zero(&h) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn run_check_poly_rationals(
    ring: &RationalPolyRing,
    basis_src: &[String],
    bound: Option<Bound>,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    if bound.is_some() {
        return Err(RunError {
            exit: 1,
            message: "--bound does not apply to polynomial rings".into(),
        });
    }
    let gens = parse_list(ring, basis_src)?;
    let out = gb(ring, &gens, cfg)?;
    let g = out.basis.elements().to_vec();
    let spolys_reduce = |basis: &[rrgb::RationalPoly]| -> Result<bool, RunError> {
        let nz: Vec<_> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
        for i in 0..nz.len() {
            for j in (i + 1)..nz.len() {
                let s = s_polynomial(ring, &nz[i], &nz[j])?;
                if !classical_normal_form(ring, &s, &nz).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    let input_basis = rrgb::buchberger::Basis::new(
        gens.iter().filter(|p| !p.is_zero()).cloned().collect(),
    );
    let input_confluent = spolys_reduce(&gens)?;
    let input_criterion = cpd_witness(ring, &input_basis)?;
    // mutual membership against the independent classical completion
    let classical = classical_buchberger(ring, &gens)?;
    let mut ideal_preserved = g
        .iter()
        .all(|p| classical_normal_form(ring, p, &classical).is_zero());
    ideal_preserved &= classical
        .iter()
        .all(|p| is_member(ring, p, &out.basis));
    let body = CheckBody {
        gb_confluent: spolys_reduce(&g)?,
        gb_criterion: cpd_witness(ring, &out.basis)?,
        ideal_preserved,
        input_confluent,
        input_criterion,
        criterion_agreement: input_confluent == input_criterion,
        method: "classical".into(),
    };
    Ok(check_report(ring, body, &out))
}

pub fn run_check_poly_witness<R: ElementSyntax>(
    ring: &R,
    basis_src: &[String],
    bound: Option<Bound>,
    cfg: &GbConfig,
) -> Result<Report, RunError> {
    if bound.is_some() {
        return Err(RunError {
            exit: 1,
            message: "--bound does not apply to polynomial rings".into(),
        });
    }
    let gens = parse_list(ring, basis_src)?;
    let out = gb(ring, &gens, cfg)?;
    let input_basis =
        rrgb::buchberger::Basis::new(gens.iter().filter(|p| !ring.is_zero(p)).cloned().collect());
    let input_criterion = cpd_witness(ring, &input_basis)?;
    let gb_criterion = cpd_witness(ring, &out.basis)?;
    let ideal_preserved = gens.iter().all(|f| is_member(ring, f, &out.basis));
    let body = CheckBody {
        gb_confluent: gb_criterion,
        gb_criterion,
        ideal_preserved,
        input_confluent: input_criterion,
        input_criterion,
        criterion_agreement: true,
        method: "witness".into(),
    };
    Ok(check_report(ring, body, &out))
}
