//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::DomainError;

/// Admissible monomial orders on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    DegLex,
    DegRevLex,
}

impl MonomialOrder {
    /// Total-order comparison of two exponent vectors of equal length.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegLex => total_degree(a)
                .cmp(&total_degree(b))
                .then_with(|| lex(a, b)),
            MonomialOrder::DegRevLex => total_degree(a)
                .cmp(&total_degree(b))
                .then_with(|| rev_lex_tiebreak(a, b)),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        };
        write!(f, "{name}")
    }
}

impl FromStr for MonomialOrder {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, DomainError> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" => Ok(MonomialOrder::DegLex),
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(DomainError::InvalidRing(format!(
                "unknown monomial order {other:?} (expected lex, deglex or degrevlex)"
            ))),
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

// degrevlex: at the rightmost differing entry, the *smaller* exponent wins.
fn rev_lex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

pub fn total_degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

/// Componentwise maximum.
pub fn exp_lcm(a: &[u32], b: &[u32]) -> Result<Vec<u32>, DomainError> {
    if a.len() != b.len() {
        return Err(DomainError::ExponentLengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(x, y)| (*x).max(*y)).collect())
}

/// Does `d` divide `e` componentwise?
pub fn exp_divides(d: &[u32], e: &[u32]) -> bool {
    debug_assert_eq!(d.len(), e.len());
    d.iter().zip(e).all(|(x, y)| x <= y)
}

pub fn exp_sub(e: &[u32], d: &[u32]) -> Vec<u32> {
    debug_assert!(exp_divides(d, e));
    e.iter().zip(d).map(|(x, y)| x - y).collect()
}

/// Componentwise sum with overflow checking: exponents never wrap.
pub fn exp_add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("monomial exponent overflow"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent definition-level comparator used to cross-check the
    // production implementation.
    fn brute_compare(order: MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
        let da: i64 = a.iter().map(|&x| x as i64).sum();
        let db: i64 = b.iter().map(|&x| x as i64).sum();
        match order {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegLex => da.cmp(&db).then(a.cmp(b)),
            MonomialOrder::DegRevLex => da.cmp(&db).then_with(|| {
                let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| *x as i64 - *y as i64).collect();
                match diff.iter().rev().find(|d| **d != 0) {
                    Some(d) if *d < 0 => Ordering::Greater,
                    Some(_) => Ordering::Less,
                    None => Ordering::Equal,
                }
            }),
        }
    }

    fn all_exponents(vars: usize, max: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..vars {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..=max).map(move |x| {
                        let mut e2 = e.clone();
                        e2.push(x);
                        e2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn orders_match_brute_force() {
        for order in [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            for vars in [1usize, 2, 3] {
                let exps = all_exponents(vars, 3);
                for a in &exps {
                    for b in &exps {
                        assert_eq!(
                            order.compare(a, b),
                            brute_compare(order, a, b),
                            "{order} on {a:?} vs {b:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orders_are_compatible_with_multiplication() {
        for order in [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            let exps = all_exponents(2, 3);
            for a in &exps {
                for b in &exps {
                    for f in &exps {
                        if order.compare(a, b) == Ordering::Less {
                            assert_eq!(
                                order.compare(&exp_add(a, f), &exp_add(b, f)),
                                Ordering::Less
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degrevlex_known_facts() {
        // x·z < y² when x > y > z
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.compare(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        // total degree dominates: y² > x
        assert_eq!(o.compare(&[0, 2], &[1, 0]), Ordering::Greater);
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(exp_lcm(&[2, 0], &[1, 1]).unwrap(), vec![2, 1]);
        assert_eq!(exp_lcm(&[1, 2], &[1, 2]).unwrap(), vec![1, 2]);
        assert_eq!(exp_lcm(&[0, 0], &[3, 1]).unwrap(), vec![3, 1]);
        assert!(exp_lcm(&[1], &[1, 2]).is_err());
    }
}
