//! Ring descriptors: which domain, with which parameters.
//!
//! Grammar (whitespace-insensitive):
//!   `Q` | `Z` | `Z/<n>` | `poly(<coeff>; <var>,<var>,...; <order>)`
//! with order one of `lex`, `deglex`, `degrevlex` (default `lex` when
//! omitted). Polynomial descriptors nest at most one level: the coefficient
//! kind must be a scalar domain.

use std::fmt;
use std::str::FromStr;

use crate::domains::MonomialOrder;
use crate::error::DomainError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    Rationals,
    Integers,
    Quotient {
        modulus: u64,
    },
    Poly {
        coeff: Box<RingDescriptor>,
        vars: Vec<String>,
        order: MonomialOrder,
    },
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<(), DomainError> {
        match self {
            RingDescriptor::Rationals | RingDescriptor::Integers => Ok(()),
            RingDescriptor::Quotient { modulus } => {
                if *modulus < 2 {
                    Err(DomainError::InvalidRing(format!(
                        "modulus must be at least 2, got {modulus}"
                    )))
                } else {
                    Ok(())
                }
            }
            RingDescriptor::Poly { coeff, vars, .. } => {
                if matches!(**coeff, RingDescriptor::Poly { .. }) {
                    return Err(DomainError::InvalidRing(
                        "polynomial coefficients over a polynomial ring are unsupported".into(),
                    ));
                }
                coeff.validate()?;
                if vars.is_empty() {
                    return Err(DomainError::InvalidRing(
                        "polynomial ring needs at least one variable".into(),
                    ));
                }
                for (i, v) in vars.iter().enumerate() {
                    if !is_identifier(v) {
                        return Err(DomainError::InvalidRing(format!(
                            "invalid variable name {v:?}"
                        )));
                    }
                    if vars[..i].contains(v) {
                        return Err(DomainError::InvalidRing(format!(
                            "duplicate variable name {v:?}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Quotient { modulus } => write!(f, "Z/{modulus}"),
            RingDescriptor::Poly { coeff, vars, order } => {
                write!(f, "poly({coeff}; {}; {order})", vars.join(","))
            }
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = DomainError;

    fn from_str(src: &str) -> Result<Self, DomainError> {
        let desc = parse_descriptor(src)?;
        desc.validate()?;
        Ok(desc)
    }
}

fn parse_error(position: usize, message: impl Into<String>) -> DomainError {
    DomainError::Parse {
        position,
        message: message.into(),
    }
}

fn parse_descriptor(src: &str) -> Result<RingDescriptor, DomainError> {
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Err(parse_error(0, "empty ring descriptor"));
    }
    let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "Q" {
        return Ok(RingDescriptor::Rationals);
    }
    if compact == "Z" {
        return Ok(RingDescriptor::Integers);
    }
    if let Some(rest) = compact.strip_prefix("Z/") {
        let modulus: u64 = rest
            .parse()
            .map_err(|_| parse_error(2, format!("expected a modulus after Z/, got {rest:?}")))?;
        return Ok(RingDescriptor::Quotient { modulus });
    }
    if let Some(rest) = compact.strip_prefix("poly(") {
        let body = rest
            .strip_suffix(')')
            .ok_or_else(|| parse_error(compact.len(), "missing closing parenthesis"))?;
        let parts = split_top_level(body);
        if parts.len() != 2 && parts.len() != 3 {
            return Err(parse_error(
                5,
                "expected poly(<coeff>; <vars>; <order>) with 2 or 3 sections",
            ));
        }
        let coeff = parse_descriptor(&parts[0])?;
        let vars: Vec<String> = parts[1]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        let order = if parts.len() == 3 {
            parts[2].parse::<MonomialOrder>()?
        } else {
            MonomialOrder::Lex
        };
        return Ok(RingDescriptor::Poly {
            coeff: Box::new(coeff),
            vars,
            order,
        });
    }
    Err(parse_error(
        0,
        format!("unknown ring descriptor {trimmed:?} (expected Q, Z, Z/<n> or poly(...))"),
    ))
}

// split on ';' ignoring any inside nested parentheses
fn split_top_level(body: &str) -> Vec<String> {
    let mut parts = vec![String::new()];
    let mut depth = 0usize;
    for c in body.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ';' if depth == 0 => {
                parts.push(String::new());
                continue;
            }
            _ => {}
        }
        parts.last_mut().expect("nonempty").push(c);
    }
    parts
}
