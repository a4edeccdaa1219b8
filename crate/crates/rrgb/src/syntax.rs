//! Element expression parsing, the inverse of each ring's `render`.
//!
//! Integers are decimal literals, rationals are `p/q`, residues are decimal
//! literals taken modulo n, and polynomials are sums of terms
//! `c*x^e*y^f` where `*` and `^` may be omitted when unambiguous
//! (`3x^2y`, `-x + 1`). Everything is whitespace-insensitive and values are
//! canonicalized on parse.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::domains::poly::{Monomial, PolyRing, PolyTuple};
use crate::domains::{Integers, ModularRing, Rationals};
use crate::error::DomainError;
use crate::ring::ReductionRing;

/// Rings whose elements have a textual expression syntax.
pub trait ElementSyntax: ReductionRing {
    fn parse_element(&self, src: &str) -> Result<Self::Element, DomainError>;
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn parse_error(position: usize, message: impl Into<String>) -> DomainError {
    DomainError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, DomainError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let token = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '/' => Token::Slash,
            d if d.is_ascii_digit() => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                out.push((Token::Number(digits), pos));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                let mut name = String::new();
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    name.push(chars[i]);
                    i += 1;
                }
                out.push((Token::Name(name), pos));
                continue;
            }
            other => return Err(parse_error(pos, format!("unexpected character {other:?}"))),
        };
        out.push((token, pos));
        i += 1;
    }
    Ok(out)
}

/// Scalar-coefficient construction from literal pieces; the bridge between
/// the shared expression grammar and each concrete domain.
pub trait LiteralCoefficient: ReductionRing {
    fn from_literal(
        &self,
        negative: bool,
        digits: &str,
        denominator: Option<&str>,
        position: usize,
    ) -> Result<Self::Element, DomainError>;
}

impl LiteralCoefficient for Integers {
    fn from_literal(
        &self,
        negative: bool,
        digits: &str,
        denominator: Option<&str>,
        position: usize,
    ) -> Result<BigInt, DomainError> {
        if denominator.is_some() {
            return Err(parse_error(position, "fractions are not integers"));
        }
        let v: BigInt = digits
            .parse()
            .map_err(|_| parse_error(position, "malformed integer literal"))?;
        Ok(if negative { -v } else { v })
    }
}

impl LiteralCoefficient for Rationals {
    fn from_literal(
        &self,
        negative: bool,
        digits: &str,
        denominator: Option<&str>,
        position: usize,
    ) -> Result<BigRational, DomainError> {
        let numer: BigInt = digits
            .parse()
            .map_err(|_| parse_error(position, "malformed numerator"))?;
        let denom: BigInt = match denominator {
            Some(d) => d
                .parse()
                .map_err(|_| parse_error(position, "malformed denominator"))?,
            None => BigInt::from(1),
        };
        if denom.is_zero() {
            return Err(parse_error(position, "zero denominator"));
        }
        let v = BigRational::new(numer, denom);
        Ok(if negative { -v } else { v })
    }
}

impl LiteralCoefficient for ModularRing {
    fn from_literal(
        &self,
        negative: bool,
        digits: &str,
        denominator: Option<&str>,
        position: usize,
    ) -> Result<u64, DomainError> {
        if denominator.is_some() {
            return Err(parse_error(position, "fractions are not residues"));
        }
        // reduce digit by digit so arbitrarily long literals stay exact
        let n = self.modulus() as u128;
        let mut acc: u128 = 0;
        for c in digits.chars() {
            let d = c.to_digit(10).ok_or_else(|| {
                parse_error(position, "malformed residue literal")
            })? as u128;
            acc = (acc * 10 + d) % n;
        }
        let v = acc as u64;
        Ok(if negative { self.neg(&v) } else { v })
    }
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    src_len: usize,
    cursor: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, DomainError> {
        Ok(Parser {
            tokens: tokenize(src)?,
            src_len: src.len(),
            cursor: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(_, p)| *p)
            .unwrap_or(self.src_len)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(t, _)| t.clone());
        self.cursor += 1;
        t
    }

    fn take_sign(&mut self) -> bool {
        match self.peek() {
            Some(Token::Minus) => {
                self.advance();
                true
            }
            Some(Token::Plus) => {
                self.advance();
                false
            }
            _ => false,
        }
    }

    fn take_number(&mut self) -> Option<String> {
        if let Some(Token::Number(_)) = self.peek() {
            match self.advance() {
                Some(Token::Number(d)) => Some(d),
                _ => unreachable!(),
            }
        } else {
            None
        }
    }

    /// literal := Number (Slash Number)?
    fn take_literal(&mut self) -> Result<Option<(String, Option<String>)>, DomainError> {
        let Some(digits) = self.take_number() else {
            return Ok(None);
        };
        if let Some(Token::Slash) = self.peek() {
            self.advance();
            let pos = self.position();
            let denom = self
                .take_number()
                .ok_or_else(|| parse_error(pos, "expected a denominator after /"))?;
            Ok(Some((digits, Some(denom))))
        } else {
            Ok(Some((digits, None)))
        }
    }

    fn expect_end(&self) -> Result<(), DomainError> {
        if self.cursor < self.tokens.len() {
            Err(parse_error(self.position(), "unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

fn parse_scalar<R: LiteralCoefficient>(ring: &R, src: &str) -> Result<R::Element, DomainError> {
    let mut p = Parser::new(src)?;
    let negative = p.take_sign();
    let pos = p.position();
    let Some((digits, denom)) = p.take_literal()? else {
        return Err(parse_error(pos, "expected a numeric literal"));
    };
    let value = ring.from_literal(negative, &digits, denom.as_deref(), pos)?;
    p.expect_end()?;
    Ok(value)
}

impl ElementSyntax for Integers {
    fn parse_element(&self, src: &str) -> Result<BigInt, DomainError> {
        parse_scalar(self, src)
    }
}

impl ElementSyntax for Rationals {
    fn parse_element(&self, src: &str) -> Result<BigRational, DomainError> {
        parse_scalar(self, src)
    }
}

impl ElementSyntax for ModularRing {
    fn parse_element(&self, src: &str) -> Result<u64, DomainError> {
        parse_scalar(self, src)
    }
}

impl<C> ElementSyntax for PolyRing<C>
where
    C: LiteralCoefficient,
{
    fn parse_element(&self, src: &str) -> Result<PolyTuple<C::Element>, DomainError> {
        let mut p = Parser::new(src)?;
        if p.peek().is_none() {
            return Err(parse_error(0, "empty expression"));
        }
        let mut monomials: Vec<Monomial<C::Element>> = Vec::new();
        let mut first = true;
        while p.peek().is_some() || first {
            // term := sign? literal? factor ('*'? factor)*
            let negative = if first {
                p.take_sign()
            } else {
                match p.advance() {
                    Some(Token::Plus) => false,
                    Some(Token::Minus) => true,
                    other => {
                        return Err(parse_error(
                            p.position(),
                            format!("expected + or - between terms, got {other:?}"),
                        ))
                    }
                }
            };
            first = false;
            let pos = p.position();
            let literal = p.take_literal()?;
            let mut coeff = match &literal {
                Some((digits, denom)) => self.coefficient_ring().from_literal(
                    negative,
                    digits,
                    denom.as_deref(),
                    pos,
                )?,
                None => {
                    let one = self.coefficient_ring().one();
                    if negative {
                        self.coefficient_ring().neg(&one)
                    } else {
                        one
                    }
                }
            };
            let mut exps = vec![0u32; self.num_vars()];
            let mut saw_factor = false;
            loop {
                match p.peek() {
                    Some(Token::Star) => {
                        p.advance();
                        // a coefficient factor may follow, e.g. "y*2"
                        let pos = p.position();
                        match p.peek() {
                            Some(Token::Number(_)) => {
                                let (digits, denom) = p.take_literal()?.expect("peeked number");
                                let factor = self.coefficient_ring().from_literal(
                                    false,
                                    &digits,
                                    denom.as_deref(),
                                    pos,
                                )?;
                                coeff = self.coefficient_ring().mul(&coeff, &factor);
                                saw_factor = true;
                                continue;
                            }
                            _ => {}
                        }
                        let (var_pos, name) = match p.advance() {
                            Some(Token::Name(n)) => (pos, n),
                            other => {
                                return Err(parse_error(
                                    pos,
                                    format!("expected a variable after *, got {other:?}"),
                                ))
                            }
                        };
                        self.apply_factor(&mut p, &mut exps, &name, var_pos)?;
                        saw_factor = true;
                    }
                    Some(Token::Name(_)) => {
                        let pos = p.position();
                        let Some(Token::Name(name)) = p.advance() else {
                            unreachable!()
                        };
                        self.apply_factor(&mut p, &mut exps, &name, pos)?;
                        saw_factor = true;
                    }
                    _ => break,
                }
            }
            if literal.is_none() && !saw_factor {
                return Err(parse_error(p.position(), "expected a term"));
            }
            monomials.push(Monomial { coeff, exps });
            if p.peek().is_none() {
                break;
            }
        }
        Ok(self.from_monomials(monomials))
    }
}

impl<C: LiteralCoefficient> PolyRing<C> {
    /// A name token may be a run of juxtaposed variables (`xy` for `x*y`);
    /// split it greedily into declared variable names. The trailing
    /// variable may carry the `^exponent` that follows the token.
    fn apply_factor(
        &self,
        p: &mut Parser,
        exps: &mut [u32],
        name: &str,
        pos: usize,
    ) -> Result<(), DomainError> {
        if self.variables().iter().any(|v| v == name) {
            return self.apply_variable(p, exps, name, pos);
        }
        let parts = self.split_variables(name).ok_or_else(|| {
            parse_error(pos, format!("unknown variable {name:?}"))
        })?;
        let (last, init) = parts.split_last().expect("nonempty split");
        for v in init {
            exps[self.var_index(v)] = exps[self.var_index(v)]
                .checked_add(1)
                .ok_or_else(|| parse_error(pos, "exponent overflow"))?;
        }
        self.apply_variable(p, exps, last, pos)
    }

    fn var_index(&self, name: &str) -> usize {
        self.variables()
            .iter()
            .position(|v| v == name)
            .expect("caller verified the variable exists")
    }

    // greedy longest-match decomposition with backtracking
    fn split_variables(&self, name: &str) -> Option<Vec<String>> {
        if name.is_empty() {
            return Some(vec![]);
        }
        let mut candidates: Vec<&String> = self
            .variables()
            .iter()
            .filter(|v| name.starts_with(v.as_str()))
            .collect();
        candidates.sort_by_key(|v| std::cmp::Reverse(v.len()));
        for v in candidates {
            if let Some(mut rest) = self.split_variables(&name[v.len()..]) {
                rest.insert(0, v.clone());
                return Some(rest);
            }
        }
        None
    }

    fn apply_variable(
        &self,
        p: &mut Parser,
        exps: &mut [u32],
        name: &str,
        pos: usize,
    ) -> Result<(), DomainError> {
        let idx = self.var_index(name);
        let exp: u32 = if let Some(Token::Caret) = p.peek() {
            p.advance();
            let epos = p.position();
            let digits = p
                .take_number()
                .ok_or_else(|| parse_error(epos, "expected an exponent after ^"))?;
            digits
                .parse()
                .map_err(|_| parse_error(epos, "malformed exponent"))?
        } else {
            1
        };
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or_else(|| parse_error(pos, "exponent overflow"))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::MonomialOrder;

    fn qxy() -> PolyRing<Rationals> {
        PolyRing::new(
            Rationals,
            vec!["x".to_string(), "y".to_string()],
            MonomialOrder::Lex,
        )
        .unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(Integers.parse_element(" -42 ").unwrap(), BigInt::from(-42));
        assert_eq!(
            Rationals.parse_element("3/6").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
        assert!(Rationals.parse_element("1/0").is_err());
        let z8 = ModularRing::new(8).unwrap();
        assert_eq!(z8.parse_element("10").unwrap(), 2);
        assert_eq!(z8.parse_element("-3").unwrap(), 5);
        assert!(z8.parse_element("1/2").is_err());
        assert!(Integers.parse_element("x").is_err());
        assert!(Integers.parse_element("4 5").is_err());
    }

    #[test]
    fn polynomial_expressions() {
        let r = qxy();
        let p = r.parse_element("x^2 - 1").unwrap();
        assert_eq!(p, r.poly(&[(q(1), &[2, 0]), (q(-1), &[0, 0])]));
        let p = r.parse_element("3x^2y").unwrap();
        assert_eq!(p, r.poly(&[(q(3), &[2, 1])]));
        let p = r.parse_element("-x + 1").unwrap();
        assert_eq!(p, r.poly(&[(q(-1), &[1, 0]), (q(1), &[0, 0])]));
        let p = r.parse_element("1/2*x*y - 2/3").unwrap();
        assert_eq!(
            p,
            r.poly(&[
                (BigRational::new(1.into(), 2.into()), &[1, 1]),
                (BigRational::new((-2).into(), 3.into()), &[0, 0]),
            ])
        );
        // canonicalized on parse: like terms merge, zero terms vanish
        let p = r.parse_element("x + x - 2x").unwrap();
        assert!(p.is_zero());
        let p = r.parse_element("x*x*y").unwrap();
        assert_eq!(p, r.poly(&[(q(1), &[2, 1])]));
    }

    #[test]
    fn polynomial_errors() {
        let r = qxy();
        assert!(matches!(
            r.parse_element("x + z"),
            Err(DomainError::Parse { .. })
        ));
        assert!(r.parse_element("x^").is_err());
        assert!(r.parse_element("x^99999999999999999999").is_err());
        assert!(r.parse_element("").is_err());
        assert!(r.parse_element("x ? y").is_err());
    }

    #[test]
    fn parse_render_round_trip() {
        let r = qxy();
        for src in [
            "x^2 - 1",
            "x*y - 1",
            "-x + y",
            "3*x*y^2 + 1/2",
            "x^3 + 2*x^2*y - 5",
            "0",
        ] {
            let p = r.parse_element(src).unwrap();
            let rendered = r.render(&p);
            let p2 = r.parse_element(&rendered).unwrap();
            assert_eq!(p, p2, "round trip failed: {src} -> {rendered}");
        }
    }

    #[test]
    fn residue_polynomials() {
        let z6 = ModularRing::new(6).unwrap();
        let r = PolyRing::new(z6, vec!["x".to_string()], MonomialOrder::Lex).unwrap();
        let p = r.parse_element("7x + 8").unwrap();
        assert_eq!(p, r.poly(&[(1u64, &[1]), (2u64, &[0])]));
        let p = r.parse_element("6x").unwrap();
        assert!(p.is_zero());
    }
}
