//! Operator expressions over ξ, ∇, ρ^(k) and ξ^λ.
//!
//! ```text
//! expr := sum
//! sum  := ['-'] prod (('+' | '-') prod)*
//! prod := (rational '*')? atom+
//! atom := 'xi' | 'nabla' | 'rho(' int ')' | 'xiL(' partition ')'
//!       | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! Juxtaposition is composition and the rightmost factor applies first, so
//! `xi nabla` means ∇ then ξ.

use std::fmt;

use diffschub::bsops;
use diffschub::exact::{FormalSum, Rational};
use diffschub::perm::SchubElement;
use diffschub::yops::{self, DiagElement};
use diffschub::{ParseError, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Xi,
    Nabla,
    Rho(usize),
    XiLambda(Partition),
    Commutator(Box<OperatorExpr>, Box<OperatorExpr>),
    Group(Box<OperatorExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: Vec<Atom>,
}

/// A signed sum of scaled compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpr {
    pub terms: Vec<Term>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(msg, self.pos)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.rest().chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut terms = Vec::new();
        let mut negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        loop {
            let mut t = self.prod()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(OperatorExpr { terms })
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut coeff = Rational::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let text = self.take_while(|c| c.is_ascii_digit() || c == '/' || c.is_whitespace());
            coeff = text.parse().map_err(|e: ParseError| e.shifted(start))?;
            self.expect('*')?;
        }
        let mut factors = vec![self.atom()?];
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '[' || c == '(') {
            factors.push(self.atom()?);
        }
        Ok(Term { coeff, factors })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Atom::Commutator(Box::new(a), Box::new(b)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Atom::Group(Box::new(e)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                match self.take_while(|c| c.is_ascii_alphabetic()) {
                    "xi" => Ok(Atom::Xi),
                    "nabla" => Ok(Atom::Nabla),
                    "rho" => {
                        let (at, arg) = self.argument()?;
                        match arg.trim().parse::<usize>() {
                            Ok(k) if k >= 1 => Ok(Atom::Rho(k)),
                            _ => Err(ParseError::new("rho needs an integer k ≥ 1", at)),
                        }
                    }
                    "xiL" => {
                        let (at, arg) = self.argument()?;
                        let lam = arg.trim().parse::<Partition>().map_err(|e| e.shifted(at))?;
                        Ok(Atom::XiLambda(lam))
                    }
                    other => Err(ParseError::new(format!("unknown operator '{other}'"), start)),
                }
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    /// The text between `(` and the next `)` after a name, with its offset.
    fn argument(&mut self) -> Result<(usize, &'a str), ParseError> {
        if self.peek() != Some('(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        let at = self.pos;
        let inner = self.take_while(|c| c != ')');
        if self.rest().is_empty() {
            return Err(self.err("expected ')'"));
        }
        self.pos += 1;
        Ok((at, inner))
    }
}

pub fn parse_op(s: &str) -> Result<OperatorExpr, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Xi => write!(f, "xi"),
            Atom::Nabla => write!(f, "nabla"),
            Atom::Rho(k) => write!(f, "rho({k})"),
            Atom::XiLambda(l) => write!(f, "xiL({l})"),
            Atom::Commutator(a, b) => write!(f, "[{a}, {b}]"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            let c = if neg { -&t.coeff } else { t.coeff.clone() };
            if c != Rational::one() {
                write!(f, "{c} * ")?;
            }
            let factors: Vec<String> = t.factors.iter().map(Atom::to_string).collect();
            write!(f, "{}", factors.join(" "))?;
        }
        Ok(())
    }
}

pub fn print_op(e: &OperatorExpr) -> String {
    e.to_string()
}

/// The basis an expression acts on.
pub trait Basis: Sized {
    fn xi(x: &Self) -> Self;
    fn nabla(x: &Self) -> Self;
    fn rho(k: usize, x: &Self) -> Self;
    fn xi_lambda(l: &Partition, x: &Self) -> Self;
}

impl Basis for DiagElement {
    fn xi(x: &Self) -> Self {
        yops::xi(x)
    }
    fn nabla(x: &Self) -> Self {
        yops::nabla(x)
    }
    fn rho(k: usize, x: &Self) -> Self {
        yops::rho(k, x)
    }
    fn xi_lambda(l: &Partition, x: &Self) -> Self {
        yops::xi_lambda(l, x)
    }
}

impl Basis for SchubElement {
    fn xi(x: &Self) -> Self {
        bsops::xi_perm(x)
    }
    fn nabla(x: &Self) -> Self {
        bsops::nabla_perm(x)
    }
    fn rho(k: usize, x: &Self) -> Self {
        bsops::rho_perm(k, x)
    }
    fn xi_lambda(l: &Partition, x: &Self) -> Self {
        bsops::xi_lambda_perm(l, x)
    }
}

impl Atom {
    fn apply<K: Ord + Clone>(&self, x: &FormalSum<K>) -> FormalSum<K>
    where
        FormalSum<K>: Basis,
    {
        match self {
            Atom::Xi => Basis::xi(x),
            Atom::Nabla => Basis::nabla(x),
            Atom::Rho(k) => Basis::rho(*k, x),
            Atom::XiLambda(l) => Basis::xi_lambda(l, x),
            Atom::Commutator(a, b) => &a.apply(&b.apply(x)) - &b.apply(&a.apply(x)),
            Atom::Group(e) => e.apply(x),
        }
    }
}

impl OperatorExpr {
    pub fn apply<K: Ord + Clone>(&self, x: &FormalSum<K>) -> FormalSum<K>
    where
        FormalSum<K>: Basis,
    {
        let mut out = FormalSum::zero();
        for t in &self.terms {
            let y = t.factors.iter().rev().fold(x.clone(), |acc, a| a.apply(&acc));
            out.add_scaled(&t.coeff, &y);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_is_rho_two() {
        let e = parse_op("[xi,nabla]").unwrap();
        assert_eq!(e.terms.len(), 1);
        assert!(matches!(e.terms[0].factors[..], [Atom::Commutator(..)]));
        for lam in diffschub::young::partitions_up_to(5) {
            let x = FormalSum::basis(lam);
            assert_eq!(e.apply(&x), yops::rho(2, &x));
        }
    }

    #[test]
    fn xi_two_from_power_sums() {
        let e = parse_op("1/2 * (xi xi + rho(2))").unwrap();
        let two = Partition::new(vec![2]);
        for lam in diffschub::young::partitions_up_to(5) {
            let x = FormalSum::basis(lam);
            assert_eq!(e.apply(&x), yops::xi_lambda(&two, &x));
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_op("xi(").unwrap_err().position, 3);
        assert_eq!(parse_op("xi + foo").unwrap_err().position, 5);
        assert_eq!(parse_op("rho(0)").unwrap_err().position, 4);
        assert_eq!(parse_op("rho (x)").unwrap_err().position, 5);
        assert_eq!(parse_op("xiL(2,a)").unwrap_err().position, 6);
        assert!(parse_op("[xi nabla]").is_err());
        assert!(parse_op("").is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let x: DiagElement = FormalSum::basis(Partition::new(vec![2, 1]));
        let e = parse_op("xi nabla").unwrap();
        assert_eq!(e.apply(&x), yops::xi(&yops::nabla(&x)));
        let z = parse_op("xi nabla - nabla xi").unwrap();
        assert_eq!(z.apply(&x), yops::rho(2, &x));
    }

    #[test]
    fn printing_round_trips() {
        for s in ["xi", "-2 * xi nabla + rho(3)", "1/2 * (xi xi - rho(2))", "[xiL(2,1), nabla] - xi"] {
            let e = parse_op(s).unwrap();
            assert_eq!(parse_op(&print_op(&e)).unwrap(), e, "{s}");
        }
    }
}
