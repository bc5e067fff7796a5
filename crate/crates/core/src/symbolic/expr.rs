//! Pointed-space expression trees with a parenthesized text grammar.
//!
//! Grammar (printer and parser round-trip exactly):
//!
//! ```text
//! e ::= S^n | pt | atom:NAME | W(e,...) | P(e,...) | Sm(e,...)
//!     | J(e,e) | Susp^k(e) | Om(e) | RHS(e,e) | Cone(e) | Rem(n,d)
//! ```
//!
//! `Rem(n,d)` marks the tail of a James splitting of `ΣΩS^n` above degree `d`.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceExpr {
    Point,
    /// `S^n`, n ≥ 1.
    Sphere(u64),
    Atom(String),
    Wedge(Vec<SpaceExpr>),
    Product(Vec<SpaceExpr>),
    Smash(Vec<SpaceExpr>),
    Join(Box<SpaceExpr>, Box<SpaceExpr>),
    /// `Σ^k e`, k ≥ 1.
    Susp(u64, Box<SpaceExpr>),
    Loop(Box<SpaceExpr>),
    Cone(Box<SpaceExpr>),
    /// `A ⋊ B`.
    RightHalfSmash(Box<SpaceExpr>, Box<SpaceExpr>),
    /// Wedge summands of the James splitting of `ΣΩS^sphere` in degrees
    /// above `cap`.
    JamesRemainder { sphere: u64, cap: u64 },
}

impl SpaceExpr {
    pub fn sphere(n: u64) -> Self {
        SpaceExpr::Sphere(n)
    }

    pub fn atom(name: impl Into<String>) -> Self {
        SpaceExpr::Atom(name.into())
    }

    pub fn susp(k: u64, e: SpaceExpr) -> Self {
        SpaceExpr::Susp(k, Box::new(e))
    }

    pub fn looped(e: SpaceExpr) -> Self {
        SpaceExpr::Loop(Box::new(e))
    }

    pub fn join(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Join(Box::new(a), Box::new(b))
    }

    pub fn half_smash(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::RightHalfSmash(Box::new(a), Box::new(b))
    }

    pub fn contains_remainder(&self) -> bool {
        match self {
            SpaceExpr::JamesRemainder { .. } => true,
            SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::Atom(_) => false,
            SpaceExpr::Wedge(es) | SpaceExpr::Product(es) | SpaceExpr::Smash(es) => {
                es.iter().any(SpaceExpr::contains_remainder)
            }
            SpaceExpr::Join(a, b) | SpaceExpr::RightHalfSmash(a, b) => {
                a.contains_remainder() || b.contains_remainder()
            }
            SpaceExpr::Susp(_, e) | SpaceExpr::Loop(e) | SpaceExpr::Cone(e) => {
                e.contains_remainder()
            }
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, head: &str, es: &[SpaceExpr]) -> fmt::Result {
    write!(f, "{head}(")?;
    for (i, e) in es.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, ")")
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => write!(f, "pt"),
            SpaceExpr::Sphere(n) => write!(f, "S^{n}"),
            SpaceExpr::Atom(name) => write!(f, "atom:{name}"),
            SpaceExpr::Wedge(es) => write_list(f, "W", es),
            SpaceExpr::Product(es) => write_list(f, "P", es),
            SpaceExpr::Smash(es) => write_list(f, "Sm", es),
            SpaceExpr::Join(a, b) => write!(f, "J({a},{b})"),
            SpaceExpr::Susp(k, e) => write!(f, "Susp^{k}({e})"),
            SpaceExpr::Loop(e) => write!(f, "Om({e})"),
            SpaceExpr::Cone(e) => write!(f, "Cone({e})"),
            SpaceExpr::RightHalfSmash(a, b) => write!(f, "RHS({a},{b})"),
            SpaceExpr::JamesRemainder { sphere, cap } => write!(f, "Rem({sphere},{cap})"),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::ExprParse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let digits: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return self.err("expected a number");
        }
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| Error::ExprParse {
                offset: self.pos,
                message: "number out of range".into(),
            })
    }

    fn list(&mut self) -> Result<Vec<SpaceExpr>> {
        self.expect("(")?;
        let mut out = vec![self.expr()?];
        loop {
            self.skip_ws();
            if self.eat(",") {
                out.push(self.expr()?);
            } else {
                self.expect(")")?;
                return Ok(out);
            }
        }
    }

    fn pair(&mut self) -> Result<(SpaceExpr, SpaceExpr)> {
        self.expect("(")?;
        let a = self.expr()?;
        self.skip_ws();
        self.expect(",")?;
        let b = self.expr()?;
        self.skip_ws();
        self.expect(")")?;
        Ok((a, b))
    }

    fn unary(&mut self) -> Result<SpaceExpr> {
        self.expect("(")?;
        let e = self.expr()?;
        self.skip_ws();
        self.expect(")")?;
        Ok(e)
    }

    fn expr(&mut self) -> Result<SpaceExpr> {
        self.skip_ws();
        if self.eat("S^") {
            let n = self.number()?;
            if n == 0 {
                return self.err("sphere dimension must be at least 1");
            }
            return Ok(SpaceExpr::Sphere(n));
        }
        if self.eat("pt") {
            return Ok(SpaceExpr::Point);
        }
        if self.eat("atom:") {
            let name: String = self
                .rest()
                .chars()
                .take_while(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | ','))
                .collect();
            if name.is_empty() {
                return self.err("expected an atom name");
            }
            self.pos += name.len();
            return Ok(SpaceExpr::Atom(name));
        }
        if self.eat("Susp^") {
            let k = self.number()?;
            if k == 0 {
                return self.err("suspension power must be at least 1");
            }
            return Ok(SpaceExpr::susp(k, self.unary()?));
        }
        // Longer heads first so `Sm` is not read as `S`.
        if self.eat("Sm") {
            return Ok(SpaceExpr::Smash(self.list()?));
        }
        if self.eat("W") {
            return Ok(SpaceExpr::Wedge(self.list()?));
        }
        if self.eat("P") {
            return Ok(SpaceExpr::Product(self.list()?));
        }
        if self.eat("J") {
            let (a, b) = self.pair()?;
            return Ok(SpaceExpr::join(a, b));
        }
        if self.eat("Om") {
            return Ok(SpaceExpr::looped(self.unary()?));
        }
        if self.eat("Cone") {
            return Ok(SpaceExpr::Cone(Box::new(self.unary()?)));
        }
        if self.eat("RHS") {
            let (a, b) = self.pair()?;
            return Ok(SpaceExpr::half_smash(a, b));
        }
        if self.eat("Rem") {
            self.expect("(")?;
            let sphere = self.number()?;
            self.expect(",")?;
            let cap = self.number()?;
            self.expect(")")?;
            return Ok(SpaceExpr::JamesRemainder { sphere, cap });
        }
        self.err("expected an expression")
    }
}

/// Parses the expression grammar. The whole input must be consumed.
pub fn parse_expr(input: &str) -> Result<SpaceExpr> {
    let mut p = Parser { input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != input.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_parse_round_trip() {
        let samples = [
            "pt",
            "S^3",
            "atom:A1",
            "W(S^2,S^3)",
            "P(Om(S^3),Om(S^3))",
            "Sm(S^1,S^1,atom:B)",
            "J(atom:Lpp,atom:G)",
            "Susp^2(Om(S^4))",
            "RHS(atom:H,atom:G)",
            "Cone(atom:A)",
            "Rem(3,16)",
            "Om(W(J(atom:Lpp,atom:G),RHS(atom:Kpp,atom:G)))",
        ];
        for s in samples {
            let e = parse_expr(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        for bad in ["", "S^0", "W()", "W(S^1", "Susp^0(pt)", "pt garbage"] {
            assert!(matches!(parse_expr(bad), Err(Error::ExprParse { .. })), "{bad}");
        }
    }
}
