//! Recursive-descent parser.
//!
//! ```text
//! identity := name ":" "forall" [decl {"," decl}] "." expr "=" expr
//! decl     := var "in" ("A" | "Ahat")
//! expr     := prod {("+" | "-") prod}
//! prod     := unary {"*" unary | term}          juxtaposition = product
//! unary    := "-" unary | term
//! term     := scalar | var ["(" int ")"] | fn "(" expr ")"
//!           | act "(" expr "," expr ")" | "<" expr "," expr ">"
//!           | "(" expr ")" | const
//! ```
//!
//! `x(k)` after a variable with an integer literal `k` is always a Sweedler
//! leg. Juxtaposition does not start with `-`, so `a - b` is a difference;
//! write `a * -b` for a product with a negated factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{is_reserved, Action, Const, Decl, Expr, Func, IdentityProgram, Sort};
use super::lexer::{lex, Spanned, Tok};
use super::DslError;

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    vars: Vec<String>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

/// Parses one identity; `line0` is the line of the first character, for
/// error positions inside larger files.
pub fn parse_identity(src: &str, line0: usize) -> Result<IdentityProgram, DslError> {
    let lead = src.len() - src.trim_start().len();
    let (mut line, mut column) = (line0, 1);
    for c in src[..lead].chars() {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    let body = &src[lead..];
    let Some(colon) = body.find(':') else {
        return Err(DslError::Syntax { line, column, msg: "expected `name:` before the identity".into() });
    };
    let name = body[..colon].trim();
    if !valid_name(name) {
        return Err(DslError::Syntax {
            line,
            column,
            msg: format!("invalid identity name `{name}` (letters, digits, `_`, `.`, `-`)"),
        });
    }
    for c in body[..=colon].chars() {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    let toks = lex(&body[colon + 1..], line, column)?;
    let mut p = Parser { toks, pos: 0, vars: Vec::new() };
    let prog = p.identity(name.to_string())?;
    Ok(prog)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        let t = &self.toks[self.pos];
        Err(DslError::Syntax { line: t.line, column: t.column, msg: msg.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, DslError> {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn identity(&mut self, name: String) -> Result<IdentityProgram, DslError> {
        match self.peek() {
            Tok::Ident(s) if s == "forall" => {
                self.bump();
            }
            _ => return self.unexpected("`forall`"),
        }
        let mut decls = Vec::new();
        if *self.peek() != Tok::Dot {
            loop {
                decls.push(self.decl()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot)?;
        self.vars = decls.iter().map(|d: &Decl| d.name.clone()).collect();
        let lhs = self.expr()?;
        self.expect(Tok::Eq)?;
        let rhs = self.expr()?;
        if *self.peek() != Tok::End {
            return self.unexpected("end of identity");
        }
        Ok(IdentityProgram { name, decls, lhs, rhs })
    }

    fn decl(&mut self) -> Result<Decl, DslError> {
        let name = match self.peek().clone() {
            Tok::Ident(s) if !is_reserved(&s) => s,
            Tok::Ident(s) => return self.error(format!("`{s}` is reserved and cannot be a variable")),
            _ => return self.unexpected("a variable name"),
        };
        if self.vars.contains(&name) {
            return self.error(format!("variable `{name}` declared twice"));
        }
        self.bump();
        match self.peek() {
            Tok::Ident(s) if s == "in" => {
                self.bump();
            }
            _ => return self.unexpected("`in`"),
        }
        let sort = match self.peek() {
            Tok::Ident(s) if s == "A" => Sort::A,
            Tok::Ident(s) if s == "Ahat" => Sort::Ahat,
            _ => return self.unexpected("`A` or `Ahat`"),
        };
        self.bump();
        self.vars.push(name.clone());
        Ok(Decl { name, sort })
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.prod()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.prod()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.prod()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_term(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::Int(_) | Tok::LParen | Tok::LAngle)
    }

    fn prod(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.unary()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.starts_term() {
                acc = Expr::Mul(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.term()
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut den = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() => den = d,
                        Tok::Int(_) => {
                            self.pos -= 1;
                            return self.error("zero denominator");
                        }
                        _ => {
                            self.pos -= 1;
                            return self.unexpected("a denominator");
                        }
                    }
                }
                Ok(Expr::Lit(BigRational::new(n, den)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::LAngle => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let y = self.expr()?;
                self.expect(Tok::RAngle)?;
                Ok(Expr::Pair(Box::new(a), Box::new(y)))
            }
            Tok::Ident(s) => self.named(s),
            _ => self.unexpected("a term"),
        }
    }

    fn named(&mut self, s: String) -> Result<Expr, DslError> {
        if let Some(c) = Const::from_name(&s) {
            self.bump();
            return Ok(Expr::Const(c));
        }
        if let Some(f) = Func::from_name(&s) {
            self.bump();
            self.expect(Tok::LParen)?;
            let x = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(Expr::Apply(f, Box::new(x)));
        }
        if let Some(act) = Action::from_name(&s) {
            self.bump();
            self.expect(Tok::LParen)?;
            let x = self.expr()?;
            self.expect(Tok::Comma)?;
            let y = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(Expr::Act(act, Box::new(x), Box::new(y)));
        }
        if !self.vars.contains(&s) {
            return self.error(format!("unknown name `{s}` (undeclared variable?)"));
        }
        self.bump();
        let leg = match (self.peek(), self.peek_at(1), self.peek_at(2)) {
            (Tok::LParen, Tok::Int(k), Tok::RParen) => {
                let k = k.clone();
                let Ok(k) = u32::try_from(&k) else {
                    self.bump();
                    return self.error("leg index out of range");
                };
                if k == 0 {
                    self.bump();
                    return self.error("Sweedler legs are numbered from 1");
                }
                self.bump();
                self.bump();
                self.bump();
                Some(k)
            }
            _ => None,
        };
        Ok(Expr::Var { name: s, leg })
    }
}
