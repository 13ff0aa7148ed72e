use num_bigint::BigInt;

use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Dot,
    Comma,
    LParen,
    RParen,
    LAngle,
    RAngle,
    Star,
    Plus,
    Minus,
    Slash,
    Eq,
    Colon,
    End,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::End => "end of input".into(),
            other => {
                let c = match other {
                    Tok::Dot => ".",
                    Tok::Comma => ",",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LAngle => "<",
                    Tok::RAngle => ">",
                    Tok::Star => "*",
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Slash => "/",
                    Tok::Eq => "=",
                    _ => ":",
                };
                format!("`{c}`")
            }
        }
    }
}

/// A token with its 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

/// Identifiers may contain `.` and `-` only inside an identity name, which
/// the parser reads before lexing; here they are letters, digits, `_` and
/// trailing primes.
fn ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub fn lex(src: &str, line0: usize, col0: usize) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (line0, col0);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c == '#' {
            while let Some(&d) = chars.peek() {
                if d == '\n' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line: l, column: col });
        if ident_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !ident_continue(d) {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Ident(s));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Int(s.parse().expect("digits")));
            continue;
        }
        let tok = match c {
            '.' => Tok::Dot,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '<' => Tok::LAngle,
            '>' => Tok::RAngle,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '/' => Tok::Slash,
            '=' => Tok::Eq,
            ':' => Tok::Colon,
            other => {
                return Err(DslError::Syntax {
                    line: l,
                    column: col,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        column += 1;
        push(&mut out, tok);
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_comments() {
        let toks = lex("a(1) # note\n  <b, y'>", 1, 1).unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(kinds[0], &Tok::Ident("a".into()));
        assert_eq!(kinds[2], &Tok::Int(1.into()));
        assert_eq!(toks[4].tok, Tok::LAngle);
        assert_eq!((toks[4].line, toks[4].column), (2, 3));
        assert_eq!(toks[7].tok, Tok::Ident("y'".into()));
    }

    #[test]
    fn stray_character() {
        let err = lex("a ? b", 3, 1).unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 3, column: 3, .. }));
    }
}
