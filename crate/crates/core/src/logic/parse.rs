use thiserror::Error;

use super::Formula;

/// Parse failure; `token` is the 1-based index of the offending token and
/// `offset` its byte offset in the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty formula")]
    Empty,
    #[error("unknown token `{text}` at token {token} (offset {offset})")]
    UnknownToken { text: String, token: usize, offset: usize },
    #[error("unexpected {found} at token {token} (offset {offset})")]
    Unexpected { found: String, token: usize, offset: usize },
    #[error("unbalanced parentheses: {what} at token {token} (offset {offset})")]
    Unbalanced { what: String, token: usize, offset: usize },
    #[error("variable index must be positive at token {token} (offset {offset})")]
    ZeroVariable { token: usize, offset: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(u32),
    Not,
    Arrow,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Var(i) => format!("variable x{i}"),
        Tok::Not => "`~`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => {
                i += 1;
                Tok::Not
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            b'x' => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[digits_start..i];
                if digits.is_empty() {
                    return Err(ParseError::UnknownToken {
                        text: "x".into(),
                        token: out.len() + 1,
                        offset: start,
                    });
                }
                let idx: u32 = digits.parse().map_err(|_| ParseError::UnknownToken {
                    text: text[start..i].into(),
                    token: out.len() + 1,
                    offset: start,
                })?;
                if idx == 0 {
                    return Err(ParseError::ZeroVariable {
                        token: out.len() + 1,
                        offset: start,
                    });
                }
                Tok::Var(idx)
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::UnknownToken {
                    text: ch.to_string(),
                    token: out.len() + 1,
                    offset: start,
                });
            }
        };
        out.push(Spanned { tok, offset: start });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            Some(s) => ParseError::Unexpected {
                found: describe(&s.tok),
                token: self.pos + 1,
                offset: s.offset,
            },
            None => ParseError::Unexpected {
                found: "end of input".into(),
                token: self.pos + 1,
                offset: self.end,
            },
        }
    }

    // implication := unary ('->' implication)?
    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    // unary := '~' unary | atom
    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::negate(self.unary()?))
            }
            Some(Tok::Var(i)) => {
                let i = *i;
                self.pos += 1;
                Ok(Formula::Var(i))
            }
            Some(Tok::LParen) => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.implication()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    None => Err(ParseError::Unbalanced {
                        what: "unclosed `(`".into(),
                        token: open + 1,
                        offset: self.toks[open].offset,
                    }),
                    Some(_) => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses the ASCII syntax: `x1, x2, …` variables, prefix `~`, and a
/// right-associative infix `->`, with parentheses for grouping.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.implication()?;
    if let Some(s) = toks.get(p.pos) {
        if s.tok == Tok::RParen {
            return Err(ParseError::Unbalanced {
                what: "unmatched `)`".into(),
                token: p.pos + 1,
                offset: s.offset,
            });
        }
        return Err(p.unexpected());
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> Formula {
        Formula::Var(i)
    }

    #[test]
    fn axiom_instance() {
        let f = parse_formula("x1 -> (x2 -> x1)").unwrap();
        assert_eq!(f, Formula::implies(v(1), Formula::implies(v(2), v(1))));
    }

    #[test]
    fn negation_and_associativity() {
        assert_eq!(parse_formula("~x1").unwrap(), Formula::negate(v(1)));
        assert_eq!(
            parse_formula("x1 -> x2 -> x3").unwrap(),
            Formula::implies(v(1), Formula::implies(v(2), v(3)))
        );
        assert_eq!(
            parse_formula("~x1 -> x2").unwrap(),
            Formula::implies(Formula::negate(v(1)), v(2))
        );
        assert_eq!(parse_formula("~~(x1)").unwrap(), Formula::negate(Formula::negate(v(1))));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_formula("x1 -> -> x2") {
            Err(ParseError::Unexpected { token, offset, .. }) => {
                assert_eq!(token, 3);
                assert_eq!(offset, 6);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_formula("   "), Err(ParseError::Empty));
        assert!(matches!(parse_formula("(x1 -> x2"), Err(ParseError::Unbalanced { token: 1, .. })));
        assert!(matches!(parse_formula("x1)"), Err(ParseError::Unbalanced { token: 2, .. })));
        assert!(matches!(parse_formula("x1 & x2"), Err(ParseError::UnknownToken { token: 2, .. })));
        assert!(matches!(parse_formula("x0"), Err(ParseError::ZeroVariable { .. })));
        assert!(matches!(parse_formula("x1 x2"), Err(ParseError::Unexpected { token: 2, .. })));
    }

    #[test]
    fn printing_normalizes() {
        let f = parse_formula("((x1)) -> (~(x2) -> x3)").unwrap();
        assert_eq!(f.to_string(), "x1 -> ~x2 -> x3");
        let g = parse_formula("(x1 -> x2) -> ~(x1 -> x2)").unwrap();
        assert_eq!(g.to_string(), "(x1 -> x2) -> ~(x1 -> x2)");
        assert_eq!(parse_formula(&g.to_string()).unwrap(), g);
    }
}
