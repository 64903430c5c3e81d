//! Line-oriented text format for prioritized programs.
//!
//! ```text
//! % comment
//! r1: b :- a, not -b.
//! r2: -b :- not b.
//! r3: a :- not -a.
//! f1: c.
//! prefer r1 > r2.      % r1 is more preferred than r2
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lang::{is_atom_name, Atom, Literal, ObjectiveLiteral, PrioritizedProgram, Rule};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    If,
    Comma,
    Dot,
    Minus,
    Gt,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Colon => "`:`".into(),
            Tok::If => "`:-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        };
        match c {
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            c if c.is_whitespace() => bump(&mut chars),
            ':' => {
                bump(&mut chars);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars);
                    out.push(Token { tok: Tok::If, line: tl, col: tc });
                } else {
                    out.push(Token { tok: Tok::Colon, line: tl, col: tc });
                }
            }
            ',' | '.' | '-' | '>' => {
                bump(&mut chars);
                let tok = match c {
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '-' => Tok::Minus,
                    _ => Tok::Gt,
                };
                out.push(Token { tok, line: tl, col: tc });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                out.push(Token { tok: Tok::Ident(ident), line: tl, col: tc });
            }
            _ => {
                return Err(Error::Syntax {
                    line: tl,
                    col: tc,
                    expected: format!("identifier or punctuation, found `{c}`"),
                })
            }
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek2(&self) -> &Tok {
        let i = (self.pos + 1).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax { line: t.line, col: t.col, expected: format!("{expected}, found {}", t.tok.describe()) })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            self.fail(expected)
        }
    }

    fn name(&mut self) -> Result<Token> {
        match &self.peek().tok {
            Tok::Ident(s) if s.chars().next().is_some_and(|c| !c.is_ascii_digit()) => Ok(self.next()),
            _ => self.fail("rule name"),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        match &self.peek().tok {
            Tok::Ident(s) if is_atom_name(s) => {
                let s = s.clone();
                self.next();
                Atom::new(s)
            }
            _ => self.fail("atom (lowercase identifier)"),
        }
    }

    fn objective(&mut self) -> Result<ObjectiveLiteral> {
        let neg = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let atom = self.atom()?;
        Ok(ObjectiveLiteral { atom, strong_neg: neg })
    }

    fn literal(&mut self) -> Result<Literal> {
        if matches!(&self.peek().tok, Tok::Ident(s) if s == "not") {
            self.next();
            Ok(Literal::default(self.objective()?))
        } else {
            Ok(Literal::objective(self.objective()?))
        }
    }
}

/// Parses the text format into a program. Preferences are kept as declared;
/// see [`crate::validate_preferences`] for the closure.
pub fn parse_program(text: &str) -> Result<PrioritizedProgram> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut rules: Vec<Rule> = Vec::new();
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut prefer_refs: Vec<(Token, Token)> = Vec::new();

    while p.peek().tok != Tok::Eof {
        let is_prefer = matches!(&p.peek().tok, Tok::Ident(s) if s == "prefer") && *p.peek2() != Tok::Colon;
        if is_prefer {
            p.next();
            let more = p.name()?;
            p.expect(Tok::Gt, "`>`")?;
            let less = p.name()?;
            p.expect(Tok::Dot, "`.`")?;
            prefer_refs.push((less, more));
            continue;
        }

        let name_tok = p.name()?;
        let Tok::Ident(name) = name_tok.tok.clone() else { unreachable!() };
        p.expect(Tok::Colon, "`:` after rule name")?;
        if matches!(&p.peek().tok, Tok::Ident(s) if s == "not") {
            return p.fail("objective literal (heads never carry `not`)");
        }
        let head = p.objective()?;
        let mut body = Vec::new();
        match p.peek().tok {
            Tok::Dot => {
                p.next();
            }
            Tok::If => {
                p.next();
                if p.peek().tok != Tok::Dot {
                    body.push(p.literal()?);
                    while p.peek().tok == Tok::Comma {
                        p.next();
                        body.push(p.literal()?);
                    }
                }
                p.expect(Tok::Dot, "`,` or `.`")?;
            }
            _ => return p.fail("`:-` or `.`"),
        }
        if names.insert(name.clone(), rules.len()).is_some() {
            return Err(Error::DuplicateRuleName { name, line: name_tok.line });
        }
        rules.push(Rule::new(name, head, body));
    }

    let mut prefers = Vec::with_capacity(prefer_refs.len());
    for (less, more) in prefer_refs {
        for t in [&more, &less] {
            let Tok::Ident(n) = &t.tok else { unreachable!() };
            if !names.contains_key(n) {
                return Err(Error::UnknownRuleInPrefer { name: n.clone(), line: t.line, col: t.col });
            }
        }
        let (Tok::Ident(l), Tok::Ident(m)) = (less.tok, more.tok) else { unreachable!() };
        prefers.push((l, m));
    }
    Ok(PrioritizedProgram { rules, prefers })
}
