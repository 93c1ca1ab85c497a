//! Surface syntax.
//!
//! ```text
//! concept  := disj ("->" concept)?
//! disj     := conj ("or" conj)*
//! conj     := unary ("and" unary)*
//! unary    := ("exists" | "forall") role "." unary | atom
//! atom     := DEGREE | NAME | "{" NAME "}" | "(" concept ")"
//! role     := seq ("|" seq)*
//! seq      := post (";" post)*
//! post     := "inv" post | prim "*"*
//! prim     := NAME | "(" role ")" | atom "?"
//! ```

use thiserror::Error;

use crate::degree::Degree;
use crate::model::{Name, Signature};

use super::{Concept, Role};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Dot,
    Semi,
    Bar,
    Star,
    Question,
    Arrow,
    End,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '.' => Some(Tok::Dot),
            ';' => Some(Tok::Semi),
            '|' => Some(Tok::Bar),
            '*' => Some(Tok::Star),
            '?' => Some(Tok::Question),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
        } else if c == '-' {
            if chars.get(i + 1).map(|p| p.1) == Some('>') {
                out.push((Tok::Arrow, pos));
                i += 2;
            } else {
                return err(pos, "expected `->`");
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_digit()) {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i].1 == '.' && chars[i + 1].1.is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            let end = chars.get(i).map_or(text.len(), |p| p.0);
            out.push((Tok::Number(text[chars[start].0..end].to_string()), pos));
        } else if is_ident_char(c) {
            let start = i;
            while i < chars.len() && is_ident_char(chars[i].1) {
                i += 1;
            }
            let end = chars.get(i).map_or(text.len(), |p| p.0);
            out.push((Tok::Ident(text[chars[start].0..end].to_string()), pos));
        } else {
            return err(pos, format!("unexpected character `{c}`"));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

const KEYWORDS: [&str; 5] = ["and", "or", "exists", "forall", "inv"];

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            err(self.offset(), format!("expected {what}"))
        }
    }

    fn concept(&mut self) -> Result<Concept, ParseError> {
        let lhs = self.disj()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.concept()?;
            return Ok(Concept::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Concept, ParseError> {
        let mut c = self.conj()?;
        while self.is_kw("or") {
            self.bump();
            c = Concept::or(c, self.conj()?);
        }
        Ok(c)
    }

    fn conj(&mut self) -> Result<Concept, ParseError> {
        let mut c = self.unary()?;
        while self.is_kw("and") {
            self.bump();
            c = Concept::and(c, self.unary()?);
        }
        Ok(c)
    }

    fn unary(&mut self) -> Result<Concept, ParseError> {
        for (kw, exists) in [("exists", true), ("forall", false)] {
            if self.is_kw(kw) {
                self.bump();
                let r = self.role()?;
                self.expect(Tok::Dot, "`.` after the role")?;
                let c = self.unary()?;
                return Ok(if exists { Concept::exists(r, c) } else { Concept::forall(r, c) });
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Concept, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Number(s) => match s.parse::<Degree>() {
                Ok(d) => Ok(Concept::Constant(d)),
                Err(e) => err(at, e.to_string()),
            },
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => err(at, format!("unexpected keyword `{s}`")),
            Tok::Ident(s) => match self.sig.lookup(&s) {
                Some(Name::Concept(i)) => Ok(Concept::Name(i)),
                Some(_) => err(at, format!("`{s}` is not a concept name")),
                None => err(at, format!("unknown name `{s}`")),
            },
            Tok::LBrace => {
                let at_name = self.offset();
                let name = match self.bump() {
                    Tok::Ident(s) => s,
                    _ => return err(at_name, "expected an individual name"),
                };
                let a = match self.sig.lookup(&name) {
                    Some(Name::Individual(a)) => a,
                    Some(_) => return err(at_name, format!("`{name}` is not an individual name")),
                    None => return err(at_name, format!("unknown name `{name}`")),
                };
                if !self.sig.features().nominals {
                    return err(at, "nominals require feature O");
                }
                self.expect(Tok::RBrace, "`}`")?;
                Ok(Concept::Nominal(a))
            }
            Tok::LParen => {
                let c = self.concept()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(c)
            }
            _ => err(at, "expected a concept"),
        }
    }

    fn role(&mut self) -> Result<Role, ParseError> {
        let mut r = self.seq()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            r = Role::Union(Box::new(r), Box::new(self.seq()?));
        }
        Ok(r)
    }

    fn seq(&mut self) -> Result<Role, ParseError> {
        let mut r = self.post()?;
        while *self.peek() == Tok::Semi {
            self.bump();
            r = Role::Compose(Box::new(r), Box::new(self.post()?));
        }
        Ok(r)
    }

    fn post(&mut self) -> Result<Role, ParseError> {
        if self.is_kw("inv") {
            let at = self.offset();
            self.bump();
            if !self.sig.features().inverse {
                return err(at, "inverse roles require feature I");
            }
            return Ok(Role::Inverse(Box::new(self.post()?)));
        }
        let mut r = self.prim()?;
        while *self.peek() == Tok::Star {
            self.bump();
            r = Role::Star(Box::new(r));
        }
        Ok(r)
    }

    fn prim(&mut self) -> Result<Role, ParseError> {
        if let Tok::Ident(s) = self.peek() {
            if let Some(Name::Role(i)) = self.sig.lookup(s) {
                self.bump();
                return Ok(Role::Name(i));
            }
        }
        if *self.peek() == Tok::LParen {
            let save = self.pos;
            self.bump();
            if let Ok(r) = self.role() {
                if *self.peek() == Tok::RParen {
                    self.bump();
                    return Ok(r);
                }
            }
            self.pos = save;
        }
        let c = self.atom()?;
        if *self.peek() != Tok::Question {
            return err(self.offset(), "expected `?` after a test concept");
        }
        self.bump();
        Ok(Role::Test(Box::new(c)))
    }
}

fn run<'s, T>(
    text: &str,
    sig: &'s Signature,
    f: impl FnOnce(&mut Parser<'s>) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, sig };
    let out = f(&mut p)?;
    if *p.peek() != Tok::End {
        return err(p.offset(), "unexpected trailing input");
    }
    Ok(out)
}

/// Parses a concept; inverse roles and nominals need the signature's features.
pub fn parse_concept(text: &str, sig: &Signature) -> Result<Concept, ParseError> {
    run(text, sig, Parser::concept)
}

pub fn parse_role(text: &str, sig: &Signature) -> Result<Role, ParseError> {
    run(text, sig, Parser::role)
}
