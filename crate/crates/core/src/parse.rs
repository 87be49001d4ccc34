//! Text syntax for terms and signed words.
//!
//! ```text
//! term   := factor { factor } ;
//! factor := atom { "^*" | "^+" } ;
//! atom   := "1" | GEN | "[" GEN { GEN } "]" | "M(" term ")" | "(" term ")" ;
//! word   := { ( GEN | "[" GEN { GEN } "]" ) [ "'" ] } | "1" ;
//! ```
//!
//! Juxtaposition is multiplication and associates to the left. Adjacent
//! generators may be written without spaces when the split into declared
//! symbols is unambiguous under longest match (`xy` reads as `x y`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::term::BiTerm;
use crate::word::{Alphabet, Label, Letter, SignedLetter, SignedWord};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    One,
    Gens(Vec<Letter>),
    LBracket,
    RBracket,
    MaxOpen,
    LParen,
    RParen,
    StarOp,
    PlusOp,
    Prime,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn lex(text: &str, alphabet: &Alphabet) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'1' => {
                out.push((i, Tok::One));
                i += 1;
            }
            b'[' => {
                out.push((i, Tok::LBracket));
                i += 1;
            }
            b']' => {
                out.push((i, Tok::RBracket));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'\'' => {
                out.push((i, Tok::Prime));
                i += 1;
            }
            b'^' => match bytes.get(i + 1) {
                Some(b'*') => {
                    out.push((i, Tok::StarOp));
                    i += 2;
                }
                Some(b'+') => {
                    out.push((i, Tok::PlusOp));
                    i += 2;
                }
                _ => return Err(syntax(i, "expected `^*` or `^+`")),
            },
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let run = &text[start..i];
                if run == "M" && bytes.get(i) == Some(&b'(') {
                    out.push((start, Tok::MaxOpen));
                    i += 1;
                    continue;
                }
                match alphabet.split_run(run) {
                    Some(letters) => out.push((start, Tok::Gens(letters))),
                    None => {
                        return Err(Error::UnknownGenerator { position: start, name: run.to_string() })
                    }
                }
            }
            _ => return Err(syntax(i, alloc::format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.offset(), alloc::format!("expected {what}")))
        }
    }

    fn term(&mut self) -> Result<BiTerm> {
        let mut acc: Option<BiTerm> = None;
        while let Some(tok) = self.peek() {
            if matches!(tok, Tok::RParen) {
                break;
            }
            for f in self.factor()? {
                acc = Some(match acc {
                    None => f,
                    Some(a) => BiTerm::mul(a, f),
                });
            }
        }
        acc.ok_or_else(|| syntax(self.offset(), "expected a term"))
    }

    /// A run of generators yields several factors; postfix operators bind to the last.
    fn factor(&mut self) -> Result<Vec<BiTerm>> {
        let mut atoms = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::StarOp) => {
                    self.pos += 1;
                    let last = atoms.pop().expect("atom yields at least one factor");
                    atoms.push(BiTerm::star(last));
                }
                Some(Tok::PlusOp) => {
                    self.pos += 1;
                    let last = atoms.pop().expect("atom yields at least one factor");
                    atoms.push(BiTerm::plus(last));
                }
                _ => break,
            }
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Vec<BiTerm>> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::One) => Ok(alloc::vec![BiTerm::One]),
            Some(Tok::Gens(letters)) => Ok(letters.into_iter().map(BiTerm::Gen).collect()),
            Some(Tok::LBracket) => {
                let word = self.bracket_body()?;
                Ok(alloc::vec![BiTerm::bar(&word)])
            }
            Some(Tok::MaxOpen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(alloc::vec![BiTerm::max(t)])
            }
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(alloc::vec![t])
            }
            Some(_) => Err(syntax(at, "expected an atom")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn bracket_body(&mut self) -> Result<Vec<Letter>> {
        let mut word = Vec::new();
        while let Some(Tok::Gens(letters)) = self.peek() {
            word.extend_from_slice(letters);
            self.pos += 1;
        }
        if word.is_empty() {
            return Err(syntax(self.offset(), "empty barred word"));
        }
        self.expect(Tok::RBracket, "`]`")?;
        Ok(word)
    }
}

pub fn parse_term(text: &str, alphabet: &Alphabet) -> Result<BiTerm> {
    let toks = lex(text, alphabet)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let t = p.term()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.offset(), "unbalanced `)`"));
    }
    Ok(t)
}

pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<SignedWord> {
    let toks = lex(text, alphabet)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let mut out: Vec<SignedLetter> = Vec::new();
    if p.toks.len() == 1 && p.toks[0].1 == Tok::One {
        return Ok(SignedWord::empty());
    }
    while p.pos < p.toks.len() {
        let at = p.offset();
        match p.bump() {
            Some(Tok::Gens(letters)) => {
                out.extend(letters.into_iter().map(|x| SignedLetter::pos(Label::Plain(x))));
            }
            Some(Tok::LBracket) => {
                let word = p.bracket_body()?;
                out.push(SignedLetter::pos(Label::barred(&word).expect("bracket body is nonempty")));
            }
            Some(Tok::Prime) => match out.last_mut() {
                Some(last) if !last.inverse => last.inverse = true,
                _ => return Err(syntax(at, "`'` must follow a letter")),
            },
            _ => return Err(syntax(at, "expected a generator or a barred word")),
        }
    }
    Ok(SignedWord(out))
}

/// A positive word such as `xy` or `x y`; `1` or empty text is the empty word.
pub fn parse_positive(text: &str, alphabet: &Alphabet) -> Result<Vec<Letter>> {
    let toks = lex(text, alphabet)?;
    let mut out = Vec::new();
    for (at, t) in toks {
        match t {
            Tok::Gens(letters) => out.extend(letters),
            Tok::One => {}
            _ => return Err(syntax(at, "expected a positive word")),
        }
    }
    Ok(out)
}
