//! Alphabets, signed words over `X ∪ X̄⁺`, and reduced words of the free group.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

/// The finite generating set `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".to_string()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if !is_identifier(s) {
                return Err(Error::InvalidAlphabet(alloc::format!("`{s}` is not an identifier")));
            }
            // `M(` opens the maximum operator in the term grammar.
            if s == "M" {
                return Err(Error::InvalidAlphabet("`M` is reserved".to_string()));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(alloc::format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Parses a comma-separated declaration such as `"x,y"`.
    pub fn parse(decl: &str) -> Result<Self> {
        Alphabet::new(decl.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len() as u32).map(Letter)
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == name).map(|i| Letter(i as u32))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (letter.0 as usize) < self.symbols.len()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.symbols[letter.0 as usize]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// Splits a run of identifier characters into declared symbols, preferring
    /// the longest symbol at each step. Returns `None` if no split exists.
    pub fn split_run(&self, run: &str) -> Option<Vec<Letter>> {
        // Longest-match with backtracking over a small table of reachable offsets.
        let n = run.len();
        let mut best: Vec<Option<Vec<Letter>>> = alloc::vec![None; n + 1];
        best[n] = Some(Vec::new());
        for i in (0..n).rev() {
            let mut candidates: Vec<(usize, Letter)> = self
                .symbols
                .iter()
                .enumerate()
                .filter(|(_, s)| run[i..].starts_with(s.as_str()))
                .map(|(k, s)| (s.len(), Letter(k as u32)))
                .collect();
            candidates.sort_by(|a, b| b.0.cmp(&a.0));
            for (len, letter) in candidates {
                if let Some(rest) = &best[i + len] {
                    let mut v = Vec::with_capacity(rest.len() + 1);
                    v.push(letter);
                    v.extend_from_slice(rest);
                    best[i] = Some(v);
                    break;
                }
            }
        }
        best[0].take()
    }

    pub fn show<'a, T: Render + ?Sized>(&'a self, value: &'a T) -> Shown<'a, T> {
        Shown { alphabet: self, value }
    }
}

/// Values printable once symbol names are known.
pub trait Render {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

pub struct Shown<'a, T: ?Sized> {
    alphabet: &'a Alphabet,
    value: &'a T,
}

impl<T: Render + ?Sized> fmt::Display for Shown<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.render(self.alphabet, f)
    }
}

impl Render for [Letter] {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self {
            f.write_str(alphabet.name(*l))?;
        }
        Ok(())
    }
}

/// The word `u` of a barred letter `ū ∈ X̄⁺`. Never empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarredLabel(Vec<Letter>);

impl BarredLabel {
    /// Returns `None` for the empty word: `ū` for `u = 1` is the identity.
    pub fn new(word: Vec<Letter>) -> Option<Self> {
        if word.is_empty() {
            None
        } else {
            Some(BarredLabel(word))
        }
    }

    pub fn single(letter: Letter) -> Self {
        BarredLabel(alloc::vec![letter])
    }

    pub fn word(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &BarredLabel) -> BarredLabel {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        BarredLabel(w)
    }
}

/// A positive edge label: a plain generator `x` or a barred word `ū`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Plain(Letter),
    Barred(BarredLabel),
}

impl Label {
    pub fn barred(word: &[Letter]) -> Option<Label> {
        BarredLabel::new(word.to_vec()).map(Label::Barred)
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Label::Plain(_))
    }

    /// The plain letters this label spells in the free group.
    pub fn spelling(&self) -> &[Letter] {
        match self {
            Label::Plain(x) => core::slice::from_ref(x),
            Label::Barred(u) => u.word(),
        }
    }
}

impl Render for Label {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(x) => f.write_str(alphabet.name(*x)),
            Label::Barred(u) => {
                f.write_str("[")?;
                u.word().render(alphabet, f)?;
                f.write_str("]")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub label: Label,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn pos(label: Label) -> Self {
        SignedLetter { label, inverse: false }
    }

    pub fn neg(label: Label) -> Self {
        SignedLetter { label, inverse: true }
    }

    pub fn inverted(&self) -> Self {
        SignedLetter { label: self.label.clone(), inverse: !self.inverse }
    }
}

impl Render for SignedLetter {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label.render(alphabet, f)?;
        if self.inverse {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// An element of the free involutive monoid over `X ∪ X̄⁺`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedWord(pub Vec<SignedLetter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn plain(letters: &[Letter]) -> Self {
        SignedWord(letters.iter().map(|&x| SignedLetter::pos(Label::Plain(x))).collect())
    }

    /// `ū` as a one-letter word, or the empty word when `u = 1`.
    pub fn bar(u: &[Letter]) -> Self {
        SignedWord(Label::barred(u).map(SignedLetter::pos).into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.0
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// `(x₁⋯xₙ)⁻¹ = xₙ⁻¹⋯x₁⁻¹`.
    pub fn involutive_inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(SignedLetter::inverted).collect())
    }

    /// Value in the free group `FG(X)` under `x ↦ x`, `ū ↦ u`.
    pub fn group_value(&self) -> GroupWord {
        let mut acc = GroupWord::identity();
        for sl in &self.0 {
            let spelled = GroupWord::from_positive(sl.label.spelling());
            if sl.inverse {
                acc = acc.mul(&spelled.inverse());
            } else {
                acc = acc.mul(&spelled);
            }
        }
        acc
    }

    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|l| l.label.is_plain())
    }
}

impl Render for SignedWord {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            l.render(alphabet, f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupLetter {
    pub letter: Letter,
    pub inverse: bool,
}

impl GroupLetter {
    pub fn inverted(self) -> Self {
        GroupLetter { letter: self.letter, inverse: !self.inverse }
    }
}

/// A freely reduced word over `X ∪ X⁻¹`, i.e. an element of `FG(X)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord(Vec<GroupLetter>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn from_positive(letters: &[Letter]) -> Self {
        GroupWord(letters.iter().map(|&letter| GroupLetter { letter, inverse: false }).collect())
    }

    /// Freely reduces an arbitrary sequence.
    pub fn reduce<I: IntoIterator<Item = GroupLetter>>(letters: I) -> Self {
        let mut out: Vec<GroupLetter> = Vec::new();
        for g in letters {
            if out.last() == Some(&g.inverted()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        GroupWord(out)
    }

    pub fn letters(&self) -> &[GroupLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        GroupWord::reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|g| g.inverted()).collect())
    }

    pub fn times_letter(&self, g: GroupLetter) -> GroupWord {
        let mut v = self.0.clone();
        if v.last() == Some(&g.inverted()) {
            v.pop();
        } else {
            v.push(g);
        }
        GroupWord(v)
    }

    /// The geodesic prefix one step closer to the identity.
    pub fn parent(&self) -> Option<GroupWord> {
        if self.0.is_empty() {
            None
        } else {
            Some(GroupWord(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<GroupLetter> {
        self.0.last().copied()
    }

    pub fn to_signed_word(&self) -> SignedWord {
        SignedWord(
            self.0
                .iter()
                .map(|g| SignedLetter { label: Label::Plain(g.letter), inverse: g.inverse })
                .collect(),
        )
    }

    /// All geodesic prefixes, from the identity up to `self`.
    pub fn prefixes(&self) -> impl Iterator<Item = GroupWord> + '_ {
        (0..=self.0.len()).map(move |k| GroupWord(self.0[..k].to_vec()))
    }
}

impl Render for GroupWord {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            f.write_str(alphabet.name(g.letter))?;
            if g.inverse {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}
