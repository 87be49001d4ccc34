//! Terms in the signature `(·, *, ⁺, m(·), 1)`.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::word::{Alphabet, Letter, Render};

/// Unreduced term AST. Simplification happens only in the evaluators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BiTerm {
    One,
    Gen(Letter),
    Mul(Box<BiTerm>, Box<BiTerm>),
    Star(Box<BiTerm>),
    Plus(Box<BiTerm>),
    Max(Box<BiTerm>),
}

impl BiTerm {
    pub fn gen(x: Letter) -> Self {
        BiTerm::Gen(x)
    }

    pub fn mul(a: BiTerm, b: BiTerm) -> Self {
        BiTerm::Mul(Box::new(a), Box::new(b))
    }

    pub fn star(a: BiTerm) -> Self {
        BiTerm::Star(Box::new(a))
    }

    pub fn plus(a: BiTerm) -> Self {
        BiTerm::Plus(Box::new(a))
    }

    pub fn max(a: BiTerm) -> Self {
        BiTerm::Max(Box::new(a))
    }

    /// Left-associated product of the generators of `word`; `One` when empty.
    pub fn word(word: &[Letter]) -> Self {
        Self::product(word.iter().map(|&x| BiTerm::Gen(x)))
    }

    /// Left-associated product; `One` when empty.
    pub fn product<I: IntoIterator<Item = BiTerm>>(factors: I) -> Self {
        factors.into_iter().reduce(BiTerm::mul).unwrap_or(BiTerm::One)
    }

    /// `ū = m(u)`, with the empty word mapped to `1`.
    pub fn bar(word: &[Letter]) -> Self {
        if word.is_empty() {
            BiTerm::One
        } else {
            BiTerm::max(Self::word(word))
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            BiTerm::One | BiTerm::Gen(_) => 1,
            BiTerm::Mul(a, b) => 1 + a.size() + b.size(),
            BiTerm::Star(a) | BiTerm::Plus(a) | BiTerm::Max(a) => 1 + a.size(),
        }
    }

    pub fn contains_max(&self) -> bool {
        match self {
            BiTerm::One | BiTerm::Gen(_) => false,
            BiTerm::Mul(a, b) => a.contains_max() || b.contains_max(),
            BiTerm::Star(a) | BiTerm::Plus(a) => a.contains_max(),
            BiTerm::Max(_) => true,
        }
    }

    pub fn letters(&self, out: &mut Vec<Letter>) {
        match self {
            BiTerm::One => {}
            BiTerm::Gen(x) => out.push(*x),
            BiTerm::Mul(a, b) => {
                a.letters(out);
                b.letters(out);
            }
            BiTerm::Star(a) | BiTerm::Plus(a) | BiTerm::Max(a) => a.letters(out),
        }
    }

    /// Image under `σ♮` onto the free monoid `X*`: projections go to `1`,
    /// `m(t)` keeps the image of `t`.
    pub fn sigma_image(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.sigma_into(&mut out);
        out
    }

    fn sigma_into(&self, out: &mut Vec<Letter>) {
        match self {
            BiTerm::One | BiTerm::Star(_) | BiTerm::Plus(_) => {}
            BiTerm::Gen(x) => out.push(*x),
            BiTerm::Mul(a, b) => {
                a.sigma_into(out);
                b.sigma_into(out);
            }
            BiTerm::Max(a) => a.sigma_into(out),
        }
    }

    fn render_factor(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let BiTerm::Mul(..) = self {
            f.write_str("(")?;
            self.render(alphabet, f)?;
            f.write_str(")")
        } else {
            self.render(alphabet, f)
        }
    }
}

impl Render for BiTerm {
    fn render(&self, alphabet: &Alphabet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiTerm::One => f.write_str("1"),
            BiTerm::Gen(x) => f.write_str(alphabet.name(*x)),
            BiTerm::Mul(a, b) => {
                // juxtaposition associates to the left
                a.render(alphabet, f)?;
                f.write_str(" ")?;
                b.render_factor(alphabet, f)
            }
            BiTerm::Star(a) => {
                a.render_factor(alphabet, f)?;
                f.write_str("^*")
            }
            BiTerm::Plus(a) => {
                a.render_factor(alphabet, f)?;
                f.write_str("^+")
            }
            BiTerm::Max(a) => {
                f.write_str("M(")?;
                a.render(alphabet, f)?;
                f.write_str(")")
            }
        }
    }
}

/// The five free objects: `FFBR(X)` and its left strong, right strong,
/// strong and perfect variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variety {
    Free,
    Ls,
    Rs,
    S,
    P,
}

impl Variety {
    pub const ALL: [Variety; 5] = [Variety::Free, Variety::Ls, Variety::Rs, Variety::S, Variety::P];

    pub fn name(self) -> &'static str {
        match self {
            Variety::Free => "free",
            Variety::Ls => "ls",
            Variety::Rs => "rs",
            Variety::S => "s",
            Variety::P => "p",
        }
    }

    pub fn is_left_strong(self) -> bool {
        matches!(self, Variety::Ls | Variety::S | Variety::P)
    }

    pub fn is_right_strong(self) -> bool {
        matches!(self, Variety::Rs | Variety::S | Variety::P)
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variety {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "free" => Ok(Variety::Free),
            "ls" => Ok(Variety::Ls),
            "rs" => Ok(Variety::Rs),
            "s" => Ok(Variety::S),
            "p" => Ok(Variety::P),
            other => Err(crate::Error::Syntax {
                position: 0,
                message: alloc::format!("unknown variety `{other}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_image_examples() {
        let x = BiTerm::Gen(Letter(0));
        let y = BiTerm::Gen(Letter(1));
        let t = BiTerm::star(BiTerm::mul(x.clone(), BiTerm::max(y.clone())));
        assert!(t.sigma_image().is_empty());
        let t = BiTerm::mul(BiTerm::max(x.clone()), BiTerm::star(y.clone()));
        assert_eq!(t.sigma_image(), [Letter(0)]);
        let t = BiTerm::mul(BiTerm::plus(x.clone()), BiTerm::mul(x, y));
        assert_eq!(t.sigma_image(), [Letter(0), Letter(1)]);
    }

    #[test]
    fn bar_of_empty_is_one() {
        assert_eq!(BiTerm::bar(&[]), BiTerm::One);
        assert_eq!(BiTerm::bar(&[Letter(0)]), BiTerm::max(BiTerm::Gen(Letter(0))));
    }
}
