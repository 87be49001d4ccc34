//! Munn trees for the free inverse monoid `FI(X)` and the coordinates
//! `E(FI(X)) ⋊ X*` of the free birestriction monoid.
//!
//! A tree is stored as its vertex set, a prefix-closed set of reduced words;
//! edges are implied by the Cayley tree of `FG(X)`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::term::BiTerm;
use crate::word::{Alphabet, GroupLetter, GroupWord, Label, Letter, SignedWord};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MunnTree {
    vertices: BTreeSet<GroupWord>,
    endpoint: GroupWord,
}

fn is_subtree(vertices: &BTreeSet<GroupWord>) -> bool {
    vertices.contains(&GroupWord::identity())
        && vertices.iter().all(|v| v.parent().map_or(true, |p| vertices.contains(&p)))
}

fn translate(by: &GroupWord, vertices: &BTreeSet<GroupWord>) -> BTreeSet<GroupWord> {
    vertices.iter().map(|v| by.mul(v)).collect()
}

impl MunnTree {
    pub fn identity() -> Self {
        MunnTree { vertices: BTreeSet::from([GroupWord::identity()]), endpoint: GroupWord::identity() }
    }

    /// Checks the subtree and endpoint invariants.
    pub fn new(vertices: BTreeSet<GroupWord>, endpoint: GroupWord) -> Option<Self> {
        (is_subtree(&vertices) && vertices.contains(&endpoint)).then_some(MunnTree { vertices, endpoint })
    }

    pub fn vertices(&self) -> &BTreeSet<GroupWord> {
        &self.vertices
    }

    pub fn endpoint(&self) -> &GroupWord {
        &self.endpoint
    }

    pub fn is_idempotent(&self) -> bool {
        self.endpoint.is_identity()
    }

    /// Product `(A, g)(B, h) = (A ∪ gB, gh)`.
    pub fn mul(&self, other: &MunnTree) -> MunnTree {
        let mut vertices = self.vertices.clone();
        vertices.extend(translate(&self.endpoint, &other.vertices));
        debug_assert!(is_subtree(&vertices), "union of subtrees sharing a vertex is a subtree");
        MunnTree { vertices, endpoint: self.endpoint.mul(&other.endpoint) }
    }

    pub fn inverse(&self) -> MunnTree {
        let back = self.endpoint.inverse();
        MunnTree { vertices: translate(&back, &self.vertices), endpoint: back }
    }

    /// `s⁺ = ss⁻¹`.
    pub fn plus(&self) -> MunnTree {
        MunnTree { vertices: self.vertices.clone(), endpoint: GroupWord::identity() }
    }

    /// `s* = s⁻¹s`.
    pub fn star(&self) -> MunnTree {
        let back = self.endpoint.inverse();
        MunnTree { vertices: translate(&back, &self.vertices), endpoint: GroupWord::identity() }
    }

    /// Sorted vertices then the endpoint, one per line.
    pub fn serialize(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "{}", alphabet.show(v));
        }
        let _ = writeln!(s, "end {}", alphabet.show(&self.endpoint));
        s
    }

    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut s = String::from("digraph munn {\n  node [shape=circle];\n");
        let ids: Vec<&GroupWord> = self.vertices.iter().collect();
        let id = |w: &GroupWord| ids.iter().position(|v| *v == w).expect("vertex present");
        for (i, v) in ids.iter().enumerate() {
            let shape = if **v == self.endpoint { ", shape=doublecircle" } else { "" };
            let _ = writeln!(s, "  v{i} [label=\"{}\"{shape}];", alphabet.show(*v));
        }
        for v in &ids {
            let (Some(p), Some(g)) = (v.parent(), v.last()) else { continue };
            // the edge between p and v is labeled by a positive letter in one direction
            let (from, to) = if g.inverse { (id(v), id(&p)) } else { (id(&p), id(v)) };
            let _ = writeln!(s, "  v{from} -> v{to} [label=\"{}\", style=solid];", alphabet.name(g.letter));
        }
        s.push_str("}\n");
        s
    }
}

/// Munn tree of a word over `X ∪ X⁻¹`: all prefix values, endpoint the full value.
pub fn munn_of_word(w: &SignedWord) -> Result<MunnTree> {
    let mut vertices = BTreeSet::from([GroupWord::identity()]);
    let mut at = GroupWord::identity();
    for l in w.letters() {
        let Label::Plain(letter) = l.label else {
            return Err(Error::BarredLetter);
        };
        at = at.times_letter(GroupLetter { letter, inverse: l.inverse });
        vertices.insert(at.clone());
    }
    Ok(MunnTree { vertices, endpoint: at })
}

/// `(e, u)` with `e` an idempotent of `FI(X)` (its tree) and `u ∈ X*`, `u ∈ e`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FbrElement {
    pub tree: BTreeSet<GroupWord>,
    pub u: Vec<Letter>,
}

impl FbrElement {
    pub fn identity() -> Self {
        FbrElement { tree: BTreeSet::from([GroupWord::identity()]), u: Vec::new() }
    }

    /// `(u⁺, u)`.
    pub fn positive(u: &[Letter]) -> Self {
        let g = GroupWord::from_positive(u);
        FbrElement { tree: g.prefixes().collect(), u: u.to_vec() }
    }

    fn group_u(&self) -> GroupWord {
        GroupWord::from_positive(&self.u)
    }

    /// The tree with `u` as its endpoint.
    pub fn munn_tree(&self) -> MunnTree {
        MunnTree { vertices: self.tree.clone(), endpoint: self.group_u() }
    }

    /// `(e,u)(f,v) = (e(uf)⁺, uv)`.
    pub fn mul(&self, other: &FbrElement) -> FbrElement {
        let mut tree = self.tree.clone();
        tree.extend(translate(&self.group_u(), &other.tree));
        let mut u = self.u.clone();
        u.extend_from_slice(&other.u);
        FbrElement { tree, u }
    }

    /// `(e,u)* = ((eu)*, 1)`.
    pub fn star(&self) -> FbrElement {
        FbrElement { tree: translate(&self.group_u().inverse(), &self.tree), u: Vec::new() }
    }

    /// `(e,u)⁺ = (e, 1)`.
    pub fn plus(&self) -> FbrElement {
        FbrElement { tree: self.tree.clone(), u: Vec::new() }
    }

    pub fn is_valid(&self) -> bool {
        is_subtree(&self.tree) && self.tree.contains(&self.group_u())
    }
}

/// Evaluates a term in `E(FI(X)) ⋊ X*`; `m(t)` is `(σ(t)⁺, σ(t))`.
pub fn fbr_eval(t: &BiTerm) -> FbrElement {
    match t {
        BiTerm::One => FbrElement::identity(),
        BiTerm::Gen(x) => FbrElement::positive(core::slice::from_ref(x)),
        BiTerm::Mul(a, b) => fbr_eval(a).mul(&fbr_eval(b)),
        BiTerm::Star(a) => fbr_eval(a).star(),
        BiTerm::Plus(a) => fbr_eval(a).plus(),
        BiTerm::Max(a) => FbrElement::positive(&a.sigma_image()),
    }
}

pub fn fbr_equal(t1: &BiTerm, t2: &BiTerm) -> bool {
    fbr_eval(t1) == fbr_eval(t2)
}

/// Term for a letter of the extended alphabet: `x` or `ū = m(u)`.
fn letter_term(label: &Label) -> BiTerm {
    match label {
        Label::Plain(x) => BiTerm::Gen(*x),
        Label::Barred(u) => BiTerm::bar(u.word()),
    }
}

/// Projection term `D_w`, built right to left:
/// `D_1 = 1`, `D_{w a} = (D_w a)*`, `D_{w a⁻¹} = (a D_w)⁺`.
pub fn d_term(w: &SignedWord) -> BiTerm {
    w.letters().iter().fold(BiTerm::One, |acc, l| {
        let a = letter_term(&l.label);
        if l.inverse {
            BiTerm::plus(BiTerm::mul(a, acc))
        } else {
            BiTerm::star(BiTerm::mul(acc, a))
        }
    })
}

/// The canonical morphism into `FI(X)` on terms without `m(·)`.
pub fn psi_fi(t: &BiTerm) -> Result<MunnTree> {
    Ok(match t {
        BiTerm::One => MunnTree::identity(),
        BiTerm::Gen(x) => munn_of_word(&SignedWord::plain(core::slice::from_ref(x)))?,
        BiTerm::Mul(a, b) => psi_fi(a)?.mul(&psi_fi(b)?),
        BiTerm::Star(a) => psi_fi(a)?.star(),
        BiTerm::Plus(a) => psi_fi(a)?.plus(),
        BiTerm::Max(_) => return Err(Error::MaxNode),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_term, parse_word};

    fn ab() -> Alphabet {
        Alphabet::parse("x,y").unwrap()
    }

    fn gw(a: &Alphabet, s: &str) -> GroupWord {
        parse_word(s, a).unwrap().group_value()
    }

    fn tree(a: &Alphabet, vs: &[&str]) -> BTreeSet<GroupWord> {
        vs.iter().map(|s| gw(a, s)).collect()
    }

    #[test]
    fn munn_of_word_examples() {
        let a = ab();
        assert_eq!(munn_of_word(&SignedWord::empty()).unwrap(), MunnTree::identity());
        let m = munn_of_word(&parse_word("x x'", &a).unwrap()).unwrap();
        assert_eq!(m.vertices(), &tree(&a, &["1", "x"]));
        assert!(m.endpoint().is_identity());
        let m = munn_of_word(&parse_word("x y", &a).unwrap()).unwrap();
        assert_eq!(m.vertices(), &tree(&a, &["1", "x", "x y"]));
        assert_eq!(m.endpoint(), &gw(&a, "x y"));
        assert_eq!(munn_of_word(&parse_word("[x]", &a).unwrap()), Err(Error::BarredLetter));
    }

    #[test]
    fn fi_operations() {
        let a = ab();
        let mx = munn_of_word(&parse_word("x", &a).unwrap()).unwrap();
        let mxi = munn_of_word(&parse_word("x'", &a).unwrap()).unwrap();
        let my = munn_of_word(&parse_word("y", &a).unwrap()).unwrap();
        assert_eq!(mx.plus(), munn_of_word(&parse_word("x x'", &a).unwrap()).unwrap());
        // τ(x)τ(x⁻¹) = (x⁺, 1), which is not the identity
        let prod = mx.mul(&mxi);
        assert_eq!(prod, mx.plus());
        assert_ne!(prod, MunnTree::identity());
        assert_eq!(mx.mul(&my), munn_of_word(&parse_word("x y", &a).unwrap()).unwrap());
        assert_eq!(mx.star(), munn_of_word(&parse_word("x' x", &a).unwrap()).unwrap());
        assert_eq!(mx.inverse(), mxi);
    }

    #[test]
    fn fbr_eval_examples() {
        let a = ab();
        let e = fbr_eval(&parse_term("x", &a).unwrap());
        assert_eq!(e.tree, tree(&a, &["1", "x"]));
        assert_eq!(e.u, [Letter(0)]);
        assert!(fbr_equal(&parse_term("M(x) x^*", &a).unwrap(), &parse_term("x", &a).unwrap()));
        let lhs = fbr_eval(&parse_term("M(x y) M(y x)", &a).unwrap());
        assert_eq!(lhs, FbrElement::positive(&[Letter(0), Letter(1), Letter(1), Letter(0)]));
        assert!(fbr_equal(&parse_term("x^+ x", &a).unwrap(), &parse_term("x", &a).unwrap()));
        assert!(!fbr_equal(&parse_term("x^*", &a).unwrap(), &parse_term("x^+", &a).unwrap()));
    }

    #[test]
    fn d_term_examples() {
        assert_eq!(d_term(&SignedWord::empty()), BiTerm::One);
        let a = ab();
        assert_eq!(d_term(&parse_word("x", &a).unwrap()), BiTerm::star(BiTerm::mul(BiTerm::One, BiTerm::Gen(Letter(0)))));
        let six = Alphabet::parse("a,b,c,d,e,f").unwrap();
        let w = parse_word("a c' b' d e f", &six).unwrap();
        let expected = parse_term("((b c a^*)^+ d e f)^*", &six).unwrap();
        assert!(fbr_equal(&d_term(&w), &expected));
        assert!(!d_term(&w).contains_max());
    }

    #[test]
    fn psi_of_d_is_the_idempotent() {
        let a = ab();
        for s in ["x x'", "x y y' x'", "x' y x y' x"] {
            let w = parse_word(s, &a).unwrap();
            let image = psi_fi(&d_term(&w)).unwrap();
            let expected = munn_of_word(&w.involutive_inverse().concat(&w)).unwrap();
            assert_eq!(image, expected, "{s}");
        }
        assert_eq!(psi_fi(&parse_term("M(x)", &a).unwrap()), Err(Error::MaxNode));
    }

    #[test]
    fn serialization_lists_sorted_vertices() {
        let a = ab();
        let m = munn_of_word(&parse_word("x y'", &a).unwrap()).unwrap();
        assert_eq!(m.serialize(&a), "1\nx\nxy'\nend xy'\n");
        assert!(m.to_dot(&a).contains("style=solid"));
    }
}
