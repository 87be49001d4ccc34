//! Geometric model of the free perfect F-birestriction monoid.
//!
//! An element is a finite connected subgraph `Γ` of the Cayley graph of the
//! free group `FG(X)`, each edge carrying a nonempty subset of
//! `{plain, barred}` and closed under adding the barred twin of every plain
//! edge, together with a positive word `u` whose barred path from the origin
//! lies in `Γ`. Vertices are reduced words, so equality is plain set equality.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::coords::{self, Context};
use crate::error::{Error, Result};
use crate::term::{BiTerm, Variety};
use crate::word::{Alphabet, GroupLetter, GroupWord, Letter};

pub const PLAIN: u8 = 1;
pub const BARRED: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwinGraph {
    vertices: BTreeSet<GroupWord>,
    /// Edge `g --x--> gx` keyed by `(g, x)`.
    edges: BTreeMap<(GroupWord, Letter), u8>,
}

impl Default for TwinGraph {
    fn default() -> Self {
        Self::origin()
    }
}

impl TwinGraph {
    /// The one-vertex graph `{ε}`.
    pub fn origin() -> Self {
        TwinGraph { vertices: BTreeSet::from([GroupWord::identity()]), edges: BTreeMap::new() }
    }

    /// The path spelling `u` from the origin with `flags` on every edge.
    pub fn path(u: &[Letter], flags: u8) -> Self {
        let mut g = Self::origin();
        let mut at = GroupWord::identity();
        for &x in u {
            let next = at.times_letter(GroupLetter { letter: x, inverse: false });
            g.add_edge(at, x, flags);
            g.vertices.insert(next.clone());
            at = next;
        }
        g
    }

    fn add_edge(&mut self, from: GroupWord, x: Letter, flags: u8) {
        *self.edges.entry((from, x)).or_insert(0) |= flags;
    }

    pub fn vertices(&self) -> &BTreeSet<GroupWord> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&GroupWord, Letter, u8)> + '_ {
        self.edges.iter().map(|((g, x), f)| (g, *x, *f))
    }

    pub fn edge_flags(&self, from: &GroupWord, x: Letter) -> u8 {
        self.edges.get(&(from.clone(), x)).copied().unwrap_or(0)
    }

    /// Left translation `gΓ`.
    pub fn translate(&self, by: &GroupWord) -> TwinGraph {
        TwinGraph {
            vertices: self.vertices.iter().map(|v| by.mul(v)).collect(),
            edges: self.edges.iter().map(|((s, x), f)| ((by.mul(s), *x), *f)).collect(),
        }
    }

    pub fn union(&self, other: &TwinGraph) -> TwinGraph {
        let mut out = self.clone();
        out.vertices.extend(other.vertices.iter().cloned());
        for ((s, x), f) in &other.edges {
            out.add_edge(s.clone(), *x, *f);
        }
        out
    }

    /// `Γ₁ ⊇ Γ₂` as labelled graphs.
    pub fn contains(&self, other: &TwinGraph) -> bool {
        other.vertices.is_subset(&self.vertices)
            && other.edges.iter().all(|((s, x), f)| self.edge_flags(s, *x) & f == *f)
    }

    /// Twin closure, endpoint membership, connectivity through labelled edges.
    pub fn is_valid(&self) -> bool {
        let twin_closed = self.edges.iter().all(|(_, f)| *f != 0 && (f & PLAIN == 0 || f & BARRED != 0));
        let endpoints = self.edges.keys().all(|(s, x)| {
            self.vertices.contains(s) && self.vertices.contains(&s.times_letter(GroupLetter { letter: *x, inverse: false }))
        });
        if !(twin_closed && endpoints && self.vertices.contains(&GroupWord::identity())) {
            return false;
        }
        // every vertex other than ε reaches its parent through a labelled edge
        self.vertices.iter().all(|v| match (v.parent(), v.last()) {
            (None, _) => true,
            (Some(p), Some(l)) => {
                let key = if l.inverse { (v.clone(), l.letter) } else { (p.clone(), l.letter) };
                self.vertices.contains(&p) && self.edges.contains_key(&key)
            }
            _ => false,
        })
    }

    /// Sorted `source label target` triples, `P:` for plain and `B:` for barred.
    pub fn serialize(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "vertex {}", alphabet.show(v));
        }
        for ((s, x), f) in &self.edges {
            let t = s.times_letter(GroupLetter { letter: *x, inverse: false });
            for (bit, tag) in [(PLAIN, "P"), (BARRED, "B")] {
                if f & bit != 0 {
                    let _ = writeln!(out, "{} {}:{} {}", alphabet.show(s), tag, alphabet.name(*x), alphabet.show(&t));
                }
            }
        }
        out
    }

    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut out = String::from("digraph twin {\n  rankdir=LR;\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", alphabet.show(v));
        }
        for ((s, x), f) in &self.edges {
            let t = s.times_letter(GroupLetter { letter: *x, inverse: false });
            let (s, t, name) = (alphabet.show(s), alphabet.show(&t), alphabet.name(*x));
            if f & PLAIN != 0 {
                let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{name}\"];");
            }
            if f & BARRED != 0 {
                let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"[{name}]\", style=dashed];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyPerfectElement {
    pub gamma: TwinGraph,
    pub u: Vec<Letter>,
}

impl CayleyPerfectElement {
    pub fn identity() -> Self {
        CayleyPerfectElement { gamma: TwinGraph::origin(), u: Vec::new() }
    }

    pub fn generator(x: Letter) -> Self {
        CayleyPerfectElement { gamma: TwinGraph::path(&[x], PLAIN | BARRED), u: alloc::vec![x] }
    }

    pub fn maximum(u: &[Letter]) -> Self {
        CayleyPerfectElement { gamma: TwinGraph::path(u, BARRED), u: u.to_vec() }
    }

    /// `(Γ₁, u)(Γ₂, v) = (Γ₁ ∪ uΓ₂, uv)`.
    pub fn mul(&self, other: &Self) -> Self {
        let shifted = other.gamma.translate(&GroupWord::from_positive(&self.u));
        let mut u = self.u.clone();
        u.extend_from_slice(&other.u);
        CayleyPerfectElement { gamma: self.gamma.union(&shifted), u }
    }

    /// `(Γ, u)* = (u⁻¹Γ, ε)`.
    pub fn star(&self) -> Self {
        let back = GroupWord::from_positive(&self.u).inverse();
        CayleyPerfectElement { gamma: self.gamma.translate(&back), u: Vec::new() }
    }

    pub fn plus(&self) -> Self {
        CayleyPerfectElement { gamma: self.gamma.clone(), u: Vec::new() }
    }

    /// The barred path of `u` lies in `Γ` and the graph invariants hold.
    pub fn is_valid(&self) -> bool {
        self.gamma.is_valid() && self.gamma.contains(&TwinGraph::path(&self.u, BARRED))
    }

    /// Natural order: same `u` and reversed containment.
    pub fn leq(&self, other: &Self) -> bool {
        self.u == other.u && self.gamma.contains(&other.gamma)
    }
}

pub fn eval_p(t: &BiTerm) -> CayleyPerfectElement {
    let out = match t {
        BiTerm::One => CayleyPerfectElement::identity(),
        BiTerm::Gen(x) => CayleyPerfectElement::generator(*x),
        BiTerm::Mul(a, b) => eval_p(a).mul(&eval_p(b)),
        BiTerm::Star(a) => eval_p(a).star(),
        BiTerm::Plus(a) => eval_p(a).plus(),
        BiTerm::Max(a) => CayleyPerfectElement::maximum(&a.sigma_image()),
    };
    debug_assert!(out.is_valid(), "twin graph invariants preserved");
    out
}

pub fn decide_equal_p(t1: &BiTerm, t2: &BiTerm) -> bool {
    eval_p(t1) == eval_p(t2)
}

pub fn leq_p(t1: &BiTerm, t2: &BiTerm) -> bool {
    eval_p(t1).leq(&eval_p(t2))
}

/// Decides `t1 = t2` in both perfect models and fails if they disagree.
pub fn crosscheck(t1: &BiTerm, t2: &BiTerm, ctx: &Context, alphabet: &Alphabet) -> Result<bool> {
    let ctx = Context { variety: Variety::P, ..*ctx };
    let cayley = decide_equal_p(t1, t2);
    let automata = coords::decide_equal(t1, t2, &ctx)?;
    if cayley != automata {
        return Err(Error::Discrepancy {
            left: alloc::format!("{}", alphabet.show(t1)),
            right: alloc::format!("{}", alphabet.show(t2)),
            cayley,
            automata,
        });
    }
    Ok(cayley)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    fn ab() -> Alphabet {
        Alphabet::parse("x,y").unwrap()
    }

    fn t(s: &str) -> BiTerm {
        parse_term(s, &ab()).unwrap()
    }

    #[test]
    fn generator_and_max() {
        let a = ab();
        let g = eval_p(&t("x"));
        assert_eq!(g.u, [Letter(0)]);
        assert_eq!(g.gamma.serialize(&a), "vertex 1\nvertex x\n1 P:x x\n1 B:x x\n");
        let m = eval_p(&t("M(x)"));
        assert_eq!(m.gamma.serialize(&a), "vertex 1\nvertex x\n1 B:x x\n");
        let p = eval_p(&t("x^+"));
        assert_eq!((p.gamma, p.u.len()), (g.gamma, 0));
    }

    #[test]
    fn word_problem_examples() {
        assert!(decide_equal_p(&t("M(x) M(y)"), &t("M(x y)")));
        assert!(!decide_equal_p(&t("x"), &t("M(x)")));
        assert!(decide_equal_p(&t("M(x) x^*"), &t("x")));
        assert!(leq_p(&t("x"), &t("M(x)")));
        assert!(!leq_p(&t("M(x)"), &t("x")));
    }

    #[test]
    fn star_translates_back_to_origin() {
        let s = eval_p(&t("(x y)^*"));
        assert!(s.u.is_empty());
        assert!(s.is_valid());
        let verts: Vec<String> = s.gamma.vertices().iter().map(|v| alloc::format!("{}", ab().show(v))).collect();
        assert_eq!(verts, ["1", "y'", "y'x'"]);
    }

    #[test]
    fn crosscheck_agrees_on_examples() {
        let ctx = Context::new(Variety::P);
        let a = ab();
        for (l, r) in [("M(x) M(y)", "M(x y)"), ("x", "M(x)"), ("x y^* x^+", "x y^* x^+"), ("(x y)^+ M(y)", "x^+ M(y)")] {
            crosscheck(&t(l), &t(r), &ctx, &a).unwrap();
        }
    }

    #[test]
    fn dot_uses_dashed_bars() {
        let d = eval_p(&t("x")).gamma.to_dot(&ab());
        assert!(d.contains("style=dashed"));
        assert!(d.contains("[label=\"x\"]"));
    }
}
