//! Coordinates `E(ℐ) ⋊ X*` for the free F-birestriction monoids.
//!
//! An element is a pair `(e, u)` where `e` is a closed automaton with a single
//! root (an idempotent of the universal inverse monoid) and `u` is a positive
//! word with `e ≤ ū⁺`. The operations are
//!
//! ```text
//! (e,u)(f,v) = (e(ūf)⁺, uv)     (e,u)* = ((eū)*, 1)
//! (e,u)⁺     = (e, 1)           m(e,u) = (ū⁺, u)
//! ```

use alloc::vec::Vec;

use crate::automaton::{glue, linear_graph, InverseAutomaton};
use crate::error::Result;
use crate::stephen::{close, plus_inv, prepare_word, star_inv, ClosureBudget};
use crate::term::{BiTerm, Variety};
use crate::word::{Label, Letter, SignedLetter, SignedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Context {
    pub variety: Variety,
    pub budget: ClosureBudget,
}

impl Context {
    pub fn new(variety: Variety) -> Self {
        Context { variety, budget: ClosureBudget::default() }
    }
}

#[derive(Clone, Debug)]
pub struct FfbrElement {
    /// Closed automaton with `start = end`.
    pub graph: InverseAutomaton,
    pub u: Vec<Letter>,
}

impl FfbrElement {
    pub fn identity() -> Self {
        FfbrElement { graph: InverseAutomaton::trivial(), u: Vec::new() }
    }

    /// `e ≤ ū⁺`: the barred spelling of `u` can be read from the root.
    pub fn is_valid(&self, variety: Variety) -> bool {
        self.graph.start() == self.graph.end()
            && self.graph.read(self.graph.start(), &bar_word(&self.u, variety)).is_some()
    }
}

impl PartialEq for FfbrElement {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.graph.iso_check(&other.graph)
    }
}

/// `ū` in the generators the variety's engine runs over: the single letter
/// `ū` for free/ls/rs/s, the product `x̄₁⋯x̄ₙ` for the perfect variety.
pub fn bar_word(u: &[Letter], variety: Variety) -> SignedWord {
    match variety {
        Variety::P => SignedWord(
            u.iter().map(|&x| SignedLetter::pos(Label::barred(core::slice::from_ref(&x)).expect("nonempty"))).collect(),
        ),
        _ => SignedWord::bar(u),
    }
}

fn closed_word(w: &SignedWord, ctx: &Context) -> Result<InverseAutomaton> {
    Ok(close(&linear_graph(&prepare_word(w, ctx.variety)), ctx.variety, ctx.budget)?.0)
}

fn generator(x: Letter, ctx: &Context) -> Result<FfbrElement> {
    let g = closed_word(&SignedWord::plain(&[x]), ctx)?;
    Ok(FfbrElement { graph: plus_inv(&g), u: alloc::vec![x] })
}

/// `m(e,u) = (ū⁺, u)`.
pub fn maximum(u: &[Letter], ctx: &Context) -> Result<FfbrElement> {
    if u.is_empty() {
        return Ok(FfbrElement::identity());
    }
    let g = closed_word(&bar_word(u, ctx.variety), ctx)?;
    Ok(FfbrElement { graph: plus_inv(&g), u: u.to_vec() })
}

pub fn mul(a: &FfbrElement, b: &FfbrElement, ctx: &Context) -> Result<FfbrElement> {
    // ū f, then its plus
    let bar_u = linear_graph(&prepare_word(&bar_word(&a.u, ctx.variety), ctx.variety));
    let uf = close(&glue(&bar_u, &b.graph), ctx.variety, ctx.budget)?.0;
    let graph = close(&glue(&a.graph, &plus_inv(&uf)), ctx.variety, ctx.budget)?.0;
    let mut u = a.u.clone();
    u.extend_from_slice(&b.u);
    Ok(FfbrElement { graph, u })
}

pub fn star(a: &FfbrElement, ctx: &Context) -> Result<FfbrElement> {
    let bar_u = linear_graph(&prepare_word(&bar_word(&a.u, ctx.variety), ctx.variety));
    let eu = close(&glue(&a.graph, &bar_u), ctx.variety, ctx.budget)?.0;
    Ok(FfbrElement { graph: star_inv(&eu), u: Vec::new() })
}

pub fn plus(a: &FfbrElement) -> FfbrElement {
    FfbrElement { graph: a.graph.clone(), u: Vec::new() }
}

pub fn eval(t: &BiTerm, ctx: &Context) -> Result<FfbrElement> {
    match t {
        BiTerm::One => Ok(FfbrElement::identity()),
        BiTerm::Gen(x) => generator(*x, ctx),
        BiTerm::Mul(a, b) => mul(&eval(a, ctx)?, &eval(b, ctx)?, ctx),
        BiTerm::Star(a) => star(&eval(a, ctx)?, ctx),
        BiTerm::Plus(a) => Ok(plus(&eval(a, ctx)?)),
        // the maximum depends only on the σ-image
        BiTerm::Max(a) => maximum(&a.sigma_image(), ctx),
    }
}

pub fn decide_equal(t1: &BiTerm, t2: &BiTerm, ctx: &Context) -> Result<bool> {
    if t1.sigma_image() != t2.sigma_image() {
        return Ok(false);
    }
    Ok(eval(t1, ctx)? == eval(t2, ctx)?)
}

/// Natural partial order on coordinates: same `u` and `e₁ ≤ e₂`.
pub fn element_leq(a: &FfbrElement, b: &FfbrElement) -> bool {
    a.u == b.u && a.graph.rooted_morphism(&b.graph).is_some()
}

pub fn leq(t1: &BiTerm, t2: &BiTerm, ctx: &Context) -> Result<bool> {
    if t1.sigma_image() != t2.sigma_image() {
        return Ok(false);
    }
    Ok(element_leq(&eval(t1, ctx)?, &eval(t2, ctx)?))
}

pub fn sigma_related(t1: &BiTerm, t2: &BiTerm) -> bool {
    t1.sigma_image() == t2.sigma_image()
}

pub fn max_element(t: &BiTerm, ctx: &Context) -> Result<FfbrElement> {
    maximum(&t.sigma_image(), ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use crate::word::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::parse("x,y").unwrap()
    }

    fn t(s: &str) -> BiTerm {
        parse_term(s, &ab()).unwrap()
    }

    fn eq(a: &str, b: &str, v: Variety) -> bool {
        decide_equal(&t(a), &t(b), &Context::new(v)).unwrap()
    }

    #[test]
    fn generator_coordinates() {
        let e = eval(&t("x"), &Context::new(Variety::Free)).unwrap();
        assert_eq!((e.graph.vertex_count(), e.graph.edge_count()), (2, 2));
        assert_eq!(e.graph.start(), e.graph.end());
        assert_eq!(e.u, [Letter(0)]);
        assert!(e.is_valid(Variety::Free));
    }

    #[test]
    fn max_of_a_word_is_a_single_bar() {
        let e = eval(&t("M(x y)"), &Context::new(Variety::Free)).unwrap();
        assert_eq!((e.graph.vertex_count(), e.graph.edge_count()), (2, 1));
        assert_eq!(e.u, [Letter(0), Letter(1)]);
        let one = eval(&t("M(x^*)"), &Context::new(Variety::Free)).unwrap();
        assert_eq!(one, FfbrElement::identity());
    }

    #[test]
    fn perfect_identity_separates_varieties() {
        assert!(eq("M(x) M(y)", "M(x y)", Variety::P));
        assert!(!eq("M(x) M(y)", "M(x y)", Variety::Free));
        assert!(eq("M(x) x^*", "x", Variety::Free));
        assert!(eq("M(x) M(y)", "M(x)^+ M(x y)", Variety::Ls));
        assert!(!eq("M(x) M(y)", "M(x)^+ M(x y)", Variety::Free));
        assert!(eq("M(x) M(y)", "M(x y) M(y)^*", Variety::Rs));
        assert!(!eq("M(x) M(y)", "M(x y) M(y)^*", Variety::Ls));
    }

    #[test]
    fn order_and_sigma() {
        let ctx = Context::new(Variety::Free);
        assert!(leq(&t("x"), &t("M(x)"), &ctx).unwrap());
        assert!(!leq(&t("M(x)"), &t("x"), &ctx).unwrap());
        assert!(leq(&t("M(x)"), &t("M(x)"), &ctx).unwrap());
        assert!(sigma_related(&t("x^*"), &t("y^+")));
        assert!(!sigma_related(&t("x"), &t("y")));
        let m = max_element(&t("x y^* (x^+ y)"), &ctx).unwrap();
        assert_eq!(m.u, [Letter(0), Letter(1)]);
    }
}
