//! Bounded derivation search over the defining identities.
//!
//! The oracle knows nothing about automata. Terms are rewritten with
//! instances of the birestriction axioms, the F-identities and the variety's
//! extra identity, working modulo associativity and the unit (products are
//! kept flat and `1` factors are dropped). A bidirectional breadth-first
//! search reports [`Verdict::Equal`] when the two sides meet within the depth
//! bound; it never claims inequality.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::coords::Context;
use crate::term::{BiTerm, Variety};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Intermediate terms may exceed the larger input by this many nodes.
    pub size_slack: usize,
    /// Cap on the number of terms visited from each side.
    pub max_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { size_slack: 4, max_states: 20_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Node {
    One,
    Gen(Letter),
    /// At least two factors, none of them `One` or `Prod`.
    Prod(Vec<Node>),
    Star(Box<Node>),
    Plus(Box<Node>),
    Max(Box<Node>),
}

fn factors(n: &Node) -> &[Node] {
    match n {
        Node::One => &[],
        Node::Prod(fs) => fs,
        other => core::slice::from_ref(other),
    }
}

fn product(parts: impl IntoIterator<Item = Node>) -> Node {
    let mut fs = Vec::new();
    for p in parts {
        match p {
            Node::One => {}
            Node::Prod(inner) => fs.extend(inner),
            other => fs.push(other),
        }
    }
    match fs.len() {
        0 => Node::One,
        1 => fs.pop().expect("one factor"),
        _ => Node::Prod(fs),
    }
}

impl Node {
    fn from_term(t: &BiTerm) -> Node {
        match t {
            BiTerm::One => Node::One,
            BiTerm::Gen(x) => Node::Gen(*x),
            BiTerm::Mul(a, b) => product([Node::from_term(a), Node::from_term(b)]),
            BiTerm::Star(a) => Node::Star(Box::new(Node::from_term(a))),
            BiTerm::Plus(a) => Node::Plus(Box::new(Node::from_term(a))),
            BiTerm::Max(a) => Node::Max(Box::new(Node::from_term(a))),
        }
    }

    fn to_term(&self) -> BiTerm {
        match self {
            Node::One => BiTerm::One,
            Node::Gen(x) => BiTerm::Gen(*x),
            Node::Prod(fs) => BiTerm::product(fs.iter().map(Node::to_term)),
            Node::Star(a) => BiTerm::star(a.to_term()),
            Node::Plus(a) => BiTerm::plus(a.to_term()),
            Node::Max(a) => BiTerm::max(a.to_term()),
        }
    }

    fn size(&self) -> usize {
        match self {
            Node::One | Node::Gen(_) => 1,
            Node::Prod(fs) => fs.len() - 1 + fs.iter().map(Node::size).sum::<usize>(),
            Node::Star(a) | Node::Plus(a) | Node::Max(a) => 1 + a.size(),
        }
    }
}

#[derive(Clone, Debug)]
enum Pat {
    Var(usize),
    One,
    Prod(Vec<Pat>),
    Star(Box<Pat>),
    Plus(Box<Pat>),
    Max(Box<Pat>),
}

impl Pat {
    fn vars(&self, out: &mut BTreeSet<usize>) {
        match self {
            Pat::Var(i) => {
                out.insert(*i);
            }
            Pat::One => {}
            Pat::Prod(ps) => ps.iter().for_each(|p| p.vars(out)),
            Pat::Star(p) | Pat::Plus(p) | Pat::Max(p) => p.vars(out),
        }
    }
}

type Binding = [Option<Node>; 3];

fn match_node(p: &Pat, n: &Node, b: &Binding, out: &mut Vec<Binding>) {
    match (p, n) {
        (Pat::Var(i), _) => match &b[*i] {
            Some(v) if v == n => out.push(b.clone()),
            Some(_) => {}
            None => {
                let mut b = b.clone();
                b[*i] = Some(n.clone());
                out.push(b);
            }
        },
        (Pat::One, Node::One) => out.push(b.clone()),
        (Pat::Star(p), Node::Star(m)) | (Pat::Plus(p), Node::Plus(m)) | (Pat::Max(p), Node::Max(m)) => {
            match_node(p, m, b, out)
        }
        (Pat::Prod(ps), Node::Prod(ns)) => match_list(ps, ns, b, out),
        _ => {}
    }
}

/// Matches a pattern product against the whole factor list `ns`; variables
/// absorb nonempty runs of factors.
fn match_list(ps: &[Pat], ns: &[Node], b: &Binding, out: &mut Vec<Binding>) {
    let Some((p0, rest)) = ps.split_first() else {
        if ns.is_empty() {
            out.push(b.clone());
        }
        return;
    };
    if ns.len() < ps.len() {
        return;
    }
    match p0 {
        Pat::Var(i) => match &b[*i] {
            Some(v) => {
                let flat = factors(v);
                if !flat.is_empty() && ns.starts_with(flat) {
                    match_list(rest, &ns[flat.len()..], b, out);
                }
            }
            None => {
                for k in 1..=ns.len() - rest.len() {
                    let mut b2 = b.clone();
                    b2[*i] = Some(product(ns[..k].iter().cloned()));
                    match_list(rest, &ns[k..], &b2, out);
                }
            }
        },
        _ => {
            let mut heads = Vec::new();
            match_node(p0, &ns[0], b, &mut heads);
            for h in heads {
                match_list(rest, &ns[1..], &h, out);
            }
        }
    }
}

fn instantiate(p: &Pat, b: &Binding) -> Node {
    match p {
        Pat::Var(i) => b[*i].clone().expect("rule right side only uses bound variables"),
        Pat::One => Node::One,
        Pat::Prod(ps) => product(ps.iter().map(|q| instantiate(q, b))),
        Pat::Star(q) => Node::Star(Box::new(instantiate(q, b))),
        Pat::Plus(q) => Node::Plus(Box::new(instantiate(q, b))),
        Pat::Max(q) => Node::Max(Box::new(instantiate(q, b))),
    }
}

struct Rule {
    lhs: Pat,
    rhs: Pat,
}

fn identities(variety: Variety) -> Vec<(Pat, Pat)> {
    let x = || Pat::Var(0);
    let y = || Pat::Var(1);
    let p = |v: Vec<Pat>| Pat::Prod(v);
    let s = |a: Pat| Pat::Star(Box::new(a));
    let l = |a: Pat| Pat::Plus(Box::new(a));
    let m = |a: Pat| Pat::Max(Box::new(a));
    let mut ids = vec![
        (p(vec![x(), s(x())]), x()),
        (p(vec![s(x()), s(y())]), p(vec![s(y()), s(x())])),
        (s(p(vec![x(), s(y())])), p(vec![s(x()), s(y())])),
        (p(vec![s(x()), y()]), p(vec![y(), s(p(vec![x(), y()]))])),
        (p(vec![l(x()), x()]), x()),
        (p(vec![l(x()), l(y())]), p(vec![l(y()), l(x())])),
        (l(p(vec![l(x()), y()])), p(vec![l(x()), l(y())])),
        (p(vec![x(), l(y())]), p(vec![l(p(vec![x(), y()])), x()])),
        (s(l(x())), l(x())),
        (l(s(x())), s(x())),
        (s(s(x())), s(x())),
        (l(l(x())), l(x())),
        (p(vec![s(x()), s(x())]), s(x())),
        (p(vec![l(x()), l(x())]), l(x())),
        (s(Pat::One), Pat::One),
        (l(Pat::One), Pat::One),
        (p(vec![m(x()), s(x())]), x()),
        (p(vec![l(x()), m(x())]), x()),
        (m(p(vec![x(), s(y())])), m(x())),
        (m(p(vec![x(), l(y())])), m(x())),
        (m(p(vec![s(y()), x()])), m(x())),
        (m(p(vec![l(y()), x()])), m(x())),
        (m(Pat::One), Pat::One),
        (m(s(x())), Pat::One),
        (m(l(x())), Pat::One),
        (m(m(x())), m(x())),
    ];
    let mxy = || m(p(vec![x(), y()]));
    if variety.is_left_strong() {
        ids.push((p(vec![m(x()), m(y())]), p(vec![l(m(x())), mxy()])));
    }
    if variety.is_right_strong() {
        ids.push((p(vec![m(x()), m(y())]), p(vec![mxy(), s(m(y()))])));
    }
    if variety == Variety::P {
        ids.push((p(vec![m(x()), m(y())]), mxy()));
    }
    ids
}

fn rules(variety: Variety) -> Vec<Rule> {
    let mut out = Vec::new();
    for (l, r) in identities(variety) {
        for (lhs, rhs) in [(l.clone(), r.clone()), (r, l)] {
            if matches!(lhs, Pat::Var(_)) {
                continue;
            }
            let (mut lv, mut rv) = (BTreeSet::new(), BTreeSet::new());
            lhs.vars(&mut lv);
            rhs.vars(&mut rv);
            if rv.is_subset(&lv) {
                out.push(Rule { lhs, rhs });
            }
        }
    }
    out
}

/// All terms one rule application away from `n`.
fn rewrites(n: &Node, rules: &[Rule], out: &mut Vec<Node>) {
    let empty: Binding = [None, None, None];
    let mut bs = Vec::new();
    for rule in rules {
        match (&rule.lhs, n) {
            (Pat::Prod(ps), Node::Prod(ns)) => {
                for i in 0..ns.len() {
                    for j in i + ps.len()..=ns.len() {
                        bs.clear();
                        match_list(ps, &ns[i..j], &empty, &mut bs);
                        for b in &bs {
                            let r = instantiate(&rule.rhs, b);
                            out.push(product(
                                ns[..i].iter().cloned().chain(factors(&r).iter().cloned()).chain(ns[j..].iter().cloned()),
                            ));
                        }
                    }
                }
            }
            (lhs, _) => {
                bs.clear();
                match_node(lhs, n, &empty, &mut bs);
                out.extend(bs.iter().map(|b| instantiate(&rule.rhs, b)));
            }
        }
    }
    let mut inner = Vec::new();
    match n {
        Node::One | Node::Gen(_) => {}
        Node::Prod(fs) => {
            for (i, f) in fs.iter().enumerate() {
                inner.clear();
                rewrites(f, rules, &mut inner);
                for r in inner.drain(..) {
                    out.push(product(fs[..i].iter().cloned().chain([r]).chain(fs[i + 1..].iter().cloned())));
                }
            }
        }
        Node::Star(a) | Node::Plus(a) | Node::Max(a) => {
            rewrites(a, rules, &mut inner);
            let wrap = |r: Node| match n {
                Node::Star(_) => Node::Star(Box::new(r)),
                Node::Plus(_) => Node::Plus(Box::new(r)),
                _ => Node::Max(Box::new(r)),
            };
            out.extend(inner.drain(..).map(wrap));
        }
    }
}

/// Terms reachable from `t` by a single rule application, up to associativity.
pub fn neighbours(t: &BiTerm, variety: Variety) -> Vec<BiTerm> {
    let mut out = Vec::new();
    rewrites(&Node::from_term(t), &rules(variety), &mut out);
    let unique: BTreeSet<Node> = out.into_iter().collect();
    unique.iter().map(Node::to_term).collect()
}

/// Bounded bidirectional search for a derivation of length at most `depth`.
pub fn oracle_equal(t1: &BiTerm, t2: &BiTerm, ctx: &Context, depth: usize) -> Verdict {
    oracle_equal_with(t1, t2, ctx.variety, depth, Limits::default())
}

pub fn oracle_equal_with(t1: &BiTerm, t2: &BiTerm, variety: Variety, depth: usize, limits: Limits) -> Verdict {
    let (a, b) = (Node::from_term(t1), Node::from_term(t2));
    if a == b {
        return Verdict::Equal;
    }
    let rules = rules(variety);
    let cap = a.size().max(b.size()) + limits.size_slack;
    let mut seen = [BTreeSet::from([a.clone()]), BTreeSet::from([b.clone()])];
    let mut frontier = [vec![a], vec![b]];
    let mut buf = Vec::new();
    let mut levels = 0;
    while levels < depth {
        let side = match (frontier[0].is_empty(), frontier[1].is_empty()) {
            (true, true) => break,
            (true, false) => 1,
            (false, true) => 0,
            _ => usize::from(frontier[1].len() < frontier[0].len()),
        };
        let mut next = Vec::new();
        for n in core::mem::take(&mut frontier[side]) {
            buf.clear();
            rewrites(&n, &rules, &mut buf);
            for r in buf.drain(..) {
                if r.size() > cap || seen[side].contains(&r) {
                    continue;
                }
                if seen[1 - side].contains(&r) {
                    return Verdict::Equal;
                }
                if seen[side].len() < limits.max_states {
                    seen[side].insert(r.clone());
                    next.push(r);
                }
            }
        }
        // a side with no successors contributes nothing to any derivation
        if !next.is_empty() {
            levels += 1;
        }
        frontier[side] = next;
    }
    Verdict::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::decide_equal;
    use crate::parse::parse_term;
    use crate::word::Alphabet;

    fn t(s: &str) -> BiTerm {
        parse_term(s, &Alphabet::parse("x,y").unwrap()).unwrap()
    }

    fn oracle(a: &str, b: &str, v: Variety, depth: usize) -> Verdict {
        oracle_equal(&t(a), &t(b), &Context::new(v), depth)
    }

    #[test]
    fn reflexive_and_one_step() {
        assert_eq!(oracle("x y^*", "x y^*", Variety::Free, 1), Verdict::Equal);
        assert_eq!(oracle("x^+ x", "x", Variety::Free, 1), Verdict::Equal);
        assert_eq!(oracle("x y", "x", Variety::Free, 3), Verdict::Unknown);
    }

    #[test]
    fn perfect_identity_is_not_derivable_in_free() {
        assert_eq!(oracle("M(x) M(y)", "M(x y)", Variety::Free, 6), Verdict::Unknown);
        assert_eq!(oracle("M(x) M(y)", "M(x y)", Variety::P, 1), Verdict::Equal);
    }

    #[test]
    fn multi_step_derivations() {
        assert_eq!(oracle("M(x y^*) x^*", "x", Variety::Free, 2), Verdict::Equal);
        assert_eq!(oracle("(x^+ y)^+", "y^+ x^+", Variety::Free, 2), Verdict::Equal);
        assert_eq!(oracle("M(x) M(y) M(x)", "M(x)^+ M(x y) M(x)", Variety::Ls, 2), Verdict::Equal);
    }

    #[test]
    fn neighbours_are_equal_under_the_decision_procedure() {
        for v in Variety::ALL {
            let ctx = Context::new(v);
            for s in ["M(x) M(y)", "x y^* x^+", "(x M(y))^*"] {
                let start = t(s);
                for n in neighbours(&start, v) {
                    assert!(decide_equal(&start, &n, &ctx).unwrap(), "{v}: {s}");
                }
            }
        }
    }
}
