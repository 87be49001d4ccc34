//! Closure of inverse automata under the defining relations of the universal
//! inverse monoids of the five free F-birestriction monoids.
//!
//! Each elementary expansion followed by folding amounts to adding a single
//! edge between existing vertices:
//!
//! * `R1` (every variety): `(α,x,β)` present, add `(α,x̄,β)`.
//! * `R2` (free, ls, rs, s): `(α,ū,β)`, `(β,v̄,γ)` present, add `(α,(uv)‾,γ)`.
//! * `R3` (ls, s): `(α,ū,β)`, `(α,(uv)‾,γ)` present, add `(β,v̄,γ)`.
//! * `R4` (rs, s): `(β,v̄,γ)`, `(α,(uv)‾,γ)` present, add `(α,ū,β)`.
//!
//! The perfect variety runs over `X ∪ X̄` with `R1` alone; barred words of
//! length at least two are first spelled out as paths of one-letter bars.
//!
//! Vertices are never created, so the closed automaton has at most as many
//! vertices as the folded input.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::num::NonZeroUsize;

use crate::automaton::{encode_label, linear_graph, Edge, Folding, InverseAutomaton, Vertex};
use crate::error::{Error, Result};
use crate::term::Variety;
use crate::word::{Alphabet, BarredLabel, Label, SignedLetter, SignedWord};

/// Upper bound on the number of closure events (folds and expansions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureBudget(NonZeroUsize);

impl ClosureBudget {
    pub const DEFAULT_EVENTS: usize = 100_000;

    pub fn new(max_events: usize) -> Result<Self> {
        NonZeroUsize::new(max_events).map(ClosureBudget).ok_or(Error::ZeroBudget)
    }

    pub fn max_events(self) -> usize {
        self.0.get()
    }
}

impl Default for ClosureBudget {
    fn default() -> Self {
        ClosureBudget(NonZeroUsize::new(Self::DEFAULT_EVENTS).expect("nonzero"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    Fold,
    R1,
    R2,
    R3,
    R4,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Fold => "FOLD",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
        }
    }

    fn enabled(self, variety: Variety) -> bool {
        match self {
            Rule::Fold | Rule::R1 => true,
            Rule::R2 => variety != Variety::P,
            Rule::R3 => matches!(variety, Variety::Ls | Variety::S),
            Rule::R4 => matches!(variety, Variety::Rs | Variety::S),
        }
    }
}

/// One step of a closure run. Vertex ids refer to the (prepared) input automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureEvent {
    Fold { kept: Vertex, merged: Vertex },
    Expand { rule: Rule, witnesses: [Vertex; 3], edge: Edge },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureTrace {
    pub events: Vec<ClosureEvent>,
}

impl ClosureTrace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn expansions(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, ClosureEvent::Expand { .. })).count()
    }

    /// One line per event: `RULE α β γ label`, with `-` for unused fields.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        for e in &self.events {
            let _ = match e {
                ClosureEvent::Fold { kept, merged } => writeln!(s, "FOLD {kept} {merged} - -"),
                ClosureEvent::Expand { rule, witnesses: [a, b, c], edge } => {
                    let label = encode_label(&edge.label, alphabet);
                    if *rule == Rule::R1 {
                        writeln!(s, "{} {a} {b} - {label}", rule.name())
                    } else {
                        writeln!(s, "{} {a} {b} {c} {label}", rule.name())
                    }
                }
            };
        }
        s
    }
}

/// Rewrites a word into the generating set the variety's engine runs over.
pub fn prepare_word(w: &SignedWord, variety: Variety) -> SignedWord {
    if variety != Variety::P {
        return w.clone();
    }
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        match &l.label {
            Label::Barred(u) if u.len() > 1 => {
                let singles = u.word().iter().map(|&x| Label::Barred(BarredLabel::single(x)));
                if l.inverse {
                    out.extend(singles.rev().map(SignedLetter::neg));
                } else {
                    out.extend(singles.map(SignedLetter::pos));
                }
            }
            _ => out.push(l.clone()),
        }
    }
    SignedWord(out)
}

/// Spells multi-letter barred edges as fresh paths when the variety is perfect.
pub fn prepare_automaton(a: &InverseAutomaton, variety: Variety) -> InverseAutomaton {
    if variety != Variety::P || a.edges().all(|e| !matches!(&e.label, Label::Barred(u) if u.len() > 1)) {
        return a.clone();
    }
    let mut n = a.vertex_count();
    let mut edges = Vec::new();
    for e in a.edges() {
        match &e.label {
            Label::Barred(u) if u.len() > 1 => {
                let mut prev = e.source;
                for (i, &x) in u.word().iter().enumerate() {
                    let next = if i + 1 == u.len() {
                        e.target
                    } else {
                        n += 1;
                        n - 1
                    };
                    edges.push(Edge { source: prev, label: Label::Barred(BarredLabel::single(x)), target: next });
                    prev = next;
                }
            }
            _ => edges.push(e),
        }
    }
    InverseAutomaton::from_edges(n, edges, a.start(), a.end())
}

struct Candidate {
    rule: Rule,
    witnesses: [Vertex; 3],
    edge: Edge,
}

fn candidates(f: &Folding, rule: Rule, out: &mut Vec<Candidate>) {
    let roots: Vec<Vertex> = f.roots().collect();
    match rule {
        Rule::Fold => {}
        Rule::R1 => {
            for &a in &roots {
                for (l, b) in f.out_of(a) {
                    if let Label::Plain(x) = l {
                        let bar = Label::Barred(BarredLabel::single(*x));
                        if f.successor(a, &bar) != Some(b) {
                            out.push(Candidate { rule, witnesses: [a, b, b], edge: Edge { source: a, label: bar, target: b } });
                        }
                    }
                }
            }
        }
        Rule::R2 => {
            for &a in &roots {
                for (l1, b) in f.out_of(a) {
                    let Label::Barred(u) = l1 else { continue };
                    for (l2, c) in f.out_of(b) {
                        let Label::Barred(v) = l2 else { continue };
                        let uv = Label::Barred(u.concat(v));
                        if f.successor(a, &uv) != Some(c) {
                            out.push(Candidate { rule, witnesses: [a, b, c], edge: Edge { source: a, label: uv, target: c } });
                        }
                    }
                }
            }
        }
        Rule::R3 => {
            for &a in &roots {
                let barred: Vec<(&BarredLabel, Vertex)> = f
                    .out_of(a)
                    .filter_map(|(l, t)| match l {
                        Label::Barred(u) => Some((u, t)),
                        Label::Plain(_) => None,
                    })
                    .collect();
                for &(u, b) in &barred {
                    for &(w, c) in &barred {
                        if w.len() > u.len() && w.word().starts_with(u.word()) {
                            let v = Label::barred(&w.word()[u.len()..]).expect("proper prefix");
                            if f.successor(b, &v) != Some(c) {
                                out.push(Candidate { rule, witnesses: [a, b, c], edge: Edge { source: b, label: v, target: c } });
                            }
                        }
                    }
                }
            }
        }
        Rule::R4 => {
            for &c in &roots {
                let barred: Vec<(&BarredLabel, Vertex)> = f
                    .into_of(c)
                    .filter_map(|(l, s)| match l {
                        Label::Barred(u) => Some((u, s)),
                        Label::Plain(_) => None,
                    })
                    .collect();
                for &(v, b) in &barred {
                    for &(w, a) in &barred {
                        if w.len() > v.len() && w.word().ends_with(v.word()) {
                            let u = Label::barred(&w.word()[..w.len() - v.len()]).expect("proper suffix");
                            if f.successor(a, &u) != Some(b) {
                                out.push(Candidate { rule, witnesses: [a, b, c], edge: Edge { source: a, label: u, target: b } });
                            }
                        }
                    }
                }
            }
        }
    }
}

const EXPANSION_RULES: [Rule; 4] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4];

/// Closes `a` for `variety`, applying rules in the fixed order
/// `FOLD > R1 > R2 > R3 > R4` and the first instance of each in vertex order.
pub fn close(a: &InverseAutomaton, variety: Variety, budget: ClosureBudget) -> Result<(InverseAutomaton, ClosureTrace)> {
    close_with(a, variety, budget, &mut |_| 0, false)
}

/// Closure with a caller-controlled schedule.
///
/// With `shuffle = false`, `pick` selects among instances of the first
/// applicable rule; with `shuffle = true`, among instances of all applicable
/// rules at once (and the input edges are loaded in `pick` order).
pub fn close_with(
    a: &InverseAutomaton,
    variety: Variety,
    budget: ClosureBudget,
    pick: &mut dyn FnMut(usize) -> usize,
    shuffle: bool,
) -> Result<(InverseAutomaton, ClosureTrace)> {
    let input = prepare_automaton(a, variety);
    let mut f = if shuffle { Folding::load(&input, pick) } else { Folding::load(&input, &mut |_| 0) };
    let mut trace = ClosureTrace::default();
    let mut logged = 0;
    let log_folds = |f: &Folding, trace: &mut ClosureTrace, logged: &mut usize| {
        for &(kept, merged) in &f.merges[*logged..] {
            trace.events.push(ClosureEvent::Fold { kept, merged });
        }
        *logged = f.merges.len();
    };
    log_folds(&f, &mut trace, &mut logged);
    let mut pool = Vec::new();
    loop {
        if trace.len() > budget.max_events() {
            return Err(Error::BudgetExhausted { max_events: budget.max_events() });
        }
        pool.clear();
        for rule in EXPANSION_RULES {
            if !rule.enabled(variety) {
                continue;
            }
            candidates(&f, rule, &mut pool);
            if !shuffle && !pool.is_empty() {
                break;
            }
        }
        if pool.is_empty() {
            break;
        }
        let chosen = pool.swap_remove(pick(pool.len()) % pool.len());
        trace.events.push(ClosureEvent::Expand { rule: chosen.rule, witnesses: chosen.witnesses, edge: chosen.edge.clone() });
        f.add_edge(chosen.edge.source, chosen.edge.label, chosen.edge.target);
        log_folds(&f, &mut trace, &mut logged);
    }
    Ok((f.finish().0, trace))
}

/// Re-applies a trace to its input. Edges are added without implicit folding;
/// only the recorded `FOLD` events merge vertices.
pub fn replay(a: &InverseAutomaton, variety: Variety, trace: &ClosureTrace) -> InverseAutomaton {
    let input = prepare_automaton(a, variety);
    let n = input.vertex_count();
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn find(parent: &mut [Vertex], mut v: Vertex) -> Vertex {
        while parent[v] != v {
            v = parent[v];
        }
        v
    }
    let mut edges: Vec<Edge> = input.edges().collect();
    for event in &trace.events {
        match event {
            ClosureEvent::Fold { kept, merged } => {
                let (k, m) = (find(&mut parent, *kept), find(&mut parent, *merged));
                if k != m {
                    parent[m.max(k)] = m.min(k);
                }
            }
            ClosureEvent::Expand { edge, .. } => edges.push(edge.clone()),
        }
    }
    let reps: Vec<Vertex> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut index = alloc::vec![usize::MAX; n];
    let mut k = 0;
    for v in 0..n {
        if reps[v] == v {
            index[v] = k;
            k += 1;
        }
    }
    let id = |v: Vertex| index[reps[v]];
    InverseAutomaton::from_edges(
        k,
        edges.into_iter().map(|e| Edge { source: id(e.source), label: e.label, target: id(e.target) }),
        id(input.start()),
        id(input.end()),
    )
}

/// Closed automaton of a word.
pub fn closure_of_word(w: &SignedWord, variety: Variety, budget: ClosureBudget) -> Result<InverseAutomaton> {
    Ok(close(&linear_graph(&prepare_word(w, variety)), variety, budget)?.0)
}

/// `[w1] = [w2]` in the universal inverse monoid of the variety.
pub fn decide_equal_inv(w1: &SignedWord, w2: &SignedWord, variety: Variety, budget: ClosureBudget) -> Result<bool> {
    let (p1, p2) = (prepare_word(w1, variety), prepare_word(w2, variety));
    let c1 = closure_of_word(&p1, variety, budget)?;
    if !c1.accepts(&p2) {
        return Ok(false);
    }
    let c2 = closure_of_word(&p2, variety, budget)?;
    Ok(c2.accepts(&p1))
}

pub fn is_idempotent(w: &SignedWord, variety: Variety, budget: ClosureBudget) -> Result<bool> {
    decide_equal_inv(w, &w.concat(w), variety, budget)
}

/// `a⁺`: both roots at the start.
pub fn plus_inv(a: &InverseAutomaton) -> InverseAutomaton {
    a.rerooted(a.start(), a.start())
}

/// `a*`: both roots at the end.
pub fn star_inv(a: &InverseAutomaton) -> InverseAutomaton {
    a.rerooted(a.end(), a.end())
}

/// Product of closed automata: glue, then close again.
pub fn mul_inv(a: &InverseAutomaton, b: &InverseAutomaton, variety: Variety, budget: ClosureBudget) -> Result<InverseAutomaton> {
    Ok(close(&crate::automaton::glue(a, b), variety, budget)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fold;
    use crate::parse::parse_word;
    use crate::word::Letter;

    fn ab() -> Alphabet {
        Alphabet::parse("x,y").unwrap()
    }

    fn word(s: &str) -> SignedWord {
        parse_word(s, &ab()).unwrap()
    }

    fn closed(s: &str, v: Variety) -> InverseAutomaton {
        closure_of_word(&word(s), v, ClosureBudget::default()).unwrap()
    }

    fn bar(u: &[u32]) -> Label {
        Label::barred(&u.iter().map(|&i| Letter(i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn closure_of_a_generator_adds_its_twin() {
        let g = closed("x", Variety::Free);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
        assert!(g.has_edge(g.start(), &Label::Plain(Letter(0)), g.end()));
        assert!(g.has_edge(g.start(), &bar(&[0]), g.end()));
    }

    #[test]
    fn closure_of_two_bars_adds_the_chord() {
        let g = closed("[x] [y]", Variety::Free);
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        assert!(g.has_edge(g.start(), &bar(&[0, 1]), g.end()));
        let longer = closed("[xy] [yx]", Variety::Free);
        assert!(longer.has_edge(longer.start(), &bar(&[0, 1, 1, 0]), longer.end()));
    }

    #[test]
    fn non_e_unitary_witness_is_already_closed() {
        let w = word("[xy] [yy]' [yx] [xx]'");
        for v in [Variety::Free, Variety::Ls, Variety::Rs, Variety::S] {
            let (g, trace) = close(&linear_graph(&w), v, ClosureBudget::default()).unwrap();
            assert!(trace.is_empty());
            assert!(g.iso_check(&linear_graph(&w)));
        }
    }

    #[test]
    fn left_strong_rule_adds_the_quotient_edge() {
        // β ←[x]− α −[xy]→ γ
        let g = closed("[x]' [xy]", Variety::Ls);
        assert_eq!(g.vertex_count(), 3);
        assert!(g.has_edge(g.start(), &bar(&[1]), g.end()));
        let free = closed("[x]' [xy]", Variety::Free);
        assert_eq!(free.edge_count(), 2);
        // right strong mirror: α −[xy]→ γ ←[y]− β
        let g = closed("[xy] [y]'", Variety::Rs);
        assert!(g.has_edge(g.start(), &bar(&[0]), g.end()));
    }

    #[test]
    fn decide_equal_inv_examples() {
        let w = word("[x] y'");
        assert!(decide_equal_inv(&w, &w, Variety::Free, ClosureBudget::default()).unwrap());
        let lhs = word("[x] [y]");
        let rhs = word("[xy] [xy]' [x] [y]");
        assert!(decide_equal_inv(&lhs, &rhs, Variety::Free, ClosureBudget::default()).unwrap());
        let a = Alphabet::parse("x").unwrap();
        let w1 = parse_word("[x]' [xx]", &a).unwrap();
        let w2 = parse_word("[x]' [x] [x]", &a).unwrap();
        assert!(decide_equal_inv(&w1, &w2, Variety::Ls, ClosureBudget::default()).unwrap());
        assert!(!decide_equal_inv(&w1, &w2, Variety::Free, ClosureBudget::default()).unwrap());
    }

    #[test]
    fn is_idempotent_examples() {
        let b = ClosureBudget::default();
        let a = word("[xy] [yy]' [yx] [xx]'");
        for v in [Variety::Free, Variety::Ls, Variety::Rs, Variety::S] {
            assert!(!is_idempotent(&a, v, b).unwrap(), "{v}");
        }
        let one = Alphabet::parse("x").unwrap();
        let w = parse_word("[x] [xx]' [x]", &one).unwrap();
        assert!(!is_idempotent(&w, Variety::Free, b).unwrap());
        for v in [Variety::Ls, Variety::Rs, Variety::S, Variety::P] {
            assert!(is_idempotent(&w, v, b).unwrap(), "{v}");
        }
        let w = word("x [y]' x");
        assert!(is_idempotent(&w.concat(&w.involutive_inverse()), Variety::Free, b).unwrap());
    }

    #[test]
    fn element_ops() {
        let g = closed("x", Variety::Free);
        let p = plus_inv(&g);
        assert_eq!((p.start(), p.end()), (g.start(), g.start()));
        let s = star_inv(&g);
        assert_eq!((s.start(), s.end()), (g.end(), g.end()));
        let b = ClosureBudget::default();
        let prod = mul_inv(&closed("[x]", Variety::Free), &closed("[y]", Variety::Free), Variety::Free, b).unwrap();
        assert!(prod.iso_check(&closed("[x] [y]", Variety::Free)));
        assert_eq!(prod.vertex_count(), 3);
    }

    #[test]
    fn perfect_variety_spells_out_bars() {
        let w = prepare_word(&word("[xy]'"), Variety::P);
        assert_eq!(w, word("[y]' [x]'"));
        let g = closed("[xy]", Variety::P);
        assert_eq!(g.vertex_count(), 3);
        let g2 = closed("[x] [y]", Variety::P);
        assert!(g.iso_check(&g2));
    }

    #[test]
    fn trace_replays_and_prints() {
        let input = linear_graph(&word("x x' [x] y [y]' [xy]"));
        let (out, trace) = close(&input, Variety::S, ClosureBudget::default()).unwrap();
        assert!(replay(&input, Variety::S, &trace).iso_check(&out));
        let text = trace.to_text(&ab());
        assert_eq!(text.lines().count(), trace.len());
        assert!(text.lines().all(|l| l.split_whitespace().count() == 5));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let input = linear_graph(&word("x y x y"));
        let r = close(&input, Variety::Free, ClosureBudget::new(1).unwrap());
        assert_eq!(r.unwrap_err(), Error::BudgetExhausted { max_events: 1 });
        assert_eq!(ClosureBudget::new(0), Err(Error::ZeroBudget));
    }

    #[test]
    fn closing_twice_changes_nothing() {
        let g = closed("x [xy]' y x'", Variety::S);
        let (again, trace) = close(&g, Variety::S, ClosureBudget::default()).unwrap();
        assert!(trace.is_empty());
        assert!(again.iso_check(&g));
        assert!(g.vertex_count() <= fold(&linear_graph(&word("x [xy]' y x'"))).vertex_count());
    }
}
