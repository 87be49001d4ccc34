//! Birooted inverse automata over `X ∪ X̄⁺`.
//!
//! Only positive transitions are stored. Reading a formal inverse `ℓ⁻¹`
//! follows a positive `ℓ`-edge backwards, so the involution closure never has
//! to be maintained separately.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Label, SignedLetter, SignedWord};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: Vertex,
    pub label: Label,
    pub target: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseAutomaton {
    vertex_count: usize,
    // (source, label, target)
    forward: BTreeSet<(Vertex, Label, Vertex)>,
    // (target, label, source)
    backward: BTreeSet<(Vertex, Label, Vertex)>,
    start: Vertex,
    end: Vertex,
}

impl InverseAutomaton {
    /// The one-vertex automaton of the identity.
    pub fn trivial() -> Self {
        Self::from_edges(1, core::iter::empty(), 0, 0)
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(vertex_count: usize, edges: I, start: Vertex, end: Vertex) -> Self {
        assert!(start < vertex_count && end < vertex_count, "roots out of range");
        let mut a = InverseAutomaton {
            vertex_count,
            forward: BTreeSet::new(),
            backward: BTreeSet::new(),
            start,
            end,
        };
        for e in edges {
            a.insert(e);
        }
        a
    }

    fn insert(&mut self, e: Edge) {
        assert!(e.source < self.vertex_count && e.target < self.vertex_count, "edge endpoint out of range");
        self.backward.insert((e.target, e.label.clone(), e.source));
        self.forward.insert((e.source, e.label, e.target));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.forward.len()
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self) -> Vertex {
        self.end
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.forward.iter().map(|(s, l, t)| Edge { source: *s, label: l.clone(), target: *t })
    }

    pub fn has_edge(&self, source: Vertex, label: &Label, target: Vertex) -> bool {
        self.forward.contains(&(source, label.clone(), target))
    }

    /// Same graph with new roots.
    pub fn rerooted(&self, start: Vertex, end: Vertex) -> Self {
        assert!(start < self.vertex_count && end < self.vertex_count, "roots out of range");
        InverseAutomaton { start, end, ..self.clone() }
    }

    pub fn out_edges(&self, v: Vertex) -> impl Iterator<Item = (&Label, Vertex)> + '_ {
        self.forward
            .range((v, Label::Plain(crate::Letter(0)), 0)..)
            .take_while(move |(s, _, _)| *s == v)
            .map(|(_, l, t)| (l, *t))
    }

    pub fn in_edges(&self, v: Vertex) -> impl Iterator<Item = (&Label, Vertex)> + '_ {
        self.backward
            .range((v, Label::Plain(crate::Letter(0)), 0)..)
            .take_while(move |(t, _, _)| *t == v)
            .map(|(_, l, s)| (l, *s))
    }

    fn first_matching(set: &BTreeSet<(Vertex, Label, Vertex)>, v: Vertex, label: &Label) -> Option<Vertex> {
        set.range((v, label.clone(), 0)..=(v, label.clone(), usize::MAX)).next().map(|(_, _, w)| *w)
    }

    /// Target of the positive `label`-edge leaving `v` (first one, if not deterministic).
    pub fn successor(&self, v: Vertex, label: &Label) -> Option<Vertex> {
        Self::first_matching(&self.forward, v, label)
    }

    pub fn predecessor(&self, v: Vertex, label: &Label) -> Option<Vertex> {
        Self::first_matching(&self.backward, v, label)
    }

    pub fn step(&self, v: Vertex, letter: &SignedLetter) -> Option<Vertex> {
        if letter.inverse {
            self.predecessor(v, &letter.label)
        } else {
            self.successor(v, &letter.label)
        }
    }

    /// Reads `word` from `from`, following reversed edges for inverse letters.
    pub fn read(&self, from: Vertex, word: &SignedWord) -> Option<Vertex> {
        word.letters().iter().try_fold(from, |v, l| self.step(v, l))
    }

    /// Deterministic and co-deterministic.
    pub fn is_deterministic(&self) -> bool {
        let unique = |set: &BTreeSet<(Vertex, Label, Vertex)>| {
            let mut prev: Option<(&Vertex, &Label)> = None;
            for (v, l, _) in set {
                if prev == Some((v, l)) {
                    return false;
                }
                prev = Some((v, l));
            }
            true
        };
        unique(&self.forward) && unique(&self.backward)
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(self.start).len() == self.vertex_count
    }

    fn reachable_from(&self, root: Vertex) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::new();
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (_, w) in self.out_edges(v).chain(self.in_edges(v)) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True iff reading `w` from the start is defined everywhere and stops at the end.
    pub fn accepts(&self, w: &SignedWord) -> bool {
        self.read(self.start, w) == Some(self.end)
    }

    /// Breadth-first renumbering from the start, exploring out-edges and then
    /// in-edges in label order. Equal for isomorphic birooted automata.
    pub fn canonical(&self) -> InverseAutomaton {
        let mut order: Vec<Option<usize>> = alloc::vec![None; self.vertex_count];
        let mut next = 0;
        order[self.start] = Some(next);
        next += 1;
        let mut queue = VecDeque::from([self.start]);
        while let Some(v) = queue.pop_front() {
            for (_, w) in self.out_edges(v).chain(self.in_edges(v)) {
                if order[w].is_none() {
                    order[w] = Some(next);
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
        // unreachable vertices keep their relative order after the reachable ones
        for slot in order.iter_mut() {
            if slot.is_none() {
                *slot = Some(next);
                next += 1;
            }
        }
        let id = |v: Vertex| order[v].expect("every vertex numbered");
        InverseAutomaton::from_edges(
            self.vertex_count,
            self.edges().map(|e| Edge { source: id(e.source), label: e.label, target: id(e.target) }),
            id(self.start),
            id(self.end),
        )
    }

    /// Equality as elements: a root-preserving bijection exists.
    pub fn iso_check(&self, other: &InverseAutomaton) -> bool {
        self.vertex_count == other.vertex_count
            && self.edge_count() == other.edge_count()
            && self.canonical() == other.canonical()
    }

    /// The unique label-preserving map `other → self` sending roots to roots,
    /// found by propagation from the start. `None` if it does not exist.
    pub fn rooted_morphism(&self, other: &InverseAutomaton) -> Option<Vec<Vertex>> {
        let mut map: Vec<Option<Vertex>> = alloc::vec![None; other.vertex_count];
        map[other.start] = Some(self.start);
        let mut queue = VecDeque::from([other.start]);
        while let Some(v) = queue.pop_front() {
            let image = map[v].expect("queued vertices are mapped");
            let forward = other.out_edges(v).map(|(l, w)| (w, self.successor(image, l)));
            let backward = other.in_edges(v).map(|(l, w)| (w, self.predecessor(image, l)));
            for (w, target) in forward.chain(backward) {
                let target = target?;
                match map[w] {
                    Some(t) if t != target => return None,
                    Some(_) => {}
                    None => {
                        map[w] = Some(target);
                        queue.push_back(w);
                    }
                }
            }
        }
        if map[other.end] != Some(self.end) {
            return None;
        }
        map.into_iter().collect()
    }

    /// Canonical text serialization: a header line then sorted edge triples.
    pub fn canonical_serialize(&self, alphabet: &Alphabet) -> Vec<u8> {
        let c = self.canonical();
        let mut s = String::new();
        let _ = writeln!(s, "vertices {} start {} end {}", c.vertex_count, c.start, c.end);
        for e in c.edges() {
            let _ = writeln!(s, "{} {} {}", e.source, encode_label(&e.label, alphabet), e.target);
        }
        s.into_bytes()
    }

    pub fn deserialize(bytes: &[u8], alphabet: &Alphabet) -> Result<Self> {
        let text = core::str::from_utf8(bytes).map_err(|_| Error::Malformed("not utf-8".into()))?;
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().unwrap_or("").split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Malformed(alloc::format!("bad number `{s}`")));
        let (n, start, end) = match header.as_slice() {
            ["vertices", n, "start", s, "end", e] => (num(n)?, num(s)?, num(e)?),
            _ => return Err(Error::Malformed("bad header".into())),
        };
        if start >= n || end >= n {
            return Err(Error::Malformed("root out of range".into()));
        }
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [s, l, t] = parts.as_slice() else {
                return Err(Error::Malformed(alloc::format!("bad edge line `{line}`")));
            };
            let (source, target) = (num(s)?, num(t)?);
            if source >= n || target >= n {
                return Err(Error::Malformed("edge endpoint out of range".into()));
            }
            edges.push(Edge { source, label: decode_label(l, alphabet)?, target });
        }
        Ok(InverseAutomaton::from_edges(n, edges, start, end))
    }

    /// Graphviz rendering: plain edges solid, barred edges dashed.
    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let c = self.canonical();
        let mut s = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle, label=\"\"];\n");
        let _ = writeln!(s, "  in [shape=point];\n  out [shape=point];");
        for v in 0..c.vertex_count {
            let _ = writeln!(s, "  v{v} [xlabel=\"{v}\"];");
        }
        let _ = writeln!(s, "  in -> v{};\n  v{} -> out;", c.start, c.end);
        for e in c.edges() {
            let (name, style) = match &e.label {
                Label::Plain(x) => (String::from(alphabet.name(*x)), "solid"),
                Label::Barred(u) => (alloc::format!("[{}]", alphabet.show(u.word())), "dashed"),
            };
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\", style={}];", e.source, e.target, name, style);
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn encode_label(label: &Label, alphabet: &Alphabet) -> String {
    match label {
        Label::Plain(x) => alloc::format!("P:{}", alphabet.name(*x)),
        Label::Barred(u) => alloc::format!("B:{}", alphabet.show(u.word())),
    }
}

fn decode_label(text: &str, alphabet: &Alphabet) -> Result<Label> {
    let bad = || Error::Malformed(alloc::format!("bad label `{text}`"));
    if let Some(name) = text.strip_prefix("P:") {
        alphabet.letter(name).map(Label::Plain).ok_or_else(bad)
    } else if let Some(run) = text.strip_prefix("B:") {
        let word = alphabet.split_run(run).ok_or_else(bad)?;
        Label::barred(&word).ok_or_else(bad)
    } else {
        Err(bad())
    }
}

/// The path automaton spelling `w` from start to end. Not folded.
pub fn linear_graph(w: &SignedWord) -> InverseAutomaton {
    let n = w.len();
    let edges = w.letters().iter().enumerate().map(|(i, l)| {
        if l.inverse {
            Edge { source: i + 1, label: l.label.clone(), target: i }
        } else {
            Edge { source: i, label: l.label.clone(), target: i + 1 }
        }
    });
    InverseAutomaton::from_edges(n + 1, edges, 0, n)
}

/// Union-find working copy used by folding and by the closure engine.
///
/// Vertex ids are those of the automaton it was built from; merged classes are
/// represented by their smallest member.
#[derive(Clone, Debug)]
pub(crate) struct Folding {
    parent: Vec<Vertex>,
    out: Vec<BTreeMap<Label, Vertex>>,
    inc: Vec<BTreeMap<Label, Vertex>>,
    pending: VecDeque<(Vertex, Vertex)>,
    /// Every merge performed, as (kept, absorbed) representatives.
    pub(crate) merges: Vec<(Vertex, Vertex)>,
    start: Vertex,
    end: Vertex,
}

impl Folding {
    pub(crate) fn empty(vertex_count: usize, start: Vertex, end: Vertex) -> Self {
        Folding {
            parent: (0..vertex_count).collect(),
            out: alloc::vec![BTreeMap::new(); vertex_count],
            inc: alloc::vec![BTreeMap::new(); vertex_count],
            pending: VecDeque::new(),
            merges: Vec::new(),
            start,
            end,
        }
    }

    /// Loads all edges of `a` and folds. `pick(n)` chooses which of the `n`
    /// remaining edges is inserted next.
    pub(crate) fn load(a: &InverseAutomaton, pick: &mut dyn FnMut(usize) -> usize) -> Self {
        let mut f = Folding::empty(a.vertex_count, a.start, a.end);
        let mut edges: Vec<Edge> = a.edges().collect();
        while !edges.is_empty() {
            let i = pick(edges.len()) % edges.len();
            let e = edges.swap_remove(i);
            f.add_edge(e.source, e.label, e.target);
        }
        f
    }

    pub(crate) fn find(&mut self, mut v: Vertex) -> Vertex {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn find_const(&self, mut v: Vertex) -> Vertex {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn successor(&self, v: Vertex, label: &Label) -> Option<Vertex> {
        let v = self.find_const(v);
        self.out[v].get(label).map(|&w| self.find_const(w))
    }

    pub(crate) fn roots(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.parent.len()).filter(move |&v| self.parent[v] == v)
    }

    /// Out-edges of a representative with resolved targets.
    pub(crate) fn out_of(&self, v: Vertex) -> impl Iterator<Item = (&Label, Vertex)> + '_ {
        self.out[v].iter().map(move |(l, &w)| (l, self.find_const(w)))
    }

    pub(crate) fn into_of(&self, v: Vertex) -> impl Iterator<Item = (&Label, Vertex)> + '_ {
        self.inc[v].iter().map(move |(l, &w)| (l, self.find_const(w)))
    }

    /// Adds an edge and folds until deterministic again.
    pub(crate) fn add_edge(&mut self, source: Vertex, label: Label, target: Vertex) {
        self.link(source, label, target);
        self.drain();
    }

    fn link(&mut self, source: Vertex, label: Label, target: Vertex) {
        let (a, b) = (self.find(source), self.find(target));
        match self.out[a].get(&label).copied() {
            Some(c) => {
                let c = self.find(c);
                if c != b {
                    self.pending.push_back((b, c));
                }
            }
            None => {
                self.out[a].insert(label.clone(), b);
            }
        }
        match self.inc[b].get(&label).copied() {
            Some(c) => {
                let c = self.find(c);
                if c != a {
                    self.pending.push_back((a, c));
                }
            }
            None => {
                self.inc[b].insert(label, a);
            }
        }
    }

    fn drain(&mut self) {
        while let Some((x, y)) = self.pending.pop_front() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            let (keep, gone) = if x < y { (x, y) } else { (y, x) };
            self.parent[gone] = keep;
            self.merges.push((keep, gone));
            let out = core::mem::take(&mut self.out[gone]);
            let inc = core::mem::take(&mut self.inc[gone]);
            for (l, t) in out {
                self.link(keep, l, t);
            }
            for (l, s) in inc {
                self.link(s, l, keep);
            }
        }
    }

    /// Compacts representatives to `0..k` and returns the folded automaton
    /// together with the map from working ids to output vertices.
    pub(crate) fn finish(&self) -> (InverseAutomaton, Vec<Vertex>) {
        let n = self.parent.len();
        let mut index = alloc::vec![usize::MAX; n];
        let mut k = 0;
        for v in 0..n {
            if self.parent[v] == v {
                index[v] = k;
                k += 1;
            }
        }
        let map: Vec<Vertex> = (0..n).map(|v| index[self.find_const(v)]).collect();
        let mut edges = Vec::new();
        for v in self.roots() {
            for (l, w) in self.out_of(v) {
                edges.push(Edge { source: map[v], label: l.clone(), target: map[w] });
            }
        }
        let a = InverseAutomaton::from_edges(k, edges, map[self.start], map[self.end]);
        (a, map)
    }
}

/// Merges equal-label out-edges (and in-edges) until deterministic and co-deterministic.
pub fn fold(a: &InverseAutomaton) -> InverseAutomaton {
    fold_with(a, &mut |_| 0)
}

/// [`fold`] with a caller-chosen edge insertion order.
pub fn fold_with(a: &InverseAutomaton, pick: &mut dyn FnMut(usize) -> usize) -> InverseAutomaton {
    Folding::load(a, pick).finish().0
}

/// Identifies `end(a)` with `start(b)` in the disjoint union and folds.
pub fn glue(a: &InverseAutomaton, b: &InverseAutomaton) -> InverseAutomaton {
    let offset = a.vertex_count;
    let mut f = Folding::empty(offset + b.vertex_count, a.start, offset + b.end);
    for e in a.edges() {
        f.add_edge(e.source, e.label, e.target);
    }
    for e in b.edges() {
        f.add_edge(offset + e.source, e.label, offset + e.target);
    }
    f.pending.push_back((a.end, offset + b.start));
    f.drain();
    f.finish().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;
    use crate::word::Letter;

    fn ab() -> Alphabet {
        Alphabet::parse("x,y").unwrap()
    }

    fn word(s: &str) -> SignedWord {
        parse_word(s, &ab()).unwrap()
    }

    fn x() -> Label {
        Label::Plain(Letter(0))
    }

    #[test]
    fn linear_graph_examples() {
        let g = linear_graph(&SignedWord::empty());
        assert_eq!((g.vertex_count(), g.start(), g.end()), (1, 0, 0));
        let g = linear_graph(&word("x"));
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_edge(0, &x(), 1));
        let g = linear_graph(&word("[xy] [yy]' [yx] [xx]'"));
        assert_eq!((g.vertex_count(), g.edge_count(), g.end()), (5, 4, 4));
        assert!(g.has_edge(2, &Label::barred(&[Letter(1), Letter(1)]).unwrap(), 1));
        assert!(g.is_deterministic());
    }

    #[test]
    fn fold_examples() {
        let f = fold(&linear_graph(&word("x x' x")));
        assert_eq!((f.vertex_count(), f.edge_count()), (2, 1));
        assert_ne!(f.start(), f.end());
        assert!(f.has_edge(f.start(), &x(), f.end()));

        let f = fold(&linear_graph(&word("x x'")));
        assert_eq!((f.vertex_count(), f.edge_count()), (2, 1));
        assert_eq!(f.start(), f.end());

        let g = fold(&linear_graph(&word("x y")));
        assert!(fold(&g).iso_check(&g));
    }

    #[test]
    fn glue_examples() {
        let xy = glue(&linear_graph(&word("x")), &linear_graph(&word("y")));
        assert!(xy.iso_check(&linear_graph(&word("x y"))));
        let a = fold(&linear_graph(&word("x y' x")));
        assert!(glue(&a, &InverseAutomaton::trivial()).iso_check(&a));
        let g = glue(&linear_graph(&word("x")), &linear_graph(&word("x'")));
        assert!(g.iso_check(&fold(&linear_graph(&word("x x'")))));
    }

    #[test]
    fn rooted_morphism_examples() {
        let a = fold(&linear_graph(&word("x y'")));
        assert!(a.rooted_morphism(&a).is_some());
        let loop_root = fold(&linear_graph(&word("x x'")));
        assert!(loop_root.rooted_morphism(&InverseAutomaton::trivial()).is_some());
        // closure of x carries both x and [x]; it admits a map from the [x] edge
        let closed_x = InverseAutomaton::from_edges(
            2,
            [
                Edge { source: 0, label: x(), target: 1 },
                Edge { source: 0, label: Label::barred(&[Letter(0)]).unwrap(), target: 1 },
            ],
            0,
            1,
        );
        assert!(closed_x.rooted_morphism(&linear_graph(&word("[x]"))).is_some());
        assert!(linear_graph(&word("[x]")).rooted_morphism(&closed_x).is_none());
    }

    #[test]
    fn acceptance() {
        let a = fold(&linear_graph(&word("x y'")));
        assert!(a.accepts(&word("x y'")));
        assert!(!a.accepts(&SignedWord::empty()));
        assert!(fold(&linear_graph(&word("x x'"))).accepts(&SignedWord::empty()));
        assert!(!a.accepts(&word("x")));
    }

    #[test]
    fn iso_check_examples() {
        let gx = fold(&linear_graph(&word("x")));
        let gy = fold(&linear_graph(&word("y")));
        assert!(gx.iso_check(&gx));
        assert!(!gx.iso_check(&gy));
        let f = fold(&linear_graph(&word("x x' x")));
        // relabel vertices by swapping ids
        let swapped = InverseAutomaton::from_edges(
            2,
            f.edges().map(|e| Edge { source: 1 - e.source, label: e.label, target: 1 - e.target }),
            1 - f.start(),
            1 - f.end(),
        );
        assert!(swapped.iso_check(&f));
    }

    #[test]
    fn serialization() {
        let a = ab();
        let one = InverseAutomaton::trivial().canonical_serialize(&a);
        assert_eq!(one, b"vertices 1 start 0 end 0\n");
        let g = fold(&linear_graph(&word("[xy] x' y")));
        let bytes = g.canonical_serialize(&a);
        let back = InverseAutomaton::deserialize(&bytes, &a).unwrap();
        assert!(back.iso_check(&g));
        assert!(InverseAutomaton::deserialize(b"vertices 1 start 2 end 0\n", &a).is_err());
    }

    #[test]
    fn dot_uses_dashed_barred_edges() {
        let a = ab();
        let g = fold(&linear_graph(&word("x [x]' x")));
        let dot = g.to_dot(&a);
        assert!(dot.contains("[label=\"x\", style=solid]"));
        assert!(dot.contains("[label=\"[x]\", style=dashed]"));
    }
}
