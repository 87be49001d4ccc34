#![allow(dead_code)]

use birestr::{BiTerm, Label, Letter, SignedLetter, SignedWord, Variety};
use proptest::prelude::*;

pub fn term(letters: u32, depth: u32, size: u32) -> BoxedStrategy<BiTerm> {
    let leaf = prop_oneof![
        1 => Just(BiTerm::One),
        4 => (0..letters).prop_map(|i| BiTerm::Gen(Letter(i))),
    ];
    leaf.prop_recursive(depth, size, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| BiTerm::mul(a, b)),
            1 => inner.clone().prop_map(BiTerm::star),
            1 => inner.clone().prop_map(BiTerm::plus),
            1 => inner.prop_map(BiTerm::max),
        ]
    })
    .boxed()
}

/// Terms without `m(·)`.
pub fn plain_term(letters: u32, depth: u32, size: u32) -> BoxedStrategy<BiTerm> {
    let leaf = prop_oneof![
        1 => Just(BiTerm::One),
        4 => (0..letters).prop_map(|i| BiTerm::Gen(Letter(i))),
    ];
    leaf.prop_recursive(depth, size, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| BiTerm::mul(a, b)),
            1 => inner.clone().prop_map(BiTerm::star),
            1 => inner.prop_map(BiTerm::plus),
        ]
    })
    .boxed()
}

pub fn positive(letters: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..letters).prop_map(Letter), 0..=max_len)
}

pub fn plain_word(letters: u32, max_len: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec(((0..letters), any::<bool>()), 0..=max_len).prop_map(|v| {
        SignedWord(v.into_iter().map(|(i, inv)| SignedLetter { label: Label::Plain(Letter(i)), inverse: inv }).collect())
    })
}

/// Words over `X ∪ X̄⁺` with barred letters of length at most `bar_len`.
pub fn extended_word(letters: u32, bar_len: usize, max_len: usize) -> impl Strategy<Value = SignedWord> {
    let label = prop_oneof![
        (0..letters).prop_map(|i| Label::Plain(Letter(i))),
        prop::collection::vec((0..letters).prop_map(Letter), 1..=bar_len)
            .prop_map(|w| Label::barred(&w).expect("nonempty")),
    ];
    prop::collection::vec((label, any::<bool>()), 0..=max_len)
        .prop_map(|v| SignedWord(v.into_iter().map(|(label, inverse)| SignedLetter { label, inverse }).collect()))
}

pub fn variety() -> impl Strategy<Value = Variety> {
    prop::sample::select(Variety::ALL.to_vec())
}

pub fn closing_variety() -> impl Strategy<Value = Variety> {
    prop::sample::select(vec![Variety::Free, Variety::Ls, Variety::Rs, Variety::S])
}

/// A deterministic choice function cycling through `seeds`.
pub fn picker(seeds: Vec<usize>) -> impl FnMut(usize) -> usize {
    let mut i = 0;
    move |n| {
        let s = seeds[i % seeds.len()];
        i += 1;
        s % n.max(1)
    }
}
