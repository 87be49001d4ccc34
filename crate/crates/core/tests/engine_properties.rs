mod common;

use birestr::automaton::{fold, fold_with, glue, linear_graph};
use birestr::parse::{parse_term, parse_word};
use birestr::stephen::{close, close_with, closure_of_word, decide_equal_inv, is_idempotent, replay};
use birestr::{Alphabet, ClosureBudget, InverseAutomaton};
use common::*;
use proptest::prelude::*;

fn ab() -> Alphabet {
    Alphabet::parse("x,y").unwrap()
}

fn budget() -> ClosureBudget {
    ClosureBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printed_terms_reparse(t in term(2, 4, 16)) {
        let a = ab();
        let text = format!("{}", a.show(&t));
        prop_assert_eq!(parse_term(&text, &a).unwrap(), t);
    }

    #[test]
    fn printed_words_reparse(w in extended_word(2, 3, 8)) {
        let a = ab();
        let text = format!("{}", a.show(&w));
        prop_assert_eq!(parse_word(&text, &a).unwrap(), w);
    }

    #[test]
    fn involution_laws(w in extended_word(2, 3, 8), v in extended_word(2, 3, 8)) {
        prop_assert_eq!(w.involutive_inverse().involutive_inverse(), w.clone());
        prop_assert_eq!(w.concat(&v).involutive_inverse(), v.involutive_inverse().concat(&w.involutive_inverse()));
        prop_assert_eq!(w.involutive_inverse().group_value(), w.group_value().inverse());
        prop_assert!(w.concat(&w.involutive_inverse()).group_value().is_identity());
    }

    #[test]
    fn folding_is_confluent(w in extended_word(2, 2, 10), orders in prop::collection::vec(prop::collection::vec(any::<usize>(), 1..8), 10)) {
        let reference = fold(&linear_graph(&w));
        prop_assert!(reference.is_deterministic());
        for seeds in orders {
            let other = fold_with(&linear_graph(&w), &mut picker(seeds));
            prop_assert!(other.iso_check(&reference));
        }
    }

    #[test]
    fn glue_is_associative(u in extended_word(2, 2, 5), v in extended_word(2, 2, 5), w in extended_word(2, 2, 5)) {
        let (a, b, c) = (linear_graph(&u), linear_graph(&v), linear_graph(&w));
        let left = glue(&glue(&a, &b), &c);
        let right = glue(&a, &glue(&b, &c));
        prop_assert!(left.iso_check(&right));
        prop_assert!(left.iso_check(&fold(&linear_graph(&u.concat(&v).concat(&w)))));
    }

    #[test]
    fn serialization_round_trips(w in extended_word(2, 3, 8), v in closing_variety()) {
        let a = ab();
        let c = closure_of_word(&w, v, budget()).unwrap();
        let back = InverseAutomaton::deserialize(&c.canonical_serialize(&a), &a).unwrap();
        prop_assert!(back.iso_check(&c));
        prop_assert_eq!(back.canonical_serialize(&a), c.canonical_serialize(&a));
    }

    #[test]
    fn mutual_morphisms_iff_isomorphic(w1 in extended_word(2, 2, 5), w2 in extended_word(2, 2, 5), v in closing_variety()) {
        let c1 = closure_of_word(&w1, v, budget()).unwrap();
        let c2 = closure_of_word(&w2, v, budget()).unwrap();
        let both = c1.rooted_morphism(&c2).is_some() && c2.rooted_morphism(&c1).is_some();
        prop_assert_eq!(both, c1.iso_check(&c2));
        prop_assert!(c1.rooted_morphism(&c1).is_some());
    }

    #[test]
    fn closure_is_confluent_and_idempotent(
        w in extended_word(2, 3, 7),
        v in variety(),
        orders in prop::collection::vec(prop::collection::vec(any::<usize>(), 1..8), 10),
    ) {
        let input = linear_graph(&w);
        let (reference, trace) = close(&input, v, budget()).unwrap();
        for seeds in orders {
            let (other, _) = close_with(&input, v, budget(), &mut picker(seeds), true).unwrap();
            prop_assert!(other.iso_check(&reference));
        }
        let (again, trace2) = close(&reference, v, budget()).unwrap();
        prop_assert!(again.iso_check(&reference));
        prop_assert_eq!(trace2.expansions(), 0);
        prop_assert!(replay(&input, v, &trace).iso_check(&reference));
        prop_assert!(reference.is_deterministic() && reference.is_connected());
        prop_assert!(reference.vertex_count() <= fold(&birestr::stephen::prepare_automaton(&input, v)).vertex_count());
    }

    #[test]
    fn closure_accepts_its_word(w in extended_word(2, 3, 7), v in variety()) {
        let p = birestr::stephen::prepare_word(&w, v);
        prop_assert!(closure_of_word(&w, v, budget()).unwrap().accepts(&p));
    }

    #[test]
    fn free_inverse_relations_hold(w in extended_word(2, 2, 4), u in extended_word(2, 2, 4), v in variety()) {
        let inv = w.involutive_inverse();
        prop_assert!(decide_equal_inv(&w.concat(&inv).concat(&w), &w, v, budget()).unwrap());
        prop_assert!(is_idempotent(&w.concat(&inv), v, budget()).unwrap());
        let e = w.concat(&inv);
        let f = u.concat(&u.involutive_inverse());
        prop_assert!(decide_equal_inv(&e.concat(&f), &f.concat(&e), v, budget()).unwrap());
    }

    #[test]
    fn conjugates_of_idempotents_are_idempotent(w in extended_word(2, 2, 4), u in extended_word(2, 2, 4), v in variety()) {
        let e = u.concat(&u.involutive_inverse());
        let conj = w.concat(&e).concat(&w.involutive_inverse());
        prop_assert!(is_idempotent(&conj, v, budget()).unwrap());
    }
}
