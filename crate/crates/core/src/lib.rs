//! Executable algebra for free F-birestriction monoids.
//!
//! An element of the free X-generated F-birestriction monoid (and of its left
//! strong, right strong, strong and perfect variants) is represented by a pair
//! `(e, u)`: a closed rooted inverse automaton `e` over the extended alphabet
//! `X ∪ X̄⁺` together with a positive word `u ∈ X*`. Terms in the signature
//! `(·, *, ⁺, m(·), 1)` evaluate into these coordinates ([`coords`]), and the
//! idempotent component is computed by a Stephen-style closure of inverse
//! automata ([`stephen`]).
//!
//! Independent models live alongside:
//!
//! * [`munn`]: Munn trees for the free inverse monoid and the free birestriction
//!   monoid `E(FI(X)) ⋊ X*`, with the `D`-map from words to projection terms.
//! * [`cayley`]: twin-closed subgraphs of the Cayley graph of the free group,
//!   a geometric model of the free perfect F-birestriction monoid.
//! * [`oracle`]: bounded derivation search used to certify equalities.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod automaton;
pub mod cayley;
pub mod coords;
mod error;
pub mod identity;
pub mod munn;
pub mod oracle;
pub mod parse;
pub mod stephen;
pub mod term;
pub mod word;

pub use automaton::{Edge, InverseAutomaton, Vertex};
pub use cayley::{CayleyPerfectElement, TwinGraph};
pub use coords::{Context, FfbrElement};
pub use error::{Error, Result};
pub use munn::{FbrElement, MunnTree};
pub use stephen::{ClosureBudget, ClosureEvent, ClosureTrace, Rule};
pub use term::{BiTerm, Variety};
pub use word::{Alphabet, BarredLabel, GroupLetter, GroupWord, Label, Letter, SignedLetter, SignedWord};
