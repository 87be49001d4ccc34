use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown generator `{name}` at position {position}")]
    UnknownGenerator { position: usize, name: String },

    #[error("closure budget of {max_events} events exhausted")]
    BudgetExhausted { max_events: usize },

    #[error("barred letter in a word over the plain alphabet")]
    BarredLetter,

    #[error("m(·) node in a term evaluated in the free inverse monoid")]
    MaxNode,

    #[error("closure budget must be at least 1")]
    ZeroBudget,

    #[error("models disagree on {left} vs {right}: cayley={cayley}, automata={automata}")]
    Discrepancy {
        left: String,
        right: String,
        cayley: bool,
        automata: bool,
    },

    #[error("malformed serialized automaton: {0}")]
    Malformed(String),
}
