use std::path::PathBuf;

use birestr::{Alphabet, ClosureBudget, Context, Variety};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Everything a command or suite is parameterised by.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub alphabet: Alphabet,
    pub variety: Variety,
    pub budget: ClosureBudget,
    pub seed: u64,
    pub format: Format,
    pub dot: Option<PathBuf>,
    pub trace: Option<PathBuf>,
}

impl CliConfig {
    pub fn new(alphabet: Alphabet, variety: Variety) -> Self {
        CliConfig {
            alphabet,
            variety,
            budget: ClosureBudget::default(),
            seed: 0,
            format: Format::Text,
            dot: None,
            trace: None,
        }
    }

    pub fn context(&self) -> Context {
        Context { variety: self.variety, budget: self.budget }
    }

    pub fn letter_count(&self) -> u32 {
        self.alphabet.len() as u32
    }
}
