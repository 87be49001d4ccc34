//! JSON records for elements and verdicts.

use std::collections::BTreeMap;

use birestr::{Alphabet, FfbrElement, Variety};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub variety: String,
    /// The positive component, `1` when empty.
    pub u: String,
    /// Canonical bytes of the idempotent component, hex encoded.
    pub graph: String,
    pub verdicts: BTreeMap<String, bool>,
}

pub fn positive_text(u: &[birestr::Letter], alphabet: &Alphabet) -> String {
    if u.is_empty() {
        "1".to_owned()
    } else {
        u.iter().map(|&x| alphabet.name(x)).collect::<Vec<_>>().join(" ")
    }
}

impl ElementRecord {
    pub fn new(e: &FfbrElement, variety: Variety, alphabet: &Alphabet) -> Self {
        ElementRecord {
            variety: variety.name().to_owned(),
            u: positive_text(&e.u, alphabet),
            graph: hex::encode(e.graph.canonical_serialize(alphabet)),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, verdict: bool) -> Self {
        self.verdicts.insert(name.to_owned(), verdict);
        self
    }

    /// Decodes the graph bytes back into text.
    pub fn graph_text(&self) -> Option<String> {
        String::from_utf8(hex::decode(&self.graph).ok()?).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecideRecord {
    pub variety: String,
    pub left: ElementRecord,
    pub right: ElementRecord,
    pub verdicts: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub index: usize,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub variety: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseRecord>,
}

impl SuiteReport {
    pub fn new(suite: &str, variety: Variety, seed: u64) -> Self {
        SuiteReport { suite: suite.to_owned(), variety: variety.name().to_owned(), seed, passed: 0, failed: 0, cases: Vec::new() }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        if passed {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.cases.push(CaseRecord { index: self.cases.len(), name: name.into(), passed, detail });
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Number of cases whose name starts with `prefix`.
    pub fn count(&self, prefix: &str) -> usize {
        self.cases.iter().filter(|c| c.name.starts_with(prefix)).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "suite {} variety {} seed {}: {} passed, {} failed\n",
            self.suite, self.variety, self.seed, self.passed, self.failed
        );
        for c in self.failures() {
            s.push_str(&format!("  FAIL #{} {}", c.index, c.name));
            if let Some(d) = &c.detail {
                s.push_str(&format!(": {d}"));
            }
            s.push('\n');
        }
        s
    }
}
