//! Command implementations. Each returns what to print and the exit code;
//! file outputs (`--dot`, `--trace`) are written here.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{Context as _, Result};
use birestr::automaton::linear_graph;
use birestr::cayley::eval_p;
use birestr::coords::{decide_equal, eval};
use birestr::munn::{fbr_eval, munn_of_word};
use birestr::parse::{parse_term, parse_word};
use birestr::stephen::{close, is_idempotent, prepare_word};
use birestr::{BiTerm, FfbrElement};

use crate::config::{CliConfig, Format};
use crate::record::{positive_text, DecideRecord, ElementRecord};
use crate::suites::{self, Suite};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn verdict(output: String, verdict: bool) -> Self {
        Outcome { output, code: if verdict { EXIT_TRUE } else { EXIT_FALSE } }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Model {
    /// Coordinates `E(ℐ) ⋊ X*` for the configured variety.
    #[default]
    Coords,
    /// Twin-closed Cayley subgraphs (perfect variety only).
    Cayley,
    /// Munn-tree coordinates of the free birestriction monoid.
    Fbr,
}

fn term(text: &str, config: &CliConfig) -> Result<BiTerm> {
    parse_term(text, &config.alphabet).with_context(|| format!("cannot parse term `{text}`"))
}

fn write_file(path: &Option<std::path::PathBuf>, contents: &str) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, contents).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn element_text(e: &FfbrElement, config: &CliConfig) -> String {
    let graph = String::from_utf8_lossy(&e.graph.canonical_serialize(&config.alphabet)).into_owned();
    format!("u {}\n{graph}", positive_text(&e.u, &config.alphabet))
}

pub fn cmd_decide(t1: &str, t2: &str, config: &CliConfig) -> Result<Outcome> {
    let (a, b) = (term(t1, config)?, term(t2, config)?);
    let ctx = config.context();
    let equal = decide_equal(&a, &b, &ctx)?;
    let output = match config.format {
        Format::Text => format!("{}\n", if equal { "equal" } else { "unequal" }),
        Format::Json => {
            let (ea, eb) = (eval(&a, &ctx)?, eval(&b, &ctx)?);
            json(&DecideRecord {
                variety: config.variety.name().to_owned(),
                left: ElementRecord::new(&ea, config.variety, &config.alphabet),
                right: ElementRecord::new(&eb, config.variety, &config.alphabet),
                verdicts: BTreeMap::from([("equal".to_owned(), equal)]),
            })?
        }
    };
    Ok(Outcome::verdict(output, equal))
}

pub fn cmd_closure(word: &str, config: &CliConfig) -> Result<Outcome> {
    let w = parse_word(word, &config.alphabet).with_context(|| format!("cannot parse word `{word}`"))?;
    let input = linear_graph(&prepare_word(&w, config.variety));
    let (closed, trace) = close(&input, config.variety, config.budget)?;
    write_file(&config.dot, &closed.to_dot(&config.alphabet))?;
    write_file(&config.trace, &trace.to_text(&config.alphabet))?;
    let bytes = closed.canonical_serialize(&config.alphabet);
    let output = match config.format {
        Format::Text => format!(
            "{}trace {} events ({} expansions)\n",
            String::from_utf8_lossy(&bytes),
            trace.len(),
            trace.expansions()
        ),
        Format::Json => json(&serde_json::json!({
            "variety": config.variety.name(),
            "graph": hex::encode(&bytes),
            "vertices": closed.vertex_count(),
            "edges": closed.edge_count(),
            "trace_events": trace.len(),
            "expansions": trace.expansions(),
        }))?,
    };
    Ok(Outcome { output, code: EXIT_TRUE })
}

pub fn cmd_idempotent(word: &str, config: &CliConfig) -> Result<Outcome> {
    let w = parse_word(word, &config.alphabet).with_context(|| format!("cannot parse word `{word}`"))?;
    let verdict = is_idempotent(&w, config.variety, config.budget)?;
    let output = match config.format {
        Format::Text => format!("{verdict}\n"),
        Format::Json => json(&serde_json::json!({
            "variety": config.variety.name(),
            "word": format!("{}", config.alphabet.show(&w)),
            "verdicts": { "idempotent": verdict },
        }))?,
    };
    Ok(Outcome::verdict(output, verdict))
}

pub fn cmd_eval(text: &str, model: Model, config: &CliConfig) -> Result<Outcome> {
    let t = term(text, config)?;
    let output = match model {
        Model::Coords => {
            let e = eval(&t, &config.context())?;
            write_file(&config.dot, &e.graph.to_dot(&config.alphabet))?;
            match config.format {
                Format::Text => element_text(&e, config),
                Format::Json => json(
                    &ElementRecord::new(&e, config.variety, &config.alphabet).with("valid", e.is_valid(config.variety)),
                )?,
            }
        }
        Model::Cayley => {
            let e = eval_p(&t);
            write_file(&config.dot, &e.gamma.to_dot(&config.alphabet))?;
            let graph = e.gamma.serialize(&config.alphabet);
            match config.format {
                Format::Text => format!("u {}\n{graph}", positive_text(&e.u, &config.alphabet)),
                Format::Json => json(&serde_json::json!({
                    "variety": "p",
                    "u": positive_text(&e.u, &config.alphabet),
                    "graph": hex::encode(graph.as_bytes()),
                    "verdicts": { "valid": e.is_valid() },
                }))?,
            }
        }
        Model::Fbr => {
            let e = fbr_eval(&t);
            let tree = e.munn_tree();
            write_file(&config.dot, &tree.to_dot(&config.alphabet))?;
            let text = tree.serialize(&config.alphabet);
            match config.format {
                Format::Text => format!("u {}\n{text}", positive_text(&e.u, &config.alphabet)),
                Format::Json => json(&serde_json::json!({
                    "variety": "fbr",
                    "u": positive_text(&e.u, &config.alphabet),
                    "graph": hex::encode(text.as_bytes()),
                    "verdicts": { "valid": e.is_valid() },
                }))?,
            }
        }
    };
    Ok(Outcome { output, code: EXIT_TRUE })
}

pub fn cmd_munn(word: &str, config: &CliConfig) -> Result<Outcome> {
    let w = parse_word(word, &config.alphabet).with_context(|| format!("cannot parse word `{word}`"))?;
    let tree = munn_of_word(&w)?;
    write_file(&config.dot, &tree.to_dot(&config.alphabet))?;
    Ok(Outcome { output: tree.serialize(&config.alphabet), code: EXIT_TRUE })
}

pub fn cmd_suite(name: &str, config: &CliConfig) -> Result<Outcome> {
    let suite: Suite = name.parse()?;
    let report = suites::run(suite, config)?;
    let output = match config.format {
        Format::Text => report.to_text(),
        Format::Json => json(&report)?,
    };
    Ok(Outcome::verdict(output, report.all_passed()))
}

/// Both perfect models on one pair, or the seeded random comparison.
pub fn cmd_crosscheck(pair: Option<(&str, &str)>, config: &CliConfig) -> Result<Outcome> {
    match pair {
        Some((l, r)) => {
            let (a, b) = (term(l, config)?, term(r, config)?);
            let equal = birestr::cayley::crosscheck(&a, &b, &config.context(), &config.alphabet)?;
            let output = match config.format {
                Format::Text => format!("{} (both models)\n", if equal { "equal" } else { "unequal" }),
                Format::Json => json(&serde_json::json!({
                    "variety": "p",
                    "verdicts": { "equal": equal, "agree": true },
                }))?,
            };
            Ok(Outcome::verdict(output, equal))
        }
        None => cmd_suite(Suite::PerfectCrosscheck.name(), config),
    }
}
