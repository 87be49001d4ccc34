//! Seeded invariant suites. Every suite is a pure function of the config.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use birestr::automaton::linear_graph;
use birestr::cayley::crosscheck;
use birestr::coords::decide_equal;
use birestr::identity::{check_identity, Scheme};
use birestr::munn::{d_term, fbr_equal, munn_of_word, psi_fi};
use birestr::oracle::{neighbours, oracle_equal_with, Limits, Verdict};
use birestr::parse::{parse_term, parse_word};
use birestr::stephen::{close, close_with, is_idempotent, replay};
use birestr::{Alphabet, BiTerm, Error, Label, Letter, SignedLetter, SignedWord, Variety};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::CliConfig;
use crate::gen;
use crate::record::SuiteReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Dmap,
    Oracle,
    Confluence,
    Eunitary,
    PerfectCrosscheck,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Identities, Suite::Dmap, Suite::Oracle, Suite::Confluence, Suite::Eunitary, Suite::PerfectCrosscheck];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Dmap => "dmap",
            Suite::Oracle => "oracle",
            Suite::Confluence => "confluence",
            Suite::Eunitary => "eunitary",
            Suite::PerfectCrosscheck => "perfect-crosscheck",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match Suite::ALL.into_iter().find(|x| x.name() == s) {
            Some(x) => Ok(x),
            None => bail!(
                "unknown suite `{s}` (expected one of {})",
                Suite::ALL.map(Suite::name).join(", ")
            ),
        }
    }
}

/// Sample counts for the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub substitutions: usize,
    pub dmap_words: usize,
    pub oracle_pairs: usize,
    pub confluence_inputs: usize,
    pub shuffles: usize,
    pub eunitary_words: usize,
    pub crosscheck_pairs: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes {
            substitutions: 200,
            dmap_words: 100,
            oracle_pairs: 50,
            confluence_inputs: 20,
            shuffles: 10,
            eunitary_words: 100,
            crosscheck_pairs: 500,
        }
    }
}

pub fn run(suite: Suite, config: &CliConfig) -> Result<SuiteReport> {
    run_sized(suite, config, Sizes::default())
}

pub fn run_sized(suite: Suite, config: &CliConfig, sizes: Sizes) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match suite {
        Suite::Identities => identities(config, sizes.substitutions, &mut rng),
        Suite::Dmap => dmap(config, sizes.dmap_words, &mut rng),
        Suite::Oracle => oracle(config, sizes.oracle_pairs, &mut rng),
        Suite::Confluence => confluence(config, sizes.confluence_inputs, sizes.shuffles, &mut rng),
        Suite::Eunitary => eunitary(config, sizes.eunitary_words, &mut rng),
        Suite::PerfectCrosscheck => perfect_crosscheck(config, sizes.crosscheck_pairs, &mut rng),
    }
}

fn show_all(alphabet: &Alphabet, terms: &[BiTerm]) -> String {
    terms.iter().map(|t| format!("{}", alphabet.show(t))).collect::<Vec<_>>().join(" ; ")
}

fn substitution(rng: &mut ChaCha8Rng, letters: u32) -> Vec<BiTerm> {
    (0..3).map(|_| gen::term(rng, letters, 6)).collect()
}

fn identities(config: &CliConfig, samples: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let ctx = config.context();
    let letters = config.letter_count();
    let mut report = SuiteReport::new(Suite::Identities.name(), config.variety, config.seed);
    for scheme in Scheme::ALL {
        if scheme.holds_in(config.variety) {
            for i in 0..samples {
                let sub = substitution(rng, letters);
                let ok = check_identity(scheme, &sub, &ctx)?;
                let detail = (!ok).then(|| show_all(&config.alphabet, &sub));
                report.record(format!("{} #{i}", scheme.name()), ok, detail);
            }
        } else {
            // the identity should fail; look for a witness, generators first
            let mut first: Vec<BiTerm> = (0..3).map(|i| BiTerm::Gen(Letter(i % letters))).collect();
            let mut found = None;
            for _ in 0..samples.max(1) {
                if !check_identity(scheme, &first, &ctx)? {
                    found = Some(show_all(&config.alphabet, &first[..scheme.arity()]));
                    break;
                }
                first = substitution(rng, letters);
            }
            let passed = found.is_some();
            report.record(
                format!("{} refuted", scheme.name()),
                passed,
                Some(found.unwrap_or_else(|| "no counterexample found".to_owned())),
            );
        }
    }
    Ok(report)
}

fn idempotent_word(rng: &mut ChaCha8Rng, letters: u32) -> SignedWord {
    let u = gen::plain_word(rng, letters, 3);
    let inv = u.involutive_inverse();
    if rng.gen() {
        u.concat(&inv)
    } else {
        inv.concat(&u)
    }
}

/// `D_{a c⁻¹ b⁻¹ d e f} = ((b c a*)⁺ d e f)*` over `{a, …, f}`.
pub fn d_map_worked_example() -> bool {
    let abc = Alphabet::parse("a,b,c,d,e,f").expect("valid alphabet");
    let w = parse_word("a c' b' d e f", &abc).expect("valid word");
    let expected = parse_term("((b c a^*)^+ d e f)^*", &abc).expect("valid term");
    fbr_equal(&d_term(&w), &expected)
}

fn dmap(config: &CliConfig, samples: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let letters = config.letter_count().min(3);
    let mut report = SuiteReport::new(Suite::Dmap.name(), config.variety, config.seed);
    report.record("worked-example", d_map_worked_example(), None);
    let eq = |a: &SignedWord, b: &SignedWord| fbr_equal(&d_term(a), &d_term(b));
    for i in 0..samples {
        let v = gen::plain_word(rng, letters, 6);
        let u = gen::plain_word(rng, letters, 6);
        let s = gen::plain_word(rng, letters, 3);
        let t = gen::plain_word(rng, letters, 3);
        let w = gen::plain_word(rng, letters, 3);
        let e = idempotent_word(rng, letters);
        let inv = v.involutive_inverse();
        let vv = v.concat(&inv);
        let shown = format!("v = {}", config.alphabet.show(&v));
        let mut check = |name: &str, ok: bool| report.record(format!("{name} #{i}"), ok, (!ok).then(|| shown.clone()));

        check(
            "inverse-range",
            eq(&inv, &vv) && fbr_equal(&d_term(&vv), &BiTerm::plus(d_term(&vv))),
        );
        check(
            "domain",
            eq(&v, &inv.concat(&v)) && fbr_equal(&d_term(&v), &BiTerm::star(d_term(&v))),
        );
        check(
            "idempotent-product",
            fbr_equal(&BiTerm::mul(d_term(&v), d_term(&e)), &d_term(&v.concat(&e))),
        );
        check(
            "cancel",
            fbr_equal(&d_term(&u.concat(&vv)), &BiTerm::mul(d_term(&u), d_term(&inv))),
        );
        // D_{s v v⁻¹ v t} = D_{s v t}, and the equality survives right extension
        let long = s.concat(&v).concat(&inv).concat(&v).concat(&t);
        let short = s.concat(&v).concat(&t);
        check("right-extension", eq(&long, &short) && eq(&long.concat(&w), &short.concat(&w)));
        let psi = psi_fi(&d_term(&v)).ok();
        check("psi", psi.is_some() && psi == munn_of_word(&inv.concat(&v)).ok());
    }
    Ok(report)
}

/// Random walk of up to `steps` rewrites, never exceeding `max_size` nodes.
pub fn derive(t: &BiTerm, variety: Variety, steps: usize, max_size: usize, rng: &mut impl Rng) -> BiTerm {
    let mut cur = t.clone();
    for _ in 0..steps {
        let options: Vec<BiTerm> = neighbours(&cur, variety).into_iter().filter(|n| n.size() <= max_size).collect();
        if options.is_empty() {
            break;
        }
        cur = options[rng.gen_range(0..options.len())].clone();
    }
    cur
}

fn oracle(config: &CliConfig, samples: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let ctx = config.context();
    let v = config.variety;
    let letters = config.letter_count().min(2);
    let limits = Limits { size_slack: 3, max_states: 4_000 };
    let mut report = SuiteReport::new(Suite::Oracle.name(), v, config.seed);
    let x = BiTerm::Gen(Letter(0));
    let left_unit = BiTerm::mul(BiTerm::plus(x.clone()), x.clone());
    report.record(
        "one-step",
        oracle_equal_with(&left_unit, &x, v, 1, limits) == Verdict::Equal,
        None,
    );
    if letters >= 2 {
        let y = BiTerm::Gen(Letter(1));
        let l = BiTerm::mul(BiTerm::max(x.clone()), BiTerm::max(y.clone()));
        let r = BiTerm::max(BiTerm::mul(x, y));
        let verdict = oracle_equal_with(&l, &r, Variety::Free, 6, Limits::default());
        report.record("perfect-underivable-in-free", verdict == Verdict::Unknown, None);
    }
    let mut certified = 0;
    for i in 0..samples {
        let t = gen::term(rng, letters, 7);
        let steps = rng.gen_range(1..=3);
        let walked = derive(&t, v, steps, 10, rng);
        let other = gen::term(rng, letters, 7);
        let pair = show_all(&config.alphabet, &[t.clone(), walked.clone()]);
        report.record(format!("derived #{i}"), decide_equal(&t, &walked, &ctx)?, Some(pair.clone()));
        for (name, r) in [("certified", &walked), ("random", &other)] {
            if oracle_equal_with(&t, r, v, 3, limits) == Verdict::Equal {
                certified += 1;
                let ok = decide_equal(&t, r, &ctx)?;
                report.record(format!("{name} #{i}"), ok, (!ok).then(|| pair.clone()));
            }
        }
    }
    report.record("certifications", certified > 0, Some(format!("{certified} pairs certified")));
    Ok(report)
}

fn picker(rng: &mut ChaCha8Rng) -> impl FnMut(usize) -> usize + '_ {
    move |n| rng.gen_range(0..n.max(1))
}

fn confluence(config: &CliConfig, inputs: usize, shuffles: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let v = config.variety;
    let letters = config.letter_count().min(2);
    let mut report = SuiteReport::new(Suite::Confluence.name(), v, config.seed);
    for i in 0..inputs {
        let w = gen::extended_word(rng, letters, 3, 7);
        let input = linear_graph(&w);
        let (reference, trace) = close(&input, v, config.budget)?;
        let shown = Some(format!("{}", config.alphabet.show(&w)));
        let mut confluent = true;
        for _ in 0..shuffles {
            let (other, _) = close_with(&input, v, config.budget, &mut picker(rng), true)?;
            confluent &= other.iso_check(&reference);
        }
        report.record(format!("confluent #{i}"), confluent, shown.clone());
        let (again, trace2) = close(&reference, v, config.budget)?;
        report.record(format!("idempotent #{i}"), trace2.expansions() == 0 && again.iso_check(&reference), shown.clone());
        report.record(format!("replay #{i}"), replay(&input, v, &trace).iso_check(&reference), shown);
    }
    Ok(report)
}

/// A word over one-letter bars with trivial group value: a random prefix
/// followed by its group inverse, each letter plain or barred at random.
fn balanced_general(rng: &mut ChaCha8Rng, letters: u32) -> SignedWord {
    let w = gen::extended_word(rng, letters, 1, 6);
    let back = w.group_value().inverse();
    let tail = back.letters().iter().map(|g| {
        let label = if rng.gen() { Label::Plain(g.letter) } else { Label::Barred(birestr::BarredLabel::single(g.letter)) };
        SignedLetter { label, inverse: g.inverse }
    });
    SignedWord(w.0.iter().cloned().chain(tail).collect())
}

fn eunitary(config: &CliConfig, samples: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let v = config.variety;
    if v == Variety::Free {
        bail!("the free variety is not E-unitary: try `idempotent --variety free --alphabet x \"[x] [xx]' [x]\"`");
    }
    let mut report = SuiteReport::new(Suite::Eunitary.name(), v, config.seed);
    for i in 0..samples {
        let (blocks, general) = if v == Variety::P {
            let letters = config.letter_count().min(2);
            (gen::balanced_blocks(rng, letters, 1, 2), balanced_general(rng, letters))
        } else {
            (gen::balanced_blocks(rng, 1, 2, 2), gen::balanced_unary(rng, 3, 6))
        };
        for (name, w) in [("blocks", blocks), ("general", general)] {
            debug_assert!(w.group_value().is_identity());
            let ok = is_idempotent(&w, v, config.budget)?;
            report.record(format!("{name} #{i}"), ok, (!ok).then(|| format!("{}", config.alphabet.show(&w))));
        }
    }
    Ok(report)
}

fn perfect_crosscheck(config: &CliConfig, pairs: usize, rng: &mut ChaCha8Rng) -> Result<SuiteReport> {
    let ctx = config.context();
    let letters = config.letter_count().min(2);
    let mut report = SuiteReport::new(Suite::PerfectCrosscheck.name(), Variety::P, config.seed);
    let mut equal = 0;
    for i in 0..pairs {
        let t1 = gen::term(rng, letters, 12);
        let t2 = if i % 2 == 0 {
            gen::term(rng, letters, 12)
        } else {
            let steps = rng.gen_range(1..=3);
            derive(&t1, Variety::P, steps, 12, rng)
        };
        match crosscheck(&t1, &t2, &ctx, &config.alphabet) {
            Ok(verdict) => {
                equal += usize::from(verdict);
                report.record(format!("pair #{i}"), true, None);
            }
            Err(e @ Error::Discrepancy { .. }) => report.record(format!("pair #{i}"), false, Some(e.to_string())),
            Err(e) => return Err(e.into()),
        }
    }
    report.record("equal-pairs-seen", equal > 0, Some(format!("{equal} of {pairs} pairs equal")));
    Ok(report)
}
