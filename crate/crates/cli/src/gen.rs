//! Seeded random inputs for the suites.

use birestr::{BiTerm, Label, Letter, SignedLetter, SignedWord};
use rand::Rng;

/// A term with exactly `size` nodes over the first `letters` generators.
pub fn term_of_size<R: Rng>(rng: &mut R, letters: u32, size: usize) -> BiTerm {
    if size <= 1 {
        return if rng.gen_ratio(1, 6) { BiTerm::One } else { BiTerm::Gen(Letter(rng.gen_range(0..letters))) };
    }
    match rng.gen_range(0..6) {
        0..=2 if size >= 3 => {
            let left = rng.gen_range(1..size - 1);
            BiTerm::mul(term_of_size(rng, letters, left), term_of_size(rng, letters, size - 1 - left))
        }
        0 | 3 => BiTerm::star(term_of_size(rng, letters, size - 1)),
        1 | 4 => BiTerm::plus(term_of_size(rng, letters, size - 1)),
        _ => BiTerm::max(term_of_size(rng, letters, size - 1)),
    }
}

/// A term of size between 1 and `max_size`.
pub fn term<R: Rng>(rng: &mut R, letters: u32, max_size: usize) -> BiTerm {
    let size = rng.gen_range(1..=max_size.max(1));
    term_of_size(rng, letters, size)
}

pub fn positive<R: Rng>(rng: &mut R, letters: u32, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Letter(rng.gen_range(0..letters))).collect()
}

/// A word over `X ∪ X⁻¹`.
pub fn plain_word<R: Rng>(rng: &mut R, letters: u32, max_len: usize) -> SignedWord {
    let len = rng.gen_range(0..=max_len);
    SignedWord(
        (0..len)
            .map(|_| SignedLetter { label: Label::Plain(Letter(rng.gen_range(0..letters))), inverse: rng.gen() })
            .collect(),
    )
}

fn extended_label<R: Rng>(rng: &mut R, letters: u32, bar_len: usize) -> Label {
    if rng.gen_bool(0.4) {
        Label::Plain(Letter(rng.gen_range(0..letters)))
    } else {
        let len = rng.gen_range(1..=bar_len.max(1));
        let w: Vec<Letter> = (0..len).map(|_| Letter(rng.gen_range(0..letters))).collect();
        Label::barred(&w).expect("nonempty")
    }
}

/// A word over `X ∪ X̄⁺ ∪` inverses, barred letters of length at most `bar_len`.
pub fn extended_word<R: Rng>(rng: &mut R, letters: u32, bar_len: usize, max_len: usize) -> SignedWord {
    let len = rng.gen_range(0..=max_len);
    SignedWord((0..len).map(|_| SignedLetter { label: extended_label(rng, letters, bar_len), inverse: rng.gen() }).collect())
}

/// A word with trivial group value built from nested blocks
/// `a₁ v₁ b₁⁻¹ a₂ v₂ b₂⁻¹ ⋯`, where `aᵢ` and `bᵢ` are letters with the same
/// group value (plain or barred in any mix) and each `vᵢ` has the same shape.
pub fn balanced_blocks<R: Rng>(rng: &mut R, letters: u32, bar_len: usize, depth: usize) -> SignedWord {
    let mut out = Vec::new();
    let blocks = rng.gen_range(1..=2);
    for _ in 0..blocks {
        let a = extended_label(rng, letters, bar_len);
        let b = twin(rng, &a);
        let flip = rng.gen_bool(0.3);
        out.push(SignedLetter { label: a, inverse: flip });
        if depth > 0 && rng.gen_bool(0.6) {
            out.extend(balanced_blocks(rng, letters, bar_len, depth - 1).0);
        }
        out.push(SignedLetter { label: b, inverse: !flip });
    }
    SignedWord(out)
}

/// A letter spelling the same positive word, chosen plain or barred.
fn twin<R: Rng>(rng: &mut R, a: &Label) -> Label {
    let spelling = a.spelling();
    if spelling.len() == 1 && rng.gen_bool(0.5) {
        Label::Plain(spelling[0])
    } else {
        Label::barred(spelling).expect("nonempty")
    }
}

/// A random word over a single letter `x` (plain and barred powers up to
/// `bar_len`) followed by a correction making the group value trivial.
pub fn balanced_unary<R: Rng>(rng: &mut R, bar_len: usize, max_len: usize) -> SignedWord {
    let x = Letter(0);
    let mut w = extended_word(rng, 1, bar_len, max_len).0;
    let mut exponent: i64 = w.iter().map(|l| l.label.spelling().len() as i64 * if l.inverse { -1 } else { 1 }).sum();
    while exponent != 0 {
        let k = (rng.gen_range(1..=bar_len.max(1)) as i64).min(exponent.abs());
        let bar: Vec<Letter> = vec![x; k as usize];
        let label = if k == 1 && rng.gen_bool(0.5) { Label::Plain(x) } else { Label::barred(&bar).expect("nonempty") };
        w.push(SignedLetter { label, inverse: exponent > 0 });
        exponent -= k * exponent.signum();
    }
    SignedWord(w)
}
