//! Reduced words in a finite generating set and a torsion screening pass
//! over a word ball.

use std::fmt::Write as _;

use exact_core::rat;
use quaternion::Quaternion;

use crate::order::OrderError;
use crate::torsion::{torsion_certificate, TorsionCertificate};

/// One letter of a word: a generator index together with an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    /// Index into the generator list.
    pub generator: usize,
    /// Whether the letter stands for the inverse of the generator.
    pub inverse: bool,
}

impl Letter {
    /// True when `other` cancels this letter exactly.
    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Renders a word as `g1*g2^-1*g1`; the empty word renders as `1`.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (k, letter) in word.iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        write!(out, "g{}", letter.generator + 1).unwrap();
        if letter.inverse {
            out.push_str("^-1");
        }
    }
    out
}

/// Enumerates all nonempty reduced words of length at most `radius` in the
/// given generators, together with their evaluations.
///
/// A word is reduced when no letter is immediately followed by its inverse.
/// Words are listed by length, then lexicographically by
/// `(generator, inverse)`, so the output order is deterministic.
pub fn word_ball(
    gens: &[Quaternion],
    radius: usize,
) -> Result<Vec<(Vec<Letter>, Quaternion)>, OrderError> {
    let mut inverses = Vec::with_capacity(gens.len());
    for g in gens {
        inverses.push(g.inverse()?);
    }
    let letter_value = |letter: &Letter| -> Quaternion {
        if letter.inverse {
            inverses[letter.generator].clone()
        } else {
            gens[letter.generator].clone()
        }
    };

    let mut alphabet = Vec::with_capacity(2 * gens.len());
    for generator in 0..gens.len() {
        for inverse in [false, true] {
            alphabet.push(Letter { generator, inverse });
        }
    }

    let mut ball = Vec::new();
    // Frontier of words of the current length.
    let mut frontier: Vec<(Vec<Letter>, Quaternion)> = Vec::new();
    for letter in &alphabet {
        frontier.push((vec![*letter], letter_value(letter)));
    }
    for _ in 0..radius {
        ball.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for (word, value) in &frontier {
            let last = word.last().expect("frontier words are nonempty");
            for letter in &alphabet {
                if last.cancels(letter) {
                    continue;
                }
                let mut longer = word.clone();
                longer.push(*letter);
                next.push((longer, value.clone() * letter_value(letter)));
            }
        }
        frontier = next;
    }
    // The loop pushes one extra frontier beyond the radius; drop it by
    // keeping only words of length <= radius.
    ball.retain(|(word, _)| word.len() <= radius);
    Ok(ball)
}

/// Result of screening a word ball for torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionScreen {
    /// No non-identity element of the ball has finite order.
    Clean {
        /// Number of non-identity words examined.
        words_checked: usize,
    },
    /// A word evaluating to a finite-order element distinct from 1.
    TorsionFound {
        /// The first offending word in enumeration order.
        word: Vec<Letter>,
        /// The order of its evaluation.
        order: u32,
    },
}

/// Screens every nonempty reduced word of length at most `radius` for
/// torsion.
///
/// Words that evaluate to 1 exhibit relations, not torsion, and are skipped;
/// any other evaluation of finite order (including -1) is reported. All
/// generators must have reduced norm 1.
pub fn torsion_screening(
    gens: &[Quaternion],
    radius: usize,
) -> Result<TorsionScreen, OrderError> {
    for g in gens {
        let norm = g.reduced_norm();
        if norm != rat(1) {
            return Err(OrderError::NotNormOne(exact_core::format_rational(&norm)));
        }
    }
    let mut words_checked = 0;
    for (word, value) in word_ball(gens, radius)? {
        if value == value.algebra().one() {
            continue;
        }
        words_checked += 1;
        if let TorsionCertificate::Torsion { order } = torsion_certificate(&value)? {
            return Ok(TorsionScreen::TorsionFound { word, order });
        }
    }
    Ok(TorsionScreen::Clean { words_checked })
}
