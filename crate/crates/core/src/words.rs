//! Numerical non-freeness probe: enumerate reduced words in a set of float
//! generators and look for one that lands near `+-I`.
//!
//! `ok = false` means the group is numerically indistinguishable from one with a
//! relation of that length at precision `epsilon`. `ok = true` proves nothing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmat::FMat2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordCheck {
    pub ok: bool,
    pub witness: Option<String>,
    pub words_checked: u64,
}

/// Number of nonempty freely reduced words of length at most `max_len` in `k` letters
/// (`k` = generators plus inverses), saturating.
pub fn reduced_word_count(letters: u64, max_len: usize) -> u64 {
    if letters == 0 {
        return 0;
    }
    let mut total = 0u64;
    let mut level = letters;
    for _ in 0..max_len {
        total = total.saturating_add(level);
        level = level.saturating_mul(letters - 1);
    }
    total
}

/// Letter for generator `i` (lowercase) or its inverse (uppercase).
fn letter(i: usize, inverse: bool) -> char {
    let c = (b'a' + i as u8) as char;
    if inverse { c.to_ascii_uppercase() } else { c }
}

/// Breadth-first over reduced words, so a witness is always a shortest one; within a
/// length the order is `a, A, b, B, ...` lexicographic. Generators must have det 1.
pub fn word_heuristic(generators: &[FMat2], max_len: usize, epsilon: f64, cap: u64) -> Result<WordCheck> {
    if max_len == 0 || !(epsilon > 0.0) {
        return Err(Error::InvalidConfig("word heuristic needs L >= 1 and epsilon > 0".into()));
    }
    if generators.len() > 26 {
        return Err(Error::InvalidConfig("at most 26 generators can be named".into()));
    }
    let count = reduced_word_count(2 * generators.len() as u64, max_len);
    if count > cap {
        return Err(Error::CombinatorialBlowup { cap });
    }
    let letters: Vec<FMat2> = generators.iter().flat_map(|g| [*g, g.adjugate()]).collect();
    let near_central = |m: &FMat2| {
        m.dist(&FMat2::IDENTITY) <= epsilon || m.dist(&FMat2::IDENTITY.neg()) <= epsilon
    };
    let name = |word: &[usize]| -> String { word.iter().map(|&l| letter(l / 2, l % 2 == 1)).collect() };

    let mut frontier: Vec<(FMat2, Vec<usize>)> = vec![(FMat2::IDENTITY, Vec::new())];
    let mut checked = 0u64;
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * letters.len().saturating_sub(1).max(1));
        for (m, word) in &frontier {
            for (l, g) in letters.iter().enumerate() {
                if word.last().is_some_and(|&prev| prev ^ 1 == l) {
                    continue;
                }
                let prod = *m * *g;
                let mut w = word.clone();
                w.push(l);
                checked += 1;
                if near_central(&prod) {
                    return Ok(WordCheck { ok: false, witness: Some(name(&w)), words_checked: checked });
                }
                next.push((prod, w));
            }
        }
        frontier = next;
    }
    Ok(WordCheck { ok: true, witness: None, words_checked: checked })
}
