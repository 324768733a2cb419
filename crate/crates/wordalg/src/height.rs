//! n-divisibility witnesses, minimal height decompositions over a word set,
//! and an exhaustive survey of both at small scale.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::words::{words_of_length, Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("survey needs n ≥ 2")]
    SmallN,
    #[error("survey would enumerate {0} words, over the {1}-word budget")]
    TooLarge(u64, u64),
}

/// Two word parts compare at their first differing letter; when one is a
/// prefix of the other there is no strict comparison.
fn part_order(u: &[u8], v: &[u8]) -> Option<Ordering> {
    for (a, b) in u.iter().zip(v) {
        if a != b {
            return Some(a.cmp(b));
        }
    }
    (u.len() == v.len()).then_some(Ordering::Equal)
}

/// A factorization w = prefix · parts[0] ⋯ parts[n−1] with the parts
/// strictly decreasing at their first differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityWitness {
    pub prefix: Word,
    pub parts: Vec<Word>,
}

impl DivisibilityWitness {
    pub fn validate(&self, w: &Word, n: usize) -> bool {
        if self.parts.len() != n || self.parts.iter().any(|p| p.is_empty()) {
            return false;
        }
        let mut rebuilt = self.prefix.clone();
        for part in &self.parts {
            rebuilt = rebuilt.concat(part);
        }
        rebuilt == *w
            && self
                .parts
                .windows(2)
                .all(|pair| part_order(pair[0].ranks(), pair[1].ranks()) == Some(Ordering::Greater))
    }
}

fn search_parts(
    letters: &[u8],
    prev_start: usize,
    pos: usize,
    remaining: usize,
    failed: &mut BTreeSet<(usize, usize, usize)>,
) -> Option<Vec<usize>> {
    if remaining == 0 {
        return (pos == letters.len()).then(Vec::new);
    }
    if letters.len() - pos < remaining || failed.contains(&(prev_start, pos, remaining)) {
        return None;
    }
    for end in pos + 1..=letters.len() {
        if part_order(&letters[prev_start..pos], &letters[pos..end]) == Some(Ordering::Greater) {
            if let Some(rest) = search_parts(letters, pos, end, remaining - 1, failed) {
                let mut cuts = vec![end];
                cuts.extend(rest);
                return Some(cuts);
            }
        }
    }
    failed.insert((prev_start, pos, remaining));
    None
}

/// Searches for a prefix followed by n consecutive strictly decreasing
/// parts covering all of w. The first witness in (shortest prefix, shortest
/// first part, …) order is returned.
pub fn is_n_divisible(w: &Word, n: usize) -> Option<DivisibilityWitness> {
    assert!(n >= 1, "divisibility needs n ≥ 1");
    let letters = w.ranks();
    if letters.len() < n {
        return None;
    }
    let mut failed = BTreeSet::new();
    for start in 0..=letters.len() - n {
        for end in start + 1..=letters.len() {
            if let Some(rest) = search_parts(letters, start, end, n - 1, &mut failed) {
                let mut cuts = vec![start, end];
                cuts.extend(rest);
                let parts = cuts
                    .windows(2)
                    .map(|pair| w.slice(pair[0], pair[1]))
                    .collect();
                return Some(DivisibilityWitness { prefix: w.slice(0, start), parts });
            }
        }
    }
    None
}

/// w = base₁^e₁ ⋯ base_h^e_h with every base drawn from the set; h is the
/// height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightDecomposition {
    pub blocks: Vec<(Word, usize)>,
}

impl HeightDecomposition {
    pub fn height(&self) -> usize {
        self.blocks.len()
    }

    pub fn validate(&self, w: &Word, allowed: &[Word]) -> bool {
        let mut rebuilt = Word::empty();
        for (base, exponent) in &self.blocks {
            if *exponent == 0 || !allowed.contains(base) {
                return false;
            }
            for _ in 0..*exponent {
                rebuilt = rebuilt.concat(base);
            }
        }
        rebuilt == *w
    }
}

/// Minimal-height decomposition of w into powers of words from `allowed`,
/// found by shortest-path search over positions; absent when w is not a
/// product of allowed words.
pub fn height_over(w: &Word, allowed: &[Word]) -> Option<HeightDecomposition> {
    let letters = w.ranks();
    let length = letters.len();
    let mut best: Vec<Option<usize>> = vec![None; length + 1];
    let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; length + 1];
    best[0] = Some(0);
    for pos in 0..length {
        let Some(cost) = best[pos] else {
            continue;
        };
        for (base_index, base) in allowed.iter().enumerate() {
            if base.is_empty() {
                continue;
            }
            let step = base.len();
            let mut end = pos;
            let mut exponent = 0;
            while end + step <= length && letters[end..end + step] == *base.ranks() {
                end += step;
                exponent += 1;
                if best[end].map_or(true, |old| cost + 1 < old) {
                    best[end] = Some(cost + 1);
                    parent[end] = Some((pos, base_index, exponent));
                }
            }
        }
    }
    best[length]?;
    let mut blocks = Vec::new();
    let mut at = length;
    while at > 0 {
        let (from, base_index, exponent) = parent[at].expect("reached positions have parents");
        blocks.push((allowed[base_index].clone(), exponent));
        at = from;
    }
    blocks.reverse();
    Some(HeightDecomposition { blocks })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub length: usize,
    pub words: u64,
    pub divisible: u64,
    pub max_height: usize,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: usize,
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    pub fn max_height(&self) -> usize {
        self.rows.iter().map(|r| r.max_height).max().unwrap_or(0)
    }
}

impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>6}  {:>8}  {:>12}  {:>10}  witness",
            "length", "words", "divisible", "max-height"
        )?;
        for row in &self.rows {
            let witness = if row.witness.is_empty() { "ε" } else { &row.witness };
            writeln!(
                f,
                "{:>6}  {:>8}  {:>12}  {:>10}  {}",
                row.length, row.words, row.divisible, row.max_height, witness
            )?;
        }
        Ok(())
    }
}

const SURVEY_BUDGET: u64 = 4_000_000;

/// For every length up to max_len: counts words and n-divisible words, and
/// reports the largest minimal height of a non-divisible word over the set
/// of all words of length at most n−1.
pub fn height_survey(
    alphabet: &Alphabet,
    n: usize,
    max_len: usize,
) -> Result<SurveyReport, HeightError> {
    if n < 2 {
        return Err(HeightError::SmallN);
    }
    let mut total = 0u64;
    let mut per_level = 1u64;
    for _ in 0..=max_len {
        total = total.saturating_add(per_level);
        per_level = per_level.saturating_mul(alphabet.len() as u64);
    }
    if total > SURVEY_BUDGET {
        return Err(HeightError::TooLarge(total, SURVEY_BUDGET));
    }
    let allowed: Vec<Word> = (1..n)
        .flat_map(|len| words_of_length(alphabet, len))
        .collect();
    let mut rows = Vec::new();
    for length in 0..=max_len {
        let mut words = 0;
        let mut divisible = 0;
        let mut max_height = 0;
        let mut witness = String::new();
        let mut saw_plain = false;
        for w in words_of_length(alphabet, length) {
            words += 1;
            if is_n_divisible(&w, n).is_some() {
                divisible += 1;
                continue;
            }
            let decomposition = height_over(&w, &allowed)
                .expect("single letters are allowed, so every word decomposes");
            if !saw_plain || decomposition.height() > max_height {
                saw_plain = true;
                max_height = decomposition.height();
                witness = alphabet.format(&w);
            }
        }
        rows.push(SurveyRow { length, words, divisible, max_height, witness });
    }
    Ok(SurveyReport { n, rows })
}
