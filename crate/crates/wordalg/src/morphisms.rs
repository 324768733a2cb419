//! Letter-to-word substitutions, k-power-freeness scanning, fixed-point
//! iteration, and the finite square-freeness certificates for morphisms.

use thiserror::Error;

use crate::textio::{content_lines, ParseError};
use crate::words::{words_up_to, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("need exactly one image per source letter")]
    ImageCount,
    #[error("images must be nonempty")]
    EmptyImage,
    #[error("image uses a letter outside the target alphabet")]
    ImageLetter,
    #[error("word uses a letter outside the source alphabet")]
    UnknownLetter,
    #[error("iteration needs source and target alphabets to coincide")]
    NotEndomorphism,
    #[error("the seed's image must start with the seed")]
    NonProlongable,
    #[error("iteration stalled below the requested length")]
    Stalled,
}

/// A substitution sending each source letter to a nonempty word over the
/// target alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self, MorphError> {
        if images.len() != source.len() {
            return Err(MorphError::ImageCount);
        }
        if images.iter().any(|im| im.is_empty()) {
            return Err(MorphError::EmptyImage);
        }
        let bound = target.len() as u8;
        if images
            .iter()
            .any(|im| im.ranks().iter().any(|&r| r >= bound))
        {
            return Err(MorphError::ImageLetter);
        }
        Ok(Morphism { source, target, images })
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, letter: char) -> Option<&Word> {
        self.source.rank(letter).map(|r| &self.images[r as usize])
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }
}

/// a ↦ ab, b ↦ ba
pub fn thue_binary() -> Morphism {
    let ab = Alphabet::new("ab").unwrap();
    let images = vec![ab.word("ab").unwrap(), ab.word("ba").unwrap()];
    Morphism::new(ab.clone(), ab, images).unwrap()
}

/// a ↦ abcab, b ↦ acabcb, c ↦ acbcacb
pub fn thue_ternary() -> Morphism {
    let abc = Alphabet::new("abc").unwrap();
    let images = vec![
        abc.word("abcab").unwrap(),
        abc.word("acabcb").unwrap(),
        abc.word("acbcacb").unwrap(),
    ];
    Morphism::new(abc.clone(), abc, images).unwrap()
}

pub fn apply_morphism(phi: &Morphism, w: &Word) -> Result<Word, MorphError> {
    let bound = phi.source.len() as u8;
    let mut out = Vec::new();
    for &r in w.ranks() {
        if r >= bound {
            return Err(MorphError::UnknownLetter);
        }
        out.extend_from_slice(phi.images[r as usize].ranks());
    }
    Ok(Word::from_ranks(out))
}

/// A factor u^k at `start` with |u| = `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerOccurrence {
    pub start: usize,
    pub period: usize,
}

/// None iff w has no factor u^k with u nonempty; otherwise the earliest
/// occurrence, shortest period first.
pub fn is_power_free(w: &Word, k: usize) -> Option<PowerOccurrence> {
    assert!(k >= 2, "powers start at squares");
    let letters = w.ranks();
    for start in 0..letters.len() {
        let longest = (letters.len() - start) / k;
        for period in 1..=longest {
            let repeats = &letters[start..start + k * period];
            if (period..k * period).all(|i| repeats[i] == repeats[i - period]) {
                return Some(PowerOccurrence { start, period });
            }
        }
    }
    None
}

/// The shortest iterate φ^j(seed) with length ≥ min_len, starting from
/// φ⁰(seed) = seed. Needs φ to be an endomorphism whose image of the seed
/// starts with the seed.
pub fn iterate_fixed_point(phi: &Morphism, seed: char, min_len: usize) -> Result<Word, MorphError> {
    if phi.source != phi.target {
        return Err(MorphError::NotEndomorphism);
    }
    let rank = phi.source.rank(seed).ok_or(MorphError::UnknownLetter)?;
    let image = &phi.images[rank as usize];
    if image.ranks().first() != Some(&rank) {
        return Err(MorphError::NonProlongable);
    }
    let mut current = Word::from_ranks(vec![rank]);
    while current.len() < min_len {
        let advanced = apply_morphism(phi, &current)?;
        if advanced.len() == current.len() {
            return Err(MorphError::Stalled);
        }
        current = advanced;
    }
    Ok(current)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thue3Report {
    /// images of all square-free source words of length ≤ 3 are square-free
    pub cond1: bool,
    /// no letter's image is a factor of a different letter's image
    pub cond2: bool,
}

fn is_factor(needle: &Word, haystack: &Word) -> bool {
    if needle.len() > haystack.len() {
        return false;
    }
    (0..=haystack.len() - needle.len())
        .any(|i| &haystack.ranks()[i..i + needle.len()] == needle.ranks())
}

pub fn check_thue3_conditions(phi: &Morphism) -> Thue3Report {
    let cond1 = words_up_to(&phi.source, 3)
        .filter(|w| is_power_free(w, 2).is_none())
        .all(|w| {
            let image = apply_morphism(phi, &w).expect("word is over the source");
            is_power_free(&image, 2).is_none()
        });
    let n = phi.images.len();
    let cond2 = (0..n).all(|a| {
        (0..n).all(|b| a == b || !is_factor(&phi.images[a], &phi.images[b]))
    });
    Thue3Report { cond1, cond2 }
}

/// k = max(3, 1 + ⌊(M−3)/m⌋) for M/m the extreme image lengths;
/// square_free is the exhaustive check over square-free source words of
/// length ≤ k, which by Crochemore's criterion certifies the morphism.
pub fn crochemore_test(phi: &Morphism) -> (usize, bool) {
    let longest = phi.images.iter().map(Word::len).max().expect("images nonempty") as i64;
    let shortest = phi.images.iter().map(Word::len).min().expect("images nonempty") as i64;
    let k = 3.max(1 + (longest - 3).div_euclid(shortest)) as usize;
    let square_free = words_up_to(&phi.source, k)
        .filter(|w| is_power_free(w, 2).is_none())
        .all(|w| {
            let image = apply_morphism(phi, &w).expect("word is over the source");
            is_power_free(&image, 2).is_none()
        });
    (k, square_free)
}

/// Lines `letter -> image`; source and target alphabets are inferred,
/// sorted, from the rule letters and image letters.
pub fn parse_morphism(text: &str) -> Result<Morphism, ParseError> {
    let mut rules: Vec<(usize, char, &str)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(ParseError::new(line_no, 1, "expected `letter -> image`"));
        };
        let lhs = lhs.trim();
        let rhs = rhs.trim();
        let mut lhs_chars = lhs.chars();
        let letter = match (lhs_chars.next(), lhs_chars.next()) {
            (Some(c), None) if c.is_ascii_alphabetic() => c,
            _ => {
                return Err(ParseError::new(
                    line_no,
                    1,
                    "rule side must be a single letter",
                ))
            }
        };
        if rules.iter().any(|&(_, l, _)| l == letter) {
            return Err(ParseError::new(line_no, 1, format!("duplicate rule for {letter:?}")));
        }
        if rhs.is_empty() {
            return Err(ParseError::new(line_no, line.len() + 1, "image must be nonempty"));
        }
        if let Some(bad) = rhs.chars().find(|c| !c.is_ascii_alphabetic()) {
            let col = line.find(bad).map_or(1, |i| i + 1);
            return Err(ParseError::new(line_no, col, format!("bad image letter {bad:?}")));
        }
        rules.push((line_no, letter, rhs));
    }
    if rules.is_empty() {
        return Err(ParseError::new(1, 1, "no rules"));
    }
    let source_text: String = rules.iter().map(|&(_, l, _)| l).collect();
    let source = Alphabet::infer(&source_text)
        .map_err(|e| ParseError::new(rules[0].0, 1, e.to_string()))?;
    let target_text: String = rules.iter().map(|&(_, _, im)| im).collect::<Vec<_>>().join("");
    let target = Alphabet::infer(&target_text)
        .map_err(|e| ParseError::new(rules[0].0, 1, e.to_string()))?;
    let mut images = vec![Word::empty(); source.len()];
    for &(line_no, letter, image_text) in &rules {
        let rank = source.rank(letter).expect("letter was inferred") as usize;
        images[rank] = target
            .word(image_text)
            .map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
    }
    Morphism::new(source, target, images)
        .map_err(|e| ParseError::new(rules[0].0, 1, e.to_string()))
}
