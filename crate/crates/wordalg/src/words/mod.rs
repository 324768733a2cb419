//! Alphabets, words, and the regular-word toolkit: testing and generating
//! regular words, canonical factorization, semiregular words, and the fgf
//! pattern search.

use std::cmp::Ordering;

use thiserror::Error;

mod bracket;

pub use bracket::{
    enumerate_bracketings, is_nonassoc_regular, is_omega_regular, shirshov_bracketing,
    NonAssocWord, OmegaKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("alphabet accepts at most 255 symbols")]
    AlphabetTooLarge,
    #[error("alphabet symbols must be ASCII letters, got {0:?}")]
    BadSymbol(char),
    #[error("duplicate alphabet symbol {0:?}")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word is not associative-regular")]
    NotRegular,
}

/// Ordered alphabet of ASCII letters; rank 0 is the lex-smallest symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self, WordError> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if symbols.len() > 255 {
            return Err(WordError::AlphabetTooLarge);
        }
        for (i, &c) in symbols.iter().enumerate() {
            if !c.is_ascii_alphabetic() {
                return Err(WordError::BadSymbol(c));
            }
            if symbols[..i].contains(&c) {
                return Err(WordError::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Smallest alphabet covering `text`: its distinct letters in ASCII order.
    pub fn infer(text: &str) -> Result<Self, WordError> {
        let mut symbols: Vec<char> = Vec::new();
        for c in text.chars() {
            if !c.is_ascii_alphabetic() {
                return Err(WordError::BadSymbol(c));
            }
            if !symbols.contains(&c) {
                symbols.push(c);
            }
        }
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        symbols.sort_unstable();
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, rank: u8) -> char {
        self.symbols[rank as usize]
    }

    pub fn rank(&self, symbol: char) -> Option<u8> {
        self.symbols.iter().position(|&c| c == symbol).map(|i| i as u8)
    }

    pub fn word(&self, text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            letters.push(self.rank(c).ok_or(WordError::UnknownSymbol(c))?);
        }
        Ok(Word { letters })
    }

    /// Renders `w` with this alphabet's symbols. Panics if `w` holds a rank
    /// outside the alphabet (words must be formed over the alphabet used to
    /// print them).
    pub fn format(&self, w: &Word) -> String {
        w.letters.iter().map(|&r| self.symbol(r)).collect()
    }
}

/// Word over an [`Alphabet`], stored as letter ranks.
///
/// `Ord` is degree-lexicographic: length first, then letters. Functions that
/// need a different comparison spell it out explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_ranks(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn ranks(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec() }
    }

    /// Left cyclic shift: `rotated(1)` moves the first letter to the end.
    pub fn rotated(&self, shift: usize) -> Word {
        if self.letters.is_empty() {
            return Word::empty();
        }
        let n = self.letters.len();
        let shift = shift % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[shift..]);
        letters.extend_from_slice(&self.letters[..shift]);
        Word { letters }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexRelation {
    Less,
    Equal,
    Greater,
    PrefixOf,
    ExtendedBy,
}

/// Compares two words letter by letter; the first difference decides. When
/// one word is a proper prefix of the other, reports the prefix relation
/// instead of forcing an order.
pub fn lex_compare(u: &Word, v: &Word) -> LexRelation {
    for (a, b) in u.letters.iter().zip(&v.letters) {
        match a.cmp(b) {
            Ordering::Less => return LexRelation::Less,
            Ordering::Greater => return LexRelation::Greater,
            Ordering::Equal => {}
        }
    }
    match u.len().cmp(&v.len()) {
        Ordering::Equal => LexRelation::Equal,
        Ordering::Less => LexRelation::PrefixOf,
        Ordering::Greater => LexRelation::ExtendedBy,
    }
}

/// Total order behind the bracketing conditions: the first difference
/// decides, and a proper prefix is greater than any of its extensions
/// (u > uv for nonempty v).
pub(crate) fn ls_cmp(u: &[u8], v: &[u8]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    v.len().cmp(&u.len())
}

pub(crate) fn regular_slice(s: &[u8]) -> bool {
    let n = s.len();
    for shift in 1..n {
        let mut greater = false;
        for i in 0..n {
            match s[i].cmp(&s[(i + shift) % n]) {
                Ordering::Less => return false,
                Ordering::Greater => {
                    greater = true;
                    break;
                }
                Ordering::Equal => {}
            }
        }
        if !greater {
            // equal to its own shift, hence periodic
            return false;
        }
    }
    !s.is_empty()
}

/// A word is regular when it is strictly lex-greater than each of its proper
/// cyclic shifts (equal lengths, so plain lexicographic comparison).
pub fn is_assoc_regular(w: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    Ok(regular_slice(&w.letters))
}

/// All regular words of length ≤ `max_len`, sorted by (length, lex).
pub fn generate_regular(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let k = alphabet.len() as u8;
    let mut out: Vec<Word> = Vec::new();
    if max_len == 0 {
        return out;
    }
    // Generate words that are smallest among their shifts, relabeling
    // r ↦ k−1−r on emission to flip them into greatest-among-shifts form.
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Word::from_ranks(w.iter().map(|&r| k - 1 - r).collect()));
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        if w.is_empty() {
            break;
        }
        *w.last_mut().unwrap() += 1;
    }
    out.sort();
    out
}

/// Factors `w` into a product of regular words, nonincreasing in the
/// dictionary order taken with the alphabet reversed. The factorization is
/// unique; Duval's method adapted to the greatest-among-shifts convention.
pub fn cfl_factorize(w: &Word) -> Result<Vec<Word>, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let s = &w.letters;
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] >= s[j] {
            if s[k] > s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(Word::from_ranks(s[i..i + period].to_vec()));
            i += period;
        }
    }
    Ok(out)
}

pub(crate) fn semiregular_slice(s: &[u8]) -> bool {
    let n = s.len();
    for start in 1..n {
        for i in 0..n - start {
            match s[start + i].cmp(&s[i]) {
                Ordering::Greater => return false,
                Ordering::Less => break,
                Ordering::Equal => {}
            }
        }
    }
    true
}

/// A word is semiregular when every proper suffix is either a prefix of the
/// word or lex-smaller at the first differing position.
pub fn is_semiregular(w: &Word) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    Ok(semiregular_slice(&w.letters))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgfOccurrence {
    pub f: Word,
    pub g: Word,
    pub start: usize,
}

/// Searches `w` for a factor f·g·f with f nonempty semiregular and g regular
/// or empty. Returns the occurrence with the longest f, then the earliest
/// start, then the shortest g.
pub fn find_fgf(w: &Word) -> Option<FgfOccurrence> {
    let s = &w.letters;
    let n = s.len();
    for f_len in (1..=n / 2).rev() {
        for start in 0..=n - 2 * f_len {
            let f = &s[start..start + f_len];
            if !semiregular_slice(f) {
                continue;
            }
            for g_len in 0..=n - start - 2 * f_len {
                let second = &s[start + f_len + g_len..start + 2 * f_len + g_len];
                if f != second {
                    continue;
                }
                let g = &s[start + f_len..start + f_len + g_len];
                if g.is_empty() || regular_slice(g) {
                    return Some(FgfOccurrence {
                        f: Word::from_ranks(f.to_vec()),
                        g: Word::from_ranks(g.to_vec()),
                        start,
                    });
                }
            }
        }
    }
    None
}

pub struct WordsOfLength {
    k: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let item = Word::from_ranks(cur.clone());
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.k {
                cur[i] += 1;
                for later in cur[i + 1..].iter_mut() {
                    *later = 0;
                }
                break;
            }
        }
        Some(item)
    }
}

/// All words of exactly length `len`, in lex order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> WordsOfLength {
    WordsOfLength { k: alphabet.len() as u8, current: Some(vec![0; len]) }
}

/// All words of length ≤ `max_len` (including the empty word), shortest first.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> impl Iterator<Item = Word> {
    let k = alphabet.len() as u8;
    (0..=max_len).flat_map(move |len| WordsOfLength { k, current: Some(vec![0; len]) })
}
