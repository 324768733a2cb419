//! Noncommutative polynomials with exact rational coefficients, the deglex
//! monomial order, commutator expansion of bracketings, and the regular-word
//! basis of the free Lie algebra.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::textio::ParseError;
use crate::words::{generate_regular, shirshov_bracketing, Alphabet, NonAssocWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("polynomials are over different alphabets")]
    AlphabetMismatch,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
}

/// Monomial order on words; deglex compares length first, then letters.
/// Multiplicative and well-founded, so reduction terminates under it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    DegLex,
}

impl MonomialOrder {
    pub fn cmp_words(&self, u: &Word, v: &Word) -> Ordering {
        match self {
            MonomialOrder::DegLex => u.cmp(v),
        }
    }
}

/// Finite sum of monomials with nonzero rational coefficients over a fixed
/// alphabet. The empty sum is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigRational>,
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NcPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { alphabet, terms }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&BigRational> {
        self.terms.get(word)
    }

    /// Length of the longest monomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn merge(&self, other: &NcPoly, negate: bool) -> Result<NcPoly, FreeAlgError> {
        if self.alphabet != other.alphabet {
            return Err(FreeAlgError::AlphabetMismatch);
        }
        let mut terms = self.terms.clone();
        for (word, coeff) in &other.terms {
            let delta = if negate { -coeff } else { coeff.clone() };
            let entry = terms.entry(word.clone()).or_insert_with(BigRational::zero);
            *entry += delta;
            if entry.is_zero() {
                terms.remove(word);
            }
        }
        Ok(NcPoly { alphabet: self.alphabet.clone(), terms })
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        if self.alphabet != other.alphabet {
            return Err(FreeAlgError::AlphabetMismatch);
        }
        let mut terms: BTreeMap<Word, BigRational> = BTreeMap::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let word = u.concat(v);
                let entry = terms.entry(word.clone()).or_insert_with(BigRational::zero);
                *entry += cu * cv;
                if entry.is_zero() {
                    terms.remove(&word);
                }
            }
        }
        Ok(NcPoly { alphabet: self.alphabet.clone(), terms })
    }

    pub fn scale(&self, factor: &BigRational) -> NcPoly {
        if factor.is_zero() {
            return NcPoly::zero(self.alphabet.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c * factor))
            .collect();
        NcPoly { alphabet: self.alphabet.clone(), terms }
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-BigRational::one())
    }

    /// Divides by the leading coefficient so the leading monomial has
    /// coefficient 1.
    pub fn monic(&self, ord: MonomialOrder) -> Result<NcPoly, FreeAlgError> {
        let (_, lead) = leading_monomial(self, ord)?;
        Ok(self.scale(&lead.recip()))
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().rev().enumerate() {
            let abs = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || word.is_empty();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            if !word.is_empty() {
                if show_coeff {
                    write!(f, "*")?;
                }
                write_monomial(f, &self.alphabet, word)?;
            }
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, alphabet: &Alphabet, word: &Word) -> fmt::Result {
    let mut first = true;
    let mut run: Option<(u8, usize)> = None;
    let flush = |f: &mut fmt::Formatter<'_>, run: Option<(u8, usize)>, first: &mut bool| {
        if let Some((rank, count)) = run {
            if !*first {
                write!(f, "*")?;
            }
            *first = false;
            write!(f, "{}", alphabet.symbol(rank))?;
            if count > 1 {
                write!(f, "^{count}")?;
            }
        }
        Ok(())
    };
    for &rank in word.ranks() {
        match run {
            Some((r, count)) if r == rank => run = Some((r, count + 1)),
            other => {
                flush(f, other, &mut first)?;
                run = Some((rank, 1));
            }
        }
    }
    flush(f, run, &mut first)
}

/// The greatest monomial of `p` under `ord`, with its coefficient.
pub fn leading_monomial(
    p: &NcPoly,
    ord: MonomialOrder,
) -> Result<(Word, BigRational), FreeAlgError> {
    let mut best: Option<(&Word, &BigRational)> = None;
    for (word, coeff) in p.terms() {
        best = match best {
            Some((bw, _)) if ord.cmp_words(word, bw) != Ordering::Greater => best,
            _ => Some((word, coeff)),
        };
    }
    best.map(|(w, c)| (w.clone(), c.clone()))
        .ok_or(FreeAlgError::ZeroPolynomial)
}

/// Realizes a bracketing in the associative algebra: a leaf is its letter,
/// a pair [u,v] expands to u·v − v·u.
pub fn expand_bracket(t: &NonAssocWord, alphabet: &Alphabet) -> NcPoly {
    match t {
        NonAssocWord::Letter(rank) => NcPoly::monomial(
            alphabet.clone(),
            Word::from_ranks(vec![*rank]),
            BigRational::one(),
        ),
        NonAssocWord::Pair(u, v) => {
            let pu = expand_bracket(u, alphabet);
            let pv = expand_bracket(v, alphabet);
            let uv = pu.mul(&pv).expect("same alphabet");
            let vu = pv.mul(&pu).expect("same alphabet");
            uv.sub(&vu).expect("same alphabet")
        }
    }
}

/// Basis of the free Lie algebra in degrees ≤ `max_deg`: the canonical
/// bracketing of every regular word, ordered by (length, lex).
pub fn lie_basis(alphabet: &Alphabet, max_deg: usize) -> Vec<NonAssocWord> {
    generate_regular(alphabet, max_deg)
        .iter()
        .map(|w| shirshov_bracketing(w).expect("generated words are regular"))
        .collect()
}

struct PolyParser<'a> {
    alphabet: &'a Alphabet,
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.pos + 1, message)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_space(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| ParseError::new(self.line, start + 1, "expected a number"))
    }

    fn coefficient(&mut self) -> Result<BigRational, ParseError> {
        let numer = self.number()?;
        self.skip_space();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_space();
            let denom = self.number()?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// One letter with an optional `^k` power, appended to `word`.
    fn factor(&mut self, word: &mut Vec<u8>) -> Result<(), ParseError> {
        let col = self.pos + 1;
        let c = self.bump().expect("caller checked a letter is present");
        let rank = self.alphabet.rank(c).ok_or_else(|| {
            ParseError::new(self.line, col, format!("symbol {c:?} is not in the alphabet"))
        })?;
        self.skip_space();
        let mut power = 1usize;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_space();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.err("expected an exponent"));
            }
            let n = self.number()?;
            power = n
                .try_into()
                .map_err(|_| self.err("exponent does not fit in usize"))?;
        }
        word.extend(std::iter::repeat(rank).take(power));
        Ok(())
    }

    fn term(&mut self) -> Result<(Word, BigRational), ParseError> {
        let mut coeff = BigRational::one();
        let mut saw_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.coefficient()?;
            saw_coeff = true;
            self.skip_space();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_space();
            }
        }
        let mut word = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    self.factor(&mut word)?;
                    self.skip_space();
                    if self.peek() == Some('*') {
                        self.bump();
                        self.skip_space();
                        // a '*' must be followed by another letter
                        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
                            return Err(self.err("expected a letter after '*'"));
                        }
                    }
                }
                _ => break,
            }
        }
        if word.is_empty() && !saw_coeff {
            return Err(self.err("expected a term"));
        }
        Ok((Word::from_ranks(word), coeff))
    }

    fn poly(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = NcPoly::zero(self.alphabet.clone());
        self.skip_space();
        let mut sign = BigRational::one();
        if self.peek() == Some('-') {
            self.bump();
            sign = -sign;
            self.skip_space();
        } else if self.peek() == Some('+') {
            self.bump();
            self.skip_space();
        }
        loop {
            let (word, coeff) = self.term()?;
            let term = NcPoly::monomial(self.alphabet.clone(), word, coeff * &sign);
            acc = acc.add(&term).expect("same alphabet");
            self.skip_space();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    sign = BigRational::one();
                }
                Some('-') => {
                    self.bump();
                    sign = -BigRational::one();
                }
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
            }
            self.skip_space();
        }
        Ok(acc)
    }
}

/// Parses the term-sum format, e.g. `2*x*y*x - 3*y^2`. Letters may also be
/// juxtaposed (`2xyx`), coefficients may be fractions (`1/2*x`), and `0` is
/// the zero polynomial.
pub fn parse_poly(alphabet: &Alphabet, text: &str) -> Result<NcPoly, ParseError> {
    parse_poly_at(alphabet, text, 1)
}

pub fn parse_poly_at(alphabet: &Alphabet, text: &str, line: usize) -> Result<NcPoly, ParseError> {
    let mut parser = PolyParser { alphabet, chars: text.chars().collect(), pos: 0, line };
    parser.poly()
}

/// Reads one polynomial per line; blank lines and `#` comments are skipped.
pub fn parse_relations(alphabet: &Alphabet, text: &str) -> Result<Vec<NcPoly>, ParseError> {
    let mut out = Vec::new();
    for (line_no, line) in crate::textio::content_lines(text) {
        out.push(parse_poly_at(alphabet, line, line_no)?);
    }
    Ok(out)
}
