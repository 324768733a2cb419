//! Nonassociative words (full bracketings) and the regular-bracketing tests.

use std::cmp::Ordering;

use super::{ls_cmp, regular_slice, Alphabet, Word, WordError};

/// Full binary bracketing whose leaves spell a nonempty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NonAssocWord {
    Letter(u8),
    Pair(Box<NonAssocWord>, Box<NonAssocWord>),
}

impl NonAssocWord {
    pub fn letter(rank: u8) -> Self {
        NonAssocWord::Letter(rank)
    }

    pub fn pair(left: NonAssocWord, right: NonAssocWord) -> Self {
        NonAssocWord::Pair(Box::new(left), Box::new(right))
    }

    /// Number of leaves, i.e. the length of the underlying word.
    pub fn len(&self) -> usize {
        match self {
            NonAssocWord::Letter(_) => 1,
            NonAssocWord::Pair(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn flatten(&self) -> Word {
        let mut out = Vec::with_capacity(self.len());
        self.collect(&mut out);
        Word::from_ranks(out)
    }

    fn collect(&self, out: &mut Vec<u8>) {
        match self {
            NonAssocWord::Letter(r) => out.push(*r),
            NonAssocWord::Pair(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    /// Bracket notation: a leaf prints as its symbol, a pair as `[left,right]`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            NonAssocWord::Letter(r) => alphabet.symbol(*r).to_string(),
            NonAssocWord::Pair(l, r) => {
                format!("[{},{}]", l.format(alphabet), r.format(alphabet))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaKind {
    K,
    Ak,
    Lie,
}

/// The unique regular bracketing of a regular word: split before the longest
/// proper suffix that is itself regular, recursively.
pub fn shirshov_bracketing(w: &Word) -> Result<NonAssocWord, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    if !regular_slice(w.ranks()) {
        return Err(WordError::NotRegular);
    }
    Ok(bracket_slice(w.ranks()))
}

fn bracket_slice(s: &[u8]) -> NonAssocWord {
    if s.len() == 1 {
        return NonAssocWord::Letter(s[0]);
    }
    for cut in 1..s.len() {
        if regular_slice(&s[cut..]) {
            return NonAssocWord::pair(bracket_slice(&s[..cut]), bracket_slice(&s[cut..]));
        }
    }
    unreachable!("a regular word of length ≥ 2 ends in a regular proper suffix")
}

/// Tests the regular-word conditions on a bracketing: the underlying word of
/// every pair [u,v] is regular, u and v are recursively regular, u > v, and
/// when u = [u1,u2] also u2 ≤ v (comparisons via the first differing letter,
/// a proper prefix counting as greater).
pub fn is_nonassoc_regular(t: &NonAssocWord) -> bool {
    match t {
        NonAssocWord::Letter(_) => true,
        NonAssocWord::Pair(u, v) => {
            let fu = u.flatten();
            let fv = v.flatten();
            regular_slice(fu.concat(&fv).ranks())
                && is_nonassoc_regular(u)
                && is_nonassoc_regular(v)
                && ls_cmp(fu.ranks(), fv.ranks()) == Ordering::Greater
                && match &**u {
                    NonAssocWord::Pair(_, u2) => {
                        ls_cmp(u2.flatten().ranks(), fv.ranks()) != Ordering::Greater
                    }
                    NonAssocWord::Letter(_) => true,
                }
        }
    }
}

/// The recursive Ω-regularity conditions: children Ω-regular and u ≥ v
/// (Ω = K) or u > v (Ω = AK, Lie); for Lie, when u = [u1,u2], additionally
/// u2 ≤ v.
pub fn is_omega_regular(t: &NonAssocWord, kind: OmegaKind) -> bool {
    match t {
        NonAssocWord::Letter(_) => true,
        NonAssocWord::Pair(u, v) => {
            if !is_omega_regular(u, kind) || !is_omega_regular(v, kind) {
                return false;
            }
            let fu = u.flatten();
            let fv = v.flatten();
            let ordered = match ls_cmp(fu.ranks(), fv.ranks()) {
                Ordering::Greater => true,
                Ordering::Equal => kind == OmegaKind::K,
                Ordering::Less => false,
            };
            if !ordered {
                return false;
            }
            if kind == OmegaKind::Lie {
                if let NonAssocWord::Pair(_, u2) = &**u {
                    return ls_cmp(u2.flatten().ranks(), fv.ranks()) != Ordering::Greater;
                }
            }
            true
        }
    }
}

/// Every full bracketing of `w`; there are Catalan(|w|−1) of them.
pub fn enumerate_bracketings(w: &Word) -> Vec<NonAssocWord> {
    fn go(s: &[u8]) -> Vec<NonAssocWord> {
        if s.len() == 1 {
            return vec![NonAssocWord::Letter(s[0])];
        }
        let mut out = Vec::new();
        for cut in 1..s.len() {
            for left in go(&s[..cut]) {
                for right in go(&s[cut..]) {
                    out.push(NonAssocWord::pair(left.clone(), right));
                }
            }
        }
        out
    }
    if w.is_empty() {
        return Vec::new();
    }
    go(w.ranks())
}

#[cfg(test)]
mod tests {
    use super::super::{generate_regular, is_assoc_regular, words_of_length};
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn w(s: &str) -> Word {
        ab().word(s).unwrap()
    }

    #[test]
    fn flatten_and_format() {
        let t = NonAssocWord::pair(
            NonAssocWord::letter(1),
            NonAssocWord::pair(NonAssocWord::letter(1), NonAssocWord::letter(0)),
        );
        assert_eq!(t.flatten(), w("bba"));
        assert_eq!(t.len(), 3);
        assert_eq!(t.format(&ab()), "[b,[b,a]]");
    }

    #[test]
    fn bracketing_examples() {
        let a = ab();
        let bracket = |s: &str| shirshov_bracketing(&a.word(s).unwrap()).unwrap().format(&a);
        assert_eq!(bracket("a"), "a");
        assert_eq!(bracket("ba"), "[b,a]");
        assert_eq!(bracket("bba"), "[b,[b,a]]");
        assert_eq!(bracket("baa"), "[[b,a],a]");
        assert_eq!(bracket("bbaba"), "[[b,[b,a]],[b,a]]");
        assert_eq!(
            shirshov_bracketing(&w("ab")),
            Err(WordError::NotRegular)
        );
        assert_eq!(
            shirshov_bracketing(&Word::empty()),
            Err(WordError::EmptyWord)
        );
    }

    #[test]
    fn nonassoc_regular_examples() {
        assert!(is_nonassoc_regular(&NonAssocWord::letter(0)));
        let ba = NonAssocWord::pair(NonAssocWord::letter(1), NonAssocWord::letter(0));
        assert!(is_nonassoc_regular(&ba));
        let bb_a = NonAssocWord::pair(
            NonAssocWord::pair(NonAssocWord::letter(1), NonAssocWord::letter(1)),
            NonAssocWord::letter(0),
        );
        assert!(!is_nonassoc_regular(&bb_a));
    }

    #[test]
    fn omega_examples() {
        let aa = NonAssocWord::pair(NonAssocWord::letter(0), NonAssocWord::letter(0));
        assert!(is_omega_regular(&aa, OmegaKind::K));
        assert!(!is_omega_regular(&aa, OmegaKind::Ak));
        assert!(!is_omega_regular(&aa, OmegaKind::Lie));
        let b_ba = NonAssocWord::pair(
            NonAssocWord::letter(1),
            NonAssocWord::pair(NonAssocWord::letter(1), NonAssocWord::letter(0)),
        );
        assert!(is_omega_regular(&b_ba, OmegaKind::Lie));
    }

    #[test]
    fn exactly_one_bracketing_is_regular() {
        for word in generate_regular(&ab(), 7) {
            let winners: Vec<NonAssocWord> = enumerate_bracketings(&word)
                .into_iter()
                .filter(is_nonassoc_regular)
                .collect();
            assert_eq!(winners.len(), 1, "word {}", ab().format(&word));
            assert_eq!(winners[0], shirshov_bracketing(&word).unwrap());
            assert_eq!(winners[0].flatten(), word);
        }
    }

    #[test]
    fn omega_lie_agrees_with_nonassoc_regular() {
        let a = ab();
        let mut seen = 0usize;
        for n in 1..=6usize {
            for word in words_of_length(&a, n) {
                for t in enumerate_bracketings(&word) {
                    assert_eq!(
                        is_omega_regular(&t, OmegaKind::Lie),
                        is_nonassoc_regular(&t),
                        "tree {}",
                        t.format(&a)
                    );
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, 3238);
    }

    #[test]
    fn omega_regular_words_have_regular_flatten() {
        let a = ab();
        for n in 1..=6usize {
            for word in words_of_length(&a, n) {
                for t in enumerate_bracketings(&word) {
                    if is_omega_regular(&t, OmegaKind::Lie) {
                        assert!(is_assoc_regular(&t.flatten()).unwrap());
                    }
                }
            }
        }
    }
}
