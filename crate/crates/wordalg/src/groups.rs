//! Group presentations, the metric small-cancellation condition C'(λ), and
//! the Dehn reduction decision procedure with replayable certificates.

use std::collections::BTreeSet;

use num::{BigInt, BigRational};
use thiserror::Error;

use crate::textio::{content_lines, ParseError};
use crate::words::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("word uses a generator outside the presentation")]
    UnknownGenerator,
    #[error("relators must stay nonempty after cyclic reduction")]
    TrivialRelator,
    #[error("certificate replay failed: {0}")]
    BadCertificate(String),
}

/// (generator rank, inverted)
pub type SignedGen = (u8, bool);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<SignedGen>,
}

impl GroupWord {
    pub fn new(letters: Vec<SignedGen>) -> Self {
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[SignedGen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, inv)| (g, !inv)).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn rotated(&self, shift: usize) -> GroupWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let shift = shift % self.letters.len();
        let mut letters = self.letters[shift..].to_vec();
        letters.extend_from_slice(&self.letters[..shift]);
        GroupWord { letters }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "ε".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, inv)| {
                let symbol = alphabet.symbol(g);
                if inv {
                    format!("{symbol}-")
                } else {
                    symbol.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn free_reduce(w: &GroupWord) -> GroupWord {
    let mut stack: Vec<SignedGen> = Vec::new();
    for &(g, inv) in &w.letters {
        if stack.last() == Some(&(g, !inv)) {
            stack.pop();
        } else {
            stack.push((g, inv));
        }
    }
    GroupWord { letters: stack }
}

pub fn cyclic_reduce(w: &GroupWord) -> GroupWord {
    let mut letters = free_reduce(w).letters;
    while letters.len() >= 2 {
        let (g, inv) = letters[0];
        if *letters.last().expect("nonempty") == (g, !inv) {
            letters.pop();
            letters.remove(0);
        } else {
            break;
        }
    }
    GroupWord { letters }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Alphabet,
    relators: Vec<GroupWord>,
}

impl Presentation {
    /// Relators are cyclically reduced on entry; a relator reducing to ε is
    /// rejected.
    pub fn new(generators: Alphabet, relators: Vec<GroupWord>) -> Result<Self, GroupError> {
        let bound = generators.len() as u8;
        let mut reduced = Vec::new();
        for relator in relators {
            if relator.letters.iter().any(|&(g, _)| g >= bound) {
                return Err(GroupError::UnknownGenerator);
            }
            let relator = cyclic_reduce(&relator);
            if relator.is_empty() {
                return Err(GroupError::TrivialRelator);
            }
            reduced.push(relator);
        }
        Ok(Presentation { generators, relators: reduced })
    }

    pub fn generators(&self) -> &Alphabet {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }
}

/// All cyclic rotations of all relators and of their inverses, deduplicated
/// and sorted.
pub fn symmetrize(p: &Presentation) -> Vec<GroupWord> {
    let set: BTreeSet<GroupWord> = occurrences(p).into_iter().map(|o| o.word).collect();
    set.into_iter().collect()
}

struct SymmetrizedOccurrence {
    relator: usize,
    rotation: usize,
    inverted: bool,
    word: GroupWord,
}

fn occurrences(p: &Presentation) -> Vec<SymmetrizedOccurrence> {
    let mut out = Vec::new();
    for (relator, r) in p.relators.iter().enumerate() {
        for inverted in [false, true] {
            let base = if inverted { r.inverse() } else { r.clone() };
            for rotation in 0..base.len() {
                out.push(SymmetrizedOccurrence {
                    relator,
                    rotation,
                    inverted,
                    word: base.rotated(rotation),
                });
            }
        }
    }
    out
}

/// A piece is a common prefix of two symmetrized relator occurrences with
/// different origins (two rotations of one periodic relator count). Holds
/// iff every piece is shorter than λ times the length of each relator it
/// lies in; also reports the longest piece.
pub fn check_metric_condition(p: &Presentation, lambda: &BigRational) -> (bool, usize) {
    let (zero, one) = (BigRational::from_integer(0.into()), BigRational::from_integer(1.into()));
    assert!(*lambda > zero && *lambda < one, "λ must lie in (0, 1)");
    let occ = occurrences(p);
    let mut holds = true;
    let mut max_piece = 0;
    for (i, a) in occ.iter().enumerate() {
        for (j, b) in occ.iter().enumerate() {
            if i == j {
                continue;
            }
            let common = a
                .word
                .letters
                .iter()
                .zip(&b.word.letters)
                .take_while(|(x, y)| x == y)
                .count();
            max_piece = max_piece.max(common);
            let bound = lambda * BigRational::from_integer(BigInt::from(a.word.len()));
            if BigRational::from_integer(BigInt::from(common)) >= bound {
                holds = false;
            }
        }
    }
    (holds, max_piece)
}

/// One Dehn replacement: after rotating the current cyclic word by
/// `rotate`, its first `matched` letters equal a prefix of the symmetrized
/// occurrence named by (relator, rotation, inverted), with matched strictly
/// more than half of it; the prefix is replaced by the inverse of the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DehnStep {
    pub rotate: usize,
    pub matched: usize,
    pub relator: usize,
    pub rotation: usize,
    pub inverted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DehnOutcome {
    Trivial(Vec<DehnStep>),
    Nontrivial,
    Unsupported,
}

fn step_word(p: &Presentation, step: &DehnStep) -> Result<GroupWord, GroupError> {
    let relator = p
        .relators
        .get(step.relator)
        .ok_or_else(|| GroupError::BadCertificate("relator index out of range".into()))?;
    if step.rotation >= relator.len() {
        return Err(GroupError::BadCertificate("rotation out of range".into()));
    }
    let base = if step.inverted { relator.inverse() } else { relator.clone() };
    Ok(base.rotated(step.rotation))
}

fn apply_step(current: &GroupWord, word: &GroupWord, step: &DehnStep) -> GroupWord {
    let rotated = current.rotated(step.rotate);
    let tail = GroupWord::new(rotated.letters[step.matched..].to_vec());
    let replacement = GroupWord::new(word.letters[step.matched..].to_vec()).inverse();
    cyclic_reduce(&replacement.concat(&tail))
}

/// Dehn's procedure over a C'(1/6) presentation: repeatedly replace a
/// cyclic factor matching more than half of a symmetrized relator by the
/// shorter complement. Empty end ⇒ Trivial with the step log; stuck
/// nonempty ⇒ Nontrivial; C'(1/6) failing ⇒ Unsupported.
pub fn dehn_decide(w: &GroupWord, p: &Presentation) -> DehnOutcome {
    let sixth = BigRational::new(1.into(), 6.into());
    if !check_metric_condition(p, &sixth).0 {
        return DehnOutcome::Unsupported;
    }
    let occ = occurrences(p);
    let mut current = cyclic_reduce(w);
    let mut steps = Vec::new();
    'outer: while !current.is_empty() {
        let n = current.len();
        for start in 0..n {
            for o in &occ {
                let limit = o.word.len().min(n);
                let mut matched = 0;
                while matched < limit
                    && current.letters[(start + matched) % n] == o.word.letters[matched]
                {
                    matched += 1;
                }
                if 2 * matched > o.word.len() {
                    let step = DehnStep {
                        rotate: start,
                        matched,
                        relator: o.relator,
                        rotation: o.rotation,
                        inverted: o.inverted,
                    };
                    current = apply_step(&current, &o.word, &step);
                    steps.push(step);
                    continue 'outer;
                }
            }
        }
        return DehnOutcome::Nontrivial;
    }
    DehnOutcome::Trivial(steps)
}

/// Replays a Dehn step log from `w`, enforcing the match, the more-than-
/// half threshold, and strict length descent; returns the final word.
pub fn replay_dehn(
    w: &GroupWord,
    p: &Presentation,
    steps: &[DehnStep],
) -> Result<GroupWord, GroupError> {
    let mut current = cyclic_reduce(w);
    for (index, step) in steps.iter().enumerate() {
        let bad = |message: String| GroupError::BadCertificate(format!("step {index}: {message}"));
        let word = step_word(p, step)?;
        let n = current.len();
        if n == 0 {
            return Err(bad("word already empty".into()));
        }
        if step.rotate >= n {
            return Err(bad("rotation exceeds the word".into()));
        }
        if step.matched > n || step.matched > word.len() {
            return Err(bad("match longer than the word".into()));
        }
        if 2 * step.matched <= word.len() {
            return Err(bad("match does not exceed half the relator".into()));
        }
        for i in 0..step.matched {
            if current.letters[(step.rotate + i) % n] != word.letters[i] {
                return Err(bad("claimed factor does not occur".into()));
            }
        }
        let next = apply_step(&current, &word, step);
        if next.len() >= current.len() {
            return Err(bad("step does not shorten the word".into()));
        }
        current = next;
    }
    Ok(current)
}

/// `generators: a b …` then `relator: a b a- …` lines; `-` marks an
/// inverse.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut lines = content_lines(text);
    let Some((line_no, header)) = lines.next() else {
        return Err(ParseError::new(1, 1, "missing `generators:` line"));
    };
    let Some(generator_list) = header.strip_prefix("generators:") else {
        return Err(ParseError::new(line_no, 1, "expected `generators: …` first"));
    };
    let symbols: String = generator_list.split_whitespace().collect::<Vec<_>>().join("");
    let generators = Alphabet::new(&symbols)
        .map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
    let mut relators = Vec::new();
    for (line_no, line) in lines {
        let Some(body) = line.strip_prefix("relator:") else {
            return Err(ParseError::new(line_no, 1, "expected `relator: …`"));
        };
        let word = parse_tokens(&generators, body, line_no, line.len() - body.len() + 1)?;
        if cyclic_reduce(&word).is_empty() {
            return Err(ParseError::new(line_no, 1, "relator reduces to ε"));
        }
        relators.push(word);
    }
    Presentation::new(generators, relators)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

fn parse_tokens(
    generators: &Alphabet,
    body: &str,
    line_no: usize,
    col_offset: usize,
) -> Result<GroupWord, ParseError> {
    let mut letters = Vec::new();
    let mut search_from = 0;
    for token in body.split_whitespace() {
        let found = body[search_from..].find(token).expect("token came from body") + search_from;
        search_from = found + token.len();
        let col = col_offset + found;
        let mut chars = token.chars();
        let symbol = chars.next().expect("tokens are nonempty");
        let inverted = match chars.next() {
            None => false,
            Some('-') if chars.next().is_none() => true,
            _ => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("bad token {token:?}; use `a` or `a-`"),
                ))
            }
        };
        let Some(rank) = generators.rank(symbol) else {
            return Err(ParseError::new(
                line_no,
                col,
                format!("unknown generator {symbol:?}"),
            ));
        };
        letters.push((rank, inverted));
    }
    Ok(GroupWord::new(letters))
}

/// One whitespace-separated token list, same syntax as relator lines.
pub fn parse_group_word(generators: &Alphabet, text: &str) -> Result<GroupWord, ParseError> {
    parse_tokens(generators, text, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn genus2() -> Presentation {
        parse_presentation("generators: a b c d\nrelator: a b a- b- c d c- d-\n").unwrap()
    }

    fn gw(alphabet: &Alphabet, text: &str) -> GroupWord {
        parse_group_word(alphabet, text).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(free_reduce(&gw(&ab(), "a a- b")), gw(&ab(), "b"));
        assert_eq!(free_reduce(&gw(&ab(), "a b b- a-")), GroupWord::empty());
        assert_eq!(cyclic_reduce(&gw(&ab(), "b a b-")), gw(&ab(), "a"));
        assert_eq!(cyclic_reduce(&gw(&ab(), "a b a-")), gw(&ab(), "b"));
        assert_eq!(free_reduce(&gw(&ab(), "b a b-")), gw(&ab(), "b a b-"));
    }

    #[test]
    fn symmetrize_examples() {
        let p = Presentation::new(ab(), vec![gw(&ab(), "a b")]).unwrap();
        let words: Vec<String> =
            symmetrize(&p).iter().map(|w| w.format(&ab())).collect();
        assert_eq!(words.len(), 4);
        for expected in ["a b", "b a", "b- a-", "a- b-"] {
            assert!(words.iter().any(|w| w == expected), "{expected}");
        }

        let single = Presentation::new(ab(), vec![gw(&ab(), "a")]).unwrap();
        let words: Vec<String> =
            symmetrize(&single).iter().map(|w| w.format(&ab())).collect();
        assert_eq!(words, ["a", "a-"]);

        let two = Presentation::new(ab(), vec![gw(&ab(), "a"), gw(&ab(), "b")]).unwrap();
        assert_eq!(symmetrize(&two).len(), 4);
    }

    #[test]
    fn metric_condition_examples() {
        let sixth = BigRational::new(1.into(), 6.into());
        assert_eq!(check_metric_condition(&genus2(), &sixth), (true, 1));

        let square = Presentation::new(ab(), vec![gw(&ab(), "a b a b")]).unwrap();
        let (holds, max_piece) = check_metric_condition(&square, &sixth);
        assert!(!holds);
        assert_eq!(max_piece, 4);

        let abc = Alphabet::new("abc").unwrap();
        let free_ish = Presentation::new(abc.clone(), vec![gw(&abc, "a b c")]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(check_metric_condition(&free_ish, &half), (true, 0));

        let doubled = Presentation::new(ab(), vec![gw(&ab(), "a a")]).unwrap();
        let (holds, max_piece) = check_metric_condition(&doubled, &sixth);
        assert!(!holds);
        assert_eq!(max_piece, 2);
    }

    #[test]
    fn dehn_reduces_the_relator_itself() {
        let p = genus2();
        let relator = p.relators()[0].clone();
        match dehn_decide(&relator, &p) {
            DehnOutcome::Trivial(steps) => {
                assert_eq!(steps.len(), 1);
                assert_eq!(replay_dehn(&relator, &p, &steps).unwrap(), GroupWord::empty());
            }
            other => panic!("expected Trivial, got {other:?}"),
        }
    }

    #[test]
    fn dehn_spec_verdicts() {
        let p = genus2();
        assert_eq!(
            dehn_decide(&gw(p.generators(), "a"), &p),
            DehnOutcome::Nontrivial
        );

        let square = Presentation::new(ab(), vec![gw(&ab(), "a b a b")]).unwrap();
        assert_eq!(dehn_decide(&gw(&ab(), "a"), &square), DehnOutcome::Unsupported);

        // free presentation: reductions alone decide
        let free = Presentation::new(ab(), vec![]).unwrap();
        assert!(matches!(
            dehn_decide(&gw(&ab(), "a a-"), &free),
            DehnOutcome::Trivial(_)
        ));
        assert_eq!(dehn_decide(&gw(&ab(), "a b"), &free), DehnOutcome::Nontrivial);
    }

    fn random_word(rng: &mut ChaCha8Rng, generators: usize, len: usize) -> GroupWord {
        let letters = (0..len)
            .map(|_| (rng.gen_range(0..generators) as u8, rng.gen_bool(0.5)))
            .collect();
        GroupWord::new(letters)
    }

    #[test]
    fn conjugated_relator_products_are_trivial() {
        let p = genus2();
        let relator = p.relators()[0].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
        for _ in 0..100 {
            let mut product = GroupWord::empty();
            for _ in 0..rng.gen_range(1..=3) {
                let len = rng.gen_range(0..=4);
                let g = random_word(&mut rng, 4, len);
                let core = if rng.gen_bool(0.5) { relator.clone() } else { relator.inverse() };
                product = product.concat(&g).concat(&core).concat(&g.inverse());
            }
            match dehn_decide(&product, &p) {
                DehnOutcome::Trivial(steps) => {
                    assert_eq!(replay_dehn(&product, &p, &steps).unwrap(), GroupWord::empty());
                }
                other => panic!("conjugate product came back {other:?}"),
            }
        }
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let p = genus2();
        let relator = p.relators()[0].clone();
        let DehnOutcome::Trivial(steps) = dehn_decide(&relator, &p) else {
            panic!("expected Trivial");
        };

        let mut wrong_match = steps.clone();
        wrong_match[0].matched = 2;
        assert!(replay_dehn(&relator, &p, &wrong_match).is_err());

        let mut wrong_relator = steps.clone();
        wrong_relator[0].relator = 7;
        assert!(replay_dehn(&relator, &p, &wrong_relator).is_err());

        let mut wrong_rotate = steps;
        wrong_rotate[0].rotate = 3;
        assert!(replay_dehn(&relator, &p, &wrong_rotate).is_err());
    }

    fn normal_closure_ball(p: &Presentation, cap: usize, rounds: usize) -> BTreeSet<GroupWord> {
        let symmetrized = symmetrize(p);
        let mut ball: BTreeSet<GroupWord> = BTreeSet::new();
        ball.insert(GroupWord::empty());
        for _ in 0..rounds {
            let snapshot: Vec<GroupWord> = ball.iter().cloned().collect();
            for word in snapshot {
                for cut in 0..=word.len() {
                    let head = GroupWord::new(word.letters()[..cut].to_vec());
                    let tail = GroupWord::new(word.letters()[cut..].to_vec());
                    for s in &symmetrized {
                        let candidate = free_reduce(&head.concat(s).concat(&tail));
                        if candidate.len() <= cap {
                            ball.insert(candidate);
                        }
                    }
                }
            }
        }
        ball
    }

    #[test]
    fn dehn_agrees_with_a_normal_closure_ball() {
        let p = genus2();
        let ball = normal_closure_ball(&p, 12, 3);
        assert!(ball.len() > 1);
        // completeness at desk scale: everything in the closure ball is Trivial
        for word in &ball {
            match dehn_decide(word, &p) {
                DehnOutcome::Trivial(steps) => {
                    assert_eq!(replay_dehn(word, &p, &steps).unwrap(), GroupWord::empty());
                }
                other => panic!("{} came back {other:?}", word.format(p.generators())),
            }
        }
        // soundness: no random word labeled Nontrivial lies in the ball
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
        for _ in 0..200 {
            let len = rng.gen_range(0..=8);
            let w = free_reduce(&random_word(&mut rng, 4, len));
            match dehn_decide(&w, &p) {
                DehnOutcome::Trivial(steps) => {
                    assert_eq!(replay_dehn(&w, &p, &steps).unwrap(), GroupWord::empty());
                }
                DehnOutcome::Nontrivial => assert!(!ball.contains(&w)),
                DehnOutcome::Unsupported => panic!("genus-2 satisfies C'(1/6)"),
            }
        }
    }

    #[test]
    fn presentation_files_parse_with_diagnostics() {
        let p = genus2();
        assert_eq!(p.generators(), &Alphabet::new("abcd").unwrap());
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].format(p.generators()), "a b a- b- c d c- d-");

        let err = parse_presentation("relator: a\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("generators"));

        let err = parse_presentation("generators: a b\nrelator: a c\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("unknown generator"));

        let err = parse_presentation("generators: a b\nrelator: a b+\n").unwrap_err();
        assert!(err.message.contains("bad token"));

        let err = parse_presentation("generators: a a\nrelator: a\n").unwrap_err();
        assert_eq!(err.line, 1);

        let err = parse_presentation("generators: a b\nrelator: a a-\n").unwrap_err();
        assert!(err.message.contains("reduces to ε"));

        let err = parse_presentation("generators: a b\noops: a\n").unwrap_err();
        assert!(err.message.contains("relator"));
    }

    #[test]
    fn presentation_constructor_validates() {
        assert_eq!(
            Presentation::new(ab(), vec![GroupWord::new(vec![(9, false)])]),
            Err(GroupError::UnknownGenerator)
        );
        assert_eq!(
            Presentation::new(ab(), vec![gw(&ab(), "a a-")]),
            Err(GroupError::TrivialRelator)
        );
        // constructor cyclically reduces
        let p = Presentation::new(ab(), vec![gw(&ab(), "b a b-")]).unwrap();
        assert_eq!(p.relators()[0], gw(&ab(), "a"));
    }
}
