//! Reduction modulo relation sets, composition (overlap/inclusion) closure
//! with a degree bound, and ideal membership as a semidecision.

use std::collections::BTreeMap;

use num::{BigRational, One};
use thiserror::Error;

use crate::freealg::{leading_monomial, FreeAlgError, MonomialOrder, NcPoly};
use crate::words::{words_up_to, Alphabet, Word};

mod diamond;

pub use diamond::{diamond_report, DiamondError, DiamondReport, SimplificationScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("relation sets hold nonzero polynomials only")]
    ZeroRelation,
    #[error("all relations must be over the relation set's alphabet")]
    MixedAlphabets,
    #[error("trace replay failed: {0}")]
    BadTrace(String),
}

/// A set of relations, each normalized monic under the set's monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    alphabet: Alphabet,
    order: MonomialOrder,
    polys: Vec<NcPoly>,
    leads: Vec<Word>,
}

impl RelationSet {
    pub fn new(
        alphabet: Alphabet,
        order: MonomialOrder,
        polys: Vec<NcPoly>,
    ) -> Result<Self, RewriteError> {
        let mut set = RelationSet { alphabet, order, polys: Vec::new(), leads: Vec::new() };
        for poly in polys {
            set.push(poly)?;
        }
        Ok(set)
    }

    fn push(&mut self, poly: NcPoly) -> Result<(), RewriteError> {
        if poly.alphabet() != &self.alphabet {
            return Err(RewriteError::MixedAlphabets);
        }
        let monic = poly.monic(self.order).map_err(|e| match e {
            FreeAlgError::ZeroPolynomial => RewriteError::ZeroRelation,
            FreeAlgError::AlphabetMismatch => RewriteError::MixedAlphabets,
        })?;
        let (lead, _) = leading_monomial(&monic, self.order).expect("monic is nonzero");
        self.polys.push(monic);
        self.leads.push(lead);
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[NcPoly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Word] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: usize,
    pub left: Word,
    pub right: Word,
    pub coeff: BigRational,
}

/// Record of a reduction: h = Σ coeffᵢ·leftᵢ·g_{ruleᵢ}·rightᵢ + result, with
/// every rewritten monomial bounded by the leading monomial in force at its
/// step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: NcPoly,
}

impl ReductionTrace {
    /// Replays the steps from `input`, checking rule indices, recorded
    /// coefficients, the no-ascent invariant, and the final result.
    pub fn verify(&self, input: &NcPoly, rules: &RelationSet) -> Result<(), RewriteError> {
        let ord = rules.order;
        let mut current = input.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let Some(lead) = rules.leads.get(step.rule) else {
                return Err(RewriteError::BadTrace(format!(
                    "step {i} references rule {} of {}",
                    step.rule,
                    rules.len()
                )));
            };
            let target = step.left.concat(lead).concat(&step.right);
            let Ok((current_lead, _)) = leading_monomial(&current, ord) else {
                return Err(RewriteError::BadTrace(format!("step {i} applied to zero")));
            };
            if ord.cmp_words(&target, &current_lead) == std::cmp::Ordering::Greater {
                return Err(RewriteError::BadTrace(format!(
                    "step {i} rewrites above the leading monomial"
                )));
            }
            if current.coeff(&target) != Some(&step.coeff) {
                return Err(RewriteError::BadTrace(format!(
                    "step {i} records a stale coefficient"
                )));
            }
            current = subtract_framed(&current, &rules.polys[step.rule], step);
        }
        if current != self.result {
            return Err(RewriteError::BadTrace("result differs after replay".into()));
        }
        Ok(())
    }

    /// Line-oriented log `rule, left, right, coeff`, empty contexts shown
    /// as ε.
    pub fn render_log(&self, alphabet: &Alphabet) -> String {
        let side = |w: &Word| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                alphabet.format(w)
            }
        };
        self.steps
            .iter()
            .map(|s| format!("{}, {}, {}, {}\n", s.rule, side(&s.left), side(&s.right), s.coeff))
            .collect()
    }
}

/// current − coeff·left·g·right
fn subtract_framed(current: &NcPoly, g: &NcPoly, step: &ReductionStep) -> NcPoly {
    let alphabet = current.alphabet().clone();
    let mut framed = NcPoly::zero(alphabet.clone());
    for (word, c) in g.terms() {
        let product = step.left.concat(word).concat(&step.right);
        let term = NcPoly::monomial(alphabet.clone(), product, c * &step.coeff);
        framed = framed.add(&term).expect("same alphabet");
    }
    current.sub(&framed).expect("same alphabet")
}

fn find_factor(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&i| &haystack[i..i + needle.len()] == needle)
}

/// Rewrites monomials (greatest first, lowest rule index, leftmost
/// occurrence) until no leading monomial of `rules` divides any monomial of
/// the result. Terminates because every step replaces a monomial by strictly
/// smaller ones.
pub fn reduce(p: &NcPoly, rules: &RelationSet) -> ReductionTrace {
    let mut current = p.clone();
    let mut steps = Vec::new();
    'outer: loop {
        let words: Vec<Word> = current.terms().map(|(w, _)| w.clone()).collect();
        for word in words.iter().rev() {
            for (rule, lead) in rules.leads.iter().enumerate() {
                if let Some(at) = find_factor(word.ranks(), lead.ranks()) {
                    let step = ReductionStep {
                        rule,
                        left: word.slice(0, at),
                        right: word.slice(at + lead.len(), word.len()),
                        coeff: current.coeff(word).expect("word is a term").clone(),
                    };
                    current = subtract_framed(&current, &rules.polys[rule], &step);
                    steps.push(step);
                    continue 'outer;
                }
            }
        }
        break;
    }
    ReductionTrace { steps, result: current }
}

/// The overlap and inclusion ambiguities of f against g: for every proper
/// overlap w = f̄·c = a·ḡ the difference f·c − a·g, and for every occurrence
/// f̄ = a·ḡ·c the difference f − a·g·c (the identity occurrence of f in
/// itself is skipped). Zero inputs yield no compositions.
pub fn compositions(f: &NcPoly, g: &NcPoly, ord: MonomialOrder) -> Vec<NcPoly> {
    let (Ok(f), Ok(g)) = (f.monic(ord), g.monic(ord)) else {
        return Vec::new();
    };
    let (fl, _) = leading_monomial(&f, ord).expect("nonzero");
    let (gl, _) = leading_monomial(&g, ord).expect("nonzero");
    let alphabet = f.alphabet().clone();
    let mono = |w: &Word| NcPoly::monomial(alphabet.clone(), w.clone(), BigRational::one());
    let mut out = Vec::new();
    for t in 1..fl.len().min(gl.len()) {
        if fl.ranks()[fl.len() - t..] == gl.ranks()[..t] {
            let a = fl.slice(0, fl.len() - t);
            let c = gl.slice(t, gl.len());
            let lhs = f.mul(&mono(&c)).expect("same alphabet");
            let rhs = mono(&a).mul(&g).expect("same alphabet");
            out.push(lhs.sub(&rhs).expect("same alphabet"));
        }
    }
    if gl.len() <= fl.len() {
        for at in 0..=fl.len() - gl.len() {
            if &fl.ranks()[at..at + gl.len()] == gl.ranks() {
                if f == g && gl.len() == fl.len() {
                    continue;
                }
                let a = mono(&fl.slice(0, at));
                let c = mono(&fl.slice(at + gl.len(), fl.len()));
                let framed = a.mul(&g).expect("same alphabet").mul(&c).expect("same alphabet");
                out.push(f.sub(&framed).expect("same alphabet"));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    BoundExceeded,
}

fn interreduce(set: &RelationSet) -> RelationSet {
    let mut polys = set.polys.clone();
    loop {
        let mut changed = false;
        for i in 0..polys.len() {
            let others: Vec<NcPoly> = polys
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let other_set = RelationSet::new(set.alphabet.clone(), set.order, others)
                .expect("members already validated");
            let nf = reduce(&polys[i], &other_set).result;
            if nf != polys[i] {
                changed = true;
                if nf.is_zero() {
                    polys.remove(i);
                } else {
                    polys[i] = nf.monic(set.order).expect("nonzero");
                }
                break;
            }
        }
        if !changed {
            return RelationSet::new(set.alphabet.clone(), set.order, polys)
                .expect("members already validated");
        }
    }
}

/// Interreduces `start`, then resolves pending compositions in increasing
/// (degree, lex) order of their leading monomials, adding each nonzero
/// normal form as a new rule. Stops with `BoundExceeded` as soon as a
/// nonzero normal form has degree above `max_deg`.
pub fn complete(start: &RelationSet, max_deg: usize) -> (RelationSet, CompletionStatus) {
    let ord = start.order;
    let mut rules = interreduce(start);
    let mut pending: BTreeMap<(Word, u64), NcPoly> = BTreeMap::new();
    let mut seq = 0u64;
    let enqueue = |pending: &mut BTreeMap<(Word, u64), NcPoly>, seq: &mut u64, comp: NcPoly| {
        if comp.is_zero() {
            return;
        }
        let (lead, _) = leading_monomial(&comp, ord).expect("nonzero");
        pending.insert((lead, *seq), comp);
        *seq += 1;
    };
    for i in 0..rules.len() {
        for j in 0..rules.len() {
            for comp in compositions(&rules.polys[i], &rules.polys[j], ord) {
                enqueue(&mut pending, &mut seq, comp);
            }
        }
    }
    while let Some((_, comp)) = pending.pop_first() {
        let nf = reduce(&comp, &rules).result;
        if nf.is_zero() {
            continue;
        }
        if nf.degree() > max_deg {
            return (rules, CompletionStatus::BoundExceeded);
        }
        let nf = nf.monic(ord).expect("nonzero");
        for existing in rules.polys.clone() {
            for comp in compositions(&existing, &nf, ord) {
                enqueue(&mut pending, &mut seq, comp);
            }
            for comp in compositions(&nf, &existing, ord) {
                enqueue(&mut pending, &mut seq, comp);
            }
        }
        for comp in compositions(&nf, &nf, ord) {
            enqueue(&mut pending, &mut seq, comp);
        }
        rules.push(nf).expect("normal form is over the same alphabet");
    }
    (rules, CompletionStatus::Complete)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    InIdeal(ReductionTrace),
    NotInIdealUpTo(usize),
    Unknown,
}

/// Completes the relation set up to `max_deg` and reduces `h` against the
/// result. The trace inside `InIdeal` replays against
/// `complete(rules, max_deg).0` (completion is deterministic).
pub fn is_member(h: &NcPoly, rules: &RelationSet, max_deg: usize) -> Membership {
    let (completed, status) = complete(rules, max_deg);
    let trace = reduce(h, &completed);
    if trace.result.is_zero() {
        Membership::InIdeal(trace)
    } else if status == CompletionStatus::Complete {
        Membership::NotInIdealUpTo(max_deg)
    } else {
        Membership::Unknown
    }
}

/// Words of length ≤ max_len containing no leading monomial of `rules` as a
/// factor; these span the quotient algebra.
pub fn normal_words(rules: &RelationSet, max_len: usize) -> Vec<Word> {
    words_up_to(rules.alphabet(), max_len)
        .filter(|w| {
            rules
                .leads
                .iter()
                .all(|lead| find_factor(w.ranks(), lead.ranks()).is_none())
        })
        .collect()
}
