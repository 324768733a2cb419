//! Monomial algebras as finite automata: normal-word automata from
//! forbidden factors, determinization, minimization, growth counting, and
//! growth classification by cycle structure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num::{BigUint, One, ToPrimitive, Zero};
use thiserror::Error;

use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("state {0} leaves the state range")]
    BadState(usize),
    #[error("letter {0:?} is not in the alphabet")]
    BadLetter(char),
    #[error("operation requires a deterministic automaton")]
    Nondeterministic,
    #[error("operation requires a trimmed automaton")]
    Untrimmed,
    #[error("estimate needs n ≥ 2")]
    SmallBound,
}

/// A finite automaton over an alphabet: labeled edges, a set of initial
/// states, and a set of accepting states. Deterministic means exactly one
/// initial state and at most one successor per (state, letter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    trans: Vec<Vec<BTreeSet<usize>>>,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
}

impl Automaton {
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        edges: &[(usize, char, usize)],
        initial: &[usize],
        accepting: &[usize],
    ) -> Result<Self, AutError> {
        let k = alphabet.len();
        let mut trans = vec![vec![BTreeSet::new(); k]; states];
        for &(u, letter, v) in edges {
            if u >= states {
                return Err(AutError::BadState(u));
            }
            if v >= states {
                return Err(AutError::BadState(v));
            }
            let r = alphabet.rank(letter).ok_or(AutError::BadLetter(letter))? as usize;
            trans[u][r].insert(v);
        }
        for &s in initial.iter().chain(accepting) {
            if s >= states {
                return Err(AutError::BadState(s));
            }
        }
        Ok(Automaton {
            alphabet,
            trans,
            initial: initial.iter().copied().collect(),
            accepting: accepting.iter().copied().collect(),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial_states(&self) -> Vec<usize> {
        self.initial.iter().copied().collect()
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        self.accepting.iter().copied().collect()
    }

    pub fn edges(&self) -> Vec<(usize, char, usize)> {
        let mut out = Vec::new();
        for (u, by_letter) in self.trans.iter().enumerate() {
            for (r, targets) in by_letter.iter().enumerate() {
                for &v in targets {
                    out.push((u, self.alphabet.symbol(r as u8), v));
                }
            }
        }
        out
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1
            && self
                .trans
                .iter()
                .all(|by_letter| by_letter.iter().all(|t| t.len() <= 1))
    }

    fn reachable(&self) -> BTreeSet<usize> {
        let mut seen = self.initial.clone();
        let mut stack: Vec<usize> = seen.iter().copied().collect();
        while let Some(u) = stack.pop() {
            for targets in &self.trans[u] {
                for &v in targets {
                    if seen.insert(v) {
                        stack.push(v);
                    }
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> BTreeSet<usize> {
        let mut back = vec![BTreeSet::new(); self.num_states()];
        for (u, _, v) in self.edges() {
            back[v].insert(u);
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = seen.iter().copied().collect();
        while let Some(v) = stack.pop() {
            for &u in &back[v] {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }

    pub fn is_trimmed(&self) -> bool {
        let live: BTreeSet<usize> = self
            .reachable()
            .intersection(&self.coreachable())
            .copied()
            .collect();
        live.len() == self.num_states()
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut cur = self.initial.clone();
        for &r in w.ranks() {
            cur = cur
                .iter()
                .flat_map(|&s| self.trans[s][r as usize].iter().copied())
                .collect();
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|s| self.accepting.contains(s))
    }
}

/// Renumbers `keep` (in increasing order) and drops everything else.
fn restrict(a: &Automaton, keep: &BTreeSet<usize>) -> Automaton {
    let index: BTreeMap<usize, usize> =
        keep.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let k = a.alphabet.len();
    let mut trans = vec![vec![BTreeSet::new(); k]; keep.len()];
    for &u in keep {
        for r in 0..k {
            for &v in &a.trans[u][r] {
                if let Some(&vi) = index.get(&v) {
                    trans[index[&u]][r].insert(vi);
                }
            }
        }
    }
    Automaton {
        alphabet: a.alphabet.clone(),
        trans,
        initial: a.initial.iter().filter_map(|s| index.get(s).copied()).collect(),
        accepting: a.accepting.iter().filter_map(|s| index.get(s).copied()).collect(),
    }
}

/// Drops states not both reachable and co-reachable; the language is
/// unchanged.
pub fn trim(a: &Automaton) -> Automaton {
    let live: BTreeSet<usize> = a
        .reachable()
        .intersection(&a.coreachable())
        .copied()
        .collect();
    restrict(a, &live)
}

/// Aho–Corasick construction: the deterministic automaton of all words with
/// no factor in `forbidden`, every state accepting, trimmed.
pub fn build_normal_word_automaton(alphabet: &Alphabet, forbidden: &[Word]) -> Automaton {
    let k = alphabet.len();
    let mut next: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut terminal = vec![false];
    for word in forbidden {
        assert!(!word.is_empty(), "forbidden factors must be nonempty");
        let mut node = 0;
        for &r in word.ranks() {
            let r = r as usize;
            node = match next[node][r] {
                Some(child) => child,
                None => {
                    next.push(vec![None; k]);
                    terminal.push(false);
                    let child = next.len() - 1;
                    next[node][r] = Some(child);
                    child
                }
            };
        }
        terminal[node] = true;
    }

    let mut fail = vec![0usize; next.len()];
    let mut queue = VecDeque::new();
    for r in 0..k {
        match next[0][r] {
            Some(child) => queue.push_back(child),
            None => next[0][r] = Some(0),
        }
    }
    while let Some(u) = queue.pop_front() {
        if terminal[fail[u]] {
            terminal[u] = true;
        }
        for r in 0..k {
            let fallback = next[fail[u]][r].expect("processed levels are complete");
            match next[u][r] {
                Some(child) => {
                    fail[child] = fallback;
                    queue.push_back(child);
                }
                None => next[u][r] = Some(fallback),
            }
        }
    }

    let mut edges = Vec::new();
    for u in 0..next.len() {
        if terminal[u] {
            continue;
        }
        for r in 0..k {
            let v = next[u][r].expect("table is complete");
            if !terminal[v] {
                edges.push((u, alphabet.symbol(r as u8), v));
            }
        }
    }
    let states: Vec<usize> = (0..next.len()).collect();
    let accepting: Vec<usize> = states.iter().copied().filter(|&s| !terminal[s]).collect();
    let raw = Automaton::new(alphabet.clone(), next.len(), &edges, &[0], &accepting)
        .expect("trie states and letters are in range");
    trim(&raw)
}

/// Subset construction. The result has exactly one initial state and at
/// most one successor per (state, letter), and accepts the same language.
pub fn determinize(a: &Automaton) -> Automaton {
    let k = a.alphabet.len();
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut subsets = vec![a.initial.clone()];
    index.insert(a.initial.clone(), 0);
    let mut edges = Vec::new();
    let mut at = 0;
    while at < subsets.len() {
        let subset = subsets[at].clone();
        for r in 0..k {
            let target: BTreeSet<usize> = subset
                .iter()
                .flat_map(|&s| a.trans[s][r].iter().copied())
                .collect();
            if target.is_empty() {
                continue;
            }
            let id = *index.entry(target.clone()).or_insert_with(|| {
                subsets.push(target);
                subsets.len() - 1
            });
            edges.push((at, a.alphabet.symbol(r as u8), id));
        }
        at += 1;
    }
    let accepting: Vec<usize> = subsets
        .iter()
        .enumerate()
        .filter(|(_, subset)| subset.iter().any(|s| a.accepting.contains(s)))
        .map(|(i, _)| i)
        .collect();
    Automaton::new(a.alphabet.clone(), subsets.len(), &edges, &[0], &accepting)
        .expect("subset indices and letters are in range")
}

/// Moore partition refinement on the sink-completed automaton; the dead
/// class and unreachable classes are dropped, so the result is the minimal
/// trimmed deterministic automaton of the same language.
pub fn minimize(a: &Automaton) -> Result<Automaton, AutError> {
    if !a.is_deterministic() {
        return Err(AutError::Nondeterministic);
    }
    let n = a.num_states();
    let k = a.alphabet.len();
    let sink = n;
    let step = |s: usize, r: usize| -> usize {
        if s == sink {
            sink
        } else {
            a.trans[s][r].iter().next().copied().unwrap_or(sink)
        }
    };
    let mut class: Vec<usize> = (0..=n)
        .map(|s| usize::from(s != sink && a.accepting.contains(&s)))
        .collect();
    loop {
        let mut signature_index: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut fresh = vec![0usize; n + 1];
        for s in 0..=n {
            let signature = (class[s], (0..k).map(|r| class[step(s, r)]).collect());
            let id = signature_index.len();
            fresh[s] = *signature_index.entry(signature).or_insert(id);
        }
        if fresh == class {
            break;
        }
        class = fresh;
    }
    let dead = class[sink];
    let kept: Vec<usize> = class
        .iter()
        .take(n)
        .copied()
        .filter(|&c| c != dead)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let representative = |c: usize, kept: &[usize]| kept.iter().position(|&x| x == c);
    let mut edges = Vec::new();
    let mut seen_pairs = BTreeSet::new();
    for s in 0..n {
        let Some(ci) = representative(class[s], &kept) else {
            continue;
        };
        for r in 0..k {
            let t = step(s, r);
            if t == sink {
                continue;
            }
            if let Some(ti) = representative(class[t], &kept) {
                if seen_pairs.insert((ci, r, ti)) {
                    edges.push((ci, a.alphabet.symbol(r as u8), ti));
                }
            }
        }
    }
    let initial_state = *a.initial.iter().next().expect("deterministic");
    let initial: Vec<usize> = representative(class[initial_state], &kept)
        .into_iter()
        .collect();
    let accepting: Vec<usize> = a
        .accepting
        .iter()
        .filter_map(|&s| representative(class[s], &kept))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if initial.is_empty() {
        return Automaton::new(a.alphabet.clone(), 0, &[], &[], &[]);
    }
    let merged = Automaton::new(a.alphabet.clone(), kept.len(), &edges, &initial, &accepting)
        .expect("class indices and letters are in range");
    Ok(trim(&merged))
}

/// V(0..n): V(m) counts the accepted words of length at most m, the empty
/// word included when accepted.
pub fn growth(a: &Automaton, n: usize) -> Result<Vec<BigUint>, AutError> {
    if !a.is_deterministic() {
        return Err(AutError::Nondeterministic);
    }
    let k = a.alphabet.len();
    let mut counts = vec![BigUint::zero(); a.num_states()];
    for &s in &a.initial {
        counts[s] = BigUint::one();
    }
    let per_length = |counts: &[BigUint]| -> BigUint {
        a.accepting.iter().map(|&s| counts[s].clone()).sum()
    };
    let mut out = vec![per_length(&counts)];
    for _ in 1..=n {
        let mut advanced = vec![BigUint::zero(); a.num_states()];
        for s in 0..a.num_states() {
            if counts[s].is_zero() {
                continue;
            }
            for r in 0..k {
                for &t in &a.trans[s][r] {
                    advanced[t] += &counts[s];
                }
            }
        }
        counts = advanced;
        let total = out.last().expect("nonempty") + per_length(&counts);
        out.push(total);
    }
    Ok(out)
}

fn strongly_connected_components(a: &Automaton) -> Vec<Vec<usize>> {
    let n = a.num_states();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        seen[start] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let succ: Vec<usize> = a.trans[v]
                .iter()
                .flat_map(|t| t.iter().copied())
                .collect();
            if *i < succ.len() {
                let w = succ[*i];
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut back = vec![Vec::new(); n];
    for (u, _, v) in a.edges() {
        back[v].push(u);
    }
    let mut component = vec![usize::MAX; n];
    let mut components = Vec::new();
    for &start in order.iter().rev() {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        component[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in &back[v] {
                if component[u] == usize::MAX {
                    component[u] = id;
                    stack.push(u);
                }
            }
        }
        components.push(members);
    }
    components
}

/// True when some state lies on two different cycles, counting parallel
/// edges with different letters as different: equivalently, some strongly
/// connected component carries more internal edges than states.
pub fn has_doubly_cyclic_vertex(a: &Automaton) -> bool {
    let components = strongly_connected_components(a);
    let mut component_of = vec![0usize; a.num_states()];
    for (id, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = id;
        }
    }
    let mut internal_edges = vec![0usize; components.len()];
    for (u, _, v) in a.edges() {
        if component_of[u] == component_of[v] {
            internal_edges[component_of[u]] += 1;
        }
    }
    components
        .iter()
        .enumerate()
        .any(|(id, members)| internal_edges[id] > members.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    Exponential,
    Polynomial(usize),
    Finite,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthClass::Exponential => write!(f, "exponential"),
            GrowthClass::Polynomial(d) => write!(f, "polynomial({d})"),
            GrowthClass::Finite => write!(f, "finite"),
        }
    }
}

/// Classifies the growth of the accepted language: exponential when a state
/// lies on two different cycles, finite when the graph is acyclic, and
/// otherwise polynomial with degree the largest number of cycles met along
/// one path. The automaton is minimized first.
pub fn classify_growth(a: &Automaton) -> Result<GrowthClass, AutError> {
    if !a.is_deterministic() {
        return Err(AutError::Nondeterministic);
    }
    if !a.is_trimmed() {
        return Err(AutError::Untrimmed);
    }
    let m = minimize(a)?;
    if m.num_states() == 0 {
        return Ok(GrowthClass::Finite);
    }
    if has_doubly_cyclic_vertex(&m) {
        return Ok(GrowthClass::Exponential);
    }
    let components = strongly_connected_components(&m);
    let mut component_of = vec![0usize; m.num_states()];
    for (id, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = id;
        }
    }
    let mut cyclic = vec![false; components.len()];
    for (u, _, v) in m.edges() {
        if component_of[u] == component_of[v] {
            cyclic[component_of[u]] = true;
        }
    }
    if !cyclic.iter().any(|&c| c) {
        return Ok(GrowthClass::Finite);
    }
    let mut successors = vec![BTreeSet::new(); components.len()];
    for (u, _, v) in m.edges() {
        if component_of[u] != component_of[v] {
            successors[component_of[u]].insert(component_of[v]);
        }
    }
    // components come out in reverse topological order of the condensation
    let mut best = vec![0usize; components.len()];
    for id in (0..components.len()).rev() {
        let downstream = successors[id].iter().map(|&s| best[s]).max().unwrap_or(0);
        best[id] = downstream + usize::from(cyclic[id]);
    }
    Ok(GrowthClass::Polynomial(
        best.iter().copied().max().expect("at least one component"),
    ))
}

/// ln V(n) / ln n — a numeric lower estimate of the growth exponent for
/// polynomially growing languages.
pub fn gk_estimate(a: &Automaton, n: usize) -> Result<f64, AutError> {
    if n < 2 {
        return Err(AutError::SmallBound);
    }
    let v = growth(a, n)?;
    let value = v[n].to_f64().unwrap_or(f64::INFINITY);
    Ok(value.ln() / (n as f64).ln())
}

/// DOT rendering: accepting states doubled, one edge per state pair with
/// the letters joined on the label.
pub fn to_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for &s in &a.initial {
        out.push_str(&format!("  start{s} [shape=point];\n  start{s} -> s{s};\n"));
    }
    for s in 0..a.num_states() {
        if a.accepting.contains(&s) {
            out.push_str(&format!("  s{s} [shape=doublecircle];\n"));
        } else {
            out.push_str(&format!("  s{s};\n"));
        }
    }
    let mut labels: BTreeMap<(usize, usize), Vec<char>> = BTreeMap::new();
    for (u, letter, v) in a.edges() {
        labels.entry((u, v)).or_default().push(letter);
    }
    for ((u, v), letters) in labels {
        let label: String = letters
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("  s{u} -> s{v} [label=\"{label}\"];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_up_to;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn xy() -> Alphabet {
        Alphabet::new("xy").unwrap()
    }

    fn forbid(words: &[&str]) -> Vec<Word> {
        words.iter().map(|w| xy().word(w).unwrap()).collect()
    }

    fn contains_factor(w: &Word, f: &Word) -> bool {
        if f.len() > w.len() {
            return false;
        }
        (0..=w.len() - f.len()).any(|i| &w.ranks()[i..i + f.len()] == f.ranks())
    }

    fn check_language(a: &Automaton, forbidden: &[Word], max_len: usize) {
        for w in words_up_to(&xy(), max_len) {
            let avoid = forbidden.iter().all(|f| !contains_factor(&w, f));
            assert_eq!(a.accepts(&w), avoid, "word {:?}", xy().format(&w));
        }
    }

    #[test]
    fn normal_word_automata_match_brute_force_filters() {
        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        assert_eq!(yy.num_states(), 2);
        assert!(yy.is_deterministic());
        assert!(yy.is_trimmed());
        assert_eq!(yy.accepting_states().len(), yy.num_states());
        check_language(&yy, &forbid(&["yy"]), 8);

        let yx = build_normal_word_automaton(&xy(), &forbid(&["yx"]));
        check_language(&yx, &forbid(&["yx"]), 8);
        for w in words_up_to(&xy(), 8) {
            let sorted = w.ranks().windows(2).all(|p| p[0] <= p[1]);
            assert_eq!(yx.accepts(&w), sorted);
        }

        let overlapping = forbid(&["xx", "yxxy", "xyx"]);
        check_language(&build_normal_word_automaton(&xy(), &overlapping), &overlapping, 8);
    }

    #[test]
    fn unary_forbidden_letter_leaves_only_the_empty_word() {
        let unary = Alphabet::new("x").unwrap();
        let a = build_normal_word_automaton(&unary, &[unary.word("x").unwrap()]);
        assert_eq!(a.num_states(), 1);
        assert!(a.accepts(&Word::empty()));
        assert!(!a.accepts(&unary.word("x").unwrap()));
        assert!(!a.accepts(&unary.word("xx").unwrap()));
    }

    #[test]
    fn no_forbidden_factors_accepts_everything() {
        let a = build_normal_word_automaton(&xy(), &[]);
        assert_eq!(a.num_states(), 1);
        for w in words_up_to(&xy(), 6) {
            assert!(a.accepts(&w));
        }
        let v = growth(&a, 10).unwrap();
        assert_eq!(v[10], BigUint::from(2047u32));
    }

    #[test]
    fn determinize_preserves_the_language() {
        // two initial states: x* from one, y* from the other
        let nfa = Automaton::new(xy(), 2, &[(0, 'x', 0), (1, 'y', 1)], &[0, 1], &[0, 1])
            .unwrap();
        assert!(!nfa.is_deterministic());
        let dfa = determinize(&nfa);
        assert!(dfa.is_deterministic());
        for w in words_up_to(&xy(), 8) {
            assert_eq!(dfa.accepts(&w), nfa.accepts(&w));
        }

        let branching = Automaton::new(
            xy(),
            3,
            &[(0, 'x', 1), (0, 'x', 2), (1, 'y', 1), (2, 'x', 2)],
            &[0],
            &[1, 2],
        )
        .unwrap();
        let det = determinize(&branching);
        assert!(det.is_deterministic());
        for w in words_up_to(&xy(), 8) {
            assert_eq!(det.accepts(&w), branching.accepts(&w));
        }

        let already = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        let again = determinize(&already);
        assert!(again.is_deterministic());
        for w in words_up_to(&xy(), 8) {
            assert_eq!(again.accepts(&w), already.accepts(&w));
        }
    }

    #[test]
    fn determinize_of_the_empty_language_is_a_single_dead_state() {
        let empty = Automaton::new(xy(), 0, &[], &[], &[]).unwrap();
        let det = determinize(&empty);
        assert_eq!(det.num_states(), 1);
        assert!(det.is_deterministic());
        assert!(det.accepting_states().is_empty());
        for w in words_up_to(&xy(), 4) {
            assert!(!det.accepts(&w));
        }
    }

    #[test]
    fn trim_drops_dead_weight_and_keeps_the_language() {
        let bloated = Automaton::new(
            xy(),
            4,
            &[(0, 'x', 1), (1, 'y', 1), (2, 'x', 2), (1, 'x', 3)],
            &[0],
            &[1],
        )
        .unwrap();
        assert!(!bloated.is_trimmed());
        let lean = trim(&bloated);
        assert!(lean.is_trimmed());
        assert_eq!(lean.num_states(), 2);
        for w in words_up_to(&xy(), 8) {
            assert_eq!(lean.accepts(&w), bloated.accepts(&w));
        }
    }

    #[test]
    fn minimize_collapses_equivalent_states() {
        // two interchangeable middle states recognizing x(x|y)*? no: x then anything
        let redundant = Automaton::new(
            xy(),
            3,
            &[(0, 'x', 1), (0, 'y', 2), (1, 'x', 1), (2, 'x', 2), (1, 'y', 1), (2, 'y', 2)],
            &[0],
            &[0, 1, 2],
        )
        .unwrap();
        let minimal = minimize(&redundant).unwrap();
        assert_eq!(minimal.num_states(), 1);
        for w in words_up_to(&xy(), 8) {
            assert_eq!(minimal.accepts(&w), redundant.accepts(&w));
        }

        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        assert_eq!(minimize(&yy).unwrap().num_states(), 2);

        let nfa = Automaton::new(xy(), 2, &[(0, 'x', 0), (0, 'x', 1)], &[0], &[1]).unwrap();
        assert_eq!(minimize(&nfa), Err(AutError::Nondeterministic));
    }

    #[test]
    fn minimize_of_an_empty_language_has_no_states() {
        let dead = Automaton::new(xy(), 2, &[(0, 'x', 1)], &[0], &[]).unwrap();
        let minimal = minimize(&dead).unwrap();
        assert_eq!(minimal.num_states(), 0);
        assert!(!minimal.accepts(&Word::empty()));
    }

    #[test]
    fn growth_counts_cumulative_dimensions() {
        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        let v = growth(&yy, 5).unwrap();
        let expected: Vec<BigUint> =
            [1u32, 3, 6, 11, 19, 32].iter().map(|&n| BigUint::from(n)).collect();
        assert_eq!(v, expected);

        let yx = build_normal_word_automaton(&xy(), &forbid(&["yx"]));
        let v = growth(&yx, 10).unwrap();
        for n in 1..=10usize {
            let per_length = &v[n] - &v[n - 1];
            assert_eq!(per_length, BigUint::from(n as u32 + 1));
        }

        let nfa = Automaton::new(xy(), 2, &[(0, 'x', 0), (0, 'x', 1)], &[0], &[1]).unwrap();
        assert_eq!(growth(&nfa, 3), Err(AutError::Nondeterministic));
    }

    #[test]
    fn growth_matches_brute_force_on_mixed_forbidden_sets() {
        for forbidden in [forbid(&["yy"]), forbid(&["yx"]), forbid(&["xx", "xyx"]), forbid(&["xyy", "yxx"])]
        {
            let a = build_normal_word_automaton(&xy(), &forbidden);
            let v = growth(&a, 8).unwrap();
            let mut cumulative = 0u64;
            for n in 0..=8usize {
                cumulative += words_up_to(&xy(), n)
                    .filter(|w| w.len() == n)
                    .filter(|w| forbidden.iter().all(|f| !contains_factor(w, f)))
                    .count() as u64;
                assert_eq!(v[n], BigUint::from(cumulative), "length {n}");
            }
        }
    }

    #[test]
    fn classify_spec_examples() {
        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        assert_eq!(classify_growth(&yy), Ok(GrowthClass::Exponential));

        let yx = build_normal_word_automaton(&xy(), &forbid(&["yx"]));
        assert_eq!(classify_growth(&yx), Ok(GrowthClass::Polynomial(2)));

        let unary = Alphabet::new("x").unwrap();
        let loop_only = Automaton::new(unary, 1, &[(0, 'x', 0)], &[0], &[0]).unwrap();
        assert_eq!(classify_growth(&loop_only), Ok(GrowthClass::Polynomial(1)));

        let only_short = build_normal_word_automaton(&xy(), &forbid(&["xx", "yy", "xy", "yx"]));
        assert_eq!(classify_growth(&only_short), Ok(GrowthClass::Finite));

        let untrimmed = Automaton::new(xy(), 2, &[(0, 'x', 0)], &[0], &[0]).unwrap();
        assert_eq!(classify_growth(&untrimmed), Err(AutError::Untrimmed));
        let nfa = Automaton::new(xy(), 2, &[(0, 'x', 0), (0, 'x', 1)], &[0], &[0, 1]).unwrap();
        assert_eq!(classify_growth(&nfa), Err(AutError::Nondeterministic));
    }

    #[test]
    fn classification_brackets_the_growth_numerically() {
        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        let v = growth(&yy, 30).unwrap();
        for n in 5..=30usize {
            let floor = (0.5 * 1.6f64.powi(n as i32)) as u64;
            assert!(v[n] > BigUint::from(floor), "n = {n}");
        }

        let yx = build_normal_word_automaton(&xy(), &forbid(&["yx"]));
        let v = growth(&yx, 1000).unwrap();
        assert_eq!(v[1000], BigUint::from(501_501u32));
        for n in [10usize, 100, 1000] {
            let squared = BigUint::from((n * n) as u64);
            assert!(&v[n] * 2u32 >= squared, "lower bound at {n}");
            assert!(v[n] <= &squared * 2u32, "upper bound at {n}");
        }
    }

    #[test]
    fn chained_loops_add_one_degree_each() {
        // x* y* z* : three loops joined by chains
        let xyz = Alphabet::new("xyz").unwrap();
        let chained = Automaton::new(
            xyz.clone(),
            3,
            &[
                (0, 'x', 0),
                (0, 'y', 1),
                (1, 'y', 1),
                (1, 'z', 2),
                (2, 'z', 2),
                (0, 'z', 2),
            ],
            &[0],
            &[0, 1, 2],
        )
        .unwrap();
        assert_eq!(classify_growth(&chained), Ok(GrowthClass::Polynomial(3)));

        // loop, chain of two plain states, loop: still degree 2
        let stretched = Automaton::new(
            xy(),
            4,
            &[(0, 'x', 0), (0, 'y', 1), (1, 'y', 2), (2, 'y', 3), (3, 'x', 3)],
            &[0],
            &[0, 1, 2, 3],
        )
        .unwrap();
        assert_eq!(classify_growth(&stretched), Ok(GrowthClass::Polynomial(2)));
    }

    #[test]
    fn gk_estimates_approach_the_dimension() {
        let yx = build_normal_word_automaton(&xy(), &forbid(&["yx"]));
        let estimate = gk_estimate(&yx, 1000).unwrap();
        assert!((estimate - 2.0).abs() < 0.15);
        assert!(estimate > 1.89 && estimate < 1.91);

        let unary = Alphabet::new("x").unwrap();
        let line = Automaton::new(unary, 1, &[(0, 'x', 0)], &[0], &[0]).unwrap();
        let estimate = gk_estimate(&line, 1000).unwrap();
        assert!((estimate - 1.0).abs() < 0.15);

        let finite = build_normal_word_automaton(&xy(), &forbid(&["xx", "yy", "xy", "yx"]));
        let estimate = gk_estimate(&finite, 1000).unwrap();
        assert!(estimate.abs() < 0.2);

        assert_eq!(gk_estimate(&yx, 1), Err(AutError::SmallBound));
    }

    #[test]
    fn exponential_and_polynomial_are_exclusive_and_exhaustive() {
        let sets = [
            forbid(&["yy"]),
            forbid(&["yx"]),
            forbid(&["xx"]),
            forbid(&["xyx"]),
            forbid(&["xx", "yy"]),
            forbid(&["xy", "yx"]),
            forbid(&["xxx", "yyy"]),
            vec![],
        ];
        for forbidden in sets {
            let a = build_normal_word_automaton(&xy(), &forbidden);
            let class = classify_growth(&a).unwrap();
            let m = minimize(&a).unwrap();
            let has_cycle = strongly_connected_components(&m).iter().any(|members| {
                members.len() > 1
                    || m.edges()
                        .iter()
                        .any(|&(u, _, v)| u == v && members.contains(&u))
            });
            match class {
                GrowthClass::Finite => assert!(!has_cycle),
                GrowthClass::Exponential | GrowthClass::Polynomial(_) => assert!(has_cycle),
            }
            if has_cycle {
                assert!(matches!(
                    class,
                    GrowthClass::Exponential | GrowthClass::Polynomial(_)
                ));
            }
        }
    }

    fn brute_force_doubly_cyclic(a: &Automaton) -> bool {
        // enumerate simple cycles as (vertex list, letter list), minimal
        // vertex first; count cycles through each vertex
        let n = a.num_states();
        let edges = a.edges();
        let mut through = vec![0usize; n];
        let mut path: Vec<(usize, char)> = Vec::new();
        fn explore(
            edges: &[(usize, char, usize)],
            start: usize,
            current: usize,
            visited: &mut Vec<bool>,
            path: &mut Vec<(usize, char)>,
            through: &mut Vec<usize>,
        ) {
            for &(u, letter, v) in edges {
                if u != current || v < start {
                    continue;
                }
                if v == start {
                    through[start] += 1;
                    for &(w, _) in path.iter() {
                        through[w] += 1;
                    }
                } else if !visited[v] {
                    visited[v] = true;
                    path.push((v, letter));
                    explore(edges, start, v, visited, path, through);
                    path.pop();
                    visited[v] = false;
                }
            }
        }
        for start in 0..n {
            let mut visited = vec![false; n];
            visited[start] = true;
            explore(&edges, start, start, &mut visited, &mut path, &mut through);
        }
        through.iter().any(|&c| c >= 2)
    }

    #[test]
    fn doubly_cyclic_detection_matches_cycle_enumeration_exhaustively() {
        // all simple digraphs on up to 4 states, self-loops allowed
        let letters = Alphabet::new("abcd").unwrap();
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let mut edges = Vec::new();
                let mut next_letter = vec![0usize; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        edges.push((u, letters.symbols()[next_letter[u]], v));
                        next_letter[u] += 1;
                    }
                }
                let a = Automaton::new(letters.clone(), n, &edges, &[], &[]).unwrap();
                assert_eq!(
                    has_doubly_cyclic_vertex(&a),
                    brute_force_doubly_cyclic(&a),
                    "n={n} mask={mask:b}"
                );
            }
        }
    }

    #[test]
    fn doubly_cyclic_detection_matches_on_sampled_five_state_graphs() {
        let letters = Alphabet::new("abcde").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..500 {
            let mut edges = Vec::new();
            let mut next_letter = vec![0usize; 5];
            for u in 0..5usize {
                for v in 0..5usize {
                    if rng.gen_bool(0.2) {
                        edges.push((u, letters.symbols()[next_letter[u]], v));
                        next_letter[u] += 1;
                    }
                }
            }
            let a = Automaton::new(letters.clone(), 5, &edges, &[], &[]).unwrap();
            assert_eq!(has_doubly_cyclic_vertex(&a), brute_force_doubly_cyclic(&a));
        }
    }

    #[test]
    fn parallel_letters_count_as_distinct_cycles() {
        let both = Automaton::new(xy(), 1, &[(0, 'x', 0), (0, 'y', 0)], &[0], &[0]).unwrap();
        assert!(has_doubly_cyclic_vertex(&both));
        assert_eq!(classify_growth(&both), Ok(GrowthClass::Exponential));

        let pair = Automaton::new(
            xy(),
            2,
            &[(0, 'x', 1), (0, 'y', 1), (1, 'x', 0)],
            &[0],
            &[0, 1],
        )
        .unwrap();
        assert!(has_doubly_cyclic_vertex(&pair));

        let single = Automaton::new(xy(), 1, &[(0, 'x', 0)], &[0], &[0]).unwrap();
        assert!(!has_doubly_cyclic_vertex(&single));
    }

    #[test]
    fn dot_export_lists_states_and_grouped_edges() {
        let yy = build_normal_word_automaton(&xy(), &forbid(&["yy"]));
        let dot = to_dot(&yy);
        assert!(dot.starts_with("digraph automaton {"));
        assert!(dot.contains("s0 [shape=doublecircle];"));
        assert!(dot.contains("->"));
        assert!(dot.trim_end().ends_with('}'));
        let both = Automaton::new(xy(), 1, &[(0, 'x', 0), (0, 'y', 0)], &[0], &[0]).unwrap();
        assert!(to_dot(&both).contains("label=\"x,y\""));
    }
}
