//! Classical DFA algorithms: completion, trimming, minimization, equivalence,
//! plus the brute-force language enumeration used as an oracle everywhere.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::alphabet::{all_words, Alphabet, Symbol, Word};
use crate::error::{Error, Result};
use crate::generalized::dga_accepts;
use crate::model::{Automaton, Dfa, Dga, Dsa, StateId};
use crate::semantics::Runner;

/// Anything with a membership test over an alphabet.
pub trait Recognizer {
    fn alphabet(&self) -> &Arc<Alphabet>;
    fn recognizes(&self, word: &[Symbol]) -> bool;
}

impl Recognizer for Dfa {
    fn alphabet(&self) -> &Arc<Alphabet> {
        Dfa::alphabet(self)
    }
    fn recognizes(&self, word: &[Symbol]) -> bool {
        dfa_accepts(self, word)
    }
}

impl Recognizer for Runner<'_> {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.dsa().alphabet()
    }
    fn recognizes(&self, word: &[Symbol]) -> bool {
        self.accepts(word)
    }
}

impl Recognizer for Dga {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.0.alphabet()
    }
    fn recognizes(&self, word: &[Symbol]) -> bool {
        dga_accepts(self, word)
    }
}

pub fn dfa_accepts(m: &Dfa, word: &[Symbol]) -> bool {
    m.run_from(m.initial(), word)
        .is_some_and(|q| m.is_accepting(q))
}

/// Accepted words of length ≤ `max_len`, in shortlex order, by brute force.
pub fn enumerate_language<R: Recognizer + ?Sized>(r: &R, max_len: usize) -> Vec<Word> {
    all_words(r.alphabet(), max_len)
        .into_iter()
        .filter(|w| r.recognizes(w))
        .collect()
}

pub fn enumerate_dsa(a: &Dsa, max_len: usize) -> Vec<Word> {
    enumerate_language(&Runner::new(a), max_len)
}

pub fn enumerate_automaton(a: &Automaton, max_len: usize) -> Vec<Word> {
    match a {
        Automaton::Dsa(x) => enumerate_dsa(x, max_len),
        Automaton::Dfa(m) => enumerate_language(m, max_len),
        Automaton::Dga(h) => enumerate_language(h, max_len),
    }
}

fn fresh_name(names: &[String], base: &str) -> String {
    let mut candidate = base.to_string();
    while names.iter().any(|n| n == &candidate) {
        candidate.push('\'');
    }
    candidate
}

/// Adds a non-accepting absorbing sink for every missing transition.
pub fn complete(m: &Dfa) -> Dfa {
    if m.is_complete() {
        return m.clone();
    }
    let mut names = m.state_names().to_vec();
    let sink = StateId(names.len() as u32);
    names.push(fresh_name(&names, "sink"));
    let k = m.alphabet().len();
    let mut table: Vec<Vec<Option<StateId>>> = m
        .table()
        .iter()
        .map(|row| row.iter().map(|r| Some(r.unwrap_or(sink))).collect())
        .collect();
    table.push(vec![Some(sink); k]);
    Dfa::from_table(
        m.alphabet().clone(),
        names,
        m.initial(),
        m.accepting().iter().copied(),
        table,
    )
}

pub fn reachable(m: &Dfa) -> Vec<bool> {
    let mut seen = vec![false; m.num_states()];
    let mut stack = vec![m.initial()];
    seen[m.initial().index()] = true;
    while let Some(q) = stack.pop() {
        for r in m.table()[q.index()].iter().flatten() {
            if !seen[r.index()] {
                seen[r.index()] = true;
                stack.push(*r);
            }
        }
    }
    seen
}

fn coreachable(m: &Dfa) -> Vec<bool> {
    let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); m.num_states()];
    for (q, _, r) in m.transitions() {
        preds[r.index()].push(q);
    }
    let mut seen = vec![false; m.num_states()];
    let mut stack: Vec<StateId> = m.accepting().iter().copied().collect();
    for q in &stack {
        seen[q.index()] = true;
    }
    while let Some(q) = stack.pop() {
        for p in &preds[q.index()] {
            if !seen[p.index()] {
                seen[p.index()] = true;
                stack.push(*p);
            }
        }
    }
    seen
}

/// Keeps the states lying on some accepting path. An empty language yields
/// a single non-accepting initial state with no transitions.
pub fn trim(m: &Dfa) -> Dfa {
    let reach = reachable(m);
    let coreach = coreachable(m);
    let keep: Vec<bool> = reach.iter().zip(&coreach).map(|(a, b)| *a && *b).collect();
    if !keep[m.initial().index()] {
        return Dfa::new(
            m.alphabet().clone(),
            vec![m.state_name(m.initial()).to_string()],
            StateId(0),
            [],
        );
    }
    restrict(m, &keep)
}

fn restrict(m: &Dfa, keep: &[bool]) -> Dfa {
    let mut remap = vec![None; m.num_states()];
    let mut names = Vec::new();
    for q in m.states() {
        if keep[q.index()] {
            remap[q.index()] = Some(StateId(names.len() as u32));
            names.push(m.state_name(q).to_string());
        }
    }
    let table = m
        .states()
        .filter(|q| keep[q.index()])
        .map(|q| {
            m.table()[q.index()]
                .iter()
                .map(|r| r.and_then(|r| remap[r.index()]))
                .collect()
        })
        .collect();
    Dfa::from_table(
        m.alphabet().clone(),
        names,
        remap[m.initial().index()].expect("initial kept"),
        m.accepting().iter().filter_map(|q| remap[q.index()]),
        table,
    )
}

/// Coarsest stable partition of a complete DFA (Moore refinement). Returns a
/// block index per state.
pub fn partition(m: &Dfa) -> Vec<usize> {
    assert!(m.is_complete(), "partition needs a complete DFA");
    let n = m.num_states();
    let mut block: Vec<usize> = m.states().map(|q| usize::from(m.is_accepting(q))).collect();
    let mut count = block.iter().copied().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![0; n];
        for q in m.states() {
            let mut sig = Vec::with_capacity(m.alphabet().len() + 1);
            sig.push(block[q.index()]);
            sig.extend(m.table()[q.index()].iter().map(|r| block[r.unwrap().index()]));
            let fresh = ids.len();
            next[q.index()] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len();
        block = next;
        if new_count == count {
            return block;
        }
        count = new_count;
    }
}

/// The canonical DFA: complete, reachable, no two equivalent states, with
/// states numbered in breadth-first order from the initial state. Each
/// state keeps the name of the first original state reached in its block.
pub fn minimize(m: &Dfa) -> Dfa {
    let c = complete(m);
    let c = restrict(&c, &reachable(&c));
    let block = partition(&c);
    let k = c.alphabet().len();

    let mut order: Vec<usize> = Vec::new();
    let mut rep: BTreeMap<usize, StateId> = BTreeMap::new();
    let mut new_id: HashMap<usize, u32> = HashMap::new();
    let mut queue = VecDeque::from([c.initial()]);
    new_id.insert(block[c.initial().index()], 0);
    rep.insert(block[c.initial().index()], c.initial());
    order.push(block[c.initial().index()]);
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let r = c.table()[q.index()][a].unwrap();
            let b = block[r.index()];
            if let std::collections::hash_map::Entry::Vacant(e) = new_id.entry(b) {
                e.insert(order.len() as u32);
                order.push(b);
                rep.insert(b, r);
                queue.push_back(r);
            }
        }
    }
    let names = order
        .iter()
        .map(|b| c.state_name(rep[b]).to_string())
        .collect();
    let table = order
        .iter()
        .map(|b| {
            let q = rep[b];
            (0..k)
                .map(|a| Some(StateId(new_id[&block[c.table()[q.index()][a].unwrap().index()]])))
                .collect()
        })
        .collect();
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, b)| c.is_accepting(rep[b]))
        .map(|(i, _)| StateId(i as u32));
    Dfa::from_table(c.alphabet().clone(), names, StateId(0), accepting, table)
}

/// Whether `u` and `v` have the same right language.
pub fn states_equivalent(m: &Dfa, u: StateId, v: StateId) -> Result<bool> {
    for q in [u, v] {
        if q.index() >= m.num_states() {
            return Err(Error::UnknownState(format!("#{}", q.0)));
        }
    }
    let block = partition(&complete(m));
    Ok(block[u.index()] == block[v.index()])
}

/// Alphabet containing `base`'s tokens in order, followed by `other`'s new ones.
pub fn union_alphabet(base: &Arc<Alphabet>, other: &Alphabet) -> Arc<Alphabet> {
    if other.tokens().iter().all(|t| base.lookup(t).is_some()) {
        return base.clone();
    }
    let mut tokens = base.tokens().to_vec();
    for t in other.tokens() {
        if base.lookup(t).is_none() {
            tokens.push(t.clone());
        }
    }
    Alphabet::new(tokens).expect("distinct tokens").shared()
}

/// Re-expresses `m` over a superset alphabet; new letters are undefined.
pub fn realign(m: &Dfa, target: &Arc<Alphabet>) -> Result<Dfa> {
    if Arc::ptr_eq(m.alphabet(), target) || **m.alphabet() == **target {
        return Ok(Dfa::from_table(
            target.clone(),
            m.state_names().to_vec(),
            m.initial(),
            m.accepting().iter().copied(),
            m.table().to_vec(),
        ));
    }
    let map: Vec<Symbol> = m
        .alphabet()
        .tokens()
        .iter()
        .map(|t| target.symbol(t))
        .collect::<Result<_>>()?;
    let table = m
        .table()
        .iter()
        .map(|row| {
            let mut out = vec![None; target.len()];
            for (a, r) in row.iter().enumerate() {
                out[map[a].index()] = *r;
            }
            out
        })
        .collect();
    Ok(Dfa::from_table(
        target.clone(),
        m.state_names().to_vec(),
        m.initial(),
        m.accepting().iter().copied(),
        table,
    ))
}

/// Outcome of a language-equivalence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// Shortest, then lexicographically first, word accepted by exactly one side.
    pub counterexample: Option<Word>,
    /// Alphabet the counterexample is written over.
    pub alphabet: Arc<Alphabet>,
}

/// Synchronized breadth-first product search. Missing transitions lead to
/// an implicit dead state, so trim DFAs are handled directly.
pub fn equivalent(m1: &Dfa, m2: &Dfa) -> Equivalence {
    let al = union_alphabet(m1.alphabet(), m2.alphabet());
    let a = realign(m1, &al).expect("superset alphabet");
    let b = realign(m2, &al).expect("superset alphabet");
    let accepts = |m: &Dfa, q: Option<StateId>| q.is_some_and(|q| m.is_accepting(q));

    let start = (Some(a.initial()), Some(b.initial()));
    type Pair = (Option<StateId>, Option<StateId>);
    let mut parent: HashMap<Pair, Option<(Pair, Symbol)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if accepts(&a, pair.0) != accepts(&b, pair.1) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, sym))) = parent.get(&cur) {
                word.push(*sym);
                cur = *prev;
            }
            word.reverse();
            return Equivalence {
                equivalent: false,
                counterexample: Some(Word::new(word)),
                alphabet: al,
            };
        }
        for sym in al.symbols() {
            let next = (
                pair.0.and_then(|q| a.next(q, sym)),
                pair.1.and_then(|q| b.next(q, sym)),
            );
            if next == (None, None) {
                // both dead: accepting status agrees forever
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, sym)));
                queue.push_back(next);
            }
        }
    }
    Equivalence {
        equivalent: true,
        counterexample: None,
        alphabet: al,
    }
}

/// Isomorphism of the reachable parts, which must cover both automata.
pub fn dfa_isomorphic(m1: &Dfa, m2: &Dfa) -> bool {
    if m1.num_states() != m2.num_states() || m1.alphabet().len() != m2.alphabet().len() {
        return false;
    }
    let Ok(b) = realign(m2, m1.alphabet()) else {
        return false;
    };
    let a = m1;
    let mut fwd: HashMap<StateId, StateId> = HashMap::new();
    let mut used: HashMap<StateId, StateId> = HashMap::new();
    let mut queue = VecDeque::from([(a.initial(), b.initial())]);
    fwd.insert(a.initial(), b.initial());
    used.insert(b.initial(), a.initial());
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) != b.is_accepting(q) {
            return false;
        }
        for sym in a.alphabet().symbols() {
            match (a.next(p, sym), b.next(q, sym)) {
                (None, None) => {}
                (Some(x), Some(y)) => match (fwd.get(&x), used.get(&y)) {
                    (None, None) => {
                        fwd.insert(x, y);
                        used.insert(y, x);
                        queue.push_back((x, y));
                    }
                    (Some(fx), Some(uy)) if *fx == y && *uy == x => {}
                    _ => return false,
                },
                _ => return false,
            }
        }
    }
    fwd.len() == a.num_states()
}

/// Cross-check of [`equivalent`]: minimize both sides and compare shapes.
pub fn equivalent_by_minimization(m1: &Dfa, m2: &Dfa) -> bool {
    let al = union_alphabet(m1.alphabet(), m2.alphabet());
    let a = minimize(&realign(m1, &al).expect("superset"));
    let b = minimize(&realign(m2, &al).expect("superset"));
    dfa_isomorphic(&a, &b)
}
