use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::{shortlex, Symbol, Word};
use crate::error::{Error, Result};
use crate::model::{Dfa, StateId};

/// Default bound on the number of simple words collected from one source.
pub const DEFAULT_CAP: usize = 100_000;

/// All simple words from `p` modulo `set`, each with the state it reaches.
///
/// Paths start at `p`, pass only through states outside `set`, visit no
/// state twice, and may end back at `p`. Missing transitions are skipped.
pub fn simple_words_from(
    m: &Dfa,
    p: StateId,
    set: &BTreeSet<StateId>,
    cap: usize,
) -> Result<Vec<(Word, StateId)>> {
    let mut out = Vec::new();
    let mut visited = vec![false; m.num_states()];
    visited[p.index()] = true;
    let mut word = Vec::new();
    dfs(m, p, p, set, cap, &mut visited, &mut word, &mut out)?;
    out.sort_by(|(u, _), (v, _)| shortlex(u, v));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    m: &Dfa,
    start: StateId,
    cur: StateId,
    set: &BTreeSet<StateId>,
    cap: usize,
    visited: &mut [bool],
    word: &mut Vec<Symbol>,
    out: &mut Vec<(Word, StateId)>,
) -> Result<()> {
    for a in m.alphabet().symbols() {
        let Some(next) = m.next(cur, a) else { continue };
        if next != start && visited[next.index()] {
            continue;
        }
        word.push(a);
        if out.len() >= cap {
            return Err(Error::CapExceeded { limit: cap });
        }
        out.push((Word::from(word.as_slice()), next));
        if next != start && !set.contains(&next) {
            visited[next.index()] = true;
            dfs(m, start, next, set, cap, visited, word, out)?;
            visited[next.index()] = false;
        }
        word.pop();
    }
    Ok(())
}

/// `SW(p, q, S)`.
pub fn simple_words(m: &Dfa, p: StateId, q: StateId, set: &BTreeSet<StateId>) -> Result<BTreeSet<Word>> {
    Ok(simple_words_from(m, p, set, DEFAULT_CAP)?
        .into_iter()
        .filter(|(_, r)| *r == q)
        .map(|(w, _)| w)
        .collect())
}

/// `SW_*(p, S)`: simple words from `p` to any state.
pub fn all_simple_words(m: &Dfa, p: StateId, set: &BTreeSet<StateId>) -> Result<BTreeSet<Word>> {
    Ok(simple_words_from(m, p, set, DEFAULT_CAP)?
        .into_iter()
        .map(|(w, _)| w)
        .collect())
}

/// `Out(p, S)`: simple words from `p` ending in `S`.
pub fn out_set(m: &Dfa, p: StateId, set: &BTreeSet<StateId>) -> Result<BTreeSet<Word>> {
    Ok(simple_words_from(m, p, set, DEFAULT_CAP)?
        .into_iter()
        .filter(|(_, r)| set.contains(r))
        .map(|(w, _)| w)
        .collect())
}

/// Reversed-word trie over the simple words of one source, for
/// longest-suffix queries.
#[derive(Clone, Debug, Default)]
pub(crate) struct SuffixTrie {
    nodes: Vec<TrieNode>,
}

#[derive(Clone, Debug, Default)]
struct TrieNode {
    children: BTreeMap<Symbol, usize>,
    target: Option<StateId>,
}

impl SuffixTrie {
    pub(crate) fn new<'a>(words: impl IntoIterator<Item = &'a (Word, StateId)>) -> Self {
        let mut trie = SuffixTrie {
            nodes: vec![TrieNode::default()],
        };
        for (w, r) in words {
            let mut node = 0;
            for s in w.iter().rev() {
                node = match trie.nodes[node].children.get(s) {
                    Some(&n) => n,
                    None => {
                        trie.nodes.push(TrieNode::default());
                        let fresh = trie.nodes.len() - 1;
                        trie.nodes[node].children.insert(*s, fresh);
                        fresh
                    }
                };
            }
            trie.nodes[node].target = Some(*r);
        }
        trie
    }

    /// Longest stored word that is a suffix of `w`: its length and target.
    pub(crate) fn longest_suffix(&self, w: &[Symbol]) -> Option<(usize, StateId)> {
        let mut best = None;
        let mut node = 0;
        for (depth, s) in w.iter().rev().enumerate() {
            match self.nodes[node].children.get(s) {
                Some(&n) => node = n,
                None => break,
            }
            if let Some(r) = self.nodes[node].target {
                best = Some((depth + 1, r));
            }
        }
        best
    }

    /// Every stored word that is a suffix of `w`, shortest first.
    pub(crate) fn suffixes(&self, w: &[Symbol]) -> Vec<(usize, StateId)> {
        let mut out = Vec::new();
        let mut node = 0;
        for (depth, s) in w.iter().rev().enumerate() {
            match self.nodes[node].children.get(s) {
                Some(&n) => node = n,
                None => break,
            }
            if let Some(r) = self.nodes[node].target {
                out.push((depth + 1, r));
            }
        }
        out
    }
}

/// A candidate set `S` over a complete DFA with its simple-word tables.
#[derive(Clone, Debug)]
pub struct CandidateSet<'a> {
    dfa: &'a Dfa,
    set: BTreeSet<StateId>,
    words: BTreeMap<StateId, Vec<(Word, StateId)>>,
    tries: BTreeMap<StateId, SuffixTrie>,
}

impl<'a> CandidateSet<'a> {
    pub fn new(dfa: &'a Dfa, set: BTreeSet<StateId>) -> Result<Self> {
        Self::with_cap(dfa, set, DEFAULT_CAP)
    }

    pub fn with_cap(dfa: &'a Dfa, set: BTreeSet<StateId>, cap: usize) -> Result<Self> {
        if !dfa.is_complete() {
            return Err(Error::NotComplete);
        }
        if let Some(q) = set.iter().find(|q| q.index() >= dfa.num_states()) {
            return Err(Error::UnknownState(format!("#{}", q.0)));
        }
        let mut words = BTreeMap::new();
        let mut tries = BTreeMap::new();
        for &p in &set {
            let list = simple_words_from(dfa, p, &set, cap)?;
            tries.insert(p, SuffixTrie::new(&list));
            words.insert(p, list);
        }
        Ok(CandidateSet {
            dfa,
            set,
            words,
            tries,
        })
    }

    pub fn dfa(&self) -> &'a Dfa {
        self.dfa
    }

    pub fn set(&self) -> &BTreeSet<StateId> {
        &self.set
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.set.contains(&q)
    }

    /// `SW_*(p, S)` with targets, in shortlex order. `p` must be in `S`.
    pub fn words_from(&self, p: StateId) -> &[(Word, StateId)] {
        &self.words[&p]
    }

    /// `SW(p, q, S)` in shortlex order. `p` must be in `S`.
    pub fn simple_words(&self, p: StateId, q: StateId) -> impl Iterator<Item = &Word> {
        self.words[&p]
            .iter()
            .filter(move |(_, r)| *r == q)
            .map(|(w, _)| w)
    }

    pub(crate) fn trie(&self, p: StateId) -> &SuffixTrie {
        &self.tries[&p]
    }
}
