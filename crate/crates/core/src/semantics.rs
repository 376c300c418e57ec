//! Executing a DSA: moves, runs and membership.
//!
//! Each state gets a multi-pattern matcher over its outgoing labels
//! (an Aho–Corasick automaton). While reading, the matcher sits on the
//! longest prefix of a label that is a suffix of the input consumed since
//! the state was entered; its output link gives the longest label that is a
//! suffix of that input. The first position where an output exists is the
//! end of the move.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Symbol, Word};
use crate::error::Result;
use crate::model::{Dsa, StateId, Transition};

/// One firing of a transition together with the block it consumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub transition: Transition,
    pub consumed: Word,
}

/// The unique run of a DSA on a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: StateId,
    pub moves: Vec<Move>,
    /// Trailing input on which no further move exists (possibly ε).
    pub residual: Word,
}

impl Run {
    pub fn end(&self) -> StateId {
        self.moves
            .last()
            .map_or(self.start, |m| m.transition.target)
    }
}

/// Aho–Corasick automaton over the labels leaving one state.
#[derive(Clone, Debug)]
pub struct LabelMatcher {
    goto: Vec<Vec<u32>>,
    output: Vec<Option<u32>>,
    transitions: Vec<Transition>,
}

impl LabelMatcher {
    pub fn new(alphabet_len: usize, transitions: Vec<Transition>) -> Self {
        let mut trie: Vec<Vec<Option<u32>>> = vec![vec![None; alphabet_len]];
        let mut terminal: Vec<Option<u32>> = vec![None];
        for (i, t) in transitions.iter().enumerate() {
            let mut node = 0usize;
            for s in t.label.iter() {
                node = match trie[node][s.index()] {
                    Some(n) => n as usize,
                    None => {
                        let fresh = trie.len();
                        trie.push(vec![None; alphabet_len]);
                        terminal.push(None);
                        trie[node][s.index()] = Some(fresh as u32);
                        fresh
                    }
                };
            }
            terminal[node] = Some(i as u32);
        }

        let n = trie.len();
        let mut goto = vec![vec![0u32; alphabet_len]; n];
        let mut fail = vec![0u32; n];
        let mut output = terminal.clone();
        let mut queue = VecDeque::new();
        for a in 0..alphabet_len {
            match trie[0][a] {
                Some(child) => {
                    goto[0][a] = child;
                    queue.push_back(child as usize);
                }
                None => goto[0][a] = 0,
            }
        }
        while let Some(node) = queue.pop_front() {
            let f = fail[node] as usize;
            if output[node].is_none() {
                output[node] = output[f];
            }
            for a in 0..alphabet_len {
                match trie[node][a] {
                    Some(child) => {
                        fail[child as usize] = goto[f][a];
                        goto[node][a] = child;
                        queue.push_back(child as usize);
                    }
                    None => goto[node][a] = goto[f][a],
                }
            }
        }
        LabelMatcher {
            goto,
            output,
            transitions,
        }
    }

    /// Scans `input` and returns the first move, with the unread remainder.
    pub fn find<'w>(&self, input: &'w [Symbol]) -> Option<(Move, &'w [Symbol])> {
        if self.transitions.is_empty() {
            return None;
        }
        let mut node = 0usize;
        for (i, s) in input.iter().enumerate() {
            node = self.goto[node][s.index()] as usize;
            if let Some(t) = self.output[node] {
                let mv = Move {
                    transition: self.transitions[t as usize].clone(),
                    consumed: Word::from(&input[..=i]),
                };
                return Some((mv, &input[i + 1..]));
            }
        }
        None
    }
}

/// Per-state matchers for a whole DSA, built once and reused across words.
#[derive(Clone, Debug)]
pub struct Runner<'a> {
    dsa: &'a Dsa,
    matchers: Vec<LabelMatcher>,
}

impl<'a> Runner<'a> {
    pub fn new(dsa: &'a Dsa) -> Self {
        let k = dsa.alphabet().len();
        let matchers = dsa
            .states()
            .map(|q| LabelMatcher::new(k, dsa.outgoing(q).cloned().collect()))
            .collect();
        Runner { dsa, matchers }
    }

    pub fn dsa(&self) -> &'a Dsa {
        self.dsa
    }

    pub fn find_move<'w>(&self, q: StateId, input: &'w [Symbol]) -> Option<(Move, &'w [Symbol])> {
        self.matchers[q.index()].find(input)
    }

    pub fn run(&self, word: &[Symbol]) -> Run {
        let start = self.dsa.initial();
        let mut q = start;
        let mut rest = word;
        let mut moves = Vec::new();
        while let Some((mv, remainder)) = self.find_move(q, rest) {
            q = mv.transition.target;
            rest = remainder;
            moves.push(mv);
        }
        Run {
            start,
            moves,
            residual: Word::from(rest),
        }
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let run = self.run(word);
        run.residual.is_empty() && self.dsa.is_accepting(run.end())
    }
}

/// `Out(q)`.
pub fn out_labels(dsa: &Dsa, q: StateId) -> Result<BTreeSet<Word>> {
    dsa.out_labels(q)
}

/// The first move from `q` on `input`, if any, and the unread remainder.
pub fn find_move<'w>(dsa: &Dsa, q: StateId, input: &'w [Symbol]) -> Option<(Move, &'w [Symbol])> {
    LabelMatcher::new(dsa.alphabet().len(), dsa.outgoing(q).cloned().collect()).find(input)
}

pub fn run(dsa: &Dsa, word: &[Symbol]) -> Run {
    Runner::new(dsa).run(word)
}

pub fn accepts(dsa: &Dsa, word: &[Symbol]) -> bool {
    Runner::new(dsa).accepts(word)
}
