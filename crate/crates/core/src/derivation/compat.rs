use std::collections::BTreeSet;

use super::simple_words::CandidateSet;
use crate::alphabet::{shortlex, Symbol, Word};
use crate::error::Result;
use crate::model::{Dfa, StateId};

/// A letter transition of a DFA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: StateId,
    pub symbol: Symbol,
    pub target: StateId,
}

impl Edge {
    pub fn describe(&self, m: &Dfa) -> String {
        format!(
            "({}, {}, {})",
            m.state_name(self.source),
            m.alphabet().token(self.symbol),
            m.state_name(self.target)
        )
    }
}

/// Why a transition is not suffix-compatible: from `p`, the simple word
/// `sigma` reaches the source, and the longest simple-word suffix of
/// `sigma·a` is `found` (ending at `reached`) instead of a word ending at
/// the transition's target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatWitness {
    pub edge: Edge,
    pub p: StateId,
    pub sigma: Word,
    pub found: Option<(Word, StateId)>,
}

impl CompatWitness {
    pub fn describe(&self, m: &Dfa) -> String {
        let al = m.alphabet();
        let found = match &self.found {
            None => "no simple word is a suffix".to_string(),
            Some((w, r)) => format!(
                "longest simple-word suffix {} leads to {}",
                al.display_word(w),
                m.state_name(*r)
            ),
        };
        format!(
            "transition {} is not suffix-compatible: from {} via {}·{}, {}",
            self.edge.describe(m),
            m.state_name(self.p),
            al.display_word(&self.sigma),
            al.token(self.edge.symbol),
            found
        )
    }
}

/// `alpha ∈ SW(p, q, S)` is a suffix of `beta ∈ SW(p, q2, S)` with `q ∈ S`, `q2 ∉ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellFormedWitness {
    pub p: StateId,
    pub q: StateId,
    pub q2: StateId,
    pub alpha: Word,
    pub beta: Word,
}

impl WellFormedWitness {
    pub fn describe(&self, m: &Dfa) -> String {
        let al = m.alphabet();
        format!(
            "set is not well-formed: from {}, {} (to {}) is a suffix of {} (to {})",
            m.state_name(self.p),
            al.display_word(&self.alpha),
            m.state_name(self.q),
            al.display_word(&self.beta),
            m.state_name(self.q2)
        )
    }
}

/// Suffix-compatibility of one DFA transition. Transitions touching `S`
/// are compatible; otherwise every simple word into the source, extended
/// by the letter, must have its longest simple-word suffix end at the
/// target. With no simple words into the source this holds vacuously.
pub fn check_edge(c: &CandidateSet<'_>, edge: Edge) -> Option<CompatWitness> {
    if c.contains(edge.source) || c.contains(edge.target) {
        return None;
    }
    for &p in c.set() {
        for (sigma, r) in c.words_from(p) {
            if *r != edge.source {
                continue;
            }
            let extended = sigma.extended(edge.symbol);
            let found = c.trie(p).longest_suffix(&extended);
            if found.map(|(_, r)| r) != Some(edge.target) {
                return Some(CompatWitness {
                    edge,
                    p,
                    sigma: sigma.clone(),
                    found: found.map(|(len, r)| {
                        (Word::from(&extended[extended.len() - len..]), r)
                    }),
                });
            }
        }
    }
    None
}

/// Every DFA transition that is not suffix-compatible, in transition order.
pub fn incompatible_edges(c: &CandidateSet<'_>) -> Vec<CompatWitness> {
    c.dfa()
        .transitions()
        .filter_map(|(source, symbol, target)| {
            check_edge(
                c,
                Edge {
                    source,
                    symbol,
                    target,
                },
            )
        })
        .collect()
}

/// First violation of well-formedness: sources in `S` order, then the
/// longer word in shortlex order, then the shorter suffix first.
pub fn well_formed_witness(c: &CandidateSet<'_>) -> Option<WellFormedWitness> {
    for &p in c.set() {
        let mut escaping: Vec<&(Word, StateId)> =
            c.words_from(p).iter().filter(|(_, r)| !c.contains(*r)).collect();
        escaping.sort_by(|(u, _), (v, _)| shortlex(u, v));
        for (beta, q2) in escaping {
            for (len, q) in c.trie(p).suffixes(beta) {
                if c.contains(q) {
                    return Some(WellFormedWitness {
                        p,
                        q,
                        q2: *q2,
                        alpha: Word::from(&beta[beta.len() - len..]),
                        beta: beta.clone(),
                    });
                }
            }
        }
    }
    None
}

/// Everything that keeps `S` from being suffix-tracking.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrackingReport {
    pub missing_initial: bool,
    pub missing_accepting: Vec<StateId>,
    pub incompatible: Vec<CompatWitness>,
    pub not_well_formed: Option<WellFormedWitness>,
}

impl TrackingReport {
    pub fn is_suffix_tracking(&self) -> bool {
        !self.missing_initial
            && self.missing_accepting.is_empty()
            && self.incompatible.is_empty()
            && self.not_well_formed.is_none()
    }

    pub fn describe(&self, m: &Dfa) -> Vec<String> {
        let mut out = Vec::new();
        if self.missing_initial {
            out.push(format!("initial state {} is not in the set", m.state_name(m.initial())));
        }
        for q in &self.missing_accepting {
            out.push(format!("accepting state {} is not in the set", m.state_name(*q)));
        }
        out.extend(self.incompatible.iter().map(|w| w.describe(m)));
        if let Some(w) = &self.not_well_formed {
            out.push(w.describe(m));
        }
        out
    }
}

pub fn check_set(c: &CandidateSet<'_>) -> TrackingReport {
    let m = c.dfa();
    TrackingReport {
        missing_initial: !c.contains(m.initial()),
        missing_accepting: m.accepting().iter().filter(|q| !c.contains(**q)).copied().collect(),
        incompatible: incompatible_edges(c),
        not_well_formed: well_formed_witness(c),
    }
}

pub fn is_suffix_compatible(
    m: &Dfa,
    edge: Edge,
    set: &BTreeSet<StateId>,
) -> Result<Option<CompatWitness>> {
    Ok(check_edge(&CandidateSet::new(m, set.clone())?, edge))
}

pub fn is_well_formed_set(m: &Dfa, set: &BTreeSet<StateId>) -> Result<Option<WellFormedWitness>> {
    Ok(well_formed_witness(&CandidateSet::new(m, set.clone())?))
}

pub fn is_suffix_tracking(m: &Dfa, set: &BTreeSet<StateId>) -> Result<TrackingReport> {
    Ok(check_set(&CandidateSet::new(m, set.clone())?))
}
