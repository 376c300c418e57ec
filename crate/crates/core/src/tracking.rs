//! The tracking DFA of a DSA.
//!
//! State `(q, β)` means: the DSA is in `q` and `β` is the longest prefix of
//! an outgoing label of `q` that is a suffix of what was read since entering
//! `q`. `copy(q)` means the same as `(q, ε)` except that some letters have
//! already been read, so it never accepts.
//!
//! This is written against sets of words directly, not against the matcher
//! in [`crate::semantics`], so the two can be checked against each other.

use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::{is_suffix, shortlex, Word};
use crate::model::{Dfa, Dsa, StateId};

/// Every prefix of every label, including ε and the labels themselves.
pub fn prefix_closure<'a, I>(labels: I) -> BTreeSet<Word>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut out = BTreeSet::from([Word::empty()]);
    for l in labels {
        for end in 1..=l.len() {
            out.insert(Word::from(&l[..end]));
        }
    }
    out
}

/// Display name of a tracking state.
pub fn tracking_state_name(dsa: &Dsa, q: StateId, beta: &[crate::alphabet::Symbol]) -> String {
    format!("({},{})", dsa.state_name(q), dsa.alphabet().display_word(beta))
}

pub fn copy_state_name(dsa: &Dsa, q: StateId) -> String {
    format!("copy({})", dsa.state_name(q))
}

/// Builds the complete tracking DFA. States are listed per DSA state: the
/// `(q, β)` in shortlex order of `β`, then `copy(q)`.
pub fn tracking_dfa(dsa: &Dsa) -> Dfa {
    let k = dsa.alphabet().len();
    let mut names = Vec::new();
    let mut closures = Vec::new();
    let mut ids: Vec<BTreeMap<Word, StateId>> = Vec::new();
    let mut copies = Vec::new();
    for q in dsa.states() {
        let out: Vec<Word> = dsa.outgoing(q).map(|t| t.label.clone()).collect();
        let mut closure: Vec<Word> = prefix_closure(&out).into_iter().collect();
        closure.sort_by(|u, v| shortlex(u, v));
        let mut local = BTreeMap::new();
        for beta in &closure {
            local.insert(beta.clone(), StateId(names.len() as u32));
            names.push(tracking_state_name(dsa, q, beta));
        }
        copies.push(StateId(names.len() as u32));
        names.push(copy_state_name(dsa, q));
        closures.push(closure);
        ids.push(local);
    }

    let mut table = vec![vec![None; k]; names.len()];
    for q in dsa.states() {
        let closure = &closures[q.index()];
        let transitions: Vec<_> = dsa.outgoing(q).collect();
        let route = |beta: &Word, a| {
            let extended = beta.extended(a);
            let beta2 = closure
                .iter()
                .filter(|w| is_suffix(w, &extended))
                .max_by_key(|w| w.len())
                .expect("ε is in the closure");
            let fired = transitions
                .iter()
                .filter(|t| is_suffix(&t.label, beta2))
                .max_by_key(|t| t.label.len());
            match fired {
                Some(t) => ids[t.target.index()][&Word::empty()],
                None if beta2.is_empty() => copies[q.index()],
                None => ids[q.index()][beta2],
            }
        };
        for beta in closure {
            let from = ids[q.index()][beta];
            for a in dsa.alphabet().symbols() {
                table[from.index()][a.index()] = Some(route(beta, a));
            }
        }
        let eps = ids[q.index()][&Word::empty()];
        table[copies[q.index()].index()] = table[eps.index()].clone();
    }

    let initial = ids[dsa.initial().index()][&Word::empty()];
    let accepting = dsa
        .accepting()
        .iter()
        .map(|q| ids[q.index()][&Word::empty()]);
    Dfa::from_table(dsa.alphabet().clone(), names, initial, accepting, table)
}

/// Counts behind [`state_count_bound_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrackingBounds {
    pub dsa_size: usize,
    pub dfa_states: usize,
    pub dfa_size: usize,
    pub state_bound: usize,
    pub size_bound: usize,
}

impl TrackingBounds {
    pub fn holds(&self) -> bool {
        self.dfa_states <= self.state_bound && self.dfa_size <= self.size_bound
    }
}

pub fn tracking_bounds(dsa: &Dsa) -> TrackingBounds {
    let k = dsa.total_size();
    let m = tracking_dfa(dsa);
    TrackingBounds {
        dsa_size: k,
        dfa_states: m.num_states(),
        dfa_size: m.total_size(),
        state_bound: 2 * k,
        size_bound: 2 * k * (1 + 2 * dsa.alphabet().len()),
    }
}

/// Whether the tracking DFA stays within `2k` states and `2k(1 + 2|Σ|)` total size.
pub fn state_count_bound_check(dsa: &Dsa) -> bool {
    tracking_bounds(dsa).holds()
}
