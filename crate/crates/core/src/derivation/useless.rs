use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::alphabet::{is_prefix, is_proper_suffix, is_suffix, Word};
use crate::error::{Error, Result};
use crate::model::{Dsa, StateId, Transition};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UselessnessReport {
    pub bigger_suffix_useless: BTreeSet<Transition>,
    pub useful_bigger_suffix: BTreeSet<Transition>,
    pub useless_self_loops: BTreeSet<Transition>,
}

impl UselessnessReport {
    /// No transition can be removed.
    pub fn is_clean(&self) -> bool {
        self.bigger_suffix_useless.is_empty() && self.useless_self_loops.is_empty()
    }
}

/// The longest label out of `t.source` that is a proper suffix of `t.label`.
fn longest_proper_suffix_label<'a>(a: &'a Dsa, t: &Transition) -> Option<&'a Transition> {
    a.outgoing(t.source)
        .filter(|u| is_proper_suffix(&u.label, &t.label))
        .max_by_key(|u| u.label.len())
}

/// `t` has a parallel transition on a strictly shorter suffix of its label.
pub fn is_bigger_suffix(a: &Dsa, t: &Transition) -> bool {
    a.outgoing(t.source)
        .any(|u| u.target == t.target && is_proper_suffix(&u.label, &t.label))
}

/// A bigger-suffix transition is useless when no label strictly between
/// some parallel shorter suffix and its own label leads elsewhere; that is
/// the case exactly when its longest proper-suffix label leads to the same
/// target.
pub fn is_useless_bigger_suffix(a: &Dsa, t: &Transition) -> bool {
    longest_proper_suffix_label(a, t).is_some_and(|u| u.target == t.target)
}

/// A self-loop on a rejecting state whose label has no nonempty proper
/// suffix that starts another outgoing label of the state.
pub fn is_useless_self_loop(a: &Dsa, t: &Transition) -> bool {
    if t.source != t.target || a.is_accepting(t.source) {
        return false;
    }
    let others: Vec<&Word> = a
        .outgoing(t.source)
        .filter(|u| u.label != t.label)
        .map(|u| &u.label)
        .collect();
    (1..t.label.len()).all(|start| {
        let suffix = &t.label[start..];
        others.iter().all(|l| !is_prefix(suffix, l))
    })
}

pub fn classify_useless(a: &Dsa) -> UselessnessReport {
    let mut r = UselessnessReport::default();
    for t in a.transitions() {
        if is_useless_bigger_suffix(a, t) {
            r.bigger_suffix_useless.insert(t.clone());
        } else if is_useless_self_loop(a, t) {
            r.useless_self_loops.insert(t.clone());
        } else if is_bigger_suffix(a, t) {
            r.useful_bigger_suffix.insert(t.clone());
        }
    }
    r
}

/// No label of a state is a suffix of a proper prefix of another of its
/// labels. Returns the first offending `(state, label, longer label)`.
pub fn well_formed_dsa_witness(a: &Dsa) -> Option<(StateId, Word, Word)> {
    for q in a.states() {
        let labels: Vec<&Word> = a.outgoing(q).map(|t| &t.label).collect();
        for alpha in &labels {
            for beta in &labels {
                if alpha == beta {
                    continue;
                }
                let hit = (1..beta.len()).any(|end| is_suffix(alpha, &beta[..end]));
                if hit {
                    return Some((q, (*alpha).clone(), (*beta).clone()));
                }
            }
        }
    }
    None
}

pub fn is_well_formed_dsa(a: &Dsa) -> bool {
    well_formed_dsa_witness(a).is_none()
}

/// Removal order within a pass: longest label first, then the usual order.
fn pick(set: &BTreeSet<Transition>) -> Option<Transition> {
    set.iter()
        .min_by_key(|t| (Reverse(t.label.len()), (*t).clone()))
        .cloned()
}

/// Drops useless bigger-suffix transitions one at a time until none is left.
pub fn remove_useless_bigger_suffix(a: &Dsa) -> Dsa {
    let mut cur = a.clone();
    while let Some(t) = pick(
        &cur.transitions()
            .filter(|t| is_useless_bigger_suffix(&cur, t))
            .cloned()
            .collect(),
    ) {
        cur.0.remove(&t);
    }
    cur
}

/// Drops useless self-loops one at a time. Requires a well-formed DSA.
pub fn remove_useless_self_loops(a: &Dsa) -> Result<Dsa> {
    if let Some((q, alpha, beta)) = well_formed_dsa_witness(a) {
        return Err(Error::Precondition(format!(
            "self-loop removal needs a well-formed DSA; at {} label {} is a suffix of a proper prefix of {}",
            a.state_name(q),
            a.alphabet().display_word(&alpha),
            a.alphabet().display_word(&beta)
        )));
    }
    let mut cur = a.clone();
    while let Some(t) = pick(
        &cur.transitions()
            .filter(|t| is_useless_self_loop(&cur, t))
            .cloned()
            .collect(),
    ) {
        cur.0.remove(&t);
    }
    Ok(cur)
}

/// Bigger-suffix removal to a fixpoint, then self-loop removal to a fixpoint.
pub fn remove_useless(a: &Dsa) -> Result<Dsa> {
    remove_useless_self_loops(&remove_useless_bigger_suffix(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures;

    fn labels(a: &Dsa, set: &BTreeSet<Transition>) -> Vec<String> {
        set.iter().map(|t| a.alphabet().display_word(&t.label)).collect()
    }

    #[test]
    fn caba_classification() {
        let left = fixtures::caba_useless_dsa();
        let r = classify_useless(&left);
        assert_eq!(labels(&left, &r.bigger_suffix_useless), ["caba"]);

        let right = fixtures::caba_useful_dsa();
        let r = classify_useless(&right);
        assert!(r.bigger_suffix_useless.is_empty());
        assert_eq!(labels(&right, &r.useful_bigger_suffix), ["caba"]);
    }

    #[test]
    fn self_loops() {
        let induced = Dsa::from_names(
            Alphabet::from_chars("ab").shared(),
            &["q0", "q2"],
            "q0",
            &["q2"],
            &[("q0", "ab", "q2"), ("q0", "b", "q0"), ("q2", "a", "q2"), ("q2", "b", "q2")],
        )
        .unwrap();
        let r = classify_useless(&induced);
        assert_eq!(labels(&induced, &r.useless_self_loops), ["b"]);
        let cleaned = remove_useless(&induced).unwrap();
        assert_eq!(cleaned.num_transitions(), 3);

        let a4 = fixtures::a4();
        assert!(classify_useless(&a4).is_clean());
        assert_eq!(remove_useless(&a4).unwrap(), a4);
    }

    #[test]
    fn well_formed_dsas() {
        assert!(is_well_formed_dsa(&fixtures::a4()));
        let al = Alphabet::from_chars("abc").shared();
        let bad = Dsa::from_names(al, &["q", "r"], "q", &["r"], &[("q", "a", "r"), ("q", "bac", "r")]).unwrap();
        let (_, alpha, beta) = well_formed_dsa_witness(&bad).unwrap();
        assert_eq!(bad.alphabet().display_word(&alpha), "a");
        assert_eq!(bad.alphabet().display_word(&beta), "bac");
        assert!(matches!(remove_useless(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn longer_label_dropped_when_suffix_shares_target() {
        let al = Alphabet::from_chars("ab").shared();
        let a = Dsa::from_names(
            al,
            &["q", "q'"],
            "q",
            &["q'"],
            &[("q", "abaa", "q'"), ("q", "baaa", "q'"), ("q", "abbaaa", "q'")],
        )
        .unwrap();
        let cleaned = remove_useless(&a).unwrap();
        let left: Vec<String> = cleaned.transitions().map(|t| cleaned.alphabet().display_word(&t.label)).collect();
        assert_eq!(left, ["abaa", "baaa"]);
    }

    #[test]
    fn accepting_loops_stay() {
        let a3 = fixtures::a3();
        assert_eq!(remove_useless(&a3).unwrap(), a3);
    }
}
