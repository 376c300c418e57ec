use std::collections::{BTreeMap, BTreeSet};

use super::compat::check_set;
use super::simple_words::{CandidateSet, DEFAULT_CAP};
use super::useless::{classify_useless, is_well_formed_dsa, remove_useless, remove_useless_bigger_suffix, remove_useless_self_loops};
use crate::error::{Error, Result};
use crate::iso::dsa_isomorphic;
use crate::model::{Dfa, Dsa, StateId, Transition, WordAutomaton};
use crate::tracking::tracking_dfa;

/// Default bound on DFA size for exhaustive set enumeration.
pub const DEFAULT_STATE_LIMIT: usize = 20;

/// Resolves state names to ids.
pub fn state_set<S: AsRef<str>>(m: &Dfa, names: &[S]) -> Result<BTreeSet<StateId>> {
    names.iter().map(|n| m.state_id(n.as_ref())).collect()
}

/// The DSA on `S` with one transition per simple word between `S` states.
pub fn induced_dsa_from(c: &CandidateSet<'_>) -> Result<Dsa> {
    let m = c.dfa();
    if !c.contains(m.initial()) {
        return Err(Error::Precondition(format!(
            "initial state {} must be in the set",
            m.state_name(m.initial())
        )));
    }
    if let Some(q) = m.accepting().iter().find(|q| !c.contains(**q)) {
        return Err(Error::Precondition(format!(
            "accepting state {} must be in the set",
            m.state_name(*q)
        )));
    }
    let order: Vec<StateId> = c.set().iter().copied().collect();
    let new_id: BTreeMap<StateId, StateId> = order
        .iter()
        .enumerate()
        .map(|(i, q)| (*q, StateId(i as u32)))
        .collect();
    let mut transitions = BTreeSet::new();
    for &p in &order {
        let mut seen = BTreeMap::new();
        for (w, r) in c.words_from(p) {
            if !c.contains(*r) {
                continue;
            }
            if let Some(prev) = seen.insert(w.clone(), *r) {
                return Err(Error::Determinism(format!(
                    "{} reaches both {} and {} on {}",
                    m.state_name(p),
                    m.state_name(prev),
                    m.state_name(*r),
                    m.alphabet().display_word(w)
                )));
            }
            transitions.insert(Transition::new(new_id[&p], w.clone(), new_id[r]));
        }
    }
    Ok(Dsa(WordAutomaton::from_parts(
        m.alphabet().clone(),
        order.iter().map(|q| m.state_name(*q).to_string()).collect(),
        new_id[&m.initial()],
        m.accepting().iter().map(|q| new_id[q]),
        transitions,
    )))
}

pub fn induced_dsa(m: &Dfa, set: &BTreeSet<StateId>) -> Result<Dsa> {
    induced_dsa_from(&CandidateSet::new(m, set.clone())?)
}

/// Induced DSA with useless transitions removed; `S` must be suffix-tracking.
pub fn derive_dsa(m: &Dfa, set: &BTreeSet<StateId>) -> Result<Dsa> {
    let c = CandidateSet::new(m, set.clone())?;
    let report = check_set(&c);
    if !report.is_suffix_tracking() {
        return Err(Error::NotSuffixTracking(report.describe(m).join("\n")));
    }
    remove_useless(&induced_dsa_from(&c)?)
}

/// Like [`derive_dsa`] without the suffix-tracking check. Self-loops are
/// only pruned when the result is well-formed.
pub fn derive_dsa_forced(m: &Dfa, set: &BTreeSet<StateId>) -> Result<Dsa> {
    let pruned = remove_useless_bigger_suffix(&induced_dsa(m, set)?);
    if is_well_formed_dsa(&pruned) {
        remove_useless_self_loops(&pruned)
    } else {
        Ok(pruned)
    }
}

/// Every suffix-tracking set, smallest first, then in lexicographic order
/// of state ids.
pub fn enumerate_suffix_tracking_sets(m: &Dfa) -> Result<Vec<BTreeSet<StateId>>> {
    enumerate_suffix_tracking_sets_with(m, DEFAULT_STATE_LIMIT, DEFAULT_CAP)
}

pub fn enumerate_suffix_tracking_sets_with(
    m: &Dfa,
    state_limit: usize,
    cap: usize,
) -> Result<Vec<BTreeSet<StateId>>> {
    if m.num_states() > state_limit {
        return Err(Error::StateLimit {
            states: m.num_states(),
            limit: state_limit,
        });
    }
    if !m.is_complete() {
        return Err(Error::NotComplete);
    }
    let mut required: BTreeSet<StateId> = m.accepting().clone();
    required.insert(m.initial());
    let optional: Vec<StateId> = m.states().filter(|q| !required.contains(q)).collect();
    let mut found = Vec::new();
    for k in 0..=optional.len() {
        for combo in combinations(optional.len(), k) {
            let mut set = required.clone();
            set.extend(combo.iter().map(|&i| optional[i]));
            let c = CandidateSet::with_cap(m, set, cap)?;
            if check_set(&c).is_suffix_tracking() {
                found.push(c.set().clone());
            }
        }
    }
    Ok(found)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The smallest derived DSA over all suffix-tracking sets; ties go to the
/// smaller set, then to the earlier one. This need not be a smallest DSA
/// for the language.
pub fn best_derived_dsa(m: &Dfa) -> Result<(BTreeSet<StateId>, Dsa)> {
    let mut best: Option<(BTreeSet<StateId>, Dsa)> = None;
    for set in enumerate_suffix_tracking_sets(m)? {
        let d = derive_dsa(m, &set)?;
        let better = match &best {
            None => true,
            Some((s, b)) => (d.total_size(), set.len()) < (b.total_size(), s.len()),
        };
        if better {
            best = Some((set, d));
        }
    }
    // the full state set always qualifies
    best.ok_or_else(|| Error::Invalid("no suffix-tracking set found".into()))
}

/// Rebuilds a well-formed, useless-free DSA from its own tracking DFA using
/// the `(q, ε)` states, and checks that the result is isomorphic to it.
pub fn derive_from_tracking(a: &Dsa) -> Result<Dsa> {
    let m = tracking_dfa(a);
    let set: BTreeSet<StateId> = a
        .states()
        .map(|q| m.state_id(&crate::tracking::tracking_state_name(a, q, &[])))
        .collect::<Result<_>>()?;
    let c = CandidateSet::new(&m, set)?;
    let report = check_set(&c);
    if !report.is_suffix_tracking() {
        return Err(Error::NotSuffixTracking(report.describe(&m).join("\n")));
    }
    let d = remove_useless(&induced_dsa_from(&c)?)?;
    // set order follows the DSA's state order, so names carry over by index
    let renamed = Dsa(WordAutomaton::from_parts(
        d.alphabet().clone(),
        a.state_names().to_vec(),
        d.initial(),
        d.accepting().iter().copied(),
        d.transitions().cloned(),
    ));
    if !dsa_isomorphic(&renamed, a) {
        return Err(Error::RoundTrip(format!(
            "derived DSA has {} transitions, original {}; useless report clean: {}",
            renamed.num_transitions(),
            a.num_transitions(),
            classify_useless(a).is_clean()
        )));
    }
    Ok(renamed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa_ops::{complete, enumerate_dsa, enumerate_language, equivalent};
    use crate::fixtures;

    fn label_set(a: &Dsa) -> BTreeSet<(String, String, String)> {
        a.transitions()
            .map(|t| {
                (
                    a.state_name(t.source).to_string(),
                    a.alphabet().display_word(&t.label),
                    a.state_name(t.target).to_string(),
                )
            })
            .collect()
    }

    fn triples(list: &[(&str, &str, &str)]) -> BTreeSet<(String, String, String)> {
        list.iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn combination_order() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }

    #[test]
    fn contains_ab_induced_and_derived() {
        let m = fixtures::contains_ab_dfa();
        let s = state_set(&m, &["q0", "q2"]).unwrap();
        let induced = induced_dsa(&m, &s).unwrap();
        assert_eq!(
            label_set(&induced),
            triples(&[("q0", "ab", "q2"), ("q0", "b", "q0"), ("q2", "a", "q2"), ("q2", "b", "q2")])
        );
        let d = derive_dsa(&m, &s).unwrap();
        assert_eq!(
            label_set(&d),
            triples(&[("q0", "ab", "q2"), ("q2", "a", "q2"), ("q2", "b", "q2")])
        );
        assert_eq!(enumerate_dsa(&d, 8), enumerate_language(&m, 8));
        assert!(equivalent(&m, &tracking_dfa(&d)).equivalent);
    }

    #[test]
    fn two_as_induced() {
        let m = fixtures::two_as_dfa();
        let s = state_set(&m, &["q0", "q2"]).unwrap();
        assert_eq!(induced_dsa(&m, &s).unwrap(), fixtures::two_as_induced_dsa());
        assert!(matches!(derive_dsa(&m, &s), Err(Error::NotSuffixTracking(_))));
        let forced = derive_dsa_forced(&m, &s).unwrap();
        assert!(!equivalent(&m, &tracking_dfa(&forced)).equivalent);
    }

    #[test]
    fn escape_induced() {
        let m = fixtures::escape_dfa();
        let s = state_set(&m, &["s0", "s2", "s4"]).unwrap();
        let induced = induced_dsa(&m, &s).unwrap();
        let got = label_set(&induced);
        for t in triples(&[("s0", "aba", "s2"), ("s0", "b", "s4"), ("s0", "abb", "s0")]) {
            assert!(got.contains(&t), "{t:?}");
        }
        let good = state_set(&m, &["s0", "s2", "s3", "s4"]).unwrap();
        let d = derive_dsa(&m, &good).unwrap();
        assert!(equivalent(&m, &tracking_dfa(&d)).equivalent);
    }

    #[test]
    fn m_star_sets() {
        let ms = fixtures::m_star(4);
        let sets = enumerate_suffix_tracking_sets(&ms).unwrap();
        // {q0, q1, p, q4} also qualifies: with q1 in S, ab is no longer a
        // simple word from q0, so b (to p) has nothing to be a suffix of
        let expected = vec![
            state_set(&ms, &["q0", "q1", "q4", "p"]).unwrap(),
            state_set(&ms, &["q0", "p", "q2", "q4"]).unwrap(),
            ms.states().collect(),
        ];
        assert_eq!(sets, expected);
        for s in &sets {
            let d = derive_dsa(&ms, s).unwrap();
            assert!(equivalent(&ms, &tracking_dfa(&d)).equivalent);
        }
    }

    #[test]
    fn m_star_derivations() {
        let ms = fixtures::m_star(4);
        let d = derive_dsa(&ms, &state_set(&ms, &["q0", "p", "q2", "q4"]).unwrap()).unwrap();
        assert!(equivalent(&ms, &tracking_dfa(&d)).equivalent);

        let mss = fixtures::m_star_star(4);
        let d = derive_dsa(&mss, &state_set(&mss, &["q0", "p", "q4"]).unwrap()).unwrap();
        let got = label_set(&d);
        assert!(got.contains(&("q0".into(), "bb".into(), "q4".into())));
        assert!(got.contains(&("q0".into(), "abb".into(), "q0".into())));
        assert!(equivalent(&mss, &tracking_dfa(&d)).equivalent);
    }

    #[test]
    fn contains_ab_best() {
        let m = fixtures::contains_ab_dfa();
        let sets = enumerate_suffix_tracking_sets(&m).unwrap();
        assert!(sets.contains(&state_set(&m, &["q0", "q2"]).unwrap()));
        assert!(sets.contains(&state_set(&m, &["q0", "q1", "q2"]).unwrap()));
        let (s, d) = best_derived_dsa(&m).unwrap();
        assert_eq!(s, state_set(&m, &["q0", "q2"]).unwrap());
        // 2 states, 3 transitions, labels ab, a, b
        assert_eq!(d.total_size(), 9);
    }

    #[test]
    fn full_set_always_qualifies() {
        for m in fixtures::all_dfas() {
            let m = complete(&m);
            let all: BTreeSet<StateId> = m.states().collect();
            assert!(enumerate_suffix_tracking_sets(&m).unwrap().contains(&all));
        }
    }

    #[test]
    fn complete_dfa_with_only_full_set() {
        let ms = fixtures::m_star(2);
        let (s, _) = best_derived_dsa(&ms).unwrap();
        assert!(s.len() >= 4);
        let m1 = complete(&fixtures::m1());
        let sets = enumerate_suffix_tracking_sets(&m1).unwrap();
        let (s, _) = best_derived_dsa(&m1).unwrap();
        assert_eq!(&s, sets.first().unwrap());
    }

    #[test]
    fn round_trips_through_tracking() {
        for a in [fixtures::a2(), fixtures::a4()] {
            let d = derive_from_tracking(&a).unwrap();
            assert!(dsa_isomorphic(&d, &a));
        }
        let single = Dsa::from_names(
            crate::alphabet::Alphabet::from_chars("ab").shared(),
            &["q"],
            "q",
            &["q"],
            &[],
        )
        .unwrap();
        assert_eq!(derive_from_tracking(&single).unwrap(), single);
    }

    #[test]
    fn state_limit() {
        let m = complete(&fixtures::two_pattern_dfa());
        assert_eq!(
            enumerate_suffix_tracking_sets_with(&m, 3, DEFAULT_CAP).unwrap_err(),
            Error::StateLimit { states: 9, limit: 3 }
        );
        assert_eq!(enumerate_suffix_tracking_sets(&fixtures::m1()).unwrap_err(), Error::NotComplete);
    }
}
