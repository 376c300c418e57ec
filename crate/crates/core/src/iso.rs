//! Structural isomorphism of word-labeled automata (names are ignored).

use std::collections::BTreeMap;

use crate::model::{StateId, WordAutomaton};

type Signature = BTreeMap<Vec<String>, StateId>;

fn signatures(a: &WordAutomaton) -> Vec<Signature> {
    a.states()
        .map(|q| {
            a.outgoing(q)
                .map(|t| {
                    let label = t.label.iter().map(|s| a.alphabet().token(*s).to_string()).collect();
                    (label, t.target)
                })
                .collect()
        })
        .collect()
}

/// Whether some bijection of states maps `a` onto `b`, preserving the
/// initial state, acceptance and labeled transitions. Labels are compared
/// by their symbol tokens.
pub fn dsa_isomorphic(a: &WordAutomaton, b: &WordAutomaton) -> bool {
    if a.num_states() != b.num_states()
        || a.num_transitions() != b.num_transitions()
        || a.accepting().len() != b.accepting().len()
    {
        return false;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut fwd = vec![None; a.num_states()];
    let mut bwd = vec![None; b.num_states()];
    extend(a, b, &sa, &sb, &mut fwd, &mut bwd, vec![(a.initial(), b.initial())])
}

fn extend(
    a: &WordAutomaton,
    b: &WordAutomaton,
    sa: &[Signature],
    sb: &[Signature],
    fwd: &mut Vec<Option<StateId>>,
    bwd: &mut Vec<Option<StateId>>,
    pending: Vec<(StateId, StateId)>,
) -> bool {
    let saved = (fwd.clone(), bwd.clone());
    if !propagate(a, b, sa, sb, fwd, bwd, pending) {
        (*fwd, *bwd) = saved;
        return false;
    }
    let Some(x) = fwd.iter().position(Option::is_none) else {
        return true;
    };
    let x = StateId(x as u32);
    let free: Vec<StateId> = b.states().filter(|y| bwd[y.index()].is_none()).collect();
    for y in free {
        if extend(a, b, sa, sb, fwd, bwd, vec![(x, y)]) {
            return true;
        }
    }
    (*fwd, *bwd) = saved;
    false
}

fn propagate(
    a: &WordAutomaton,
    b: &WordAutomaton,
    sa: &[Signature],
    sb: &[Signature],
    fwd: &mut [Option<StateId>],
    bwd: &mut [Option<StateId>],
    mut pending: Vec<(StateId, StateId)>,
) -> bool {
    while let Some((x, y)) = pending.pop() {
        match (fwd[x.index()], bwd[y.index()]) {
            (None, None) => {}
            (Some(fy), Some(bx)) if fy == y && bx == x => continue,
            _ => return false,
        }
        if a.is_accepting(x) != b.is_accepting(y) || (x == a.initial()) != (y == b.initial()) {
            return false;
        }
        let (ox, oy) = (&sa[x.index()], &sb[y.index()]);
        if ox.len() != oy.len() {
            return false;
        }
        fwd[x.index()] = Some(y);
        bwd[y.index()] = Some(x);
        for (label, tx) in ox {
            let Some(ty) = oy.get(label) else {
                return false;
            };
            pending.push((*tx, *ty));
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures;
    use crate::model::Dsa;

    #[test]
    fn renaming_is_invisible() {
        let a2 = fixtures::a2();
        let renamed = Dsa::from_names(
            a2.alphabet().clone(),
            &["y", "x"],
            "x",
            &["y"],
            &[("x", "aab", "y"), ("y", "aab", "y")],
        )
        .unwrap();
        assert!(dsa_isomorphic(&a2, &renamed));
        assert!(!dsa_isomorphic(&a2, &fixtures::a4()));
    }

    #[test]
    fn unreachable_states_are_matched_too() {
        let al = Alphabet::from_chars("ab").shared();
        let make = |extra: &str| {
            Dsa::from_names(
                al.clone(),
                &["q", "u", "v"],
                "q",
                &["q"],
                &[("q", "a", "q"), ("u", extra, "v"), ("v", "b", "u")],
            )
            .unwrap()
        };
        assert!(dsa_isomorphic(&make("ab"), &make("ab")));
        assert!(!dsa_isomorphic(&make("ab"), &make("ba")));
    }

    #[test]
    fn every_fixture_is_self_isomorphic() {
        for a in fixtures::all_dsas() {
            assert!(dsa_isomorphic(&a, &a));
        }
    }
}
