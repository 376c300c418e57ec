//! Deterministic generalized automata: runs by factorization into edge
//! labels, and suppression of intermediate states.

use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{is_prefix, Symbol};
use crate::error::{Error, Result};
use crate::model::{Dga, StateId, Transition, WordAutomaton};

/// Follows the unique edge whose label starts the remaining input until the
/// input is used up or no edge fits.
pub fn dga_accepts(h: &Dga, word: &[Symbol]) -> bool {
    let mut q = h.initial();
    let mut rest = word;
    while !rest.is_empty() {
        match h.outgoing(q).find(|t| is_prefix(&t.label, rest)) {
            Some(t) => {
                rest = &rest[t.label.len()..];
                q = t.target;
            }
            None => return false,
        }
    }
    h.is_accepting(q)
}

fn check_suppressible(h: &Dga, set: &BTreeSet<StateId>) -> Result<()> {
    let mut problems = Vec::new();
    for &s in set {
        if s.index() >= h.num_states() {
            return Err(Error::UnknownState(format!("#{}", s.0)));
        }
        let name = h.state_name(s);
        if s == h.initial() {
            problems.push(format!("{name} is initial"));
        }
        if h.is_accepting(s) {
            problems.push(format!("{name} is accepting"));
        }
        if h.outgoing(s).any(|t| t.target == s) {
            problems.push(format!("{name} has a self-loop"));
        }
    }
    if let Some(s) = cycle_within(h, set) {
        problems.push(format!("{} lies on a cycle inside the suppressed set", h.state_name(s)));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition(problems.join("; ")))
    }
}

fn cycle_within(h: &Dga, set: &BTreeSet<StateId>) -> Option<StateId> {
    // 0 unvisited, 1 on stack, 2 done
    let mut color: HashMap<StateId, u8> = set.iter().map(|s| (*s, 0)).collect();
    fn visit(h: &Dga, set: &BTreeSet<StateId>, s: StateId, color: &mut HashMap<StateId, u8>) -> Option<StateId> {
        color.insert(s, 1);
        for t in h.outgoing(s).filter(|t| set.contains(&t.target)) {
            match color[&t.target] {
                1 => return Some(t.target),
                0 => {
                    if let Some(c) = visit(h, set, t.target, color) {
                        return Some(c);
                    }
                }
                _ => {}
            }
        }
        color.insert(s, 2);
        None
    }
    for &s in set {
        if color[&s] == 0 {
            if let Some(c) = visit(h, set, s, &mut color) {
                return Some(c);
            }
        }
    }
    None
}

/// Suppresses the states of `set` in increasing id order.
pub fn dga_suppress(h: &Dga, set: &BTreeSet<StateId>) -> Result<Dga> {
    let order: Vec<StateId> = set.iter().copied().collect();
    dga_suppress_in_order(h, &order)
}

/// Replaces every pair `p -α-> s -β-> r` by `p -αβ-> r` for each `s` in
/// turn, then drops the suppressed states.
pub fn dga_suppress_in_order(h: &Dga, order: &[StateId]) -> Result<Dga> {
    if let Some(v) = h.validate().first() {
        return Err(Error::Invalid(v.describe(&h.0)));
    }
    let set: BTreeSet<StateId> = order.iter().copied().collect();
    check_suppressible(h, &set)?;
    let mut edges: BTreeSet<Transition> = h.transitions().cloned().collect();
    for &s in order {
        let incoming: Vec<Transition> = edges.iter().filter(|t| t.target == s).cloned().collect();
        let outgoing: Vec<Transition> = edges.iter().filter(|t| t.source == s).cloned().collect();
        for t in incoming.iter().chain(&outgoing) {
            edges.remove(t);
        }
        for i in &incoming {
            for o in &outgoing {
                edges.insert(Transition::new(i.source, i.label.concat(&o.label), o.target));
            }
        }
    }

    let mut remap = vec![None; h.num_states()];
    let mut names = Vec::new();
    for q in h.states().filter(|q| !set.contains(q)) {
        remap[q.index()] = Some(StateId(names.len() as u32));
        names.push(h.state_name(q).to_string());
    }
    let at = |q: StateId| remap[q.index()].expect("kept state");
    let result = Dga(WordAutomaton::from_parts(
        h.alphabet().clone(),
        names,
        at(h.initial()),
        h.accepting().iter().map(|q| at(*q)),
        edges
            .into_iter()
            .map(|t| Transition::new(at(t.source), t.label, at(t.target))),
    ));
    let broken: Vec<String> = result
        .validate()
        .iter()
        .map(|v| v.describe(&result.0))
        .collect();
    if !broken.is_empty() {
        return Err(Error::Suppression(broken.join("; ")));
    }
    Ok(result)
}
