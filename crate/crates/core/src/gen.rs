//! Seeded random automata for property tests and benchmarks.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{is_prefix, Alphabet, Symbol, Word};
use crate::derivation::{classify_useless, is_well_formed_dsa};
use crate::model::{Dfa, Dga, Dsa, StateId, Transition, WordAutomaton};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

fn random_word(rng: &mut impl Rng, k: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| Symbol(rng.gen_range(0..k) as u32)).collect()
}

fn random_accepting(rng: &mut impl Rng, n: usize) -> BTreeSet<StateId> {
    (0..n)
        .filter(|_| rng.gen_bool(0.4))
        .map(|i| StateId(i as u32))
        .collect()
}

/// Shape of random DSAs and DGAs.
#[derive(Clone, Copy, Debug)]
pub struct WordShape {
    pub max_states: usize,
    pub max_label: usize,
    pub max_out: usize,
}

impl Default for WordShape {
    fn default() -> Self {
        WordShape {
            max_states: 4,
            max_label: 3,
            max_out: 3,
        }
    }
}

/// A valid DSA over `alphabet`; labels out of one state are distinct.
pub fn random_dsa(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, shape: WordShape) -> Dsa {
    let n = rng.gen_range(1..=shape.max_states);
    let k = alphabet.len();
    let mut transitions = BTreeSet::new();
    for q in 0..n {
        let mut labels = BTreeSet::new();
        for _ in 0..rng.gen_range(0..=shape.max_out) {
            labels.insert(random_word(rng, k, shape.max_label));
        }
        for l in labels {
            let target = StateId(rng.gen_range(0..n) as u32);
            transitions.insert(Transition::new(StateId(q as u32), l, target));
        }
    }
    let accepting = random_accepting(rng, n);
    Dsa(WordAutomaton::from_parts(
        alphabet.clone(),
        state_names(n),
        StateId(0),
        accepting,
        transitions,
    ))
}

/// A valid DGA: outgoing labels of each state are prefix-free.
pub fn random_dga(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, shape: WordShape) -> Dga {
    let n = rng.gen_range(1..=shape.max_states);
    let k = alphabet.len();
    let mut transitions = BTreeSet::new();
    for q in 0..n {
        let mut labels: Vec<Word> = Vec::new();
        for _ in 0..rng.gen_range(0..=shape.max_out) {
            let w = random_word(rng, k, shape.max_label);
            if labels.iter().all(|l| !is_prefix(l, &w) && !is_prefix(&w, l)) {
                labels.push(w);
            }
        }
        for l in labels {
            let target = StateId(rng.gen_range(0..n) as u32);
            transitions.insert(Transition::new(StateId(q as u32), l, target));
        }
    }
    let accepting = random_accepting(rng, n);
    Dga(WordAutomaton::from_parts(
        alphabet.clone(),
        state_names(n),
        StateId(0),
        accepting,
        transitions,
    ))
}

/// A DFA with between 1 and `max_states` states; each entry is defined
/// with probability `density`.
pub fn random_dfa(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, max_states: usize, density: f64) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let table = (0..n)
        .map(|_| {
            alphabet
                .symbols()
                .map(|_| rng.gen_bool(density).then(|| StateId(rng.gen_range(0..n) as u32)))
                .collect()
        })
        .collect();
    let accepting = random_accepting(rng, n);
    Dfa::from_table(alphabet.clone(), state_names(n), StateId(0), accepting, table)
}

pub fn random_complete_dfa(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, max_states: usize) -> Dfa {
    random_dfa(rng, alphabet, max_states, 1.0)
}

/// A well-formed DSA without useless transitions, found by rejection sampling.
pub fn random_clean_dsa(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, shape: WordShape) -> Dsa {
    loop {
        let a = random_dsa(rng, alphabet, shape);
        if is_well_formed_dsa(&a) && classify_useless(&a).is_clean() {
            return a;
        }
    }
}

/// Same automaton with states listed in a random order.
pub fn shuffle_states(rng: &mut impl Rng, a: &WordAutomaton) -> WordAutomaton {
    let mut perm: Vec<usize> = (0..a.num_states()).collect();
    perm.shuffle(rng);
    let map = |q: StateId| StateId(perm[q.index()] as u32);
    let mut names = vec![String::new(); a.num_states()];
    for q in a.states() {
        names[map(q).index()] = a.state_name(q).to_string();
    }
    WordAutomaton::from_parts(
        a.alphabet().clone(),
        names,
        map(a.initial()),
        a.accepting().iter().map(|q| map(*q)),
        a.transitions()
            .map(|t| Transition::new(map(t.source), t.label.clone(), map(t.target))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_automata_are_valid() {
        let al = Alphabet::from_chars("ab").shared();
        let mut r = rng(7);
        for _ in 0..200 {
            assert!(random_dsa(&mut r, &al, WordShape::default()).validate().is_empty());
            assert!(random_dga(&mut r, &al, WordShape::default()).validate().is_empty());
            let m = random_complete_dfa(&mut r, &al, 5);
            assert!(m.validate().is_empty() && m.is_complete());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let al = Alphabet::from_chars("ab").shared();
        let a = random_dsa(&mut rng(3), &al, WordShape::default());
        let b = random_dsa(&mut rng(3), &al, WordShape::default());
        assert_eq!(a, b);
    }

    #[test]
    fn clean_dsas_are_clean() {
        let al = Alphabet::from_chars("ab").shared();
        let mut r = rng(11);
        for _ in 0..20 {
            let a = random_clean_dsa(&mut r, &al, WordShape::default());
            assert!(is_well_formed_dsa(&a));
            assert!(classify_useless(&a).is_clean());
        }
    }
}
