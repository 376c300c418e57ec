//! The automaton data model shared by every other module: DSAs, DFAs and
//! DGAs, their structural validation, and the total-size metric.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Bound;
use std::sync::Arc;

use crate::alphabet::{is_prefix, Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// Opaque state identifier; an index into the automaton's state table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

impl StateId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word-labelled transition `(source, label, target)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub label: Word,
    pub target: StateId,
}

impl Transition {
    pub fn new(source: StateId, label: Word, target: StateId) -> Self {
        Transition {
            source,
            label,
            target,
        }
    }
}

/// Which of the three automaton models a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Dsa,
    Dfa,
    Dga,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Dsa => "dsa",
            Kind::Dfa => "dfa",
            Kind::Dga => "dga",
        }
    }
}

/// Storage common to DSAs and DGAs: states plus a set of word-labelled
/// transitions kept in `(source, label, target)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordAutomaton {
    alphabet: Arc<Alphabet>,
    states: Vec<String>,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    transitions: BTreeSet<Transition>,
}

impl WordAutomaton {
    /// Assembles an automaton without checking it; call `validate` before use
    /// when the parts come from an untrusted source.
    pub fn from_parts(
        alphabet: Arc<Alphabet>,
        states: Vec<String>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Self {
        WordAutomaton {
            alphabet,
            states,
            initial,
            accepting: accepting.into_iter().collect(),
            transitions: transitions.into_iter().collect(),
        }
    }

    /// Builds from state names. Labels are split per character when every
    /// token of the alphabet is one character, and on `.` otherwise.
    pub fn from_names(
        alphabet: Arc<Alphabet>,
        states: &[&str],
        initial: &str,
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let names: Vec<String> = states.iter().map(|s| s.to_string()).collect();
        let lookup = name_index(&names)?;
        let id = |n: &str| {
            lookup
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownState(n.to_string()))
        };
        let mut ts = Vec::new();
        for (src, label, dst) in transitions {
            let label = if alphabet.is_single_char() {
                alphabet.parse_chars(label)?
            } else {
                alphabet.parse_word(label)?
            };
            ts.push(Transition::new(id(src)?, label, id(dst)?));
        }
        let acc = accepting.iter().map(|a| id(a)).collect::<Result<Vec<_>>>()?;
        let initial = id(initial)?;
        drop(lookup);
        Ok(WordAutomaton::from_parts(alphabet, names, initial, acc, ts))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len() as u32).map(StateId)
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.index()]
    }

    pub fn state_id(&self, name: &str) -> Result<StateId> {
        self.states
            .iter()
            .position(|s| s == name)
            .map(|i| StateId(i as u32))
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    pub fn transitions(&self) -> impl Iterator<Item = &Transition> {
        self.transitions.iter()
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn contains(&self, t: &Transition) -> bool {
        self.transitions.contains(t)
    }

    /// Transitions leaving `q`, ordered by label.
    pub fn outgoing(&self, q: StateId) -> impl Iterator<Item = &Transition> {
        let lo = Transition::new(q, Word::empty(), StateId(0));
        self.transitions
            .range((Bound::Included(lo), Bound::Unbounded))
            .take_while(move |t| t.source == q)
    }

    pub fn insert(&mut self, t: Transition) -> bool {
        self.transitions.insert(t)
    }

    pub fn remove(&mut self, t: &Transition) -> bool {
        self.transitions.remove(t)
    }

    pub fn with_transitions(&self, transitions: impl IntoIterator<Item = Transition>) -> Self {
        WordAutomaton {
            transitions: transitions.into_iter().collect(),
            ..self.clone()
        }
    }

    fn structural_violations(&self, out: &mut Vec<Violation>) {
        let n = self.states.len() as u32;
        let mut seen = HashMap::new();
        for (i, name) in self.states.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                out.push(Violation::DuplicateStateName(name.clone()));
            }
        }
        if self.initial.0 >= n {
            out.push(Violation::InitialOutOfRange(self.initial));
        }
        for q in &self.accepting {
            if q.0 >= n {
                out.push(Violation::AcceptingOutOfRange(*q));
            }
        }
        for t in &self.transitions {
            if t.source.0 >= n || t.target.0 >= n {
                out.push(Violation::EndpointOutOfRange(t.clone()));
            }
            if t.label.is_empty() {
                out.push(Violation::EmptyLabel(t.clone()));
            }
            if t.label.iter().any(|s| !self.alphabet.contains(*s)) {
                out.push(Violation::UnknownSymbol(t.clone()));
            }
        }
    }

    fn nondeterminism(&self, out: &mut Vec<Violation>) {
        let mut targets: BTreeMap<(StateId, &Word), Vec<StateId>> = BTreeMap::new();
        for t in &self.transitions {
            targets.entry((t.source, &t.label)).or_default().push(t.target);
        }
        for ((state, label), ts) in targets {
            if ts.len() > 1 {
                out.push(Violation::Nondeterministic {
                    state,
                    label: label.clone(),
                    targets: ts,
                });
            }
        }
    }

    fn size(&self) -> SizeBreakdown {
        SizeBreakdown {
            states: self.states.len(),
            transitions: self.transitions.len(),
            label_length: self.transitions.iter().map(|t| t.label.len()).sum(),
        }
    }
}

fn name_index(names: &[String]) -> Result<HashMap<&str, StateId>> {
    let mut map = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.as_str(), StateId(i as u32)).is_some() {
            return Err(Error::DuplicateState(n.clone()));
        }
    }
    Ok(map)
}

/// A deterministic suffix-reading automaton.
///
/// From a state `q` the automaton reads letters until the consumed block first
/// ends with one of the labels of `Out(q)`, then fires the transition carrying
/// the longest such label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dsa(pub WordAutomaton);

/// A deterministic generalized automaton: word-labelled edges consumed by
/// exact factorization, with prefix-free outgoing label sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dga(pub WordAutomaton);

impl std::ops::Deref for Dsa {
    type Target = WordAutomaton;
    fn deref(&self) -> &WordAutomaton {
        &self.0
    }
}

impl std::ops::Deref for Dga {
    type Target = WordAutomaton;
    fn deref(&self) -> &WordAutomaton {
        &self.0
    }
}

impl Dsa {
    pub fn from_names(
        alphabet: Arc<Alphabet>,
        states: &[&str],
        initial: &str,
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Self> {
        WordAutomaton::from_names(alphabet, states, initial, accepting, transitions).map(Dsa)
    }

    /// `Out(q)`: the labels of transitions leaving `q`.
    pub fn out_labels(&self, q: StateId) -> Result<BTreeSet<Word>> {
        if q.index() >= self.num_states() {
            return Err(Error::UnknownState(format!("#{}", q.0)));
        }
        Ok(self.outgoing(q).map(|t| t.label.clone()).collect())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.0.structural_violations(&mut out);
        self.0.nondeterminism(&mut out);
        out
    }

    pub fn size(&self) -> SizeBreakdown {
        self.0.size()
    }

    pub fn total_size(&self) -> usize {
        self.size().total()
    }
}

impl Dga {
    pub fn from_names(
        alphabet: Arc<Alphabet>,
        states: &[&str],
        initial: &str,
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Self> {
        WordAutomaton::from_names(alphabet, states, initial, accepting, transitions).map(Dga)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.0.structural_violations(&mut out);
        for q in self.states() {
            let labels: Vec<&Word> = self.outgoing(q).map(|t| &t.label).collect();
            for (i, a) in labels.iter().enumerate() {
                for b in &labels[i + 1..] {
                    if is_prefix(a, b) || is_prefix(b, a) {
                        out.push(Violation::NotPrefixFree {
                            state: q,
                            shorter: (*a).clone().min((*b).clone()),
                            longer: (*a).clone().max((*b).clone()),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn size(&self) -> SizeBreakdown {
        self.0.size()
    }

    pub fn total_size(&self) -> usize {
        self.size().total()
    }

    /// Letter DFA with the same language: every state's outgoing labels are
    /// laid out as a trie of fresh intermediate states.
    pub fn to_dfa(&self) -> Result<Dfa> {
        if let Some(v) = self.validate().into_iter().next() {
            return Err(Error::Invalid(v.describe(&self.0)));
        }
        let mut names = self.state_names().to_vec();
        let mut delta: Vec<Vec<Option<StateId>>> =
            vec![vec![None; self.alphabet().len()]; names.len()];
        for t in self.transitions() {
            let mut cur = t.source;
            let (last, init) = t.label.split_last().expect("non-empty label");
            for (i, s) in init.iter().enumerate() {
                cur = match delta[cur.index()][s.index()] {
                    Some(next) => next,
                    None => {
                        let fresh = StateId(names.len() as u32);
                        names.push(format!(
                            "{}~{}",
                            self.state_name(t.source),
                            self.alphabet().join(&t.label[..=i], ".")
                        ));
                        delta.push(vec![None; self.alphabet().len()]);
                        delta[cur.index()][s.index()] = Some(fresh);
                        fresh
                    }
                };
            }
            delta[cur.index()][last.index()] = Some(t.target);
        }
        Ok(Dfa::from_table(
            self.alphabet().clone(),
            names,
            self.initial(),
            self.accepting().iter().copied(),
            delta,
        ))
    }
}

/// A letter automaton with a partial transition function. A trim DFA simply
/// leaves some entries undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Arc<Alphabet>,
    states: Vec<String>,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    delta: Vec<Vec<Option<StateId>>>,
}

impl Dfa {
    /// A DFA over `states` with no transitions yet.
    pub fn new(
        alphabet: Arc<Alphabet>,
        states: Vec<String>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Self {
        let width = alphabet.len();
        let n = states.len();
        Dfa {
            alphabet,
            states,
            initial,
            accepting: accepting.into_iter().collect(),
            delta: vec![vec![None; width]; n],
        }
    }

    pub fn from_table(
        alphabet: Arc<Alphabet>,
        states: Vec<String>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        delta: Vec<Vec<Option<StateId>>>,
    ) -> Self {
        Dfa {
            alphabet,
            states,
            initial,
            accepting: accepting.into_iter().collect(),
            delta,
        }
    }

    /// Builds from names; transitions are `(source, symbol token, target)`.
    pub fn from_names(
        alphabet: Arc<Alphabet>,
        states: &[&str],
        initial: &str,
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let names: Vec<String> = states.iter().map(|s| s.to_string()).collect();
        let lookup = name_index(&names)?;
        let id = |n: &str| {
            lookup
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownState(n.to_string()))
        };
        let acc = accepting.iter().map(|a| id(a)).collect::<Result<Vec<_>>>()?;
        let mut dfa = Dfa::new(alphabet.clone(), names.clone(), id(initial)?, acc);
        for (src, sym, dst) in transitions {
            let sym = alphabet.symbol(sym)?;
            dfa.add_transition(id(src)?, sym, id(dst)?)?;
        }
        Ok(dfa)
    }

    /// Sets `δ(q, a) = r`; fails if a different target is already present.
    pub fn add_transition(&mut self, q: StateId, a: Symbol, r: StateId) -> Result<()> {
        match self.delta[q.index()][a.index()] {
            Some(existing) if existing != r => Err(Error::Determinism(format!(
                "state {} already moves to {} on {}",
                self.state_name(q),
                self.state_name(existing),
                self.alphabet.token(a)
            ))),
            _ => {
                self.delta[q.index()][a.index()] = Some(r);
                Ok(())
            }
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len() as u32).map(StateId)
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.index()]
    }

    pub fn state_id(&self, name: &str) -> Result<StateId> {
        self.states
            .iter()
            .position(|s| s == name)
            .map(|i| StateId(i as u32))
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    #[inline]
    pub fn next(&self, q: StateId, a: Symbol) -> Option<StateId> {
        self.delta[q.index()][a.index()]
    }

    pub fn table(&self) -> &[Vec<Option<StateId>>] {
        &self.delta
    }

    /// All defined transitions in (state, symbol) order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter().enumerate().filter_map(move |(a, r)| {
                r.map(|r| (StateId(q as u32), Symbol(a as u32), r))
            })
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().filter(|r| r.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().flatten().all(Option::is_some)
    }

    /// State reached from `q` on `word`, or `None` if the run gets stuck.
    pub fn run_from(&self, q: StateId, word: &[Symbol]) -> Option<StateId> {
        word.iter().try_fold(q, |cur, a| self.next(cur, *a))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.states.len() as u32;
        let mut seen = HashMap::new();
        for (i, name) in self.states.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                out.push(Violation::DuplicateStateName(name.clone()));
            }
        }
        if self.initial.0 >= n {
            out.push(Violation::InitialOutOfRange(self.initial));
        }
        for q in &self.accepting {
            if q.0 >= n {
                out.push(Violation::AcceptingOutOfRange(*q));
            }
        }
        if self.delta.len() != self.states.len()
            || self.delta.iter().any(|row| row.len() != self.alphabet.len())
        {
            out.push(Violation::TableShape);
        }
        for (q, a, r) in self.transitions() {
            if r.0 >= n {
                out.push(Violation::EndpointOutOfRange(Transition::new(
                    q,
                    Word::new(vec![a]),
                    r,
                )));
            }
        }
        out
    }

    pub fn size(&self) -> SizeBreakdown {
        let t = self.num_transitions();
        SizeBreakdown {
            states: self.states.len(),
            transitions: t,
            label_length: t,
        }
    }

    pub fn total_size(&self) -> usize {
        self.size().total()
    }

    /// Views a DFA as a DSA (every letter a one-symbol label).
    pub fn to_dsa(&self) -> Dsa {
        Dsa(WordAutomaton::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            self.initial,
            self.accepting.iter().copied(),
            self.transitions()
                .map(|(q, a, r)| Transition::new(q, Word::new(vec![a]), r)),
        ))
    }
}

/// Components of the total size: states + transitions + summed label lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBreakdown {
    pub states: usize,
    pub transitions: usize,
    pub label_length: usize,
}

impl SizeBreakdown {
    pub fn total(&self) -> usize {
        self.states + self.transitions + self.label_length
    }
}

/// A broken invariant found by `validate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateStateName(String),
    InitialOutOfRange(StateId),
    AcceptingOutOfRange(StateId),
    EndpointOutOfRange(Transition),
    EmptyLabel(Transition),
    UnknownSymbol(Transition),
    Nondeterministic {
        state: StateId,
        label: Word,
        targets: Vec<StateId>,
    },
    NotPrefixFree {
        state: StateId,
        shorter: Word,
        longer: Word,
    },
    TableShape,
}

impl Violation {
    /// Renders the violation with state and symbol names from `a`.
    pub fn describe(&self, a: &WordAutomaton) -> String {
        let name = |q: StateId| {
            a.state_names()
                .get(q.index())
                .cloned()
                .unwrap_or_else(|| format!("#{}", q.0))
        };
        let word = |w: &Word| {
            if w.iter().all(|s| a.alphabet().contains(*s)) {
                a.alphabet().display_word(w)
            } else {
                format!("{w:?}")
            }
        };
        let trans = |t: &Transition| {
            format!("({}, {}, {})", name(t.source), word(&t.label), name(t.target))
        };
        match self {
            Violation::DuplicateStateName(n) => format!("duplicate state name {n:?}"),
            Violation::InitialOutOfRange(q) => format!("initial state #{} does not exist", q.0),
            Violation::AcceptingOutOfRange(q) => {
                format!("accepting state #{} does not exist", q.0)
            }
            Violation::EndpointOutOfRange(t) => format!("transition {} has an unknown endpoint", trans(t)),
            Violation::EmptyLabel(t) => format!("transition {} has an empty label", trans(t)),
            Violation::UnknownSymbol(t) => {
                format!("transition {} uses a symbol outside the alphabet", trans(t))
            }
            Violation::Nondeterministic {
                state,
                label,
                targets,
            } => format!(
                "determinism: state {} has {} transitions labelled {} (targets {})",
                name(*state),
                targets.len(),
                word(label),
                targets.iter().map(|q| name(*q)).collect::<Vec<_>>().join(", ")
            ),
            Violation::NotPrefixFree {
                state,
                shorter,
                longer,
            } => format!(
                "prefix-freeness: at state {}, {} is a prefix of {}",
                name(*state),
                word(shorter),
                word(longer)
            ),
            Violation::TableShape => "transition table does not match states × alphabet".into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Any of the three automaton kinds, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Dsa(Dsa),
    Dfa(Dfa),
    Dga(Dga),
}

impl Automaton {
    pub fn kind(&self) -> Kind {
        match self {
            Automaton::Dsa(_) => Kind::Dsa,
            Automaton::Dfa(_) => Kind::Dfa,
            Automaton::Dga(_) => Kind::Dga,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        match self {
            Automaton::Dsa(a) => a.alphabet(),
            Automaton::Dfa(m) => m.alphabet(),
            Automaton::Dga(h) => h.alphabet(),
        }
    }

    pub fn size(&self) -> SizeBreakdown {
        match self {
            Automaton::Dsa(a) => a.size(),
            Automaton::Dfa(m) => m.size(),
            Automaton::Dga(h) => h.size(),
        }
    }

    pub fn total_size(&self) -> usize {
        self.size().total()
    }

    /// Human-readable violations, empty when the automaton is valid.
    pub fn validate(&self) -> Vec<String> {
        match self {
            Automaton::Dsa(a) => a.validate().iter().map(|v| v.describe(a)).collect(),
            Automaton::Dga(h) => h.validate().iter().map(|v| v.describe(h)).collect(),
            Automaton::Dfa(m) => {
                let view = m.to_dsa();
                m.validate().iter().map(|v| v.describe(&view)).collect()
            }
        }
    }
}
