//! Text formats for automata and graphs, and DOT export.
//!
//! ```text
//! dsa
//! alphabet a b
//! states q0 q3
//! initial q0
//! accepting q3
//! trans q0 q3 : a a b
//! trans q3 q3 : a a b
//! ```
//!
//! The first line is `dsa`, `dfa` or `dga`. A token starting with `#`
//! begins a comment. Graphs use `vertex <name>` and `edge <u> <v>` lines.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::hardness::Graph;
use crate::model::{Automaton, Dfa, Dga, Dsa, Kind, StateId, Transition, WordAutomaton};

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace()
        .take_while(|t| !t.starts_with('#'))
        .collect()
}

/// Non-empty lines as `(line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty())
}

#[derive(Default)]
struct Parts<'t> {
    alphabet: Option<Alphabet>,
    states: Option<(usize, Vec<String>)>,
    initial: Option<(usize, &'t str)>,
    accepting: Option<(usize, Vec<&'t str>)>,
    trans: Vec<(usize, &'t str, &'t str, Vec<&'t str>)>,
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let kind = match header.as_slice() {
        ["dsa"] => Kind::Dsa,
        ["dfa"] => Kind::Dfa,
        ["dga"] => Kind::Dga,
        _ => return Err(Error::parse(line, "expected `dsa`, `dfa` or `dga`")),
    };

    let mut p = Parts::default();
    for (line, t) in it {
        let once = |present: bool| {
            if present {
                Err(Error::parse(line, format!("repeated `{}` directive", t[0])))
            } else {
                Ok(())
            }
        };
        match t[0] {
            "alphabet" => {
                once(p.alphabet.is_some())?;
                let al = Alphabet::new(t[1..].iter().copied())
                    .map_err(|e| Error::parse(line, e.to_string()))?;
                p.alphabet = Some(al);
            }
            "states" => {
                once(p.states.is_some())?;
                let names: Vec<String> = t[1..].iter().map(|s| s.to_string()).collect();
                if names.is_empty() {
                    return Err(Error::parse(line, "at least one state is required"));
                }
                let mut seen = BTreeSet::new();
                if let Some(d) = names.iter().find(|n| !seen.insert(n.as_str())) {
                    return Err(Error::parse(line, format!("duplicate state {d}")));
                }
                p.states = Some((line, names));
            }
            "initial" => {
                once(p.initial.is_some())?;
                if t.len() != 2 {
                    return Err(Error::parse(line, "`initial` takes exactly one state"));
                }
                p.initial = Some((line, t[1]));
            }
            "accepting" => {
                once(p.accepting.is_some())?;
                p.accepting = Some((line, t[1..].to_vec()));
            }
            "trans" => {
                if t.len() < 5 || t[3] != ":" {
                    return Err(Error::parse(line, "expected `trans <src> <dst> : <sym>...`"));
                }
                p.trans.push((line, t[1], t[2], t[4..].to_vec()));
            }
            other => return Err(Error::parse(line, format!("unknown directive `{other}`"))),
        }
    }

    let alphabet = p
        .alphabet
        .ok_or_else(|| Error::parse(line, "missing `alphabet` line"))?
        .shared();
    let (_, names) = p.states.ok_or_else(|| Error::parse(line, "missing `states` line"))?;
    let index: BTreeMap<&str, StateId> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), StateId(i as u32)))
        .collect();
    let state = |line: usize, n: &str| {
        index
            .get(n)
            .copied()
            .ok_or_else(|| Error::parse(line, format!("undeclared state {n}")))
    };
    let (init_line, init) = p.initial.ok_or_else(|| Error::parse(line, "missing `initial` line"))?;
    let initial = state(init_line, init)?;
    let accepting = match p.accepting {
        Some((l, list)) => list.iter().map(|n| state(l, n)).collect::<Result<BTreeSet<_>>>()?,
        None => BTreeSet::new(),
    };

    let mut transitions = BTreeSet::new();
    let mut lines_of = Vec::new();
    for (l, src, dst, syms) in &p.trans {
        let label = syms
            .iter()
            .map(|s| {
                alphabet
                    .symbol(s)
                    .map_err(|_| Error::parse(*l, format!("undeclared symbol {s}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if kind == Kind::Dfa && label.len() != 1 {
            return Err(Error::parse(*l, "dfa labels must be single symbols"));
        }
        let t = Transition::new(state(*l, src)?, label.into(), state(*l, dst)?);
        if !transitions.insert(t.clone()) {
            return Err(Error::parse(*l, "duplicate transition"));
        }
        lines_of.push((*l, t));
    }

    match kind {
        Kind::Dfa => {
            let mut m = Dfa::new(alphabet, names, initial, accepting);
            for (l, t) in lines_of {
                m.add_transition(t.source, t.label[0], t.target)
                    .map_err(|e| Error::parse(l, e.to_string()))?;
            }
            Ok(Automaton::Dfa(m))
        }
        Kind::Dsa | Kind::Dga => {
            let w = WordAutomaton::from_parts(alphabet, names, initial, accepting, transitions);
            let a = if kind == Kind::Dsa {
                Automaton::Dsa(Dsa(w))
            } else {
                Automaton::Dga(Dga(w))
            };
            if let Some(v) = a.validate().into_iter().next() {
                return Err(Error::Invalid(v));
            }
            Ok(a)
        }
    }
}

fn expect_kind(a: Automaton, want: Kind) -> Result<Automaton> {
    if a.kind() == want {
        Ok(a)
    } else {
        Err(Error::parse(
            1,
            format!("expected a {} file, found {}", want.keyword(), a.kind().keyword()),
        ))
    }
}

pub fn parse_dsa(text: &str) -> Result<Dsa> {
    match expect_kind(parse_automaton(text)?, Kind::Dsa)? {
        Automaton::Dsa(a) => Ok(a),
        _ => unreachable!(),
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    match expect_kind(parse_automaton(text)?, Kind::Dfa)? {
        Automaton::Dfa(m) => Ok(m),
        _ => unreachable!(),
    }
}

pub fn parse_dga(text: &str) -> Result<Dga> {
    match expect_kind(parse_automaton(text)?, Kind::Dga)? {
        Automaton::Dga(h) => Ok(h),
        _ => unreachable!(),
    }
}

fn header(out: &mut String, kind: Kind, al: &Alphabet, names: &[String], initial: StateId, accepting: &BTreeSet<StateId>) {
    let _ = writeln!(out, "{}", kind.keyword());
    let _ = writeln!(out, "alphabet {}", al.tokens().join(" "));
    let _ = writeln!(out, "states {}", names.join(" "));
    let _ = writeln!(out, "initial {}", names[initial.index()]);
    let acc: Vec<&str> = accepting.iter().map(|q| names[q.index()].as_str()).collect();
    if acc.is_empty() {
        out.push_str("accepting\n");
    } else {
        let _ = writeln!(out, "accepting {}", acc.join(" "));
    }
}

fn serialize_word_automaton(kind: Kind, a: &WordAutomaton) -> String {
    let mut out = String::new();
    header(&mut out, kind, a.alphabet(), a.state_names(), a.initial(), a.accepting());
    for t in a.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} : {}",
            a.state_name(t.source),
            a.state_name(t.target),
            a.alphabet().join(&t.label, " ")
        );
    }
    out
}

pub fn serialize_dsa(a: &Dsa) -> String {
    serialize_word_automaton(Kind::Dsa, a)
}

pub fn serialize_dga(h: &Dga) -> String {
    serialize_word_automaton(Kind::Dga, h)
}

pub fn serialize_dfa(m: &Dfa) -> String {
    let mut out = String::new();
    header(&mut out, Kind::Dfa, m.alphabet(), m.state_names(), m.initial(), m.accepting());
    for (q, a, r) in m.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} : {}",
            m.state_name(q),
            m.state_name(r),
            m.alphabet().token(a)
        );
    }
    out
}

/// Canonical text: declaration order for symbols and states, transitions
/// sorted by source, label, target.
pub fn serialize_automaton(a: &Automaton) -> String {
    match a {
        Automaton::Dsa(x) => serialize_dsa(x),
        Automaton::Dfa(m) => serialize_dfa(m),
        Automaton::Dga(h) => serialize_dga(h),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last = 1;
    for (line, t) in lines(text) {
        last = line;
        match t.as_slice() {
            ["vertex", v] => {
                if vertices.iter().any(|x| x == v) {
                    return Err(Error::parse(line, format!("duplicate vertex {v}")));
                }
                vertices.push(v.to_string());
            }
            ["edge", u, v] => {
                for x in [u, v] {
                    if !vertices.iter().any(|y| y == x) {
                        return Err(Error::parse(line, format!("undeclared vertex {x}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on {u}")));
                }
                let key = if u < v { (*u, *v) } else { (*v, *u) };
                if !seen.insert(key) {
                    return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u.to_string(), v.to_string()));
            }
            _ => {
                return Err(Error::parse(line, "expected `vertex <name>` or `edge <u> <v>`"));
            }
        }
    }
    Graph::new(&vertices, &edges).map_err(|e| Error::parse(last, e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "edge {} {}", g.vertices()[i], g.vertices()[j]);
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering. Parallel edges share one arrow with comma-separated labels.
pub fn to_dot(a: &Automaton) -> String {
    let (al, names, initial, accepting) = match a {
        Automaton::Dsa(x) => (x.alphabet(), x.state_names(), x.initial(), x.accepting()),
        Automaton::Dga(h) => (h.alphabet(), h.state_names(), h.initial(), h.accepting()),
        Automaton::Dfa(m) => (m.alphabet(), m.state_names(), m.initial(), m.accepting()),
    };
    let mut grouped: BTreeMap<(StateId, StateId), Vec<String>> = BTreeMap::new();
    match a {
        Automaton::Dsa(x) => {
            for t in x.transitions() {
                grouped.entry((t.source, t.target)).or_default().push(al.display_word(&t.label));
            }
        }
        Automaton::Dga(h) => {
            for t in h.transitions() {
                grouped.entry((t.source, t.target)).or_default().push(al.display_word(&t.label));
            }
        }
        Automaton::Dfa(m) => {
            for (q, s, r) in m.transitions() {
                grouped.entry((q, r)).or_default().push(al.token(s).to_string());
            }
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", a.kind().keyword());
    out.push_str("  rankdir=LR;\n");
    out.push_str("  __start [shape=point];\n");
    for (i, n) in names.iter().enumerate() {
        let shape = if accepting.contains(&StateId(i as u32)) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {} [shape={shape}];", quote(n));
    }
    let _ = writeln!(out, "  __start -> {};", quote(&names[initial.index()]));
    for ((q, r), labels) in &grouped {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&names[q.index()]),
            quote(&names[r.index()]),
            quote(&labels.join(", "))
        );
    }
    out.push_str("}\n");
    out
}
