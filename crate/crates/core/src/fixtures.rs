//! Small reference automata used throughout the tests, benches and docs.
//!
//! State and symbol names follow the usual drawings of these examples:
//! `a2` waits for `aab`, `a3` for `ab` then `bb`, `if_else_dsa` tracks
//! `if`/`else`/`endif`, and `m_star` / `m_star_star` are the pair of
//! equivalent DFAs where the non-minimal one yields the smaller DSA.

use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::model::{Dfa, Dga, Dsa};

fn ab() -> Arc<Alphabet> {
    Alphabet::from_chars("ab").shared()
}

/// Characters used by the `if`/`else`/`endif` example.
pub const IF_ELSE_CHARS: &str = "abdefghilnsx4";

/// Accepts words with an `else` outside any `if … endif` block (no nesting).
pub fn if_else_dsa() -> Dsa {
    let al = Alphabet::from_chars(IF_ELSE_CHARS).shared();
    let mut trans = vec![
        ("s0", "else", "s2"),
        ("s0", "if", "s1"),
        ("s1", "endif", "s0"),
        ("s1", "if", "s3"),
    ];
    let letters: Vec<String> = al.tokens().to_vec();
    for l in &letters {
        trans.push(("s2", l.as_str(), "s2"));
    }
    Dsa::from_names(al, &["s0", "s1", "s2", "s3"], "s0", &["s2"], &trans).unwrap()
}

/// Σ*aab over {a, b}.
pub fn a2() -> Dsa {
    Dsa::from_names(
        ab(),
        &["q0", "q3"],
        "q0",
        &["q3"],
        &[("q0", "aab", "q3"), ("q3", "aab", "q3")],
    )
    .unwrap()
}

/// Σ*abΣ*bb over {a, b}.
pub fn a3() -> Dsa {
    Dsa::from_names(
        ab(),
        &["q0", "q1", "q2"],
        "q0",
        &["q2"],
        &[
            ("q0", "ab", "q1"),
            ("q1", "bb", "q2"),
            ("q2", "b", "q2"),
            ("q2", "a", "q1"),
        ],
    )
    .unwrap()
}

/// (b*ba)*a*ab over {a, b}.
pub fn a4() -> Dsa {
    Dsa::from_names(
        ab(),
        &["q0", "q1"],
        "q0",
        &["q1"],
        &[("q0", "ab", "q1"), ("q0", "ba", "q0")],
    )
    .unwrap()
}

/// Two labels `abaa`, `baaa` from `q` to the accepting `q'`.
pub fn two_pattern_dsa() -> Dsa {
    Dsa::from_names(
        ab(),
        &["q", "q'"],
        "q",
        &["q'"],
        &[("q", "abaa", "q'"), ("q", "baaa", "q'")],
    )
    .unwrap()
}

/// The string-matching DFA for `{abaa, baaa}` as drawn (trim: `q'` has no
/// outgoing transitions).
pub fn two_pattern_dfa() -> Dfa {
    Dfa::from_names(
        ab(),
        &["q", "a", "b", "ab", "ba", "aba", "baa", "q'"],
        "q",
        &["q'"],
        &[
            ("q", "a", "a"),
            ("q", "b", "b"),
            ("a", "a", "a"),
            ("a", "b", "ab"),
            ("b", "a", "ba"),
            ("b", "b", "q"),
            ("ab", "a", "aba"),
            ("ab", "b", "b"),
            ("ba", "a", "baa"),
            ("ba", "b", "ab"),
            ("aba", "a", "q'"),
            ("aba", "b", "ab"),
            ("baa", "a", "q'"),
            ("baa", "b", "ab"),
        ],
    )
    .unwrap()
}

/// (ab)* as a trim DFA.
pub fn m1() -> Dfa {
    Dfa::from_names(
        ab(),
        &["q0", "q1"],
        "q0",
        &["q0"],
        &[("q0", "a", "q1"), ("q1", "b", "q0")],
    )
    .unwrap()
}

pub fn m1_as_dga() -> Dga {
    Dga(m1().to_dsa().0)
}

/// (ab)* as a one-state DGA.
pub fn h1() -> Dga {
    Dga::from_names(ab(), &["q0"], "q0", &["q0"], &[("q0", "ab", "q0")]).unwrap()
}

/// The aab-matching DFA exactly as drawn. It has no transition from `q1`
/// on `b`, so it is trim and does not recognise all of Σ*aab.
pub fn m2() -> Dfa {
    Dfa::from_names(
        ab(),
        &["q0", "q1", "q2", "q3"],
        "q0",
        &["q3"],
        &[
            ("q0", "b", "q0"),
            ("q0", "a", "q1"),
            ("q1", "a", "q2"),
            ("q2", "a", "q2"),
            ("q2", "b", "q3"),
            ("q3", "a", "q1"),
            ("q3", "b", "q0"),
        ],
    )
    .unwrap()
}

/// [`m2`] with the missing `q1 --b--> q0`: the complete minimal DFA for Σ*aab.
pub fn m2_complete() -> Dfa {
    let mut m = m2();
    let q1 = m.state_id("q1").unwrap();
    let q0 = m.state_id("q0").unwrap();
    let b = m.alphabet().symbol("b").unwrap();
    m.add_transition(q1, b, q0).unwrap();
    m
}

pub fn m2_as_dga() -> Dga {
    Dga(m2().to_dsa().0)
}

/// The DGA obtained from [`m2`] by suppressing `q1`.
pub fn h2() -> Dga {
    Dga::from_names(
        ab(),
        &["q0", "q2", "q3"],
        "q0",
        &["q3"],
        &[
            ("q0", "b", "q0"),
            ("q0", "aa", "q2"),
            ("q2", "a", "q2"),
            ("q2", "b", "q3"),
            ("q3", "aa", "q2"),
            ("q3", "b", "q0"),
        ],
    )
    .unwrap()
}

/// Words containing `ab`; `{q0, q2}` is suffix-tracking.
pub fn contains_ab_dfa() -> Dfa {
    Dfa::from_names(
        ab(),
        &["q0", "q1", "q2"],
        "q0",
        &["q2"],
        &[
            ("q0", "a", "q1"),
            ("q0", "b", "q0"),
            ("q1", "a", "q1"),
            ("q1", "b", "q2"),
            ("q2", "a", "q2"),
            ("q2", "b", "q2"),
        ],
    )
    .unwrap()
}

/// Words with two `a`s; `{q0, q2}` induces a non-equivalent DSA.
pub fn two_as_dfa() -> Dfa {
    Dfa::from_names(
        ab(),
        &["q0", "q1", "q2"],
        "q0",
        &["q2"],
        &[
            ("q0", "a", "q1"),
            ("q0", "b", "q0"),
            ("q1", "a", "q2"),
            ("q1", "b", "q1"),
            ("q2", "a", "q2"),
            ("q2", "b", "q2"),
        ],
    )
    .unwrap()
}

/// The DSA induced by `{q0, q2}` on [`two_as_dfa`] (not equivalent to it).
pub fn two_as_induced_dsa() -> Dsa {
    Dsa::from_names(
        ab(),
        &["q0", "q2"],
        "q0",
        &["q2"],
        &[
            ("q0", "aa", "q2"),
            ("q0", "b", "q0"),
            ("q2", "a", "q2"),
            ("q2", "b", "q2"),
        ],
    )
    .unwrap()
}

/// DFA where `{s0, s2, s4}` is not well-formed but `{s0, s2, s3, s4}` is
/// suffix-tracking. `s2` accepts, `s4` is a rejecting trap.
pub fn escape_dfa() -> Dfa {
    Dfa::from_names(
        ab(),
        &["s0", "s1", "s2", "s3", "s4"],
        "s0",
        &["s2"],
        &[
            ("s0", "a", "s1"),
            ("s0", "b", "s4"),
            ("s1", "a", "s1"),
            ("s1", "b", "s3"),
            ("s3", "a", "s2"),
            ("s3", "b", "s0"),
            ("s2", "a", "s2"),
            ("s2", "b", "s2"),
            ("s4", "a", "s4"),
            ("s4", "b", "s4"),
        ],
    )
    .unwrap()
}

fn abc() -> Arc<Alphabet> {
    Alphabet::from_chars("abc").shared()
}

/// `caba` and `ba` both lead to `q1`: `caba` is a useless bigger-suffix transition.
pub fn caba_useless_dsa() -> Dsa {
    Dsa::from_names(
        abc(),
        &["q0", "q1"],
        "q0",
        &[],
        &[("q0", "caba", "q1"), ("q0", "ba", "q1")],
    )
    .unwrap()
}

/// As [`caba_useless_dsa`] plus `aba` to `q2`, which makes `caba` useful.
pub fn caba_useful_dsa() -> Dsa {
    Dsa::from_names(
        abc(),
        &["q0", "q1", "q2"],
        "q0",
        &[],
        &[
            ("q0", "caba", "q1"),
            ("q0", "ba", "q1"),
            ("q0", "aba", "q2"),
        ],
    )
    .unwrap()
}

/// `{a, b}` plus `size - 2` further letters (`c`, `d`, … then `x27`, `x28`, …).
pub fn wide_alphabet(size: usize) -> Arc<Alphabet> {
    assert!(size >= 2, "alphabet needs at least a and b");
    let mut tokens = vec!["a".to_string(), "b".to_string()];
    for i in 2..size {
        if i < 26 {
            tokens.push(((b'a' + i as u8) as char).to_string());
        } else {
            tokens.push(format!("x{}", i + 1));
        }
    }
    Alphabet::new(tokens).unwrap().shared()
}

/// The minimal DFA M* over an alphabet of `sigma` letters.
pub fn m_star(sigma: usize) -> Dfa {
    let al = wide_alphabet(sigma);
    let mut m = Dfa::from_names(
        al,
        &["q0", "q1", "q2", "q4", "p"],
        "q0",
        &["q4"],
        &[
            ("q0", "a", "q1"),
            ("q0", "b", "p"),
            ("q1", "a", "q1"),
            ("q1", "b", "q2"),
            ("q2", "a", "q4"),
            ("p", "a", "p"),
            ("p", "b", "q4"),
        ],
    )
    .unwrap();
    fill_default(&mut m, &[("q0", "q0"), ("q1", "q0"), ("q2", "q0"), ("p", "q0"), ("q4", "q4")]);
    m
}

/// M**: M* with `p` split into the equivalent pair `p'` (entered on `b`
/// from `q0`) and `p`, which swap on `a`.
pub fn m_star_star(sigma: usize) -> Dfa {
    let al = wide_alphabet(sigma);
    let mut m = Dfa::from_names(
        al,
        &["q0", "q1", "q2", "q4", "p'", "p"],
        "q0",
        &["q4"],
        &[
            ("q0", "a", "q1"),
            ("q0", "b", "p'"),
            ("q1", "a", "q1"),
            ("q1", "b", "q2"),
            ("q2", "a", "q4"),
            ("p'", "a", "p"),
            ("p", "a", "p'"),
            ("p'", "b", "q4"),
            ("p", "b", "q4"),
        ],
    )
    .unwrap();
    fill_default(
        &mut m,
        &[
            ("q0", "q0"),
            ("q1", "q0"),
            ("q2", "q0"),
            ("p'", "q0"),
            ("p", "q0"),
            ("q4", "q4"),
        ],
    );
    m
}

/// Sends every still-undefined `(state, letter)` of the listed states to the given target.
fn fill_default(m: &mut Dfa, defaults: &[(&str, &str)]) {
    let letters: Vec<_> = m.alphabet().symbols().collect();
    for (src, dst) in defaults {
        let q = m.state_id(src).unwrap();
        let r = m.state_id(dst).unwrap();
        for &a in &letters {
            if m.next(q, a).is_none() {
                m.add_transition(q, a, r).unwrap();
            }
        }
    }
}

/// Alphabet `a1 … an`.
pub fn numbered_alphabet(n: usize) -> Arc<Alphabet> {
    Alphabet::new((1..=n).map(|i| format!("a{i}"))).unwrap().shared()
}

/// Two-state DSA for Σ*·a1a2…an over `{a1, …, an}`; total size 4 + 2n.
pub fn pattern_dsa(n: usize) -> Dsa {
    let al = numbered_alphabet(n);
    let pattern: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let pattern = pattern.join(".");
    Dsa::from_names(
        al,
        &["q0", "q1"],
        "q0",
        &["q1"],
        &[("q0", &pattern, "q1"), ("q1", &pattern, "q1")],
    )
    .unwrap()
}

/// Every DSA fixture.
pub fn all_dsas() -> Vec<Dsa> {
    vec![
        if_else_dsa(),
        a2(),
        a3(),
        a4(),
        two_pattern_dsa(),
        two_as_induced_dsa(),
        caba_useless_dsa(),
        caba_useful_dsa(),
        pattern_dsa(3),
    ]
}

/// Every DFA fixture (some trim).
pub fn all_dfas() -> Vec<Dfa> {
    vec![
        two_pattern_dfa(),
        m1(),
        m2(),
        m2_complete(),
        contains_ab_dfa(),
        two_as_dfa(),
        escape_dfa(),
        m_star(4),
        m_star_star(4),
    ]
}

pub fn all_dgas() -> Vec<Dga> {
    vec![h1(), h2(), m1_as_dga(), m2_as_dga()]
}
