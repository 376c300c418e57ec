//! `dsa`: command-line front end for the dsa-core toolkit.
//!
//! Exit codes: 0 on success or a positive verdict, 1 on a negative verdict
//! (rejected word, inequivalent automata, set not suffix-tracking), 2 on
//! usage, file or input errors.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use dsa_core::alphabet::{Alphabet, Word};
use dsa_core::derivation::{
    best_derived_dsa, derive_dsa, derive_dsa_forced, enumerate_suffix_tracking_sets,
    is_suffix_tracking, simple_words_from, state_set, DEFAULT_CAP,
};
use dsa_core::dfa_ops::{
    complete, enumerate_automaton, enumerate_language, equivalent, minimize, trim,
};
use dsa_core::generalized::dga_suppress;
use dsa_core::hardness::{build_vc_dfa, default_padding, size_budget};
use dsa_core::io::{
    parse_automaton, parse_dfa, parse_dga, parse_dsa, parse_graph, serialize_dfa,
    serialize_dga, serialize_dsa, to_dot,
};
use dsa_core::semantics::Runner;
use dsa_core::tracking::tracking_dfa;
use dsa_core::{Automaton, Dfa, Dsa, StateId};

/// Largest number of words the brute-force oracle will enumerate.
const ORACLE_WORDS: u64 = 200_000;

#[derive(Parser)]
#[command(name = "dsa", version, about = "Deterministic suffix-reading automata toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct WordArg {
    /// Dot-separated symbols (`a.a.b`); empty string or `ε` for the empty word
    word: String,
    /// Read the word one character per symbol (`aab`)
    #[arg(long)]
    chars: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exit 0 if the automaton accepts the word, 1 otherwise
    Accepts {
        file: PathBuf,
        #[command(flatten)]
        word: WordArg,
    },
    /// Print the moves of a DSA (or DFA) run and the residual
    Run {
        file: PathBuf,
        #[command(flatten)]
        word: WordArg,
    },
    /// Tracking DFA of a DSA
    ToDfa { file: PathBuf },
    /// Minimal complete DFA (DSA and DGA inputs are converted first)
    Minimize { file: PathBuf },
    /// Add a rejecting sink for missing DFA transitions
    Complete { file: PathBuf },
    /// Keep only reachable and co-reachable states
    Trim { file: PathBuf },
    /// Language equivalence; prints the shortest counterexample
    Equiv {
        left: PathBuf,
        right: PathBuf,
        /// Longest words checked by the brute-force oracle after each conversion
        #[arg(long, default_value_t = 8)]
        oracle_maxlen: usize,
    },
    /// States, transitions, summed label length and total size
    Size { file: PathBuf },
    /// Simple words modulo a state set
    SimpleWords {
        file: PathBuf,
        #[arg(long)]
        from: String,
        /// Only words ending here; all targets when omitted
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<String>,
    },
    /// Diagnose whether a state set is suffix-tracking
    CheckSet {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
    /// Derived DSA of a suffix-tracking set
    Derive {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
        /// Build the induced DSA even when the set is not suffix-tracking
        #[arg(long)]
        force: bool,
    },
    /// Smallest derived DSA over all suffix-tracking sets
    DeriveMin { file: PathBuf },
    /// Suppress states of a DGA
    DgaSuppress {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
    /// DFA M_G of the vertex-cover reduction for a graph file
    GenVc {
        file: PathBuf,
        /// Padding letters; defaults to (|V|+|E|)^4
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Size budget (k'+2)·2Δ + 2Δ − 1 for a graph file
    VcBudget {
        file: PathBuf,
        #[arg(short = 'k')]
        k_prime: u64,
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Accepted words up to a length, in shortlex order
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Graphviz rendering
    Dot { file: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<Automaton> {
    parse_automaton(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_dfa(path: &Path) -> Result<Dfa> {
    parse_dfa(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_dsa(path: &Path) -> Result<Dsa> {
    parse_dsa(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn parse_word(al: &Alphabet, arg: &WordArg) -> Result<Word> {
    let w = if arg.word == "ε" {
        Word::empty()
    } else if arg.chars {
        al.parse_chars(&arg.word)?
    } else {
        al.parse_word(&arg.word)?
    };
    Ok(w)
}

fn show(al: &Alphabet, w: &[dsa_core::Symbol]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        al.format_word(w)
    }
}

fn set_of(m: &Dfa, names: &[String]) -> Result<BTreeSet<StateId>> {
    Ok(state_set(m, names)?)
}

/// Letter DFA for any automaton kind, with a note when a conversion happened.
fn letter_dfa(a: &Automaton) -> Result<(Dfa, Option<&'static str>)> {
    Ok(match a {
        Automaton::Dfa(m) => (m.clone(), None),
        Automaton::Dsa(x) => (tracking_dfa(x), Some("DSA converted to its tracking DFA")),
        Automaton::Dga(h) => (h.to_dfa()?, Some("DGA expanded to a letter DFA")),
    })
}

/// Longest length ≤ `max_len` whose word count stays within the oracle budget.
fn oracle_len(k: usize, max_len: usize) -> usize {
    let mut total: u64 = 1;
    let mut layer: u64 = 1;
    for n in 1..=max_len {
        layer = layer.saturating_mul(k as u64);
        total = total.saturating_add(layer);
        if total > ORACLE_WORDS {
            return n - 1;
        }
    }
    max_len
}

/// Compares a converted DFA with the original by enumeration.
fn oracle_check(name: &str, a: &Automaton, m: &Dfa, max_len: usize) -> Result<usize> {
    let n = oracle_len(a.alphabet().len(), max_len);
    let left = enumerate_automaton(a, n);
    if left != enumerate_language(m, n) {
        bail!("{name}: conversion disagrees with the original up to length {n}");
    }
    Ok(n)
}

fn run(cli: Cli) -> Result<u8> {
    let out = &mut String::new();
    let code = match cli.command {
        Command::Accepts { file, word } => {
            let a = load(&file)?;
            let w = parse_word(a.alphabet(), &word)?;
            let yes = accepts_word(&a, &w);
            out.push_str(if yes { "accepted\n" } else { "rejected\n" });
            u8::from(!yes)
        }
        Command::Run { file, word } => {
            let dsa = match load(&file)? {
                Automaton::Dsa(x) => x,
                Automaton::Dfa(m) => m.to_dsa(),
                Automaton::Dga(_) => bail!("run needs a DSA or DFA file"),
            };
            let al = dsa.alphabet().clone();
            let w = parse_word(&al, &word)?;
            let r = Runner::new(&dsa).run(&w);
            for mv in &r.moves {
                let t = &mv.transition;
                out.push_str(&format!(
                    "{} -[{}]-> {}  consumed {}\n",
                    dsa.state_name(t.source),
                    show(&al, &t.label),
                    dsa.state_name(t.target),
                    show(&al, &mv.consumed)
                ));
            }
            let end = r.end();
            let yes = r.residual.is_empty() && dsa.is_accepting(end);
            out.push_str(&format!("residual {}\n", show(&al, &r.residual)));
            out.push_str(&format!(
                "end {} {}\n",
                dsa.state_name(end),
                if yes { "accepted" } else { "rejected" }
            ));
            u8::from(!yes)
        }
        Command::ToDfa { file } => {
            out.push_str(&serialize_dfa(&tracking_dfa(&load_dsa(&file)?)));
            0
        }
        Command::Minimize { file } => {
            let (m, note) = letter_dfa(&load(&file)?)?;
            if let Some(n) = note {
                eprintln!("# {n}");
            }
            out.push_str(&serialize_dfa(&minimize(&m)));
            0
        }
        Command::Complete { file } => {
            out.push_str(&serialize_dfa(&complete(&load_dfa(&file)?)));
            0
        }
        Command::Trim { file } => {
            let (m, note) = letter_dfa(&load(&file)?)?;
            if let Some(n) = note {
                eprintln!("# {n}");
            }
            out.push_str(&serialize_dfa(&trim(&m)));
            0
        }
        Command::Equiv {
            left,
            right,
            oracle_maxlen,
        } => {
            let mut dfas = Vec::new();
            for path in [&left, &right] {
                let a = load(path)?;
                let (m, note) = letter_dfa(&a)?;
                if let Some(n) = note {
                    let name = path.display().to_string();
                    let len = oracle_check(&name, &a, &m, oracle_maxlen)?;
                    eprintln!("# {name}: {n} ({} states), oracle agrees up to length {len}", m.num_states());
                }
                dfas.push(m);
            }
            let eq = equivalent(&dfas[0], &dfas[1]);
            match &eq.counterexample {
                None => {
                    out.push_str("equivalent\n");
                    0
                }
                Some(w) => {
                    out.push_str(&format!("not equivalent\ncounterexample {}\n", show(&eq.alphabet, w)));
                    1
                }
            }
        }
        Command::Size { file } => {
            let s = load(&file)?.size();
            out.push_str(&format!(
                "states {}\ntransitions {}\nlabel-length {}\ntotal {}\n",
                s.states,
                s.transitions,
                s.label_length,
                s.total()
            ));
            0
        }
        Command::SimpleWords { file, from, to, set } => {
            let m = load_dfa(&file)?;
            let s = set_of(&m, &set)?;
            let p = m.state_id(&from)?;
            let to = to.map(|q| m.state_id(&q)).transpose()?;
            for (w, q) in simple_words_from(&m, p, &s, DEFAULT_CAP)? {
                match to {
                    Some(t) if t == q => out.push_str(&format!("{}\n", show(m.alphabet(), &w))),
                    Some(_) => {}
                    None => out.push_str(&format!("{} {}\n", show(m.alphabet(), &w), m.state_name(q))),
                }
            }
            0
        }
        Command::CheckSet { file, set } => {
            let m = load_dfa(&file)?;
            let report = is_suffix_tracking(&m, &set_of(&m, &set)?)?;
            if report.is_suffix_tracking() {
                out.push_str("suffix-tracking\n");
                0
            } else {
                out.push_str("not suffix-tracking\n");
                for line in report.describe(&m) {
                    out.push_str(&format!("  {line}\n"));
                }
                1
            }
        }
        Command::Derive { file, set, force } => {
            let m = load_dfa(&file)?;
            let s = set_of(&m, &set)?;
            if force {
                let a = derive_dsa_forced(&m, &s)?;
                let eq = equivalent(&tracking_dfa(&a), &complete(&m));
                out.push_str(&serialize_dsa(&a));
                match eq.counterexample {
                    None => out.push_str("# equivalent to the input DFA\n"),
                    Some(w) => out.push_str(&format!(
                        "# differs from the input DFA on {}\n",
                        show(&eq.alphabet, &w)
                    )),
                }
            } else {
                out.push_str(&serialize_dsa(&derive_dsa(&m, &s)?));
            }
            0
        }
        Command::DeriveMin { file } => {
            let m = load_dfa(&file)?;
            let count = enumerate_suffix_tracking_sets(&m)?.len();
            let (s, a) = best_derived_dsa(&m)?;
            let names: Vec<&str> = s.iter().map(|q| m.state_name(*q)).collect();
            out.push_str(&format!("# {count} suffix-tracking sets; smallest derived DSA uses {{{}}}\n", names.join(",")));
            out.push_str(&format!("# total size {}\n", a.total_size()));
            out.push_str("# smallest among DSAs derived from this DFA; a smaller equivalent DSA may exist\n");
            out.push_str(&serialize_dsa(&a));
            0
        }
        Command::DgaSuppress { file, set } => {
            let h = parse_dga(&read(&file)?).with_context(|| format!("{}", file.display()))?;
            let s = set
                .iter()
                .map(|n| h.state_id(n))
                .collect::<dsa_core::Result<BTreeSet<_>>>()?;
            out.push_str(&serialize_dga(&dga_suppress(&h, &s)?));
            0
        }
        Command::GenVc { file, delta } => {
            let g = parse_graph(&read(&file)?).with_context(|| format!("{}", file.display()))?;
            let delta = delta.unwrap_or_else(|| default_padding(&g));
            let delta = usize::try_from(delta).context("padding too large")?;
            out.push_str(&serialize_dfa(&build_vc_dfa(&g, delta)?));
            0
        }
        Command::VcBudget { file, k_prime, delta } => {
            let g = parse_graph(&read(&file)?).with_context(|| format!("{}", file.display()))?;
            let delta = delta.unwrap_or_else(|| default_padding(&g));
            if delta == 0 {
                bail!("padding must be at least 1");
            }
            out.push_str(&format!("{}\n", size_budget(k_prime, delta)));
            0
        }
        Command::Enumerate { file, max_len } => {
            let a = load(&file)?;
            for w in enumerate_automaton(&a, max_len) {
                out.push_str(&show(a.alphabet(), &w));
                out.push('\n');
            }
            0
        }
        Command::Dot { file } => {
            out.push_str(&to_dot(&load(&file)?));
            0
        }
    };
    print!("{out}");
    Ok(code)
}

fn accepts_word(a: &Automaton, w: &Word) -> bool {
    use dsa_core::dfa_ops::Recognizer;
    match a {
        Automaton::Dsa(x) => Runner::new(x).recognizes(w),
        Automaton::Dfa(m) => m.recognizes(w),
        Automaton::Dga(h) => h.recognizes(w),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dsa_core::io::serialize_automaton;

    #[test]
    fn oracle_length_respects_budget() {
        assert_eq!(oracle_len(2, 8), 8);
        assert_eq!(oracle_len(13, 8), 4);
        assert_eq!(oracle_len(1300, 8), 1);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn serialized_output_is_reparsable() {
        let text = serialize_automaton(&Automaton::Dsa(dsa_core::fixtures::a2()));
        assert!(parse_automaton(&text).is_ok());
    }
}
