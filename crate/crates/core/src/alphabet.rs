//! Symbols, alphabets and words.
//!
//! Symbols are arbitrary non-empty tokens rather than characters, so that
//! alphabets such as `{if, else, endif}` or the vertex/edge letters of the
//! hardness construction can be written down directly. An [`Alphabet`] is an
//! ordered, closed table of tokens; its declaration order is the order used
//! for every "lexicographic" tie-break in the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a token inside an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, ordered set of distinct tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    /// Builds an alphabet, rejecting empty, whitespace-bearing or repeated tokens.
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet {
            tokens: Vec::new(),
            index: HashMap::new(),
        };
        for token in tokens {
            let token = token.into();
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidSymbol(token));
            }
            if alphabet.index.contains_key(&token) {
                return Err(Error::DuplicateSymbol(token));
            }
            let sym = Symbol(alphabet.tokens.len() as u32);
            alphabet.index.insert(token.clone(), sym);
            alphabet.tokens.push(token);
        }
        Ok(alphabet)
    }

    /// One symbol per character of `chars`, in order of first appearance.
    pub fn from_chars(chars: &str) -> Self {
        let mut seen = Vec::new();
        for c in chars.chars() {
            let s = c.to_string();
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        Alphabet::new(seen).expect("distinct single characters")
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tokens.len() as u32).map(Symbol)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, sym: Symbol) -> &str {
        &self.tokens[sym.index()]
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.index() < self.tokens.len()
    }

    pub fn lookup(&self, token: &str) -> Option<Symbol> {
        self.index.get(token).copied()
    }

    pub fn symbol(&self, token: &str) -> Result<Symbol> {
        self.lookup(token)
            .ok_or_else(|| Error::UnknownSymbol(token.to_string()))
    }

    /// True when every token is a single character, so words can be shown
    /// without separators.
    pub fn is_single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a dot-separated word such as `a.a.b`. The empty string is ε.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        text.split('.').map(|t| self.symbol(t)).collect()
    }

    /// Parses a word by splitting `text` into one symbol per character.
    pub fn parse_chars(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| self.symbol(c.encode_utf8(&mut [0u8; 4])))
            .collect()
    }

    /// Parses a whitespace-separated symbol sequence (the file-format label syntax).
    pub fn parse_spaced(&self, text: &str) -> Result<Word> {
        text.split_whitespace().map(|t| self.symbol(t)).collect()
    }

    /// Dot-separated rendering, the inverse of [`Alphabet::parse_word`].
    pub fn format_word(&self, word: &[Symbol]) -> String {
        self.join(word, ".")
    }

    /// Compact rendering: no separator for single-character alphabets, dots otherwise.
    pub fn display_word(&self, word: &[Symbol]) -> String {
        if word.is_empty() {
            "ε".to_string()
        } else if self.is_single_char() {
            self.join(word, "")
        } else {
            self.join(word, ".")
        }
    }

    pub fn join(&self, word: &[Symbol], sep: &str) -> String {
        let mut out = String::new();
        for (i, s) in word.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(self.token(*s));
        }
        out
    }
}

/// A finite sequence of symbols. The empty word is ε.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    /// `self · sym` as a fresh word.
    pub fn extended(&self, sym: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(sym);
        Word(v)
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<u32> = self.0.iter().map(|s| s.0).collect();
        write!(f, "Word{ids:?}")
    }
}

/// `u` is a prefix of `w` (ε is a prefix of everything).
#[inline]
pub fn is_prefix(u: &[Symbol], w: &[Symbol]) -> bool {
    w.starts_with(u)
}

/// `u` is a suffix of `w`.
#[inline]
pub fn is_suffix(u: &[Symbol], w: &[Symbol]) -> bool {
    w.ends_with(u)
}

#[inline]
pub fn is_proper_prefix(u: &[Symbol], w: &[Symbol]) -> bool {
    u.len() < w.len() && is_prefix(u, w)
}

#[inline]
pub fn is_proper_suffix(u: &[Symbol], w: &[Symbol]) -> bool {
    u.len() < w.len() && is_suffix(u, w)
}

/// Length-lexicographic (shortlex) order on words.
pub fn shortlex(u: &[Symbol], w: &[Symbol]) -> Ordering {
    u.len().cmp(&w.len()).then_with(|| u.cmp(w))
}

/// No word of the set is a prefix of another one.
pub fn is_prefix_free<'a, I>(words: I) -> bool
where
    I: IntoIterator<Item = &'a [Symbol]>,
{
    let mut ws: Vec<&[Symbol]> = words.into_iter().collect();
    ws.sort();
    // in lexicographic order a prefix sorts immediately before some extension
    ws.windows(2).all(|p| !is_prefix(p[0], p[1]))
}

/// All words over `alphabet` of length at most `max_len`, in shortlex order.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let n = alphabet.len() as u32;
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n as usize);
        for w in &layer {
            for s in 0..n {
                next.push(w.extended(Symbol(s)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
        if n == 0 {
            break;
        }
    }
    out
}
