//! Deterministic suffix-reading automata (DSAs).
//!
//! A DSA moves on words rather than letters: from state `q` it reads input
//! until the text read since arriving at `q` ends with one of `q`'s outgoing
//! labels, then fires the transition with the longest such label.
//!
//! The crate covers running DSAs, converting them to letter DFAs, deriving
//! DSAs back from DFAs through suffix-tracking state sets, generalized
//! automata, and the vertex-cover instances that make size minimization hard.

pub mod alphabet;
pub mod derivation;
pub mod dfa_ops;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod generalized;
pub mod hardness;
pub mod io;
pub mod iso;
pub mod model;
pub mod semantics;
pub mod tracking;

pub use alphabet::{Alphabet, Symbol, Word};
pub use error::{Error, Result};
pub use model::{Automaton, Dfa, Dga, Dsa, Kind, SizeBreakdown, StateId, Transition, Violation};
