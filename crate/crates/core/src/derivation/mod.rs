//! From DFAs to DSAs: simple words modulo a state set `S`, the
//! suffix-tracking test on `S`, the DSA induced by `S`, and removal of
//! transitions that never influence a run.

mod compat;
mod derive;
mod simple_words;
mod useless;

pub use compat::{
    check_edge, check_set, incompatible_edges, is_suffix_compatible, is_suffix_tracking,
    is_well_formed_set, well_formed_witness, CompatWitness, Edge, TrackingReport,
    WellFormedWitness,
};
pub use derive::{
    best_derived_dsa, derive_dsa, derive_dsa_forced, derive_from_tracking,
    enumerate_suffix_tracking_sets, enumerate_suffix_tracking_sets_with, induced_dsa,
    induced_dsa_from, state_set, DEFAULT_STATE_LIMIT,
};
pub(crate) use derive::combinations;
pub use simple_words::{
    all_simple_words, out_set, simple_words, simple_words_from, CandidateSet, DEFAULT_CAP,
};
pub use useless::{
    classify_useless, is_bigger_suffix, is_useless_bigger_suffix, is_useless_self_loop,
    is_well_formed_dsa, remove_useless, remove_useless_bigger_suffix, remove_useless_self_loops,
    well_formed_dsa_witness, UselessnessReport,
};
