//! Coequalizers in `Cat`, generalized congruences, regular epimorphisms and
//! the Conduché condition.

mod coeq;
mod conduche;
mod congruence;
mod preserve;
mod words;

pub use coeq::{coequalizer, default_max_len};
pub use conduche::{conduche_check, ConCategory, ConFailure, ConducheReport};
pub use congruence::{
    generated_arrows, induced_congruence, is_regular_epi, quotient_congruence, ConditionReport, GenCongruence,
    RegularEpiReport, LIST_CAP,
};
pub use preserve::{preservation_experiment, PreservationReport};
pub use words::{quotient, Quotient, UnionFind, Word, WordAlgebra, WORD_CAP};
