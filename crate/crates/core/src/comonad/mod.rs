//! The splitting comonad `N` and the split fibration equivalent to a cloven one.

mod coalgebra;
mod gf;
mod split;

pub use coalgebra::{coalgebra_check, coalgebra_structure, comonad_laws, CoalgebraReport, ComonadLawReport};
pub use gf::{
    build_gf, counit_eval_at_identity, n_on_morphism, sections, GfArrow, GfCaps, GfCat, GfObject,
};
pub use split::{iso_closure, split_equivalent, EquivalenceChecks, EquivalenceWitness, SplitEquivalent};
