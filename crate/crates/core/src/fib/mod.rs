//! Fibrations and the comma monad.

mod alpha;
mod cartesian;
mod monad;

pub use alpha::{pseudo_algebra_alpha, pseudo_algebra_alpha_for, AlphaReport};
pub use cartesian::{
    cartesian_lift, fillers, is_cartesian, is_fibration, is_split, is_street_fibration, unique_filler,
    CartesianWitness, Cartesianness, Cleavage, FibrationCheck, Filler, SplitCheck, SplitFailure, StreetCheck,
    StreetWitness,
};
pub use monad::{
    check_colax_idempotent, comma_object_count, counit_components, m_on_morphism, multiplication, ColaxReport,
    MonadInstance, StageSize, DEFAULT_SIZE_CAP,
};
