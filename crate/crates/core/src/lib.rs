//! Computational toolkit for Grothendieck fibrations over finite categories.
//!
//! - [`cat`]: finite categories, functors, natural transformations, comma
//!   categories and pullbacks.
//! - [`fib`]: cartesian arrows, cleavages, the comma monad and its
//!   pseudo-algebras.
//! - [`comonad`]: the category of slice-indexed sections, its counit, the
//!   coalgebra of a cloven fibration and the equivalent split fibration.
//! - [`colimits`]: generalized congruences, coequalizers in `Cat`,
//!   regular epimorphisms and the Conduché condition.

pub mod cat;
pub mod catalog;
pub mod colimits;
pub mod comonad;
pub mod dot;
pub mod error;
pub mod fib;
pub mod io;

pub use error::{Error, Result};
