//! Finite categories, functors, natural transformations and the basic
//! constructions everything else is built from.

mod category;
mod construct;
pub mod enumerate;
mod functor;
mod nat;
pub mod universal;

pub use category::{identity_name, ArrId, Arrow, FinCat, Keyed, ObjId, COMPOSE_SEP, IDENTITY_PREFIX};
pub use construct::{
    arrow_category, comma, comma_over, point, pullback, slice, terminal, CommaArrow, CommaCat, CommaObject,
    Pullback,
};
pub use functor::{same_cat, FinFunctor};
pub use nat::NatTrans;
