//! The bundled catalog of example categories and functors.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cat::{FinCat, FinFunctor};
use crate::error::{Error, Result};
use crate::io::{validate_category, validate_functor, CategoryFile, FunctorFile};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../catalog/", $name, ".json")))),*]
    };
}

/// Every bundled file, keyed by its stem, in alphabetical order.
pub const FILES: &[(&str, &str)] = bundled![
    "chaotic2",
    "cospan",
    "cospan_arrow",
    "cospan_cod",
    "fold",
    "id_1",
    "id_2",
    "id_3",
    "id_B",
    "id_chaotic2",
    "interval2",
    "interval2_arrow",
    "interval2_cod",
    "interval2_dom",
    "interval3",
    "nonconduche_D",
    "pick_p0",
    "pick_p1",
    "point0",
    "point1",
    "point_into_chaotic",
    "poset2x2",
    "poset2x2_arrow",
    "poset2x2_cod",
    "poset2x2_dom",
    "quop_A",
    "quop_G",
    "quop_H",
    "quop_Q",
    "quop_X",
    "quop_Y",
    "quop_Y_over_poset",
    "quop_pick_w",
    "terminal",
    "two_intervals",
    "two_point_nonfib",
    "two_points",
    "two_points_over_a",
];

/// Generated entries: arrow categories and their domain/codomain functors.
pub const GENERATED: &[&str] = &[
    "cospan_arrow",
    "cospan_cod",
    "interval2_arrow",
    "interval2_cod",
    "interval2_dom",
    "poset2x2_arrow",
    "poset2x2_cod",
    "poset2x2_dom",
];

/// Catalog functors that are Grothendieck fibrations.
pub const FIBRATIONS: &[&str] = &[
    "id_1",
    "id_2",
    "id_3",
    "id_B",
    "id_chaotic2",
    "interval2_cod",
    "interval2_dom",
    "poset2x2_cod",
    "poset2x2_dom",
    "point0",
];

/// Catalog functors that are not Grothendieck fibrations.
pub const NON_FIBRATIONS: &[&str] = &["two_point_nonfib", "point1", "cospan_cod", "point_into_chaotic"];

/// Small categories used as test shapes for universal-property checks.
pub const TEST_SHAPES: &[&str] = &["terminal", "two_points", "interval2"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Category,
    Functor,
}

pub fn file(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    FILES.iter().find(|(n, _)| *n == stem).map(|(_, text)| *text)
}

pub fn kind(name: &str) -> Option<EntryKind> {
    let text = file(name)?;
    Some(if text.contains("\"source_file\"") {
        EntryKind::Functor
    } else {
        EntryKind::Category
    })
}

pub fn names(kind_filter: EntryKind) -> impl Iterator<Item = &'static str> {
    FILES
        .iter()
        .map(|(n, _)| *n)
        .filter(move |n| kind(n) == Some(kind_filter))
}

fn cache() -> &'static Mutex<HashMap<String, Arc<FinCat>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FinCat>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A bundled category; repeated lookups share one allocation.
pub fn category(name: &str) -> Result<Arc<FinCat>> {
    let stem = name.strip_suffix(".json").unwrap_or(name).to_string();
    if let Some(c) = cache().lock().unwrap().get(&stem) {
        return Ok(c.clone());
    }
    let text = file(&stem).ok_or_else(|| Error::Parse(format!("no bundled entry `{stem}`")))?;
    let cat = Arc::new(validate_category(&CategoryFile::from_json(text)?)?);
    Ok(cache().lock().unwrap().entry(stem).or_insert(cat).clone())
}

pub fn functor(name: &str) -> Result<FinFunctor> {
    let text = file(name).ok_or_else(|| Error::Parse(format!("no bundled entry `{name}`")))?;
    let raw = FunctorFile::from_json(text)?;
    validate_functor(&raw, category(&raw.source_file)?, category(&raw.target_file)?)
}
