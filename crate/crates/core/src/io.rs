//! JSON interchange format for categories and functors.
//!
//! A category file lists its objects, its non-identity arrows and the
//! composition table `[g, f, g∘f]`; identities are implicit and named
//! `id:<object>`. A functor file names its source and target files and maps
//! objects and non-identity arrows by identifier.

use std::collections::HashMap;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::cat::{identity_name, ArrId, FinCat, FinFunctor, ObjId, IDENTITY_PREFIX};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub id: String,
    pub src: String,
    pub dst: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub source_file: String,
    pub target_file: String,
    pub on_objects: IndexMap<String, String>,
    #[serde(default)]
    pub on_arrows: IndexMap<String, String>,
}

impl CategoryFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("category file serializes")
    }
}

impl FunctorFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("functor file serializes")
    }
}

/// Validates a category description: synthesizes identities, requires a
/// composite for every composable pair and checks all laws.
pub fn validate_category(raw: &CategoryFile) -> Result<FinCat> {
    let objects: HashMap<&str, ()> = raw.objects.iter().map(|o| (o.as_str(), ())).collect();
    let mut ends: HashMap<String, (String, String)> = HashMap::new();
    for o in &raw.objects {
        ends.insert(identity_name(o), (o.clone(), o.clone()));
    }
    for a in &raw.arrows {
        if !objects.contains_key(a.src.as_str()) {
            return Err(Error::DanglingEndpoint(format!("source `{}` of arrow `{}`", a.src, a.id)));
        }
        if !objects.contains_key(a.dst.as_str()) {
            return Err(Error::DanglingEndpoint(format!("target `{}` of arrow `{}`", a.dst, a.id)));
        }
        if a.id.starts_with(IDENTITY_PREFIX) {
            return Err(Error::LawViolation(format!(
                "arrow id `{}` uses the reserved identity prefix",
                a.id
            )));
        }
        if ends.insert(a.id.clone(), (a.src.clone(), a.dst.clone())).is_some() {
            return Err(Error::DuplicateId(a.id.clone()));
        }
    }
    let mut table: HashMap<(String, String), String> = HashMap::new();
    for [g, f, gf] in &raw.compose {
        for name in [g, f, gf] {
            if !ends.contains_key(name) {
                return Err(Error::DanglingEndpoint(format!("arrow `{name}` in composition table")));
            }
        }
        if ends[f].1 != ends[g].0 {
            return Err(Error::LawViolation(format!("table entry `{g}` after `{f}` is not composable")));
        }
        let expected = if g.starts_with(IDENTITY_PREFIX) {
            Some(f)
        } else if f.starts_with(IDENTITY_PREFIX) {
            Some(g)
        } else {
            None
        };
        if let Some(e) = expected {
            if e != gf {
                return Err(Error::LawViolation(format!(
                    "table entry `{g}` after `{f}` contradicts the identity law"
                )));
            }
            continue;
        }
        if let Some(prev) = table.insert((g.clone(), f.clone()), gf.clone()) {
            if &prev != gf {
                return Err(Error::LawViolation(format!("conflicting entries for `{g}` after `{f}`")));
            }
        }
    }
    let cat = FinCat::from_keyed(
        raw.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
        raw.arrows
            .iter()
            .map(|a| (a.id.clone(), a.id.clone(), a.src.clone(), a.dst.clone()))
            .collect(),
        |o| identity_name(o),
        |g, f| {
            if g.starts_with(IDENTITY_PREFIX) {
                Some(f.clone())
            } else if f.starts_with(IDENTITY_PREFIX) {
                Some(g.clone())
            } else {
                table.get(&(g.clone(), f.clone())).cloned()
            }
        },
    )?
    .cat;
    Ok(cat)
}

/// Canonical serialization: objects and non-identity arrows in canonical
/// order, then one table entry per composable pair of non-identity arrows.
pub fn category_to_file(c: &FinCat, name: Option<&str>) -> CategoryFile {
    let arrows = c
        .non_identity_arrows()
        .map(|f| ArrowEntry {
            id: c.arrow_name(f).to_string(),
            src: c.object_name(c.src(f)).to_string(),
            dst: c.object_name(c.dst(f)).to_string(),
        })
        .collect();
    let mut compose = Vec::new();
    for g in c.non_identity_arrows() {
        for &f in c.arrows_into(c.src(g)) {
            if c.is_identity(f) {
                continue;
            }
            compose.push([
                c.arrow_name(g).to_string(),
                c.arrow_name(f).to_string(),
                c.arrow_name(c.compose(g, f)).to_string(),
            ]);
        }
    }
    CategoryFile {
        name: name.map(str::to_string),
        objects: c.objects().map(|x| c.object_name(x).to_string()).collect(),
        arrows,
        compose,
    }
}

/// Validates a functor description against already loaded endpoints.
pub fn validate_functor(raw: &FunctorFile, source: Arc<FinCat>, target: Arc<FinCat>) -> Result<FinFunctor> {
    let mut objects = Vec::with_capacity(source.object_count());
    for x in source.objects() {
        let name = source.object_name(x);
        let img = raw
            .on_objects
            .get(name)
            .ok_or_else(|| Error::UnmappedItem(name.to_string()))?;
        objects.push(target.object_by_name(img).ok_or_else(|| Error::UnknownObject(img.clone()))?);
    }
    for k in raw.on_objects.keys() {
        if source.object_by_name(k).is_none() {
            return Err(Error::UnknownObject(k.clone()));
        }
    }
    for k in raw.on_arrows.keys() {
        if source.arrow_by_name(k).is_none() {
            return Err(Error::UnknownArrow(k.clone()));
        }
    }
    let mut arrows: Vec<ArrId> = Vec::with_capacity(source.arrow_count());
    for f in source.arrow_ids() {
        let name = source.arrow_name(f);
        let img = match raw.on_arrows.get(name) {
            Some(img) => target.arrow_by_name(img).ok_or_else(|| Error::UnknownArrow(img.clone()))?,
            None if source.is_identity(f) => target.id(objects[source.src(f).0]),
            None => return Err(Error::UnmappedItem(name.to_string())),
        };
        arrows.push(img);
    }
    FinFunctor::new(source, target, objects, arrows)
}

pub fn functor_to_file(f: &FinFunctor, source_file: &str, target_file: &str, name: Option<&str>) -> FunctorFile {
    let (s, t) = (f.source(), f.target());
    FunctorFile {
        name: name.map(str::to_string),
        source_file: source_file.to_string(),
        target_file: target_file.to_string(),
        on_objects: s
            .objects()
            .map(|x| (s.object_name(x).to_string(), t.object_name(f.ob(x)).to_string()))
            .collect(),
        on_arrows: s
            .non_identity_arrows()
            .map(|a| (s.arrow_name(a).to_string(), t.arrow_name(f.ar(a)).to_string()))
            .collect(),
    }
}

/// Looks up an object by name, for user-facing entry points.
pub fn object_named(c: &FinCat, name: &str) -> Result<ObjId> {
    c.object_by_name(name).ok_or_else(|| Error::UnknownObject(name.to_string()))
}

pub fn arrow_named(c: &FinCat, name: &str) -> Result<ArrId> {
    c.arrow_by_name(name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
}
