use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use fibcat::cat::{FinCat, FinFunctor, IDENTITY_PREFIX};
use fibcat::catalog;
use fibcat::io::{validate_category, validate_functor, CategoryFile, FunctorFile};
use crate::report::digest;
use crate::CliError;

/// Where an entry's text came from.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Origin {
    Catalog(String),
    File(PathBuf),
}

impl Origin {
    fn key(&self) -> String {
        match self {
            Origin::Catalog(stem) => stem.clone(),
            Origin::File(p) => p.display().to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Entry {
    Category(Arc<FinCat>),
    Functor(FinFunctor),
}

/// Loaded categories and functors, with the digest of every input read.
#[derive(Default)]
pub struct Workspace {
    categories: HashMap<String, Arc<FinCat>>,
    functors: HashMap<String, FinFunctor>,
    inputs: Vec<(String, String)>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(name, sha256)` of every input, in load order.
    pub fn inputs(&self) -> &[(String, String)] {
        &self.inputs
    }

    fn resolve(name: &str, base: Option<&Path>) -> Result<(Origin, String), CliError> {
        let candidates = match base {
            Some(dir) => vec![dir.join(name), PathBuf::from(name)],
            None => vec![PathBuf::from(name)],
        };
        for p in candidates {
            if p.is_file() {
                let text = std::fs::read_to_string(&p).map_err(|e| CliError::Io(p.display().to_string(), e))?;
                return Ok((Origin::File(p), text));
            }
        }
        let stem = name.strip_suffix(".json").unwrap_or(name);
        let text = catalog::file(stem).ok_or_else(|| CliError::UnknownEntry(name.to_string()))?;
        Ok((Origin::Catalog(stem.to_string()), text.to_string()))
    }

    fn record(&mut self, origin: &Origin, text: &str) {
        let key = origin.key();
        if !self.inputs.iter().any(|(n, _)| *n == key) {
            self.inputs.push((key, digest(text)));
        }
    }

    fn load_category(&mut self, name: &str, base: Option<&Path>) -> Result<Arc<FinCat>, CliError> {
        let (origin, text) = Self::resolve(name, base)?;
        let key = origin.key();
        if let Some(c) = self.categories.get(&key) {
            return Ok(c.clone());
        }
        self.record(&origin, &text);
        let cat = match &origin {
            Origin::Catalog(stem) => catalog::category(stem)?,
            Origin::File(_) => Arc::new(validate_category(&CategoryFile::from_json(&text)?)?),
        };
        self.categories.insert(key, cat.clone());
        Ok(cat)
    }

    fn load_functor(&mut self, origin: Origin, text: String) -> Result<FinFunctor, CliError> {
        let key = origin.key();
        if let Some(f) = self.functors.get(&key) {
            return Ok(f.clone());
        }
        self.record(&origin, &text);
        let raw = FunctorFile::from_json(&text)?;
        let dir = match &origin {
            Origin::File(p) => p.parent().map(Path::to_path_buf),
            Origin::Catalog(_) => None,
        };
        let src = self.load_category(&raw.source_file, dir.as_deref())?;
        let tgt = self.load_category(&raw.target_file, dir.as_deref())?;
        let f = validate_functor(&raw, src, tgt)?;
        self.functors.insert(key, f.clone());
        Ok(f)
    }

    /// A category or functor by catalog name or file path; `id:<category>`
    /// names the identity functor.
    pub fn entry(&mut self, name: &str) -> Result<Entry, CliError> {
        if let Some(rest) = name.strip_prefix(IDENTITY_PREFIX) {
            return Ok(Entry::Functor(FinFunctor::identity(self.load_category(rest, None)?)));
        }
        let (origin, text) = Self::resolve(name, None)?;
        if text.contains("\"source_file\"") {
            Ok(Entry::Functor(self.load_functor(origin, text)?))
        } else {
            Ok(Entry::Category(self.load_category(name, None)?))
        }
    }

    pub fn category(&mut self, name: &str) -> Result<Arc<FinCat>, CliError> {
        match self.entry(name)? {
            Entry::Category(c) => Ok(c),
            Entry::Functor(_) => Err(CliError::Usage(format!("`{name}` is a functor, expected a category"))),
        }
    }

    pub fn functor(&mut self, name: &str) -> Result<FinFunctor, CliError> {
        match self.entry(name)? {
            Entry::Functor(f) => Ok(f),
            Entry::Category(_) => Err(CliError::Usage(format!("`{name}` is a category, expected a functor"))),
        }
    }
}
