use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use super::{FetchError, KbError};

/// Maps ontology IRIs to local files. Loaded from a `catalog.json` object
/// whose values are paths relative to the catalog's own directory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<String, PathBuf>,
}

impl Catalog {
    pub fn load(path: &Path) -> Result<Self, KbError> {
        let file = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| KbError::Io { file: file.clone(), source })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::from_json(&text, base).map_err(|message| KbError::Catalog { file, message })
    }

    /// Parses catalog JSON, resolving relative paths against `base`.
    pub fn from_json(text: &str, base: &Path) -> Result<Self, String> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| e.to_string())?;
        Ok(Catalog {
            entries: raw.into_iter().map(|(iri, rel)| (iri, base.join(rel))).collect(),
        })
    }

    pub fn insert(&mut self, iri: impl Into<String>, path: impl Into<PathBuf>) {
        self.entries.insert(iri.into(), path.into());
    }

    pub fn get(&self, iri: &str) -> Option<&Path> {
        self.entries.get(iri).map(PathBuf::as_path)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A named ontology text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub text: String,
}

impl Document {
    pub fn read(path: &Path) -> Result<Self, KbError> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| KbError::Io { file: name.clone(), source })?;
        Ok(Document { name, text })
    }
}

/// Anything that can produce the document for an ontology IRI.
pub trait OntologySource {
    fn fetch(&self, iri: &str) -> Result<Document, FetchError>;
}

impl OntologySource for Catalog {
    fn fetch(&self, iri: &str) -> Result<Document, FetchError> {
        let path = self.get(iri).ok_or(FetchError::NotFound)?;
        Document::read(path).map_err(FetchError::Failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_paths_resolve_against_catalog_dir() {
        let cat = Catalog::from_json(r#"{"urn:a": "a.omn", "urn:b": "sub/b.omn"}"#, Path::new("/data")).unwrap();
        assert_eq!(cat.get("urn:a"), Some(Path::new("/data/a.omn")));
        assert_eq!(cat.get("urn:b"), Some(Path::new("/data/sub/b.omn")));
        assert!(cat.get("urn:c").is_none());
    }

    #[test]
    fn malformed_catalog() {
        assert!(Catalog::from_json("[1, 2]", Path::new(".")).is_err());
    }
}
