//! Manchester-syntax front end: lexer, parser and renderer for the
//! supported OWL fragment.

mod ast;
mod lexer;
mod parser;
mod render;

use std::collections::BTreeMap;

use thiserror::Error;

pub use ast::*;
pub use lexer::{tokenize, Token, TokenKind, CONCEPT_KEYWORDS, FRAME_KEYWORDS};
pub use parser::{parse_class_axiom, parse_concept, parse_ontology};
pub use render::{render_axiom, render_concept, render_ontology, Renderer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("{line}:{column}: lexical error: {message}")]
    Lex { message: String, line: u32, column: u32 },
    #[error("{line}:{column}: {message}{}", fmt_expected(.expected))]
    Parse {
        message: String,
        expected: Vec<String>,
        line: u32,
        column: u32,
    },
}

fn fmt_expected(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}

impl SyntaxError {
    pub(crate) fn lex(message: impl Into<String>, line: u32, column: u32) -> Self {
        SyntaxError::Lex { message: message.into(), line, column }
    }

    /// `(line, column)` of the offending input, both 1-based.
    pub fn location(&self) -> Option<(u32, u32)> {
        match self {
            SyntaxError::Lex { line, column, .. } | SyntaxError::Parse { line, column, .. } => {
                Some((*line, *column))
            }
        }
    }
}

/// Prefix name to namespace IRI mapping used to expand `pre:local` names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixEnv {
    map: BTreeMap<String, String>,
}

impl Default for PrefixEnv {
    fn default() -> Self {
        let map = vocab::BUILTIN_PREFIXES
            .iter()
            .map(|(p, iri)| (p.to_string(), iri.to_string()))
            .collect();
        PrefixEnv { map }
    }
}

impl PrefixEnv {
    /// Builtin prefixes plus the ones declared in `ontology`.
    pub fn for_ontology(ontology: &Ontology) -> Self {
        let mut env = PrefixEnv::default();
        for (p, iri) in &ontology.prefixes {
            env.insert(p.clone(), iri.clone());
        }
        env
    }

    pub fn insert(&mut self, prefix: impl Into<String>, iri: impl Into<String>) {
        self.map.insert(prefix.into(), iri.into());
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.map.get(prefix).map(String::as_str)
    }

    /// Expands `pre:local`. Returns `None` for an undeclared prefix.
    pub fn expand(&self, prefixed: &str) -> Option<String> {
        let (prefix, local) = prefixed.split_once(':')?;
        self.get(prefix).map(|ns| format!("{ns}{local}"))
    }

    /// Expands `name` when it is a prefixed name with a known prefix,
    /// otherwise returns it unchanged.
    pub fn expand_or_keep(&self, name: &str) -> String {
        match name.split_once(':') {
            Some((p, _)) if !name.contains("://") && self.map.contains_key(p) => {
                self.expand(name).unwrap_or_else(|| name.to_string())
            }
            _ => name.to_string(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.map.iter().map(|(p, i)| (p.as_str(), i.as_str()))
    }
}
