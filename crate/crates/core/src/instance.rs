//! Instance files: a universe of named elements and its partition into blocks.
//!
//! The format is a TOML document with exactly two keys:
//!
//! ```toml
//! universe = ["a", "b", "c", "d", "e"]
//! blocks = [["a", "b"], ["c", "d", "e"]]
//! ```
//!
//! Names must be nonempty and free of whitespace. Blocks must partition the
//! universe.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::error::Error;
use crate::rough::{Partition, Universe};
use crate::subset::{ElementId, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(String),
    #[error("the universe must contain at least one element")]
    EmptyUniverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn quote(name: &str) -> String {
    toml::Value::String(name.to_owned()).to_string()
}

impl InstanceDocument {
    /// Parses and validates an instance.
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let doc: InstanceDocument = toml::from_str(text).map_err(|e| {
            let (line, column) = e
                .span()
                .map_or((1, 1), |span| line_column(text, span.start));
            InstanceError::Syntax {
                line,
                column,
                message: e.message().to_owned(),
            }
        })?;
        doc.to_partition()?;
        Ok(doc)
    }

    pub fn from_partition(p: &Partition) -> Self {
        let universe = p.universe();
        let names: Vec<String> = (0..universe.size())
            .map(|i| universe.name(ElementId(i)))
            .collect();
        let blocks = p
            .blocks()
            .iter()
            .map(|b| b.iter().map(|e| names[e.0].clone()).collect())
            .collect();
        InstanceDocument {
            universe: names,
            blocks,
        }
    }

    pub fn to_partition(&self) -> Result<Partition, InstanceError> {
        if self.universe.is_empty() {
            return Err(InstanceError::EmptyUniverse);
        }
        if let Some(bad) = self
            .universe
            .iter()
            .find(|n| n.is_empty() || n.chars().any(char::is_whitespace))
        {
            return Err(InstanceError::Semantic(format!(
                "invalid element name {}: names must be nonempty and contain no whitespace",
                quote(bad)
            )));
        }
        let universe =
            Universe::with_names(self.universe.iter().cloned()).map_err(|e| match e {
                Error::DuplicateName(n) => {
                    InstanceError::Semantic(format!("duplicate element name {}", quote(&n)))
                }
                other => InstanceError::Semantic(other.to_string()),
            })?;
        let index: HashMap<&str, usize> = self
            .universe
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let n = universe.size();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (b, names) in self.blocks.iter().enumerate() {
            if names.is_empty() {
                return Err(InstanceError::Semantic(format!("block {} is empty", b + 1)));
            }
            let mut block = Subset::empty(n);
            for name in names {
                let &i = index.get(name.as_str()).ok_or_else(|| {
                    InstanceError::Semantic(format!(
                        "block {} names unknown element {}",
                        b + 1,
                        quote(name)
                    ))
                })?;
                if let Some(prev) = owner[i] {
                    let msg = if prev == b {
                        format!("element {} repeated in block {}", quote(name), b + 1)
                    } else {
                        format!(
                            "element {} in two blocks ({} and {})",
                            quote(name),
                            prev + 1,
                            b + 1
                        )
                    };
                    return Err(InstanceError::Semantic(msg));
                }
                owner[i] = Some(b);
                block = block.with(ElementId(i));
            }
            blocks.push(block);
        }
        if let Some(i) = owner.iter().position(Option::is_none) {
            return Err(InstanceError::Semantic(format!(
                "element {} is in no block",
                quote(&self.universe[i])
            )));
        }
        Partition::from_blocks(universe, blocks).map_err(|e| InstanceError::Semantic(e.to_string()))
    }

    /// Canonical text form; [`parse`](Self::parse) reads it back unchanged.
    pub fn to_text(&self) -> String {
        let list = |names: &[String]| {
            let quoted: Vec<String> = names.iter().map(|n| quote(n)).collect();
            format!("[{}]", quoted.join(", "))
        };
        let mut out = String::new();
        writeln!(out, "universe = {}", list(&self.universe)).unwrap();
        let blocks: Vec<String> = self.blocks.iter().map(|b| list(b)).collect();
        writeln!(out, "blocks = [{}]", blocks.join(", ")).unwrap();
        out
    }
}

/// Hex SHA-256 of the canonical text of `p`.
pub fn digest(p: &Partition) -> String {
    let text = InstanceDocument::from_partition(p).to_text();
    Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}
