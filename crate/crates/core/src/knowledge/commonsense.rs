//! Precomputed commonsense inference cache.
//!
//! Inference strings are produced offline (COMET-style) and consumed here as
//! immutable data; the model core never queries a generative model online.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Separator used in serialized cache keys: `<text>␟<relation>`.
pub const KEY_SEPARATOR: char = '\u{241F}';

/// If-then inference relations. The first four reason about cognition; the
/// fifth infers the emotional reaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    XIntent,
    XNeed,
    XWant,
    XEffect,
    XReact,
}

/// The four cognition relations in their fixed graph ordering.
pub const COGNITION_RELATIONS: [Relation; 4] =
    [Relation::XIntent, Relation::XNeed, Relation::XWant, Relation::XEffect];

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::XIntent => "xIntent",
            Relation::XNeed => "xNeed",
            Relation::XWant => "xWant",
            Relation::XEffect => "xEffect",
            Relation::XReact => "xReact",
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xIntent" => Ok(Relation::XIntent),
            "xNeed" => Ok(Relation::XNeed),
            "xWant" => Ok(Relation::XWant),
            "xEffect" => Ok(Relation::XEffect),
            "xReact" => Ok(Relation::XReact),
            other => Err(Error::Config(format!("unknown commonsense relation `{other}`"))),
        }
    }
}

/// Map from `(text, relation)` to exactly `l` inference strings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CommonsenseCache {
    entries: BTreeMap<(String, Relation), Vec<String>>,
    inferences_per_key: usize,
}

impl CommonsenseCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of inference strings per key (`l`). Zero on an empty cache.
    pub fn inferences_per_key(&self) -> usize {
        self.inferences_per_key
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, text: impl Into<String>, relation: Relation, inferences: Vec<String>) -> Result<()> {
        if self.entries.is_empty() {
            self.inferences_per_key = inferences.len();
        } else if inferences.len() != self.inferences_per_key {
            return Err(Error::Config(format!(
                "cache entry has {} inferences, expected l={}",
                inferences.len(),
                self.inferences_per_key
            )));
        }
        self.entries.insert((text.into(), relation), inferences);
        Ok(())
    }

    pub fn contains(&self, text: &str, relation: Relation) -> bool {
        self.entries.contains_key(&(text.to_string(), relation))
    }

    /// Look up the `l` inference strings for `(text, relation)`.
    pub fn lookup(&self, text: &str, relation: Relation) -> Result<&[String]> {
        self.entries
            .get(&(text.to_string(), relation))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::CacheMiss {
                text: text.to_string(),
                relation: relation.as_str().to_string(),
            })
    }

    /// Chat-REPL fallback: a miss yields `l` copies of the null inference
    /// `"none"` instead of an error. The strict [`lookup`](Self::lookup) is
    /// what graph construction uses.
    pub fn lookup_or_placeholder(&self, text: &str, relation: Relation) -> Vec<String> {
        match self.lookup(text, relation) {
            Ok(v) => v.to_vec(),
            Err(_) => vec!["none".to_string(); self.inferences_per_key.max(1)],
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let raw: BTreeMap<String, Vec<String>> = serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("bad commonsense cache JSON: {e}")))?;
        let mut cache = Self::new();
        for (key, inferences) in raw {
            let (text, rel) = key.rsplit_once(KEY_SEPARATOR).ok_or_else(|| {
                Error::Config(format!("cache key `{key}` missing unit separator"))
            })?;
            cache.insert(text, rel.parse()?, inferences)?;
        }
        Ok(cache)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let raw: BTreeMap<String, &Vec<String>> = self
            .entries
            .iter()
            .map(|((text, rel), v)| (format!("{text}{KEY_SEPARATOR}{}", rel.as_str()), v))
            .collect();
        let json = serde_json::to_string_pretty(&raw)
            .map_err(|e| Error::Config(format!("cache serialization: {e}")))?;
        fs::write(path, json).map_err(|e| Error::io(path.display().to_string(), e))
    }
}
