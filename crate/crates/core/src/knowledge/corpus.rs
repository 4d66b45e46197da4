//! Corpus loading: JSONL dialogue samples.
//!
//! One sample per line:
//! `{"id": str, "context": [[token,…],…], "speakers": [role,…], "response": [token,…], "emotion": str}`

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Corpus split. `dev` is accepted as an alias for `valid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Split {
    Train,
    Valid,
    Test,
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(Split::Train),
            "valid" | "dev" => Ok(Split::Valid),
            "test" => Ok(Split::Test),
            other => Err(Error::Config(format!(
                "unknown split `{other}` (expected train, valid, dev, or test)"
            ))),
        }
    }
}

/// One conversation turn pair: context utterances, gold response, emotion label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DialogueSample {
    pub sample_id: String,
    /// Ordered utterances, each a list of whitespace tokens.
    pub context: Vec<Vec<String>>,
    /// Speaker role per utterance; adjacent roles alternate.
    pub speakers: Vec<String>,
    pub response: Vec<String>,
    pub emotion_label: String,
}

impl DialogueSample {
    /// All context tokens concatenated in utterance order.
    pub fn context_tokens(&self) -> Vec<String> {
        self.context.iter().flatten().cloned().collect()
    }

    pub fn last_utterance(&self) -> &[String] {
        self.context.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

#[derive(Deserialize)]
struct RawSample {
    id: String,
    context: Vec<Vec<String>>,
    speakers: Vec<String>,
    response: Vec<String>,
    emotion: String,
}

fn validate(raw: RawSample, line: usize) -> Result<DialogueSample> {
    if raw.context.is_empty() {
        return Err(Error::CorpusLine { line, reason: "empty context".into() });
    }
    if raw.context.iter().any(Vec::is_empty) {
        return Err(Error::CorpusLine { line, reason: "empty utterance in context".into() });
    }
    if raw.response.is_empty() {
        return Err(Error::CorpusLine { line, reason: "empty response".into() });
    }
    if raw.speakers.len() != raw.context.len() {
        return Err(Error::CorpusLine {
            line,
            reason: format!(
                "speakers length {} does not match context length {}",
                raw.speakers.len(),
                raw.context.len()
            ),
        });
    }
    if raw.speakers.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::CorpusLine { line, reason: "speaker roles do not alternate".into() });
    }
    if raw.emotion.is_empty() {
        return Err(Error::CorpusLine { line, reason: "empty emotion label".into() });
    }
    Ok(DialogueSample {
        sample_id: raw.id,
        context: raw.context,
        speakers: raw.speakers,
        response: raw.response,
        emotion_label: raw.emotion,
    })
}

/// Load a JSONL corpus split, preserving file order.
///
/// Malformed lines are reported with their 1-based line number. Emotion labels
/// are not validated here; see [`check_labels`] for the cross-split check.
pub fn load_corpus(path: &Path, _split: Split) -> Result<Vec<DialogueSample>> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut samples = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let raw: RawSample = serde_json::from_str(line)
            .map_err(|e| Error::CorpusLine { line: lineno, reason: e.to_string() })?;
        samples.push(validate(raw, lineno)?);
    }
    Ok(samples)
}

/// Reject samples whose emotion label is not in the (training-set) label set.
pub fn check_labels(samples: &[DialogueSample], known: &BTreeSet<String>) -> Result<()> {
    for (idx, s) in samples.iter().enumerate() {
        if !known.contains(&s.emotion_label) {
            return Err(Error::UnknownLabel { label: s.emotion_label.clone(), line: idx + 1 });
        }
    }
    Ok(())
}
