//! Valence/arousal/dominance lexicon and emotion intensity.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Word-level VAD scores, each component in `[0, 1]`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct VadLexicon {
    entries: BTreeMap<String, [f64; 3]>,
}

impl VadLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, word: impl Into<String>, vad: [f64; 3]) -> Result<()> {
        if vad.iter().any(|x| !(0.0..=1.0).contains(x)) {
            return Err(Error::Config(format!("VAD scores out of [0,1]: {vad:?}")));
        }
        self.entries.insert(word.into(), vad);
        Ok(())
    }

    pub fn get(&self, word: &str) -> Option<[f64; 3]> {
        self.entries.get(word).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// TSV format: `word<TAB>V<TAB>A<TAB>D`.
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let mut lex = Self::new();
        for (idx, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::Config(format!(
                    "VAD lexicon line {}: expected 4 tab-separated fields, got {}",
                    idx + 1,
                    fields.len()
                )));
            }
            let parse = |s: &str| -> Result<f64> {
                s.parse().map_err(|_| {
                    Error::Config(format!("VAD lexicon line {}: bad number `{s}`", idx + 1))
                })
            };
            lex.insert(fields[0], [parse(fields[1])?, parse(fields[2])?, parse(fields[3])?])?;
        }
        Ok(lex)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::new();
        for (word, [v, a, d]) in &self.entries {
            out.push_str(&format!("{word}\t{v}\t{a}\t{d}\n"));
        }
        fs::write(path, out).map_err(|e| Error::io(path.display().to_string(), e))
    }
}

/// Min-max bounds of the raw intensity over a concept inventory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntensityBounds {
    pub lo: f64,
    pub hi: f64,
}

/// Raw (pre-normalization) intensity: `‖[V−0.5, A/2]‖₂`. Dominance is unused.
pub fn raw_intensity(valence: f64, arousal: f64) -> f64 {
    ((valence - 0.5).powi(2) + (arousal / 2.0).powi(2)).sqrt()
}

impl IntensityBounds {
    /// Compute bounds over all inventory words present in the lexicon.
    pub fn from_inventory<'a>(
        words: impl IntoIterator<Item = &'a str>,
        lexicon: &VadLexicon,
    ) -> Result<Self> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for word in words {
            if let Some([v, a, _]) = lexicon.get(word) {
                let raw = raw_intensity(v, a);
                lo = lo.min(raw);
                hi = hi.max(raw);
            }
        }
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::Config(
                "degenerate intensity bounds: inventory needs two lexicon words with distinct raw intensities".into(),
            ));
        }
        Ok(Self { lo, hi })
    }
}

/// Min-max-normalized emotion intensity in `[0, 1]`; absent words score 0.
pub fn emotion_intensity(word: &str, lexicon: &VadLexicon, bounds: IntensityBounds) -> f64 {
    match lexicon.get(word) {
        None => 0.0,
        Some([v, a, _]) => {
            let raw = raw_intensity(v, a);
            ((raw - bounds.lo) / (bounds.hi - bounds.lo)).clamp(0.0, 1.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lex() -> VadLexicon {
        let mut l = VadLexicon::new();
        l.insert("neutral", [0.5, 0.0, 0.5]).unwrap();
        l.insert("ecstatic", [1.0, 1.0, 0.5]).unwrap();
        l.insert("calm", [0.6, 0.2, 0.5]).unwrap();
        l
    }

    #[test]
    fn neutral_point_is_minimum() {
        let l = lex();
        let bounds = IntensityBounds::from_inventory(["neutral", "ecstatic"], &l).unwrap();
        assert_eq!(bounds.lo, 0.0);
        assert_eq!(emotion_intensity("neutral", &l, bounds), 0.0);
    }

    #[test]
    fn extreme_vad_hits_upper_bound() {
        let l = lex();
        let bounds = IntensityBounds::from_inventory(["neutral", "ecstatic"], &l).unwrap();
        // raw = ‖[0.5, 0.5]‖₂
        let expected_raw = 0.5_f64.hypot(0.5);
        assert!((bounds.hi - expected_raw).abs() < 1e-12);
        assert!((expected_raw - 0.70711).abs() < 1e-5);
        assert_eq!(emotion_intensity("ecstatic", &l, bounds), 1.0);
    }

    #[test]
    fn absent_word_scores_zero() {
        let l = lex();
        let bounds = IntensityBounds::from_inventory(["neutral", "ecstatic"], &l).unwrap();
        assert_eq!(emotion_intensity("nowhere", &l, bounds), 0.0);
    }

    #[test]
    fn degenerate_inventory_rejected() {
        let l = lex();
        assert!(IntensityBounds::from_inventory(["neutral", "neutral"], &l).is_err());
        assert!(IntensityBounds::from_inventory(["missing"], &l).is_err());
    }

    #[test]
    fn tsv_roundtrip() {
        let l = lex();
        let f = tempfile::NamedTempFile::new().unwrap();
        l.save(f.path()).unwrap();
        assert_eq!(VadLexicon::load(f.path()).unwrap(), l);
    }

    proptest! {
        #[test]
        fn intensity_monotone_in_raw_norm(
            v1 in 0.0..=1.0f64, a1 in 0.0..=1.0f64,
            v2 in 0.0..=1.0f64, a2 in 0.0..=1.0f64,
        ) {
            let mut l = lex();
            l.insert("w1", [v1, a1, 0.5]).unwrap();
            l.insert("w2", [v2, a2, 0.5]).unwrap();
            let bounds = IntensityBounds::from_inventory(["neutral", "ecstatic"], &l).unwrap();
            let (r1, r2) = (raw_intensity(v1, a1), raw_intensity(v2, a2));
            let (e1, e2) = (
                emotion_intensity("w1", &l, bounds),
                emotion_intensity("w2", &l, bounds),
            );
            if r1 > r2 {
                prop_assert!(e1 >= e2);
            }
        }
    }
}
