//! Word-emotion association profiling.
//!
//! Lemmas map to subsets of ten affect categories (two sentiments plus
//! eight basic emotions); a document's profile is the share of each
//! category among all category hits, so non-zero profiles sum to one.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use crate::num::Real;
use crate::{Error, Result};

/// The fixed ten-category inventory: two sentiments followed by the eight
/// basic emotions. The order here is the canonical reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AffectCategory {
    Positive,
    Negative,
    Joy,
    Trust,
    Anticipation,
    Surprise,
    Fear,
    Sadness,
    Anger,
    Disgust,
}

/// Emotion groupings used by the longitudinal charts: TJA bundles the
/// positively associated emotions, FASD the negatively associated ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmotionGroup {
    Tja,
    Fasd,
}

impl AffectCategory {
    pub const ALL: [AffectCategory; 10] = [
        AffectCategory::Positive,
        AffectCategory::Negative,
        AffectCategory::Joy,
        AffectCategory::Trust,
        AffectCategory::Anticipation,
        AffectCategory::Surprise,
        AffectCategory::Fear,
        AffectCategory::Sadness,
        AffectCategory::Anger,
        AffectCategory::Disgust,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AffectCategory::Positive => "positive",
            AffectCategory::Negative => "negative",
            AffectCategory::Joy => "joy",
            AffectCategory::Trust => "trust",
            AffectCategory::Anticipation => "anticipation",
            AffectCategory::Surprise => "surprise",
            AffectCategory::Fear => "fear",
            AffectCategory::Sadness => "sadness",
            AffectCategory::Anger => "anger",
            AffectCategory::Disgust => "disgust",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Position in [`Self::ALL`]; used to index count and frequency arrays.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|c| *c == self).expect("category is in ALL")
    }

    /// TJA/FASD membership; the two sentiments and surprise are ungrouped.
    pub fn group(self) -> Option<EmotionGroup> {
        match self {
            AffectCategory::Trust | AffectCategory::Joy | AffectCategory::Anticipation => {
                Some(EmotionGroup::Tja)
            }
            AffectCategory::Fear
            | AffectCategory::Anger
            | AffectCategory::Sadness
            | AffectCategory::Disgust => Some(EmotionGroup::Fasd),
            _ => None,
        }
    }
}

impl fmt::Display for AffectCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl EmotionGroup {
    pub fn members(self) -> &'static [AffectCategory] {
        match self {
            EmotionGroup::Tja => &[
                AffectCategory::Trust,
                AffectCategory::Joy,
                AffectCategory::Anticipation,
            ],
            EmotionGroup::Fasd => &[
                AffectCategory::Fear,
                AffectCategory::Anger,
                AffectCategory::Sadness,
                AffectCategory::Disgust,
            ],
        }
    }
}

/// A word's category memberships, packed into a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CategorySet(u16);

impl CategorySet {
    pub fn insert(&mut self, category: AffectCategory) {
        self.0 |= 1 << category.index();
    }

    pub fn contains(self, category: AffectCategory) -> bool {
        self.0 & (1 << category.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = AffectCategory> {
        AffectCategory::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl FromIterator<AffectCategory> for CategorySet {
    fn from_iter<T: IntoIterator<Item = AffectCategory>>(iter: T) -> Self {
        let mut set = CategorySet::default();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

/// Lemma -> category-set association lexicon.
#[derive(Debug, Clone)]
pub struct AffectLexicon {
    entries: HashMap<String, CategorySet>,
}

impl AffectLexicon {
    /// Loads the standard triple format: `word<TAB>category<TAB>flag`, one
    /// line per (word, category) pair with flag 0 or 1. Words whose flags
    /// are all zero get no entry.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }

    fn parse(text: &str, origin: &Path) -> Result<Self> {
        let mut entries: HashMap<String, CategorySet> = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [word, category, flag] = fields[..] else {
                return Err(Error::resource(
                    origin,
                    lineno,
                    "expected word<TAB>category<TAB>flag",
                ));
            };
            let category = AffectCategory::from_name(category.trim()).ok_or_else(|| {
                Error::resource(origin, lineno, format!("unknown category {category:?}"))
            })?;
            let flagged = match flag.trim() {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::resource(
                        origin,
                        lineno,
                        format!("flag must be 0 or 1, found {other:?}"),
                    ))
                }
            };
            if flagged {
                entries
                    .entry(word.trim().to_lowercase())
                    .or_default()
                    .insert(category);
            }
        }
        if entries.is_empty() {
            return Err(Error::resource(origin, 0, "empty affect lexicon"));
        }
        Ok(Self { entries })
    }

    pub fn from_entries(entries: HashMap<String, CategorySet>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Config("empty affect lexicon".into()));
        }
        Ok(Self {
            entries: entries.into_iter().filter(|(_, set)| !set.is_empty()).collect(),
        })
    }

    pub fn get(&self, lemma: &str) -> Option<CategorySet> {
        self.entries.get(lemma).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Occurrence-weighted category tallies for one document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AffectCounts {
    counts: [u64; 10],
}

impl AffectCounts {
    pub fn get(&self, category: AffectCategory) -> u64 {
        self.counts[category.index()]
    }

    pub fn set(&mut self, category: AffectCategory, count: u64) {
        self.counts[category.index()] = count;
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Counts category hits over a lemma stream; every occurrence of a matched
/// lemma increments all of its categories.
pub fn affect_counts(lemmas: &[String], lexicon: &AffectLexicon) -> AffectCounts {
    let mut counts = AffectCounts::default();
    for lemma in lemmas {
        if let Some(set) = lexicon.get(lemma) {
            for category in set.iter() {
                counts.counts[category.index()] += 1;
            }
        }
    }
    counts
}

/// The ten affect frequencies of one document, each in [0, 1]. When any
/// lemma matched, the frequencies sum to one; otherwise they are all zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffectProfile<F> {
    frequencies: [F; 10],
    total_hits: u64,
}

impl<F: Real> AffectProfile<F> {
    pub fn frequency(&self, category: AffectCategory) -> F {
        self.frequencies[category.index()]
    }

    pub fn total_hits(&self) -> u64 {
        self.total_hits
    }

    pub fn iter(&self) -> impl Iterator<Item = (AffectCategory, F)> + '_ {
        AffectCategory::ALL.into_iter().map(|c| (c, self.frequency(c)))
    }

    pub fn zero() -> Self {
        Self {
            frequencies: [F::zero(); 10],
            total_hits: 0,
        }
    }
}

/// Normalizes counts into an [`AffectProfile`]: each category's share of
/// the total hits, or all zeros when nothing matched.
pub fn affect_frequencies<F: Real>(counts: &AffectCounts) -> AffectProfile<F> {
    let total = counts.total();
    if total == 0 {
        return AffectProfile::zero();
    }
    let denom = F::constant(total as f64);
    let mut frequencies = [F::zero(); 10];
    for category in AffectCategory::ALL {
        frequencies[category.index()] = F::constant(counts.get(category) as f64) / denom;
    }
    AffectProfile {
        frequencies,
        total_hits: total,
    }
}

/// Convenience: profile a whole lemma stream in one call.
pub fn profile_lemmas<F: Real>(lemmas: &[String], lexicon: &AffectLexicon) -> AffectProfile<F> {
    affect_frequencies(&affect_counts(lemmas, lexicon))
}
