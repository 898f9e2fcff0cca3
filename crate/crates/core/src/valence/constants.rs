//! Heuristic constants and word tables for the valence scoring engine.
//!
//! Values follow the reference rule-based scorer so results stay comparable
//! with it. The same constants are documented in
//! resources/valence_constants.tsv; a test keeps file and code in sync.

use std::collections::HashMap;
use std::path::Path;
use std::sync::LazyLock;

use crate::{Error, Result};

/// Denominator constant of the compound-score normalization.
pub const NORMALIZATION_ALPHA: f64 = 15.0;
/// Valence shift contributed by an intensifying word ("very").
pub const BOOSTER_INCREMENT: f64 = 0.293;
/// Valence shift contributed by a dampening word ("slightly").
pub const DAMPENER_DECREMENT: f64 = -0.293;
/// Extra emphasis for an all-caps word in a mixed-case sentence.
pub const CAPS_EMPHASIS: f64 = 0.733;
/// Multiplier applied by a negation in the preceding trigram.
pub const NEGATION_SCALAR: f64 = -0.74;
/// Booster attenuation at distance two and three.
pub const BOOSTER_DISTANCE_TWO_SCALE: f64 = 0.95;
pub const BOOSTER_DISTANCE_THREE_SCALE: f64 = 0.9;
/// Multiplier for "never so ..." / "never this ..." constructions.
pub const NEVER_INTENSIFIER_SCALE: f64 = 1.25;
/// Clause weights around a contrastive "but".
pub const BUT_PRE_CLAUSE_SCALE: f64 = 0.5;
pub const BUT_POST_CLAUSE_SCALE: f64 = 1.5;
/// Emphasis per exclamation mark, counted up to the cap.
pub const EXCLAMATION_INCREMENT: f64 = 0.292;
pub const EXCLAMATION_MAX_COUNT: usize = 4;
/// Question-mark emphasis: per-mark increment for 2-3 marks, flat above.
pub const QUESTION_PAIR_INCREMENT: f64 = 0.18;
pub const QUESTION_MAX_EMPHASIS: f64 = 0.96;
/// Ternary classification boundaries on the compound score.
pub const POSITIVE_BOUNDARY: f64 = 0.05;
pub const NEGATIVE_BOUNDARY: f64 = -0.05;

/// Words that negate a following sentiment-laden token. Tokens containing
/// "n't" negate as well.
pub const NEGATORS: &[&str] = &[
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt", "ain't", "aren't",
    "can't", "couldn't", "daren't", "didn't", "doesn't", "dont", "hadnt", "hasnt", "havent",
    "isnt", "mightnt", "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
    "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
    "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent", "oughtn't", "shan't",
    "shouldn't", "uh-uh", "wasn't", "weren't", "without", "wont", "wouldnt", "won't", "wouldn't",
    "rarely", "seldom", "despite",
];

const B: f64 = BOOSTER_INCREMENT;
const D: f64 = DAMPENER_DECREMENT;

/// Degree modifiers and their signed increments. Multiword entries are
/// consulted by the idiom pass.
pub const BOOSTERS: &[(&str, f64)] = &[
    ("absolutely", B),
    ("amazingly", B),
    ("awfully", B),
    ("completely", B),
    ("considerable", B),
    ("considerably", B),
    ("decidedly", B),
    ("deeply", B),
    ("effing", B),
    ("enormous", B),
    ("enormously", B),
    ("entirely", B),
    ("especially", B),
    ("exceptional", B),
    ("exceptionally", B),
    ("extreme", B),
    ("extremely", B),
    ("fabulously", B),
    ("flipping", B),
    ("flippin", B),
    ("frackin", B),
    ("fracking", B),
    ("fricking", B),
    ("frickin", B),
    ("frigging", B),
    ("friggin", B),
    ("fully", B),
    ("fuckin", B),
    ("fucking", B),
    ("fuggin", B),
    ("fugging", B),
    ("greatly", B),
    ("hella", B),
    ("highly", B),
    ("hugely", B),
    ("incredible", B),
    ("incredibly", B),
    ("intensely", B),
    ("major", B),
    ("majorly", B),
    ("more", B),
    ("most", B),
    ("particularly", B),
    ("purely", B),
    ("quite", B),
    ("really", B),
    ("remarkably", B),
    ("so", B),
    ("substantially", B),
    ("thoroughly", B),
    ("total", B),
    ("totally", B),
    ("tremendous", B),
    ("tremendously", B),
    ("uber", B),
    ("unbelievably", B),
    ("unusually", B),
    ("utter", B),
    ("utterly", B),
    ("very", B),
    ("almost", D),
    ("barely", D),
    ("hardly", D),
    ("just enough", D),
    ("kind of", D),
    ("kinda", D),
    ("kindof", D),
    ("kind-of", D),
    ("less", D),
    ("little", D),
    ("marginal", D),
    ("marginally", D),
    ("occasional", D),
    ("occasionally", D),
    ("partly", D),
    ("scarce", D),
    ("scarcely", D),
    ("slight", D),
    ("slightly", D),
    ("somewhat", D),
    ("sort of", D),
    ("sorta", D),
    ("sortof", D),
    ("sort-of", D),
];

/// Multiword phrases scored as a unit, overriding their final word.
pub const IDIOMS: &[(&str, f64)] = &[
    ("the shit", 3.0),
    ("the bomb", 3.0),
    ("bad ass", 1.5),
    ("badass", 1.5),
    ("bus stop", 0.0),
    ("yeah right", -2.0),
    ("kiss of death", -1.5),
    ("to die for", 3.0),
    ("beating heart", 3.1),
    ("broken heart", -2.9),
];

pub(crate) static BOOSTER_MAP: LazyLock<HashMap<&'static str, f64>> =
    LazyLock::new(|| BOOSTERS.iter().copied().collect());

pub(crate) static IDIOM_MAP: LazyLock<HashMap<&'static str, f64>> =
    LazyLock::new(|| IDIOMS.iter().copied().collect());

pub(crate) static NEGATOR_SET: LazyLock<std::collections::HashSet<&'static str>> =
    LazyLock::new(|| NEGATORS.iter().copied().collect());

/// The scalar constants as (key, value) pairs, in the order documented in
/// the resource file.
pub fn scalar_constants() -> Vec<(&'static str, f64)> {
    vec![
        ("normalization_alpha", NORMALIZATION_ALPHA),
        ("booster_increment", BOOSTER_INCREMENT),
        ("dampener_decrement", DAMPENER_DECREMENT),
        ("caps_emphasis", CAPS_EMPHASIS),
        ("negation_scalar", NEGATION_SCALAR),
        ("booster_distance_two_scale", BOOSTER_DISTANCE_TWO_SCALE),
        ("booster_distance_three_scale", BOOSTER_DISTANCE_THREE_SCALE),
        ("never_intensifier_scale", NEVER_INTENSIFIER_SCALE),
        ("but_pre_clause_scale", BUT_PRE_CLAUSE_SCALE),
        ("but_post_clause_scale", BUT_POST_CLAUSE_SCALE),
        ("exclamation_increment", EXCLAMATION_INCREMENT),
        ("exclamation_max_count", EXCLAMATION_MAX_COUNT as f64),
        ("question_pair_increment", QUESTION_PAIR_INCREMENT),
        ("question_max_emphasis", QUESTION_MAX_EMPHASIS),
        ("positive_boundary", POSITIVE_BOUNDARY),
        ("negative_boundary", NEGATIVE_BOUNDARY),
    ]
}

/// Reads a key/value constants table (the format of
/// resources/valence_constants.tsv).
pub fn read_constants_table(path: &Path) -> Result<HashMap<String, f64>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut table = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('\t')
            .ok_or_else(|| Error::resource(path, idx + 1, "expected key<TAB>value"))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::resource(path, idx + 1, format!("bad value {value:?}")))?;
        if table.insert(key.trim().to_string(), value).is_some() {
            return Err(Error::resource(path, idx + 1, format!("duplicate key {key:?}")));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resource_file_matches_compiled_constants() {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("resources/valence_constants.tsv");
        let table = read_constants_table(&path).unwrap();
        let compiled = scalar_constants();
        assert_eq!(table.len(), compiled.len());
        for (key, value) in compiled {
            assert_eq!(table.get(key), Some(&value), "constant {key}");
        }
    }

    #[test]
    fn word_tables_do_not_overlap() {
        for (word, _) in BOOSTERS {
            assert!(!NEGATOR_SET.contains(word), "{word} in both tables");
        }
    }
}
