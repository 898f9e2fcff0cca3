//! Tokenizer shared by the analysis engines: word tokens are maximal runs of
//! alphanumerics with internal apostrophes, everything else comes out as
//! single-character punctuation tokens. Case is preserved.

/// Splits a cleaned sentence into tokens.
pub fn tokenize(sentence: &str) -> Vec<String> {
    let chars: Vec<char> = sentence.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_alphanumeric() {
            let mut j = i + 1;
            while j < chars.len() {
                if chars[j].is_alphanumeric() {
                    j += 1;
                } else if chars[j] == '\'' && j + 1 < chars.len() && chars[j + 1].is_alphanumeric() {
                    // internal apostrophe, as in "don't"
                    j += 2;
                } else {
                    break;
                }
            }
            tokens.push(chars[i..j].iter().collect());
            i = j;
        } else {
            tokens.push(c.to_string());
            i += 1;
        }
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn toks(s: &str) -> Vec<String> {
        tokenize(s)
    }

    #[test]
    fn words_and_trailing_punctuation() {
        assert_eq!(toks("Britain deserves better!"), ["Britain", "deserves", "better", "!"]);
    }

    #[test]
    fn internal_apostrophes_stay_in_the_token() {
        assert_eq!(toks("don't stop"), ["don't", "stop"]);
        assert_eq!(toks("the dogs' home"), ["the", "dogs", "'", "home"]);
        assert_eq!(toks("'quoted'"), ["'", "quoted", "'"]);
    }

    #[test]
    fn hyphens_are_separate_tokens() {
        assert_eq!(toks("tax-free growth"), ["tax", "-", "free", "growth"]);
    }

    #[test]
    fn digits_and_case_are_preserved()
    {
        assert_eq!(toks("Spend 50,000 NOW"), ["Spend", "50", ",", "000", "NOW"]);
    }

    #[test]
    fn empty_input_gives_no_tokens() {
        assert!(toks("").is_empty());
        assert!(toks("   ").is_empty());
    }

    proptest! {
        // Joining the tokens reproduces the input minus its whitespace.
        #[test]
        fn tokens_cover_every_non_space_character(s in "\\PC{0,80}") {
            let joined: String = tokenize(&s).concat();
            let stripped: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(joined, stripped);
        }
    }
}
