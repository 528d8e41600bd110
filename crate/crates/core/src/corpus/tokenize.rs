use serde::{Deserialize, Serialize};

/// A word of a sentence, with the surface features the rule engine reads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub folded: String,
    pub is_all_caps: bool,
    pub trailing_exclaims: u32,
}

impl Token {
    pub fn new(surface: &str, trailing_exclaims: u32) -> Self {
        Token {
            surface: surface.to_owned(),
            folded: fold(surface),
            is_all_caps: all_caps(surface),
            trailing_exclaims,
        }
    }
}

/// Per-character lowercase mapping, independent of locale.
pub(crate) fn fold(s: &str) -> String {
    s.chars().flat_map(char::to_lowercase).collect()
}

fn all_caps(s: &str) -> bool {
    let mut letters = 0;
    for c in s.chars().filter(|c| c.is_alphabetic()) {
        if !c.is_uppercase() {
            return false;
        }
        letters += 1;
    }
    letters >= 2
}

/// Western-style emoticons such as `:)`, `:-(`, `;D`, `:o`, `<3`.
pub fn is_emoticon(s: &str) -> bool {
    if matches!(s, "<3" | "</3") {
        return true;
    }
    let cs: Vec<char> = s.chars().collect();
    let eyes = |c: char| matches!(c, ':' | ';' | '=');
    let nose = |c: char| matches!(c, '-' | '\'' | '^');
    let mouth = |c: char| {
        matches!(
            c,
            ')' | '(' | 'D' | 'P' | 'p' | 'O' | 'o' | '/' | '\\' | '|' | '*' | ']' | '[' | '3' | '$' | '@' | 'S' | 's'
        )
    };
    match cs.as_slice() {
        [e, m] => eyes(*e) && mouth(*m),
        [e, n, m] => eyes(*e) && nose(*n) && mouth(*m),
        _ => false,
    }
}

/// Splits a sentence into tokens.
///
/// Words are separated by whitespace, and also by `--` or an em-dash, which
/// prose uses to glue clauses together without spaces. Leading and trailing
/// punctuation is stripped; the `!` characters in the trailing run are
/// counted. Internal apostrophes and hyphens stay in the word.
pub fn tokenize(sentence: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for chunk in sentence.split_whitespace() {
        if is_emoticon(chunk) {
            out.push(Token::new(chunk, 0));
            continue;
        }
        for piece in chunk.split("--").flat_map(|p| p.split('\u{2014}')) {
            let start = piece.trim_start_matches(|c: char| !c.is_alphanumeric());
            let core = start.trim_end_matches(|c: char| !c.is_alphanumeric());
            if core.is_empty() {
                continue;
            }
            let exclaims = start[core.len()..].chars().filter(|&c| c == '!').count() as u32;
            out.push(Token::new(core, exclaims));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn folded(s: &str) -> Vec<String> {
        tokenize(s).into_iter().map(|t| t.folded).collect()
    }

    #[test]
    fn whitespace_split() {
        assert_eq!(folded("not happy"), ["not", "happy"]);
    }

    #[test]
    fn counts_trailing_exclaims() {
        let t = tokenize("good!!!");
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].folded, "good");
        assert_eq!(t[0].trailing_exclaims, 3);
        assert_eq!(tokenize("\"Good!\"")[0].trailing_exclaims, 1);
    }

    #[test]
    fn caps_flags() {
        let t = tokenize("SO SAD!!! :o");
        assert_eq!(t.len(), 3);
        assert!(t[0].is_all_caps && t[1].is_all_caps);
        assert_eq!(t[1].folded, "sad");
        assert_eq!(t[1].trailing_exclaims, 3);
        assert_eq!(t[2].surface, ":o");
        assert!(!t[2].is_all_caps);
        // a single capital letter is not emphasis
        assert!(!tokenize("I")[0].is_all_caps);
        assert!(!tokenize("Ramsay")[0].is_all_caps);
    }

    #[test]
    fn internal_apostrophes_and_hyphens() {
        assert_eq!(folded("She wasn't at the mowing-machine."), ["she", "wasn't", "at", "the", "mowing-machine"]);
        assert_eq!(folded("(the boys')"), ["the", "boys"]);
    }

    #[test]
    fn dashes_separate_words() {
        assert_eq!(folded("rainbow--this dead--\" and\u{2014}so"), ["rainbow", "this", "dead", "and", "so"]);
    }

    #[test]
    fn emoticons_single_tokens() {
        assert_eq!(folded("great :) :D ;-) <3"), ["great", ":)", ":d", ";-)", "<3"]);
        assert!(!is_emoticon("::"));
        assert!(!is_emoticon("a:"));
    }

    #[test]
    fn punctuation_only_yields_nothing() {
        assert!(tokenize("-- ... !!! ,").is_empty());
        assert!(tokenize("").is_empty());
    }
}
