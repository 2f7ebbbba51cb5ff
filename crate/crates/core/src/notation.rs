//! Textual notation for words.
//!
//! Letters inside a word are comma-separated (`1,3,4,14`). A comma-free
//! all-digit word is read one digit per letter (`6389`), which is the compact
//! form used for words on `[9]`. Colored letters are written `v^c` and must
//! be comma-separated. Components of a sequence are separated by `|`; empty
//! components are allowed (`27|6389|514|`).

use crate::error::{Error, Result};
use crate::hookmaps::ColoredLetter;
use crate::permstats::Letter;

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if !s.contains(',') && s.chars().all(|c| c.is_ascii_digit()) {
        return Ok(s.bytes().map(|b| Letter::from(b - b'0')).collect());
    }
    tokens(s)
        .map(|t| {
            t.parse::<Letter>()
                .map_err(|_| Error::InvalidWord(format!("bad letter {t:?}")))
        })
        .collect()
}

pub fn parse_colored_word(s: &str) -> Result<Vec<ColoredLetter>> {
    tokens(s)
        .map(|t| {
            let bad = || Error::InvalidWord(format!("bad colored letter {t:?} (expected v^c)"));
            let (v, c) = t.split_once('^').ok_or_else(bad)?;
            Ok(ColoredLetter {
                value: v.trim().parse().map_err(|_| bad())?,
                color: c.trim().parse().map_err(|_| bad())?,
            })
        })
        .collect()
}

/// Splits `p1|tau_1|...|tau_k|p2` into its components.
pub fn split_components(s: &str) -> Vec<&str> {
    s.trim().split('|').collect()
}

/// Renders a word; compact digits when every letter is a single digit.
/// A lone multi-digit letter gets a trailing comma so it re-parses as one
/// letter.
pub fn render_word(letters: &[Letter], compact: bool) -> String {
    if compact && letters.iter().all(|&x| (1..=9).contains(&x)) {
        return letters.iter().map(ToString::to_string).collect();
    }
    let mut s = letters
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    if letters.len() == 1 && letters[0] > 9 {
        s.push(',');
    }
    s
}

pub fn render_colored_word(letters: &[ColoredLetter]) -> String {
    letters
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
