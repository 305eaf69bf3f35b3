//! Alphabets, weighted words, and exact graded noncommutative series.
//!
//! An [`Alphabet`] fixes a finite set of letters, each with a display token
//! and a positive integer weight; a [`Word`] is a sequence of letter ids
//! from one alphabet; an [`NcSeries`] maps words of weight at most `N` to
//! nonzero rational coefficients. All three are immutable once built, so
//! values can be shared freely across threads.

mod series;

pub use series::{shuffle_series, shuffle_words, NcSeries};

use std::collections::HashMap;
use std::sync::Arc;

use crate::{Error, Result};

/// Index of a letter inside its alphabet.
pub type LetterId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub id: LetterId,
    pub display: String,
    pub weight: u32,
}

/// A finite weighted alphabet. Letters are identified by their position in
/// the declaration order; display tokens must be unique.
#[derive(Debug)]
pub struct Alphabet {
    letters: Vec<Letter>,
    by_display: HashMap<String, LetterId>,
    has_multichar: bool,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}
impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<S: Into<String>>(letters: impl IntoIterator<Item = (S, u32)>) -> Result<Arc<Self>> {
        let mut out = Vec::new();
        let mut by_display = HashMap::new();
        for (display, weight) in letters {
            let display = display.into();
            if weight == 0 {
                return Err(Error::InvalidArgument(format!(
                    "letter `{display}` must have positive weight"
                )));
            }
            if display.is_empty() {
                return Err(Error::InvalidArgument("empty display token".into()));
            }
            let id = out.len() as LetterId;
            if by_display.insert(display.clone(), id).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate display token `{display}`"
                )));
            }
            out.push(Letter {
                id,
                display,
                weight,
            });
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("alphabet cannot be empty".into()));
        }
        let has_multichar = out.iter().any(|l| l.display.chars().count() > 1);
        Ok(Arc::new(Self {
            letters: out,
            by_display,
            has_multichar,
        }))
    }

    /// The two-letter alphabet `{a, b}` with unit weights.
    pub fn binary() -> Arc<Self> {
        Self::new([("a", 1), ("b", 1)]).expect("binary alphabet")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn display(&self, id: LetterId) -> &str {
        &self.letters[id as usize].display
    }

    pub fn weight(&self, id: LetterId) -> u32 {
        self.letters[id as usize].weight
    }

    pub fn id_of(&self, display: &str) -> Option<LetterId> {
        self.by_display.get(display).copied()
    }

    /// Builds a word from letter ids, validating each against the alphabet.
    pub fn word(&self, ids: impl IntoIterator<Item = LetterId>) -> Result<Word> {
        let ids: Vec<LetterId> = ids.into_iter().collect();
        for &id in &ids {
            if id as usize >= self.letters.len() {
                return Err(Error::InvalidArgument(format!("unknown letter id {id}")));
            }
        }
        Ok(Word(ids))
    }

    /// Builds a word from display tokens.
    pub fn word_from_displays<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        let mut ids = Vec::with_capacity(tokens.len());
        for token in tokens {
            let token = token.as_ref();
            let id = self
                .id_of(token)
                .ok_or_else(|| Error::Parse(format!("unknown letter `{token}`")))?;
            ids.push(id);
        }
        Ok(Word(ids))
    }

    /// Parses a rendered word. `1` denotes the empty word; `.`-separated
    /// tokens are accepted everywhere, and plain concatenations are
    /// segmented greedily with backtracking.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        if text.contains('.') {
            let tokens: Vec<&str> = text.split('.').collect();
            return self.word_from_displays(&tokens);
        }
        let mut ids = Vec::new();
        if self.segment(text, &mut ids) {
            return Ok(Word(ids));
        }
        // `1` denotes the empty word, unless it is a letter of the alphabet.
        if text == "1" {
            return Ok(Word::empty());
        }
        Err(Error::Parse(format!(
            "cannot segment `{text}` over this alphabet"
        )))
    }

    fn segment(&self, rest: &str, ids: &mut Vec<LetterId>) -> bool {
        if rest.is_empty() {
            return true;
        }
        // Longest match first so multi-character tokens win over prefixes.
        let mut candidates: Vec<&Letter> = self
            .letters
            .iter()
            .filter(|l| rest.starts_with(l.display.as_str()))
            .collect();
        candidates.sort_by_key(|l| std::cmp::Reverse(l.display.len()));
        for letter in candidates {
            ids.push(letter.id);
            if self.segment(&rest[letter.display.len()..], ids) {
                return true;
            }
            ids.pop();
        }
        false
    }

    pub fn word_weight(&self, word: &Word) -> u32 {
        word.ids().iter().map(|&id| self.weight(id)).sum()
    }

    /// Canonical rendering: the empty word is `1`; letters are joined
    /// directly, or with `.` when the alphabet has multi-character tokens.
    pub fn render_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let tokens: Vec<&str> = word.ids().iter().map(|&id| self.display(id)).collect();
        if self.has_multichar {
            tokens.join(".")
        } else {
            tokens.concat()
        }
    }

    /// Compressed rendering with run-length exponents (`abbab` → `ab2ab`).
    /// Falls back to [`render_word`](Self::render_word) for alphabets with
    /// multi-character tokens.
    pub fn render_word_runs(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        if self.has_multichar {
            return self.render_word(word);
        }
        let mut out = String::new();
        let ids = word.ids();
        let mut i = 0;
        while i < ids.len() {
            let mut j = i;
            while j < ids.len() && ids[j] == ids[i] {
                j += 1;
            }
            out.push_str(self.display(ids[i]));
            if j - i > 1 {
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }

}

/// Checks that two alphabet handles denote the same alphabet.
pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A word over a fixed alphabet, the empty word included. Ordering is
/// lexicographic on letter ids; series impose weight-major order on top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ids(ids: Vec<LetterId>) -> Self {
        Word(ids)
    }

    pub fn ids(&self) -> &[LetterId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut ids = Vec::with_capacity(self.0.len() + other.0.len());
        ids.extend_from_slice(&self.0);
        ids.extend_from_slice(&other.0);
        Word(ids)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// The remainder after removing `prefix`, when `prefix` is a prefix.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|rest| Word(rest.to_vec()))
    }

    /// The remainder after removing `suffix`, when `suffix` is a suffix.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0
            .strip_suffix(suffix.0.as_slice())
            .map(|rest| Word(rest.to_vec()))
    }

    /// Concatenation of a sequence of words.
    pub fn concat_all<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut ids = Vec::new();
        for w in words {
            ids.extend_from_slice(&w.0);
        }
        Word(ids)
    }
}
