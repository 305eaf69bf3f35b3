//! Graded codes and their free submonoids.
//!
//! A [`GradedCode`] enumerates, degree by degree, the words of a code
//! `C = ∐ C_n` (finite or lazily infinite) together with the weight
//! function that grades it. Enumerators memoize; all returned values are
//! immutable and shared. Degree-`n` monoid words are produced by the
//! convolution `S_n = Σ_k C̲_k·S_{n-k}` with exact unique-factorization
//! bookkeeping: a repeated product is reported as a [`Error::NotACode`].

mod builtin;
mod factorize;
mod morphism;

pub use builtin::{
    ba_star, builtin_code, builtin_names, dyck_length, dyck_rho, fibonacci, integers,
    lambda_letters,
};
pub use factorize::{
    code_specialization, lazard_bisection, right_length_factorization, witt_code_series,
    FactorComponent, Factorization,
};
pub use morphism::WordMorphism;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::freealg::{Alphabet, NcSeries, Word};
use crate::rational::Rational;
use crate::{Error, Result};

type Enumerate = Box<dyn Fn(u32) -> Result<Vec<Word>> + Send + Sync>;

enum Enumerator {
    Finite(BTreeMap<u32, Vec<Word>>),
    Lazy(Enumerate),
}

/// A degree-graded code over a weighted alphabet.
pub struct GradedCode {
    name: String,
    alphabet: Arc<Alphabet>,
    finite: bool,
    enumerator: Enumerator,
    words_cache: Mutex<HashMap<u32, Arc<Vec<Word>>>>,
    monoid_cache: Mutex<HashMap<u32, Arc<Vec<Word>>>>,
}

impl std::fmt::Debug for GradedCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedCode")
            .field("name", &self.name)
            .field("finite", &self.finite)
            .finish()
    }
}

impl GradedCode {
    /// A finite code from an explicit word list. Words are graded by their
    /// weight; the empty word and duplicates are rejected.
    pub fn new_finite(
        name: impl Into<String>,
        alphabet: Arc<Alphabet>,
        words: Vec<Word>,
    ) -> Result<Arc<Self>> {
        let mut by_degree: BTreeMap<u32, Vec<Word>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for word in words {
            if word.is_empty() {
                return Err(Error::InvalidArgument(
                    "a code cannot contain the empty word".into(),
                ));
            }
            if !seen.insert(word.clone()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate word `{}`",
                    alphabet.render_word(&word)
                )));
            }
            by_degree
                .entry(alphabet.word_weight(&word))
                .or_default()
                .push(word);
        }
        for words in by_degree.values_mut() {
            words.sort();
        }
        Ok(Arc::new(Self {
            name: name.into(),
            alphabet,
            finite: true,
            enumerator: Enumerator::Finite(by_degree),
            words_cache: Mutex::new(HashMap::new()),
            monoid_cache: Mutex::new(HashMap::new()),
        }))
    }

    /// A lazily enumerated code: `enumerate(n)` must return the sorted,
    /// duplicate-free words of degree exactly `n`.
    pub fn new_lazy(
        name: impl Into<String>,
        alphabet: Arc<Alphabet>,
        enumerate: impl Fn(u32) -> Result<Vec<Word>> + Send + Sync + 'static,
    ) -> Arc<Self> {
        Arc::new(Self {
            name: name.into(),
            alphabet,
            finite: false,
            enumerator: Enumerator::Lazy(Box::new(enumerate)),
            words_cache: Mutex::new(HashMap::new()),
            monoid_cache: Mutex::new(HashMap::new()),
        })
    }

    /// The code whose words are exactly the letters of the alphabet.
    pub fn letters_code(name: impl Into<String>, alphabet: Arc<Alphabet>) -> Result<Arc<Self>> {
        let words = alphabet
            .letters()
            .iter()
            .map(|l| Word::from_ids(vec![l.id]))
            .collect();
        Self::new_finite(name, alphabet, words)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// All code words of degree exactly `n`, sorted.
    pub fn words_of_weight(&self, n: u32) -> Result<Arc<Vec<Word>>> {
        if let Some(hit) = self.words_cache.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let words = match &self.enumerator {
            Enumerator::Finite(map) => map.get(&n).cloned().unwrap_or_default(),
            Enumerator::Lazy(f) => f(n)?,
        };
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]), "sorted, distinct");
        debug_assert!(words
            .iter()
            .all(|w| self.alphabet.word_weight(w) == n));
        let arc = Arc::new(words);
        self.words_cache.lock().unwrap().insert(n, arc.clone());
        Ok(arc)
    }

    /// All words of every degree up to `n` (finite codes only need this for
    /// Sardinas–Patterson and serialization).
    pub fn words_up_to(&self, n: u32) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        for k in 1..=n {
            out.extend(self.words_of_weight(k)?.iter().cloned());
        }
        Ok(out)
    }

    /// The characteristic series `Σ_{1≤k≤n} C̲_k`.
    pub fn char_series(&self, n: u32) -> Result<NcSeries> {
        let mut out = NcSeries::zero(self.alphabet.clone(), n);
        for k in 1..=n {
            for word in self.words_of_weight(k)?.iter() {
                out.add_term(word.clone(), Rational::one())?;
            }
        }
        Ok(out)
    }

    /// The words of degree `n` in the monoid `C*`, via the convolution
    /// `S_n = Σ_k C̲_k S_{n-k}`. A collision proves the input is not a code.
    pub fn monoid_words(&self, n: u32) -> Result<Arc<Vec<Word>>> {
        if let Some(hit) = self.monoid_cache.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let words = if n == 0 {
            vec![Word::empty()]
        } else {
            let mut acc: Vec<Word> = Vec::new();
            for k in 1..=n {
                let heads = self.words_of_weight(k)?;
                if heads.is_empty() {
                    continue;
                }
                let tails = self.monoid_words(n - k)?;
                for head in heads.iter() {
                    for tail in tails.iter() {
                        acc.push(head.concat(tail));
                    }
                }
            }
            acc.sort();
            if let Some(pair) = acc.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::NotACode {
                    word: self.alphabet.render_word(&pair[0]),
                });
            }
            acc
        };
        let arc = Arc::new(words);
        self.monoid_cache.lock().unwrap().insert(n, arc.clone());
        Ok(arc)
    }

    /// Characteristic series of the degree-`n` slice of `C*`.
    pub fn monoid_series(&self, n: u32) -> Result<NcSeries> {
        NcSeries::characteristic(
            self.alphabet.clone(),
            self.monoid_words(n)?.iter().cloned(),
            n,
        )
    }

    /// `σ = Σ_{0≤k≤n} S_k[C]`, the truncated characteristic series of `C*`.
    pub fn sigma_series(&self, n: u32) -> Result<NcSeries> {
        let mut out = NcSeries::zero(self.alphabet.clone(), n);
        for k in 0..=n {
            for word in self.monoid_words(k)?.iter() {
                out.add_term(word.clone(), Rational::one())?;
            }
        }
        Ok(out)
    }

    pub fn contains_monoid_word(&self, word: &Word) -> Result<bool> {
        let weight = self.alphabet.word_weight(word);
        Ok(self.monoid_words(weight)?.binary_search(word).is_ok())
    }

    pub fn contains_code_word(&self, word: &Word) -> Result<bool> {
        let weight = self.alphabet.word_weight(word);
        Ok(self.words_of_weight(weight)?.binary_search(word).is_ok())
    }

    /// Serializes a finite code as a standalone JSON document.
    pub fn to_json(&self, up_to: u32) -> Result<String> {
        let words = self.words_up_to(up_to)?;
        let dto = CodeJson {
            name: self.name.clone(),
            alphabet: self
                .alphabet
                .letters()
                .iter()
                .map(|l| l.display.clone())
                .collect(),
            weights: self
                .alphabet
                .letters()
                .iter()
                .map(|l| (l.display.clone(), l.weight))
                .collect(),
            words: words
                .iter()
                .map(|w| self.alphabet.render_word(w))
                .collect(),
        };
        serde_json::to_string(&dto).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Loads a finite code from its JSON document and checks unique
    /// decodability.
    pub fn from_json(text: &str) -> Result<Arc<Self>> {
        let dto: CodeJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let letters: Vec<(String, u32)> = dto
            .alphabet
            .iter()
            .map(|display| {
                let weight = dto.weights.get(display).copied().unwrap_or(1);
                (display.clone(), weight)
            })
            .collect();
        let alphabet = Alphabet::new(letters)?;
        let words = dto
            .words
            .iter()
            .map(|w| alphabet.parse_word(w))
            .collect::<Result<Vec<_>>>()?;
        if !sardinas_patterson(&words)? {
            return Err(Error::NotACode {
                word: "(ambiguous word set)".into(),
            });
        }
        Self::new_finite(dto.name, alphabet, words)
    }
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    name: String,
    alphabet: Vec<String>,
    weights: BTreeMap<String, u32>,
    words: Vec<String>,
}

/// Sardinas–Patterson unique-decodability test for a finite word set.
/// Returns true iff every product of words factors uniquely. Terminates
/// because every produced set consists of suffixes of code words.
pub fn sardinas_patterson(words: &[Word]) -> Result<bool> {
    if words.is_empty() {
        return Err(Error::InvalidArgument("empty word set".into()));
    }
    if words.iter().any(Word::is_empty) {
        return Err(Error::InvalidArgument(
            "the empty word is never part of a code".into(),
        ));
    }
    let code: BTreeSet<Word> = words.iter().cloned().collect();
    // Residuals u^{-1}v between distinct code words.
    let mut current: BTreeSet<Word> = BTreeSet::new();
    for u in &code {
        for v in &code {
            if u != v {
                if let Some(rest) = v.strip_prefix(u) {
                    current.insert(rest);
                }
            }
        }
    }
    let mut seen: BTreeSet<BTreeSet<Word>> = BTreeSet::new();
    while !current.is_empty() && !seen.contains(&current) {
        if current.contains(&Word::empty()) {
            return Ok(false);
        }
        seen.insert(current.clone());
        let mut next = BTreeSet::new();
        for s in &current {
            for c in &code {
                if let Some(rest) = s.strip_prefix(c) {
                    next.insert(rest);
                }
                if let Some(rest) = c.strip_prefix(s) {
                    next.insert(rest);
                }
            }
        }
        current = next;
    }
    Ok(!current.contains(&Word::empty()))
}
