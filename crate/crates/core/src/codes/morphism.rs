//! Weight-preserving monoid morphisms defined block-wise on a code.
//!
//! A [`WordMorphism`] sends each word of a source code to a word over a
//! target alphabet of the same weight; it extends to the submonoid `C*`
//! by unique factorization, and to series term by term.

use std::sync::Arc;

use super::GradedCode;
use crate::freealg::{Alphabet, NcSeries, Word};
use crate::{Error, Result};

type ImageFn = Box<dyn Fn(&Word) -> Option<Word> + Send + Sync>;

pub struct WordMorphism {
    source: Arc<GradedCode>,
    target: Arc<Alphabet>,
    image: ImageFn,
}

impl WordMorphism {
    /// A morphism given by an image function on the source code words.
    /// `image` may return `None` for words it does not cover, which makes
    /// the application fail with a missing-image parse error.
    pub fn new(
        source: Arc<GradedCode>,
        target: Arc<Alphabet>,
        image: impl Fn(&Word) -> Option<Word> + Send + Sync + 'static,
    ) -> Self {
        Self {
            source,
            target,
            image: Box::new(image),
        }
    }

    /// The identity morphism on an alphabet (each letter maps to itself).
    pub fn identity(alphabet: Arc<Alphabet>) -> Result<Self> {
        let code = GradedCode::letters_code("letters", alphabet.clone())?;
        Ok(Self::new(code, alphabet, |w| Some(w.clone())))
    }

    pub fn source(&self) -> &Arc<GradedCode> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Alphabet> {
        &self.target
    }

    fn image_of_block(&self, block: &Word) -> Result<Word> {
        let expected = self.source.alphabet().word_weight(block);
        let image = (self.image)(block).ok_or_else(|| {
            Error::Parse(format!(
                "no image for code word `{}`",
                self.source.alphabet().render_word(block)
            ))
        })?;
        let got = self.target.word_weight(&image);
        if got != expected {
            return Err(Error::WeightMismatch {
                index: expected,
                expected,
            });
        }
        Ok(image)
    }

    /// Factors `word` over the source code and maps block by block.
    pub fn apply_word(&self, word: &Word) -> Result<Word> {
        let blocks = factor_over_code(&self.source, word)?;
        let mut out = Word::empty();
        for block in &blocks {
            out = out.concat(&self.image_of_block(block)?);
        }
        Ok(out)
    }

    /// Applies the morphism to every term of a series.
    pub fn apply(&self, series: &NcSeries) -> Result<NcSeries> {
        let mut out = NcSeries::zero(self.target.clone(), series.truncation());
        for (_, word, coeff) in series.terms() {
            out.add_term(self.apply_word(word)?, coeff.clone())?;
        }
        Ok(out)
    }
}

/// The factorization of `word` into source code words (unique since the
/// generating set is a code); depth-first with backtracking.
pub fn factor_over_code(code: &Arc<GradedCode>, word: &Word) -> Result<Vec<Word>> {
    fn rec(code: &Arc<GradedCode>, rest: &Word, blocks: &mut Vec<Word>) -> Result<bool> {
        if rest.is_empty() {
            return Ok(true);
        }
        let rest_weight = code.alphabet().word_weight(rest);
        for degree in 1..=rest_weight {
            for candidate in code.words_of_weight(degree)?.iter() {
                if let Some(tail) = rest.strip_prefix(candidate) {
                    blocks.push(candidate.clone());
                    if rec(code, &tail, blocks)? {
                        return Ok(true);
                    }
                    blocks.pop();
                }
            }
        }
        Ok(false)
    }
    let mut blocks = Vec::new();
    if rec(code, word, &mut blocks)? {
        Ok(blocks)
    } else {
        Err(Error::NotInMonoid {
            word: code.alphabet().render_word(word),
            code: code.name().to_string(),
        })
    }
}
