//! Degree-truncated noncommutative series with exact rational coefficients.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{same_alphabet, Alphabet, Word};
use crate::pseries::PowerSeries;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::{Error, Result};

/// A noncommutative polynomial/series truncated at weight `N`: a finite map
/// from words of weight ≤ `N` to nonzero rationals. Terms iterate in
/// (weight, lexicographic-by-letter-id) order, which makes every rendering
/// and serialization byte-stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcSeries {
    alphabet: Arc<Alphabet>,
    truncation: u32,
    terms: BTreeMap<(u32, Word), Rational>,
}

impl NcSeries {
    pub fn zero(alphabet: Arc<Alphabet>, truncation: u32) -> Self {
        Self {
            alphabet,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Arc<Alphabet>, truncation: u32) -> Self {
        let mut s = Self::zero(alphabet, truncation);
        s.terms.insert((0, Word::empty()), Rational::one());
        s
    }

    pub fn monomial(
        alphabet: Arc<Alphabet>,
        word: Word,
        coeff: Rational,
        truncation: u32,
    ) -> Result<Self> {
        let mut s = Self::zero(alphabet, truncation);
        s.add_term(word, coeff)?;
        Ok(s)
    }

    /// Sum of a family of words, each with coefficient 1 (a characteristic
    /// series). Duplicated words accumulate.
    pub fn characteristic(
        alphabet: Arc<Alphabet>,
        words: impl IntoIterator<Item = Word>,
        truncation: u32,
    ) -> Result<Self> {
        let mut s = Self::zero(alphabet, truncation);
        for w in words {
            s.add_term(w, Rational::one())?;
        }
        Ok(s)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order as `(weight, word, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Word, &Rational)> {
        self.terms.iter().map(|((w, word), c)| (*w, word, c))
    }

    /// Adds `coeff * word` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: Rational) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let weight = self.alphabet.word_weight(&word);
        if weight > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: weight,
                truncation: self.truncation,
            });
        }
        match self.terms.entry((weight, word)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    fn check_same_alphabet(&self, other: &Self) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_alphabet(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.alphabet.clone(), truncation);
        for ((w, word), c) in self.terms.iter().chain(other.terms.iter()) {
            if *w > truncation {
                continue;
            }
            let entry = out
                .terms
                .entry((*w, word.clone()))
                .or_insert_with(Rational::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet.clone(), self.truncation);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Concatenation product, truncated at `min(N_f, N_g)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_alphabet(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.alphabet.clone(), truncation);
        for ((wu, u), cu) in &self.terms {
            if *wu > truncation {
                continue;
            }
            for ((wv, v), cv) in &other.terms {
                let w = wu + wv;
                if w > truncation {
                    continue;
                }
                let entry = out
                    .terms
                    .entry((w, u.concat(v)))
                    .or_insert_with(Rational::zero);
                *entry += cu * cv;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&(0, Word::empty()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Two-sided inverse of a series with constant term 1, computed as the
    /// finite Neumann sum `Σ_k (1-f)^k` (the positive valuation of `1-f`
    /// makes it terminate at the truncation).
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: format_rational(&c0),
            });
        }
        let one = Self::one(self.alphabet.clone(), self.truncation);
        let h = one.sub(self)?; // valuation ≥ 1
        let mut acc = one.clone();
        let mut pow = one;
        for _ in 1..=self.truncation {
            pow = pow.mul(&h)?;
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow)?;
        }
        Ok(acc)
    }

    /// Graded truncated logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: format_rational(&c0),
            });
        }
        let one = Self::one(self.alphabet.clone(), self.truncation);
        let h = self.sub(&one)?;
        let mut acc = Self::zero(self.alphabet.clone(), self.truncation);
        let mut pow = one;
        for k in 1..=self.truncation {
            pow = pow.mul(&h)?;
            if pow.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
            acc = acc.add(&pow.scale(&(sign / rat(k as i64))))?;
        }
        Ok(acc)
    }

    /// Graded truncated exponential; requires constant term 0.
    pub fn exp(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: format_rational(&c0),
            });
        }
        let one = Self::one(self.alphabet.clone(), self.truncation);
        let mut acc = one.clone();
        let mut pow = one;
        for k in 1..=self.truncation {
            pow = pow.mul(self)?.scale(&(rat(1) / rat(k as i64)));
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow)?;
        }
        Ok(acc)
    }

    pub fn coefficient(&self, word: &Word) -> Result<Rational> {
        let weight = self.alphabet.word_weight(word);
        if weight > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: weight,
                truncation: self.truncation,
            });
        }
        Ok(self
            .terms
            .get(&(weight, word.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// The weight-`n` homogeneous component, kept at the same truncation.
    pub fn graded_part(&self, n: u32) -> Result<Self> {
        if n > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: n,
                truncation: self.truncation,
            });
        }
        let mut out = Self::zero(self.alphabet.clone(), self.truncation);
        for ((w, word), c) in self.terms.range((n, Word::empty())..(n + 1, Word::empty())) {
            out.terms.insert((*w, word.clone()), c.clone());
        }
        Ok(out)
    }

    /// True when every term has weight exactly `n` (the zero series is
    /// homogeneous of every weight).
    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.keys().all(|(w, _)| *w == n)
    }

    /// Restricts to weight ≤ `n` and lowers the truncation.
    pub fn truncate(&self, n: u32) -> Self {
        let mut out = Self::zero(self.alphabet.clone(), n.min(self.truncation));
        for ((w, word), c) in &self.terms {
            if *w <= out.truncation {
                out.terms.insert((*w, word.clone()), c.clone());
            }
        }
        out
    }

    /// Re-declares the truncation. Raising it is always sound for
    /// polynomials (all absent weights are zero); use with care.
    pub fn with_truncation(&self, n: u32) -> Self {
        let mut out = self.truncate(n);
        out.truncation = n;
        out
    }

    /// Shuffle product extended bilinearly to series.
    pub fn shuffle(&self, other: &Self) -> Result<Self> {
        shuffle_series(self, other)
    }

    /// The commutative image under "every word ↦ 1": the coefficient of
    /// `t^n` is the sum of the coefficients of all weight-`n` words.
    pub fn pi(&self) -> PowerSeries {
        let mut out = PowerSeries::zero(self.truncation);
        for ((w, _), c) in &self.terms {
            let updated = out.coeff(*w).expect("weight within truncation") + c;
            out.set_coeff(*w, updated);
        }
        out
    }

    /// Canonical text rendering: `3/2*ab + 1*bb`, `- ` for negative terms,
    /// `0` for the zero series.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((_, word), c)) in self.terms.iter().enumerate() {
            let (sign_negative, magnitude) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if sign_negative {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
            }
            out.push_str(&format_rational(&magnitude));
            out.push('*');
            out.push_str(&self.alphabet.render_word(word));
        }
        out
    }

    /// Compressed rendering used by the command-line `series` output:
    /// unit coefficients are dropped and letter runs become exponents.
    pub fn to_display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((_, word), c)) in self.terms.iter().enumerate() {
            let (sign_negative, magnitude) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if sign_negative {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
            }
            if !magnitude.is_one() || word.is_empty() {
                out.push_str(&format_rational(&magnitude));
                if !word.is_empty() {
                    out.push('*');
                }
            }
            if !word.is_empty() {
                out.push_str(&self.alphabet.render_word_runs(word));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let dto = SeriesJson {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|((_, word), c)| TermJson {
                    word: word
                        .ids()
                        .iter()
                        .map(|&id| self.alphabet.display(id).to_string())
                        .collect(),
                    coeff: format_rational(c),
                })
                .collect(),
        };
        serde_json::to_string(&dto).expect("series serialization")
    }

    pub fn from_json(alphabet: Arc<Alphabet>, text: &str) -> Result<Self> {
        let dto: SeriesJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(alphabet.clone(), dto.truncation);
        for term in dto.terms {
            let word = alphabet.word_from_displays(&term.word)?;
            out.add_term(word, parse_rational(&term.coeff)?)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    truncation: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<String>,
    coeff: String,
}

/// Shuffle of two words: the sum over all interleavings with multiplicity.
/// The result is truncated at the combined weight, where it lives entirely.
pub fn shuffle_words(alphabet: &Arc<Alphabet>, u: &Word, v: &Word) -> NcSeries {
    let total = alphabet.word_weight(u) + alphabet.word_weight(v);
    let mut out = NcSeries::zero(alphabet.clone(), total);
    let mut buf = Vec::with_capacity(u.len() + v.len());
    shuffle_rec(u.ids(), v.ids(), &mut buf, &mut out);
    out
}

fn shuffle_rec(u: &[u32], v: &[u32], buf: &mut Vec<u32>, out: &mut NcSeries) {
    if u.is_empty() && v.is_empty() {
        let word = Word::from_ids(buf.clone());
        out.add_term(word, Rational::one()).expect("within bound");
        return;
    }
    if let Some((&first, rest)) = u.split_first() {
        buf.push(first);
        shuffle_rec(rest, v, buf, out);
        buf.pop();
    }
    if let Some((&first, rest)) = v.split_first() {
        buf.push(first);
        shuffle_rec(u, rest, buf, out);
        buf.pop();
    }
}

/// Bilinear extension of the shuffle to series.
pub fn shuffle_series(f: &NcSeries, g: &NcSeries) -> Result<NcSeries> {
    if !same_alphabet(f.alphabet(), g.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let truncation = f.truncation().min(g.truncation());
    let mut out = NcSeries::zero(f.alphabet().clone(), truncation);
    for (wu, u, cu) in f.terms() {
        if wu > truncation {
            continue;
        }
        for (wv, v, cv) in g.terms() {
            if wu + wv > truncation {
                continue;
            }
            let sh = shuffle_words(f.alphabet(), u, v);
            let coeff = cu * cv;
            for (_, word, c) in sh.terms() {
                out.add_term(word.clone(), c * &coeff)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn binary_series(terms: &[(&str, i64)], n: u32) -> NcSeries {
        let ab = Alphabet::binary();
        let mut s = NcSeries::zero(ab.clone(), n);
        for (text, c) in terms {
            let w = ab.parse_word(text).unwrap();
            s.add_term(w, rat(*c)).unwrap();
        }
        s
    }

    #[test]
    fn addition_identities() {
        let f = binary_series(&[("ab", 1), ("bb", 2)], 4);
        let zero = NcSeries::zero(f.alphabet().clone(), 4);
        assert_eq!(f.add(&zero).unwrap(), f);
        let doubled = f.add(&f).unwrap();
        assert_eq!(
            doubled.coefficient(&f.alphabet().parse_word("ab").unwrap()).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn multiplication_is_noncommutative() {
        let ab = Alphabet::binary();
        let b = binary_series(&[("b", 1)], 4);
        let abw = binary_series(&[("ab", 1)], 4);
        let left = b.mul(&abw).unwrap();
        let right = abw.mul(&b).unwrap();
        assert_eq!(left.to_text(), "1*bab");
        assert_eq!(right.to_text(), "1*abb");
        assert_ne!(left, right);
        let one = NcSeries::one(ab, 4);
        assert_eq!(one.mul(&abw).unwrap(), abw);
    }

    #[test]
    fn square_of_letter_sum() {
        let f = binary_series(&[("a", 1), ("b", 1)], 2);
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.to_text(), "1*aa + 1*ab + 1*ba + 1*bb");
    }

    #[test]
    fn inverse_enumerates_free_monoid() {
        // 1/(1 - (a+b)) sums all words; weight 2 part is every 2-letter word.
        let ab = Alphabet::binary();
        let one = NcSeries::one(ab.clone(), 3);
        let f = one.sub(&binary_series(&[("a", 1), ("b", 1)], 3)).unwrap();
        let inv = f.inverse().unwrap();
        let part = inv.graded_part(2).unwrap();
        assert_eq!(part.to_text(), "1*aa + 1*ab + 1*ba + 1*bb");
        assert_eq!(NcSeries::one(ab, 3).inverse().unwrap().to_text(), "1*1");
    }

    #[test]
    fn inverse_enumerates_code_monoid() {
        // 1/(1 - b - ab) sums the monoid over {b, ab}; weight 3 part is
        // bbb + bab + abb, the three factorizations over the code.
        let one = NcSeries::one(Alphabet::binary(), 3);
        let f = one.sub(&binary_series(&[("b", 1), ("ab", 1)], 3)).unwrap();
        let part = f.inverse().unwrap().graded_part(3).unwrap();
        assert_eq!(part.to_text(), "1*abb + 1*bab + 1*bbb");
    }

    #[test]
    fn inverse_round_trip() {
        let ab = Alphabet::binary();
        let mut f = NcSeries::one(ab.clone(), 4);
        f.add_term(ab.parse_word("a").unwrap(), ratio(2, 3)).unwrap();
        f.add_term(ab.parse_word("ba").unwrap(), rat(-5)).unwrap();
        let inv = f.inverse().unwrap();
        assert_eq!(f.mul(&inv).unwrap(), NcSeries::one(ab.clone(), 4));
        assert_eq!(inv.mul(&f).unwrap(), NcSeries::one(ab, 4));
    }

    #[test]
    fn exp_log_round_trip() {
        let ab = Alphabet::binary();
        let mut f = NcSeries::one(ab.clone(), 2);
        f.add_term(ab.parse_word("a").unwrap(), rat(1)).unwrap();
        f.add_term(ab.parse_word("ab").unwrap(), rat(1)).unwrap();
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
        let zero = NcSeries::zero(ab.clone(), 5);
        assert_eq!(zero.exp().unwrap(), NcSeries::one(ab.clone(), 5));
        assert!(NcSeries::one(ab, 5).log().unwrap().is_zero());
    }

    #[test]
    fn shuffle_examples() {
        let ab = Alphabet::binary();
        let a = ab.parse_word("a").unwrap();
        let b = ab.parse_word("b").unwrap();
        let sh = shuffle_words(&ab, &a, &b);
        assert_eq!(sh.to_text(), "1*ab + 1*ba");

        let abw = ab.parse_word("ab").unwrap();
        let sh = shuffle_words(&ab, &abw, &abw);
        assert_eq!(sh.to_text(), "4*aabb + 2*abab");

        let empty = Word::empty();
        let w = ab.parse_word("bab").unwrap();
        let sh = shuffle_words(&ab, &empty, &w);
        assert_eq!(sh.to_text(), "1*bab");
    }

    #[test]
    fn pi_collapses_by_weight() {
        let f = binary_series(&[("aa", 2), ("ab", 1), ("b", 3)], 3);
        let p = f.pi();
        assert_eq!(p.coeff(1).unwrap(), &rat(3));
        assert_eq!(p.coeff(2).unwrap(), &rat(3));
        assert_eq!(p.coeff(3).unwrap(), &rat(0));
        assert!(NcSeries::zero(Alphabet::binary(), 2).pi().is_zero());
    }

    #[test]
    fn coefficient_and_graded_part_bounds() {
        let f = binary_series(&[("ab", -1)], 2);
        let ab = f.alphabet().clone();
        assert_eq!(f.coefficient(&ab.parse_word("ab").unwrap()).unwrap(), rat(-1));
        assert!(f.coefficient(&ab.parse_word("aab").unwrap()).is_err());
        assert!(f.graded_part(3).is_err());
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let f = binary_series(&[("ab", 1)], 3);
        let other = Alphabet::new([("x", 1), ("y", 2)]).unwrap();
        let g = NcSeries::one(other, 3);
        assert!(matches!(f.add(&g), Err(Error::AlphabetMismatch)));
        assert!(matches!(f.mul(&g), Err(Error::AlphabetMismatch)));
        assert!(matches!(shuffle_series(&f, &g), Err(Error::AlphabetMismatch)));
    }

    #[test]
    fn mixed_truncations_take_the_minimum() {
        let f = binary_series(&[("a", 1), ("abab", 1)], 6);
        let g = binary_series(&[("b", 1)], 3);
        let sum = f.add(&g).unwrap();
        assert_eq!(sum.truncation(), 3);
        // The weight-4 term of f falls outside the shared truncation.
        assert_eq!(sum.len(), 2);
        let product = f.mul(&g).unwrap();
        assert_eq!(product.truncation(), 3);
        assert_eq!(product.to_text(), "1*ab");
    }

    #[test]
    fn constant_term_preconditions() {
        let f = binary_series(&[("a", 1)], 3); // constant term 0
        assert!(matches!(f.inverse(), Err(Error::ConstantTerm { .. })));
        assert!(matches!(f.log(), Err(Error::ConstantTerm { .. })));
        let g = NcSeries::one(Alphabet::binary(), 3);
        assert!(matches!(g.exp(), Err(Error::ConstantTerm { .. })));
    }

    #[test]
    fn json_round_trip() {
        let f = binary_series(&[("ab", 3), ("bb", -1)], 4);
        let json = f.to_json();
        let g = NcSeries::from_json(f.alphabet().clone(), &json).unwrap();
        assert_eq!(f, g);
        assert!(json.contains("\"truncation\":4"));
    }

    #[test]
    fn display_rendering() {
        let ab = Alphabet::binary();
        let mut f = NcSeries::zero(ab.clone(), 7);
        f.add_term(ab.parse_word("abbab").unwrap(), rat(1)).unwrap();
        f.add_term(ab.parse_word("abbbb").unwrap(), rat(1)).unwrap();
        assert_eq!(f.to_display(), "ab2ab + ab4");
        let mut g = NcSeries::zero(ab.clone(), 3);
        g.add_term(ab.parse_word("ab").unwrap(), ratio(3, 2)).unwrap();
        g.add_term(ab.parse_word("bb").unwrap(), rat(-1)).unwrap();
        assert_eq!(g.to_text(), "3/2*ab - 1*bb");
        assert_eq!(g.to_display(), "3/2*ab - b2");
    }
}
