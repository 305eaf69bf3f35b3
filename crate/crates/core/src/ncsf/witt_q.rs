//! The Witt basis of Sym and code-style specializations.
//!
//! `Q_1, Q_2, …` are defined by the ordered product
//! `(1-Q_1)^{-1}(1-Q_2)^{-1}⋯ = σ_1`, with the grading carrying the formal
//! `t`-powers. They are computed by the elimination recursion
//!
//! ```text
//! Z_1 = 1 - σ_1^{-1},   Q_n = weight-n part of Z_n,
//! Z_{n+1} = (Z_n - Q_n)·(1 - Q_n)^{-1}
//! ```
//!
//! carried out in the free algebra on letters `Λ̃_n = (-1)^{n+1} Λ_n` of
//! weight `n`, whose free monoid has characteristic series `σ_1`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::convert::is_multiplicity_free;
use super::{Basis, Composition, SymElement};
use crate::freealg::{Alphabet, NcSeries, Word};
use crate::rational::{rat, Rational};
use crate::{Error, Result};

/// The free weighted alphabet on letters `L1 … Ln` with `ω(Lk) = k`,
/// representing the generators `Λ̃_k`.
pub fn lambda_letter_alphabet(n_max: u32) -> Arc<Alphabet> {
    Alphabet::new((1..=n_max).map(|k| (format!("L{k}"), k))).expect("lambda alphabet")
}

/// Word-level form of the Witt functions on the `Λ̃` alphabet: the
/// characteristic series of the elimination components, `Q̲_1 … Q̲_N`.
pub fn witt_q_word_series(n_max: u32) -> Result<Vec<NcSeries>> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("need n ≥ 1".into()));
    }
    let alphabet = lambda_letter_alphabet(n_max);
    let letter_sum = {
        let mut s = NcSeries::zero(alphabet.clone(), n_max);
        for letter in alphabet.letters() {
            s.add_term(Word::from_ids(vec![letter.id]), Rational::one())?;
        }
        s
    };
    let one = NcSeries::one(alphabet.clone(), n_max);
    // σ_1 = (1 - A̲)^{-1}, so Z_1 = 1 - σ_1^{-1} is the letter sum; the
    // round trip keeps the stated contract while exercising the inverse.
    let sigma = one.sub(&letter_sum)?.inverse()?;
    let mut z = one.sub(&sigma.inverse()?)?;
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let q = z.graded_part(n)?;
        z = z.sub(&q)?.mul(&one.sub(&q)?.inverse()?)?;
        out.push(q);
    }
    Ok(out)
}

fn word_to_composition(word: &Word) -> Result<Composition> {
    Composition::new(word.ids().iter().map(|&id| id + 1).collect())
}

fn word_series_to_lambda(series: &NcSeries, truncation: u32) -> Result<SymElement> {
    let mut out = SymElement::zero(Basis::Lambda, truncation);
    for (weight, word, coeff) in series.terms() {
        let comp = word_to_composition(word)?;
        // Λ̃^I = (-1)^{|I| + ℓ(I)} Λ^I.
        let sign = if (weight as usize + word.len()).is_multiple_of(2) {
            rat(1)
        } else {
            rat(-1)
        };
        out.add_term(comp, coeff * sign)?;
    }
    Ok(out)
}

fn q_cache() -> &'static Mutex<Vec<SymElement>> {
    static CACHE: OnceLock<Mutex<Vec<SymElement>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// `Q_1 … Q_N` expressed on the Λ basis. Each `Q_n` is multiplicity-free:
/// every Λ-coefficient lies in `{-1, 0, 1}`.
pub fn witt_q_sequence(n_max: u32) -> Result<Vec<SymElement>> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("need n ≥ 1".into()));
    }
    {
        let cache = q_cache().lock().unwrap();
        if cache.len() >= n_max as usize {
            return Ok(cache[..n_max as usize].to_vec());
        }
    }
    let words = witt_q_word_series(n_max)?;
    let mut table = Vec::with_capacity(n_max as usize);
    for (i, series) in words.iter().enumerate() {
        let n = i as u32 + 1;
        let element = word_series_to_lambda(series, n)?;
        debug_assert!(is_multiplicity_free(&element));
        table.push(element);
    }
    let mut cache = q_cache().lock().unwrap();
    if cache.len() < table.len() {
        *cache = table.clone();
    }
    Ok(table)
}

/// The Λ-basis expansion of a single `Q_n` (cached).
pub(crate) fn q_on_lambda(n: u32) -> Result<SymElement> {
    Ok(witt_q_sequence(n)?.pop().expect("nonempty table"))
}

/// `Λ̃_n` on the Q basis: the signed sum over strictly decreasing
/// compositions, `Λ̃_n = Σ_k (-1)^{k+1} Σ_{i_1>…>i_k ⊨ n} Q_{i_1}⋯Q_{i_k}`.
pub fn lambda_on_q(n: u32) -> Result<SymElement> {
    if n < 1 {
        return Err(Error::InvalidArgument("need n ≥ 1".into()));
    }
    let mut out = SymElement::zero(Basis::Q, n);
    for comp in super::strictly_decreasing_compositions_of(n) {
        let sign = if comp.len() % 2 == 1 { rat(1) } else { rat(-1) };
        out.add_term(comp, sign)?;
    }
    Ok(out)
}

/// Expands `-Q_n` on the ribbon basis and checks that every coefficient is
/// 0 or 1, returning the set of ribbon compositions. Defined for `n ≥ 2`.
pub fn ribbon_positivity_check(n: u32) -> Result<Vec<Composition>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "ribbon positivity concerns n ≥ 2".into(),
        ));
    }
    let q = q_on_lambda(n)?;
    let ribbons = q.neg().convert(Basis::R)?;
    let mut out = Vec::new();
    for (comp, coeff) in ribbons.terms() {
        if !coeff.is_one() {
            return Err(Error::InvalidArgument(format!(
                "-Q_{n} has ribbon coefficient {coeff} on {:?}; positivity violated",
                comp.parts()
            )));
        }
        out.push(comp.clone());
    }
    Ok(out)
}

/// Which generator family a specialization assigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Complete,
    Elementary,
    PowerSum,
}

impl GeneratorKind {
    fn basis(self) -> Basis {
        match self {
            GeneratorKind::Complete => Basis::S,
            GeneratorKind::Elementary => Basis::Lambda,
            GeneratorKind::PowerSum => Basis::Phi,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GeneratorKind::Complete => "S",
            GeneratorKind::Elementary => "Λ",
            GeneratorKind::PowerSum => "Φ",
        }
    }
}

/// An algebra morphism out of Sym: assigns to each generator index `n` a
/// homogeneous noncommutative series of weight `n·scale`. The scale lets a
/// grading run in multiples (e.g. paths of length `np` per unit degree).
pub struct Specialization {
    kind: GeneratorKind,
    scale: u32,
    alphabet: Arc<Alphabet>,
    assign: BTreeMap<u32, NcSeries>,
}

impl Specialization {
    pub fn new(
        kind: GeneratorKind,
        alphabet: Arc<Alphabet>,
        assign: impl IntoIterator<Item = (u32, NcSeries)>,
        scale: u32,
    ) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidArgument("scale must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for (index, series) in assign {
            if index == 0 {
                return Err(Error::InvalidArgument("generator index 0".into()));
            }
            if !series.is_homogeneous_of(index * scale) {
                return Err(Error::WeightMismatch {
                    index,
                    expected: index * scale,
                });
            }
            map.insert(index, series);
        }
        Ok(Self {
            kind,
            scale,
            alphabet,
            assign: map,
        })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    fn series_for(&self, index: u32) -> Result<&NcSeries> {
        self.assign.get(&index).ok_or(Error::MissingGenerator {
            basis: self.kind.name(),
            index,
        })
    }
}

/// Applies a specialization: converts `x` to the assigned generator basis,
/// substitutes the series, and multiplies out in the free algebra.
pub fn specialize(x: &SymElement, sp: &Specialization) -> Result<NcSeries> {
    let converted = x.convert(sp.kind.basis())?;
    let truncation = x.truncation() * sp.scale;
    let mut out = NcSeries::zero(sp.alphabet.clone(), truncation);
    for (comp, coeff) in converted.terms() {
        let mut product = NcSeries::one(sp.alphabet.clone(), truncation);
        for &part in comp.parts() {
            let factor = sp.series_for(part)?.with_truncation(truncation);
            product = product.mul(&factor)?;
            if product.is_zero() {
                break;
            }
        }
        out = out.add(&product.scale(coeff))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn first_witt_functions_on_lambda() {
        let table = witt_q_sequence(4).unwrap();
        assert_eq!(table[0].to_text(), "Λ1");
        assert_eq!(table[1].to_text(), "-Λ2");
        assert_eq!(table[2].to_text(), "-Λ2·Λ1 + Λ3");
        assert_eq!(table[3].to_text(), "-Λ2·Λ1·Λ1 + Λ3·Λ1 - Λ4");
        assert!(witt_q_sequence(0).is_err());
    }

    #[test]
    fn q_is_multiplicity_free() {
        for q in witt_q_sequence(8).unwrap() {
            assert!(is_multiplicity_free(&q));
        }
    }

    #[test]
    fn ordered_product_of_inverses_rebuilds_sigma() {
        let n = 6;
        let alphabet = lambda_letter_alphabet(n);
        let one = NcSeries::one(alphabet.clone(), n);
        let mut product = one.clone();
        for q in witt_q_word_series(n).unwrap() {
            product = product.mul(&one.sub(&q).unwrap().inverse().unwrap()).unwrap();
        }
        let mut letters = NcSeries::zero(alphabet.clone(), n);
        for letter in alphabet.letters() {
            letters
                .add_term(Word::from_ids(vec![letter.id]), Rational::one())
                .unwrap();
        }
        let sigma = one.sub(&letters).unwrap().inverse().unwrap();
        assert_eq!(product, sigma);
    }

    #[test]
    fn lambda_on_q_small_cases() {
        assert_eq!(lambda_on_q(1).unwrap().to_text(), "Q1");
        assert_eq!(lambda_on_q(2).unwrap().to_text(), "Q2");
        let l3 = lambda_on_q(3).unwrap();
        assert_eq!(l3.coefficient(&comp(&[3])), rat(1));
        assert_eq!(l3.coefficient(&comp(&[2, 1])), rat(-1));
        assert_eq!(l3.terms().count(), 2);
    }

    #[test]
    fn lambda_on_q_substitution_recovers_lambda() {
        let n_max = 6;
        for n in 1..=n_max {
            // Substitute the computed Q's back into the Λ̃ expansion.
            let expansion = lambda_on_q(n).unwrap();
            let mut total = SymElement::zero(Basis::Lambda, n);
            for (composition, coeff) in expansion.terms() {
                let mut product = q_on_lambda(composition.parts()[0])
                    .unwrap()
                    .with_truncation(n);
                for &part in &composition.parts()[1..] {
                    product = product
                        .mul(&q_on_lambda(part).unwrap().with_truncation(n))
                        .unwrap();
                }
                total = total.add(&product.scale(coeff)).unwrap();
            }
            // Λ̃_n = (-1)^{n+1} Λ_n.
            let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
            let expected = SymElement::generator(Basis::Lambda, n, n)
                .unwrap()
                .scale(&sign);
            assert_eq!(total, expected, "Λ̃_{n} substitution");
        }
    }

    #[test]
    fn ribbon_positivity_small() {
        assert_eq!(ribbon_positivity_check(2).unwrap(), vec![comp(&[1, 1])]);
        assert_eq!(ribbon_positivity_check(3).unwrap(), vec![comp(&[1, 2])]);
        assert!(ribbon_positivity_check(1).is_err());
    }

    #[test]
    fn specialization_validates_homogeneity() {
        let ab = Alphabet::binary();
        let mut series = NcSeries::zero(ab.clone(), 4);
        series
            .add_term(ab.parse_word("ab").unwrap(), rat(1))
            .unwrap();
        // Weight 2 series assigned to generator 1 must be rejected.
        assert!(matches!(
            Specialization::new(GeneratorKind::Elementary, ab.clone(), [(1, series.clone())], 1),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(Specialization::new(
            GeneratorKind::Elementary,
            ab,
            [(2, series)],
            1
        )
        .is_ok());
    }
}
