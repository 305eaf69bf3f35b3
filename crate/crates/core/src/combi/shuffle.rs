//! The shuffle analogue of star-multinomials.
//!
//! Given words `w_1 … w_k`, assign `Φ_n = w_1^n ⧢ w_2^n ⧢ ⋯ ⧢ w_k^n`
//! (concatenation powers, then iterated shuffle). With the total weight
//! `m = ω(w_1) + … + ω(w_k)` as the scale, `Φ_n` is homogeneous of weight
//! `nm`; exponentiating `Σ Φ_n/n` rebuilds `σ`, and the elimination
//! recursion extracts the Witt sequence `Q_1, Q_2, …` under this
//! specialization. For one-letter words `w_i = a^{p_i}`, sending `a ↦ 1`
//! recovers the coordinates of the star-multinomial `*(Σp; p_1,…,p_k)`.

use std::sync::Arc;

use crate::freealg::{shuffle_series, Alphabet, NcSeries, Word};
use crate::rational::rat;
use crate::{Error, Result};

/// Computes `Q_1 … Q_N` of the shuffle specialization; `Q_n` is returned
/// as a homogeneous series of weight `n·m`.
pub fn shuffle_witt(
    alphabet: &Arc<Alphabet>,
    words: &[Word],
    n_max: u32,
) -> Result<Vec<NcSeries>> {
    if words.is_empty() {
        return Err(Error::InvalidArgument("need at least one word".into()));
    }
    if words.iter().any(Word::is_empty) {
        return Err(Error::InvalidArgument(
            "the empty word is not allowed here".into(),
        ));
    }
    if n_max < 1 {
        return Err(Error::InvalidArgument("need N ≥ 1".into()));
    }
    let scale: u32 = words.iter().map(|w| alphabet.word_weight(w)).sum();
    let truncation = n_max * scale;

    // Σ_n Φ_n/n with Φ_n = w_1^n ⧢ … ⧢ w_k^n.
    let mut log_sigma = NcSeries::zero(alphabet.clone(), truncation);
    for n in 1..=n_max {
        let phi = shuffle_phi(alphabet, words, n, truncation)?;
        log_sigma = log_sigma.add(&phi.scale(&(rat(1) / rat(n as i64))))?;
    }
    let sigma = log_sigma.exp()?;
    let one = NcSeries::one(alphabet.clone(), truncation);
    let mut z = one.sub(&sigma.inverse()?)?;
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let q = z.graded_part(n * scale)?;
        z = z.sub(&q)?.mul(&one.sub(&q)?.inverse()?)?;
        out.push(q);
    }
    Ok(out)
}

/// `Φ_n` of the shuffle specialization: the iterated shuffle of the n-th
/// concatenation powers.
pub fn shuffle_phi(
    alphabet: &Arc<Alphabet>,
    words: &[Word],
    n: u32,
    truncation: u32,
) -> Result<NcSeries> {
    let mut acc: Option<NcSeries> = None;
    for word in words {
        let mut power = Word::empty();
        for _ in 0..n {
            power = power.concat(word);
        }
        let factor = NcSeries::monomial(
            alphabet.clone(),
            power,
            rat(1),
            truncation,
        )?;
        acc = Some(match acc {
            None => factor,
            Some(prev) => shuffle_series(&prev, &factor)?,
        });
    }
    Ok(acc.expect("nonempty word list"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::witt::{ghost, star_multinomial};
    use num_traits::Zero;

    fn single_letter_images(parts: &[u32], n_max: u32) -> Vec<Rational> {
        let alphabet = Alphabet::new([("a", 1)]).unwrap();
        let words: Vec<Word> = parts
            .iter()
            .map(|&p| Word::from_ids(vec![0; p as usize]))
            .collect();
        let qs = shuffle_witt(&alphabet, &words, n_max).unwrap();
        qs.iter()
            .map(|q| {
                q.terms()
                    .map(|(_, _, c)| c.clone())
                    .fold(Rational::zero(), |acc, c| acc + c)
            })
            .collect()
    }

    #[test]
    fn single_word_collapses_to_one_block() {
        // σ = 1/(1-a): Q_1 = a and all higher Q vanish.
        let alphabet = Alphabet::new([("a", 1)]).unwrap();
        let a = Word::from_ids(vec![0]);
        let qs = shuffle_witt(&alphabet, &[a], 4).unwrap();
        assert_eq!(qs[0].to_text(), "1*a");
        for q in &qs[1..] {
            assert!(q.is_zero());
        }
    }

    #[test]
    fn letter_images_match_star_multinomials() {
        for parts in [vec![1, 1], vec![2, 1]] {
            let images = single_letter_images(&parts, 4);
            let star = star_multinomial(&parts, 4).unwrap();
            assert_eq!(images, star.coords(), "parts {:?}", parts);
        }
    }

    #[test]
    fn ghost_view_of_two_letters() {
        // Double-check against the ghost components binom(2n, n).
        let star = star_multinomial(&[1, 1], 3).unwrap();
        assert_eq!(
            ghost(&star).values(),
            &[rat(2), rat(6), rat(20)]
        );
    }

    #[test]
    fn mixed_words_first_power_sum() {
        // Φ_1 = ab ⧢ a, brute force: 3 interleavings.
        let ab = Alphabet::binary();
        let w1 = ab.parse_word("ab").unwrap();
        let w2 = ab.parse_word("a").unwrap();
        let phi = shuffle_phi(&ab, &[w1, w2], 1, 3).unwrap();
        assert_eq!(phi.to_text(), "2*aab + 1*aba");
    }

    #[test]
    fn rejects_empty_input() {
        let ab = Alphabet::binary();
        assert!(shuffle_witt(&ab, &[], 3).is_err());
        assert!(shuffle_witt(&ab, &[Word::empty()], 3).is_err());
    }
}
