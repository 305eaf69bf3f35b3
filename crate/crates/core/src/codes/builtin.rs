//! The built-in codes exposed by name on the command line.

use std::sync::Arc;

use super::GradedCode;
use crate::combi::dyck::{dyck_primes, dyck_primes_paired, pair_alphabet};
use crate::freealg::{Alphabet, Word};
use crate::ncsf::lambda_letter_alphabet;
use crate::{Error, Result};

/// The Fibonacci prefix code `{b, ab}`.
pub fn fibonacci() -> Arc<GradedCode> {
    let ab = Alphabet::binary();
    let words = vec![
        ab.parse_word("b").expect("b"),
        ab.parse_word("ab").expect("ab"),
    ];
    GradedCode::new_finite("fib", ab, words).expect("fibonacci code")
}

/// The infinite prefix code `ba*`, graded by length: `C_n = {b a^{n-1}}`.
pub fn ba_star() -> Arc<GradedCode> {
    let ab = Alphabet::binary();
    GradedCode::new_lazy("ba-star", ab, |n| {
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut ids = vec![1u32];
        ids.extend(std::iter::repeat_n(0, n as usize - 1));
        Ok(vec![Word::from_ids(ids)])
    })
}

/// Prime Dyck words over `{a, b}`, graded by word length.
pub fn dyck_length() -> Arc<GradedCode> {
    GradedCode::new_lazy("dyck-len", Alphabet::binary(), |n| Ok(dyck_primes(n)))
}

/// Prime Dyck words re-encoded over the pair alphabet `{aa, ab, ba, bb}`,
/// graded by the half length `ρ`.
pub fn dyck_rho() -> Arc<GradedCode> {
    GradedCode::new_lazy("dyck-rho", pair_alphabet(), |n| Ok(dyck_primes_paired(n)))
}

/// The weighted alphabet `{1, 2, …, max}` with `ω = id`, viewed as a code;
/// a truncation of the infinite alphabet of all positive integers.
pub fn integers(max: u32) -> Result<Arc<GradedCode>> {
    if max == 0 {
        return Err(Error::InvalidArgument("need at least one letter".into()));
    }
    let alphabet = Alphabet::new((1..=max).map(|k| (k.to_string(), k)))?;
    Ok(GradedCode::new_lazy("integers", alphabet, move |n| {
        if n >= 1 && n <= max {
            Ok(vec![Word::from_ids(vec![n - 1])])
        } else {
            Ok(Vec::new())
        }
    }))
}

/// The free generators `Λ̃_1 … Λ̃_max` (displayed `L1 … Lmax`) with
/// `ω(Λ̃_k) = k`, viewed as a code.
pub fn lambda_letters(max: u32) -> Result<Arc<GradedCode>> {
    if max == 0 {
        return Err(Error::InvalidArgument("need at least one letter".into()));
    }
    let alphabet = lambda_letter_alphabet(max);
    Ok(GradedCode::new_lazy(
        "lambda-letters",
        alphabet,
        move |n| {
            if n >= 1 && n <= max {
                Ok(vec![Word::from_ids(vec![n - 1])])
            } else {
                Ok(Vec::new())
            }
        },
    ))
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "fib",
        "ba-star",
        "dyck-len",
        "dyck-rho",
        "integers",
        "lambda-letters",
    ]
}

/// Resolves a built-in code by name; degree-indexed families are capped at
/// `order`.
pub fn builtin_code(name: &str, order: u32) -> Result<Arc<GradedCode>> {
    match name {
        "fib" => Ok(fibonacci()),
        "ba-star" => Ok(ba_star()),
        "dyck-len" => Ok(dyck_length()),
        "dyck-rho" => Ok(dyck_rho()),
        "integers" => integers(order),
        "lambda-letters" => lambda_letters(order),
        other => Err(Error::InvalidArgument(format!(
            "unknown code `{other}` (built-ins: {})",
            builtin_names().join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ba_star_words() {
        let code = ba_star();
        let ab = code.alphabet().clone();
        let w = code.words_of_weight(4).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(ab.render_word(&w[0]), "baaa");
        // Degree-2 slice of the monoid: b·b and ba.
        let s2 = code.monoid_words(2).unwrap();
        let rendered: Vec<String> = s2.iter().map(|w| ab.render_word(w)).collect();
        assert_eq!(rendered, ["ba", "bb"]);
    }

    #[test]
    fn dyck_codes_by_both_gradings() {
        let len = dyck_length();
        assert_eq!(len.words_of_weight(4).unwrap().len(), 1);
        assert!(len.words_of_weight(5).unwrap().is_empty());
        let rho = dyck_rho();
        assert_eq!(rho.words_of_weight(2).unwrap().len(), 1);
        assert_eq!(rho.words_of_weight(3).unwrap().len(), 2);
        // Monoid slice at degree 2: aabb and abab, i.e. (aa)(bb) and (ab)(ab).
        let s2 = rho.monoid_words(2).unwrap();
        assert_eq!(s2.len(), 2);
    }

    #[test]
    fn integer_and_lambda_alphabets() {
        let ints = integers(5).unwrap();
        let w = ints.words_of_weight(3).unwrap();
        assert_eq!(ints.alphabet().render_word(&w[0]), "3");
        assert!(ints.words_of_weight(6).unwrap().is_empty());
        let lams = lambda_letters(4).unwrap();
        assert_eq!(
            lams.alphabet().render_word(&lams.words_of_weight(2).unwrap()[0]),
            "L2"
        );
        assert!(builtin_code("nosuch", 4).is_err());
    }
}
