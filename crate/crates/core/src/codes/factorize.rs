//! Lazard bisection, right length factorizations, and word decomposition.
//!
//! The bisection `A* = B*((A∖B)B*)*` splits a free monoid along a
//! sub-code `B`. Iterating it on the right factor with `B = C_i`, the
//! degree-`i` slice of the running code, produces the right length
//! factorization: every word of `C*` then factors uniquely into blocks
//! with nondecreasing component degrees, matching the ordered product
//! `σ = (1-Q̲_1)^{-1}(1-Q̲_2)^{-1}⋯`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::GradedCode;
use crate::freealg::{NcSeries, Word};
use crate::ncsf::{specialize, witt_q_sequence, GeneratorKind, Specialization};
use crate::rational::rat;
use crate::{Error, Result};

/// Splits `Z* = B*((Z∖B)B*)*`; returns `(B, (Z∖B)B*)` with the second
/// component enumerated lazily degree by degree.
pub fn lazard_bisection(
    z: &Arc<GradedCode>,
    b: &Arc<GradedCode>,
) -> Result<(Arc<GradedCode>, Arc<GradedCode>)> {
    let z_outer = z.clone();
    let b_outer = b.clone();
    let name = format!("({}∖{}){}*", z.name(), b.name(), b.name());
    let residual = GradedCode::new_lazy(name, z.alphabet().clone(), move |degree| {
        let mut out = Vec::new();
        for head_degree in 1..=degree {
            let z_words = z_outer.words_of_weight(head_degree)?;
            let b_words = b_outer.words_of_weight(head_degree)?;
            for b_word in b_words.iter() {
                if z_words.binary_search(b_word).is_err() {
                    return Err(Error::NotSubcode {
                        degree: head_degree,
                    });
                }
            }
            let heads: Vec<&Word> = z_words
                .iter()
                .filter(|w| b_words.binary_search(w).is_err())
                .collect();
            if heads.is_empty() {
                continue;
            }
            let tails = b_outer.monoid_words(degree - head_degree)?;
            for head in heads {
                for tail in tails.iter() {
                    out.push(head.concat(tail));
                }
            }
        }
        out.sort();
        if let Some(pair) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotACode {
                word: z_outer.alphabet().render_word(&pair[0]),
            });
        }
        Ok(out)
    });
    Ok((b.clone(), residual))
}

/// One homogeneous component of a factorization: all words have weight
/// exactly `degree`.
#[derive(Debug, Clone)]
pub struct FactorComponent {
    pub degree: u32,
    pub words: Vec<Word>,
}

/// A Lazard right composition of `C*` by weight, truncated at degree `N`.
pub struct Factorization {
    source: Arc<GradedCode>,
    truncation: u32,
    components: Vec<FactorComponent>,
    /// `z_chain[i]` is `Z_{i+1}`; `z_chain[0]` is the source code.
    z_chain: Vec<Arc<GradedCode>>,
}

/// The right length factorization `𝔽(C, ω)`: iterated right bisections at
/// the slices `C_i = Z_i ∩ {ω = i}`, with empty components omitted.
pub fn right_length_factorization(code: &Arc<GradedCode>, n: u32) -> Result<Factorization> {
    if n < 1 {
        return Err(Error::InvalidArgument("need truncation ≥ 1".into()));
    }
    let mut z_chain = vec![code.clone()];
    let mut components = Vec::new();
    for degree in 1..=n {
        let z = z_chain.last().unwrap();
        let slice = z.words_of_weight(degree)?;
        if slice.is_empty() {
            // Empty slice: the bisection is trivial and Z_{i+1} = Z_i.
            z_chain.push(z.clone());
            continue;
        }
        let b = GradedCode::new_finite(
            format!("{}[{}]", code.name(), degree),
            code.alphabet().clone(),
            slice.to_vec(),
        )?;
        let (_, residual) = lazard_bisection(z, &b)?;
        components.push(FactorComponent {
            degree,
            words: slice.to_vec(),
        });
        z_chain.push(residual);
    }
    Ok(Factorization {
        source: code.clone(),
        truncation: n,
        components,
        z_chain,
    })
}

impl Factorization {
    pub fn source(&self) -> &Arc<GradedCode> {
        &self.source
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Nonempty components, degrees strictly increasing.
    pub fn components(&self) -> &[FactorComponent] {
        &self.components
    }

    pub fn component(&self, degree: u32) -> Option<&FactorComponent> {
        self.components.iter().find(|c| c.degree == degree)
    }

    /// Characteristic series of the degree-`n` component (zero when the
    /// component is empty).
    pub fn component_series(&self, n: u32) -> Result<NcSeries> {
        let words = self
            .component(n)
            .map(|c| c.words.clone())
            .unwrap_or_default();
        NcSeries::characteristic(self.source.alphabet().clone(), words, n)
    }

    /// The unique factorization of `w` into component blocks with
    /// nondecreasing degrees.
    pub fn decompose(&self, word: &Word) -> Result<Vec<(u32, Word)>> {
        let weight = self.source.alphabet().word_weight(word);
        if weight > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: weight,
                truncation: self.truncation,
            });
        }
        let mut blocks = Vec::new();
        if self.search(word, 0, &mut blocks) {
            Ok(blocks)
        } else {
            Err(Error::NotInMonoid {
                word: self.source.alphabet().render_word(word),
                code: self.source.name().to_string(),
            })
        }
    }

    fn search(&self, rest: &Word, min_degree: u32, blocks: &mut Vec<(u32, Word)>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for component in &self.components {
            if component.degree < min_degree {
                continue;
            }
            if component.degree > self.source.alphabet().word_weight(rest) {
                break;
            }
            for block in &component.words {
                if let Some(tail) = rest.strip_prefix(block) {
                    blocks.push((component.degree, block.clone()));
                    if self.search(&tail, component.degree, blocks) {
                        return true;
                    }
                    blocks.pop();
                }
            }
        }
        false
    }

    /// Counts all block factorizations of `w` (a brute-force oracle; the
    /// factorization property says this is 1 for every word of `C*`).
    pub fn count_decompositions(&self, word: &Word) -> usize {
        fn rec(f: &Factorization, rest: &Word, min_degree: u32) -> usize {
            if rest.is_empty() {
                return 1;
            }
            let mut total = 0;
            for component in &f.components {
                if component.degree < min_degree {
                    continue;
                }
                for block in &component.words {
                    if let Some(tail) = rest.strip_prefix(block) {
                        total += rec(f, &tail, component.degree);
                    }
                }
            }
            total
        }
        rec(self, word, 0)
    }

    /// The canonical binary split of a composite component word: peeling
    /// the last factor of its elimination tail gives `w = w_1·w_2` with
    /// `ω(w_2) < ω(w_1) < ω(w)` and both halves in `C*`. Returns `None`
    /// when `w` is a word of the source code itself.
    pub fn bracket_split(&self, word: &Word) -> Result<Option<(Word, Word)>> {
        let weight = self.source.alphabet().word_weight(word);
        if weight > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: weight,
                truncation: self.truncation,
            });
        }
        for level in (1..weight).rev() {
            // Tail factors at this level come from the degree-`level` slice.
            let slice = match self.component(level) {
                Some(c) => &c.words,
                None => continue,
            };
            // z_chain[level] = Z_{level+1} = (Z_level ∖ C_level) C_level*.
            let residual = &self.z_chain[level as usize];
            for tail in slice {
                if let Some(prefix) = word.strip_suffix(tail) {
                    if prefix.is_empty() {
                        continue;
                    }
                    let prefix_weight = self.source.alphabet().word_weight(&prefix);
                    if residual
                        .words_of_weight(prefix_weight)?
                        .binary_search(&prefix)
                        .is_ok()
                    {
                        return Ok(Some((prefix, tail.clone())));
                    }
                }
            }
        }
        if self.source.contains_code_word(word)? {
            Ok(None)
        } else {
            Err(Error::NotInMonoid {
                word: self.source.alphabet().render_word(word),
                code: self.source.name().to_string(),
            })
        }
    }

    pub fn to_json(&self) -> String {
        let dto = FactorizationJson {
            code: self.source.name().to_string(),
            truncation: self.truncation,
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    degree: c.degree,
                    words: c
                        .words
                        .iter()
                        .map(|w| self.source.alphabet().render_word(w))
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&dto).expect("factorization serialization")
    }
}

#[derive(Serialize, Deserialize)]
struct FactorizationJson {
    code: String,
    truncation: u32,
    components: Vec<ComponentJson>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    degree: u32,
    words: Vec<String>,
}

/// The specialization `Λ_k ↦ (-1)^{k-1} C̲_k` of Sym by a code, defined for
/// generator indices up to `n`.
pub fn code_specialization(code: &Arc<GradedCode>, n: u32) -> Result<Specialization> {
    let mut assign = Vec::new();
    for k in 1..=n {
        let words = code.words_of_weight(k)?;
        let sign = if k % 2 == 1 { rat(1) } else { rat(-1) };
        let series =
            NcSeries::characteristic(code.alphabet().clone(), words.iter().cloned(), k)?
                .scale(&sign);
        assign.push((k, series));
    }
    Specialization::new(GeneratorKind::Elementary, code.alphabet().clone(), assign, 1)
}

/// The C-Witt symmetric function `Q_n[C]`, computed through the symbolic
/// Witt basis and the code specialization. By the factorization theorem it
/// equals the characteristic series of the degree-`n` component of the
/// right length factorization, which the verification suite checks
/// independently.
pub fn witt_code_series(code: &Arc<GradedCode>, n: u32) -> Result<NcSeries> {
    let q = witt_q_sequence(n)?.pop().expect("nonempty table");
    let sp = code_specialization(code, n)?;
    specialize(&q, &sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{ba_star, builtin_code, dyck_length, fibonacci};
    use crate::freealg::Alphabet;

    fn rendered(code: &Arc<GradedCode>, words: &[Word]) -> Vec<String> {
        words
            .iter()
            .map(|w| code.alphabet().render_word(w))
            .collect()
    }

    #[test]
    fn bisection_of_binary_alphabet() {
        // Z = {a, b}, B = {b}: the residual is ab* = {ab^k}.
        let ab = Alphabet::binary();
        let z = GradedCode::letters_code("letters", ab.clone()).unwrap();
        let b = GradedCode::new_finite("b", ab.clone(), vec![ab.parse_word("b").unwrap()])
            .unwrap();
        let (_, residual) = lazard_bisection(&z, &b).unwrap();
        assert_eq!(rendered(&z, &residual.words_of_weight(2).unwrap()), ["ab"]);
        assert_eq!(
            rendered(&z, &residual.words_of_weight(3).unwrap()),
            ["abb"]
        );
    }

    #[test]
    fn bisection_rejects_non_subcode() {
        let ab = Alphabet::binary();
        let z = GradedCode::new_finite("z", ab.clone(), vec![ab.parse_word("a").unwrap()])
            .unwrap();
        let b = GradedCode::new_finite("b", ab, vec![ab_word("b")]).unwrap();
        let (_, residual) = lazard_bisection(&z, &b).unwrap();
        assert!(matches!(
            residual.words_of_weight(2),
            Err(Error::NotSubcode { .. })
        ));
    }

    fn ab_word(text: &str) -> Word {
        Alphabet::binary().parse_word(text).unwrap()
    }

    #[test]
    fn bisection_of_trivial_subcode() {
        let ab = Alphabet::binary();
        let z = GradedCode::new_finite("a", ab.clone(), vec![ab.parse_word("a").unwrap()])
            .unwrap();
        let (first, residual) = lazard_bisection(&z, &z).unwrap();
        assert_eq!(first.name(), "a");
        for degree in 1..=4 {
            assert!(residual.words_of_weight(degree).unwrap().is_empty());
        }
    }

    #[test]
    fn lambda_letter_bisection() {
        let code = builtin_code("lambda-letters", 4).unwrap();
        let b = GradedCode::new_finite(
            "L1",
            code.alphabet().clone(),
            vec![Word::from_ids(vec![0])],
        )
        .unwrap();
        let (_, residual) = lazard_bisection(&code, &b).unwrap();
        assert_eq!(
            rendered(&code, &residual.words_of_weight(2).unwrap()),
            ["L2"]
        );
        assert_eq!(
            rendered(&code, &residual.words_of_weight(3).unwrap()),
            ["L2.L1", "L3"]
        );
    }

    #[test]
    fn fibonacci_factorization_components() {
        let code = fibonacci();
        let f = right_length_factorization(&code, 5).unwrap();
        let degrees: Vec<u32> = f.components().iter().map(|c| c.degree).collect();
        assert_eq!(degrees, [1, 2, 3, 4, 5]);
        assert_eq!(
            rendered(&code, &f.component(5).unwrap().words),
            ["abbab", "abbbb"]
        );
    }

    #[test]
    fn ba_star_factorization_components() {
        let code = ba_star();
        let f = right_length_factorization(&code, 4).unwrap();
        assert_eq!(
            rendered(&code, &f.component(4).unwrap().words),
            ["baaa", "baab", "babb"]
        );
    }

    #[test]
    fn integers_factorization_components() {
        let code = builtin_code("integers", 4).unwrap();
        let f = right_length_factorization(&code, 4).unwrap();
        assert_eq!(
            rendered(&code, &f.component(4).unwrap().words),
            ["211", "31", "4"]
        );
    }

    #[test]
    fn homogeneous_code_factors_as_itself() {
        let ab = Alphabet::binary();
        let code = GradedCode::new_finite(
            "homog",
            ab.clone(),
            vec![ab.parse_word("aa").unwrap(), ab.parse_word("ab").unwrap()],
        )
        .unwrap();
        let f = right_length_factorization(&code, 6).unwrap();
        assert_eq!(f.components().len(), 1);
        assert_eq!(f.components()[0].degree, 2);
        assert_eq!(f.components()[0].words.len(), 2);
    }

    #[test]
    fn decompose_words_over_fibonacci() {
        let code = fibonacci();
        let f = right_length_factorization(&code, 5).unwrap();
        let ab = code.alphabet().clone();
        let blocks = f.decompose(&ab.parse_word("bab").unwrap()).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0], (1, ab.parse_word("b").unwrap()));
        assert_eq!(blocks[1], (2, ab.parse_word("ab").unwrap()));
        // abb is a single degree-3 block.
        let blocks = f.decompose(&ab.parse_word("abb").unwrap()).unwrap();
        assert_eq!(blocks, vec![(3, ab.parse_word("abb").unwrap())]);
        assert!(matches!(
            f.decompose(&ab.parse_word("a").unwrap()),
            Err(Error::NotInMonoid { .. })
        ));
    }

    #[test]
    fn bracket_split_ordering() {
        let code = fibonacci();
        let f = right_length_factorization(&code, 5).unwrap();
        let ab = code.alphabet().clone();
        // abb (degree 3) splits as (ab)(b).
        let (w1, w2) = f
            .bracket_split(&ab.parse_word("abb").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(ab.render_word(&w1), "ab");
        assert_eq!(ab.render_word(&w2), "b");
        // abbab (degree 5) splits as (abb)(ab): weights 3 > 2.
        let (w1, w2) = f
            .bracket_split(&ab.parse_word("abbab").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(ab.render_word(&w1), "abb");
        assert_eq!(ab.render_word(&w2), "ab");
        // Code words do not split.
        assert!(f
            .bracket_split(&ab.parse_word("ab").unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn witt_series_equal_components() {
        for name in ["fib", "ba-star", "dyck-len"] {
            let code = builtin_code(name, 6).unwrap();
            let f = right_length_factorization(&code, 6).unwrap();
            for n in 1..=6 {
                let through_sym = witt_code_series(&code, n).unwrap();
                let through_words = f.component_series(n).unwrap();
                assert_eq!(
                    through_sym.with_truncation(n),
                    through_words,
                    "{name} at degree {n}"
                );
            }
        }
    }

    #[test]
    fn dyck_length_has_zero_odd_components() {
        let code = dyck_length();
        let f = right_length_factorization(&code, 6).unwrap();
        assert!(f.component(1).is_none());
        assert!(f.component(3).is_none());
        assert!(f.component(5).is_none());
        assert_eq!(
            rendered(&code, &f.component(6).unwrap().words),
            ["aaabbb", "aababb", "aabbab"]
        );
    }
}
