//! Exact basis conversions, routed through the complete basis `S`.
//!
//! Generator expansions are classical:
//!
//! * `Λ_n = Σ_{J⊨n} (-1)^{n-ℓ(J)} S^J` and the same formula with S and Λ
//!   exchanged (from `λ_{-t} σ_t = 1`);
//! * `Φ_n = n Σ_{J⊨n} (-1)^{ℓ(J)+1}/ℓ(J) S^J` and
//!   `S_n = Σ_{J⊨n} Φ^J / (ℓ(J)!·Π j_i)` (from `σ_t = exp Σ Φ_n t^n/n`);
//! * `S^I = Σ_{J ⪰ I} R_J` over coarsenings, inverted by the
//!   sign-alternating Möbius sum `R_I = Σ_{J ⪰ I} (-1)^{ℓ(I)-ℓ(J)} S^J`;
//! * `Q_n` expands on Λ through the Witt recursion table, and conversely
//!   `Λ_n = Σ_k (-1)^{n+k} Σ Q_{i_1}⋯Q_{i_k}` over strictly decreasing
//!   compositions of `n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::witt_q::q_on_lambda;
use super::{compositions_of, strictly_decreasing_compositions_of, Basis, Composition, SymElement};
use crate::rational::{rat, Rational};
use crate::Result;

type Expansion = Arc<Vec<(Composition, Rational)>>;

#[derive(PartialEq, Eq, Hash, Clone, Copy)]
enum Rule {
    LambdaToS,
    SToLambda,
    PhiToS,
    SToPhi,
    QToLambda,
    LambdaToQ,
}

fn expansion_cache() -> &'static Mutex<HashMap<(Rule, u32), Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<(Rule, u32), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn generator_expansion(rule: Rule, n: u32) -> Result<Expansion> {
    if let Some(hit) = expansion_cache().lock().unwrap().get(&(rule, n)) {
        return Ok(hit.clone());
    }
    let terms: Vec<(Composition, Rational)> = match rule {
        // Λ_n on S, and S_n on Λ: identical alternating sum.
        Rule::LambdaToS | Rule::SToLambda => compositions_of(n)
            .into_iter()
            .map(|j| {
                let sign = if (n as usize + j.len()).is_multiple_of(2) {
                    rat(1)
                } else {
                    rat(-1)
                };
                (j, sign)
            })
            .collect(),
        Rule::PhiToS => compositions_of(n)
            .into_iter()
            .map(|j| {
                let l = j.len() as i64;
                let sign = if j.len() % 2 == 1 { rat(1) } else { rat(-1) };
                (j, rat(n as i64) * sign / rat(l))
            })
            .collect(),
        Rule::SToPhi => compositions_of(n)
            .into_iter()
            .map(|j| {
                let mut denom = rat(1);
                for (i, &part) in j.parts().iter().enumerate() {
                    denom *= rat(i as i64 + 1) * rat(part as i64);
                }
                (j, rat(1) / denom)
            })
            .collect(),
        Rule::QToLambda => {
            let q = q_on_lambda(n)?;
            q.terms().map(|(c, v)| (c.clone(), v.clone())).collect()
        }
        Rule::LambdaToQ => strictly_decreasing_compositions_of(n)
            .into_iter()
            .map(|j| {
                let sign = if (n as usize + j.len()).is_multiple_of(2) {
                    rat(1)
                } else {
                    rat(-1)
                };
                (j, sign)
            })
            .collect(),
    };
    let arc: Expansion = Arc::new(terms);
    expansion_cache()
        .lock()
        .unwrap()
        .insert((rule, n), arc.clone());
    Ok(arc)
}

/// Expands every composition of `x` multiplicatively: each part `i_j` is
/// replaced by its generator expansion and the pieces are concatenated.
fn expand_multiplicative(x: &SymElement, rule: Rule, target: Basis) -> Result<SymElement> {
    let mut out = SymElement::zero(target, x.truncation());
    for (comp, coeff) in x.terms() {
        // Running product over the parts, as (composition, coefficient) sums.
        let mut acc: Vec<(Option<Composition>, Rational)> = vec![(None, coeff.clone())];
        for &part in comp.parts() {
            let expansion = generator_expansion(rule, part)?;
            let mut next = Vec::with_capacity(acc.len() * expansion.len());
            for (prefix, c) in &acc {
                for (piece, pc) in expansion.iter() {
                    let combined = match prefix {
                        None => piece.clone(),
                        Some(p) => p.concat(piece),
                    };
                    next.push((Some(combined), c * pc));
                }
            }
            acc = next;
        }
        for (comp, c) in acc {
            out.add_term(comp.expect("nonempty composition"), c)?;
        }
    }
    Ok(out)
}

fn s_to_ribbon(x: &SymElement) -> Result<SymElement> {
    let mut out = SymElement::zero(Basis::R, x.truncation());
    for (comp, coeff) in x.terms() {
        for coarse in comp.coarsenings() {
            out.add_term(coarse, coeff.clone())?;
        }
    }
    Ok(out)
}

fn ribbon_to_s(x: &SymElement) -> Result<SymElement> {
    let mut out = SymElement::zero(Basis::S, x.truncation());
    for (comp, coeff) in x.terms() {
        let l = comp.len();
        for coarse in comp.coarsenings() {
            let sign = if (l - coarse.len()) % 2 == 0 {
                rat(1)
            } else {
                rat(-1)
            };
            out.add_term(coarse, coeff * sign)?;
        }
    }
    Ok(out)
}

fn to_s(x: &SymElement) -> Result<SymElement> {
    match x.basis() {
        Basis::S => Ok(x.clone()),
        Basis::Lambda => expand_multiplicative(x, Rule::LambdaToS, Basis::S),
        Basis::Phi => expand_multiplicative(x, Rule::PhiToS, Basis::S),
        Basis::R => ribbon_to_s(x),
        Basis::Q => {
            let on_lambda = expand_multiplicative(x, Rule::QToLambda, Basis::Lambda)?;
            to_s(&on_lambda)
        }
    }
}

fn from_s(x: &SymElement, target: Basis) -> Result<SymElement> {
    match target {
        Basis::S => Ok(x.clone()),
        Basis::Lambda => expand_multiplicative(x, Rule::SToLambda, Basis::Lambda),
        Basis::Phi => expand_multiplicative(x, Rule::SToPhi, Basis::Phi),
        Basis::R => s_to_ribbon(x),
        Basis::Q => {
            let on_lambda = expand_multiplicative(x, Rule::SToLambda, Basis::Lambda)?;
            expand_multiplicative(&on_lambda, Rule::LambdaToQ, Basis::Q)
        }
    }
}

/// Exact re-expression of `x` on `target`; converting back returns the
/// original element.
pub fn convert(x: &SymElement, target: Basis) -> Result<SymElement> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    // Neighbouring pairs skip the hub.
    match (x.basis(), target) {
        (Basis::Q, Basis::Lambda) => expand_multiplicative(x, Rule::QToLambda, Basis::Lambda),
        (Basis::Lambda, Basis::Q) => expand_multiplicative(x, Rule::LambdaToQ, Basis::Q),
        _ => from_s(&to_s(x)?, target),
    }
}

/// True when every coefficient is an integer in `{-1, 0, 1}`.
pub(crate) fn is_multiplicity_free(x: &SymElement) -> bool {
    x.terms().all(|(_, c)| {
        c.denom().is_one() && {
            let n = c.numer();
            n.magnitude().bits() <= 1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s2_on_lambda() {
        let s2 = SymElement::generator(Basis::S, 2, 4).unwrap();
        let on_lambda = convert(&s2, Basis::Lambda).unwrap();
        // S_2 = Λ_1Λ_1 - Λ_2.
        assert_eq!(on_lambda.coefficient(&comp(&[1, 1])), rat(1));
        assert_eq!(on_lambda.coefficient(&comp(&[2])), rat(-1));
        assert_eq!(on_lambda.terms().count(), 2);
    }

    #[test]
    fn phi2_on_s() {
        let phi2 = SymElement::generator(Basis::Phi, 2, 4).unwrap();
        let on_s = convert(&phi2, Basis::S).unwrap();
        // Φ_2 = 2 S_2 - S_1 S_1.
        assert_eq!(on_s.coefficient(&comp(&[2])), rat(2));
        assert_eq!(on_s.coefficient(&comp(&[1, 1])), rat(-1));
    }

    #[test]
    fn lambda_n_is_hook_ribbon() {
        for n in 1..=5 {
            let lam = SymElement::generator(Basis::Lambda, n, 6).unwrap();
            let ribbons = convert(&lam, Basis::R).unwrap();
            let ones = comp(&vec![1; n as usize]);
            assert_eq!(ribbons.coefficient(&ones), rat(1));
            assert_eq!(ribbons.terms().count(), 1, "Λ_{n} should be R(1^{n})");
        }
    }

    #[test]
    fn s_to_phi_has_expected_denominators() {
        let s2 = SymElement::generator(Basis::S, 2, 4).unwrap();
        let on_phi = convert(&s2, Basis::Phi).unwrap();
        // S_2 = Φ_2/2 + Φ_1Φ_1/2.
        assert_eq!(on_phi.coefficient(&comp(&[2])), ratio(1, 2));
        assert_eq!(on_phi.coefficient(&comp(&[1, 1])), ratio(1, 2));
    }

    #[test]
    fn round_trips_through_all_bases() {
        let mut x = SymElement::zero(Basis::S, 5);
        x.add_term(comp(&[2, 1]), ratio(3, 2)).unwrap();
        x.add_term(comp(&[5]), rat(-2)).unwrap();
        x.add_term(comp(&[1, 1, 1]), rat(1)).unwrap();
        for target in [Basis::Lambda, Basis::Phi, Basis::R, Basis::Q] {
            let there = convert(&x, target).unwrap();
            let back = convert(&there, Basis::S).unwrap();
            assert_eq!(back, x, "round trip through {:?}", target);
        }
    }
}
