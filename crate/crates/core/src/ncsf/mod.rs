//! The algebra **Sym** of noncommutative symmetric functions.
//!
//! Elements are stored as exact rational combinations of compositions in a
//! tagged basis: `S` (complete), `Λ` (elementary), `Φ` (power sums of the
//! second kind), `R` (ribbons), or `Q` (Witt). The first three and `Q` are
//! multiplicative: `B^I = B_{i_1} ⋯ B_{i_k}`. All conversions are exact
//! bijections on the weight-truncated space.

mod convert;
mod witt_q;

pub use convert::convert;
pub use witt_q::{
    lambda_letter_alphabet, lambda_on_q, ribbon_positivity_check, specialize, witt_q_sequence,
    witt_q_word_series, GeneratorKind, Specialization,
};

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

/// A composition: a nonempty sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("empty composition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Self(parts))
    }

    pub fn single(part: u32) -> Result<Self> {
        Self::new(vec![part])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self(parts)
    }

    /// All coarsenings, `self` included: sums over each choice of merged
    /// adjacent blocks (the boolean lattice on the ℓ−1 cut points).
    pub fn coarsenings(&self) -> Vec<Composition> {
        let cuts = self.0.len() - 1;
        let mut out = Vec::with_capacity(1 << cuts);
        for mask in 0u32..(1 << cuts) {
            let mut parts = vec![self.0[0]];
            for (i, &p) in self.0.iter().enumerate().skip(1) {
                if mask & (1 << (i - 1)) != 0 {
                    *parts.last_mut().unwrap() += p;
                } else {
                    parts.push(p);
                }
            }
            out.push(Composition(parts));
        }
        out
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weight-major order, then lexicographic on parts; keeps renderings stable.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// All compositions of `n`, in canonical order.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    fn rec(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Strictly decreasing compositions of `n` (partitions into distinct parts,
/// written in decreasing order).
pub fn strictly_decreasing_compositions_of(n: u32) -> Vec<Composition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        let top = max.min(n);
        for first in (1..=top).rev() {
            prefix.push(first);
            rec(n - first, first - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The five bases of Sym supported here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Complete functions `S_n`.
    S,
    /// Elementary functions `Λ_n`.
    Lambda,
    /// Power sums of the second kind `Φ_n`.
    Phi,
    /// Ribbon functions `R_I` (not multiplicative).
    R,
    /// Witt functions `Q_n`.
    Q,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::Lambda => "Λ",
            Basis::Phi => "Φ",
            Basis::R => "R",
            Basis::Q => "Q",
        }
    }

    pub fn is_multiplicative(self) -> bool {
        !matches!(self, Basis::R)
    }
}

/// An element of Sym in a tagged basis, truncated at weight `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymElement {
    basis: Basis,
    truncation: u32,
    terms: BTreeMap<Composition, Rational>,
}

impl SymElement {
    pub fn zero(basis: Basis, truncation: u32) -> Self {
        Self {
            basis,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    /// The single generator `B_k`.
    pub fn generator(basis: Basis, k: u32, truncation: u32) -> Result<Self> {
        Self::monomial(basis, Composition::single(k)?, Rational::one(), truncation)
    }

    pub fn monomial(
        basis: Basis,
        composition: Composition,
        coeff: Rational,
        truncation: u32,
    ) -> Result<Self> {
        let mut out = Self::zero(basis, truncation);
        out.add_term(composition, coeff)?;
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, composition: &Composition) -> Rational {
        self.terms
            .get(composition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, composition: Composition, coeff: Rational) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        let weight = composition.weight();
        if weight > self.truncation {
            return Err(Error::TruncationExceeded {
                requested: weight,
                truncation: self.truncation,
            });
        }
        match self.terms.entry(composition) {
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

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "basis mismatch: {} vs {}",
                self.basis.symbol(),
                other.basis.symbol()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.basis, truncation);
        for (comp, c) in self.terms.iter().chain(other.terms.iter()) {
            if comp.weight() <= truncation {
                out.add_term(comp.clone(), c.clone())?;
            }
        }
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
            return Self::zero(self.basis, self.truncation);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Product in Sym. Multiplicative bases concatenate compositions; the
    /// ribbon basis multiplies through the complete basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        if !self.basis.is_multiplicative() {
            let s = convert(self, Basis::S)?.mul(&convert(other, Basis::S)?)?;
            return convert(&s, self.basis);
        }
        let truncation = self.truncation.min(other.truncation);
        let mut out = Self::zero(self.basis, truncation);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                if u.weight() + v.weight() <= truncation {
                    out.add_term(u.concat(v), cu * cv)?;
                }
            }
        }
        Ok(out)
    }

    pub fn convert(&self, target: Basis) -> Result<Self> {
        convert(self, target)
    }

    /// Re-declares the truncation, dropping any term that no longer fits.
    pub fn with_truncation(&self, truncation: u32) -> Self {
        let mut out = Self::zero(self.basis, truncation);
        for (comp, c) in &self.terms {
            if comp.weight() <= truncation {
                out.terms.insert(comp.clone(), c.clone());
            }
        }
        out
    }

    /// Canonical text rendering, e.g. `-Λ2·Λ1 + Λ3`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (comp, c)) in self.terms.iter().enumerate() {
            let (negative, magnitude) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
                out.push('·');
            }
            out.push_str(&self.render_monomial(comp));
        }
        out
    }

    fn render_monomial(&self, comp: &Composition) -> String {
        match self.basis {
            Basis::R => {
                let parts: Vec<String> = comp.parts().iter().map(|p| p.to_string()).collect();
                format!("R({})", parts.join(","))
            }
            basis => comp
                .parts()
                .iter()
                .map(|p| format!("{}{}", basis.symbol(), p))
                .collect::<Vec<_>>()
                .join("·"),
        }
    }

    pub fn to_json(&self) -> String {
        let dto = SymJson {
            basis: self.basis,
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(comp, c)| SymTermJson {
                    composition: comp.parts().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        };
        serde_json::to_string(&dto).expect("sym serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: SymJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(dto.basis, dto.truncation);
        for term in dto.terms {
            out.add_term(Composition::new(term.composition)?, parse_rational(&term.coeff)?)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SymJson {
    basis: Basis,
    truncation: u32,
    terms: Vec<SymTermJson>,
}

#[derive(Serialize, Deserialize)]
struct SymTermJson {
    composition: Vec<u32>,
    coeff: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn composition_basics() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        let c = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(c.weight(), 3);
        assert_eq!(c.len(), 2);
        assert_eq!(compositions_of(4).len(), 8);
        assert_eq!(
            strictly_decreasing_compositions_of(3),
            vec![
                Composition::new(vec![3]).unwrap(),
                Composition::new(vec![2, 1]).unwrap()
            ]
        );
        // (1,1) is not strictly decreasing, so 2 has only (2).
        assert_eq!(strictly_decreasing_compositions_of(2).len(), 1);
    }

    #[test]
    fn coarsenings_of_composition() {
        let c = Composition::new(vec![1, 2, 1]).unwrap();
        let mut coarse = c.coarsenings();
        coarse.sort();
        assert_eq!(coarse.len(), 4);
        assert!(coarse.contains(&Composition::new(vec![4]).unwrap()));
        assert!(coarse.contains(&Composition::new(vec![3, 1]).unwrap()));
        assert!(coarse.contains(&Composition::new(vec![1, 3]).unwrap()));
        assert!(coarse.contains(&c));
    }

    #[test]
    fn rendering() {
        let mut x = SymElement::zero(Basis::Lambda, 3);
        x.add_term(Composition::new(vec![2, 1]).unwrap(), rat(-1)).unwrap();
        x.add_term(Composition::new(vec![3]).unwrap(), rat(1)).unwrap();
        assert_eq!(x.to_text(), "-Λ2·Λ1 + Λ3");
        let r = SymElement::monomial(
            Basis::R,
            Composition::new(vec![1, 2]).unwrap(),
            rat(1),
            3,
        )
        .unwrap();
        assert_eq!(r.to_text(), "R(1,2)");
    }

    #[test]
    fn json_round_trip() {
        let mut x = SymElement::zero(Basis::Lambda, 4);
        x.add_term(Composition::new(vec![2, 1]).unwrap(), rat(-1)).unwrap();
        let json = x.to_json();
        assert!(json.contains("\"basis\":\"Lambda\""));
        assert_eq!(SymElement::from_json(&json).unwrap(), x);
    }

    #[test]
    fn multiplicative_product() {
        let s2 = SymElement::generator(Basis::S, 2, 5).unwrap();
        let s1 = SymElement::generator(Basis::S, 1, 5).unwrap();
        let prod = s2.mul(&s1).unwrap();
        assert_eq!(
            prod.coefficient(&Composition::new(vec![2, 1]).unwrap()),
            rat(1)
        );
    }
}
