//! Alphabets of n-ary trees and the forest power sums built on them.
//!
//! A (full) n-ary tree with `m` internal nodes has `nm` edges, so its
//! degree under `ρ(t) = edges/n` is `m`. Letters are encoded canonically
//! as generalized bracket words: the preorder traversal writes `(` for an
//! internal node and `)` for a leaf, and the trailing leaf is dropped.
//! For `n = 2` this is exactly the classical bijection with Dyck bracket
//! strings. The number of letters of degree `m` is the Fuss–Catalan count
//! `binom(nm, m)/((n-1)m + 1)`.

use std::sync::Arc;

use num_traits::One;

use crate::freealg::{Alphabet, NcSeries, Word};
use crate::rational::{rat, Rational};
use crate::{Error, Result};

/// All canonical encodings (full preorder, `(` internal / `)` leaf) of
/// n-ary trees with exactly `m` internal nodes, sorted.
fn tree_encodings(n: u32, m: u32) -> Vec<String> {
    fn rec(n: u32, m: u32) -> Vec<String> {
        if m == 0 {
            return vec![")".to_string()];
        }
        // Root is internal: distribute m-1 internal nodes over n children.
        let mut out = Vec::new();
        let mut split = vec![0u32; n as usize];
        distribute(n, m - 1, 0, &mut split, &mut |split| {
            let mut parts: Vec<Vec<String>> = Vec::with_capacity(n as usize);
            for &size in split.iter() {
                parts.push(rec(n, size));
            }
            let mut combos = vec![String::from("(")];
            for child in &parts {
                let mut next = Vec::with_capacity(combos.len() * child.len());
                for prefix in &combos {
                    for enc in child {
                        next.push(format!("{prefix}{enc}"));
                    }
                }
                combos = next;
            }
            out.extend(combos);
        });
        out
    }
    fn distribute(
        n: u32,
        remaining: u32,
        index: u32,
        split: &mut Vec<u32>,
        emit: &mut impl FnMut(&Vec<u32>),
    ) {
        if index == n - 1 {
            split[index as usize] = remaining;
            emit(split);
            return;
        }
        for here in 0..=remaining {
            split[index as usize] = here;
            distribute(n, remaining - here, index + 1, split, emit);
        }
    }
    let mut out = rec(n, m);
    out.sort();
    out
}

/// The alphabet of n-ary tree letters with degrees `1 ≤ ρ ≤ max_degree`.
/// Display tokens drop the final leaf bracket, so the degree-1 binary tree
/// reads `()`.
pub fn nary_tree_alphabet(n: u32, max_degree: u32) -> Result<Arc<Alphabet>> {
    if n < 2 {
        return Err(Error::InvalidArgument("tree arity must be ≥ 2".into()));
    }
    if max_degree < 1 {
        return Err(Error::InvalidArgument("need degree ≥ 1".into()));
    }
    let mut letters = Vec::new();
    for m in 1..=max_degree {
        for encoding in tree_encodings(n, m) {
            let token = encoding[..encoding.len() - 1].to_string();
            letters.push((token, m));
        }
    }
    Alphabet::new(letters)
}

/// The forest power sum `Φ_k` of the specialization `S_j = Σ_{ρ(t)=j} a_t`
/// on the n-ary tree alphabet: `k` times the degree-`k` part of `log σ`.
pub fn nary_forest_phi(n: u32, k: u32) -> Result<NcSeries> {
    if k < 1 {
        return Err(Error::InvalidArgument("need k ≥ 1".into()));
    }
    let alphabet = nary_tree_alphabet(n, k)?;
    let mut sigma = NcSeries::one(alphabet.clone(), k);
    for letter in alphabet.letters() {
        sigma.add_term(Word::from_ids(vec![letter.id]), Rational::one())?;
    }
    let phi = sigma.log()?.graded_part(k)?;
    Ok(phi.scale(&rat(k as i64)))
}
