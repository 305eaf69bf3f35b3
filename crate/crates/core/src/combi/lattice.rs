//! Lattice paths bounded by a staircase, and the series they specialize.
//!
//! For parameters `n ≥ 2`, `p ≥ 1`, the degree-`m` paths run from `(0,0)`
//! to `((n-1)pm, pm)` in unit steps `R = (1,0)` and `U = (0,1)`, staying
//! weakly below the staircase that rises `p` units after every `(n-1)p`
//! horizontal units: a point `(x, y)` is allowed iff
//! `y ≤ p·(⌊x/((n-1)p)⌋ + 1)`. The orientation is pinned by golden data:
//! degree 1 of the `(2,2)` family has 6 paths and degree 2 has 53,
//! matching the series `e(*(4,2))`, and the `(2,1)` family gives the
//! shifted Catalan numbers 2, 5, 14, 42.
//!
//! The marked corner points are `((n-1)kp, kp)` for `0 < k < m`: avoiding
//! all of them characterizes the Λ-specialization, and the Φ-series
//! weights each path by `m/(c(w)+1)` with `c(w)` the number of marked
//! corners on the path.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::freealg::{Alphabet, NcSeries, Word};
use crate::ncsf::{GeneratorKind, Specialization};
use crate::rational::rat;
use crate::{Error, Result};

/// A bounded-staircase family: arity `n`, period `p`, maximal degree `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSpec {
    pub n: u32,
    pub p: u32,
    pub m: u32,
}

impl LatticeSpec {
    pub fn new(n: u32, p: u32, m: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument("lattice spec needs n ≥ 2".into()));
        }
        if p < 1 || m < 1 {
            return Err(Error::InvalidArgument("lattice spec needs p, m ≥ 1".into()));
        }
        Ok(Self { n, p, m })
    }

    /// Letters contributed per unit degree (`np`): the scale of the grading.
    pub fn scale(&self) -> u32 {
        self.n * self.p
    }

    fn width(&self, degree: u32) -> u32 {
        (self.n - 1) * self.p * degree
    }

    fn height(&self, degree: u32) -> u32 {
        self.p * degree
    }

    fn allowed(&self, x: u32, y: u32) -> bool {
        y <= self.p * (x / ((self.n - 1) * self.p) + 1)
    }

    /// Marked corner points `((n-1)kp, kp)` interior to degree `degree`.
    fn corners(&self, degree: u32) -> Vec<(u32, u32)> {
        (1..degree)
            .map(|k| ((self.n - 1) * self.p * k, self.p * k))
            .collect()
    }
}

/// The path alphabet `{R, U}`, both letters of weight 1.
pub fn path_alphabet() -> Arc<Alphabet> {
    static CACHE: OnceLock<Arc<Alphabet>> = OnceLock::new();
    CACHE
        .get_or_init(|| Alphabet::new([("R", 1), ("U", 1)]).expect("path alphabet"))
        .clone()
}

const STEP_R: u32 = 0;
const STEP_U: u32 = 1;

/// Exhaustively enumerates the degree-`degree` paths of the family, in
/// lexicographic order (R before U).
pub fn lattice_paths(spec: &LatticeSpec, degree: u32) -> Vec<Word> {
    let width = spec.width(degree);
    let height = spec.height(degree);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity((width + height) as usize);
    fn rec(
        spec: &LatticeSpec,
        width: u32,
        height: u32,
        x: u32,
        y: u32,
        buf: &mut Vec<u32>,
        out: &mut Vec<Word>,
    ) {
        if x == width && y == height {
            out.push(Word::from_ids(buf.clone()));
            return;
        }
        if x < width {
            buf.push(STEP_R);
            rec(spec, width, height, x + 1, y, buf, out);
            buf.pop();
        }
        if y < height && spec.allowed(x, y + 1) {
            buf.push(STEP_U);
            rec(spec, width, height, x, y + 1, buf, out);
            buf.pop();
        }
    }
    rec(spec, width, height, 0, 0, &mut buf, &mut out);
    out
}

/// Path count by dynamic programming — an independent oracle for the
/// enumeration (no words are materialized).
pub fn lattice_count(spec: &LatticeSpec, degree: u32) -> BigInt {
    let width = spec.width(degree) as usize;
    let height = spec.height(degree) as usize;
    let mut table = vec![vec![BigInt::zero(); height + 1]; width + 1];
    table[0][0] = BigInt::one();
    for x in 0..=width {
        for y in 0..=height {
            if !spec.allowed(x as u32, y as u32) {
                table[x][y] = BigInt::zero();
                continue;
            }
            if x > 0 {
                let prev = table[x - 1][y].clone();
                table[x][y] += prev;
            }
            if y > 0 {
                let prev = table[x][y - 1].clone();
                table[x][y] += prev;
            }
        }
    }
    table[width][height].clone()
}

fn visits(word: &Word, corner: (u32, u32)) -> bool {
    let (mut x, mut y) = (0u32, 0u32);
    if corner == (0, 0) {
        return true;
    }
    for &step in word.ids() {
        if step == STEP_R {
            x += 1;
        } else {
            y += 1;
        }
        if (x, y) == corner {
            return true;
        }
    }
    false
}

fn corner_count(spec: &LatticeSpec, degree: u32, word: &Word) -> u32 {
    spec.corners(degree)
        .into_iter()
        .filter(|&c| visits(word, c))
        .count() as u32
}

/// `S_m`: the characteristic series of all degree-`m` paths.
pub fn s_series(spec: &LatticeSpec, degree: u32) -> Result<NcSeries> {
    let alphabet = path_alphabet();
    NcSeries::characteristic(
        alphabet,
        lattice_paths(spec, degree),
        degree * spec.scale(),
    )
}

/// `Λ_m = (-1)^{m+1} Σ w` over the degree-`m` paths avoiding every marked
/// corner.
pub fn lambda_series(spec: &LatticeSpec, degree: u32) -> Result<NcSeries> {
    let alphabet = path_alphabet();
    let avoiding = lattice_paths(spec, degree)
        .into_iter()
        .filter(|w| corner_count(spec, degree, w) == 0);
    let series = NcSeries::characteristic(alphabet, avoiding, degree * spec.scale())?;
    let sign = if degree % 2 == 1 { rat(1) } else { rat(-1) };
    Ok(series.scale(&sign))
}

/// `Φ_m = m Σ_w w/(c(w)+1)` over the degree-`m` paths.
pub fn phi_series(spec: &LatticeSpec, degree: u32) -> Result<NcSeries> {
    let alphabet = path_alphabet();
    let mut out = NcSeries::zero(alphabet, degree * spec.scale());
    for word in lattice_paths(spec, degree) {
        let c = corner_count(spec, degree, &word);
        out.add_term(word, rat(degree as i64) / rat(c as i64 + 1))?;
    }
    Ok(out)
}

/// The S-assignment of the family up to degree `max_degree`, for routing
/// through basis conversions.
pub fn path_specialization(spec: &LatticeSpec, max_degree: u32) -> Result<Specialization> {
    let alphabet = path_alphabet();
    let assign = (1..=max_degree)
        .map(|j| Ok((j, s_series(spec, j)?)))
        .collect::<Result<Vec<_>>>()?;
    Specialization::new(GeneratorKind::Complete, alphabet, assign, spec.scale())
}

/// The three specialized series `(S_m, Λ_m, Φ_m)` of the family at its
/// maximal degree, from the direct path formulas.
pub fn lattice_specializations(spec: &LatticeSpec) -> Result<(NcSeries, NcSeries, NcSeries)> {
    Ok((
        s_series(spec, spec.m)?,
        lambda_series(spec, spec.m)?,
        phi_series(spec, spec.m)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render_all(words: &[Word]) -> Vec<String> {
        let alphabet = path_alphabet();
        words.iter().map(|w| alphabet.render_word(w)).collect()
    }

    #[test]
    fn golden_counts() {
        let spec22 = LatticeSpec::new(2, 2, 4).unwrap();
        assert_eq!(lattice_paths(&spec22, 1).len(), 6);
        assert_eq!(lattice_paths(&spec22, 2).len(), 53);
        let spec21 = LatticeSpec::new(2, 1, 4).unwrap();
        let counts: Vec<usize> = (1..=4).map(|m| lattice_paths(&spec21, m).len()).collect();
        assert_eq!(counts, [2, 5, 14, 42]);
        let spec31 = LatticeSpec::new(3, 1, 3).unwrap();
        let counts: Vec<usize> = (1..=3).map(|m| lattice_paths(&spec31, m).len()).collect();
        assert_eq!(counts, [3, 12, 55]);
        let spec32 = LatticeSpec::new(3, 2, 2).unwrap();
        assert_eq!(lattice_paths(&spec32, 1).len(), 15);
    }

    #[test]
    fn dp_count_matches_enumeration() {
        for (n, p) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let spec = LatticeSpec::new(n, p, 3).unwrap();
            for degree in 1..=2 {
                assert_eq!(
                    lattice_count(&spec, degree),
                    BigInt::from(lattice_paths(&spec, degree).len()),
                    "(n,p,m) = ({n},{p},{degree})"
                );
            }
        }
    }

    #[test]
    fn degree_one_paths_of_2_1() {
        let spec = LatticeSpec::new(2, 1, 1).unwrap();
        assert_eq!(render_all(&lattice_paths(&spec, 1)), ["RU", "UR"]);
    }

    #[test]
    fn lambda_of_2_1_avoids_diagonal() {
        let spec = LatticeSpec::new(2, 1, 2).unwrap();
        let lambda = lambda_series(&spec, 2).unwrap();
        // Only RRUU avoids (1,1); the sign at even degree is -1.
        assert_eq!(lambda.to_text(), "-1*RRUU");
        let spec3 = LatticeSpec::new(2, 1, 3).unwrap();
        let lambda3 = lambda_series(&spec3, 3).unwrap();
        assert_eq!(lambda3.to_text(), "1*RRRUUU + 1*RRURUU");
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(LatticeSpec::new(1, 1, 1).is_err());
        assert!(LatticeSpec::new(2, 0, 1).is_err());
        assert!(LatticeSpec::new(2, 1, 0).is_err());
    }
}
