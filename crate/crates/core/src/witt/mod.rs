//! Universal Witt vectors over ℚ.
//!
//! A [`WittVector`] is a finite sequence of exact rational coordinates
//! `a_1 … a_N`; its [`GhostVector`] is `w_n = Σ_{d|n} d·a_d^{n/d}`. Over a
//! ℚ-algebra the ghost map is a bijection, so the ring structure is
//! transported pointwise through ghosts. The `e`-map sends a Witt vector to
//! the power series `∏ (1 - a_n t^n)^{-1}` and satisfies `∂∘e = ι∘ghost`
//! with `∂ = (d/dt) log` and `ι(c) = Σ c_n t^{n-1}`.

mod star;

pub use star::{
    fuss_catalan, star_factorial, star_multinomial, verify_log_identity,
    verify_star_binomial_product,
};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::pseries::PowerSeries;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittVector {
    coords: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhostVector {
    values: Vec<Rational>,
}

impl WittVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument(
                "a Witt vector needs at least one coordinate".into(),
            ));
        }
        Ok(Self { coords })
    }

    pub fn zero(len: u32) -> Self {
        Self {
            coords: vec![Rational::zero(); len as usize],
        }
    }

    /// The multiplicative identity `(1, 0, 0, …)`.
    pub fn unit(len: u32) -> Self {
        let mut v = Self::zero(len);
        v.coords[0] = Rational::one();
        v
    }

    pub fn len(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// 1-based coordinate access: `coord(n)` is `a_n`.
    pub fn coord(&self, n: u32) -> &Rational {
        &self.coords[n as usize - 1]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }

    pub fn from_strings(texts: &[String]) -> Result<Self> {
        let coords = texts
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

impl GhostVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "a ghost vector needs at least one component".into(),
            ));
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based component access: `value(n)` is `w_n`.
    pub fn value(&self, n: u32) -> &Rational {
        &self.values[n as usize - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }

    pub fn from_strings(texts: &[String]) -> Result<Self> {
        let values = texts
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

fn rational_pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Ghost components `w_n = Σ_{d|n} d·a_d^{n/d}`.
pub fn ghost(a: &WittVector) -> GhostVector {
    let n_max = a.len();
    let mut values = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut w = Rational::zero();
        for d in 1..=n {
            if n % d == 0 {
                w += rat(d as i64) * rational_pow(a.coord(d), n / d);
            }
        }
        values.push(w);
    }
    GhostVector { values }
}

/// Inverse of [`ghost`]: solves `a_n = (w_n - Σ_{d|n, d<n} d·a_d^{n/d}) / n`
/// recursively, which is always possible over ℚ.
pub fn unghost(w: &GhostVector) -> WittVector {
    let n_max = w.len();
    let mut coords: Vec<Rational> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut acc = w.value(n).clone();
        for d in 1..n {
            if n % d == 0 {
                acc -= rat(d as i64) * rational_pow(&coords[d as usize - 1], n / d);
            }
        }
        coords.push(acc / rat(n as i64));
    }
    WittVector { coords }
}

fn check_len(a: &WittVector, b: &WittVector) -> Result<()> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "truncation mismatch: {} vs {}",
            a.len(),
            b.len()
        )))
    }
}

/// Witt sum, transported through ghosts.
pub fn witt_add(a: &WittVector, b: &WittVector) -> Result<WittVector> {
    check_len(a, b)?;
    let (ga, gb) = (ghost(a), ghost(b));
    let values = ga
        .values
        .iter()
        .zip(&gb.values)
        .map(|(x, y)| x + y)
        .collect();
    Ok(unghost(&GhostVector { values }))
}

/// Witt product, transported through ghosts.
pub fn witt_mul(a: &WittVector, b: &WittVector) -> Result<WittVector> {
    check_len(a, b)?;
    let (ga, gb) = (ghost(a), ghost(b));
    let values = ga
        .values
        .iter()
        .zip(&gb.values)
        .map(|(x, y)| x * y)
        .collect();
    Ok(unghost(&GhostVector { values }))
}

/// The isomorphism `e(a) = ∏ (1 - a_n t^n)^{-1}`, truncated at `t^N`
/// where `N` is the vector length.
pub fn e_map(a: &WittVector) -> PowerSeries {
    let order = a.len();
    let mut acc = PowerSeries::one(order);
    for n in 1..=order {
        let coeff = a.coord(n);
        if coeff.is_zero() {
            continue;
        }
        // (1 - c t^n)^{-1} = Σ_k c^k t^{nk}
        let mut factor = PowerSeries::zero(order);
        let mut c_pow = Rational::one();
        let mut k = 0;
        while n * k <= order {
            factor.set_coeff(n * k, c_pow.clone());
            c_pow *= coeff;
            k += 1;
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// Logarithmic derivative `∂f = f'/f`; requires constant term 1.
pub fn d_log(f: &PowerSeries) -> Result<PowerSeries> {
    let c0 = f.coeff(0)?;
    if !c0.is_one() {
        return Err(Error::ConstantTerm {
            expected: "1".into(),
            found: format_rational(c0),
        });
    }
    if f.order() == 0 {
        return Ok(PowerSeries::zero(0));
    }
    let inv = f.truncate(f.order() - 1).inverse()?;
    Ok(f.derivative().mul(&inv))
}

/// `ι(c) = Σ c_n t^{n-1}`, the bottom map of the ghost diagram.
pub fn iota(c: &GhostVector) -> PowerSeries {
    let order = c.len() - 1;
    let mut out = PowerSeries::zero(order);
    for n in 1..=c.len() {
        out.set_coeff(n - 1, c.value(n).clone());
    }
    out
}

/// Serialized form of a Witt or ghost vector: an array of `num/den` strings.
#[derive(Serialize, Deserialize)]
pub struct VectorJson(pub Vec<String>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn wv(coords: &[i64]) -> WittVector {
        WittVector::new(coords.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(ghost(&wv(&[1, 0, 0])).values(), &[rat(1), rat(1), rat(1)]);
        assert_eq!(ghost(&wv(&[2, 1, 4])).values(), &[rat(2), rat(6), rat(20)]);
        assert_eq!(ghost(&wv(&[0, 0, 0])).values(), &[rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn unghost_examples() {
        // Central binomial ghosts give the *(2 choose 1) coordinates.
        let g = GhostVector::new(vec![rat(2), rat(6), rat(20)]).unwrap();
        assert_eq!(unghost(&g), wv(&[2, 1, 4]));
        // Halved central binomials give the *2!/2! coordinates.
        let g = GhostVector::new(vec![rat(1), rat(3), rat(10)]).unwrap();
        assert_eq!(unghost(&g), wv(&[1, 1, 3]));
        let g = GhostVector::new(vec![rat(0), rat(0)]).unwrap();
        assert_eq!(unghost(&g), wv(&[0, 0]));
    }

    #[test]
    fn ghost_round_trip() {
        let a = WittVector::new(vec![ratio(2, 3), rat(-1), ratio(7, 5), rat(4)]).unwrap();
        assert_eq!(unghost(&ghost(&a)), a);
        let g = GhostVector::new(vec![rat(5), ratio(-1, 2), rat(0), ratio(9, 7)]).unwrap();
        assert_eq!(ghost(&unghost(&g)), g);
    }

    #[test]
    fn ring_identities() {
        let a = WittVector::new(vec![rat(3), ratio(1, 2), rat(-2)]).unwrap();
        let zero = WittVector::zero(3);
        let unit = WittVector::unit(3);
        assert_eq!(witt_add(&a, &zero).unwrap(), a);
        assert_eq!(witt_mul(&a, &unit).unwrap(), a);
        // Doubling the Teichmüller unit: ghosts (2,2,2).
        let two = witt_add(&unit, &unit).unwrap();
        assert_eq!(two, WittVector::new(vec![rat(2), rat(-1), rat(-2)]).unwrap());
        assert_eq!(ghost(&two).values(), &[rat(2), rat(2), rat(2)]);
    }

    #[test]
    fn length_mismatch_rejected() {
        let a = WittVector::zero(3);
        let b = WittVector::zero(4);
        assert!(witt_add(&a, &b).is_err());
        assert!(witt_mul(&a, &b).is_err());
    }

    #[test]
    fn e_map_geometric() {
        let e = e_map(&wv(&[1, 0, 0, 0, 0]));
        assert_eq!(e.coeffs(), &vec![rat(1); 6][..]);
    }

    #[test]
    fn diagram_commutes_on_samples() {
        for coords in [[2i64, 1, 4, 0], [1, 1, 3, 5], [-1, 2, 0, 7]] {
            let a = wv(&coords);
            let lhs = d_log(&e_map(&a)).unwrap();
            let rhs = iota(&ghost(&a));
            assert_eq!(lhs, rhs);
        }
        assert!(d_log(&PowerSeries::one(0)).unwrap().is_zero());
    }
}
