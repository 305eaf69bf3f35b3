//! Commutative truncated power series over the rationals.
//!
//! A [`PowerSeries`] stores the coefficients `c_0 … c_N` of a series known
//! modulo `t^{N+1}`; `N` is the *order*. Binary operations truncate to the
//! smaller order of the two operands.

use num_traits::{One, Zero};

use crate::rational::{format_rational, rat, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: u32) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds a series from `c_0 … c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, k: u32) -> Result<&Rational> {
        self.coeffs
            .get(k as usize)
            .ok_or(Error::TruncationExceeded {
                requested: k,
                truncation: self.order(),
            })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn set_coeff(&mut self, k: u32, value: Rational) {
        self.coeffs[k as usize] = value;
    }

    pub fn truncate(&self, order: u32) -> Self {
        let keep = (order as usize + 1).min(self.coeffs.len());
        let mut coeffs = self.coeffs[..keep].to_vec();
        coeffs.resize(order as usize + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order()) as usize;
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order()) as usize;
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &other.coeffs[k])
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order()) as usize;
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "nonzero".into(),
                found: "0".into(),
            });
        }
        let order = self.order() as usize;
        let c0_inv = rat(1) / &self.coeffs[0];
        let mut inv = vec![Rational::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc * &c0_inv;
        }
        Ok(Self { coeffs: inv })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * rat(i as i64 + 1))
            .collect();
        Self { coeffs }
    }

    /// Logarithm of a series with constant term 1, computed through
    /// `log f = ∫ f'/f`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: format_rational(&self.coeffs[0]),
            });
        }
        let order = self.order() as usize;
        let ratio = self.derivative().mul(&self.truncate(order.max(1) as u32 - 1).inverse()?);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            coeffs[n] = &ratio.coeffs[n - 1] / rat(n as i64);
        }
        Ok(Self { coeffs })
    }

    /// Exponential of a series with constant term 0, via the recurrence
    /// `g_n = (1/n) Σ_{k≥1} k f_k g_{n−k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: format_rational(&self.coeffs[0]),
            });
        }
        let order = self.order() as usize;
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = Rational::one();
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += rat(k as i64) * &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc / rat(n as i64);
        }
        Ok(Self { coeffs: out })
    }

    /// Keeps every `p`-th coefficient: `g_m = c_{pm}`.
    pub fn multisection(&self, p: u32) -> Self {
        assert!(p >= 1, "multisection step must be positive");
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p as usize)
            .cloned()
            .collect::<Vec<_>>();
        Self { coeffs }
    }

    /// Coefficients as `num/den` strings, the JSON wire form.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn to_text(&self) -> String {
        format!("[{}]", self.coeff_strings().join(", "))
    }
}
