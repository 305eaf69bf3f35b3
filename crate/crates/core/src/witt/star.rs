//! Star-multinomials, star-factorials, and the Fuss–Catalan machinery.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{e_map, unghost, GhostVector, WittVector};
use crate::pseries::PowerSeries;
use crate::rational::{binomial, factorial, rat, Rational};
use crate::{Error, Result};

/// The Witt vector `*(n; i_1,…,i_k)` with ghost components
/// `w_p = multinomial(np; p·i_1, …, p·i_k)` where `n = Σ i_j`.
pub fn star_multinomial(parts: &[u32], len: u32) -> Result<WittVector> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidArgument(
            "multinomial parts must be positive".into(),
        ));
    }
    let mut values = Vec::with_capacity(len as usize);
    for p in 1..=len as u64 {
        let mut total = 0u64;
        let mut acc = BigInt::one();
        for &part in parts {
            total += p * part as u64;
            acc *= binomial(total, p * part as u64);
        }
        values.push(Rational::from_integer(acc));
    }
    Ok(unghost(&GhostVector::new(values)?))
}

/// The Witt vector `*n!/n!` with ghost components
/// `w_p = (pn)! / (n! · p!^n)`.
pub fn star_factorial(n: u32, len: u32) -> Result<WittVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("factorial index must be ≥ 1".into()));
    }
    let mut values = Vec::with_capacity(len as usize);
    for p in 1..=len as u64 {
        let mut denom = factorial(n as u64);
        let p_fact = factorial(p);
        for _ in 0..n {
            denom *= &p_fact;
        }
        values.push(Rational::new(factorial(p * n as u64), denom));
    }
    Ok(unghost(&GhostVector::new(values)?))
}

/// The generating series of n-ary trees,
/// `F(t) = Σ_k binom(nk, k)/((n-1)k + 1) t^k`, to order `len`.
pub fn fuss_catalan(n: u32, len: u32) -> Result<PowerSeries> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "Fuss-Catalan series needs n ≥ 2".into(),
        ));
    }
    let coeffs = (0..=len as u64)
        .map(|k| {
            Rational::new(
                binomial(n as u64 * k, k),
                BigInt::from((n as u64 - 1) * k + 1),
            )
        })
        .collect();
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// Verifies the multisection identity behind the roots-of-unity product
/// `e(*(np,p))(z) = ∏_k e(*(n,1))(ω^k z^{1/p})` together with the two
/// Fuss–Catalan facts that make both displayed forms equivalent:
///
/// * `p · (p-multisection of log e(*(n,1)))  =  log e(*(np,p))`,
/// * `e(*(n,1)) = F^n` for the n-ary tree series `F`,
/// * `F = 1 + t·F^n`.
///
/// Every check is exact to order `len`.
pub fn verify_star_binomial_product(n: u32, p: u32, len: u32) -> Result<bool> {
    if n < 2 || p < 1 {
        return Err(Error::InvalidArgument(
            "star product check needs n ≥ 2, p ≥ 1".into(),
        ));
    }
    let fine_order = len * p;
    let base = star_multinomial(&[1, n - 1], fine_order)?;
    let base_log = e_map(&base).log()?;

    let coarse = star_multinomial(&[p, (n - 1) * p], len)?;
    let coarse_log = e_map(&coarse).log()?;

    let sectioned = base_log.multisection(p).scale(&rat(p as i64));
    if sectioned.truncate(len) != coarse_log.truncate(len) {
        return Ok(false);
    }

    let f = fuss_catalan(n, fine_order)?;
    let mut f_pow = PowerSeries::one(fine_order);
    for _ in 0..n {
        f_pow = f_pow.mul(&f);
    }
    if e_map(&base) != f_pow {
        return Ok(false);
    }

    // 1 - F = -t F^n, i.e. F = 1 + t F^n.
    let mut shifted = PowerSeries::zero(fine_order);
    for k in 1..=fine_order {
        shifted.set_coeff(k, f_pow.coeff(k - 1)?.clone());
    }
    let one = PowerSeries::one(fine_order);
    Ok(one.add(&shifted) == f)
}

/// Exact check of the convolution identity
/// `Σ_p (-1)^{p+1}/p Σ_{i_1+…+i_p=k} Π_m binom(n·i_m, i_m)/((n-1)i_m+1)
///  = binom(nk, k)/(nk)`.
pub fn verify_log_identity(n: u32, k: u32) -> Result<bool> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidArgument(
            "log identity check needs n ≥ 2, k ≥ 1".into(),
        ));
    }
    let fuss = |i: u64| {
        Rational::new(
            binomial(n as u64 * i, i),
            BigInt::from((n as u64 - 1) * i + 1),
        )
    };
    let mut lhs = Rational::zero();
    for composition in compositions(k) {
        let parts = composition.len() as i64;
        let sign = if parts % 2 == 1 { rat(1) } else { rat(-1) };
        let mut product = sign / rat(parts);
        for i in composition {
            product *= fuss(i as u64);
        }
        lhs += product;
    }
    let rhs = Rational::new(binomial(n as u64 * k as u64, k as u64), BigInt::from(n * k));
    Ok(lhs == rhs)
}

fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::ghost;

    #[test]
    fn star_multinomial_trivial_part() {
        // multinomial(p; p) = 1 for every p, so the vector is (1, 0, 0, …).
        let v = star_multinomial(&[1], 5).unwrap();
        assert_eq!(v, WittVector::unit(5));
    }

    #[test]
    fn star_multinomial_central_binomials() {
        let v = star_multinomial(&[1, 1], 4).unwrap();
        assert_eq!(ghost(&v).values()[..3], [rat(2), rat(6), rat(20)]);
        assert_eq!(v.coords()[..3], [rat(2), rat(1), rat(4)]);
        let e = e_map(&v);
        assert_eq!(e.coeffs()[..4], [rat(1), rat(2), rat(5), rat(14)]);
    }

    #[test]
    fn star_factorial_catalan() {
        let v = star_factorial(2, 6).unwrap();
        assert_eq!(v.coords()[..3], [rat(1), rat(1), rat(3)]);
        let e = e_map(&v);
        assert_eq!(
            e.coeffs(),
            &[rat(1), rat(1), rat(2), rat(5), rat(14), rat(42), rat(132)]
        );
        assert_eq!(star_factorial(1, 4).unwrap(), WittVector::unit(4));
    }

    #[test]
    fn fuss_catalan_series() {
        let f = fuss_catalan(2, 5).unwrap();
        assert_eq!(
            f.coeffs(),
            &[rat(1), rat(1), rat(2), rat(5), rat(14), rat(42)]
        );
        let f = fuss_catalan(3, 4).unwrap();
        assert_eq!(f.coeffs(), &[rat(1), rat(1), rat(3), rat(12), rat(55)]);
        assert!(fuss_catalan(1, 3).is_err());
    }

    #[test]
    fn functional_equation() {
        for n in 2..=4 {
            let order = 10;
            let f = fuss_catalan(n, order).unwrap();
            let mut f_pow = PowerSeries::one(order);
            for _ in 0..n {
                f_pow = f_pow.mul(&f);
            }
            let mut rhs = PowerSeries::one(order);
            for k in 1..=order {
                rhs.set_coeff(k, f_pow.coeff(k - 1).unwrap().clone());
            }
            assert_eq!(f, rhs, "F = 1 + t F^{n} fails");
        }
    }

    #[test]
    fn star_product_checks() {
        for (n, p) in [(2, 2), (3, 2), (2, 3)] {
            assert!(verify_star_binomial_product(n, p, 6).unwrap());
        }
        assert!(verify_star_binomial_product(1, 2, 4).is_err());
    }

    #[test]
    fn log_identity_checks() {
        assert!(verify_log_identity(2, 1).unwrap());
        assert!(verify_log_identity(2, 3).unwrap());
        assert!(verify_log_identity(3, 4).unwrap());
    }
}
