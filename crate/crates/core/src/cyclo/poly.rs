//! Polynomial plumbing for the cyclotomic quotient: cyclotomic polynomials
//! over the integers, remainder by a monic integer polynomial, and modular
//! inverse by the extended Euclidean algorithm over Q[x].

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The n-th cyclotomic polynomial, monic with integer coefficients,
/// ascending degree. Computed by dividing x^n - 1 by Phi_d for proper
/// divisors d; n stays small here (n = 2p).
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (remainder known to vanish),
/// divisor monic-or-not with exact divisibility at each step.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let q = &rem[k] / &lead;
        debug_assert_eq!(&q * &lead, rem[k], "exact division expected");
        quot[k - dd] = q.clone();
        for (i, dcoef) in den.iter().enumerate() {
            let delta = &q * dcoef;
            rem[k - dd + i] = &rem[k - dd + i] - delta;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    while quot.len() > 1 && quot.last().map_or(false, Zero::is_zero) {
        quot.pop();
    }
    quot
}

/// Remainder of a rational polynomial by a monic integer polynomial,
/// padded or truncated to exactly `degree` coefficients.
pub(crate) fn rem_by_monic_int(
    mut raw: Vec<BigRational>,
    modulus: &[BigInt],
    degree: usize,
) -> Vec<BigRational> {
    let d = modulus.len() - 1;
    debug_assert!(modulus[d].is_one());
    for k in (d..raw.len()).rev() {
        if raw[k].is_zero() {
            continue;
        }
        let q = raw[k].clone();
        for (i, mcoef) in modulus.iter().enumerate() {
            let delta = &q * &BigRational::from_integer(mcoef.clone());
            raw[k - d + i] = &raw[k - d + i] - delta;
        }
    }
    raw.resize(degree, BigRational::zero());
    raw
}

fn poly_deg(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

fn poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_deg(den).expect("division by zero polynomial");
    let mut rem: Vec<BigRational> = num.to_vec();
    let mut quot = vec![BigRational::zero(); num.len()];
    loop {
        let nd = match poly_deg(&rem) {
            Some(nd) if nd >= dd => nd,
            _ => break,
        };
        let q = &rem[nd] / &den[dd];
        quot[nd - dd] = q.clone();
        for i in 0..=dd {
            let delta = &q * &den[i];
            rem[nd - dd + i] = &rem[nd - dd + i] - delta;
        }
        rem[nd] = BigRational::zero();
    }
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        *slot = x - y;
    }
    out
}

/// Inverse of f modulo the (irreducible) modulus via extended Euclid:
/// returns g with f*g = 1 (mod modulus).
pub(crate) fn mod_inverse(f: &[BigRational], modulus: &[BigRational]) -> Vec<BigRational> {
    // Invariants: r0 = s0*f (mod modulus), r1 = s1*f (mod modulus).
    let mut r0: Vec<BigRational> = modulus.to_vec();
    let mut r1: Vec<BigRational> = f.to_vec();
    let mut s0 = vec![BigRational::zero()];
    let mut s1 = vec![BigRational::one()];
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s);
    }
    // r0 is now a nonzero constant gcd; normalize.
    let c = r0[poly_deg(&r0).expect("gcd must be nonzero")].clone();
    s0.iter().map(|x| x / &c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(10), ints(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // Phi_16 = x^8 + 1
        assert_eq!(cyclotomic_polynomial(16), ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn phi_degrees_match_euler() {
        for n in 1..=32 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u32 - 1,
                euler_phi(n),
                "n={n}"
            );
        }
    }
}
