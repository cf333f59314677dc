//! Exact arithmetic in the 2p-th cyclotomic field Q(A), quantum integers
//! and factorials, and rigorous sign determination under a chosen real
//! embedding A = exp(i*pi*ell/p).
//!
//! Elements are kept in canonical reduced form: coordinates in the power
//! basis 1, A, ..., A^{d-1} modulo the 2p-th cyclotomic polynomial, with
//! exact rational coefficients. Equality is coefficient equality and zero
//! is decidable, which is what the projective-order and reality checks
//! downstream rely on.
//!
//! Signs are decided in two stages: an exact symbolic zero test, then
//! evaluation with rational interval arithmetic at doubling precision
//! until the enclosure excludes zero. No floating point is involved.

mod interval;
mod poly;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::level::LevelSpec;
use crate::Result;

use interval::RatInterval;
pub use poly::cyclotomic_polynomial;

/// Sign of a real cyclotomic number under an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// An exact element of Q(A), A a primitive 2p-th root of unity, stored as
/// canonical coordinates modulo the 2p-th cyclotomic polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    p: u32,
    /// Length deg(Phi_{2p}); entry k is the coefficient of A^k.
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(p={}, [", self.p)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " {c}*A^{k}")?;
            }
        }
        write!(f, " ])")
    }
}

impl CycloNum {
    fn degree(p: u32) -> usize {
        poly::euler_phi(2 * p) as usize
    }

    pub fn zero(p: u32) -> Self {
        CycloNum { p, coeffs: vec![BigRational::zero(); Self::degree(p)] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        let mut x = Self::zero(p);
        x.coeffs[0] = BigRational::from_integer(BigInt::from(n));
        x
    }

    /// A^k for any integer exponent, reduced to canonical form.
    pub fn root_power(p: u32, k: i64) -> Self {
        let n = 2 * p as i64;
        let k = k.rem_euclid(n) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Self::reduce(p, raw)
    }

    fn reduce(p: u32, raw: Vec<BigRational>) -> Self {
        let modulus = poly::cyclotomic_polynomial(2 * p);
        let coeffs = poly::rem_by_monic_int(raw, &modulus, Self::degree(p));
        CycloNum { p, coeffs }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::LevelMismatch { left: self.p, right: other.p })
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNum { p: self.p, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// The field conjugation A -> A^{-1}.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero(self.p);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &Self::root_power(self.p, -(k as i64)).scale(c);
            }
        }
        acc
    }

    /// Conjugation invariance; real under every embedding.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroInField { p: self.p });
        }
        let modulus: Vec<BigRational> = poly::cyclotomic_polynomial(2 * self.p)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let inv = poly::mod_inverse(&self.coeffs, &modulus);
        Ok(Self::reduce(self.p, inv))
    }

    /// Evaluates the real part under A = exp(i*pi*ell/p) as a rational
    /// enclosure with roughly `bits` of working precision.
    fn real_part_interval(&self, ell: u32, bits: u32) -> RatInterval {
        let two_p = 2 * self.p;
        let mut acc = RatInterval::point(BigRational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle_num = ((k as u64) * (ell as u64) % (two_p as u64)) as u32;
            // cos(pi * angle_num / p)
            let cosine = interval::cos_pi_rational(angle_num, self.p, bits);
            acc = acc.add(&cosine.scale(c));
        }
        acc
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check_level(rhs).expect("mixed levels in +");
        CycloNum {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check_level(rhs).expect("mixed levels in -");
        CycloNum {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check_level(rhs).expect("mixed levels in *");
        let mut raw = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = &raw[i + j] + a * b;
                }
            }
        }
        CycloNum::reduce(self.p, raw)
    }
}

/// Selects the real embedding A -> exp(i*pi*ell/p), gcd(ell, 2p) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSelector {
    p: u32,
    ell: u32,
}

impl RootSelector {
    pub fn new(p: u32, ell: u32) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidLevel(p));
        }
        if ell == 0 || ell >= 2 * p || gcd_u64(ell as u64, 2 * p as u64) != 1 {
            return Err(Error::InvalidRootSelector { ell, p });
        }
        Ok(RootSelector { p, ell })
    }

    /// The embedding making the Hermitian form positive definite: for even
    /// p this is ell = 1 (zeta = exp(2*pi*i/p)); for odd p it is
    /// (p^2+1)/2 mod 2p, the unitary root of the theory.
    pub fn unitary(level: &LevelSpec) -> Self {
        let p = level.p();
        let ell = if level.is_odd() {
            (((p as u64 * p as u64 + 1) / 2) % (2 * p as u64)) as u32
        } else {
            1
        };
        RootSelector { p, ell }
    }

    /// All admissible selectors for the level, ascending.
    pub fn all(p: u32) -> Vec<Self> {
        (1..2 * p)
            .filter(|&ell| gcd_u64(ell as u64, 2 * p as u64) == 1)
            .map(|ell| RootSelector { p, ell })
            .collect()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// The conjugate embedding, ell -> 2p - ell.
    pub fn conjugate(&self) -> Self {
        RootSelector { p: self.p, ell: 2 * self.p - self.ell }
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// The quantum integer [m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2}), computed
/// by the division-free expansion A^{2(m-1)} + A^{2(m-3)} + ... + A^{-2(m-1)}.
pub fn quantum_integer(level: &LevelSpec, m: u32) -> Result<CycloNum> {
    let p = level.p();
    if p < 5 {
        return Err(Error::DivisionByZeroInField { p });
    }
    let mut acc = CycloNum::zero(p);
    for t in 0..m {
        let exponent = 2 * (m as i64 - 1) - 4 * t as i64;
        acc = &acc + &CycloNum::root_power(p, exponent);
    }
    Ok(acc)
}

/// [m]! = [1][2]...[m], with [0]! = 1.
pub fn quantum_factorial(level: &LevelSpec, m: u32) -> Result<CycloNum> {
    let mut acc = CycloNum::one(level.p());
    for k in 1..=m {
        acc = &acc * &quantum_integer(level, k)?;
    }
    Ok(acc)
}

const PRECISION_SCHEDULE: [u32; 8] = [64, 128, 256, 512, 1024, 2048, 4096, 8192];

/// Sign of the real number obtained by evaluating x at A = exp(i*pi*ell/p).
///
/// Zero is decided symbolically first; otherwise rational interval
/// evaluation is refined at doubling precision until the enclosure
/// excludes zero, which terminates for every nonzero algebraic input.
pub fn sign_under_embedding(x: &CycloNum, root: &RootSelector) -> Result<Sign> {
    if x.p() != root.p() {
        return Err(Error::LevelMismatch { left: x.p(), right: root.p() });
    }
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    if x.is_zero() {
        return Ok(Sign::Zero);
    }
    for bits in PRECISION_SCHEDULE {
        let enclosure = x.real_part_interval(root.ell(), bits);
        if enclosure.lo().is_positive() {
            return Ok(Sign::Positive);
        }
        if enclosure.hi().is_negative() {
            return Ok(Sign::Negative);
        }
    }
    Err(Error::PrecisionExhausted)
}
