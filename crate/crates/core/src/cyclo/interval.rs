//! Rational interval arithmetic for rigorous sign determination.
//!
//! Only what the sign routine needs: addition, scaling, and certified
//! enclosures of cos(pi * num/den) at exact rational angles. Pi comes from
//! a Machin-type formula with alternating-series bracketing; the cosine
//! uses Taylor partial sums with an explicit geometric tail bound. All
//! endpoints are exact rationals, so no rounding direction analysis is
//! required anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub(crate) struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub(crate) fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub(crate) fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub(crate) fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub(crate) fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub(crate) fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    /// Multiplication by an exact rational.
    pub(crate) fn scale(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }
}

fn two_pow_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// atan(1/x) enclosed by consecutive partial sums of the alternating
/// Gregory series.
fn atan_inv(x: i64, bits: u32) -> RatInterval {
    let eps = two_pow_neg(bits);
    let xr = BigRational::from_integer(BigInt::from(x));
    let x2 = &xr * &xr;
    let mut term = BigRational::one() / xr; // 1/(x^(2i+1)(2i+1)) numerator part
    let mut power = term.clone();
    let mut sum = BigRational::zero();
    let mut prev;
    let mut i: u64 = 0;
    loop {
        prev = sum.clone();
        if i % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if term < eps {
            break;
        }
        i += 1;
        power = &power / &x2;
        term = &power / BigRational::from_integer(BigInt::from(2 * i + 1));
    }
    // Consecutive partial sums bracket the limit.
    if prev <= sum {
        RatInterval::new(prev, sum)
    } else {
        RatInterval::new(sum, prev)
    }
}

/// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
fn pi_enclosure(bits: u32) -> RatInterval {
    let a = atan_inv(5, bits + 8).scale_int(16);
    let b = atan_inv(239, bits + 8).scale_int(4);
    a.add(&b.neg())
}

/// cos at the exact rational point u in [0, 2], with a certified tail
/// bound: |cos u - S_T| <= 2 * term_T once terms decrease geometrically.
fn cos_point(u: &BigRational, bits: u32) -> RatInterval {
    let eps = two_pow_neg(bits);
    let u2 = u * u;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut i: u64 = 0;
    loop {
        if i % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        i += 1;
        term = &term * &u2
            / BigRational::from_integer(BigInt::from((2 * i - 1) * (2 * i)));
        // After u^2 < (2i+1)(2i+2)/2 the tail is dominated by a geometric
        // series with ratio <= 1/2.
        if term < eps && u2 < BigRational::from_integer(BigInt::from((2 * i + 1) * (2 * i + 2) / 2)) {
            break;
        }
    }
    let bound = &term + &term;
    RatInterval::new(&sum - &bound, &sum + &bound)
}

/// Certified enclosure of cos(pi * num / den) for 0 <= num < 2*den.
///
/// The angle is reduced exactly in units of pi before any approximation:
/// cos(pi t) = cos(pi (2 - t)) and cos(pi t) = -cos(pi (1 - t)) bring t
/// into [0, 1/2], where cosine is decreasing and the pi enclosure can be
/// applied monotonically.
pub(crate) fn cos_pi_rational(num: u32, den: u32, bits: u32) -> RatInterval {
    debug_assert!(den > 0 && (num as u64) < 2 * den as u64);
    let mut t = BigRational::new(BigInt::from(num), BigInt::from(den));
    let one = BigRational::one();
    let two = &one + &one;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if t > one {
        t = &two - &t;
    }
    let mut negate = false;
    if t > half {
        t = &one - &t;
        negate = true;
    }
    // Now 0 <= t <= 1/2; u = pi*t lies in [0, pi/2] where cos decreases.
    let pi = pi_enclosure(bits);
    let u_lo = pi.lo() * &t;
    let u_hi = pi.hi() * &t;
    let at_hi = cos_point(&u_hi, bits);
    let at_lo = cos_point(&u_lo, bits);
    let enclosure = RatInterval::new(
        at_hi.lo().clone().min(at_lo.lo().clone()),
        at_lo.hi().clone().max(at_hi.hi().clone()),
    );
    if negate {
        enclosure.neg()
    } else {
        enclosure
    }
}

#[cfg(test)]
fn enclosure_width(iv: &RatInterval) -> BigRational {
    iv.hi() - iv.lo()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_enclosure_brackets_pi() {
        let pi = pi_enclosure(64);
        assert!(*pi.lo() > rat(3141592653589793238, 1_000_000_000_000_000_000));
        assert!(*pi.hi() < rat(3141592653589793239, 1_000_000_000_000_000_000));
    }

    #[test]
    fn cosine_special_angles() {
        // cos(0) = 1
        let c = cos_pi_rational(0, 7, 64);
        assert!(*c.lo() <= BigRational::one() && BigRational::one() <= *c.hi());
        // cos(pi) = -1
        let c = cos_pi_rational(7, 7, 64);
        assert!(*c.lo() <= -BigRational::one() && -BigRational::one() <= *c.hi());
        // cos(pi/2) = 0: enclosure must contain zero and be tight.
        let c = cos_pi_rational(5, 10, 128);
        assert!(c.lo().is_negative() && !c.hi().is_negative());
        assert!(enclosure_width(&c) < rat(1, 1 << 40));
        // cos(pi/3) = 1/2
        let c = cos_pi_rational(2, 6, 64);
        assert!(*c.lo() < rat(1, 2) && rat(1, 2) < *c.hi());
        // cos(4*pi/3) = -1/2 (angle beyond pi reduces exactly)
        let c = cos_pi_rational(8, 6, 64);
        assert!(*c.lo() < rat(-1, 2) && rat(-1, 2) < *c.hi());
    }

    #[test]
    fn widths_shrink_with_precision() {
        let wide = enclosure_width(&cos_pi_rational(3, 11, 64));
        let narrow = enclosure_width(&cos_pi_rational(3, 11, 256));
        assert!(narrow < wide);
        assert!(narrow < rat(1, 1 << 62) * rat(1, 1 << 62));
    }
}
