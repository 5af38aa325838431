//! Directed-rounding fixed-point intervals for the threshold constants.
//!
//! Ceilings of the threshold constants are pass/fail data, so when a
//! floating-point value lands suspiciously close to an integer the ceiling
//! is re-derived from a rigorous enclosure: every operation rounds the
//! lower endpoint down and the upper endpoint up, and `ln` carries an
//! explicit truncation bound for its series tail.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Enclosure `[lo, hi] / 2^prec` of a nonnegative real.
#[derive(Clone, Debug)]
pub(crate) struct FixedInterval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn ceil_shr(x: &BigInt, bits: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    (x + ((BigInt::one() << bits) - 1)) >> bits
}

fn ceil_div(x: &BigInt, y: &BigInt) -> BigInt {
    debug_assert!(!x.is_negative() && y.is_positive());
    ((x + y) - BigInt::one()).div_floor(y)
}

impl FixedInterval {
    pub fn from_rational(x: &BigRational, prec: u32) -> Self {
        assert!(!x.is_negative());
        let scaled_num = x.numer() << prec;
        FixedInterval {
            lo: scaled_num.div_floor(x.denom()),
            hi: ceil_div(&scaled_num, x.denom()),
            prec,
        }
    }

    pub fn from_u64(v: u64, prec: u32) -> Self {
        let exact = BigInt::from(v) << prec;
        FixedInterval {
            lo: exact.clone(),
            hi: exact,
            prec,
        }
    }

    fn zero(prec: u32) -> Self {
        FixedInterval {
            lo: BigInt::zero(),
            hi: BigInt::zero(),
            prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        FixedInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        FixedInterval {
            lo: (&self.lo * &other.lo) >> self.prec,
            hi: ceil_shr(&(&self.hi * &other.hi), self.prec),
            prec: self.prec,
        }
    }

    /// Division; the divisor interval must be strictly positive.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert_eq!(self.prec, other.prec);
        assert!(other.lo.is_positive());
        FixedInterval {
            lo: (&self.lo << self.prec).div_floor(&other.hi),
            hi: ceil_div(&(&self.hi << self.prec), &other.lo),
            prec: self.prec,
        }
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        FixedInterval {
            lo: &self.lo * k,
            hi: &self.hi * k,
            prec: self.prec,
        }
    }

    /// Exact-rational scaling (used for coefficients like 567/100).
    pub fn mul_rational(&self, r: &BigRational) -> Self {
        assert!(!r.is_negative());
        FixedInterval {
            lo: (&self.lo * r.numer()).div_floor(r.denom()),
            hi: ceil_div(&(&self.hi * r.numer()), r.denom()),
            prec: self.prec,
        }
    }

    fn div_u64(&self, k: u64) -> Self {
        let k = BigInt::from(k);
        FixedInterval {
            lo: self.lo.div_floor(&k),
            hi: ceil_div(&self.hi, &k),
            prec: self.prec,
        }
    }

    fn round_to(&self, prec: u32) -> Self {
        assert!(prec <= self.prec);
        let drop = self.prec - prec;
        FixedInterval {
            lo: &self.lo >> drop,
            hi: ceil_shr(&self.hi, drop),
            prec,
        }
    }

    /// Certain strict order: every value of `self` exceeds every value of
    /// `other`.
    pub fn strictly_greater_than(&self, other: &Self) -> bool {
        debug_assert_eq!(self.prec, other.prec);
        self.lo > other.hi
    }

    /// The common ceiling of every value in the enclosure, when unambiguous.
    pub fn unambiguous_ceiling(&self) -> Option<u64> {
        let scale = BigInt::one() << self.prec;
        let clo = ceil_div(&self.lo, &scale);
        let chi = ceil_div(&self.hi, &scale);
        if clo == chi {
            clo.to_u64()
        } else {
            None
        }
    }

    #[cfg(test)]
    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().expect("finite") / 2f64.powi(self.prec as i32)
    }

    #[cfg(test)]
    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().expect("finite") / 2f64.powi(self.prec as i32)
    }
}

/// `2 * atanh(y) = ln((1+y)/(1-y))` for rational `0 <= y <= 1/2`, with the
/// series tail absorbed into the upper endpoint.
fn ln_from_atanh(y: &BigRational, prec: u32) -> FixedInterval {
    assert!(!y.is_negative() && *y <= BigRational::new(BigInt::one(), BigInt::from(2)));
    if y.is_zero() {
        return FixedInterval::zero(prec);
    }
    let y_iv = FixedInterval::from_rational(y, prec);
    let y_sq = y_iv.mul(&y_iv);
    let mut sum = FixedInterval::zero(prec);
    let mut power = y_iv; // y^{2k+1}
    let mut odd = 1u64;
    loop {
        sum = sum.add(&power.div_u64(odd));
        power = power.mul(&y_sq);
        odd += 2;
        if power.hi <= BigInt::from(odd) {
            break;
        }
    }
    // Tail: sum_{j>k} y^{2j+1}/(2j+1) <= y^{2k+3} / ((2k+3)(1 - y^2)),
    // and 1/(1 - y^2) <= 4/3 <= 2 since y <= 1/2.
    let tail_hi = ceil_div(&(&power.hi * 2), &BigInt::from(odd)) + 1;
    FixedInterval {
        lo: &sum.lo * 2,
        hi: (&sum.hi + tail_hi) * 2,
        prec,
    }
}

/// Rigorous enclosure of `ln(x)` for rational `x >= 1`.
pub(crate) fn ln_interval(x: &BigRational, prec: u32) -> FixedInterval {
    assert!(*x >= BigRational::one(), "ln_interval requires x >= 1");
    let work = prec + 32;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut m = x.clone();
    let mut halvings = 0u64;
    while m >= two {
        m /= &two;
        halvings += 1;
    }
    // m in [1, 2) so y = (m-1)/(m+1) in [0, 1/3).
    let y = (&m - BigRational::one()) / (&m + BigRational::one());
    let mut result = ln_from_atanh(&y, work);
    if halvings > 0 {
        let ln2 = ln_from_atanh(&BigRational::new(BigInt::one(), BigInt::from(3)), work);
        result = result.add(&ln2.mul_u64(halvings));
    }
    result.round_to(prec)
}

pub(crate) fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
