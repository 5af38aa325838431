//! Exact-rational envelopes for `p_d(n)` and the explicit thresholds on
//! `d` that force the sign of `Delta_d(n)`.
//!
//! The envelopes come from the dominant partition products: with `M` the
//! maximum of `m_1 ... m_k` over partitions of `n`,
//!
//! ```text
//! n = 0 mod 3:   M^{d-1} / (n/3)!           < p_d(n) <= M^{d-1} p_1(n)
//! n = 1 mod 3:   3 M^{d-1} / (2 ((n-4)/3)!) < p_d(n) <= M^{d-1} p_1(n)
//! n = 2 mod 3:   M^{d-1} / ((n-2)/3)!       < p_d(n) <= M^{d-1} p_1(n)
//! ```
//!
//! and, for `n = 2 mod 3`, `n >= 8`, the sharper upper bound
//! `M^{d-1}/((n-2)/3)! + S^{d-1} p_1(n)` with `S` the second-largest
//! product. [`bound_ratio_certificate`] combines these envelopes by exact
//! cross-multiplied comparison to certify the sign of `Delta_d(n)` without
//! ever computing `p_d` itself.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hp::{ln_interval, rational, FixedInterval};
use crate::maxprod::{max_product_closed, second_max_product_closed};
use crate::series::CoeffRow;

/// Exact-rational lower/upper envelope for one `(n, d)`.
#[derive(Clone, Debug)]
pub struct BoundSet {
    pub n: u64,
    pub d: u32,
    pub residue: u8,
    pub lower: BigRational,
    pub upper: BigRational,
    /// Present exactly when `residue == 2` and `n >= 8`.
    pub improved_upper: Option<BigRational>,
}

fn factorial(k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

fn big_ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn from_big(value: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// The residue-class envelope for `p_d(n)`, `n >= 2`, `d >= 1`.
pub fn pd_bounds(n: u64, d: u32, p1_row: &CoeffRow) -> Result<BoundSet> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "pd_bounds",
            n,
            requires: "n >= 2",
        });
    }
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "pd_bounds",
            n: d as u64,
            requires: "d >= 1",
        });
    }
    if p1_row.seq().as_power_d() != Some(1) {
        return Err(Error::RowSequenceMismatch {
            expected: "power(d=1)".into(),
            found: p1_row.seq().to_string(),
        });
    }
    let residue = (n % 3) as u8;
    // The residue-1 form needs (n-4)/3 >= 0; together with n >= 2 the class
    // starts at n = 4, but the floor is enforced explicitly.
    if residue == 1 && n < 4 {
        return Err(Error::OutOfRange {
            what: "pd_bounds",
            n,
            requires: "n >= 4 when n = 1 mod 3",
        });
    }
    let p1_n = p1_row.coeff(n as usize)?.clone();
    let max_pow = max_product_closed(n)?.pow(d - 1);

    let (lower, upper, improved_upper) = match residue {
        0 => (
            big_ratio(max_pow.clone(), factorial(n / 3)),
            from_big(max_pow * p1_n),
            None,
        ),
        1 => (
            big_ratio(
                BigUint::from(3u32) * &max_pow,
                BigUint::from(2u32) * factorial((n - 4) / 3),
            ),
            from_big(max_pow * p1_n),
            None,
        ),
        _ => {
            let fact = factorial((n - 2) / 3);
            let lower = big_ratio(max_pow.clone(), fact.clone());
            let improved = if n >= 8 {
                let second_pow = second_max_product_closed(n)?.pow(d - 1);
                Some(big_ratio(max_pow.clone(), fact) + from_big(second_pow * &p1_n))
            } else {
                None
            };
            (lower, from_big(max_pow * p1_n), improved)
        }
    };
    debug_assert!(lower < upper);
    Ok(BoundSet {
        n,
        d,
        residue,
        lower,
        upper,
        improved_upper,
    })
}

/// Outcome of the envelope-only sign test for `Delta_d(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `Delta_d(n) > 0` is forced by the envelopes.
    CertifiedPositive,
    /// `Delta_d(n) < 0` is forced by the envelopes.
    CertifiedNegative,
    /// The envelope chain does not decide at this `(n, d)`.
    Inconclusive,
}

/// `(num/den) * base^{d-1}` as an exact rational.
fn coef_pow(num: u64, den: u64, base: u64, d: u32) -> BigRational {
    rational(num as i64, den as i64) * from_big(BigUint::from(base).pow(d - 1))
}

/// Certify the sign of `Delta_d(n)` from the envelopes alone, never from
/// the true coefficients. For `n = 0 mod 3` only a positive sign can be
/// certified; for `n = 1, 2 mod 3` only a negative one.
///
/// `n = 8` uses a dedicated chain: the generic residue-2 comparison
/// degenerates there (the leading terms cancel exactly), so the decision
/// is made against the three-term envelope built from the products
/// 18, 16, 15 together with sharper floors for `p_d(7)` and `p_d(9)`.
pub fn bound_ratio_certificate(n: u64, d: u32, p1_row: &CoeffRow) -> Result<Certificate> {
    if n < 6 {
        return Err(Error::OutOfRange {
            what: "bound_ratio_certificate",
            n,
            requires: "n >= 6",
        });
    }
    // The neighbours' bounds need p_1 up to n + 1.
    p1_row.coeff(n as usize + 1)?;

    match n % 3 {
        0 => {
            let center = pd_bounds(n, d, p1_row)?;
            let left = pd_bounds(n - 1, d, p1_row)?;
            let right = pd_bounds(n + 1, d, p1_row)?;
            if &center.lower * &center.lower >= left.upper * right.upper {
                Ok(Certificate::CertifiedPositive)
            } else {
                Ok(Certificate::Inconclusive)
            }
        }
        1 => {
            let center = pd_bounds(n, d, p1_row)?;
            let left = pd_bounds(n - 1, d, p1_row)?;
            let right = pd_bounds(n + 1, d, p1_row)?;
            if &center.upper * &center.upper <= left.lower * right.lower {
                Ok(Certificate::CertifiedNegative)
            } else {
                Ok(Certificate::Inconclusive)
            }
        }
        _ if n == 8 => {
            let p7_floor = coef_pow(3, 2, 12, d);
            let p9_floor = coef_pow(1, 6, 27, d) + coef_pow(7, 6, 24, d);
            let p8_ceiling =
                coef_pow(1, 2, 18, d) + coef_pow(25, 24, 16, d) + coef_pow(21, 1, 15, d);
            if p7_floor * p9_floor >= &p8_ceiling * &p8_ceiling {
                Ok(Certificate::CertifiedNegative)
            } else {
                Ok(Certificate::Inconclusive)
            }
        }
        _ => {
            let center = pd_bounds(n, d, p1_row)?;
            let improved = center.improved_upper.expect("residue 2, n >= 11");
            let left = pd_bounds(n - 1, d, p1_row)?;
            let right = pd_bounds(n + 1, d, p1_row)?;
            if &improved * &improved <= left.lower * right.lower {
                Ok(Certificate::CertifiedNegative)
            } else {
                Ok(Certificate::Inconclusive)
            }
        }
    }
}

/// The eight named thresholds, indexed by `n mod 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantKind {
    C0,
    C1,
    C2,
    C1Tilde,
    C2Tilde,
    C0Star,
    C1Star,
    C2Star,
}

impl ConstantKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstantKind::C0 => "C0",
            ConstantKind::C1 => "C1",
            ConstantKind::C2 => "C2",
            ConstantKind::C1Tilde => "C1_tilde",
            ConstantKind::C2Tilde => "C2_tilde",
            ConstantKind::C0Star => "C0_star",
            ConstantKind::C1Star => "C1_star",
            ConstantKind::C2Star => "C2_star",
        }
    }

    /// The residue class this constant applies to.
    pub fn residue(self) -> u8 {
        match self {
            ConstantKind::C0 | ConstantKind::C0Star => 0,
            ConstantKind::C1 | ConstantKind::C1Tilde | ConstantKind::C1Star => 1,
            ConstantKind::C2 | ConstantKind::C2Tilde | ConstantKind::C2Star => 2,
        }
    }
}

/// All kinds, in report order.
pub const CONSTANT_KINDS: [ConstantKind; 8] = [
    ConstantKind::C0,
    ConstantKind::C1,
    ConstantKind::C2,
    ConstantKind::C1Tilde,
    ConstantKind::C2Tilde,
    ConstantKind::C0Star,
    ConstantKind::C1Star,
    ConstantKind::C2Star,
];

/// A threshold value together with its integer ceiling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConstantValue {
    pub value: f64,
    pub ceiling: u64,
}

/// The thresholds applicable at one `n` (`n >= 6`).
#[derive(Clone, Debug, Default)]
pub struct ThresholdConstants {
    pub n: u64,
    pub c0: Option<ConstantValue>,
    pub c1: Option<ConstantValue>,
    pub c2: Option<ConstantValue>,
    pub c1_tilde: Option<ConstantValue>,
    pub c2_tilde: Option<ConstantValue>,
    pub c0_star: Option<ConstantValue>,
    pub c1_star: Option<ConstantValue>,
    pub c2_star: Option<ConstantValue>,
}

impl ThresholdConstants {
    pub fn get(&self, kind: ConstantKind) -> Option<ConstantValue> {
        match kind {
            ConstantKind::C0 => self.c0,
            ConstantKind::C1 => self.c1,
            ConstantKind::C2 => self.c2,
            ConstantKind::C1Tilde => self.c1_tilde,
            ConstantKind::C2Tilde => self.c2_tilde,
            ConstantKind::C0Star => self.c0_star,
            ConstantKind::C1Star => self.c1_star,
            ConstantKind::C2Star => self.c2_star,
        }
    }

    /// Populated constants in report order.
    pub fn entries(&self) -> Vec<(ConstantKind, ConstantValue)> {
        CONSTANT_KINDS
            .iter()
            .filter_map(|&k| self.get(k).map(|v| (k, v)))
            .collect()
    }

    /// The sign-forcing threshold of the main sandwich argument for this
    /// residue class (C0, C1, or C2).
    pub fn primary(&self) -> ConstantValue {
        self.c0
            .or(self.c1)
            .or(self.c2)
            .expect("one residue applies")
    }
}

fn constant_f64(kind: ConstantKind, n: u64) -> f64 {
    let nf = n as f64;
    let ln98 = (9.0f64 / 8.0).ln();
    match kind {
        ConstantKind::C0 => 1.0 + 2.0 * (2.0f64.ln() + (nf / 3.0).ln() / 3.0) / ln98 * nf,
        ConstantKind::C1 => 1.0 + 2.0 * (2.0f64.ln() + ((nf - 1.0) / 3.0).ln() / 3.0) / ln98 * nf,
        ConstantKind::C2 => 1.0 + (3.0f64.ln() + ((nf + 1.0) / 3.0).ln() / 3.0) / ln98 * nf,
        ConstantKind::C1Tilde => 1.0 + 6.0 * (1.0 + (nf - 1.0).ln()) * nf,
        ConstantKind::C2Tilde => 1.0 + 3.0 * (3.0 + (nf + 1.0).ln()) * nf,
        ConstantKind::C0Star => 1.0 + 5.67 * (1.0 + nf.ln()) * nf,
        ConstantKind::C1Star => 1.0 + 5.67 * (1.0 + (nf - 1.0).ln()) * nf,
        ConstantKind::C2Star => 1.0 + 2.84 * (2.2 + (nf + 1.0).ln()) * nf,
    }
}

/// Rigorous enclosure of a threshold constant at the given precision.
fn constant_interval(kind: ConstantKind, n: u64, prec: u32) -> FixedInterval {
    let one = FixedInterval::from_u64(1, prec);
    let n_i64 = n as i64;
    match kind {
        ConstantKind::C0 | ConstantKind::C1 => {
            let arg = if kind == ConstantKind::C0 {
                rational(n_i64, 3)
            } else {
                rational(n_i64 - 1, 3)
            };
            let ln2 = ln_interval(&rational(2, 1), prec);
            let ln98 = ln_interval(&rational(9, 8), prec);
            let inner = ln2.add(&ln_interval(&arg, prec).mul_rational(&rational(1, 3)));
            one.add(&inner.div(&ln98).mul_u64(2 * n))
        }
        ConstantKind::C2 => {
            let ln3 = ln_interval(&rational(3, 1), prec);
            let ln98 = ln_interval(&rational(9, 8), prec);
            let inner =
                ln3.add(&ln_interval(&rational(n_i64 + 1, 3), prec).mul_rational(&rational(1, 3)));
            one.add(&inner.div(&ln98).mul_u64(n))
        }
        ConstantKind::C1Tilde => {
            let inner = one.add(&ln_interval(&rational(n_i64 - 1, 1), prec));
            one.add(&inner.mul_u64(6 * n))
        }
        ConstantKind::C2Tilde => {
            let inner =
                FixedInterval::from_u64(3, prec).add(&ln_interval(&rational(n_i64 + 1, 1), prec));
            one.add(&inner.mul_u64(3 * n))
        }
        ConstantKind::C0Star => {
            let inner = one.add(&ln_interval(&rational(n_i64, 1), prec));
            one.add(&inner.mul_u64(n).mul_rational(&rational(567, 100)))
        }
        ConstantKind::C1Star => {
            let inner = one.add(&ln_interval(&rational(n_i64 - 1, 1), prec));
            one.add(&inner.mul_u64(n).mul_rational(&rational(567, 100)))
        }
        ConstantKind::C2Star => {
            let inner = FixedInterval::from_rational(&rational(11, 5), prec)
                .add(&ln_interval(&rational(n_i64 + 1, 1), prec));
            one.add(&inner.mul_u64(n).mul_rational(&rational(284, 100)))
        }
    }
}

/// Ceiling of a constant derived purely from rigorous enclosures, doubling
/// the working precision until the enclosure pins a single ceiling.
pub fn constant_ceiling_hp(kind: ConstantKind, n: u64, precision_bits: u32) -> u64 {
    let mut bits = precision_bits.max(32);
    loop {
        if let Some(c) = constant_interval(kind, n, bits).unambiguous_ceiling() {
            return c;
        }
        bits *= 2;
        assert!(bits <= 1 << 16, "ceiling undecidable at 65536 bits");
    }
}

/// Near-integer guard: floating point decides the ceiling only when the
/// value is comfortably far from an integer; otherwise escalate to the
/// enclosure path.
fn guarded_constant(kind: ConstantKind, n: u64) -> ConstantValue {
    let value = constant_f64(kind, n);
    let distance = (value - value.round()).abs();
    let tolerance = 1e-9f64.max(value.abs() * 1e-12);
    let ceiling = if distance < tolerance {
        constant_ceiling_hp(kind, n, 128)
    } else {
        value.ceil() as u64
    };
    ConstantValue { value, ceiling }
}

/// The threshold constants applicable to `n` (`n >= 6`), with ceilings.
pub fn threshold_constants(n: u64) -> Result<ThresholdConstants> {
    if n < 6 {
        return Err(Error::OutOfRange {
            what: "threshold_constants",
            n,
            requires: "n >= 6",
        });
    }
    let mut out = ThresholdConstants {
        n,
        ..ThresholdConstants::default()
    };
    match n % 3 {
        0 => {
            out.c0 = Some(guarded_constant(ConstantKind::C0, n));
            out.c0_star = Some(guarded_constant(ConstantKind::C0Star, n));
        }
        1 => {
            out.c1 = Some(guarded_constant(ConstantKind::C1, n));
            out.c1_tilde = Some(guarded_constant(ConstantKind::C1Tilde, n));
            out.c1_star = Some(guarded_constant(ConstantKind::C1Star, n));
        }
        _ => {
            out.c2 = Some(guarded_constant(ConstantKind::C2, n));
            out.c2_tilde = Some(guarded_constant(ConstantKind::C2Tilde, n));
            out.c2_star = Some(guarded_constant(ConstantKind::C2Star, n));
        }
    }
    Ok(out)
}

/// Result of [`dominance_check`] over an `n` interval.
#[derive(Clone, Debug)]
pub struct DominanceReport {
    pub n_lo: u64,
    pub n_hi: u64,
    pub checked: u64,
    /// `n` where `C*_r(n) > C_r(n)` failed; expected empty.
    pub star_violations: Vec<u64>,
    /// `n` (residue 1 or 2) where the simple bound does NOT exceed the
    /// sandwich ceiling; observed empty, reported without being asserted.
    pub tilde_not_exceeding: Vec<u64>,
    /// Number of residue-1/2 points where the comparison applies.
    pub tilde_applicable: u64,
}

impl DominanceReport {
    pub fn star_dominance_holds(&self) -> bool {
        self.star_violations.is_empty()
    }
}

/// Check `C*_r(n) > C_r(n)` throughout `[n_lo, n_hi]` and report where the
/// simple bounds exceed the sandwich ceilings.
pub fn dominance_check(n_lo: u64, n_hi: u64) -> Result<DominanceReport> {
    if n_lo < 6 || n_hi > 1_000_000 || n_lo > n_hi {
        return Err(Error::OutOfRange {
            what: "dominance_check",
            n: n_lo,
            requires: "6 <= n_lo <= n_hi <= 10^6",
        });
    }
    let mut report = DominanceReport {
        n_lo,
        n_hi,
        checked: 0,
        star_violations: Vec::new(),
        tilde_not_exceeding: Vec::new(),
        tilde_applicable: 0,
    };
    for n in n_lo..=n_hi {
        let (c, star, tilde) = match n % 3 {
            0 => (ConstantKind::C0, ConstantKind::C0Star, None),
            1 => (
                ConstantKind::C1,
                ConstantKind::C1Star,
                Some(ConstantKind::C1Tilde),
            ),
            _ => (
                ConstantKind::C2,
                ConstantKind::C2Star,
                Some(ConstantKind::C2Tilde),
            ),
        };
        let c_val = constant_f64(c, n);
        let star_val = constant_f64(star, n);
        let margin = star_val - c_val;
        let star_ok = if margin.abs() < 1e-6 * c_val.abs().max(1.0) {
            // Too close to trust f64: settle with enclosures.
            interval_strictly_greater(star, c, n)
        } else {
            margin > 0.0
        };
        if !star_ok {
            report.star_violations.push(n);
        }
        if let Some(tilde) = tilde {
            report.tilde_applicable += 1;
            let ceiling = guarded_constant(c, n).ceiling;
            if constant_f64(tilde, n) <= ceiling as f64 {
                report.tilde_not_exceeding.push(n);
            }
        }
        report.checked += 1;
    }
    Ok(report)
}

fn interval_strictly_greater(a: ConstantKind, b: ConstantKind, n: u64) -> bool {
    let mut bits = 128;
    loop {
        let ia = constant_interval(a, n, bits);
        let ib = constant_interval(b, n, bits);
        if ia.strictly_greater_than(&ib) {
            return true;
        }
        if ib.strictly_greater_than(&ia) || bits >= 1 << 14 {
            return false;
        }
        bits *= 2;
    }
}

/// One row of the bounds-comparison series: pre-ceiling values, populated
/// only where the residue class applies.
#[derive(Clone, Debug)]
pub struct Figure2Row {
    pub n: u64,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub c1_tilde: Option<f64>,
    pub c2_tilde: Option<f64>,
}

/// The `(n, C_1, C_2, C~_1, C~_2)` series over `from..=to` with the given
/// step; values match [`threshold_constants`] pointwise.
pub fn figure2_data(from: u64, to: u64, step: u64) -> Result<Vec<Figure2Row>> {
    if from < 6 || from > to || step == 0 {
        return Err(Error::OutOfRange {
            what: "figure2_data",
            n: from,
            requires: "6 <= from <= to, step >= 1",
        });
    }
    let mut rows = Vec::new();
    let mut n = from;
    while n <= to {
        let row = match n % 3 {
            1 => Figure2Row {
                n,
                c1: Some(constant_f64(ConstantKind::C1, n)),
                c2: None,
                c1_tilde: Some(constant_f64(ConstantKind::C1Tilde, n)),
                c2_tilde: None,
            },
            2 => Figure2Row {
                n,
                c1: None,
                c2: Some(constant_f64(ConstantKind::C2, n)),
                c1_tilde: None,
                c2_tilde: Some(constant_f64(ConstantKind::C2Tilde, n)),
            },
            _ => Figure2Row {
                n,
                c1: None,
                c2: None,
                c1_tilde: None,
                c2_tilde: None,
            },
        };
        rows.push(row);
        n += step;
    }
    Ok(rows)
}

/// CSV form of [`figure2_data`], empty cells where the residue class does
/// not apply.
pub fn figure2_csv(rows: &[Figure2Row]) -> String {
    let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from("n,C1,C2,C1_tilde,C2_tilde\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.n,
            cell(row.c1),
            cell(row.c2),
            cell(row.c1_tilde),
            cell(row.c2_tilde)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{compute_row, ExponentSequence};

    fn p1_row(n_max: usize) -> CoeffRow {
        compute_row(&ExponentSequence::PowerFamily(1), n_max).unwrap()
    }

    #[test]
    fn bounds_reference_values() {
        let row = p1_row(12);
        let b = pd_bounds(6, 2, &row).unwrap();
        assert_eq!(b.lower, rational(9, 2));
        assert_eq!(b.upper, rational(99, 1));
        assert!(b.improved_upper.is_none());

        let b8 = pd_bounds(8, 2, &row).unwrap();
        assert_eq!(b8.improved_upper.unwrap(), rational(361, 1));

        // d = 1 collapses every power factor to 1.
        for n in [6u64, 7, 8, 9, 11] {
            let b = pd_bounds(n, 1, &row).unwrap();
            let fact = |k: u64| BigInt::from(factorial(k));
            let expected = match n % 3 {
                0 => BigRational::new(BigInt::one(), fact(n / 3)),
                1 => BigRational::new(BigInt::from(3), BigInt::from(2) * fact((n - 4) / 3)),
                _ => BigRational::new(BigInt::one(), fact((n - 2) / 3)),
            };
            assert_eq!(b.lower, expected, "n={n}");
            assert_eq!(
                b.upper,
                BigRational::from_integer(BigInt::from(row.coeffs()[n as usize].clone()))
            );
        }
    }

    #[test]
    fn bounds_argument_validation() {
        let row = p1_row(10);
        assert!(pd_bounds(1, 2, &row).is_err());
        assert!(pd_bounds(40, 2, &row).is_err()); // row too short
        let wrong = compute_row(&ExponentSequence::PowerFamily(2), 10).unwrap();
        assert!(matches!(
            pd_bounds(6, 2, &wrong),
            Err(Error::RowSequenceMismatch { .. })
        ));
    }

    #[test]
    fn sandwich_holds_for_small_cases() {
        let row = p1_row(25);
        for d in 1..=6u32 {
            let pd = compute_row(&ExponentSequence::PowerFamily(d), 24).unwrap();
            for n in 2..=24u64 {
                let b = pd_bounds(n, d, &row).unwrap();
                let exact =
                    BigRational::from_integer(BigInt::from(pd.coeffs()[n as usize].clone()));
                assert!(b.lower < exact, "lower n={n} d={d}");
                assert!(exact <= b.upper, "upper n={n} d={d}");
                if let Some(improved) = b.improved_upper {
                    assert!(exact <= improved, "improved n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn threshold_reference_ceilings() {
        let t7 = threshold_constants(7).unwrap();
        assert_eq!(t7.c1.unwrap().ceiling, 111);
        assert_eq!(t7.c1_tilde.unwrap().ceiling, 119);

        let t8 = threshold_constants(8).unwrap();
        assert_eq!(t8.c2.unwrap().ceiling, 101);
        assert_eq!(t8.c2_tilde.unwrap().ceiling, 126);

        let t58 = threshold_constants(58).unwrap();
        assert_eq!(t58.c1.unwrap().ceiling, 1651);
        let t59 = threshold_constants(59).unwrap();
        assert_eq!(t59.c2.unwrap().ceiling, 1052);

        assert!(threshold_constants(5).is_err());
    }

    #[test]
    fn hp_ceilings_stable_under_precision_doubling() {
        for n in 6..=80u64 {
            let kinds: &[ConstantKind] = match n % 3 {
                0 => &[ConstantKind::C0, ConstantKind::C0Star],
                1 => &[
                    ConstantKind::C1,
                    ConstantKind::C1Tilde,
                    ConstantKind::C1Star,
                ],
                _ => &[
                    ConstantKind::C2,
                    ConstantKind::C2Tilde,
                    ConstantKind::C2Star,
                ],
            };
            let tc = threshold_constants(n).unwrap();
            for &kind in kinds {
                let c128 = constant_ceiling_hp(kind, n, 128);
                let c256 = constant_ceiling_hp(kind, n, 256);
                assert_eq!(c128, c256, "{} n={n}", kind.name());
                assert_eq!(tc.get(kind).unwrap().ceiling, c128, "{} n={n}", kind.name());
            }
        }
    }

    #[test]
    fn certificate_reference_points() {
        let row = p1_row(60);
        // Residue 0 at its sandwich threshold.
        let c0_9 = threshold_constants(9).unwrap().c0.unwrap().ceiling as u32;
        assert_eq!(c0_9, 163);
        assert_eq!(
            bound_ratio_certificate(9, c0_9, &row).unwrap(),
            Certificate::CertifiedPositive
        );
        // Residue 1 at its sandwich threshold.
        assert_eq!(
            bound_ratio_certificate(7, 111, &row).unwrap(),
            Certificate::CertifiedNegative
        );
        // Loose bounds cannot decide d = 1 even though n = 7 is an exception.
        assert_eq!(
            bound_ratio_certificate(7, 1, &row).unwrap(),
            Certificate::Inconclusive
        );
        // n = 8 goes through the dedicated chain.
        assert_eq!(
            bound_ratio_certificate(8, 126, &row).unwrap(),
            Certificate::CertifiedNegative
        );
        assert_eq!(
            bound_ratio_certificate(8, 9, &row).unwrap(),
            Certificate::Inconclusive
        );
        assert!(bound_ratio_certificate(5, 10, &row).is_err());
    }

    #[test]
    fn dominance_reference_ranges() {
        let r = dominance_check(6, 59).unwrap();
        assert!(r.star_dominance_holds());
        assert!(r.tilde_not_exceeding.is_empty());
        assert_eq!(r.checked, 54);

        let single = dominance_check(7, 7).unwrap();
        assert!(single.star_dominance_holds());
        assert_eq!(single.tilde_applicable, 1);
        assert!(single.tilde_not_exceeding.is_empty()); // 119 > 111 region

        assert!(dominance_check(5, 10).is_err());
        assert!(dominance_check(6, 2_000_000).is_err());
    }

    #[test]
    fn figure2_matches_threshold_constants() {
        let rows = figure2_data(6, 20, 1).unwrap();
        assert_eq!(rows.len(), 15);
        for row in &rows {
            let tc = threshold_constants(row.n).unwrap();
            match row.n % 3 {
                1 => {
                    assert_eq!(row.c1.unwrap(), tc.c1.unwrap().value);
                    assert_eq!(row.c1_tilde.unwrap(), tc.c1_tilde.unwrap().value);
                    assert!(row.c2.is_none());
                }
                2 => {
                    assert_eq!(row.c2.unwrap(), tc.c2.unwrap().value);
                    assert_eq!(row.c2_tilde.unwrap(), tc.c2_tilde.unwrap().value);
                    assert!(row.c1.is_none());
                }
                _ => {
                    assert!(row.c1.is_none() && row.c2.is_none());
                }
            }
        }
        assert_eq!(threshold_constants(10).unwrap().c1.unwrap().ceiling, 181);
        assert_eq!(
            threshold_constants(10).unwrap().c1_tilde.unwrap().ceiling,
            193
        );
        assert_eq!(threshold_constants(20).unwrap().c2.unwrap().ceiling, 298);
        assert_eq!(
            threshold_constants(20).unwrap().c2_tilde.unwrap().ceiling,
            364
        );

        let csv = figure2_csv(&rows);
        assert!(csv.starts_with("n,C1,C2,C1_tilde,C2_tilde\n"));
        assert_eq!(csv.lines().count(), 16);
    }
}
