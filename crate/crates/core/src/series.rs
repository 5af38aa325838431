//! Exact coefficient rows of infinite product generating functions.
//!
//! For an exponent sequence `alpha = (alpha_n)_{n>=1}` of nonnegative
//! integers, the coefficients `p_alpha(n)` are defined by
//!
//! ```text
//! 1 + sum_{n>=1} p_alpha(n) q^n  =  prod_{n>=1} (1 - q^n)^{-alpha_n}
//! ```
//!
//! The power family `alpha_n = n^{d-1}` yields `p_1 = ` the partition
//! function and `p_2 = ` the plane partition function.
//!
//! - [`compute_row`]: production path, the logarithmic-derivative recurrence
//!   `n * p(n) = sum_{j=1}^{n} c_j p(n-j)` with `c_j = sum_{t|j} t * alpha_t`
//!   (so `c_j = sigma_d(j)` for the power family). O(n^2) big-integer work.
//! - [`oracle_row`]: independent small-scale reference that sums
//!   `prod_v (c_v / v)^{e_v} / e_v!` over all partitions of `n` with exact
//!   rational arithmetic. Exponential; capped at [`ORACLE_CAP`].
//! - [`closed_form_pd`]: closed forms for `p_d(n)`, `n <= 8`.
//! - [`delta`]: the log-concavity discriminant
//!   `Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1)` with its sign class.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cache::RowCache;
use crate::error::{Error, Result};

/// Hard cap for [`oracle_row`]; partition enumeration is exponential.
pub const ORACLE_CAP: u64 = 24;

/// The exponent rule `n -> alpha_n`.
#[derive(Clone, Debug)]
pub enum ExponentSequence {
    /// `alpha_n = n^{d-1}` for `d >= 1`; `d = 1` is the all-ones sequence.
    PowerFamily(u32),
    /// An arbitrary rule returning a nonnegative integer for every `n >= 1`.
    Custom(CustomRule),
}

/// A user-supplied exponent rule. Negative values are rejected at
/// evaluation time with the offending index.
#[derive(Clone)]
pub struct CustomRule {
    eval: Arc<dyn Fn(u64) -> Result<BigInt> + Send + Sync>,
    label: String,
}

impl fmt::Debug for CustomRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomRule")
            .field("label", &self.label)
            .finish()
    }
}

impl CustomRule {
    pub fn new<F>(label: impl Into<String>, rule: F) -> Self
    where
        F: Fn(u64) -> BigInt + Send + Sync + 'static,
    {
        CustomRule {
            eval: Arc::new(move |n| Ok(rule(n))),
            label: label.into(),
        }
    }

    /// Rule backed by a finite term list `alpha_1, alpha_2, ...`.
    /// Evaluation past the end is an error, not zero.
    pub fn from_terms(terms: Vec<BigInt>) -> Self {
        let provided = terms.len();
        let label = format!("custom({provided} terms)");
        CustomRule {
            eval: Arc::new(move |n| {
                terms
                    .get(n as usize - 1)
                    .cloned()
                    .ok_or(Error::MissingAlpha { n, provided })
            }),
            label,
        }
    }
}

impl ExponentSequence {
    /// Evaluate `alpha_n` for `n >= 1`, rejecting negative custom values.
    pub fn alpha(&self, n: u64) -> Result<BigUint> {
        debug_assert!(n >= 1);
        match self {
            ExponentSequence::PowerFamily(d) => Ok(BigUint::from(n).pow(d - 1)),
            ExponentSequence::Custom(rule) => {
                let value = (rule.eval)(n)?;
                if value.is_negative() {
                    return Err(Error::NegativeAlpha { n });
                }
                Ok(value.to_biguint().expect("nonnegative"))
            }
        }
    }

    /// The power-family parameter, if this is a power sequence.
    pub fn as_power_d(&self) -> Option<u32> {
        match self {
            ExponentSequence::PowerFamily(d) => Some(*d),
            ExponentSequence::Custom(_) => None,
        }
    }
}

impl fmt::Display for ExponentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentSequence::PowerFamily(d) => write!(f, "power(d={d})"),
            ExponentSequence::Custom(rule) => write!(f, "{}", rule.label),
        }
    }
}

/// Exact nonnegative coefficients `p_alpha(0..=n_max)` for one sequence.
///
/// Rows are immutable once computed and cheap to share across threads.
#[derive(Clone, Debug)]
pub struct CoeffRow {
    seq: ExponentSequence,
    coeffs: Vec<BigUint>,
}

impl CoeffRow {
    pub fn seq(&self) -> &ExponentSequence {
        &self.seq
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `p_alpha(n)`, or an error when the row is too short.
    pub fn coeff(&self, n: usize) -> Result<&BigUint> {
        self.coeffs.get(n).ok_or(Error::RowTooShort {
            have: self.n_max(),
            need: n,
        })
    }

    /// A copy of the prefix `0..=n_max`.
    pub fn truncated(&self, n_max: usize) -> Result<CoeffRow> {
        if n_max > self.n_max() {
            return Err(Error::RowTooShort {
                have: self.n_max(),
                need: n_max,
            });
        }
        Ok(CoeffRow {
            seq: self.seq.clone(),
            coeffs: self.coeffs[..=n_max].to_vec(),
        })
    }

    /// Continue the recurrence from the existing prefix out to `n_max`.
    pub fn extended(&self, n_max: usize) -> Result<CoeffRow> {
        if n_max <= self.n_max() {
            return self.truncated(n_max);
        }
        let weights = log_derivative_weights(&self.seq, n_max as u64)?;
        let coeffs = extend_coeffs(self.coeffs.clone(), &weights, n_max);
        Ok(CoeffRow {
            seq: self.seq.clone(),
            coeffs,
        })
    }

    /// Build a row from parts already known to satisfy the recurrence
    /// (used by the file cache read path, which re-validates).
    pub(crate) fn from_parts(seq: ExponentSequence, coeffs: Vec<BigUint>) -> CoeffRow {
        assert!(!coeffs.is_empty());
        CoeffRow { seq, coeffs }
    }
}

/// `sigma_d(n) = sum_{t | n} t^d`, by direct divisor enumeration.
pub fn sigma(n: u64, d: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "sigma",
            n,
            requires: "n >= 1",
        });
    }
    let mut total = BigUint::zero();
    let mut t = 1u64;
    while t * t <= n {
        if n.is_multiple_of(t) {
            total += BigUint::from(t).pow(d);
            let s = n / t;
            if s != t {
                total += BigUint::from(s).pow(d);
            }
        }
        t += 1;
    }
    Ok(total)
}

/// `sigma_d(j)` for `j = 1..=n_max` via a divisor sieve: for each `t`,
/// add `t^d` to every multiple of `t`. Entry `j` lives at index `j - 1`.
pub fn sigma_table(n_max: u64, d: u32) -> Vec<BigUint> {
    let mut table = vec![BigUint::zero(); n_max as usize];
    for t in 1..=n_max {
        let td = BigUint::from(t).pow(d);
        let mut m = t;
        while m <= n_max {
            table[m as usize - 1] += &td;
            m += t;
        }
    }
    table
}

/// `c_j = sum_{t | j} t * alpha_t` for `j = 1..=n_max` (index `j - 1`).
/// For the power family this equals `sigma_d(j)`.
fn log_derivative_weights(seq: &ExponentSequence, n_max: u64) -> Result<Vec<BigUint>> {
    if let ExponentSequence::PowerFamily(d) = seq {
        return Ok(sigma_table(n_max, *d));
    }
    let mut table = vec![BigUint::zero(); n_max as usize];
    for t in 1..=n_max {
        let a = seq.alpha(t)?;
        if a.is_zero() {
            continue;
        }
        let ta = a * t;
        let mut m = t;
        while m <= n_max {
            table[m as usize - 1] += &ta;
            m += t;
        }
    }
    Ok(table)
}

fn extend_coeffs(mut coeffs: Vec<BigUint>, weights: &[BigUint], n_max: usize) -> Vec<BigUint> {
    coeffs.reserve(n_max + 1 - coeffs.len());
    for n in coeffs.len()..=n_max {
        let mut acc = BigUint::zero();
        for j in 1..=n {
            let w = &weights[j - 1];
            if !w.is_zero() {
                acc += w * &coeffs[n - j];
            }
        }
        // The product has integer coefficients, so n always divides the sum.
        let (q, r) = acc.div_rem(&BigUint::from(n));
        assert!(r.is_zero(), "recurrence sum at n = {n} not divisible by n");
        coeffs.push(q);
    }
    coeffs
}

/// Exact coefficients `p_alpha(0..=n_max)` by the logarithmic-derivative
/// recurrence `n * p(n) = sum_{j=1}^{n} c_j p(n-j)`.
pub fn compute_row(seq: &ExponentSequence, n_max: usize) -> Result<CoeffRow> {
    let weights = log_derivative_weights(seq, n_max as u64)?;
    let coeffs = extend_coeffs(vec![BigUint::one()], &weights, n_max);
    Ok(CoeffRow {
        seq: seq.clone(),
        coeffs,
    })
}

/// Independent reference for [`compute_row`] on small rows:
///
/// ```text
/// p_alpha(n) = sum over partitions of n, with distinct parts v of
///              multiplicity e:   prod_v (c_v / v)^e / e!
/// ```
///
/// evaluated in exact rational arithmetic; the result must clear to an
/// integer (asserted). Equivalent to summing `(1/k!) prod sigma_d(m_i)/m_i`
/// over compositions once arrangements are counted by multinomials.
pub fn oracle_row(seq: &ExponentSequence, n_max: usize) -> Result<CoeffRow> {
    oracle_row_with_cap(seq, n_max, ORACLE_CAP)
}

/// [`oracle_row`] with an explicit enumeration cap.
pub fn oracle_row_with_cap(seq: &ExponentSequence, n_max: usize, cap: u64) -> Result<CoeffRow> {
    if n_max as u64 > cap {
        return Err(Error::OracleCap {
            n_max: n_max as u64,
            cap,
        });
    }
    let weights = log_derivative_weights(seq, n_max as u64)?;
    let part_weights: Vec<BigRational> = weights
        .iter()
        .enumerate()
        .map(|(i, c)| BigRational::new(BigInt::from(c.clone()), BigInt::from(i as u64 + 1)))
        .collect();

    let mut coeffs = Vec::with_capacity(n_max + 1);
    coeffs.push(BigUint::one());
    for m in 1..=n_max {
        let total = partition_weight_sum(m, m, &part_weights);
        assert!(
            total.is_integer(),
            "oracle sum for n = {m} did not clear to an integer: {total}"
        );
        let value = total.to_integer();
        assert!(!value.is_negative());
        coeffs.push(value.to_biguint().expect("nonnegative"));
    }
    Ok(CoeffRow {
        seq: seq.clone(),
        coeffs,
    })
}

/// Sum of `prod_v w_v^{e_v} / e_v!` over partitions of `m` with parts
/// `<= max_part`; parts are chosen largest-first.
fn partition_weight_sum(m: usize, max_part: usize, w: &[BigRational]) -> BigRational {
    if m == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for v in (1..=max_part.min(m)).rev() {
        if w[v - 1].is_zero() {
            continue;
        }
        let mut factor = BigRational::one();
        for e in 1..=(m / v) {
            // factor = w_v^e / e!
            factor = factor * &w[v - 1] / BigRational::from_integer(BigInt::from(e));
            let rest = if v > 1 {
                partition_weight_sum(m - e * v, v - 1, w)
            } else if m == e {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            if !rest.is_zero() {
                total += &factor * rest;
            }
        }
    }
    total
}

/// Closed forms for `p_d(n)`, `0 <= n <= 8`, evaluated with exact rational
/// coefficients; the result always clears to an integer (asserted).
pub fn closed_form_pd(n: u32, d: u32) -> Result<BigUint> {
    if n > 8 {
        return Err(Error::OutOfRange {
            what: "closed_form_pd",
            n: n as u64,
            requires: "0 <= n <= 8 (no closed form beyond 8)",
        });
    }
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "closed_form_pd",
            n: d as u64,
            requires: "d >= 1",
        });
    }
    // Increments p_d(n) - p_d(n-1) as (numerator, denominator, base) terms
    // of coef * base^{d-1}; p_d(0) = p_d(1) = 1.
    const INCREMENTS: [&[(i64, i64, u64)]; 9] = [
        &[],
        &[],
        &[(1, 1, 2)],
        &[(1, 1, 3)],
        &[(3, 2, 4), (1, 2, 2)],
        &[(1, 1, 5), (1, 1, 6)],
        &[
            (1, 2, 9),
            (7, 6, 8),
            (1, 1, 6),
            (1, 2, 4),
            (1, 2, 3),
            (1, 3, 2),
        ],
        &[(3, 2, 12), (1, 1, 10), (1, 1, 7), (1, 2, 6)],
        &[
            (1, 2, 18),
            (25, 24, 16),
            (1, 1, 15),
            (1, 1, 12),
            (7, 4, 8),
            (1, 2, 6),
            (23, 24, 4),
            (1, 4, 2),
        ],
    ];
    let mut acc = BigRational::one();
    for increments in INCREMENTS.iter().take(n as usize + 1).skip(2) {
        for &(num, den, base) in *increments {
            let coef = BigRational::new(BigInt::from(num), BigInt::from(den));
            acc += coef * BigRational::from_integer(BigInt::from(BigUint::from(base).pow(d - 1)));
        }
    }
    assert!(acc.is_integer(), "closed form for n = {n} not integral");
    Ok(acc.to_integer().to_biguint().expect("positive"))
}

/// Three-way sign class of `Delta_d(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaClass {
    /// `Delta_d(n) > 0`
    LogConcave,
    /// `Delta_d(n) = 0`; never observed, surfaced loudly if it ever is.
    Flat,
    /// `Delta_d(n) < 0`: `n` is an exception for this `d`.
    StrictlyLogConvex,
}

impl DeltaClass {
    pub fn is_exception(self) -> bool {
        matches!(self, DeltaClass::StrictlyLogConvex)
    }
}

impl fmt::Display for DeltaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DeltaClass::LogConcave => "log-concave",
            DeltaClass::Flat => "flat",
            DeltaClass::StrictlyLogConvex => "strictly log-convex",
        };
        f.write_str(name)
    }
}

/// `Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1)` with its classification.
#[derive(Clone, Debug)]
pub struct DeltaClassification {
    pub n: u64,
    pub d: u32,
    pub delta: BigInt,
    pub class: DeltaClass,
}

/// Classify log-concavity at `n` from a power-family row covering `n + 1`.
pub fn delta(d: u32, n: u64, row: &CoeffRow) -> Result<DeltaClassification> {
    match row.seq().as_power_d() {
        Some(rd) if rd == d => {}
        _ => {
            return Err(Error::RowSequenceMismatch {
                expected: format!("power(d={d})"),
                found: row.seq().to_string(),
            })
        }
    }
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "delta",
            n,
            requires: "n >= 1",
        });
    }
    let idx = n as usize;
    if row.n_max() < idx + 1 {
        return Err(Error::RowTooShort {
            have: row.n_max(),
            need: idx + 1,
        });
    }
    let p = |i: usize| BigInt::from(row.coeffs()[i].clone());
    let delta = p(idx).pow(2) - p(idx - 1) * p(idx + 1);
    let class = if delta.is_positive() {
        DeltaClass::LogConcave
    } else if delta.is_zero() {
        log::warn!("flat point encountered: Delta_{d}({n}) = 0");
        DeltaClass::Flat
    } else {
        DeltaClass::StrictlyLogConvex
    };
    Ok(DeltaClassification { n, d, delta, class })
}

/// Least `d` in `(d_floor, d_cap]` with `Delta_d(n) < 0`, or `None` when no
/// such `d` exists in range (which asserts nothing beyond `d_cap`).
pub fn find_first_exception(cache: &RowCache, n: u64, d_floor: u32, d_cap: u32) -> Option<u32> {
    for d in d_floor + 1..=d_cap {
        let row = cache.row(d, n as usize + 1);
        let cls = delta(d, n, &row).expect("cached row covers n + 1");
        if cls.class.is_exception() {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power(d: u32) -> ExponentSequence {
        ExponentSequence::PowerFamily(d)
    }

    fn row_values(seq: &ExponentSequence, n_max: usize) -> Vec<u64> {
        compute_row(seq, n_max)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn sigma_small_values() {
        assert_eq!(sigma(1, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(sigma(1, 9).unwrap(), BigUint::from(1u32));
        assert_eq!(sigma(6, 1).unwrap(), BigUint::from(12u32));
        assert_eq!(sigma(4, 2).unwrap(), BigUint::from(21u32));
        assert!(sigma(0, 3).is_err());
    }

    #[test]
    fn sigma_table_matches_direct_sigma() {
        for &d in &[1u32, 2, 3, 7] {
            let table = sigma_table(200, d);
            for j in 1..=200u64 {
                assert_eq!(table[j as usize - 1], sigma(j, d).unwrap(), "j={j} d={d}");
            }
        }
        assert_eq!(
            sigma_table(3, 1),
            vec![
                BigUint::from(1u32),
                BigUint::from(3u32),
                BigUint::from(4u32)
            ]
        );
        assert_eq!(
            sigma_table(5, 2),
            [1u32, 5, 10, 21, 26].map(BigUint::from).to_vec()
        );
        assert_eq!(sigma_table(1, 7), vec![BigUint::from(1u32)]);
    }

    #[test]
    fn coefficient_rows_match_reference_values() {
        assert_eq!(
            row_values(&power(1), 10),
            vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        );
        assert_eq!(
            row_values(&power(2), 10),
            vec![1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]
        );
        assert_eq!(
            row_values(&power(3), 10),
            vec![1, 1, 5, 14, 40, 101, 266, 649, 1593, 3765, 8813]
        );
    }

    #[test]
    fn row_first_entries_are_one_and_alpha_one() {
        for d in 1..=6 {
            let row = compute_row(&power(d), 3).unwrap();
            assert_eq!(row.coeffs()[0], BigUint::one());
            assert_eq!(row.coeffs()[1], BigUint::one());
        }
        let custom = ExponentSequence::Custom(CustomRule::from_terms(
            [5, 0, 2].iter().map(|&v| BigInt::from(v)).collect(),
        ));
        let row = compute_row(&custom, 3).unwrap();
        assert_eq!(row.coeffs()[1], BigUint::from(5u32));
    }

    #[test]
    fn oracle_row_matches_reference_values() {
        let r1 = oracle_row(&power(1), 5).unwrap();
        assert_eq!(
            r1.coeffs().to_vec(),
            [1u32, 1, 2, 3, 5, 7].map(BigUint::from).to_vec()
        );
        let r2 = oracle_row(&power(2), 0).unwrap();
        assert_eq!(r2.coeffs().to_vec(), vec![BigUint::one()]);
        let r3 = oracle_row(&power(3), 8).unwrap();
        assert_eq!(r3.coeffs()[8], BigUint::from(1593u32));
    }

    #[test]
    fn oracle_row_rejects_large_rows() {
        match oracle_row(&power(1), 25) {
            Err(Error::OracleCap { n_max: 25, cap: 24 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn oracle_agrees_with_recurrence_for_small_d() {
        for d in 1..=4 {
            let fast = compute_row(&power(d), 14).unwrap();
            let slow = oracle_row(&power(d), 14).unwrap();
            assert_eq!(fast.coeffs(), slow.coeffs(), "d = {d}");
        }
    }

    #[test]
    fn custom_sequences_support_zero_terms() {
        // alpha identically zero: the empty product.
        let zero = ExponentSequence::Custom(CustomRule::new("zero", |_| BigInt::zero()));
        let row = compute_row(&zero, 6).unwrap();
        assert_eq!(row.coeffs()[0], BigUint::one());
        assert!(row.coeffs()[1..].iter().all(|c| c.is_zero()));
        let oracle = oracle_row(&zero, 6).unwrap();
        assert_eq!(row.coeffs(), oracle.coeffs());
    }

    #[test]
    fn custom_rule_negative_value_is_rejected_with_index() {
        let bad = ExponentSequence::Custom(CustomRule::new("bad", |n| {
            if n == 3 {
                BigInt::from(-1)
            } else {
                BigInt::one()
            }
        }));
        match compute_row(&bad, 5) {
            Err(Error::NegativeAlpha { n: 3 }) => {}
            other => panic!("expected NegativeAlpha at n = 3, got {other:?}"),
        }
        // Short rows never evaluate the offending index.
        assert!(compute_row(&bad, 2).is_ok());
    }

    #[test]
    fn custom_rule_term_list_bounds() {
        let rule = ExponentSequence::Custom(CustomRule::from_terms(vec![
            BigInt::from(2),
            BigInt::from(7),
        ]));
        assert!(compute_row(&rule, 2).is_ok());
        match compute_row(&rule, 3) {
            Err(Error::MissingAlpha { n: 3, provided: 2 }) => {}
            other => panic!("expected MissingAlpha, got {other:?}"),
        }
    }

    #[test]
    fn closed_form_matches_reference_values() {
        assert_eq!(closed_form_pd(2, 3).unwrap(), BigUint::from(5u32));
        for d in 1..=10 {
            assert_eq!(closed_form_pd(0, d).unwrap(), BigUint::one());
            assert_eq!(closed_form_pd(1, d).unwrap(), BigUint::one());
        }
        assert_eq!(closed_form_pd(8, 2).unwrap(), BigUint::from(160u32));
        assert!(closed_form_pd(9, 2).is_err());
    }

    #[test]
    fn closed_form_matches_recurrence_far_out() {
        for d in [1u32, 2, 3, 7, 20, 64] {
            let row = compute_row(&power(d), 8).unwrap();
            for n in 0..=8u32 {
                assert_eq!(
                    &closed_form_pd(n, d).unwrap(),
                    &row.coeffs()[n as usize],
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn delta_classifies_reference_points() {
        let r1 = compute_row(&power(1), 10).unwrap();
        let c = delta(1, 9, &r1).unwrap();
        assert_eq!(c.delta, BigInt::from(-24));
        assert_eq!(c.class, DeltaClass::StrictlyLogConvex);

        let r2 = compute_row(&power(2), 10).unwrap();
        let c = delta(2, 2, &r2).unwrap();
        assert_eq!(c.delta, BigInt::from(3));
        assert_eq!(c.class, DeltaClass::LogConcave);

        // n = 1 is an exception for every d.
        for d in 1..=12 {
            let row = compute_row(&power(d), 2).unwrap();
            assert_eq!(
                delta(d, 1, &row).unwrap().class,
                DeltaClass::StrictlyLogConvex
            );
        }
    }

    #[test]
    fn delta_validates_row_provenance_and_length() {
        let row = compute_row(&power(2), 5).unwrap();
        assert!(matches!(
            delta(3, 2, &row),
            Err(Error::RowSequenceMismatch { .. })
        ));
        assert!(matches!(delta(2, 5, &row), Err(Error::RowTooShort { .. })));
        assert!(delta(2, 4, &row).is_ok());
    }

    #[test]
    fn first_exception_scan_matches_reference_values() {
        let cache = RowCache::new();
        assert_eq!(find_first_exception(&cache, 7, 3, 20), Some(11));
        assert_eq!(find_first_exception(&cache, 8, 3, 20), Some(9));
        assert_eq!(find_first_exception(&cache, 6, 3, 200), None);
    }

    #[test]
    fn rows_are_positive_and_weakly_monotone() {
        for d in 1..=8 {
            let row = compute_row(&power(d), 100).unwrap();
            for n in 1..100 {
                assert!(!row.coeffs()[n].is_zero());
                assert!(row.coeffs()[n + 1] >= row.coeffs()[n], "d={d} n={n}");
            }
        }
    }

    /// Classical partition numbers by the pentagonal-number recurrence,
    /// implemented only here as an independent cross-check.
    fn pentagonal_partition_numbers(n_max: usize) -> Vec<BigUint> {
        let mut p = vec![BigUint::zero(); n_max + 1];
        p[0] = BigUint::one();
        for i in 1..=n_max {
            let mut acc = BigInt::zero();
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * BigInt::from(p[i - g1].clone());
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    acc += sign * BigInt::from(p[i - g2].clone());
                }
                k += 1;
            }
            p[i] = acc.to_biguint().expect("partition numbers are positive");
        }
        p
    }

    #[test]
    fn d1_row_matches_pentagonal_recurrence() {
        let row = compute_row(&power(1), 200).unwrap();
        assert_eq!(row.coeffs(), &pentagonal_partition_numbers(200)[..]);
    }

    #[test]
    fn extended_rows_agree_with_fresh_rows() {
        let base = compute_row(&power(3), 20).unwrap();
        let ext = base.extended(60).unwrap();
        let fresh = compute_row(&power(3), 60).unwrap();
        assert_eq!(ext.coeffs(), fresh.coeffs());
        assert_eq!(ext.truncated(20).unwrap().coeffs(), base.coeffs());
    }
}
