//! Reproduction suites for the built-in reference tables and sign
//! patterns, plus scans of the two open conjectures.
//!
//! Every suite returns a [`VerificationReport`] whose JSON and markdown
//! forms are deterministic: no timestamps, fixed iteration order, and
//! per-`d` work merged in `d` order regardless of the worker pool. Any
//! failing point is re-verified against a freshly computed row (no cache)
//! before it is emitted as a [`Witness`].

mod golden;
mod report;

pub use report::{ClaimRecord, SuiteStatus, VerificationReport, Witness};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cache::RowCache;
use crate::error::{Error, Result};
use crate::parallel;
use crate::series::{compute_row, delta, DeltaClass, ExponentSequence};

/// The `(n, d)` sign matrix: rows `n = 1..=n_max`, columns `d = 1..=d_max`.
#[derive(Clone, Debug)]
pub struct LandscapeGrid {
    pub d_max: u32,
    pub n_max: u64,
    /// `cells[n - 1][d - 1]`
    pub cells: Vec<Vec<DeltaClass>>,
}

impl LandscapeGrid {
    pub fn class(&self, n: u64, d: u32) -> DeltaClass {
        self.cells[n as usize - 1][d as usize - 1]
    }

    pub fn is_exception(&self, n: u64, d: u32) -> bool {
        self.class(n, d).is_exception()
    }
}

/// Exact sign grid; columns for distinct `d` are independent and are
/// computed on the worker pool.
pub fn landscape(cache: &RowCache, d_max: u32, n_max: u64) -> LandscapeGrid {
    assert!(d_max >= 1 && n_max >= 1);
    let columns = parallel::map_values(parallel::one_to(d_max), |d| {
        let row = cache.row(d, n_max as usize + 1);
        (1..=n_max)
            .map(|n| delta(d, n, &row).expect("row covers n + 1").class)
            .collect::<Vec<_>>()
    });
    let cells = (0..n_max as usize)
        .map(|ni| (0..d_max as usize).map(|di| columns[di][ni]).collect())
        .collect();
    LandscapeGrid {
        d_max,
        n_max,
        cells,
    }
}

fn class_mark(class: DeltaClass) -> &'static str {
    match class {
        DeltaClass::StrictlyLogConvex => "\u{2022}",
        DeltaClass::LogConcave => "",
        DeltaClass::Flat => "=",
    }
}

/// Markdown grid with a bullet per exception.
pub fn landscape_markdown(grid: &LandscapeGrid) -> String {
    let mut out = String::from("| n\\d |");
    for d in 1..=grid.d_max {
        out.push_str(&format!(" {d} |"));
    }
    out.push_str("\n|---|");
    for _ in 1..=grid.d_max {
        out.push_str("---|");
    }
    out.push('\n');
    for n in 1..=grid.n_max {
        out.push_str(&format!("| {n} |"));
        for d in 1..=grid.d_max {
            out.push_str(&format!(" {} |", class_mark(grid.class(n, d))));
        }
        out.push('\n');
    }
    out
}

/// CSV grid: `1` = exception, `0` = log-concave, `flat` = zero discriminant.
pub fn landscape_csv(grid: &LandscapeGrid) -> String {
    let mut out = String::from("n");
    for d in 1..=grid.d_max {
        out.push_str(&format!(",d{d}"));
    }
    out.push('\n');
    for n in 1..=grid.n_max {
        out.push_str(&n.to_string());
        for d in 1..=grid.d_max {
            out.push_str(match grid.class(n, d) {
                DeltaClass::StrictlyLogConvex => ",1",
                DeltaClass::LogConcave => ",0",
                DeltaClass::Flat => ",flat",
            });
        }
        out.push('\n');
    }
    out
}

/// Recompute one class from scratch, bypassing every cache.
fn fresh_classification(n: u64, d: u32) -> crate::series::DeltaClassification {
    let row = compute_row(&ExponentSequence::PowerFamily(d), n as usize + 1).expect("fresh row");
    delta(d, n, &row).expect("row covers n + 1")
}

fn fresh_witness(n: u64, d: u32, context: impl Into<String>) -> Witness {
    let dc = fresh_classification(n, d);
    Witness {
        n,
        d,
        delta: dc.delta.to_string(),
        context: context.into(),
    }
}

/// Coefficient rows `d = 1, 2, 3` up to `n = 10` against the stored values.
pub fn table2_suite(cache: &RowCache) -> VerificationReport {
    let mut details = Vec::new();
    for (d, expected) in golden::COEFF_ROWS {
        let row = cache.row(d, 10);
        let mut diffs = Vec::new();
        for (n, &want) in expected.iter().enumerate() {
            if row.coeffs()[n] != BigUint::from(want) {
                diffs.push(format!("n={n}: got {}, want {want}", row.coeffs()[n]));
            }
        }
        details.push(ClaimRecord::with_note(
            format!("coefficient row d={d} matches reference values for n <= 10"),
            diffs.is_empty(),
            diffs.join("; "),
        ));
    }
    VerificationReport::assemble("table2", "d in 1..=3, n <= 10", true, details, Vec::new())
}

/// Threshold ceilings against the stored comparison table.
pub fn table3_suite() -> VerificationReport {
    let mut details = Vec::new();
    let mut check = |n: u64, want_c: u64, want_tilde: u64, tilde_name: &str, c_name: &str| {
        let tc = crate::bounds::threshold_constants(n).expect("n >= 6");
        let got_c = tc.primary().ceiling;
        let got_tilde = match n % 3 {
            1 => tc.c1_tilde.expect("residue 1").ceiling,
            _ => tc.c2_tilde.expect("residue 2").ceiling,
        };
        details.push(ClaimRecord::with_note(
            format!("ceil({c_name}({n})) = {want_c}"),
            got_c == want_c,
            if got_c == want_c {
                String::new()
            } else {
                format!("got {got_c}")
            },
        ));
        details.push(ClaimRecord::with_note(
            format!("ceil({tilde_name}({n})) = {want_tilde}"),
            got_tilde == want_tilde,
            if got_tilde == want_tilde {
                String::new()
            } else {
                format!("got {got_tilde}")
            },
        ));
    };
    for (n, c, tilde) in golden::THRESHOLD_CEILINGS_R1 {
        check(n, c, tilde, "C1_tilde", "C1");
    }
    for (n, c, tilde) in golden::THRESHOLD_CEILINGS_R2 {
        check(n, c, tilde, "C2_tilde", "C2");
    }
    VerificationReport::assemble(
        "table3",
        "36 ceiling pairs, n in 7..=59",
        true,
        details,
        Vec::new(),
    )
}

/// Landscape `d <= 20`, `n <= 26` against the stored exception grid,
/// plus a seeded random 1% spot-check against fresh rows.
pub fn table4_suite(cache: &RowCache) -> VerificationReport {
    let grid = landscape(cache, 20, 26);
    let mut details = Vec::new();
    let mut witnesses = Vec::new();
    for n in 1..=26u64 {
        let reference = golden::EXCEPTION_GRID[n as usize - 1].as_bytes();
        let mut row_ok = true;
        for d in 1..=20u32 {
            let expected = reference[d as usize - 1] == b'x';
            if grid.is_exception(n, d) != expected {
                row_ok = false;
                witnesses.push(fresh_witness(
                    n,
                    d,
                    format!("cell differs from reference grid (expected exception: {expected})"),
                ));
            }
        }
        details.push(ClaimRecord::new(
            format!("landscape row n={n} matches reference pattern"),
            row_ok,
        ));
    }

    // Deterministic 1% resample straight from fresh rows.
    let mut rng = StdRng::seed_from_u64(0x70d0_9d1c);
    let samples = (20usize * 26).div_ceil(100);
    let mut spot_ok = true;
    for _ in 0..samples {
        let n = rng.random_range(1..=26u64);
        let d = rng.random_range(1..=20u32);
        if fresh_classification(n, d).class != grid.class(n, d) {
            spot_ok = false;
            witnesses.push(fresh_witness(
                n,
                d,
                "grid cell disagrees with fresh recomputation",
            ));
        }
    }
    details.push(ClaimRecord::with_note(
        "random spot-check of grid cells against fresh rows",
        spot_ok,
        format!("{samples} cells resampled"),
    ));

    VerificationReport::assemble("table4", "d <= 20, n <= 26", true, details, witnesses)
}

/// Sign pattern for `1 <= n <= 9` over `d <= d_cap` (`d_cap >= 20`).
pub fn theorem1_suite(cache: &RowCache, d_cap: u32) -> Result<VerificationReport> {
    if d_cap < 20 {
        return Err(Error::OutOfRange {
            what: "theorem1_suite",
            n: d_cap as u64,
            requires: "d_cap >= 20 (must cover the finite thresholds)",
        });
    }
    let mismatches: Vec<(u64, u32)> = parallel::map_values(parallel::one_to(d_cap), |d| {
        let row = cache.row(d, 10);
        (1..=9u64)
            .filter(|&n| {
                let actual = delta(d, n, &row)
                    .expect("row covers 10")
                    .class
                    .is_exception();
                actual != golden::small_n_exception_expected(n, d)
            })
            .map(|n| (n, d))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut details = Vec::new();
    for n in 1..=9u64 {
        let ok = !mismatches.iter().any(|&(mn, _)| mn == n);
        let (text, range_limited) = match n {
            1 => ("exception for every d", true),
            2 => ("never an exception", true),
            3 => ("exception iff d <= 3", false),
            4 => ("exception iff d >= 6", true),
            5 => ("exception iff d <= 9", false),
            6 => ("never an exception", true),
            7 => ("exception iff d <= 3 or d >= 11", true),
            8 => ("exception iff d >= 9", true),
            _ => ("exception iff d <= 2", false),
        };
        let note = if range_limited {
            format!("open-ended in d; verified for d <= {d_cap}")
        } else {
            String::new()
        };
        details.push(ClaimRecord::with_note(format!("n={n}: {text}"), ok, note));
    }
    let witnesses = mismatches
        .into_iter()
        .map(|(n, d)| fresh_witness(n, d, "sign differs from small-n pattern"))
        .collect();
    Ok(VerificationReport::assemble(
        "theorem1",
        format!("n in 1..=9, d <= {d_cap}"),
        true,
        details,
        witnesses,
    ))
}

/// The seven small-`n` iff-statements checked exactly for `d <= 120`,
/// together with the coarse-bound crossovers used to prove them.
pub fn corollary_suite(cache: &RowCache) -> VerificationReport {
    const D_CHECK: u32 = 120;
    let expected_exception = |n: u64, d: u32| -> bool {
        match n {
            1 => true,
            2 => false,
            3 => d <= 3,
            4 => d >= 6,
            5 => d <= 9,
            6 => false,
            7 => d <= 3 || d >= 11,
            _ => unreachable!(),
        }
    };
    let mismatches: Vec<(u64, u32)> = parallel::map_values(parallel::one_to(D_CHECK), |d| {
        let row = cache.row(d, 8);
        (1..=7u64)
            .filter(|&n| {
                let actual = delta(d, n, &row)
                    .expect("row covers 8")
                    .class
                    .is_exception();
                actual != expected_exception(n, d)
            })
            .map(|n| (n, d))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut details = Vec::new();
    let statements = [
        "n=1: exception for every d",
        "n=2: never an exception",
        "n=3: exception iff d <= 3",
        "n=4: exception iff d >= 6",
        "n=5: exception iff d <= 9",
        "n=6: never an exception",
        "n=7: exception iff d <= 3 or d >= 11",
    ];
    for (i, text) in statements.iter().enumerate() {
        let n = i as u64 + 1;
        let ok = !mismatches.iter().any(|&(mn, _)| mn == n);
        details.push(ClaimRecord::with_note(
            *text,
            ok,
            format!("checked exactly for d <= {D_CHECK}"),
        ));
    }

    // Coarse power-ratio crossovers; each ratio is monotone in d, so the
    // first crossing pins the whole tail.
    let pow = |b: u64, e: u32| BigUint::from(b).pow(e);
    type Pred = Box<dyn Fn(u32) -> bool + Sync>;
    let crossings: [(&str, u32, Pred); 6] = [
        (
            "4^{d-1} > 3^d",
            5,
            Box::new(move |d| pow(4, d - 1) > pow(3, d)),
        ),
        (
            "9^{d-1} > 10*8^{d-1}",
            21,
            Box::new(move |d| pow(9, d - 1) > BigUint::from(10u32) * pow(8, d - 1)),
        ),
        (
            "18^{d-1} > 25*16^{d-1}",
            29,
            Box::new(move |d| pow(18, d - 1) > BigUint::from(25u32) * pow(16, d - 1)),
        ),
        (
            "36^{d-1} >= 220*32^{d-1}",
            47,
            Box::new(move |d| pow(36, d - 1) >= BigUint::from(220u32) * pow(32, d - 1)),
        ),
        (
            "81^{d-1} > 420*72^{d-1}",
            53,
            Box::new(move |d| pow(81, d - 1) > BigUint::from(420u32) * pow(72, d - 1)),
        ),
        (
            "162^{d-1} > 900*144^{d-1}",
            59,
            Box::new(move |d| pow(162, d - 1) > BigUint::from(900u32) * pow(144, d - 1)),
        ),
    ];
    for (text, expected_first, pred) in &crossings {
        let first = (1..=200u32).find(|&d| pred(d));
        details.push(ClaimRecord::with_note(
            format!("first d with {text} is {expected_first}"),
            first == Some(*expected_first),
            format!("found {first:?}"),
        ));
    }

    let witnesses = mismatches
        .into_iter()
        .map(|(n, d)| fresh_witness(n, d, "iff-statement violated"))
        .collect();
    VerificationReport::assemble(
        "corollary",
        format!("n in 1..=7 for d <= {D_CHECK}, plus 6 crossover bounds"),
        true,
        details,
        witnesses,
    )
}

/// The two boundary rows (`n = 8`, `n = 9`) plus the large-`d` integer
/// inequality that settles `n = 8`.
pub fn boundary_case_suite(cache: &RowCache) -> VerificationReport {
    let mut details = Vec::new();
    let mut witnesses = Vec::new();

    let mut scan =
        |n: u64, d_hi: u32, expected: &(dyn Fn(u32) -> DeltaClass + Sync), text: &str| {
            let bad: Vec<u32> = parallel::map_values(parallel::one_to(d_hi), |d| {
                let row = cache.row(d, n as usize + 1);
                let class = delta(d, n, &row).expect("row covers n + 1").class;
                (class != expected(d)).then_some(d)
            })
            .into_iter()
            .flatten()
            .collect();
            for &d in &bad {
                witnesses.push(fresh_witness(n, d, "boundary sign differs"));
            }
            details.push(ClaimRecord::new(text, bad.is_empty()));
        };

    scan(
        8,
        110,
        &|d| {
            if d <= 8 {
                DeltaClass::LogConcave
            } else {
                DeltaClass::StrictlyLogConvex
            }
        },
        "Delta_d(8) > 0 for d <= 8 and < 0 for 9 <= d <= 110",
    );
    scan(
        9,
        163,
        &|d| {
            if d <= 2 {
                DeltaClass::StrictlyLogConvex
            } else {
                DeltaClass::LogConcave
            }
        },
        "Delta_d(9) < 0 for d <= 2 and > 0 for 3 <= d <= 163",
    );

    // (17/24)*288^{d-1} > 508*270^{d-1}, cleared to integers.
    for d in [103u32, 104, 150] {
        let lhs = BigUint::from(17u32) * BigUint::from(288u64).pow(d - 1);
        let rhs = BigUint::from(12192u32) * BigUint::from(270u64).pow(d - 1);
        details.push(ClaimRecord::new(
            format!("17*288^{} > 12192*270^{} (d = {d})", d - 1, d - 1),
            lhs > rhs,
        ));
    }

    // The special envelopes behind the n = 8 decision, against exact rows:
    // p_d(7) > (3/2)12^{d-1},
    // p_d(9) > (1/6)27^{d-1} + (7/6)24^{d-1},
    // p_d(8) < (1/2)18^{d-1} + (25/24)16^{d-1} + 21*15^{d-1}.
    let envelope_failures: Vec<u32> = parallel::map_values(parallel::one_to(110), |d| {
        let row = cache.row(d, 10);
        let exact = |i: usize| BigRational::from_integer(BigInt::from(row.coeffs()[i].clone()));
        let term = |num: i64, den: i64, base: u64| {
            BigRational::new(BigInt::from(num), BigInt::from(den))
                * BigRational::from_integer(BigInt::from(BigUint::from(base).pow(d - 1)))
        };
        let ok = exact(7) > term(3, 2, 12)
            && exact(9) > term(1, 6, 27) + term(7, 6, 24)
            && exact(8) < term(1, 2, 18) + term(25, 24, 16) + term(21, 1, 15);
        (!ok).then_some(d)
    })
    .into_iter()
    .flatten()
    .collect();
    details.push(ClaimRecord::with_note(
        "special envelopes for p_d(7), p_d(8), p_d(9) hold",
        envelope_failures.is_empty(),
        format!("checked exactly for d <= 110; failures: {envelope_failures:?}"),
    ));

    VerificationReport::assemble(
        "boundary",
        "n = 8 (d <= 110), n = 9 (d <= 163), tail inequality at d in {103, 104, 150}",
        true,
        details,
        witnesses,
    )
}

/// Exception sets for `d = 1..=8` within `[1, n_max]` against the stored
/// row descriptions.
pub fn table1_suite(cache: &RowCache, n_max: u64) -> Result<VerificationReport> {
    if n_max < 26 {
        return Err(Error::OutOfRange {
            what: "table1_suite",
            n: n_max,
            requires: "n_max >= 26 (d = 1 exceptions reach 25)",
        });
    }
    let rows: Vec<(u32, Vec<u64>)> = parallel::map_values((1..=8).collect(), |d| {
        let row = cache.row(d, n_max as usize + 1);
        let exceptions: Vec<u64> = (1..=n_max)
            .filter(|&n| {
                delta(d, n, &row)
                    .expect("row covers n + 1")
                    .class
                    .is_exception()
            })
            .collect();
        (d, exceptions)
    });

    let mut details = Vec::new();
    let mut witnesses = Vec::new();
    for (d, actual) in rows {
        let expected = golden::expected_exceptions_row(d, n_max);
        let ok = actual == expected;
        if !ok {
            for &n in actual.iter().filter(|n| !expected.contains(n)) {
                witnesses.push(fresh_witness(n, d, "unexpected exception"));
            }
            for &n in expected.iter().filter(|n| !actual.contains(n)) {
                witnesses.push(fresh_witness(n, d, "expected exception missing"));
            }
        }
        let note = match d {
            1 | 2 => "row proved for all n".to_string(),
            _ => "row empirical; matches the verified range".to_string(),
        };
        details.push(ClaimRecord::with_note(
            format!("d={d}: exception set within n <= {n_max} matches"),
            ok,
            note,
        ));
    }
    Ok(VerificationReport::assemble(
        "table1",
        format!("d in 1..=8, n <= {n_max}"),
        true,
        details,
        witnesses,
    ))
}

/// Scan both conjectures over `n <= n_max`, `d <= d_max`.
///
/// Conjecture A: for `n = 0 mod 3`, `n >= 6`, a positive `Delta_d(n)`
/// stays positive as `d` grows. Conjecture B: for `n = 1 mod 3`, `n >= 6`,
/// the first exception index `min { d > 3 : Delta_d(n) < 0 }` strictly
/// decreases from `n` to `n + 1`. Neither is ever reported as proved:
/// the status is confirmed-in-range or counterexample.
pub fn conjecture_scan(cache: &RowCache, n_max: u64, d_max: u32) -> Result<VerificationReport> {
    if d_max < 21 {
        return Err(Error::OutOfRange {
            what: "conjecture_scan",
            n: d_max as u64,
            requires: "d_max >= 21",
        });
    }
    if n_max < 8 {
        return Err(Error::OutOfRange {
            what: "conjecture_scan",
            n: n_max,
            requires: "n_max >= 8",
        });
    }
    let grid = landscape(cache, d_max, n_max);
    let mut details = Vec::new();
    let mut witnesses = Vec::new();

    // Conjecture A: no positive-to-nonpositive transition in d.
    let mut regressions = 0usize;
    for n in (6..=n_max).filter(|n| n % 3 == 0) {
        for d in 1..d_max {
            if grid.class(n, d) == DeltaClass::LogConcave
                && grid.class(n, d + 1) != DeltaClass::LogConcave
            {
                regressions += 1;
                witnesses.push(fresh_witness(n, d + 1, "positive sign lost when d grew"));
            }
        }
    }
    details.push(ClaimRecord::with_note(
        "n = 0 mod 3: positive discriminant persists as d grows",
        regressions == 0,
        format!("checked n <= {n_max}, d < {d_max}"),
    ));

    // Conjecture B: first-exception indices strictly decrease n -> n + 1.
    let first_exception = |n: u64| (4..=d_max).find(|&d| grid.is_exception(n, d));
    let mut unresolved = 0usize;
    for n in (7..n_max).filter(|n| n % 3 == 1) {
        match (first_exception(n), first_exception(n + 1)) {
            (Some(a), Some(b)) => {
                let ok = a > b;
                if !ok {
                    witnesses.push(fresh_witness(n, a, "first-exception ordering violated"));
                }
                details.push(ClaimRecord::new(
                    format!(
                        "first_exception({n}) = {a} > first_exception({}) = {b}",
                        n + 1
                    ),
                    ok,
                ));
            }
            (a, b) => {
                unresolved += 1;
                details.push(ClaimRecord::with_note(
                    format!("first_exception ordering at n = {n}"),
                    true,
                    format!("unresolved within d <= {d_max}: {a:?} vs {b:?}"),
                ));
            }
        }
    }
    details.push(ClaimRecord::with_note(
        "unresolved pairs are reported, not failed",
        true,
        format!("{unresolved} pairs exceeded the d cap"),
    ));

    Ok(VerificationReport::assemble(
        "conjectures",
        format!("n <= {n_max}, d <= {d_max}"),
        false,
        details,
        witnesses,
    ))
}
