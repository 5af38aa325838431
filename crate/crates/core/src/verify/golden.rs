//! Reference data the verification suites check against.
//!
//! Transcribed once into literals so regressions are caught by diffing
//! against fixed expectations rather than by recomputation.

/// Coefficient rows `p_d(0..=10)` for `d = 1, 2, 3`.
pub(crate) const COEFF_ROWS: [(u32, [u64; 11]); 3] = [
    (1, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]),
    (2, [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]),
    (3, [1, 1, 5, 14, 40, 101, 266, 649, 1593, 3765, 8813]),
];

/// Threshold ceilings for residue-1 `n`: `(n, ceil(C_1), ceil(C~_1))`.
pub(crate) const THRESHOLD_CEILINGS_R1: [(u64, u64, u64); 18] = [
    (7, 111, 119),
    (10, 181, 193),
    (13, 257, 273),
    (16, 336, 357),
    (19, 418, 445),
    (22, 503, 535),
    (25, 590, 628),
    (28, 679, 723),
    (31, 770, 820),
    (34, 863, 919),
    (37, 957, 1019),
    (40, 1053, 1121),
    (43, 1150, 1224),
    (46, 1248, 1328),
    (49, 1347, 1434),
    (52, 1447, 1540),
    (55, 1549, 1648),
    (58, 1651, 1756),
];

/// Threshold ceilings for residue-2 `n`: `(n, ceil(C_2), ceil(C~_2))`.
pub(crate) const THRESHOLD_CEILINGS_R2: [(u64, u64, u64); 18] = [
    (8, 101, 126),
    (11, 147, 183),
    (14, 196, 241),
    (17, 246, 302),
    (20, 298, 364),
    (23, 351, 428),
    (26, 406, 493),
    (29, 461, 558),
    (32, 517, 625),
    (35, 574, 693),
    (38, 632, 761),
    (41, 690, 830),
    (44, 749, 900),
    (47, 809, 970),
    (50, 869, 1041),
    (53, 929, 1113),
    (56, 990, 1185),
    (59, 1052, 1257),
];

/// The exception landscape for `1 <= n <= 26` (rows) and `1 <= d <= 20`
/// (columns); `x` marks an exception (`Delta_d(n) < 0`).
pub(crate) const EXCEPTION_GRID: [&str; 26] = [
    "xxxxxxxxxxxxxxxxxxxx", // n = 1
    "....................", // n = 2
    "xxx.................", // n = 3
    ".....xxxxxxxxxxxxxxx", // n = 4
    "xxxxxxxxx...........", // n = 5
    "....................", // n = 6
    "xxx.......xxxxxxxxxx", // n = 7
    "........xxxxxxxxxxxx", // n = 8
    "xx..................", // n = 9
    "...............xxxxx", // n = 10
    "xx.........xxxxxxxxx", // n = 11
    "....................", // n = 12
    "x..................x", // n = 13
    "..............xxxxxx", // n = 14
    "x...................", // n = 15
    "....................", // n = 16
    "x................xxx", // n = 17
    "....................", // n = 18
    "x...................", // n = 19
    "...................x", // n = 20
    "x...................", // n = 21
    "....................", // n = 22
    "x...................", // n = 23
    "....................", // n = 24
    "x...................", // n = 25
    "....................", // n = 26
];

/// Expected exception set for row `d` within `[1, n_max]`.
pub(crate) fn expected_exceptions_row(d: u32, n_max: u64) -> Vec<u64> {
    let set: Vec<u64> = match d {
        1 => (1..=25).step_by(2).collect(),
        2 => (1..=11).step_by(2).collect(),
        3 => (1..=7).step_by(2).collect(),
        4 | 5 => vec![1, 5],
        6..=8 => vec![1, 4, 5],
        _ => panic!("no reference exception set for d = {d}"),
    };
    set.into_iter().filter(|&n| n <= n_max).collect()
}

/// Strict-log-convexity predicate for `1 <= n <= 9`.
pub(crate) fn small_n_exception_expected(n: u64, d: u32) -> bool {
    match n {
        1 => true,
        2 => false,
        3 => d <= 3,
        4 => d >= 6,
        5 => d <= 9,
        6 => false,
        7 => d <= 3 || d >= 11,
        8 => d >= 9,
        9 => d <= 2,
        _ => panic!("predicate defined for 1 <= n <= 9 only"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rows_are_well_formed() {
        for (i, row) in EXCEPTION_GRID.iter().enumerate() {
            assert_eq!(row.len(), 20, "row n={}", i + 1);
            assert!(row.bytes().all(|b| b == b'x' || b == b'.'));
        }
    }

    #[test]
    fn grid_agrees_with_small_n_predicate() {
        for n in 1..=9u64 {
            for d in 1..=20u32 {
                let cell = EXCEPTION_GRID[n as usize - 1].as_bytes()[d as usize - 1] == b'x';
                assert_eq!(
                    cell,
                    small_n_exception_expected(n, d),
                    "n={n} d={d} disagree"
                );
            }
        }
    }

    #[test]
    fn exception_rows_respect_n_max() {
        assert_eq!(expected_exceptions_row(1, 2000).len(), 13);
        assert_eq!(expected_exceptions_row(1, 9), vec![1, 3, 5, 7, 9]);
        assert_eq!(expected_exceptions_row(6, 2000), vec![1, 4, 5]);
    }
}
