//! Exact arithmetic for the coefficients `p_alpha(n)` of
//! `prod_{n>=1} (1 - q^n)^{-alpha_n}` and their log-concavity landscape.
//!
//! - [`series`]: divisor power sums, coefficient rows (fast recurrence plus
//!   an independent enumeration oracle), closed forms for small `n`, and
//!   the discriminant `Delta_d(n) = p_d(n)^2 - p_d(n-1) p_d(n+1)`.
//! - [`maxprod`]: largest partition products, closed forms and brute force.
//! - [`bounds`]: exact-rational envelopes for `p_d(n)`, sign certificates
//!   built from them, and the explicit thresholds on `d` with rigorous
//!   ceiling extraction.
//! - [`verify`]: reproduction suites for the built-in reference tables and
//!   scans of the two open conjectures, with deterministic reports.
//! - [`cache`]: in-memory row cache and the `pdrow v1` file format.
//!
//! With the default `parallel` feature, grid and suite computations fan
//! out over `d` on a rayon pool; disabling it yields the same results
//! sequentially.

pub mod bounds;
pub mod cache;
pub mod error;
mod hp;
pub mod maxprod;
mod parallel;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
