//! Data-parallel dispatch over independent `d` values.
//!
//! With the `parallel` feature (default) the map runs on the rayon pool;
//! without it the same work runs sequentially. Results always come back in
//! input order, so downstream assembly is deterministic either way.

#[cfg(feature = "parallel")]
pub(crate) fn map_values<T, F>(values: Vec<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    use rayon::prelude::*;
    values.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_values<T, F>(values: Vec<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    values.into_iter().map(f).collect()
}

/// `1..=max` as a work list.
pub(crate) fn one_to(max: u32) -> Vec<u32> {
    (1..=max).collect()
}
