//! Row caching: an in-memory cache for power-family rows and the text file
//! format used to persist them.
//!
//! Completed [`CoeffRow`]s are immutable, so the cache hands out `Arc`s. A
//! cached row of length `M` serves any request `<= M` and seeds the
//! recurrence when a longer row is requested. Writers are serialized per
//! key; rows for distinct `d` are computed concurrently.
//!
//! File format (`pdrow v1`): one header line
//!
//! ```text
//! pdrow v1 kind=power d=<d> nmax=<N>
//! ```
//!
//! followed by `N + 1` lines, each the decimal expansion of one coefficient
//! in index order. Custom rows are never persisted (their rule identity is
//! not canonical).

use std::collections::HashMap;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::series::{compute_row, CoeffRow, ExponentSequence};

type Slot = Arc<Mutex<Option<Arc<CoeffRow>>>>;

/// In-memory cache of power-family rows keyed by `d`.
#[derive(Default)]
pub struct RowCache {
    slots: Mutex<HashMap<u32, Slot>>,
}

impl RowCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A row for `PowerFamily(d)` covering at least `0..=min_n_max`.
    ///
    /// The returned row may be longer than requested; coefficients are
    /// deterministic, so any prefix agrees with a freshly computed row.
    pub fn row(&self, d: u32, min_n_max: usize) -> Arc<CoeffRow> {
        let slot = {
            let mut slots = self.slots.lock().expect("cache poisoned");
            Arc::clone(slots.entry(d).or_default())
        };
        let mut guard = slot.lock().expect("cache slot poisoned");
        if let Some(row) = guard.as_ref() {
            if row.n_max() >= min_n_max {
                return Arc::clone(row);
            }
        }
        let row = Arc::new(match guard.take() {
            Some(prefix) => prefix
                .extended(min_n_max)
                .expect("power rows always extend"),
            None => compute_row(&ExponentSequence::PowerFamily(d), min_n_max)
                .expect("power rows always compute"),
        });
        *guard = Some(Arc::clone(&row));
        row
    }
}

/// Serialize a power-family row to its canonical on-disk form.
pub fn write_row_file(path: &Path, row: &CoeffRow) -> Result<()> {
    let d = match row.seq().as_power_d() {
        Some(d) => d,
        None => {
            return Err(Error::RowFile {
                reason: "custom rows are not persisted".into(),
            })
        }
    };
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let file = std::fs::File::create(path)?;
    let mut out = BufWriter::new(file);
    writeln!(out, "pdrow v1 kind=power d={d} nmax={}", row.n_max())?;
    for c in row.coeffs() {
        writeln!(out, "{c}")?;
    }
    out.flush()?;
    Ok(())
}

/// Read a row file back, validating the header and the line count.
pub fn read_row_file(path: &Path) -> Result<CoeffRow> {
    let file = std::fs::File::open(path)?;
    let mut lines = BufReader::new(file).lines();
    let header = lines.next().transpose()?.ok_or_else(|| Error::RowFile {
        reason: "empty file".into(),
    })?;
    let (d, n_max) = parse_header(&header)?;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    for (i, line) in lines.enumerate() {
        let line = line?;
        if i > n_max {
            return Err(Error::RowFile {
                reason: format!("more than {} coefficient lines", n_max + 1),
            });
        }
        let value = line.trim().parse::<BigUint>().map_err(|e| Error::RowFile {
            reason: format!("bad coefficient on line {}: {e}", i + 2),
        })?;
        coeffs.push(value);
    }
    if coeffs.len() != n_max + 1 {
        return Err(Error::RowFile {
            reason: format!(
                "expected {} coefficient lines, found {}",
                n_max + 1,
                coeffs.len()
            ),
        });
    }
    if coeffs[0] != BigUint::from(1u32) {
        return Err(Error::RowFile {
            reason: "coefficient 0 must be 1".into(),
        });
    }
    if d == 0 {
        return Err(Error::RowFile {
            reason: "d must be >= 1".into(),
        });
    }
    Ok(CoeffRow::from_parts(
        ExponentSequence::PowerFamily(d),
        coeffs,
    ))
}

fn parse_header(header: &str) -> Result<(u32, usize)> {
    let bad = |reason: String| Error::RowFile { reason };
    let mut parts = header.split_whitespace();
    if parts.next() != Some("pdrow") || parts.next() != Some("v1") {
        return Err(bad(format!("unrecognized header: {header:?}")));
    }
    let mut d = None;
    let mut n_max = None;
    for field in parts {
        match field.split_once('=') {
            Some(("kind", "power")) => {}
            Some(("kind", other)) => return Err(bad(format!("unsupported kind {other:?}"))),
            Some(("d", v)) => d = Some(v.parse::<u32>().map_err(|e| bad(format!("bad d: {e}")))?),
            Some(("nmax", v)) => {
                n_max = Some(
                    v.parse::<usize>()
                        .map_err(|e| bad(format!("bad nmax: {e}")))?,
                )
            }
            _ => return Err(bad(format!("unrecognized header field {field:?}"))),
        }
    }
    match (d, n_max) {
        (Some(d), Some(n_max)) => Ok((d, n_max)),
        _ => Err(bad("header missing d= or nmax=".into())),
    }
}

/// Load-or-compute a power row through a file cache directory, extending
/// and rewriting the file when a longer row is requested.
pub fn file_cached_row(cache_dir: &Path, d: u32, n_max: usize) -> Result<CoeffRow> {
    let path = cache_dir.join(format!("power_d{d}.pdrow"));
    if path.exists() {
        let on_disk = read_row_file(&path)?;
        if on_disk.n_max() >= n_max {
            return Ok(on_disk);
        }
        let extended = on_disk.extended(n_max)?;
        write_row_file(&path, &extended)?;
        return Ok(extended);
    }
    let row = compute_row(&ExponentSequence::PowerFamily(d), n_max)?;
    write_row_file(&path, &row)?;
    Ok(row)
}
