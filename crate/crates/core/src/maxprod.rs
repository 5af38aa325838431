//! Largest products of parts over integer partitions.
//!
//! Over all partitions `m_1 + ... + m_k = n` the maximum of `m_1 ... m_k`
//! has a closed form by residue class mod 3, and for `n = 2 mod 3` the
//! second-largest value does too. [`product_spectrum`] is the brute-force
//! oracle: it enumerates partitions and reports the top values with their
//! complete witness lists.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Enumeration bound for [`product_spectrum`].
pub const SPECTRUM_CAP: u64 = 60;

/// One ranked product value with every partition achieving it.
#[derive(Clone, Debug)]
pub struct PartitionProductRecord {
    pub n: u64,
    /// 1 = maximum, 2 = second-largest distinct value, ...
    pub rank: usize,
    pub value: BigUint,
    /// Multisets of parts, each non-increasing, deduplicated.
    pub witnesses: Vec<Vec<u64>>,
}

fn pow3(e: u64) -> BigUint {
    BigUint::from(3u32).pow(u32::try_from(e).expect("exponent fits u32"))
}

/// Maximum of `m_1 ... m_k` over partitions of `n >= 2`:
/// `3^{n/3}`, `4 * 3^{(n-4)/3}`, or `2 * 3^{(n-2)/3}` by `n mod 3`.
pub fn max_product_closed(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "max_product_closed",
            n,
            requires: "n >= 2",
        });
    }
    Ok(match n % 3 {
        0 => pow3(n / 3),
        1 => BigUint::from(4u32) * pow3((n - 4) / 3),
        _ => BigUint::from(2u32) * pow3((n - 2) / 3),
    })
}

/// Second-largest product value `16 * 3^{(n-8)/3}` for `n >= 8`,
/// `n = 2 mod 3`; other residues have no closed form here.
pub fn second_max_product_closed(n: u64) -> Result<BigUint> {
    if n < 8 || n % 3 != 2 {
        return Err(Error::OutOfRange {
            what: "second_max_product_closed",
            n,
            requires: "n >= 8 and n = 2 mod 3",
        });
    }
    Ok(BigUint::from(16u32) * pow3((n - 8) / 3))
}

/// Number of distinct part multisets achieving the maximum product:
/// 2 for `n = 1 mod 3` (one 4 versus two 2s), otherwise 1.
pub fn max_witness_multiplicity(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "max_witness_multiplicity",
            n,
            requires: "n >= 2",
        });
    }
    Ok(if n % 3 == 1 { 2 } else { 1 })
}

/// [`max_witness_multiplicity`] by enumeration; subject to [`SPECTRUM_CAP`].
pub fn max_witness_multiplicity_enumerated(n: u64) -> Result<u64> {
    let spectrum = product_spectrum(n, 1)?;
    Ok(spectrum[0].witnesses.len() as u64)
}

/// The `top_k` distinct product values over all partitions of `n`, in
/// decreasing order, each with its complete witness list.
///
/// Enumerates partitions in non-increasing part order, pruning branches
/// whose optimistic completion (`current * max_product(remaining)`) cannot
/// reach the current k-th best value.
pub fn product_spectrum(n: u64, top_k: usize) -> Result<Vec<PartitionProductRecord>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "product_spectrum",
            n,
            requires: "n >= 2",
        });
    }
    if n > SPECTRUM_CAP {
        return Err(Error::SpectrumCap {
            n,
            cap: SPECTRUM_CAP,
        });
    }
    if top_k == 0 {
        return Err(Error::OutOfRange {
            what: "product_spectrum",
            n: 0,
            requires: "top_k >= 1",
        });
    }

    // Products for n <= 60 stay below 3^20 < 2^32; u128 is ample.
    let bound: Vec<u128> = (0..=n)
        .map(|r| match r {
            0 | 1 => 1u128,
            _ => {
                let b = max_product_closed(r).expect("r >= 2");
                u128::try_from(&b).expect("fits u128")
            }
        })
        .collect();

    let mut found: TopValues = TopValues::new(top_k);
    let mut parts: Vec<u64> = Vec::new();
    enumerate(n, n, 1, &mut parts, &bound, &mut found);

    Ok(found
        .values
        .into_iter()
        .rev()
        .enumerate()
        .map(|(i, (value, witnesses))| PartitionProductRecord {
            n,
            rank: i + 1,
            value: BigUint::from(value),
            witnesses,
        })
        .collect())
}

/// Top distinct values with witnesses, keyed ascending so the floor is the
/// first entry.
struct TopValues {
    cap: usize,
    values: BTreeMap<u128, Vec<Vec<u64>>>,
}

impl TopValues {
    fn new(cap: usize) -> Self {
        TopValues {
            cap,
            values: BTreeMap::new(),
        }
    }

    /// Smallest value still in contention, once the table is full.
    fn floor(&self) -> Option<u128> {
        if self.values.len() < self.cap {
            None
        } else {
            self.values.keys().next().copied()
        }
    }

    fn offer(&mut self, product: u128, parts: &[u64]) {
        if let Some(f) = self.floor() {
            if product < f {
                return;
            }
        }
        self.values.entry(product).or_default().push(parts.to_vec());
        if self.values.len() > self.cap {
            let drop = *self.values.keys().next().expect("nonempty");
            self.values.remove(&drop);
        }
    }
}

fn enumerate(
    remaining: u64,
    max_part: u64,
    product: u128,
    parts: &mut Vec<u64>,
    bound: &[u128],
    found: &mut TopValues,
) {
    if remaining == 0 {
        found.offer(product, parts);
        return;
    }
    // Ties must survive pruning: witnesses for the k-th value stay complete.
    if let Some(f) = found.floor() {
        if product * bound[remaining as usize] < f {
            return;
        }
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        enumerate(
            remaining - part,
            part,
            product * u128::from(part),
            parts,
            bound,
            found,
        );
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value_of(n: u64, rank: usize) -> u64 {
        let spectrum = product_spectrum(n, rank).unwrap();
        u64::try_from(&spectrum[rank - 1].value).unwrap()
    }

    #[test]
    fn closed_form_reference_values() {
        assert_eq!(max_product_closed(6).unwrap(), BigUint::from(9u32));
        assert_eq!(max_product_closed(8).unwrap(), BigUint::from(18u32));
        assert_eq!(max_product_closed(10).unwrap(), BigUint::from(36u32));
        assert!(max_product_closed(1).is_err());
    }

    #[test]
    fn second_largest_reference_values() {
        assert_eq!(second_max_product_closed(8).unwrap(), BigUint::from(16u32));
        assert_eq!(second_max_product_closed(11).unwrap(), BigUint::from(48u32));
        assert_eq!(
            second_max_product_closed(14).unwrap(),
            BigUint::from(144u32)
        );
        assert!(second_max_product_closed(7).is_err());
        assert!(second_max_product_closed(9).is_err());
        assert!(second_max_product_closed(5).is_err());
    }

    #[test]
    fn spectrum_reference_values() {
        let s8 = product_spectrum(8, 3).unwrap();
        let values: Vec<u64> = s8
            .iter()
            .map(|r| u64::try_from(&r.value).unwrap())
            .collect();
        assert_eq!(values, vec![18, 16, 15]);
        assert_eq!(s8[0].witnesses, vec![vec![3, 3, 2]]);
        assert_eq!(s8[1].witnesses.len(), 3); // {4,4}, {4,2,2}, {2,2,2,2}
        assert_eq!(s8[2].witnesses, vec![vec![5, 3]]);

        let s2 = product_spectrum(2, 1).unwrap();
        assert_eq!(u64::try_from(&s2[0].value).unwrap(), 2);
        assert_eq!(s2[0].witnesses, vec![vec![2]]);

        assert_eq!(value_of(11, 1), 54);
        assert_eq!(value_of(11, 2), 48);
    }

    #[test]
    fn spectrum_rejects_out_of_bounds() {
        assert!(matches!(
            product_spectrum(61, 1),
            Err(Error::SpectrumCap { n: 61, cap: 60 })
        ));
        assert!(product_spectrum(1, 1).is_err());
        assert!(product_spectrum(10, 0).is_err());
    }

    #[test]
    fn closed_forms_match_enumeration_up_to_cap() {
        for n in 2..=SPECTRUM_CAP {
            let spectrum = product_spectrum(n, 2).unwrap();
            assert_eq!(spectrum[0].value, max_product_closed(n).unwrap(), "n={n}");
            if n % 3 == 2 && n >= 8 {
                assert_eq!(
                    spectrum[1].value,
                    second_max_product_closed(n).unwrap(),
                    "n={n}"
                );
            }
        }
    }

    #[test]
    fn witness_multiplicity_closed_form_matches_enumeration() {
        assert_eq!(max_witness_multiplicity(7).unwrap(), 2);
        assert_eq!(max_witness_multiplicity(6).unwrap(), 1);
        assert_eq!(max_witness_multiplicity(4).unwrap(), 2);
        for n in 2..=SPECTRUM_CAP {
            assert_eq!(
                max_witness_multiplicity(n).unwrap(),
                max_witness_multiplicity_enumerated(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn witnesses_sum_and_multiply_correctly() {
        for n in 2..=40u64 {
            for record in product_spectrum(n, 3).unwrap() {
                assert!(!record.witnesses.is_empty());
                for w in &record.witnesses {
                    assert_eq!(w.iter().sum::<u64>(), n);
                    let prod: u128 = w.iter().map(|&p| u128::from(p)).product();
                    assert_eq!(BigUint::from(prod), record.value);
                }
            }
        }
    }

    #[test]
    fn maximizing_multisets_use_only_small_parts() {
        // Structure of every maximum witness: parts in {2,3,4}, at most two
        // 2s, at most one 4, never a 4 and a 2 together. (n = 2 is the lone
        // {2} case and satisfies all of these.)
        for n in 2..=SPECTRUM_CAP {
            let top = &product_spectrum(n, 1).unwrap()[0];
            for w in &top.witnesses {
                let twos = w.iter().filter(|&&p| p == 2).count();
                let fours = w.iter().filter(|&&p| p == 4).count();
                assert!(w.iter().all(|&p| (2..=4).contains(&p)), "n={n} w={w:?}");
                assert!(twos <= 2, "n={n} w={w:?}");
                assert!(fours <= 1, "n={n} w={w:?}");
                assert!(!(fours >= 1 && twos >= 1), "n={n} w={w:?}");
            }
        }
    }
}
