//! Exact ranks of sparse integer matrices, over GF(2) and over the rationals.
//!
//! Both routines reduce vectors one at a time against a table of pivots keyed
//! by leading index, i.e. incremental row echelon form.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

/// Sparse vector: strictly increasing indices with nonzero values.
pub type SparseVec = Vec<(usize, i64)>;

/// Rank over GF(2) of the span of `vectors` in a space of dimension `len`.
pub fn rank_gf2(vectors: &[SparseVec], len: usize) -> usize {
    let words = len.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for v in vectors {
        let mut bits = vec![0u64; words];
        for &(i, x) in v {
            if x.rem_euclid(2) == 1 {
                bits[i / 64] ^= 1 << (i % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match pivots.get(&lead) {
                Some(p) => bits.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(j, w)| j * 64 + w.trailing_zeros() as usize)
}

/// Rank over the rationals by fraction-free elimination.
///
/// Runs in `i128` and falls back to arbitrary precision if any intermediate
/// overflows.
pub fn rank_rational(vectors: &[SparseVec]) -> usize {
    rank_fraction_free::<i128>(vectors).unwrap_or_else(|| {
        rank_fraction_free::<BigInt>(vectors).expect("arbitrary precision never overflows")
    })
}

/// Returns `None` on overflow of `T`.
fn rank_fraction_free<T>(vectors: &[SparseVec]) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + From<i64>,
{
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for v in vectors {
        let mut row: Vec<(usize, T)> = v
            .iter()
            .filter(|(_, x)| *x != 0)
            .map(|&(i, x)| (i, T::from(x)))
            .collect();
        while let Some((lead, _)) = row.first() {
            let Some(p) = pivots.get(lead) else {
                let lead = *lead;
                pivots.insert(lead, row);
                break;
            };
            row = eliminate(&row, p)?;
        }
    }
    Some(pivots.len())
}

/// `p_0 * row - row_0 * p`, divided by its content. Both share a leading index.
fn eliminate<T>(row: &[(usize, T)], p: &[(usize, T)]) -> Option<Vec<(usize, T)>>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let g = row[0].1.gcd(&p[0].1);
    let a = p[0].1.clone() / g.clone();
    let b = row[0].1.clone() / g;
    let scaled_row = |x: &T| a.checked_mul(x);
    let scaled_pivot = |x: &T| T::zero().checked_sub(&b.checked_mul(x)?);
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    loop {
        let (idx, val) = match (row.get(i), p.get(j)) {
            (None, None) => break,
            (Some((x, u)), None) => {
                i += 1;
                (*x, scaled_row(u)?)
            }
            (None, Some((y, w))) => {
                j += 1;
                (*y, scaled_pivot(w)?)
            }
            (Some((x, u)), Some((y, w))) => match x.cmp(y) {
                Ordering::Less => {
                    i += 1;
                    (*x, scaled_row(u)?)
                }
                Ordering::Greater => {
                    j += 1;
                    (*y, scaled_pivot(w)?)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (*x, scaled_row(u)?.checked_sub(&b.checked_mul(w)?)?)
                }
            },
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    let content = out
        .iter()
        .fold(T::zero(), |acc, (_, x)| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for (_, x) in &mut out {
            *x = x.clone() / content.clone();
        }
    }
    Some(out)
}
