//! Exact rank and span membership for sparse Fock vectors, by fraction-free
//! (Bareiss) elimination over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::fock::{FockKey, FockVector};

/// Clears denominators row by row and lays the vectors out over the union of
/// their supports.
fn integer_rows(vectors: &[&FockVector]) -> (Vec<Vec<BigInt>>, usize) {
    let mut index: BTreeMap<&FockKey, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.terms().keys() {
            let n = index.len();
            index.entry(k).or_insert(n);
        }
    }
    let cols = index.len();
    let rows = vectors
        .iter()
        .map(|v| {
            let l = v.terms().values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let mut row = vec![BigInt::zero(); cols];
            for (k, c) in v.terms() {
                row[index[k]] = c.numer() * (&l / c.denom());
            }
            row
        })
        .collect();
    (rows, cols)
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in (col + 1)..cols {
                let num = &pivot_row[col] * &row[j] - &f * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over `Q` of a family of vectors.
pub fn rank(vectors: &[FockVector]) -> usize {
    let refs: Vec<&FockVector> = vectors.iter().collect();
    let (rows, cols) = integer_rows(&refs);
    bareiss_rank(rows, cols)
}

pub fn is_independent(vectors: &[FockVector]) -> bool {
    rank(vectors) == vectors.len()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[FockVector], v: &FockVector) -> bool {
    if v.is_zero() {
        return true;
    }
    let mut refs: Vec<&FockVector> = basis.iter().collect();
    let (rows, cols) = integer_rows(&refs);
    let r0 = bareiss_rank(rows, cols);
    refs.push(v);
    let (rows, cols) = integer_rows(&refs);
    bareiss_rank(rows, cols) == r0
}
