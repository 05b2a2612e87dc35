//! Integer partitions, rectangle complements and `r`-colored partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its positive parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Trailing zero parts are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|π|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn fits_rectangle(&self, rows: u32, cols: u32) -> bool {
        self.0.len() <= rows as usize && self.0.first().is_none_or(|&p| p <= cols)
    }

    /// `(d′ − π_d ≥ ⋯ ≥ d′ − π_1)` with `π` padded to `d` parts.
    pub fn complement(&self, rows: u32, cols: u32) -> Result<Partition> {
        if !self.fits_rectangle(rows, cols) {
            return Err(Error::DoesNotFit { partition: self.0.clone(), rows, cols });
        }
        let parts = (1..=rows as usize).rev().map(|i| cols - self.part(i)).collect();
        Partition::new(parts)
    }
}

/// All partitions fitting a `rows × cols` rectangle, in lexicographic order of
/// their padded part vectors.
pub fn enumerate_rect(rows: u32, cols: u32) -> Vec<Partition> {
    fn go(rows: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rows == 0 {
            out.push(Partition::new(cur.clone()).expect("generated parts are decreasing"));
            return;
        }
        for p in 0..=max {
            cur.push(p);
            go(rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions fitting the rectangle with `|π| ≤ budget`.
pub fn enumerate_rect_bounded(rows: u32, cols: u32, budget: u32) -> Vec<Partition> {
    fn go(rows: u32, max: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("generated parts are decreasing"));
        if rows == 0 {
            return;
        }
        for p in 1..=max.min(left) {
            cur.push(p);
            go(rows - 1, p, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, budget, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of `n`, parts in decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered `r`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoredPartition(Vec<Partition>);

impl ColoredPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        ColoredPartition(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }
}

/// All `r`-colored partitions of `m`.
pub fn colored_partitions(r: usize, m: u32) -> Vec<ColoredPartition> {
    assert!(r >= 1, "need at least one color");
    let by_size: Vec<Vec<Partition>> = (0..=m).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(r: usize, left: u32, by_size: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<ColoredPartition>) {
        if cur.len() + 1 == r {
            for p in &by_size[left as usize] {
                cur.push(p.clone());
                out.push(ColoredPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for size in 0..=left {
            for p in &by_size[size as usize] {
                cur.push(p.clone());
                go(r, left - size, by_size, cur, out);
                cur.pop();
            }
        }
    }
    go(r, m, &by_size, &mut cur, &mut out);
    out
}

/// Number of `r`-colored partitions of `m`: the coefficient of `q^m` in
/// `∏_{n≥1} (1 − q^n)^{−r}`.
pub fn colored_partition_count(r: usize, m: u32) -> u64 {
    let m = m as usize;
    let mut coeffs = vec![0u64; m + 1];
    coeffs[0] = 1;
    for _ in 0..r {
        for n in 1..=m {
            for k in n..=m {
                coeffs[k] += coeffs[k - n];
            }
        }
    }
    coeffs[m]
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn fits_examples() {
        assert!(p(&[2, 1]).fits_rectangle(2, 3));
        assert!(Partition::empty().fits_rectangle(0, 0));
        assert!(!p(&[3]).fits_rectangle(2, 2));
        assert!(!p(&[1, 1, 1]).fits_rectangle(2, 5));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p(&[3, 1]).complement(2, 3).unwrap(), p(&[2]));
        assert_eq!(Partition::empty().complement(2, 3).unwrap(), p(&[3, 3]));
        assert_eq!(p(&[4, 4, 4]).complement(3, 4).unwrap(), Partition::empty());
        assert!(p(&[3]).complement(2, 2).is_err());
    }

    #[test]
    fn complement_is_involution() {
        for d in 0..=4 {
            for dp in 0..=4 {
                for q in enumerate_rect(d, dp) {
                    let c = q.complement(d, dp).unwrap();
                    assert!(c.fits_rectangle(d, dp));
                    assert_eq!(c.complement(d, dp).unwrap(), q);
                }
            }
        }
    }

    #[test]
    fn rect_examples() {
        assert_eq!(enumerate_rect(1, 1), vec![Partition::empty(), p(&[1])]);
        assert_eq!(enumerate_rect(0, 5), vec![Partition::empty()]);
        assert_eq!(enumerate_rect(2, 2).len(), 6);
    }

    #[test]
    fn rect_counts_are_binomial() {
        for d in 0..=6u32 {
            for dp in 0..=6u32 {
                let all = enumerate_rect(d, dp);
                assert_eq!(all.len() as u64, binomial((d + dp) as u64, d as u64));
                let mut dedup = all.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }

    #[test]
    fn bounded_rect_matches_filter() {
        for d in 0..=4 {
            for dp in 0..=4 {
                for b in 0..=6 {
                    let mut want: Vec<_> = enumerate_rect(d, dp).into_iter().filter(|q| q.size() <= b).collect();
                    want.sort();
                    assert_eq!(enumerate_rect_bounded(d, dp, b), want);
                }
            }
        }
    }

    #[test]
    fn colored_examples() {
        assert_eq!(colored_partitions(1, 3).len(), 3);
        assert_eq!(colored_partitions(2, 2).len(), 5);
        for r in 1..=3 {
            assert_eq!(colored_partitions(r, 0).len(), 1);
        }
    }

    /// Power-series oracle: multiply out `(1 − q^n)^{−1}` r times as truncated
    /// geometric series.
    fn series_oracle(r: usize, m: usize) -> u64 {
        let mut acc = vec![0u64; m + 1];
        acc[0] = 1;
        for _ in 0..r {
            for n in 1..=m {
                let mut next = vec![0u64; m + 1];
                for (i, &a) in acc.iter().enumerate() {
                    let mut j = i;
                    while j <= m {
                        next[j] += a;
                        j += n;
                    }
                }
                acc = next;
            }
        }
        acc[m]
    }

    #[test]
    fn colored_counts_match_series() {
        for r in 1..=3 {
            for m in 0..=8u32 {
                let list = colored_partitions(r, m);
                let oracle = series_oracle(r, m as usize);
                assert_eq!(list.len() as u64, oracle, "r={r} m={m}");
                assert_eq!(colored_partition_count(r, m), oracle);
                assert!(list.iter().all(|c| c.size() == m && c.colors() == r));
            }
        }
    }

    #[test]
    fn serde_is_plain_array() {
        let q = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,1]");
        let c = ColoredPartition::new(vec![q, Partition::empty()]);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[3,1],[]]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
