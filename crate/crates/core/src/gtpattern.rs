//! Gelfand-Tsetlin patterns.
//!
//! Rows are stored top first: `rows[j-1]` is `λ^j` and has length `j`. The
//! last row is the bounding sequence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{validate_sequence, FiniteWeight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<PatternRepr> for GtPattern {
    type Error = Error;
    fn try_from(p: PatternRepr) -> Result<Self> {
        GtPattern::validate(p.rows)
    }
}

impl From<GtPattern> for PatternRepr {
    fn from(p: GtPattern) -> Self {
        PatternRepr { rows: p.rows }
    }
}

/// Statistics attached to a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternStats {
    pub weight: FiniteWeight,
    /// `d[i-1][j-1] = d_{i,j}`, zero below the diagonal.
    pub d: Vec<Vec<i64>>,
    pub d_prime: Vec<Vec<i64>>,
    pub tri_area: i64,
    pub trap_area: i64,
}

impl GtPattern {
    /// Checks shape and interlacing `λ^{j+1}_i ≥ λ^j_i ≥ λ^{j+1}_{i+1}`.
    pub fn validate(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidInput("a pattern needs at least one row".into()));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::InvalidInput(format!("row {} has length {}, expected {}", idx + 1, row.len(), idx + 1)));
            }
        }
        for j in 1..rows.len() {
            for i in 1..=j {
                let upper = rows[j][i - 1];
                let mid = rows[j - 1][i - 1];
                let lower = rows[j][i];
                if !(upper >= mid && mid >= lower) {
                    return Err(Error::Interlacing { i, j });
                }
            }
        }
        Ok(GtPattern { rows })
    }

    /// `r`, one less than the number of rows.
    pub fn rank(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `λ^j_i`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[j - 1][i - 1]
    }

    pub fn bounding(&self) -> &[i64] {
        self.rows.last().unwrap()
    }

    /// `d_{i,j} = λ^{j+1}_i − λ^j_i`.
    pub fn d(&self, i: usize, j: usize) -> i64 {
        self.entry(i, j + 1) - self.entry(i, j)
    }

    /// `d′_{i,j} = λ^j_i − λ^{j+1}_{i+1}`.
    pub fn d_prime(&self, i: usize, j: usize) -> i64 {
        self.entry(i, j) - self.entry(i + 1, j + 1)
    }

    /// Row sums differences `a_j`, as a weight.
    pub fn weight(&self) -> FiniteWeight {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        let coords: Vec<i64> = (0..sums.len()).map(|j| sums[j] - if j == 0 { 0 } else { sums[j - 1] }).collect();
        FiniteWeight::from_coords(self.rank(), &coords).expect("pattern of rank ≥ 1")
    }

    pub fn tri_area(&self) -> i64 {
        self.pairs().map(|(i, j)| self.d(i, j) * self.d_prime(i, j)).sum()
    }

    pub fn trap_area(&self) -> i64 {
        self.pairs().map(|(i, j)| self.d(i, j) * (i..=j).map(|p| self.d_prime(p, j)).sum::<i64>()).sum()
    }

    /// Index pairs `1 ≤ i ≤ j ≤ r` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        index_pairs(self.rank())
    }

    pub fn stats(&self) -> PatternStats {
        let r = self.rank();
        let mut d = vec![vec![0; r]; r];
        let mut dp = vec![vec![0; r]; r];
        for (i, j) in self.pairs() {
            d[i - 1][j - 1] = self.d(i, j);
            dp[i - 1][j - 1] = self.d_prime(i, j);
        }
        PatternStats { weight: self.weight(), d, d_prime: dp, tri_area: self.tri_area(), trap_area: self.trap_area() }
    }

    /// The shifted pattern `P^k` with bounding sequence `λ + kθ`.
    pub fn shift(&self, k: i64) -> GtPattern {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(jdx, row)| {
                let j = jdx + 1;
                row.iter()
                    .enumerate()
                    .map(|(idx, &v)| {
                        let i = idx + 1;
                        if i == 1 && j > 1 {
                            v + 2 * k
                        } else if i == j && i > 1 {
                            v
                        } else {
                            v + k
                        }
                    })
                    .collect()
            })
            .collect();
        GtPattern { rows }
    }

    /// Rows `λ^s_s.., …, λ^{r+1}_s..` (suffixes from column `s`).
    pub fn restrict(&self, s: usize) -> GtPattern {
        let rows = self.rows[s - 1..].iter().map(|row| row[s - 1..].to_vec()).collect();
        GtPattern { rows }
    }
}

/// `(i, j)` with `1 ≤ i ≤ j ≤ r`, ordered by `j` then `i`.
pub fn index_pairs(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=r).flat_map(|j| (1..=j).map(move |i| (i, j)))
}

/// All patterns with the given bounding sequence, ordered lexicographically
/// by rows from the bottom up.
pub fn enumerate_patterns(seq: &[i64]) -> Result<Vec<GtPattern>> {
    validate_sequence(seq)?;
    let n = seq.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![seq.to_vec()];
    fn fill_row(below: &[i64], i: usize, cur: &mut Vec<i64>, acc: &mut Vec<Vec<i64>>) {
        if i == below.len() - 1 {
            acc.push(cur.clone());
            return;
        }
        for v in below[i + 1]..=below[i] {
            cur.push(v);
            fill_row(below, i + 1, cur, acc);
            cur.pop();
        }
    }
    fn go(rows: &mut Vec<Vec<i64>>, n: usize, out: &mut Vec<GtPattern>) {
        if rows.len() == n {
            let mut rs = rows.clone();
            rs.reverse();
            out.push(GtPattern { rows: rs });
            return;
        }
        let mut choices = Vec::new();
        fill_row(rows.last().unwrap(), 0, &mut Vec::new(), &mut choices);
        for c in choices {
            rows.push(c);
            go(rows, n, out);
            rows.pop();
        }
    }
    go(&mut rows, n, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(rows: &[&[i64]]) -> GtPattern {
        GtPattern::validate(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(GtPattern::validate(vec![vec![1], vec![2, 0], vec![2, 1, 0]]).is_ok());
        assert_eq!(GtPattern::validate(vec![vec![2], vec![1, 0], vec![2, 1, 0]]), Err(Error::Interlacing { i: 1, j: 1 }));
        assert!(GtPattern::validate(vec![vec![0], vec![0, 0], vec![0, 0, 0]]).is_ok());
        assert!(GtPattern::validate(vec![vec![0], vec![0]]).is_err());
    }

    #[test]
    fn stats_rank_two() {
        let p = pat(&[&[1], &[2, 0], &[2, 1, 0]]);
        let s = p.stats();
        assert!(s.weight.is_zero());
        assert_eq!((p.d(1, 1), p.d_prime(1, 1)), (1, 1));
        assert_eq!((p.d(1, 2), p.d(2, 2)), (0, 1));
        assert_eq!((p.d_prime(1, 2), p.d_prime(2, 2)), (1, 0));
        assert_eq!((s.tri_area, s.trap_area), (1, 1));
    }

    #[test]
    fn stats_rank_one() {
        let p = pat(&[&[1], &[2, 0]]);
        assert!(p.weight().is_zero());
        assert_eq!((p.d(1, 1), p.d_prime(1, 1), p.tri_area(), p.trap_area()), (1, 1, 1, 1));
    }

    #[test]
    fn constant_columns_have_zero_area() {
        let p = pat(&[&[3], &[3, 1], &[3, 1, 0]]);
        assert!(p.pairs().all(|(i, j)| p.d(i, j) == 0));
        assert_eq!((p.tri_area(), p.trap_area()), (0, 0));
    }

    #[test]
    fn shift_examples() {
        let p = pat(&[&[1], &[2, 0], &[2, 1, 0]]);
        let q = p.shift(1);
        assert_eq!(q, pat(&[&[2], &[4, 0], &[4, 2, 0]]));
        assert_eq!(q.d(1, 1), 2);
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_patterns(&[2, 0]).unwrap().len(), 3);
        assert_eq!(enumerate_patterns(&[1, 0, 0]).unwrap().len(), 3);
        assert_eq!(enumerate_patterns(&[0, 0, 0, 0]).unwrap().len(), 1);
        assert!(enumerate_patterns(&[0, 1]).is_err());
        // dim V(ϖ1+ϖ2) for sl3
        assert_eq!(enumerate_patterns(&[2, 1, 0]).unwrap().len(), 8);
        let ps = enumerate_patterns(&[2, 1, 0]).unwrap();
        let mut sorted = ps.clone();
        sorted.sort_by(|a, b| a.rows.iter().rev().cmp(b.rows.iter().rev()));
        assert_eq!(ps, sorted);
    }

    fn all_sequences(r: usize, max: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64]];
        for _ in 0..r {
            out = out
                .into_iter()
                .flat_map(|t| {
                    let lo = *t.last().unwrap();
                    (lo..=max).map(move |v| {
                        let mut u = t.clone();
                        u.push(v);
                        u
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|mut t| {
                t.reverse();
                t
            })
            .collect()
    }

    #[test]
    fn shift_laws() {
        for r in 1..=3 {
            for seq in all_sequences(r, 3) {
                for p in enumerate_patterns(&seq).unwrap() {
                    for k in 0..=3 {
                        let q = p.shift(k);
                        assert!(GtPattern::validate(q.rows.clone()).is_ok());
                        assert_eq!(q.weight(), p.weight());
                        for (i, j) in p.pairs() {
                            assert_eq!(q.d(i, j), p.d(i, j) + if i == j { k } else { 0 });
                            assert_eq!(q.d_prime(i, j), p.d_prime(i, j) + if i == 1 { k } else { 0 });
                        }
                        for l in 0..=3 {
                            assert_eq!(q.shift(l), p.shift(k + l));
                        }
                    }
                    assert!(p.trap_area() >= p.tri_area());
                    let excess: i64 = p
                        .pairs()
                        .map(|(i, j)| ((i + 1)..=j).map(|q| p.d(i, j) * p.d_prime(q, j)).sum::<i64>())
                        .sum();
                    assert_eq!(p.trap_area() - p.tri_area(), excess);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = pat(&[&[1], &[2, 0], &[2, 1, 0]]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"rows":[[1],[2,0],[2,1,0]]}"#);
        assert_eq!(serde_json::from_str::<GtPattern>(&s).unwrap(), p);
        assert!(serde_json::from_str::<GtPattern>(r#"{"rows":[[3],[2,0]]}"#).is_err());
    }
}
