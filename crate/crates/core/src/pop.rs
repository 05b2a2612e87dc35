//! Partition overlaid patterns (POPs).

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gtpattern::{enumerate_patterns, index_pairs, GtPattern};
use crate::partitions::{colored_partition_count, enumerate_rect, enumerate_rect_bounded, Partition};
use crate::rootdata::FiniteWeight;

pub type Overlay = BTreeMap<(usize, usize), Partition>;

/// A pattern together with a partition `π(j)^i` in each rectangle
/// `(d_{i,j}, d′_{i,j})`. Every key `1 ≤ i ≤ j ≤ r` is present.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PopRepr", into = "PopRepr")]
pub struct Pop {
    pattern: GtPattern,
    overlay: Overlay,
}

#[derive(Serialize, Deserialize)]
struct PopRepr {
    rows: Vec<Vec<i64>>,
    #[serde(default)]
    overlay: BTreeMap<String, Partition>,
}

impl TryFrom<PopRepr> for Pop {
    type Error = Error;
    fn try_from(repr: PopRepr) -> Result<Self> {
        let pattern = GtPattern::validate(repr.rows)?;
        let mut overlay = Overlay::new();
        for (key, part) in repr.overlay {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::InvalidInput(format!("bad overlay key {key:?}")))?;
            overlay.insert((i, j), part);
        }
        Pop::validate(pattern, overlay)
    }
}

impl From<Pop> for PopRepr {
    fn from(p: Pop) -> Self {
        let overlay = p.overlay.into_iter().map(|((i, j), part)| (format!("{i},{j}"), part)).collect();
        PopRepr { rows: p.pattern.rows().to_vec(), overlay }
    }
}

fn rect(pattern: &GtPattern, i: usize, j: usize) -> (u32, u32) {
    (pattern.d(i, j) as u32, pattern.d_prime(i, j) as u32)
}

/// Depth data of a POP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthInfo {
    /// `d^j_i(P)` keyed by `(i, j)`.
    pub table: BTreeMap<(usize, usize), i64>,
    pub total: i64,
    /// `restricted[s-1] = d(P_s)` for `s = 1..=r+1`.
    pub restricted: Vec<i64>,
}

/// Both sides of the area identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AreaReport {
    pub trap_area: i64,
    pub tri_area: i64,
    pub depth: i64,
    pub overlay_size: i64,
    pub half_norm_gap: Rational64,
}

impl AreaReport {
    pub fn holds(&self) -> bool {
        let mid = self.tri_area + self.depth - self.overlay_size;
        self.trap_area == mid && Rational64::from_integer(mid) == self.half_norm_gap
    }
}

/// The shift-invariant data `I(P_s)` of a POP, keyed by the original indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    pub d: BTreeMap<(usize, usize), i64>,
    pub d_prime: BTreeMap<(usize, usize), i64>,
    pub overlay: BTreeMap<(usize, usize), Partition>,
}

impl InvariantSet {
    pub fn union(mut self, other: &InvariantSet) -> InvariantSet {
        self.d.extend(other.d.iter().map(|(k, v)| (*k, *v)));
        self.d_prime.extend(other.d_prime.iter().map(|(k, v)| (*k, *v)));
        self.overlay.extend(other.overlay.iter().map(|(k, v)| (*k, v.clone())));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty() && self.d_prime.is_empty() && self.overlay.is_empty()
    }
}

impl Pop {
    /// Builds a POP; missing overlay keys default to the empty partition.
    pub fn validate(pattern: GtPattern, mut overlay: Overlay) -> Result<Self> {
        let r = pattern.rank();
        if let Some(&(i, j)) = overlay.keys().find(|&&(i, j)| !(1 <= i && i <= j && j <= r)) {
            return Err(Error::InvalidInput(format!("overlay key ({i},{j}) outside 1 ≤ i ≤ j ≤ {r}")));
        }
        for (i, j) in index_pairs(r) {
            let part = overlay.entry((i, j)).or_default();
            let (rows, cols) = rect(&pattern, i, j);
            if !part.fits_rectangle(rows, cols) {
                return Err(Error::OverlayFit { i, j, rows, cols });
            }
        }
        Ok(Pop { pattern, overlay })
    }

    pub fn with_empty_overlay(pattern: GtPattern) -> Self {
        Pop::validate(pattern, Overlay::new()).expect("empty overlay always fits")
    }

    pub fn pattern(&self) -> &GtPattern {
        &self.pattern
    }

    pub fn overlay(&self) -> &Overlay {
        &self.overlay
    }

    pub fn rank(&self) -> usize {
        self.pattern.rank()
    }

    pub fn partition(&self, i: usize, j: usize) -> &Partition {
        &self.overlay[&(i, j)]
    }

    pub fn d(&self, i: usize, j: usize) -> i64 {
        self.pattern.d(i, j)
    }

    pub fn d_prime(&self, i: usize, j: usize) -> i64 {
        self.pattern.d_prime(i, j)
    }

    pub fn weight(&self) -> FiniteWeight {
        self.pattern.weight()
    }

    pub fn bounding(&self) -> &[i64] {
        self.pattern.bounding()
    }

    /// The dominant weight of the bounding sequence.
    pub fn lambda(&self) -> FiniteWeight {
        FiniteWeight::from_coords(self.rank(), self.bounding()).expect("rank ≥ 1")
    }

    /// `P_s`, a POP of rank `r + 1 − s`.
    pub fn restrict(&self, s: usize) -> Result<Pop> {
        let r = self.rank();
        if s == 0 || s > r + 1 {
            return Err(Error::OutOfRange(s));
        }
        let pattern = self.pattern.restrict(s);
        let overlay = self
            .overlay
            .iter()
            .filter(|((i, _), _)| *i >= s)
            .map(|(&(i, j), p)| ((i + 1 - s, j + 1 - s), p.clone()))
            .collect();
        Ok(Pop { pattern, overlay })
    }

    /// `d^j_i(P) = d_{i,j} Σ_{p=i+1}^{j} d′_{p,j} + |π(j)^i|`.
    pub fn depth_entry(&self, i: usize, j: usize) -> i64 {
        let trap: i64 = ((i + 1)..=j).map(|p| self.d_prime(p, j)).sum();
        self.d(i, j) * trap + i64::from(self.partition(i, j).size())
    }

    pub fn total_depth(&self) -> i64 {
        self.pattern.pairs().map(|(i, j)| self.depth_entry(i, j)).sum()
    }

    /// `d(P_s) = Σ_{s ≤ i ≤ j ≤ r} d^j_i(P)`.
    pub fn restricted_depth(&self, s: usize) -> i64 {
        self.pattern.pairs().filter(|&(i, _)| i >= s).map(|(i, j)| self.depth_entry(i, j)).sum()
    }

    pub fn depth(&self) -> DepthInfo {
        let r = self.rank();
        let table: BTreeMap<_, _> = self.pattern.pairs().map(|(i, j)| ((i, j), self.depth_entry(i, j))).collect();
        let restricted = (1..=r + 1).map(|s| self.restricted_depth(s)).collect();
        DepthInfo { total: table.values().sum(), table, restricted }
    }

    pub fn overlay_size(&self) -> i64 {
        self.overlay.values().map(|p| i64::from(p.size())).sum()
    }

    pub fn area_report(&self) -> AreaReport {
        let lam = self.lambda();
        let wt = self.weight();
        AreaReport {
            trap_area: self.pattern.trap_area(),
            tri_area: self.pattern.tri_area(),
            depth: self.total_depth(),
            overlay_size: self.overlay_size(),
            half_norm_gap: (lam.norm() - wt.norm()) / 2,
        }
    }

    pub fn area_identity(&self) -> bool {
        self.area_report().holds()
    }

    /// `P^k`: shifted pattern, same overlay.
    pub fn shift(&self, k: i64) -> Pop {
        Pop { pattern: self.pattern.shift(k), overlay: self.overlay.clone() }
    }

    /// `I(P_s)`.
    pub fn invariant_set(&self, s: usize) -> Result<InvariantSet> {
        let r = self.rank();
        if s == 0 || s > r + 1 {
            return Err(Error::OutOfRange(s));
        }
        let mut out = InvariantSet::default();
        for (i, j) in self.pattern.pairs() {
            if s <= i && i < j {
                out.d.insert((i, j), self.d(i, j));
            }
            if s < i {
                out.d_prime.insert((i, j), self.d_prime(i, j));
            }
            if s <= i {
                out.overlay.insert((i, j), self.partition(i, j).clone());
            }
        }
        Ok(out)
    }

    /// The slice `I^j_s(P)` for `1 ≤ s ≤ j ≤ r`.
    pub fn invariant_slice(&self, s: usize, j: usize) -> Result<InvariantSet> {
        let r = self.rank();
        if s == 0 || s > j || j > r {
            return Err(Error::OutOfRange(j));
        }
        let mut out = InvariantSet::default();
        out.overlay.insert((s, j), self.partition(s, j).clone());
        if s < j {
            out.d.insert((s, j), self.d(s, j));
            for i in (s + 1)..=j {
                out.d_prime.insert((i, j), self.d_prime(i, j));
            }
        }
        Ok(out)
    }

    /// `d_{ℓ,ℓ}(P) ≥ d(P_ℓ)` for every `ℓ`.
    pub fn is_stable(&self) -> bool {
        self.is_stable_from(1)
    }

    /// The stability condition restricted to `s ≤ ℓ ≤ r`.
    pub fn is_stable_from(&self, s: usize) -> bool {
        (s..=self.rank()).all(|l| self.d(l, l) >= self.restricted_depth(l))
    }
}

/// Filters for [`enumerate_pops`].
#[derive(Clone, Debug, Default)]
pub struct PopFilter {
    pub weight: Option<FiniteWeight>,
    pub depth: Option<i64>,
}

/// All POPs with bounding sequence `seq` matching the filters, ordered by
/// pattern then by overlay.
pub fn enumerate_pops(seq: &[i64], filter: &PopFilter) -> Result<Vec<Pop>> {
    let mut out = Vec::new();
    for pattern in enumerate_patterns(seq)? {
        if let Some(w) = &filter.weight {
            if pattern.rank() != w.rank() || &pattern.weight() != w {
                continue;
            }
        }
        let pairs: Vec<_> = pattern.pairs().collect();
        let base: i64 = pairs
            .iter()
            .map(|&(i, j)| pattern.d(i, j) * ((i + 1)..=j).map(|p| pattern.d_prime(p, j)).sum::<i64>())
            .sum();
        let budget = match filter.depth {
            Some(d) if d < base => continue,
            Some(d) if d - base > pattern.trap_area() => continue,
            Some(d) => Some((d - base) as u32),
            None => None,
        };
        let choices: Vec<Vec<Partition>> = pairs
            .iter()
            .map(|&(i, j)| {
                let (rows, cols) = rect(&pattern, i, j);
                match budget {
                    Some(b) => enumerate_rect_bounded(rows, cols, b),
                    None => enumerate_rect(rows, cols),
                }
            })
            .collect();
        let mut cur = Vec::with_capacity(pairs.len());
        fn go(
            idx: usize,
            left: Option<u32>,
            pairs: &[(usize, usize)],
            choices: &[Vec<Partition>],
            pattern: &GtPattern,
            cur: &mut Vec<Partition>,
            out: &mut Vec<Pop>,
        ) {
            if idx == pairs.len() {
                if left.is_none_or(|l| l == 0) {
                    let overlay = pairs.iter().copied().zip(cur.iter().cloned()).collect();
                    out.push(Pop { pattern: pattern.clone(), overlay });
                }
                return;
            }
            for p in &choices[idx] {
                let next = match left {
                    Some(l) if p.size() > l => continue,
                    Some(l) => Some(l - p.size()),
                    None => None,
                };
                cur.push(p.clone());
                go(idx + 1, next, pairs, choices, pattern, cur, out);
                cur.pop();
            }
        }
        go(0, budget, &pairs, &choices, &pattern, &mut cur, &mut out);
    }
    Ok(out)
}

/// Outcome of comparing `|P(λ+kθ)_{μ,d}|` against colored partitions of `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftBijectionReport {
    pub pop_count: u64,
    pub colored_count: u64,
    /// A member with some `d_{ℓ,ℓ} < k`, if any.
    pub witness: Option<Pop>,
}

impl ShiftBijectionReport {
    pub fn passed(&self) -> bool {
        self.pop_count == self.colored_count && self.witness.is_none()
    }
}

pub fn shift_bijection_check(lambda: &FiniteWeight, mu: &FiniteWeight, depth: i64, k: i64) -> Result<ShiftBijectionReport> {
    if k < depth {
        return Err(Error::InvalidInput(format!("need k ≥ d, got k = {k}, d = {depth}")));
    }
    if !lambda.is_dominant() {
        return Err(Error::InvalidInput(format!("{lambda} is not dominant")));
    }
    let r = lambda.rank();
    let seq = (lambda + &(k * &FiniteWeight::theta(r))).sequence().to_vec();
    let pops = enumerate_pops(&seq, &PopFilter { weight: Some(mu.clone()), depth: Some(depth) })?;
    let witness = pops.iter().find(|p| (1..=r).any(|l| p.d(l, l) < k)).cloned();
    Ok(ShiftBijectionReport {
        pop_count: pops.len() as u64,
        colored_count: colored_partition_count(r, depth as u32),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(rows: &[&[i64]]) -> GtPattern {
        GtPattern::validate(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn pop1(pi: &[u32]) -> Pop {
        Pop::validate(pat(&[&[1], &[2, 0]]), [((1, 1), part(pi))].into_iter().collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Pop::validate(pat(&[&[1], &[2, 0]]), [((1, 1), part(&[1]))].into_iter().collect()).is_ok());
        assert_eq!(
            Pop::validate(pat(&[&[1], &[2, 0]]), [((1, 1), part(&[2]))].into_iter().collect()),
            Err(Error::OverlayFit { i: 1, j: 1, rows: 1, cols: 1 })
        );
        let p = Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]]));
        assert_eq!(p.overlay().len(), 3);
    }

    #[test]
    fn restrict_examples() {
        let p = Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]]));
        assert_eq!(p.restrict(1).unwrap(), p);
        let q = p.restrict(2).unwrap();
        assert_eq!(q.pattern().rows(), &[vec![0], vec![1, 0]]);
        assert_eq!(q.overlay().keys().copied().collect::<Vec<_>>(), vec![(1, 1)]);
        let e = p.restrict(3).unwrap();
        assert_eq!(e.rank(), 0);
        assert_eq!(e.total_depth(), 0);
        assert!(p.restrict(4).is_err());
    }

    #[test]
    fn depth_examples() {
        let p = pop1(&[1]);
        assert_eq!(p.depth_entry(1, 1), 1);
        assert_eq!(p.total_depth(), 1);
        let q = Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]]));
        assert_eq!(q.total_depth(), 0);
        let z = Pop::with_empty_overlay(pat(&[&[0], &[0, 0], &[0, 0, 0]]));
        assert_eq!(z.depth().total, 0);
    }

    #[test]
    fn area_examples() {
        let rep = pop1(&[1]).area_report();
        assert_eq!((rep.trap_area, rep.tri_area, rep.depth, rep.overlay_size), (1, 1, 1, 1));
        assert_eq!(rep.half_norm_gap, Rational64::from_integer(1));
        assert!(rep.holds());
        assert!(Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]])).area_identity());
        assert!(Pop::with_empty_overlay(pat(&[&[0], &[0, 0]])).area_identity());
    }

    #[test]
    fn shift_examples() {
        let p = pop1(&[1]);
        assert_eq!(p.shift(0), p);
        let q = p.shift(2);
        assert_eq!(q.pattern().rows(), &[vec![3], vec![6, 0]]);
        assert_eq!(q.partition(1, 1), &part(&[1]));
        assert_eq!(q.total_depth(), 1);
        assert_eq!((q.d(1, 1), q.d_prime(1, 1)), (3, 3));
    }

    #[test]
    fn invariant_examples() {
        let p = Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]]));
        let i = p.invariant_set(1).unwrap();
        assert_eq!(i.d, [((1, 2), 0)].into_iter().collect());
        assert_eq!(i.d_prime, [((2, 2), 0)].into_iter().collect());
        assert_eq!(i.overlay.len(), 3);
        assert!(p.invariant_set(3).unwrap().is_empty());
        for k in 1..=2 {
            assert_eq!(p.shift(k).invariant_set(1).unwrap(), i);
        }
    }

    #[test]
    fn stability_examples() {
        assert!(pop1(&[1]).is_stable());
        let p = Pop::validate(pat(&[&[2], &[4, 0]]), [((1, 1), part(&[2, 2]))].into_iter().collect()).unwrap();
        assert!(!p.is_stable());
        assert!(Pop::with_empty_overlay(pat(&[&[1], &[2, 0], &[2, 1, 0]])).is_stable());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_pops(&[2, 0], &PopFilter::default()).unwrap().len(), 4);
        assert_eq!(enumerate_pops(&[1, 0, 0], &PopFilter::default()).unwrap().len(), 3);
        assert_eq!(enumerate_pops(&[0, 0, 0], &PopFilter::default()).unwrap().len(), 1);
        // dim W(ϖ1+ϖ2) = 9 for sl3
        assert_eq!(enumerate_pops(&[2, 1, 0], &PopFilter::default()).unwrap().len(), 9);
        assert_eq!(enumerate_pops(&[2, 0, 0], &PopFilter::default()).unwrap().len(), 9);
    }

    #[test]
    fn shift_bijection_examples() {
        let z1 = FiniteWeight::zero(1);
        let rep = shift_bijection_check(&z1, &z1, 1, 1).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.pop_count, 1);
        for k in 0..3 {
            assert!(shift_bijection_check(&z1, &z1, 0, k).unwrap().passed());
        }
        let z2 = FiniteWeight::zero(2);
        let rep = shift_bijection_check(&z2, &z2, 2, 2).unwrap();
        assert_eq!((rep.pop_count, rep.colored_count), (5, 5));
        // three of the five are not shifts of a depth-2 POP of λ = 0
        let w = rep.witness.expect("non-shift member");
        assert_eq!(w.pattern().rows(), &[vec![2], vec![3, 1], vec![4, 2, 0]]);
        assert_eq!((w.d(1, 1), w.d(2, 2)), (1, 1));
        assert!(shift_bijection_check(&z2, &z2, 2, 1).is_err());
    }

    #[test]
    fn json_format() {
        let p = pop1(&[1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"rows":[[1],[2,0]],"overlay":{"1,1":[1]}}"#);
        assert_eq!(serde_json::from_str::<Pop>(&s).unwrap(), p);
        let bad = r#"{"rows":[[1],[2,0]],"overlay":{"1,1":[2]}}"#;
        assert!(serde_json::from_str::<Pop>(bad).is_err());
        let sparse: Pop = serde_json::from_str(r#"{"rows":[[1],[2,0]]}"#).unwrap();
        assert_eq!(sparse.partition(1, 1), &Partition::empty());
    }
}
