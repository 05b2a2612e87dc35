//! Lattice Fock model of the level-one modules `L(Λ_i)`.
//!
//! A basis vector is `e^γ ⊗ u` with `γ ∈ ϖ_i + Q` and `u` a monomial in the
//! Heisenberg creation modes `α_a(−n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{binomial, colored_partitions};
use crate::rootdata::{translate_weight, AffineWeight, FiniteWeight};
use crate::translate::vertex_eps;

pub type Coeff = BigRational;

/// The creation mode `α_dir(−n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mode {
    pub dir: usize,
    pub n: u32,
}

/// A multiset of modes, sorted by `(dir, n)`.
pub type Monomial = Vec<Mode>;

/// `e^γ ⊗ u` in sector `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockKey {
    pub sector: usize,
    pub gamma: FiniteWeight,
    pub modes: Monomial,
}

impl FockKey {
    pub fn new(sector: usize, gamma: FiniteWeight, mut modes: Monomial) -> Result<Self> {
        let r = gamma.rank();
        if sector > r {
            return Err(Error::OutOfRange(sector));
        }
        if !(&gamma - &FiniteWeight::fundamental(r, sector)).in_root_lattice() {
            return Err(Error::SectorMismatch { expected: sector, found: gamma.residue_class() });
        }
        if let Some(m) = modes.iter().find(|m| m.dir == 0 || m.dir > r || m.n == 0) {
            return Err(Error::InvalidInput(format!("bad mode ({},{})", m.dir, m.n)));
        }
        modes.sort_unstable();
        Ok(FockKey { sector, gamma, modes })
    }

    pub fn rank(&self) -> usize {
        self.gamma.rank()
    }

    /// `Σ n` over the modes.
    pub fn mode_degree(&self) -> u32 {
        self.modes.iter().map(|m| m.n).sum()
    }

    /// `½((γ|γ) − (ϖ_i|ϖ_i)) + Σ n`.
    pub fn energy(&self) -> i64 {
        let w = FiniteWeight::fundamental(self.rank(), self.sector);
        let e = (self.gamma.norm() - w.norm()) / 2;
        debug_assert!(e.is_integer());
        e.to_integer() + i64::from(self.mode_degree())
    }

    /// `t_{γ−ϖ_i}(Λ_i) − mδ`.
    pub fn weight(&self) -> AffineWeight {
        let r = self.rank();
        let shift = &self.gamma - &FiniteWeight::fundamental(r, self.sector);
        translate_weight(&shift, &AffineWeight::fundamental(r, self.sector)).minus_delta(i64::from(self.mode_degree()))
    }

    /// Root coordinates of `γ − ϖ_i`.
    pub fn lattice_offset(&self) -> Vec<i64> {
        (&self.gamma - &FiniteWeight::fundamental(self.rank(), self.sector))
            .root_coords()
            .expect("key invariant: γ − ϖ_i ∈ Q")
    }
}

impl fmt::Display for FockKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(Mode, usize)> = Vec::new();
        for m in &self.modes {
            match groups.last_mut() {
                Some((g, c)) if g == m => *c += 1,
                _ => groups.push((*m, 1)),
            }
        }
        let modes: Vec<String> = groups.iter().map(|(m, c)| format!("({},{})x{c}", m.dir, m.n)).collect();
        write!(f, "gamma={} modes=[{}]", self.gamma, modes.join(","))
    }
}

/// A finite linear combination of basis keys of one sector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockVector {
    rank: usize,
    sector: usize,
    terms: BTreeMap<FockKey, Coeff>,
}

impl FockVector {
    pub fn zero(rank: usize, sector: usize) -> Self {
        FockVector { rank, sector, terms: BTreeMap::new() }
    }

    /// `v_{Λ_i}`: the key `(ϖ_i, ∅)`.
    pub fn vacuum(rank: usize, sector: usize) -> Result<Self> {
        if sector > rank {
            return Err(Error::OutOfRange(sector));
        }
        Ok(Self::basis(FockKey { sector, gamma: FiniteWeight::fundamental(rank, sector), modes: Vec::new() }))
    }

    pub fn basis(key: FockKey) -> Self {
        let mut v = Self::zero(key.rank(), key.sector);
        v.terms.insert(key, Coeff::one());
        v
    }

    pub fn from_terms(rank: usize, sector: usize, terms: impl IntoIterator<Item = (FockKey, Coeff)>) -> Result<Self> {
        let mut v = Self::zero(rank, sector);
        for (k, c) in terms {
            if k.sector != sector || k.rank() != rank {
                return Err(Error::SectorMismatch { expected: sector, found: k.sector });
            }
            v.add_term(k, c);
        }
        Ok(v)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sector(&self) -> usize {
        self.sector
    }

    pub fn terms(&self) -> &BTreeMap<FockKey, Coeff> {
        &self.terms
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &FockKey) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub(crate) fn add_term(&mut self, key: FockKey, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.sector);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        FockVector { rank: self.rank, sector: self.sector, terms }
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Coeff::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rank, self.sector), (other.rank, other.sector), "adding vectors of different sectors");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// `t_{γ−ϖ_i}(Λ_i) − mδ` for a homogeneous vector.
    pub fn weight(&self) -> Result<AffineWeight> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::NotHomogeneous)?;
        let w = first.weight();
        if it.any(|k| k.weight() != w) {
            return Err(Error::NotHomogeneous);
        }
        Ok(w)
    }

    /// One line per term: `gamma=<coords> modes=[(a,n)xmult,…] coeff=<p>/<q>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, c) in &self.terms {
            out.push_str(&format!("{k} coeff={}/{}\n", c.numer(), c.denom()));
        }
        out
    }
}

/// Weight of a homogeneous vector.
pub fn weight_of(v: &FockVector) -> Result<AffineWeight> {
    v.weight()
}

// ---------------------------------------------------------------------------
// polynomials in the creation modes

type Poly = BTreeMap<Monomial, Coeff>;

fn poly_add_term(p: &mut Poly, m: Monomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match p.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn merge(a: &[Mode], b: &[Mode]) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            poly_add_term(&mut out, merge(ma, mb), ca * cb);
        }
    }
    out
}

fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// `(α_a|α_b)` for simple roots of `sl(r+1)`, 1-based.
pub fn cartan(a: usize, b: usize) -> i64 {
    match a.abs_diff(b) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// A root of `sl(r+1)` with the data the vertex operators need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub weight: FiniteWeight,
    /// Simple-root coordinates.
    pub coords: Vec<i64>,
    /// `(α|α_b)` for `b = 1..=r`.
    pub pairings: Vec<i64>,
    pub positive: bool,
}

impl Root {
    pub fn new(weight: &FiniteWeight) -> Result<Self> {
        let coords = weight.root_coords()?;
        if weight.norm() != 2.into() {
            return Err(Error::InvalidInput(format!("{weight} is not a root")));
        }
        let r = weight.rank();
        let pairings = (1..=r).map(|b| (1..=r).map(|a| coords[a - 1] * cartan(a, b)).sum()).collect();
        let positive = coords.iter().all(|&c| c >= 0);
        Ok(Root { weight: weight.clone(), coords, pairings, positive })
    }

    /// `±α_{i,j}`.
    pub fn signed(rank: usize, i: usize, j: usize, positive: bool) -> Self {
        let w = FiniteWeight::positive_root(rank, i, j);
        Root::new(&if positive { w } else { -w }).expect("α_{i,j} is a root")
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn negated(&self) -> Self {
        Root::new(&-&self.weight).expect("negative of a root")
    }

    /// `(i, j)` with the root equal to `±(ε_i − ε_{j+1})`.
    pub fn interval(&self) -> (usize, usize) {
        let nz: Vec<usize> = (0..self.coords.len()).filter(|&a| self.coords[a] != 0).collect();
        (nz[0] + 1, nz[nz.len() - 1] + 1)
    }
}

/// All roots, positive ones first, each group ordered by `(i, j)`.
pub fn all_roots(rank: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for positive in [true, false] {
        for j in 1..=rank {
            for i in 1..=j {
                out.push(Root::signed(rank, i, j, positive));
            }
        }
    }
    out
}

/// Coefficients `S_c`, `c = 0..=max`, of `exp(Σ_{n≥1} α(−n) z^n / n)`.
fn creation_series(root: &Root, max: usize) -> Vec<Poly> {
    let mut s: Vec<Poly> = Vec::with_capacity(max + 1);
    s.push([(Vec::new(), Coeff::one())].into_iter().collect());
    for c in 1..=max {
        let mut acc = Poly::new();
        for n in 1..=c {
            let y: Poly = root
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(a, &k)| (vec![Mode { dir: a + 1, n: n as u32 }], int(k)))
                .collect();
            for (m, coef) in poly_mul(&y, &s[c - n]) {
                poly_add_term(&mut acc, m, coef);
            }
        }
        let inv = Coeff::new(BigInt::one(), BigInt::from(c));
        s.push(acc.into_iter().map(|(m, c)| (m, c * &inv)).collect());
    }
    s
}

/// `u(x_{b,n} − (α|α_b) z^{−n})` grouped by the power `A` of `z^{−1}`,
/// dropping powers above `cap`.
fn annihilation_expansion(root: &Root, u: &[Mode], cap: i64) -> BTreeMap<i64, Poly> {
    let mut acc: BTreeMap<i64, Poly> = [(0, [(Vec::new(), Coeff::one())].into_iter().collect())].into_iter().collect();
    let mut idx = 0;
    while idx < u.len() {
        let m = u[idx];
        let mult = u[idx..].iter().take_while(|x| **x == m).count();
        idx += mult;
        let c = root.pairings[m.dir - 1];
        let mut next: BTreeMap<i64, Poly> = BTreeMap::new();
        let kmax = if c == 0 { 0 } else { mult };
        for k in 0..=kmax {
            let shift = i64::from(m.n) * k as i64;
            let factor = int(binomial(mult as u64, k as u64) as i64) * int(-c).pow(k as i32);
            let rest = vec![m; mult - k];
            for (a, poly) in &acc {
                if a + shift > cap {
                    continue;
                }
                let target = next.entry(a + shift).or_default();
                for (mono, coef) in poly {
                    poly_add_term(target, merge(mono, &rest), coef * &factor);
                }
            }
        }
        acc = next;
    }
    acc
}

/// `x_α ⊗ t^s` acting on `v`.
pub fn act_root_vector(root: &Root, s: i64, v: &FockVector) -> FockVector {
    let rank = v.rank;
    let mut out = FockVector::zero(rank, v.sector);
    if v.is_zero() {
        return out;
    }
    let sector_weight = FiniteWeight::fundamental(rank, v.sector);
    let norm_sign = if root.positive { 1 } else { -1 };
    let mut series: Vec<Poly> = Vec::new();
    for (key, coef) in &v.terms {
        let ag = key.gamma.form(&root.weight);
        debug_assert!(ag.is_integer());
        let n0 = -s - 1 - ag.to_integer();
        // A_minus = n0 + A_plus ≥ 0 and A_plus ≤ mode degree
        let deg = i64::from(key.mode_degree());
        if n0 + deg < 0 {
            continue;
        }
        let sign = vertex_eps(&root.coords, &key.lattice_offset()) * norm_sign;
        let gamma = &key.gamma + &root.weight;
        debug_assert!((&gamma - &sector_weight).in_root_lattice());
        let total = coef * int(sign);
        for (a_plus, poly) in annihilation_expansion(root, &key.modes, deg) {
            let a_minus = n0 + a_plus;
            if a_minus < 0 {
                continue;
            }
            let a_minus = a_minus as usize;
            if series.len() <= a_minus {
                series = creation_series(root, a_minus.max(2 * series.len()));
            }
            for (mono, c) in poly_mul(&poly, &series[a_minus]) {
                let k = FockKey { sector: v.sector, gamma: gamma.clone(), modes: mono };
                out.add_term(k, c * &total);
            }
        }
    }
    out
}

/// `h ⊗ t^n` for `h = Σ h_a α_a` (coordinates in the simple coroots).
pub fn act_cartan(h: &[i64], n: i64, v: &FockVector) -> FockVector {
    let rank = v.rank;
    assert_eq!(h.len(), rank);
    let mut out = FockVector::zero(rank, v.sector);
    for (key, coef) in &v.terms {
        if n == 0 {
            let hw = FiniteWeight::from_root_coords(rank, h);
            let c = key.gamma.form(&hw);
            let c = Coeff::new(BigInt::from(*c.numer()), BigInt::from(*c.denom()));
            out.add_term(key.clone(), coef * c);
        } else if n < 0 {
            for (a, &ha) in h.iter().enumerate() {
                if ha == 0 {
                    continue;
                }
                let mut modes = key.modes.clone();
                let m = Mode { dir: a + 1, n: (-n) as u32 };
                let pos = modes.partition_point(|x| *x <= m);
                modes.insert(pos, m);
                let k = FockKey { sector: key.sector, gamma: key.gamma.clone(), modes };
                out.add_term(k, coef * int(ha));
            }
        } else {
            // n Σ_b (h|α_b) ∂/∂x_{b,n}
            let mut idx = 0;
            while idx < key.modes.len() {
                let m = key.modes[idx];
                let mult = key.modes[idx..].iter().take_while(|x| **x == m).count();
                if i64::from(m.n) == n {
                    let pair: i64 = h.iter().enumerate().map(|(a, &ha)| ha * cartan(a + 1, m.dir)).sum();
                    if pair != 0 {
                        let mut modes = key.modes.clone();
                        modes.remove(idx);
                        let k = FockKey { sector: key.sector, gamma: key.gamma.clone(), modes };
                        out.add_term(k, coef * int(n * pair * mult as i64));
                    }
                }
                idx += mult;
            }
        }
    }
    out
}

/// `α_a(n)`; `a` is 1-based.
pub fn act_heisenberg(a: usize, n: i64, v: &FockVector) -> FockVector {
    let mut h = vec![0; v.rank];
    h[a - 1] = 1;
    act_cartan(&h, n, v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chevalley {
    E,
    F,
}

/// `e_p`, `f_p`; `e_0 = x_{−θ} ⊗ t`, `f_0 = x_θ ⊗ t^{−1}`.
pub fn act_chevalley(p: usize, kind: Chevalley, v: &FockVector) -> Result<FockVector> {
    let r = v.rank;
    if p > r {
        return Err(Error::OutOfRange(p));
    }
    Ok(match (p, kind) {
        (0, Chevalley::E) => act_root_vector(&Root::signed(r, 1, r, false), 1, v),
        (0, Chevalley::F) => act_root_vector(&Root::signed(r, 1, r, true), -1, v),
        (_, Chevalley::E) => act_root_vector(&Root::signed(r, p, p, true), 0, v),
        (_, Chevalley::F) => act_root_vector(&Root::signed(r, p, p, false), 0, v),
    })
}

/// All mode monomials of total degree `m` over `r` directions.
pub fn monomials(r: usize, m: u32) -> Vec<Monomial> {
    colored_partitions(r, m)
        .into_iter()
        .map(|cp| {
            let mut modes: Monomial = cp
                .components()
                .iter()
                .enumerate()
                .flat_map(|(a, p)| p.parts().iter().map(move |&n| Mode { dir: a + 1, n }))
                .collect();
            modes.sort_unstable();
            modes
        })
        .collect()
}

/// Lattice points `γ ∈ ϖ_i + Q` with `½((γ|γ) − (ϖ_i|ϖ_i)) ≤ e`.
pub fn lattice_points(rank: usize, sector: usize, e: i64) -> Vec<FiniteWeight> {
    // representatives with coordinate sum i: (γ|γ) = Σx² − i²/(r+1)
    let bound = 2 * e + sector as i64;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank + 1);
    fn go(left_len: usize, sum_left: i64, sq_left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left_len == 1 {
            if sum_left * sum_left <= sq_left {
                cur.push(sum_left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let lim = (sq_left as f64).sqrt() as i64 + 1;
        for x in -lim..=lim {
            if x * x > sq_left {
                continue;
            }
            cur.push(x);
            go(left_len - 1, sum_left - x, sq_left - x * x, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if bound >= 0 {
        go(rank + 1, sector as i64, bound, &mut cur, &mut raw);
    }
    for c in raw {
        out.push(FiniteWeight::from_coords(rank, &c).expect("rank ≥ 1"));
    }
    out.sort();
    out
}

/// Basis keys of sector `i` with energy at most `e`, sorted.
pub fn basis_keys(rank: usize, sector: usize, e: i64) -> Vec<FockKey> {
    let w = FiniteWeight::fundamental(rank, sector);
    let mut out = Vec::new();
    for gamma in lattice_points(rank, sector, e) {
        let base = ((gamma.norm() - w.norm()) / 2).to_integer();
        for m in 0..=(e - base) {
            for modes in monomials(rank, m as u32) {
                out.push(FockKey { sector, gamma: gamma.clone(), modes });
            }
        }
    }
    out.sort();
    out
}

/// Dimension of the weight space `t_γ(Λ_i) − mδ`, counted from basis keys.
pub fn graded_dim(rank: usize, sector: usize, gamma: &FiniteWeight, m: u32) -> Result<u64> {
    if !gamma.in_root_lattice() {
        return Err(Error::NotInRootLattice(gamma.to_string()));
    }
    if sector > rank {
        return Err(Error::OutOfRange(sector));
    }
    let target = translate_weight(gamma, &AffineWeight::fundamental(rank, sector)).minus_delta(i64::from(m));
    let lattice = gamma + &FiniteWeight::fundamental(rank, sector);
    let w = FiniteWeight::fundamental(rank, sector);
    let e = ((lattice.norm() - w.norm()) / 2).to_integer() + i64::from(m);
    Ok(basis_keys(rank, sector, e).iter().filter(|k| k.weight() == target).count() as u64)
}

/// Keys of weight `t_γ(Λ_i) − mδ`, sorted.
pub fn weight_space_keys(rank: usize, sector: usize, gamma: &FiniteWeight, m: u32) -> Vec<FockKey> {
    let lattice = gamma + &FiniteWeight::fundamental(rank, sector);
    monomials(rank, m)
        .into_iter()
        .map(|modes| FockKey { sector, gamma: lattice.clone(), modes })
        .collect()
}

/// Largest absolute value of a numerator or denominator, for diagnostics.
pub fn max_height(v: &FockVector) -> f64 {
    v.terms
        .values()
        .map(|c| c.numer().abs().max(c.denom().abs()).to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vac(r: usize, i: usize) -> FockVector {
        FockVector::vacuum(r, i).unwrap()
    }

    fn key(r: usize, i: usize, gamma_root: &[i64], modes: &[(usize, u32)]) -> FockKey {
        let g = &FiniteWeight::from_root_coords(r, gamma_root) + &FiniteWeight::fundamental(r, i);
        FockKey::new(i, g, modes.iter().map(|&(dir, n)| Mode { dir, n }).collect()).unwrap()
    }

    #[test]
    fn vacuum_is_highest() {
        for r in 1..=3 {
            for i in 0..=r {
                let v = vac(r, i);
                assert_eq!(v.weight().unwrap(), AffineWeight::fundamental(r, i));
                for p in 0..=r {
                    assert!(act_chevalley(p, Chevalley::E, &v).unwrap().is_zero(), "e_{p} v_{i}, r={r}");
                    let mut w = v.clone();
                    for _ in 0..=usize::from(p == i) {
                        w = act_chevalley(p, Chevalley::F, &w).unwrap();
                    }
                    assert!(w.is_zero(), "f_{p} power on v_{i}, r={r}");
                }
                assert!(!act_chevalley(i, Chevalley::F, &v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn sl2_square_kills_vacuum() {
        let v = vac(1, 0);
        let f = Root::signed(1, 1, 1, false);
        let once = act_root_vector(&f, -1, &v);
        assert!(!once.is_zero());
        assert!(act_root_vector(&f, -1, &once).is_zero());
    }

    #[test]
    fn heisenberg_examples() {
        let v = vac(1, 0);
        assert!(act_heisenberg(1, 1, &v).is_zero());
        let w = act_heisenberg(1, -1, &v);
        assert_eq!(act_heisenberg(1, 1, &w), v.scaled(&int(2)));
        let k = FockVector::basis(key(1, 0, &[1], &[]));
        assert_eq!(act_heisenberg(1, 0, &k), k.scaled(&int(2)));
    }

    #[test]
    fn root_vector_examples() {
        let v = vac(1, 0);
        assert!(act_chevalley(1, Chevalley::F, &v).unwrap().is_zero());
        let theta_key = FockVector::basis(key(1, 0, &[1], &[]));
        let down = act_root_vector(&Root::signed(1, 1, 1, false), 1, &theta_key);
        assert!(down == v || down == v.neg(), "{down:?}");
        let f0 = act_chevalley(0, Chevalley::F, &v).unwrap();
        assert!(f0 == theta_key || f0 == theta_key.neg());
        assert!(act_root_vector(&Root::signed(2, 1, 2, true), 1, &FockVector::zero(2, 0)).is_zero());
    }

    #[test]
    fn weight_examples() {
        let k = key(1, 0, &[1], &[]);
        let a1 = FiniteWeight::simple_root(1, 1);
        assert_eq!(k.weight(), AffineWeight::new(a1, 1, (-1).into()));
        let k = key(1, 0, &[0], &[(1, 2)]);
        assert_eq!(k.weight(), AffineWeight::lambda0(1).minus_delta(2));
        let mixed = FockVector::basis(key(1, 0, &[0], &[(1, 1)])).add(&vac(1, 0));
        assert_eq!(mixed.weight(), Err(Error::NotHomogeneous));
    }

    #[test]
    fn graded_dim_examples() {
        let z1 = FiniteWeight::zero(1);
        assert_eq!(graded_dim(1, 0, &z1, 2).unwrap(), 2);
        assert_eq!(graded_dim(2, 0, &FiniteWeight::zero(2), 2).unwrap(), 5);
        assert_eq!(graded_dim(2, 1, &FiniteWeight::simple_root(2, 1), 0).unwrap(), 1);
    }

    #[test]
    fn root_vectors_shift_weight() {
        for r in 1..=2 {
            for i in 0..=r {
                for k in basis_keys(r, i, 2) {
                    let v = FockVector::basis(k.clone());
                    for root in all_roots(r) {
                        for s in -2..=2 {
                            let w = act_root_vector(&root, s, &v);
                            if w.is_zero() {
                                continue;
                            }
                            let mut want = k.weight();
                            want.finite = &want.finite + &root.weight;
                            want.delta += s;
                            assert_eq!(w.weight().unwrap(), want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dump_format() {
        let v = FockVector::basis(key(2, 0, &[1, 0], &[(1, 2), (1, 2), (2, 1)])).scaled(&Coeff::new(3.into(), 2.into()));
        assert_eq!(v.dump(), "gamma=(1,-1,0) modes=[(1,2)x2,(2,1)x1] coeff=3/2\n");
    }

    #[test]
    fn key_validation() {
        let r = 2;
        assert!(FockKey::new(0, FiniteWeight::fundamental(r, 1), vec![]).is_err());
        assert!(FockKey::new(0, FiniteWeight::zero(r), vec![Mode { dir: 3, n: 1 }]).is_err());
        assert!(FockKey::new(3, FiniteWeight::zero(r), vec![]).is_err());
    }

    /// Expected value of `[x_α ⊗ t^s, x_β ⊗ t^{s′}] v` from matrix units
    /// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`, `(E_ij|E_ji) = 1`.
    fn bracket_oracle(a: &Root, s: i64, b: &Root, t: i64, v: &FockVector) -> FockVector {
        let r = v.rank();
        let unit = |root: &Root| {
            let (i, j) = root.interval();
            if root.positive { (i, j + 1) } else { (j + 1, i) }
        };
        let (i, j) = unit(a);
        let (k, l) = unit(b);
        if (&a.weight + &b.weight).is_zero() {
            let h = act_cartan(&a.coords, s + t, v);
            return if s + t == 0 { h.add(&v.scaled(&int(s))) } else { h };
        }
        let mut out = FockVector::zero(r, v.sector());
        if j == k {
            let ab = Root::new(&(&a.weight + &b.weight)).unwrap();
            out = out.add(&act_root_vector(&ab, s + t, v));
        }
        if l == i {
            let ab = Root::new(&(&a.weight + &b.weight)).unwrap();
            out = out.sub(&act_root_vector(&ab, s + t, v));
        }
        out
    }

    #[test]
    fn bracket_relations_small() {
        let r = 2;
        let roots = all_roots(r);
        for i in 0..=r {
            for k in basis_keys(r, i, 1) {
                let v = FockVector::basis(k);
                for a in &roots {
                    for b in &roots {
                        for s in -1..=1 {
                            for t in -1..=1 {
                                let ab = act_root_vector(a, s, &act_root_vector(b, t, &v));
                                let ba = act_root_vector(b, t, &act_root_vector(a, s, &v));
                                let want = bracket_oracle(a, s, b, t, &v);
                                assert_eq!(ab.sub(&ba), want, "{:?} {s} {:?} {t} on {:?}", a.weight, b.weight, v);
                            }
                        }
                    }
                }
            }
        }
    }
}
