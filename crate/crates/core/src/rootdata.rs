//! Weight arithmetic for `sl(r+1)` and its untwisted affinization.
//!
//! Finite weights are stored in ε-coordinates modulo the all-ones vector;
//! the canonical representative has last coordinate `0`, which makes the
//! integer sequence attached to a dominant weight the coordinate vector
//! itself.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the weight lattice `P` of `sl(r+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct FiniteWeight {
    rank: usize,
    coords: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    r: usize,
    coords: Vec<i64>,
}

impl TryFrom<WeightRepr> for FiniteWeight {
    type Error = Error;
    fn try_from(w: WeightRepr) -> Result<Self> {
        FiniteWeight::from_coords(w.r, &w.coords)
    }
}

impl From<FiniteWeight> for WeightRepr {
    fn from(w: FiniteWeight) -> Self {
        WeightRepr { r: w.rank, coords: w.coords }
    }
}

impl fmt::Debug for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for FiniteWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FiniteWeight {
    /// Builds a weight from `r+1` ε-coordinates, canonicalizing so the last
    /// coordinate is zero.
    pub fn from_coords(rank: usize, coords: &[i64]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        if coords.len() != rank + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates for rank {rank}, got {}",
                rank + 1,
                coords.len()
            )));
        }
        let last = coords[rank];
        Ok(FiniteWeight { rank, coords: coords.iter().map(|c| c - last).collect() })
    }

    pub fn zero(rank: usize) -> Self {
        FiniteWeight { rank, coords: vec![0; rank + 1] }
    }

    /// `ϖ_i = ε_1 + ⋯ + ε_i`; `ϖ_0` is zero.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(i <= rank, "fundamental weight index {i} out of range for rank {rank}");
        let coords = (0..=rank).map(|p| i64::from(p < i)).collect();
        FiniteWeight { rank, coords }
    }

    /// `ε_i`, 1-based.
    pub fn epsilon(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank + 1];
        c[i - 1] = 1;
        let w = FiniteWeight { rank, coords: c };
        w.canonical()
    }

    /// The simple root `α_a = ε_a − ε_{a+1}`.
    pub fn simple_root(rank: usize, a: usize) -> Self {
        Self::positive_root(rank, a, a)
    }

    /// `α_{i,j} = α_i + ⋯ + α_j = ε_i − ε_{j+1}` for `1 ≤ i ≤ j ≤ r`.
    pub fn positive_root(rank: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j && j <= rank, "bad positive root ({i},{j})");
        let mut c = vec![0; rank + 1];
        c[i - 1] += 1;
        c[j] -= 1;
        FiniteWeight { rank, coords: c }.canonical()
    }

    pub fn theta(rank: usize) -> Self {
        Self::positive_root(rank, 1, rank)
    }

    /// Weight from simple-root coefficients.
    pub fn from_root_coords(rank: usize, n: &[i64]) -> Self {
        assert_eq!(n.len(), rank);
        let mut c = vec![0; rank + 1];
        for (a, &na) in n.iter().enumerate() {
            c[a] += na;
            c[a + 1] -= na;
        }
        FiniteWeight { rank, coords: c }.canonical()
    }

    fn canonical(mut self) -> Self {
        let last = self.coords[self.rank];
        for c in &mut self.coords {
            *c -= last;
        }
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Canonical coordinates (last entry zero).
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// `(x|y) = Σ x_i y_i − (Σ x_i)(Σ y_i)/(r+1)`.
    pub fn bilinear(&self, other: &Self) -> Result<Rational64> {
        self.check_rank(other)?;
        Ok(self.form(other))
    }

    pub(crate) fn form(&self, other: &Self) -> Rational64 {
        debug_assert_eq!(self.rank, other.rank);
        let dot: i64 = self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum();
        let sx: i64 = self.coords.iter().sum();
        let sy: i64 = other.coords.iter().sum();
        Rational64::from_integer(dot) - Rational64::new(sx * sy, self.rank as i64 + 1)
    }

    pub fn norm(&self) -> Rational64 {
        self.form(self)
    }

    /// Whether the weight lies in the root lattice `Q`.
    pub fn in_root_lattice(&self) -> bool {
        let s: i64 = self.coords.iter().sum();
        s.rem_euclid(self.rank as i64 + 1) == 0
    }

    /// Simple-root coefficients of an element of `Q`.
    pub fn root_coords(&self) -> Result<Vec<i64>> {
        if !self.in_root_lattice() {
            return Err(Error::NotInRootLattice(self.to_string()));
        }
        let shift = self.coords.iter().sum::<i64>() / (self.rank as i64 + 1);
        let mut acc = 0;
        Ok((0..self.rank)
            .map(|a| {
                acc += self.coords[a] - shift;
                acc
            })
            .collect())
    }

    /// Coefficients `m_i` of the fundamental weights.
    pub fn fundamental_coeffs(&self) -> Vec<i64> {
        (0..self.rank).map(|a| self.coords[a] - self.coords[a + 1]).collect()
    }

    /// Builds `Σ m_i ϖ_i` from nonnegative coefficients.
    pub fn from_fundamental_coeffs(rank: usize, m: &[i64]) -> Result<Self> {
        if m.len() != rank {
            return Err(Error::InvalidInput(format!("expected {rank} coefficients, got {}", m.len())));
        }
        if let Some(pos) = m.iter().position(|&x| x < 0) {
            return Err(Error::InvalidInput(format!("negative coefficient m_{} = {}", pos + 1, m[pos])));
        }
        let mut coords = vec![0; rank + 1];
        for i in (0..rank).rev() {
            coords[i] = coords[i + 1] + m[i];
        }
        Ok(FiniteWeight { rank, coords })
    }

    /// Dominant weight from its sequence `λ_1 ≥ ⋯ ≥ λ_r ≥ λ_{r+1} = 0`.
    pub fn from_sequence(seq: &[i64]) -> Result<Self> {
        validate_sequence(seq)?;
        FiniteWeight::from_coords(seq.len() - 1, seq)
    }

    /// The integer sequence of a weight (its canonical coordinates).
    pub fn sequence(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// `i_λ = (Σ λ_i) mod (r+1)`.
    pub fn residue_class(&self) -> usize {
        let s: i64 = self.coords.iter().sum();
        s.rem_euclid(self.rank as i64 + 1) as usize
    }

    /// The dominant Weyl conjugate.
    pub fn dominant_conjugate(&self) -> Self {
        let mut c = self.coords.clone();
        c.sort_unstable_by(|a, b| b.cmp(a));
        FiniteWeight { rank: self.rank, coords: c }.canonical()
    }

    /// Applies a permutation of ε-coordinates (an element of the Weyl group).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let coords = perm.iter().map(|&p| self.coords[p]).collect();
        FiniteWeight { rank: self.rank, coords }.canonical()
    }
}

/// Checks that `seq` is weakly decreasing, ends in zero and has length ≥ 2.
pub fn validate_sequence(seq: &[i64]) -> Result<()> {
    if seq.len() < 2 {
        return Err(Error::InvalidInput("a weight sequence needs at least two entries".into()));
    }
    if let Some(p) = seq.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!(
            "sequence {:?} is not weakly decreasing at position {}",
            seq,
            p + 1
        )));
    }
    if *seq.last().unwrap() != 0 {
        return Err(Error::InvalidInput(format!("sequence {seq:?} must end in 0")));
    }
    Ok(())
}

impl Add for &FiniteWeight {
    type Output = FiniteWeight;
    fn add(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank, rhs.rank);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        FiniteWeight { rank: self.rank, coords }
    }
}

impl Sub for &FiniteWeight {
    type Output = FiniteWeight;
    fn sub(self, rhs: &FiniteWeight) -> FiniteWeight {
        assert_eq!(self.rank, rhs.rank);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        FiniteWeight { rank: self.rank, coords }
    }
}

impl Neg for &FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        FiniteWeight { rank: self.rank, coords: self.coords.iter().map(|c| -c).collect() }.canonical()
    }
}

impl Mul<&FiniteWeight> for i64 {
    type Output = FiniteWeight;
    fn mul(self, rhs: &FiniteWeight) -> FiniteWeight {
        FiniteWeight { rank: rhs.rank, coords: rhs.coords.iter().map(|c| self * c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for FiniteWeight {
            type Output = FiniteWeight;
            fn $f(self, rhs: FiniteWeight) -> FiniteWeight {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&FiniteWeight> for FiniteWeight {
            type Output = FiniteWeight;
            fn $f(self, rhs: &FiniteWeight) -> FiniteWeight {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Neg for FiniteWeight {
    type Output = FiniteWeight;
    fn neg(self) -> FiniteWeight {
        -&self
    }
}

/// An element `λ + ℓΛ_0 + cδ` of the affine weight space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineWeight {
    pub finite: FiniteWeight,
    pub level: i64,
    pub delta: Rational64,
}

impl AffineWeight {
    pub fn new(finite: FiniteWeight, level: i64, delta: Rational64) -> Self {
        AffineWeight { finite, level, delta }
    }

    pub fn lambda0(rank: usize) -> Self {
        AffineWeight::new(FiniteWeight::zero(rank), 1, Rational64::zero())
    }

    pub fn delta(rank: usize) -> Self {
        AffineWeight::new(FiniteWeight::zero(rank), 0, Rational64::from_integer(1))
    }

    /// `Λ_i = t_{ϖ_i}(Λ_0)`, the image of `Λ_0` under the diagram automorphism;
    /// it has norm zero.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        translate_weight(&FiniteWeight::fundamental(rank, i), &Self::lambda0(rank))
    }

    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    /// Affine form with `(δ|δ) = (Λ_0|Λ_0) = 0`, `(δ|Λ_0) = 1`.
    pub fn bilinear(&self, other: &Self) -> Result<Rational64> {
        let f = self.finite.bilinear(&other.finite)?;
        Ok(f + self.delta * other.level + other.delta * self.level)
    }

    /// `self − m δ`.
    pub fn minus_delta(&self, m: i64) -> Self {
        AffineWeight::new(self.finite.clone(), self.level, self.delta - m)
    }

    /// Whether the δ-coefficient is integral.
    pub fn has_integral_delta(&self) -> bool {
        self.delta.is_integer()
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.delta.is_negative() { format!("- {}", -self.delta) } else { format!("+ {}", self.delta) };
        write!(f, "{}Λ0 + {} {}δ", self.level, self.finite, d)
    }
}

/// `t_β(Λ) = Λ + (Λ|δ)β − [(Λ|β) + ½(Λ|δ)(β|β)]δ`.
pub fn translate_weight(beta: &FiniteWeight, lam: &AffineWeight) -> AffineWeight {
    assert_eq!(beta.rank(), lam.rank());
    let level = lam.level;
    let finite = &lam.finite + &(level * beta);
    let shift = lam.finite.form(beta) + Rational64::new(level, 2) * beta.norm();
    AffineWeight::new(finite, level, lam.delta - shift)
}
