//! The 2-cocycle on `Q` and the translation operators `T_β`, `T_{±ϖ_i}` and
//! `T_{λ−β}` on the Fock model.
//!
//! `T_β` acts on keys by right multiplication in the twisted group algebra,
//! `e^γ ⊗ u ↦ c(β) ε(γ − ϖ_i, β) e^{γ+β} ⊗ u`, so conjugation shifts the
//! loop degree of every root vector without a sign. The scalar `c(β)` is the
//! normalization described on [`normalization`].

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fock::{FockKey, FockVector};
use crate::rootdata::FiniteWeight;

/// `ε(x, y)` for `x, y ∈ Q` in simple-root coordinates, from the table
/// `ε(α_a, α_a) = −1`, `ε(α_{a+1}, α_a) = −1`, all other simple pairs `+1`.
pub fn vertex_eps(x: &[i64], y: &[i64]) -> i64 {
    debug_assert_eq!(x.len(), y.len());
    let mut parity = 0i64;
    for a in 0..x.len() {
        parity += x[a] * y[a];
        if a + 1 < x.len() {
            parity += x[a + 1] * y[a];
        }
    }
    if parity.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The sign table on pairs of simple roots, extended bimultiplicatively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    rank: usize,
    table: Vec<Vec<i64>>,
}

impl Cocycle {
    pub fn new(rank: usize) -> Self {
        let table = (1..=rank)
            .map(|a| {
                (1..=rank)
                    .map(|b| {
                        let mut x = vec![0; rank];
                        let mut y = vec![0; rank];
                        x[a - 1] = 1;
                        y[b - 1] = 1;
                        vertex_eps(&x, &y)
                    })
                    .collect()
            })
            .collect();
        Cocycle { rank, table }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `ε(α_a, α_b)`, 1-based.
    pub fn simple(&self, a: usize, b: usize) -> i64 {
        self.table[a - 1][b - 1]
    }

    /// Bimultiplicative value; `x` may lie in `ϖ_i + Q`, in which case the
    /// fundamental weight of its class is dropped first.
    pub fn eps(&self, x: &FiniteWeight, y: &FiniteWeight) -> Result<i64> {
        let xq = drop_fundamental(x);
        Ok(vertex_eps(&xq.root_coords()?, &y.root_coords()?))
    }

    /// One line per simple pair: `a b sign`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for a in 1..=self.rank {
            for b in 1..=self.rank {
                writeln!(out, "{a} {b} {:+}", self.simple(a, b)).expect("writing to a string");
            }
        }
        out
    }

    /// SHA-256 of [`Cocycle::dump`], hex encoded.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.dump().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// `x − ϖ_i` where `i` is the class of `x` modulo `Q`.
pub fn drop_fundamental(x: &FiniteWeight) -> FiniteWeight {
    x - &FiniteWeight::fundamental(x.rank(), x.residue_class())
}

/// `Some((d, α))` when `β = dα` with `α` a positive root and `d ≠ 0`.
pub fn root_multiple(beta: &FiniteWeight) -> Option<(i64, FiniteWeight)> {
    let n = beta.root_coords().ok()?;
    let g = n.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g == 0 {
        return None;
    }
    let unit: Vec<i64> = n.iter().map(|x| x / g).collect();
    let (d, unit) = if unit.iter().all(|&x| x >= 0) { (g, unit) } else { (-g, unit.iter().map(|x| -x).collect()) };
    let alpha = FiniteWeight::from_root_coords(beta.rank(), &unit);
    (alpha.norm() == 2.into()).then_some((d, alpha))
}

/// Sign `c(β)` of `T_β = c(β) R_β`, where `R_β` is right multiplication by `e^β`.
///
/// On multiples of a positive root, `c(dα) = (−1)^{⌊d/2⌋}`, which is the
/// normalization under which `x^−_α(d,d,∅) T_{dα}` fixes the vacuum up to
/// `(−1)^{⌊d/2⌋}`; `d = ±1` agrees with `r_{δ−α} r_α`. Elsewhere `c = 1` on
/// lexicographically positive `β`, and `c(β) c(−β) = (−1)^{(β|β)/2}` makes
/// `T_β T_{−β} = id`.
pub fn normalization(beta: &FiniteWeight) -> Result<i64> {
    let n = beta.root_coords()?;
    let half_norm = (beta.norm() / 2).to_integer();
    let pos_sign = |d: i64| if (d / 2) % 2 == 0 { 1 } else { -1 };
    let parity = |x: i64| if x.rem_euclid(2) == 0 { 1 } else { -1 };
    if let Some((d, _)) = root_multiple(beta) {
        return Ok(if d > 0 { pos_sign(d) } else { parity(d) * pos_sign(-d) });
    }
    let lex_positive = n.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0);
    Ok(if lex_positive { 1 } else { parity(half_norm) })
}

/// The composition cocycle: `T_x T_y = ε′(x, y) T_{x+y}`, with
/// `ε′(x, y) = ε(y, x) c(x) c(y) / c(x + y)`. A fundamental weight in `x` is
/// dropped first.
pub fn cocycle_eps(x: &FiniteWeight, y: &FiniteWeight) -> Result<i64> {
    let xq = drop_fundamental(x);
    let e = vertex_eps(&y.root_coords()?, &xq.root_coords()?);
    Ok(e * normalization(&xq)? * normalization(y)? * normalization(&(&xq + y))?)
}

/// `T_β` for `β ∈ Q`, on a vector of any sector.
pub fn translate_q(beta: &FiniteWeight, v: &FockVector) -> Result<FockVector> {
    let b = beta.root_coords()?;
    let c = normalization(beta)?;
    let terms = v.terms().iter().map(|(k, coef)| {
        let sign = c * vertex_eps(&k.lattice_offset(), &b);
        let key = FockKey { sector: k.sector, gamma: &k.gamma + beta, modes: k.modes.clone() };
        (key, if sign == 1 { coef.clone() } else { -coef })
    });
    FockVector::from_terms(v.rank(), v.sector(), terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `T_{ϖ_i}`: sector `0` to sector `i`.
    Plus,
    /// `T_{−ϖ_i}`: sector `i` to sector `0`.
    Minus,
}

/// `T_{±ϖ_i}`, the lattice shift by `±ϖ_i` between sectors `0` and `i`.
pub fn translate_fundamental(i: usize, v: &FockVector, dir: Direction) -> Result<FockVector> {
    let r = v.rank();
    if i > r {
        return Err(Error::OutOfRange(i));
    }
    let w = FiniteWeight::fundamental(r, i);
    let (from, to, shift) = match dir {
        Direction::Plus => (0, i, w),
        Direction::Minus => (i, 0, -w),
    };
    if v.sector() != from {
        return Err(Error::SectorMismatch { expected: from, found: v.sector() });
    }
    let terms = v.terms().iter().map(|(k, c)| {
        (FockKey { sector: to, gamma: &k.gamma + &shift, modes: k.modes.clone() }, c.clone())
    });
    FockVector::from_terms(r, to, terms)
}

/// `T_μ = T_{ϖ_i} T_{μ−ϖ_i}` for `μ ∈ P` of class `i`, from sector `0`.
pub fn translate_weight_lattice(mu: &FiniteWeight, v: &FockVector) -> Result<FockVector> {
    if v.sector() != 0 {
        return Err(Error::SectorMismatch { expected: 0, found: v.sector() });
    }
    let i = mu.residue_class();
    let inner = translate_q(&drop_fundamental(mu), v)?;
    translate_fundamental(i, &inner, Direction::Plus)
}

/// `T_{−μ} = T_μ^{−1}`, from sector `i` back to sector `0`.
pub fn translate_weight_lattice_inv(mu: &FiniteWeight, v: &FockVector) -> Result<FockVector> {
    let i = mu.residue_class();
    let back = translate_fundamental(i, v, Direction::Minus)?;
    translate_q(&-drop_fundamental(mu), &back)
}

/// `T_{λ−β}` for dominant `λ` and `β ∈ Q`.
pub fn translate_general(lambda: &FiniteWeight, beta: &FiniteWeight, v: &FockVector) -> Result<FockVector> {
    if !lambda.is_dominant() {
        return Err(Error::InvalidInput(format!("{lambda} is not dominant")));
    }
    if !beta.in_root_lattice() {
        return Err(Error::NotInRootLattice(beta.to_string()));
    }
    translate_weight_lattice(&(lambda - beta), v)
}

/// Signs of `T_{ϖ_i}` on the extremal vectors `e^γ`, propagated from the
/// vacuum through root vectors by equivariance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPropagator {
    pub sector: usize,
    pub signs: std::collections::BTreeMap<FiniteWeight, i64>,
    pub consistent: bool,
}

impl SignPropagator {
    /// Explores `γ ∈ Q` with `½(γ|γ) ≤ energy`.
    pub fn build(rank: usize, i: usize, energy: i64) -> Result<Self> {
        use crate::fock::{act_root_vector, Root};
        if i > rank {
            return Err(Error::OutOfRange(i));
        }
        let w = FiniteWeight::fundamental(rank, i);
        let mut signs = std::collections::BTreeMap::new();
        let zero = FiniteWeight::zero(rank);
        signs.insert(zero.clone(), 1i64);
        let mut queue = std::collections::VecDeque::from([zero]);
        let mut consistent = true;
        let roots: Vec<Root> = (1..=rank).flat_map(|a| [Root::signed(rank, a, a, true), Root::signed(rank, a, a, false)]).collect();
        while let Some(g) = queue.pop_front() {
            let tau = signs[&g];
            for root in &roots {
                let target = &g + &root.weight;
                if target.norm() / 2 > energy.into() {
                    continue;
                }
                // x_ρ(s) e^γ = σ e^{γ+ρ} with s = −1 − (ρ|γ)
                let s = -1 - g.form(&root.weight).to_integer();
                let src0 = FockVector::basis(FockKey { sector: 0, gamma: g.clone(), modes: vec![] });
                let sigma = act_root_vector(root, s, &src0);
                let srci = FockVector::basis(FockKey { sector: i, gamma: &g + &w, modes: vec![] });
                let s_twisted = s - w.form(&root.weight).to_integer();
                let sigma_i = act_root_vector(root, s_twisted, &srci);
                let (Some(a), Some(b)) = (sigma.terms().values().next(), sigma_i.terms().values().next()) else {
                    consistent = false;
                    continue;
                };
                if sigma.len() != 1 || sigma_i.len() != 1 {
                    consistent = false;
                    continue;
                }
                let ratio = b / a;
                let sign = if ratio == crate::fock::Coeff::from_integer(1.into()) {
                    1
                } else if ratio == crate::fock::Coeff::from_integer((-1).into()) {
                    -1
                } else {
                    consistent = false;
                    continue;
                };
                let value = tau * sign;
                match signs.get(&target) {
                    Some(&old) if old != value => consistent = false,
                    Some(_) => {}
                    None => {
                        signs.insert(target.clone(), value);
                        queue.push_back(target);
                    }
                }
            }
        }
        Ok(SignPropagator { sector: i, signs, consistent })
    }

    /// Whether every propagated sign is `+1`, i.e. the plain shift is `T_{ϖ_i}`.
    pub fn is_trivial(&self) -> bool {
        self.consistent && self.signs.values().all(|&s| s == 1)
    }
}
