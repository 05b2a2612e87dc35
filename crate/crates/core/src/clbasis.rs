//! CL monomials, the sign `ε_{P^k_s}`, the vectors `v_P` and the checks built
//! on them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fock::{act_root_vector, Coeff, FockKey, FockVector, Monomial, Root};
use crate::linalg;
use crate::partitions::{colored_partition_count, Partition};
use crate::pop::{enumerate_pops, Pop, PopFilter};
use crate::report::Report;
use crate::rootdata::{translate_weight, AffineWeight, FiniteWeight};
use crate::translate::{cocycle_eps, translate_q, translate_weight_lattice, translate_weight_lattice_inv};

/// How a block `x^−_α(d,d′,π)` with repeated exponents is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// Each run of `m` equal factors `(x ⊗ t^e)^m` is divided by `m!`.
    #[default]
    Divided,
    /// The bare product.
    Plain,
}

/// `x^−_{α_{i,j}}(d, d′, π) = ∏_l x^−_α ⊗ t^{d′−π_l}`; factors commute.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub i: usize,
    pub j: usize,
    /// t-exponents in descending order.
    pub exponents: Vec<i64>,
}

/// Blocks applied right to left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    pub blocks: Vec<Block>,
}

impl OperatorWord {
    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| b.exponents.is_empty())
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.exponents.len()).sum()
    }

    /// Applies the word to `v`, rightmost block first.
    pub fn apply(&self, v: &FockVector, norm: Normalization) -> FockVector {
        let r = v.rank();
        let mut out = v.clone();
        for b in self.blocks.iter().rev() {
            let root = Root::signed(r, b.i, b.j, false);
            let mut idx = 0;
            while idx < b.exponents.len() {
                let e = b.exponents[idx];
                let m = b.exponents[idx..].iter().take_while(|&&x| x == e).count();
                for _ in 0..m {
                    out = act_root_vector(&root, e, &out);
                }
                if norm == Normalization::Divided && m > 1 {
                    let f: BigInt = (1..=m as u64).map(BigInt::from).product();
                    out = out.scaled(&Coeff::new(BigInt::one(), f));
                }
                idx += m;
            }
            if out.is_zero() {
                break;
            }
        }
        out
    }
}

/// `x^−_{i,j}(d, d′, π)`.
pub fn cl_monomial(i: usize, j: usize, d: u32, d_prime: u32, pi: &Partition) -> Result<Block> {
    if !pi.fits_rectangle(d, d_prime) {
        return Err(Error::DoesNotFit { partition: pi.parts().to_vec(), rows: d, cols: d_prime });
    }
    let mut exponents: Vec<i64> = (1..=d as usize).map(|l| i64::from(d_prime) - i64::from(pi.part(l))).collect();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Block { i, j, exponents })
}

fn block_of(p: &Pop, i: usize, j: usize) -> Block {
    cl_monomial(i, j, p.d(i, j) as u32, p.d_prime(i, j) as u32, p.partition(i, j)).expect("POP invariant: overlay fits")
}

/// `ρ_{P^k_s}` in row form: rows `s, s+1, …, r`, each row `j = s..r`.
pub fn rho(p: &Pop, k: i64, s: usize) -> Result<OperatorWord> {
    let r = p.rank();
    if s == 0 || s > r + 1 {
        return Err(Error::OutOfRange(s));
    }
    let q = p.shift(k);
    let blocks = (s..=r).flat_map(|row| (row..=r).map(move |j| (row, j))).map(|(i, j)| block_of(&q, i, j)).collect();
    Ok(OperatorWord { blocks })
}

/// `ρ_P` in column form: columns `j = 1..r`, each column `i = 1..j`.
pub fn rho_columns(p: &Pop) -> OperatorWord {
    let r = p.rank();
    let blocks = (1..=r).flat_map(|j| (1..=j).map(move |i| (i, j))).map(|(i, j)| block_of(p, i, j)).collect();
    OperatorWord { blocks }
}

/// `ε_{P^k_s}`, with the diagonal differences shifted by `k`.
pub fn sign_eps(p: &Pop, k: i64, s: usize) -> Result<i64> {
    let r = p.rank();
    if s == 0 || s > r + 1 {
        return Err(Error::OutOfRange(s));
    }
    let lam = p.lambda();
    let alpha = |i: usize, j: usize| FiniteWeight::positive_root(r, i, j);
    let big_d = |i: usize, j: usize| p.d(i, j) + if i == j { k } else { 0 };
    let mut sign = 1;
    for row in s..=r {
        if ((p.d(row, row) + k) / 2) % 2 != 0 {
            sign = -sign;
        }
        let mut base = &lam + &(k * &alpha(1, row));
        for i in (row + 1)..=r {
            for j in i..=r {
                base = &base - &(p.d(i, j) * &alpha(i, j));
            }
        }
        for j in row..=r {
            let mut a = base.clone();
            for u in j..=r {
                a = &a - &(big_d(row, u) * &alpha(row, u));
            }
            sign *= cocycle_eps(&a, &(big_d(row, j) * &alpha(row, j)))?;
        }
    }
    Ok(sign)
}

/// `w_λ = T_λ v_{Λ_0}`.
pub fn extremal_vector(lambda: &FiniteWeight) -> FockVector {
    let v = FockVector::vacuum(lambda.rank(), 0).expect("sector 0");
    translate_weight_lattice(lambda, &v).expect("vacuum lies in sector 0")
}

/// `v_{P^k} = ε_{P^k} ρ_{P^k} T_{λ+kθ} v_{Λ_0}`.
pub fn cl_vector(p: &Pop, k: i64, norm: Normalization) -> Result<FockVector> {
    cl_vector_from(p, k, 1, norm)
}

/// `ε_{P^k_s} ρ_{P^k_s} T_{λ+kθ} v_{Λ_0}`.
pub fn cl_vector_from(p: &Pop, k: i64, s: usize, norm: Normalization) -> Result<FockVector> {
    let r = p.rank();
    let top = &p.lambda() + &(k * &FiniteWeight::theta(r));
    let w = extremal_vector(&top);
    let v = rho(p, k, s)?.apply(&w, norm);
    Ok(if sign_eps(p, k, s)? == 1 { v } else { v.neg() })
}

/// `λ + kα_{1,s−1} − Σ_{s≤i≤j≤r} d_{i,j} α_{i,j}`.
pub fn mtp_translation(p: &Pop, k: i64, s: usize) -> FiniteWeight {
    let r = p.rank();
    let mut mu = p.lambda();
    if s >= 2 {
        mu = &mu + &(k * &FiniteWeight::positive_root(r, 1, s - 1));
    }
    for (i, j) in p.pattern().pairs().filter(|&(i, _)| i >= s) {
        mu = &mu - &(p.d(i, j) * &FiniteWeight::positive_root(r, i, j));
    }
    mu
}

/// The pure-mode part `f v_{Λ_0}` of the intermediate form at level `s`.
pub fn mtp_residual(p: &Pop, k: i64, s: usize, norm: Normalization) -> Result<FockVector> {
    let l = cl_vector_from(p, k, s, norm)?;
    translate_weight_lattice_inv(&mtp_translation(p, k, s), &l)
}

fn sign_of(d: i64) -> i64 {
    if (d / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn pop_json(p: &Pop) -> Value {
    serde_json::to_value(p).expect("POPs serialize")
}

/// First key where `a` and `b` differ, with both coefficients.
fn first_difference(a: &FockVector, b: &FockVector) -> Value {
    let d = a.sub(b);
    match d.terms().keys().next() {
        Some(k) => json!({ "key": k.to_string(), "left": a.coeff(k).to_string(), "right": b.coeff(k).to_string() }),
        None => Value::Null,
    }
}

/// Whether every key of `v` is `e^0 ⊗ u` in sector 0.
pub fn is_pure_mode(v: &FockVector) -> bool {
    v.sector() == 0 && v.terms().keys().all(|k| k.gamma.is_zero())
}

/// Predicted weight `t_{wt P − ϖ̄}(Λ_{i_λ}) − d(P)δ` of `v_P`.
pub fn predicted_weight(p: &Pop) -> AffineWeight {
    let r = p.rank();
    let i = p.lambda().residue_class();
    let shift = &p.weight() - &FiniteWeight::fundamental(r, i);
    translate_weight(&shift, &AffineWeight::fundamental(r, i)).minus_delta(p.total_depth())
}

/// The weight law for `v_{P^k}`: nonzero, homogeneous, of the predicted weight.
pub fn verify_weight(p: &Pop, k: i64, norm: Normalization) -> Result<Report> {
    let v = cl_vector(p, k, norm)?;
    let want = predicted_weight(p);
    let got = if v.is_zero() { None } else { v.weight().ok() };
    let ok = got.as_ref() == Some(&want);
    let witness = json!({
        "expected": want.to_string(),
        "actual": got.map(|w| w.to_string()),
        "terms": v.len(),
    });
    Ok(Report::new("weight", json!({ "pop": pop_json(p), "k": k }), ok, witness))
}

/// `v_{P^k}` for `k = 0..=kmax` must coincide.
pub fn verify_stability(p: &Pop, kmax: i64, norm: Normalization) -> Result<Report> {
    let input = json!({ "pop": pop_json(p), "kmax": kmax });
    if !p.is_stable() {
        return Err(Error::InvalidInput("POP is not stable".into()));
    }
    let base = cl_vector(p, 0, norm)?;
    for k in 1..=kmax {
        let v = cl_vector(p, k, norm)?;
        if v != base {
            let witness = json!({
                "k": k,
                "first_difference": first_difference(&base, &v),
                "v0": base.dump(),
                "vk": v.dump(),
            });
            return Ok(Report::new("stability", input, false, witness));
        }
    }
    Ok(Report::new("stability", input, true, json!({ "terms": base.len() })))
}

/// The checkable content of the intermediate form at level `s`: after undoing
/// the translation the vector is a pure mode polynomial on the vacuum, of
/// weight `Λ0 − d(P_s)δ`, and the same for `k` and `k + 1`.
pub fn verify_mtp(p: &Pop, k: i64, s: usize, norm: Normalization) -> Result<Report> {
    if !p.is_stable_from(s) {
        return Err(Error::InvalidInput(format!("POP is not stable from row {s}")));
    }
    let r = p.rank();
    let f = mtp_residual(p, k, s, norm)?;
    let g = mtp_residual(p, k + 1, s, norm)?;
    let want = AffineWeight::lambda0(r).minus_delta(p.restricted_depth(s));
    let support = is_pure_mode(&f);
    let weight_ok = !f.is_zero() && f.weight().ok() == Some(want.clone());
    let shift_ok = f == g;
    let witness = json!({
        "support": support,
        "weight": weight_ok,
        "shift_invariant": shift_ok,
        "expected_weight": want.to_string(),
        "first_difference": first_difference(&f, &g),
    });
    Ok(Report::new("mtp", json!({ "pop": pop_json(p), "k": k, "s": s }), support && weight_ok && shift_ok, witness))
}

/// `(−1)^{⌊d/2⌋} x^−_α(d,d,π) T_{dα} v_{Λ_0}`.
pub fn stabsl2_vector(r: usize, (i, j): (usize, usize), d: u32, pi: &Partition, norm: Normalization) -> Result<FockVector> {
    let alpha = FiniteWeight::positive_root(r, i, j);
    let block = cl_monomial(i, j, d, d, pi)?;
    let t = translate_q(&(i64::from(d) * &alpha), &FockVector::vacuum(r, 0)?)?;
    let v = OperatorWord { blocks: vec![block] }.apply(&t, norm);
    Ok(if sign_of(i64::from(d)) == 1 { v } else { v.neg() })
}

/// The normalized vector of the sl2 stability statement does not depend on
/// `d ≥ |π|`, and is a nonzero pure mode vector of weight `Λ0 − |π|δ`.
pub fn verify_stabsl2(r: usize, root: (usize, usize), d: u32, pi: &Partition, k_extra: u32, norm: Normalization) -> Result<Report> {
    if pi.size() > d {
        return Err(Error::InvalidInput(format!("need d ≥ |π|, got d = {d}, |π| = {}", pi.size())));
    }
    let a = stabsl2_vector(r, root, d, pi, norm)?;
    let b = stabsl2_vector(r, root, d + k_extra, pi, norm)?;
    let want = AffineWeight::lambda0(r).minus_delta(i64::from(pi.size()));
    let weight_ok = !a.is_zero() && a.weight().ok() == Some(want);
    let ok = weight_ok && is_pure_mode(&a) && a == b;
    let input = json!({ "r": r, "root": [root.0, root.1], "d": d, "pi": pi, "k_extra": k_extra });
    let witness = json!({ "weight": weight_ok, "first_difference": first_difference(&a, &b), "vector": a.dump() });
    Ok(Report::new("stabsl2", input, ok, witness))
}

/// `x^−_α(d,d′,π) T_μ g v_{Λ_0}` with `d′ = (μ|α) − d`: part (1) is its
/// weight `t_{μ−dα}(Λ_0) − (|π|+m)δ`; when `d ≥ |π| + m`, part (2) says that
/// `(−1)^{⌊d/2⌋} ε(μ−dα, dα) T_{μ−dα}^{−1}` of it is a pure mode vector.
pub fn verify_crucprop(
    r: usize,
    (i, j): (usize, usize),
    d: u32,
    pi: &Partition,
    mu: &FiniteWeight,
    g: &Monomial,
    norm: Normalization,
) -> Result<Report> {
    let alpha = FiniteWeight::positive_root(r, i, j);
    let pair = mu.form(&alpha);
    if !pair.is_integer() || pair.to_integer() < i64::from(d) {
        return Err(Error::InvalidInput(format!("(μ|α) = {pair} is below d = {d}")));
    }
    let d_prime = (pair.to_integer() - i64::from(d)) as u32;
    let m: u32 = g.iter().map(|x| x.n).sum();
    let input = json!({
        "r": r, "root": [i, j], "d": d, "d_prime": d_prime, "pi": pi, "mu": mu, "g": g.iter().map(|x| [x.dir as u32, x.n]).collect::<Vec<_>>(),
    });
    let start = FockVector::basis(FockKey::new(0, FiniteWeight::zero(r), g.clone())?);
    let block = cl_monomial(i, j, d, d_prime, pi)?;
    let l = OperatorWord { blocks: vec![block] }.apply(&translate_weight_lattice(mu, &start)?, norm);
    let target = &(mu - &(i64::from(d) * &alpha));
    let want = translate_weight(target, &AffineWeight::lambda0(r)).minus_delta(i64::from(pi.size() + m));
    let part1 = l.is_zero() || l.weight().ok().as_ref() == Some(&want);
    let mut witness = json!({ "part1": part1, "expected_weight": want.to_string() });
    let mut ok = part1;
    if d >= pi.size() + m {
        let sign = sign_of(i64::from(d)) * cocycle_eps(target, &(i64::from(d) * &alpha))?;
        let f = translate_weight_lattice_inv(target, &l)?;
        let f = if sign == 1 { f } else { f.neg() };
        let want0 = AffineWeight::lambda0(r).minus_delta(i64::from(pi.size() + m));
        let part2 = !f.is_zero() && is_pure_mode(&f) && f.weight().ok() == Some(want0);
        witness["part2"] = json!(part2);
        witness["residual"] = json!(f.dump());
        ok &= part2;
    }
    Ok(Report::new("crucprop", input, ok, witness))
}

/// `{v_P : P ∈ P(λ+jθ)}` for `j = 0..=steps`: independence, dimension `|P|`,
/// and inclusion of each span into the next, weight space by weight space.
pub fn weyl_span(lambda: &FiniteWeight, steps: u32, norm: Normalization) -> Result<Report> {
    if !lambda.is_dominant() {
        return Err(Error::InvalidInput(format!("{lambda} is not dominant")));
    }
    let r = lambda.rank();
    type Spaces = BTreeMap<(FiniteWeight, u32), Vec<FockVector>>;
    let mut levels: Vec<(usize, Spaces)> = Vec::new();
    let mut dims = Vec::new();
    let mut ok = true;
    let mut witness = json!({});
    for j in 0..=i64::from(steps) {
        let top = lambda + &(j * &FiniteWeight::theta(r));
        let pops = enumerate_pops(top.sequence(), &PopFilter::default())?;
        let mut spaces = Spaces::new();
        for p in &pops {
            let v = cl_vector(p, 0, norm)?;
            let Some(k) = v.terms().keys().next() else {
                ok = false;
                witness["zero_vector"] = pop_json(p);
                continue;
            };
            spaces.entry((k.gamma.clone(), k.mode_degree())).or_default().push(v);
        }
        let dim: usize = spaces.values().map(|vs| linalg::rank(vs)).sum();
        if dim != pops.len() {
            ok = false;
            witness[format!("dependent_{j}")] = json!({ "count": pops.len(), "rank": dim });
        }
        dims.push(json!({ "lambda": top.sequence(), "pops": pops.len(), "rank": dim }));
        levels.push((pops.len(), spaces));
    }
    for w in levels.windows(2) {
        let (lo, hi) = (&w[0].1, &w[1].1);
        for (key, vs) in lo {
            let big = hi.get(key).map(Vec::as_slice).unwrap_or(&[]);
            if let Some(v) = vs.iter().find(|v| !linalg::in_span(big, v)) {
                ok = false;
                witness["not_included"] = json!(v.dump());
            }
        }
    }
    witness["levels"] = json!(dims);
    Ok(Report::new("chain", json!({ "lambda": lambda.sequence(), "steps": steps }), ok, witness))
}

/// A stable basis of `L(Λ_i)_{t_γ(Λ_i) − dδ}`.
#[derive(Clone, Debug)]
pub struct StableBasis {
    pub lambda: FiniteWeight,
    pub k: i64,
    pub pops: Vec<Pop>,
    pub vectors: Vec<FockVector>,
    pub report: Report,
}

/// `{v_P : P ∈ P(λ+dθ)_{μ,d}}` with `μ = ϖ_i + γ` and `λ` the dominant
/// conjugate of `μ`; checked for size, independence and agreement with the
/// set obtained at `k = d + 1`.
pub fn stable_basis(r: usize, i: usize, gamma: &FiniteWeight, d: u32, norm: Normalization) -> Result<StableBasis> {
    stable_basis_at(r, i, gamma, d, i64::from(d), norm)
}

/// As [`stable_basis`] with an explicit shift `k`, compared against `k + 1`.
pub fn stable_basis_at(r: usize, i: usize, gamma: &FiniteWeight, d: u32, k: i64, norm: Normalization) -> Result<StableBasis> {
    if i > r {
        return Err(Error::OutOfRange(i));
    }
    if !gamma.in_root_lattice() {
        return Err(Error::NotInRootLattice(gamma.to_string()));
    }
    let mu = &FiniteWeight::fundamental(r, i) + gamma;
    let lambda = mu.dominant_conjugate();
    let filter = PopFilter { weight: Some(mu.clone()), depth: Some(i64::from(d)) };
    let build = |k: i64| -> Result<(Vec<Pop>, Vec<FockVector>)> {
        let top = &lambda + &(k * &FiniteWeight::theta(r));
        let pops = enumerate_pops(top.sequence(), &filter)?;
        let vs = pops.iter().map(|p| cl_vector(p, 0, norm)).collect::<Result<Vec<_>>>()?;
        Ok((pops, vs))
    };
    let (pops, vectors) = build(k)?;
    let (_, next) = build(k + 1)?;
    let want = colored_partition_count(r, d) as usize;
    let independent = linalg::is_independent(&vectors);
    let mut a: Vec<String> = vectors.iter().map(FockVector::dump).collect();
    let mut b: Vec<String> = next.iter().map(FockVector::dump).collect();
    a.sort();
    b.sort();
    let same = a == b;
    let unstable: Vec<Value> = pops.iter().filter(|p| !p.is_stable()).map(pop_json).collect();
    let ok = vectors.len() == want && independent && same;
    let input = json!({ "r": r, "i": i, "gamma": gamma, "d": d, "k": k });
    let witness = json!({
        "lambda": lambda.sequence(), "count": vectors.len(), "expected": want,
        "independent": independent, "stable_under_shift": same, "unstable_members": unstable,
    });
    let report = Report::new("basis", input, ok, witness);
    Ok(StableBasis { lambda, k, pops, vectors, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtpattern::GtPattern;

    fn pop(rows: &[&[i64]], overlay: &[((usize, usize), &[u32])]) -> Pop {
        let pattern = GtPattern::validate(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
        let ov = overlay.iter().map(|(k, v)| (*k, Partition::new(v.to_vec()).unwrap())).collect();
        Pop::validate(pattern, ov).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let b = cl_monomial(1, 1, 2, 3, &Partition::new(vec![1]).unwrap()).unwrap();
        assert_eq!(b.exponents, vec![3, 2]);
        assert!(cl_monomial(1, 1, 0, 3, &Partition::empty()).unwrap().exponents.is_empty());
        assert_eq!(cl_monomial(1, 1, 1, 0, &Partition::empty()).unwrap().exponents, vec![0]);
        assert!(cl_monomial(1, 1, 1, 0, &Partition::new(vec![1]).unwrap()).is_err());
    }

    #[test]
    fn rho_examples() {
        let p = pop(&[&[1], &[2, 0]], &[((1, 1), &[1])]);
        assert!(rho(&p, 0, 2).unwrap().is_empty());
        assert_eq!(rho(&p, 0, 1).unwrap().blocks, vec![Block { i: 1, j: 1, exponents: vec![0] }]);
        assert_eq!(rho(&p, 1, 1).unwrap().blocks, vec![Block { i: 1, j: 1, exponents: vec![2, 1] }]);
    }

    #[test]
    fn sign_examples() {
        let p = pop(&[&[1], &[2, 0]], &[((1, 1), &[1])]);
        assert_eq!(sign_eps(&p, 0, 2).unwrap(), 1);
        assert_eq!(sign_eps(&p, 0, 1).unwrap(), 1);
        let q = pop(&[&[0], &[2, 0]], &[]);
        let a1 = FiniteWeight::simple_root(1, 1);
        assert_eq!(sign_eps(&q, 0, 1).unwrap(), -cocycle_eps(&-&a1, &(2 * &a1)).unwrap());
        // the shifted POP evaluated at k = 0 gives the same sign
        for k in 0..3 {
            for p in enumerate_pops(&[2, 1, 0], &PopFilter::default()).unwrap() {
                assert_eq!(sign_eps(&p.shift(k), 0, 1).unwrap(), sign_eps(&p, k, 1).unwrap());
            }
        }
    }

    #[test]
    fn bare_products_differ_by_factorials() {
        let p = pop(&[&[0], &[0, 0]], &[]);
        let vac = FockVector::vacuum(1, 0).unwrap();
        for (k, f) in [(0, 1), (1, 1), (2, 2), (3, 6)] {
            assert_eq!(cl_vector(&p, k, Normalization::Plain).unwrap(), vac.scaled(&Coeff::from_integer(f.into())));
            assert_eq!(cl_vector(&p, k, Normalization::Divided).unwrap(), vac);
        }
    }

    #[test]
    fn row_and_column_forms_agree() {
        for seq in [vec![2i64, 1, 0], vec![3, 1, 0], vec![2, 2, 0]] {
            for p in enumerate_pops(&seq, &PopFilter::default()).unwrap() {
                let w = extremal_vector(&p.lambda());
                let a = rho(&p, 0, 1).unwrap().apply(&w, Normalization::Divided);
                let b = rho_columns(&p).apply(&w, Normalization::Divided);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn cl_vector_examples() {
        let e = pop(&[&[0], &[0, 0]], &[]);
        assert_eq!(cl_vector(&e, 0, Normalization::Divided).unwrap(), FockVector::vacuum(1, 0).unwrap());
        let p = pop(&[&[1], &[2, 0]], &[((1, 1), &[1])]);
        let v = cl_vector(&p, 0, Normalization::Divided).unwrap();
        assert!(!v.is_zero());
        assert_eq!(v.weight().unwrap(), crate::rootdata::AffineWeight::lambda0(1).minus_delta(1));
        for k in 1..=2 {
            assert_eq!(cl_vector(&p, k, Normalization::Divided).unwrap(), v);
        }
    }
}
