//! Verification suites that do not go through CL vectors: POP identities,
//! graded dimensions, bracket relations and the translation contract.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::fock::{act_cartan, act_heisenberg, act_root_vector, all_roots, basis_keys, graded_dim, Coeff, FockKey, FockVector, Root};
use crate::partitions::colored_partition_count;
use crate::pop::{enumerate_pops, InvariantSet, Pop, PopFilter};
use crate::report::{summarize, Report};
use crate::rootdata::{translate_weight, FiniteWeight};
use crate::translate::{cocycle_eps, translate_fundamental, translate_q, translate_weight_lattice, translate_weight_lattice_inv, Direction};

/// Weakly decreasing sequences of length `r + 1` ending in 0 whose
/// fundamental coefficients sum to at most `bound`.
pub fn dominant_sequences(r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; r];
    fn go(idx: usize, left: i64, coeffs: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if idx == coeffs.len() {
            let r = coeffs.len();
            let seq: Vec<i64> = (0..=r).map(|p| coeffs[p.min(r)..].iter().sum()).collect();
            out.push(seq);
            return;
        }
        for m in 0..=left {
            coeffs[idx] = m;
            go(idx + 1, left - m, coeffs, out);
        }
        coeffs[idx] = 0;
    }
    go(0, bound, &mut coeffs, &mut out);
    out.sort();
    out
}

fn pop_failures(p: &Pop) -> Vec<&'static str> {
    let r = p.rank();
    let mut bad = Vec::new();
    if !p.area_report().holds() {
        bad.push("area");
    }
    let info = p.depth();
    for s in 1..=r {
        let row: i64 = (s..=r).map(|j| p.depth_entry(s, j)).sum();
        if info.restricted[s - 1] != info.restricted[s] + row {
            bad.push("depth_recursion");
        }
        let restricted = p.restrict(s).expect("s in range");
        if restricted.total_depth() != info.restricted[s - 1] {
            bad.push("depth_restriction");
        }
        let lhs = p.invariant_set(s).expect("s in range");
        let rhs = (s..=r).fold(p.invariant_set(s + 1).expect("s + 1 in range"), |acc: InvariantSet, j| {
            acc.union(&p.invariant_slice(s, j).expect("s ≤ j"))
        });
        if lhs != rhs {
            bad.push("invariant_recursion");
        }
        for k in 1..=2 {
            if p.shift(k).invariant_set(s).ok().as_ref() != Some(&lhs) {
                bad.push("invariant_shift");
            }
        }
    }
    if info.restricted[r] != 0 || !p.invariant_set(r + 1).map(|i| i.is_empty()).unwrap_or(false) {
        bad.push("empty_tail");
    }
    if p.shift(1).total_depth() != info.total || p.shift(1).weight() != p.weight() {
        bad.push("shift_laws");
    }
    bad
}

/// Area identity, depth recursion and invariant-set recursion for every POP
/// with bounding sequence `seq`.
pub fn pop_identities(seq: &[i64]) -> Result<Report> {
    let pops = enumerate_pops(seq, &PopFilter::default())?;
    let failures: Vec<Value> = pops
        .par_iter()
        .filter_map(|p| {
            let bad = pop_failures(p);
            (!bad.is_empty()).then(|| json!({ "pop": p, "failed": bad }))
        })
        .collect();
    let witness = json!({ "pops": pops.len(), "failures": failures.len(), "first": failures.first() });
    Ok(Report::new("identities", json!({ "lambda": seq }), failures.is_empty(), witness))
}

/// Root-lattice points with `(γ|γ) ≤ bound`.
pub fn small_root_lattice(r: usize, bound: i64) -> Vec<FiniteWeight> {
    crate::fock::lattice_points(r, 0, bound / 2)
}

/// `graded_dim` against the colored-partition count for one weight space.
pub fn dims_case(r: usize, i: usize, gamma: &FiniteWeight, m: u32) -> Result<Report> {
    let got = graded_dim(r, i, gamma, m)?;
    let want = colored_partition_count(r, m);
    let input = json!({ "r": r, "sector": i, "gamma": gamma, "m": m });
    Ok(Report::new("dims", input, got == want, json!({ "graded_dim": got, "colored": want })))
}

pub fn dims_suite(r: usize, mmax: u32) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for i in 0..=r {
        for gamma in small_root_lattice(r, 8) {
            for m in 0..=mmax {
                out.push(dims_case(r, i, &gamma, m)?);
            }
        }
    }
    Ok(out)
}

fn matrix_unit(root: &Root) -> (usize, usize) {
    let (i, j) = root.interval();
    if root.positive {
        (i, j + 1)
    } else {
        (j + 1, i)
    }
}

/// `[x_a ⊗ t^s, x_b ⊗ t^t] v` predicted from the matrix-unit relations
/// `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj` and `(E_ij|E_ji) = 1`.
pub fn bracket_prediction(a: &Root, s: i64, b: &Root, t: i64, v: &FockVector) -> FockVector {
    let r = v.rank();
    let (i, j) = matrix_unit(a);
    let (k, l) = matrix_unit(b);
    if (&a.weight + &b.weight).is_zero() {
        let h = act_cartan(&a.coords, s + t, v);
        return if s + t == 0 { h.add(&v.scaled(&Coeff::from_integer(s.into()))) } else { h };
    }
    let mut out = FockVector::zero(r, v.sector());
    if j == k || l == i {
        let ab = Root::new(&(&a.weight + &b.weight)).expect("sum of roots with a matching index is a root");
        let term = act_root_vector(&ab, s + t, v);
        out = if j == k { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// Commutators of root vectors against the prediction, on every basis key of
/// sector `i` with energy at most `energy`, for `|s|, |t| ≤ smax`.
pub fn bracket_suite(r: usize, i: usize, energy: i64, smax: i64) -> Report {
    let roots = all_roots(r);
    let keys = basis_keys(r, i, energy);
    let failures: Vec<Value> = keys
        .par_iter()
        .flat_map_iter(|key| {
            let v = FockVector::basis(key.clone());
            let mut bad = Vec::new();
            for a in &roots {
                for s in -smax..=smax {
                    let av = act_root_vector(a, s, &v);
                    for b in &roots {
                        for t in -smax..=smax {
                            let ab = act_root_vector(a, s, &act_root_vector(b, t, &v));
                            let ba = act_root_vector(b, t, &av);
                            if ab.sub(&ba) != bracket_prediction(a, s, b, t, &v) {
                                bad.push(json!({ "key": key.to_string(), "a": a.weight, "s": s, "b": b.weight, "t": t }));
                            }
                        }
                    }
                }
            }
            bad
        })
        .collect();
    let input = json!({ "r": r, "sector": i, "energy": energy, "smax": smax });
    let witness = json!({ "keys": keys.len(), "failures": failures.len(), "first": failures.first() });
    Report::new("brackets", input, failures.is_empty(), witness)
}

fn q(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// `T_β` on one sector, as a closure-friendly map.
fn tq(beta: &FiniteWeight) -> impl Fn(&FockVector) -> FockVector + Sync + '_ {
    move |v| translate_q(beta, v).expect("β ∈ Q")
}

/// Conjugation check `T x_γ(s) = x_γ(s − (β|γ)) T` on `v`.
fn conjugation_holds(t: &dyn Fn(&FockVector) -> FockVector, beta: &FiniteWeight, roots: &[Root], smax: i64, v: &FockVector) -> bool {
    let tv = t(v);
    roots.iter().all(|g| {
        let shift = beta.form(&g.weight).to_integer();
        (-smax..=smax).all(|s| t(&act_root_vector(g, s, v)) == act_root_vector(g, s - shift, &tv))
    })
}

/// Cartan zero modes: `T h(0) T^{−1} = h(0) − (β|h)`; nonzero modes commute.
fn cartan_holds(t: &dyn Fn(&FockVector) -> FockVector, beta: &FiniteWeight, nmax: i64, v: &FockVector) -> bool {
    let r = v.rank();
    let tv = t(v);
    (1..=r).all(|a| {
        let alpha = FiniteWeight::simple_root(r, a);
        let pair = beta.form(&alpha).to_integer();
        let mut h = vec![0; r];
        h[a - 1] = 1;
        let zero = t(&act_cartan(&h, 0, v)) == act_cartan(&h, 0, &tv).sub(&tv.scaled(&q(pair)));
        zero && (1..=nmax).all(|n| {
            t(&act_heisenberg(a, n, v)) == act_heisenberg(a, n, &tv) && t(&act_heisenberg(a, -n, v)) == act_heisenberg(a, -n, &tv)
        })
    })
}

fn weight_transport(t: &dyn Fn(&FockVector) -> FockVector, beta: &FiniteWeight, v: &FockVector) -> bool {
    let tv = t(v);
    match (v.weight(), tv.weight()) {
        (Ok(w), Ok(tw)) => tw == translate_weight(beta, &w),
        _ => false,
    }
}

/// Translation directions used by the suite: simple roots, `θ`, and their
/// negatives.
pub fn translation_set(r: usize) -> Vec<FiniteWeight> {
    let mut out: Vec<FiniteWeight> = (1..=r).map(|a| FiniteWeight::simple_root(r, a)).collect();
    if r > 1 {
        out.push(FiniteWeight::theta(r));
    }
    let neg: Vec<FiniteWeight> = out.iter().map(|b| -b).collect();
    out.extend(neg);
    out
}

fn run_cases(name: &str, input: Value, keys: &[FockKey], f: impl Fn(&FockVector) -> Option<Value> + Sync) -> Report {
    let failures: Vec<Value> = keys.par_iter().filter_map(|k| f(&FockVector::basis(k.clone()))).collect();
    let witness = json!({ "keys": keys.len(), "failures": failures.len(), "first": failures.first() });
    Report::new(name, input, failures.is_empty(), witness)
}

/// The translation contract on all basis keys of energy at most `energy`.
pub fn translate_suite(r: usize, energy: i64, smax: i64) -> Result<Vec<Report>> {
    let roots = all_roots(r);
    let betas = translation_set(r);
    let mut out = Vec::new();
    for i in 0..=r {
        let keys = basis_keys(r, i, energy);
        let base = |name: &str| json!({ "r": r, "sector": i, "energy": energy, "property": name });

        out.push(run_cases("translate", base("inverse"), &keys, |v| {
            betas
                .iter()
                .find(|b| tq(&-*b)(&tq(b)(v)) != *v)
                .map(|b| json!({ "beta": b, "v": v.dump() }))
        }));

        out.push(run_cases("translate", base("composition"), &keys, |v| {
            for a in &betas {
                for b in &betas {
                    for d in 1..=2i64 {
                        let db = d * b;
                        let lhs = translate_q(a, &translate_q(&db, v).ok()?).ok()?;
                        let sum = a + &db;
                        let e = cocycle_eps(a, &db).ok()?;
                        let rhs = translate_q(&sum, v).ok()?.scaled(&q(e));
                        if lhs != rhs {
                            return Some(json!({ "mu_minus": a, "d_alpha": db, "v": v.dump() }));
                        }
                    }
                }
            }
            None
        }));

        out.push(run_cases("translate", base("conjugation"), &keys, |v| {
            betas
                .iter()
                .find(|b| !conjugation_holds(&tq(b), b, &roots, smax, v))
                .map(|b| json!({ "beta": b, "v": v.dump() }))
        }));

        out.push(run_cases("translate", base("cartan"), &keys, |v| {
            betas
                .iter()
                .find(|b| !cartan_holds(&tq(b), b, 2, v) || !weight_transport(&tq(b), b, v))
                .map(|b| json!({ "beta": b, "v": v.dump() }))
        }));

        if i == 0 {
            for w in 1..=r {
                let omega = FiniteWeight::fundamental(r, w);
                let plus = |v: &FockVector| translate_fundamental(w, v, Direction::Plus).expect("sector 0");
                out.push(run_cases("translate", json!({ "r": r, "omega": w, "energy": energy, "property": "fundamental" }), &keys, |v| {
                    let tv = plus(v);
                    let back = translate_fundamental(w, &tv, Direction::Minus).ok()?;
                    let ok = back == *v
                        && conjugation_holds(&plus, &omega, &roots, smax, v)
                        && cartan_holds(&plus, &omega, 2, v)
                        && weight_transport(&plus, &omega, v);
                    (!ok).then(|| json!({ "v": v.dump() }))
                }));
            }
            out.push(general_translation_report(r, energy, smax, &keys, &roots));
        }
    }
    Ok(out)
}

/// `T_{λ−β} = T_{ϖ_{i_λ}} T_{λ−β−ϖ_{i_λ}}`: independent of the splitting of
/// `λ − β`, transports weights, and shifts loop degrees by `(λ−β|γ)`.
fn general_translation_report(r: usize, energy: i64, smax: i64, keys: &[FockKey], roots: &[Root]) -> Report {
    let theta = FiniteWeight::theta(r);
    let mut pairs: Vec<(FiniteWeight, FiniteWeight)> = Vec::new();
    for w in 0..=r {
        let lam = FiniteWeight::fundamental(r, w);
        pairs.push((lam.clone(), FiniteWeight::zero(r)));
        for a in 1..=r {
            pairs.push((lam.clone(), FiniteWeight::simple_root(r, a)));
        }
        pairs.push((&lam + &theta, theta.clone()));
    }
    run_cases("translate", json!({ "r": r, "energy": energy, "property": "general" }), keys, |v| {
        for (lam, beta) in &pairs {
            let mu = lam - beta;
            let t = |x: &FockVector| crate::translate::translate_general(lam, beta, x).expect("valid data");
            let alt = translate_general_split(&(lam + &theta), &(beta + &theta), v);
            let ok = alt.as_ref() == Some(&t(v))
                && translate_weight_lattice_inv(&mu, &t(v)).ok().as_ref() == Some(v)
                && conjugation_holds(&t, &mu, roots, smax, v)
                && weight_transport(&t, &mu, v);
            if !ok {
                return Some(json!({ "lambda": lam, "beta": beta, "v": v.dump() }));
            }
        }
        None
    })
}

fn translate_general_split(lam: &FiniteWeight, beta: &FiniteWeight, v: &FockVector) -> Option<FockVector> {
    translate_weight_lattice(&(lam - beta), v).ok()
}

/// Folds the translate suite into one pass/fail line per rank.
pub fn translate_summary(r: usize, energy: i64, smax: i64) -> Result<Report> {
    let reports = translate_suite(r, energy, smax)?;
    Ok(summarize("translate", json!({ "r": r, "energy": energy, "smax": smax }), &reports))
}
