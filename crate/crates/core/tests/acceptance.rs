//! Acceptance criteria, all exact. Prints one line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use clstab::clbasis::{self, Normalization};
use clstab::cli::sl2_reports;
use clstab::pop::{enumerate_pops, Pop, PopFilter};
use clstab::report::Report;
use clstab::rootdata::FiniteWeight;
use clstab::verify;

const NORM: Normalization = Normalization::Divided;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    cases: usize,
    failures: Vec<Report>,
}

impl Outcome {
    fn of(reports: Vec<Report>) -> Self {
        let cases = reports.len();
        Outcome { cases, failures: reports.into_iter().filter(|r| !r.passed()).collect() }
    }
}

fn seq(r: usize, fundamentals: &[(usize, i64)]) -> Vec<i64> {
    let mut w = FiniteWeight::zero(r);
    for &(i, m) in fundamentals {
        w = &w + &(m * &FiniteWeight::fundamental(r, i));
    }
    w.sequence().to_vec()
}

fn c1() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=3 {
        for s in verify::dominant_sequences(r, 4) {
            reps.push(verify::pop_identities(&s).unwrap());
        }
    }
    Outcome::of(reps)
}

fn c2() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=2 {
        reps.extend(verify::dims_suite(r, 4).unwrap());
    }
    Outcome::of(reps)
}

fn c3() -> Outcome {
    Outcome::of((0..=2).map(|i| verify::bracket_suite(2, i, 3, 2)).collect())
}

fn c4() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=2 {
        reps.extend(verify::translate_suite(r, 3, 2).unwrap());
    }
    Outcome::of(reps)
}

fn basis_lambdas() -> Vec<Vec<i64>> {
    vec![seq(2, &[(1, 1)]), seq(2, &[(1, 2)]), seq(2, &[(1, 1), (2, 1)])]
}

fn c5() -> Outcome {
    let mut reps = Vec::new();
    for s in basis_lambdas() {
        let lam = FiniteWeight::from_sequence(&s).unwrap();
        reps.push(clbasis::weyl_span(&lam, 0, NORM).unwrap());
        for p in enumerate_pops(&s, &PopFilter::default()).unwrap() {
            reps.push(clbasis::verify_weight(&p, 0, NORM).unwrap());
        }
    }
    Outcome::of(reps)
}

fn c6() -> Outcome {
    let reps = basis_lambdas()
        .iter()
        .map(|s| clbasis::weyl_span(&FiniteWeight::from_sequence(s).unwrap(), 1, NORM).unwrap())
        .collect();
    Outcome::of(reps)
}

fn headline_pops() -> Vec<Pop> {
    let lambdas = [
        seq(1, &[]),
        seq(1, &[(1, 1)]),
        seq(1, &[(1, 2)]),
        seq(2, &[]),
        seq(2, &[(1, 1)]),
        seq(2, &[(1, 1), (2, 1)]),
    ];
    lambdas
        .iter()
        .flat_map(|s| enumerate_pops(s, &PopFilter::default()).unwrap())
        .filter(|p| p.is_stable() && p.total_depth() <= 3)
        .collect()
}

fn c7() -> Outcome {
    Outcome::of(headline_pops().iter().map(|p| clbasis::verify_stability(p, 2, NORM).unwrap()).collect())
}

fn c8() -> Outcome {
    let mut reps = Vec::new();
    for p in headline_pops() {
        for s in (1..=p.rank() + 1).filter(|&s| p.is_stable_from(s)) {
            for k in 0..=1 {
                reps.push(clbasis::verify_mtp(&p, k, s, NORM).unwrap());
            }
        }
    }
    Outcome::of(reps)
}

fn c9() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=2 {
        reps.extend(sl2_reports(r, 4, NORM).unwrap());
    }
    Outcome::of(reps)
}

fn c10() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=2usize {
        for i in 0..=r {
            for gamma in [FiniteWeight::zero(r), FiniteWeight::simple_root(r, 1)] {
                for d in 0..=2 {
                    reps.push(clbasis::stable_basis(r, i, &gamma, d, NORM).unwrap().report);
                }
            }
        }
    }
    Outcome::of(reps)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("POP identities (area, depth and invariant-set recursions)", c1),
        ("weight multiplicities equal colored partition counts", c2),
        ("affine bracket relations", c3),
        ("translation operator contract", c4),
        ("CL basis independence and weight law", c5),
        ("chain inclusion W(λ) ⊆ W(λ+θ)", c6),
        ("main theorem: v_{P^k} independent of k", c7),
        ("intermediate form at every admissible s", c8),
        ("sl2 stability and its translated form", c9),
        ("stable bases B_{γ,d}", c10),
    ];
    let mut all = true;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let secs = t.elapsed().as_secs_f64();
        if out.failures.is_empty() {
            println!("criterion {:>2} PASS  {name}: {} checks in {secs:.1}s", n + 1, out.cases);
        } else {
            all = false;
            println!(
                "criterion {:>2} FAIL  {name}: {}/{} checks failed in {secs:.1}s; first: {}",
                n + 1,
                out.failures.len(),
                out.cases,
                out.failures[0].to_line()
            );
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
