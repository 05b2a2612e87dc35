//! Command-line front end: argument parsing, suite dispatch, JSON-line reports.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::clbasis::{self, Normalization};
use crate::error::{Error, Result};
use crate::fock::monomials;
use crate::gtpattern::enumerate_patterns;
use crate::partitions::{colored_partitions, enumerate_rect};
use crate::pop::{enumerate_pops, Pop, PopFilter};
use crate::report::Report;
use crate::rootdata::{validate_sequence, FiniteWeight};
use crate::translate::Cocycle;
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "clstab", version, about = "Enumerate POPs and verify stability of CL bases in level-one modules of affine sl(r+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print patterns, POPs or colored partitions as JSON lines.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateKind,
    },
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Print the cocycle table or a CL vector.
    Dump {
        #[arg(value_enum)]
        what: DumpKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Patterns,
    Pops,
    Colored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Dims,
    Brackets,
    Translate,
    Weights,
    Stability,
    Mtp,
    /// sl2 stability and its translated form.
    Sl2,
    Chain,
    Basis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DumpKind {
    Cocycle,
    Vector,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    #[default]
    Divided,
    Plain,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Rank r of sl(r+1); defaults to the length of --lambda minus one.
    #[arg(long = "r", global = true)]
    pub r: Option<usize>,
    /// Bounding sequence, weakly decreasing and ending in 0, e.g. 2,1,0.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Option<Vec<i64>>,
    /// Largest shift k for stability and MTp checks.
    #[arg(long, global = true, default_value_t = 2)]
    pub kmax: i64,
    /// Depth: exact filter for `enumerate pops`, upper bound for verify
    /// suites, degree bound m for dims and colored, d for basis.
    #[arg(long, global = true)]
    pub depth: Option<i64>,
    /// Restrict to one sector i.
    #[arg(long, global = true)]
    pub sector: Option<usize>,
    /// Lattice point in simple-root coordinates, e.g. 1,0.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub gamma: Option<Vec<i64>>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Also write the cocycle sign table to this file.
    #[arg(long = "cocycle-table", global = true)]
    pub cocycle_table: Option<PathBuf>,
    /// Energy bound for brackets and translate.
    #[arg(long, global = true, default_value_t = 3)]
    pub energy: i64,
    /// Loop-degree bound |s| for brackets and translate.
    #[arg(long, global = true, default_value_t = 2)]
    pub smax: i64,
    /// Bound on the sum of fundamental coefficients when --lambda is absent.
    #[arg(long, global = true, default_value_t = 4)]
    pub bound: i64,
    /// Chain steps for `verify chain`.
    #[arg(long, global = true, default_value_t = 1)]
    pub steps: u32,
    /// Shift used by `dump vector` and `verify basis`.
    #[arg(long, global = true)]
    pub k: Option<i64>,
    /// POP file in JSON form for `dump vector`.
    #[arg(long, global = true)]
    pub pop: Option<PathBuf>,
    /// How repeated factors in a CL monomial are normalized.
    #[arg(long, global = true, value_enum, default_value_t = NormArg::Divided)]
    pub normalization: NormArg,
}

/// A validated invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub opts: Options,
    pub rank: Option<usize>,
}

impl RunConfig {
    fn norm(&self) -> Normalization {
        match self.opts.normalization {
            NormArg::Divided => Normalization::Divided,
            NormArg::Plain => Normalization::Plain,
        }
    }

    fn rank(&self) -> Result<usize> {
        self.rank.ok_or_else(|| Error::InvalidInput("--r or --lambda is required".into()))
    }

    fn lambda(&self) -> Result<&[i64]> {
        self.opts.lambda.as_deref().ok_or_else(|| Error::InvalidInput("--lambda is required".into()))
    }

    fn gamma(&self, r: usize) -> Result<Option<FiniteWeight>> {
        match &self.opts.gamma {
            None => Ok(None),
            Some(g) if g.len() == r => Ok(Some(FiniteWeight::from_root_coords(r, g))),
            Some(g) => Err(Error::InvalidInput(format!("--gamma needs {r} root coordinates, got {}", g.len()))),
        }
    }

    fn sectors(&self, r: usize) -> Result<Vec<usize>> {
        match self.opts.sector {
            Some(i) if i > r => Err(Error::OutOfRange(i)),
            Some(i) => Ok(vec![i]),
            None => Ok((0..=r).collect()),
        }
    }
}

/// Parses and validates `argv` (including the program name).
pub fn parse_config<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let invalid = |msg: String| clap::Error::raw(clap::error::ErrorKind::ValueValidation, msg + "\n");
    if let Some(seq) = &cli.opts.lambda {
        validate_sequence(seq).map_err(|e| invalid(format!("--lambda: {e}")))?;
    }
    let rank = match (cli.opts.r, &cli.opts.lambda) {
        (Some(0), _) => return Err(invalid("--r must be at least 1".into())),
        (Some(r), Some(seq)) if seq.len() != r + 1 => {
            return Err(invalid(format!("--lambda has {} entries but --r is {r}", seq.len())));
        }
        (Some(r), _) => Some(r),
        (None, Some(seq)) => Some(seq.len() - 1),
        (None, None) => None,
    };
    if cli.opts.kmax < 0 || cli.opts.energy < 0 || cli.opts.smax < 0 || cli.opts.bound < 0 {
        return Err(invalid("bounds must be nonnegative".into()));
    }
    if matches!(cli.opts.depth, Some(d) if d < 0) || matches!(cli.opts.k, Some(k) if k < 0) {
        return Err(invalid("--depth and --k must be nonnegative".into()));
    }
    if cli.opts.jobs == Some(0) {
        return Err(invalid("--jobs must be at least 1".into()));
    }
    Ok(RunConfig { command: cli.command, opts: cli.opts, rank })
}

fn lines<T: serde::Serialize>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| serde_json::to_string(x).expect("serializable")).collect()
}

fn pops_for(cfg: &RunConfig, depth_max: Option<i64>) -> Result<Vec<Pop>> {
    let pops = enumerate_pops(cfg.lambda()?, &PopFilter::default())?;
    Ok(pops.into_iter().filter(|p| depth_max.is_none_or(|d| p.total_depth() <= d)).collect())
}

fn collect<T: Send, F>(items: Vec<T>, f: F) -> Result<Vec<Report>>
where
    F: Fn(T) -> Result<Vec<Report>> + Sync + Send,
{
    let nested: Result<Vec<Vec<Report>>> = items.into_par_iter().map(f).collect();
    Ok(nested?.into_iter().flatten().collect())
}

fn identities(cfg: &RunConfig) -> Result<Vec<Report>> {
    let seqs = match (&cfg.opts.lambda, cfg.rank) {
        (Some(seq), _) => vec![seq.clone()],
        (None, Some(r)) => verify::dominant_sequences(r, cfg.opts.bound),
        (None, None) => (1..=3).flat_map(|r| verify::dominant_sequences(r, cfg.opts.bound)).collect(),
    };
    collect(seqs, |seq| Ok(vec![verify::pop_identities(&seq)?]))
}

fn dims(cfg: &RunConfig) -> Result<Vec<Report>> {
    let r = cfg.rank()?;
    let mmax = cfg.opts.depth.unwrap_or(4) as u32;
    let gammas = match cfg.gamma(r)? {
        Some(g) => vec![g],
        None => verify::small_root_lattice(r, 8),
    };
    let mut cases = Vec::new();
    for i in cfg.sectors(r)? {
        for g in &gammas {
            for m in 0..=mmax {
                cases.push((i, g.clone(), m));
            }
        }
    }
    collect(cases, |(i, g, m)| Ok(vec![verify::dims_case(r, i, &g, m)?]))
}

fn weights(cfg: &RunConfig) -> Result<Vec<Report>> {
    let pops = pops_for(cfg, cfg.opts.depth)?;
    let (kmax, norm) = (cfg.opts.kmax, cfg.norm());
    collect(pops, |p| (0..=kmax).map(|k| clbasis::verify_weight(&p, k, norm)).collect())
}

fn stability(cfg: &RunConfig) -> Result<Vec<Report>> {
    let pops: Vec<Pop> = pops_for(cfg, cfg.opts.depth)?.into_iter().filter(Pop::is_stable).collect();
    let (kmax, norm) = (cfg.opts.kmax, cfg.norm());
    collect(pops, |p| Ok(vec![clbasis::verify_stability(&p, kmax, norm)?]))
}

fn mtp(cfg: &RunConfig) -> Result<Vec<Report>> {
    let mut cases = Vec::new();
    for p in pops_for(cfg, cfg.opts.depth)? {
        for s in 1..=p.rank() + 1 {
            if p.is_stable_from(s) {
                cases.push((p.clone(), s));
            }
        }
    }
    let (kmax, norm) = (cfg.opts.kmax, cfg.norm());
    collect(cases, |(p, s)| (0..kmax.max(1)).map(|k| clbasis::verify_mtp(&p, k, s, norm)).collect())
}

/// Positive roots exercised by the sl2 suite: `α_1` and, for `r ≥ 2`, `θ`.
pub fn sl2_roots(r: usize) -> Vec<(usize, usize)> {
    if r == 1 {
        vec![(1, 1)]
    } else {
        vec![(1, 1), (1, r)]
    }
}

/// All sl2-stability and translated-form cases for `d ≤ dmax`.
pub fn sl2_reports(r: usize, dmax: u32, norm: Normalization) -> Result<Vec<Report>> {
    let mut stab = Vec::new();
    let mut cruc = Vec::new();
    for root in sl2_roots(r) {
        let alpha = FiniteWeight::positive_root(r, root.0, root.1);
        let mut nus = vec![FiniteWeight::zero(r)];
        nus.extend((1..=r).map(|a| FiniteWeight::fundamental(r, a)));
        for d in 0..=dmax {
            for pi in enumerate_rect(d, d).into_iter().filter(|p| p.size() <= d) {
                for k_extra in 1..=2 {
                    stab.push((root, d, pi.clone(), k_extra));
                }
            }
            for nu in &nus {
                let mu = &(i64::from(d) * &alpha) + nu;
                let pair = mu.form(&alpha).to_integer();
                let d_prime = (pair - i64::from(d)) as u32;
                for pi in enumerate_rect(d, d_prime).into_iter().filter(|p| p.size() <= d) {
                    for m in 0..=2 {
                        for g in monomials(r, m) {
                            cruc.push((root, d, pi.clone(), mu.clone(), g));
                        }
                    }
                }
            }
        }
    }
    let mut out = collect(stab, |(root, d, pi, ke)| Ok(vec![clbasis::verify_stabsl2(r, root, d, &pi, ke, norm)?]))?;
    out.extend(collect(cruc, |(root, d, pi, mu, g)| Ok(vec![clbasis::verify_crucprop(r, root, d, &pi, &mu, &g, norm)?]))?);
    Ok(out)
}

fn basis(cfg: &RunConfig) -> Result<Vec<Report>> {
    let r = cfg.rank()?;
    let gammas = match cfg.gamma(r)? {
        Some(g) => vec![g],
        None => vec![FiniteWeight::zero(r), FiniteWeight::simple_root(r, 1)],
    };
    let ds: Vec<u32> = match cfg.opts.depth {
        Some(d) => vec![d as u32],
        None => (0..=2).collect(),
    };
    let mut cases = Vec::new();
    for i in cfg.sectors(r)? {
        for g in &gammas {
            for &d in &ds {
                cases.push((i, g.clone(), d));
            }
        }
    }
    let (k, norm) = (cfg.opts.k, cfg.norm());
    collect(cases, |(i, g, d)| {
        let b = clbasis::stable_basis_at(r, i, &g, d, k.unwrap_or(i64::from(d)), norm)?;
        Ok(vec![b.report])
    })
}

fn run_suite(cfg: &RunConfig, suite: Suite) -> Result<Vec<Report>> {
    let energy = cfg.opts.energy;
    let smax = cfg.opts.smax;
    Ok(match suite {
        Suite::Identities => identities(cfg)?,
        Suite::Dims => dims(cfg)?,
        Suite::Brackets => {
            let r = cfg.rank()?;
            cfg.sectors(r)?.into_iter().map(|i| verify::bracket_suite(r, i, energy, smax)).collect()
        }
        Suite::Translate => verify::translate_suite(cfg.rank()?, energy, smax)?,
        Suite::Weights => weights(cfg)?,
        Suite::Stability => stability(cfg)?,
        Suite::Mtp => mtp(cfg)?,
        Suite::Sl2 => sl2_reports(cfg.rank()?, cfg.opts.depth.unwrap_or(4) as u32, cfg.norm())?,
        Suite::Chain => {
            let lam = FiniteWeight::from_sequence(cfg.lambda()?)?;
            vec![clbasis::weyl_span(&lam, cfg.opts.steps, cfg.norm())?]
        }
        Suite::Basis => basis(cfg)?,
    })
}

/// Output lines and overall success for a validated config.
pub fn execute(cfg: &RunConfig) -> Result<(Vec<String>, bool)> {
    let cocycle_hash = cfg.rank.map(|r| Cocycle::new(r).hash());
    match &cfg.command {
        Command::Enumerate { what } => {
            let out = match what {
                EnumerateKind::Patterns => lines(&enumerate_patterns(cfg.lambda()?)?),
                EnumerateKind::Pops => {
                    let filter = PopFilter { weight: None, depth: cfg.opts.depth };
                    lines(&enumerate_pops(cfg.lambda()?, &filter)?)
                }
                EnumerateKind::Colored => {
                    let r = cfg.rank()?;
                    lines(&colored_partitions(r, cfg.opts.depth.unwrap_or(2) as u32))
                }
            };
            Ok((out, true))
        }
        Command::Dump { what } => {
            let text = match what {
                DumpKind::Cocycle => {
                    let c = Cocycle::new(cfg.rank()?);
                    format!("{}sha256 {}", c.dump(), c.hash())
                }
                DumpKind::Vector => {
                    let path = cfg.opts.pop.as_ref().ok_or_else(|| Error::InvalidInput("--pop is required".into()))?;
                    let raw = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    let p: Pop = serde_json::from_str(&raw).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    clbasis::cl_vector(&p, cfg.opts.k.unwrap_or(0), cfg.norm())?.dump()
                }
            };
            Ok((text.lines().map(str::to_owned).collect(), true))
        }
        Command::Verify { suite } => {
            let mut reports = run_suite(cfg, *suite)?;
            let ok = reports.iter().all(Report::passed);
            if let Some(h) = &cocycle_hash {
                for rep in &mut reports {
                    if let Value::Object(m) = &mut rep.input {
                        m.insert("cocycle".into(), json!(h));
                    }
                }
            }
            Ok((reports.iter().map(Report::to_line).collect(), ok))
        }
    }
}

/// Runs a config, writing to `--out` or `stdout`; returns the exit code.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32> {
    if let Some(n) = cfg.opts.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    if let Some(path) = &cfg.opts.cocycle_table {
        let c = Cocycle::new(cfg.rank()?);
        fs::write(path, format!("{}sha256 {}\n", c.dump(), c.hash())).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    }
    let (out, ok) = execute(cfg)?;
    let mut text = out.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    match &cfg.opts.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?,
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::InvalidInput(e.to_string()))?,
    }
    Ok(if ok { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let c = parse_config(["clstab", "verify", "stability", "--r", "2", "--lambda", "2,1,0", "--kmax", "2"]).unwrap();
        assert!(matches!(c.command, Command::Verify { suite: Suite::Stability }));
        assert_eq!(c.rank, Some(2));
        let c = parse_config(["clstab", "enumerate", "pops", "--lambda", "2,0", "--depth", "1"]).unwrap();
        assert!(matches!(c.command, Command::Enumerate { what: EnumerateKind::Pops }));
        assert_eq!(c.opts.depth, Some(1));
        assert!(parse_config(["clstab", "--lambda", "1,2,0"]).is_err());
        assert!(parse_config(["clstab", "verify", "dims", "--lambda", "1,2,0"]).is_err());
        assert!(parse_config(["clstab", "verify"]).is_err());
        assert!(parse_config(["clstab", "verify", "dims", "--r", "0"]).is_err());
        assert!(parse_config(["clstab", "verify", "dims", "--r", "2", "--lambda", "1,0"]).is_err());
    }

    #[test]
    fn stability_example() {
        let c = parse_config(["clstab", "verify", "stability", "--lambda", "2,0", "--kmax", "2"]).unwrap();
        let (out, ok) = execute(&c).unwrap();
        assert!(ok);
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn dims_example() {
        let c = parse_config(["clstab", "verify", "dims", "--r", "2", "--depth", "3", "--sector", "1"]).unwrap();
        let (out, ok) = execute(&c).unwrap();
        assert!(ok);
        assert!(!out.is_empty());
    }

    #[test]
    fn missing_lambda_is_an_error() {
        let c = parse_config(["clstab", "verify", "stability", "--r", "1"]).unwrap();
        assert!(execute(&c).is_err());
    }
}
