use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use resonance_core::branching::{m_weight, mhat, KType, MType};
use resonance_core::liealg::{group_constants, weyl_dim, Algebra, Family, GroupSpec};
use resonance_core::numverify::{contour_shift_check, default_truncation, residue_quadrature};
use resonance_core::plancherel::{density, poles, PlancherelDensity, PoleRecord};
use resonance_core::rational::{parse_tuple, q, qi};
use resonance_core::residuerep::{
    classify, geometric_grid, gk_counts, gk_exponent_estimate, nilpotent_orbits, verify_langlands, Delta,
};
use resonance_core::resonances::{atlas, DEFAULT_K_MAX};
use resonance_core::Error;
use serde_json::{json, Value};

use crate::json;

const TAU_HELP: &str = "\
K-types are given with --tau as comma separated rationals (5/2, -1, 0.5) in the
coordinates of a maximal torus of K:
  spin-even  Spin(2n,1), K = Spin(2n): (a1,...,an), a1 >= ... >= a(n-1) >= |an|,
             all integers or all half-integers. Classified shape (N,0,...,0).
  spin-odd   Spin(2n+1,1), K = Spin(2n+1): (a1,...,an), a1 >= ... >= an >= 0.
  su         SU(n,1), K = S(U(n)xU(1)): (a1,...,an, l), integers, a1 >= ... >= an.
             Classified shape (M1,0,...,0,-M2,L).
  sp         Sp(n,1), K = Sp(n)xSp(1): (a1,...,an, t), integers, a1 >= ... >= an >= 0,
             t >= 0. Classified shape (t1,t2,0,...,0,t).
  f4         F4(-20), K = Spin(9): (a1,a2,a3,a4). Classified shape (a/2,b/2,b/2,b/2).
Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.";

#[derive(Parser, Debug)]
#[command(name = "resonance-atlas", version, about = "Resonances and residue representations of rank one symmetric spaces", after_help = TAU_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// spin-even, spin-odd, su, sp or f4
    #[arg(long, value_parser = parse_family)]
    pub group: Family,
    /// Rank parameter; not used for f4.
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Restricted root multiplicities and related constants.
    Constants {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// M-types in the restriction of a K-type, with multiplicities and dimensions.
    Branch {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Plancherel densities and their poles for each M-type of a K-type.
    Density {
        #[command(flatten)]
        group: GroupArgs,
        /// Defaults to the trivial K-type.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// Largest pole index, counted from the first pole that survives cancellation.
        #[arg(long, default_value_t = 8)]
        k_max: i128,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The resonance atlas of a K-type.
    Resonances {
        #[command(flatten)]
        group: GroupArgs,
        /// Defaults to the trivial K-type.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// Largest pole index, counted from the first pole that survives cancellation.
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: i128,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Langlands data, unitarity and wave front orbit of a residue representation.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        k: i128,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// K-type counts and the fitted growth exponent of a residue representation.
    Gk {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[arg(long)]
        k: i128,
        /// Comma separated increasing radii; defaults to a 12-point geometric grid.
        #[arg(long)]
        t_grid: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Nilpotent orbit catalogue.
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numerical checks of residues and of the contour-shift identity.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Defaults to the trivial K-type.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
        /// Largest pole index, counted from the first pole that survives cancellation.
        #[arg(long, default_value_t = 6)]
        k_max: i128,
        /// Relative tolerance for residues.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Relative tolerance for the contour-shift identity.
        #[arg(long, default_value_t = 1e-6)]
        contour_tol: f64,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Constants { output, .. }
            | Command::Branch { output, .. }
            | Command::Density { output, .. }
            | Command::Resonances { output, .. }
            | Command::Classify { output, .. }
            | Command::Gk { output, .. }
            | Command::Orbits { output, .. }
            | Command::Verify { output, .. } => output,
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| format!("unknown group '{s}' (expected spin-even, spin-odd, su, sp or f4)"))
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Usage(m) => json!({ "error": { "kind": "usage", "message": m } }),
            Failure::Domain(e) => json::error(e),
        }
    }
}

/// A successful run. `checks_failed` is set when `verify` found a tolerance
/// violation.
pub struct Success {
    pub value: Value,
    pub checks_failed: bool,
}

fn spec_of(g: &GroupArgs) -> Result<GroupSpec, Failure> {
    if g.group == Family::F4 {
        return Ok(GroupSpec::f4());
    }
    let n = g.n.ok_or_else(|| Failure::Usage(format!("--n is required for {}", g.group.name())))?;
    Ok(GroupSpec::new(g.group, n)?)
}

fn tau_of(s: &GroupSpec, tau: Option<&str>) -> Result<KType, Failure> {
    match tau {
        None => Ok(KType::trivial(s)),
        Some(t) => parse_tuple(t)
            .map(KType::new)
            .ok_or_else(|| Failure::Usage(format!("cannot parse --tau '{t}' as comma separated rationals"))),
    }
}

fn grid_of(s: &GroupSpec, t_grid: Option<&str>) -> Result<Vec<f64>, Failure> {
    match t_grid {
        Some(g) => g
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::Usage(format!("cannot parse --t-grid '{g}'"))),
        None => {
            let t_max = if matches!(s.family(), Family::Sp | Family::F4) { 2000.0 } else { 1000.0 };
            Ok(geometric_grid(t_max, 4.0, 12))
        }
    }
}

pub fn run(cmd: &Command) -> Result<Success, Failure> {
    let ok = |value| Ok(Success { value, checks_failed: false });
    match cmd {
        Command::Constants { group, .. } => {
            let s = spec_of(group)?;
            ok(json::constants(&s, &group_constants(&s)))
        }
        Command::Branch { group, tau, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, Some(tau))?;
            let entries = mhat(&s, &t)?;
            let rows = entries
                .iter()
                .map(|e| Ok(json::mhat_entry(e, weyl_dim(&s, Algebra::M, &m_weight(&s, &e.sigma))?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let d_tau = weyl_dim(&s, Algebra::K, &resonance_core::branching::k_weight(&s, &t))?;
            ok(json!({ "group": json::group(&s), "tau": json::ktype(&t), "d_tau": json::u128_value(d_tau), "mhat": rows }))
        }
        Command::Density { group, tau, k_max, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, tau.as_deref())?;
            if *k_max < 0 {
                return Err(Failure::Usage("--k-max must be nonnegative".into()));
            }
            let rows: Vec<Value> = mhat(&s, &t)?
                .iter()
                .map(|e| {
                    let d = density(&s, &e.sigma);
                    json!({
                        "sigma": json::mtype(&e.sigma),
                        "density": json::density(&d),
                        "poles": genuine_poles(&d, *k_max).iter().map(json::pole).collect::<Vec<_>>(),
                    })
                })
                .collect();
            ok(json!({ "group": json::group(&s), "tau": json::ktype(&t), "densities": rows }))
        }
        Command::Resonances { group, tau, k_max, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, tau.as_deref())?;
            if *k_max < 0 {
                return Err(Failure::Usage("--k-max must be nonnegative".into()));
            }
            let sigmas = mhat(&s, &t)?;
            let extra = sigmas.iter().map(|e| first_offset(&density(&s, &e.sigma))).max().unwrap_or(0);
            let mut a = atlas(&s, &t, *k_max + extra)?;
            for f in &mut a.families {
                f.resonances.retain(|r| r.k_section5 <= *k_max);
            }
            ok(json::atlas(&a))
        }
        Command::Classify { group, tau, k, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, Some(tau))?;
            let info = classify(&s, &t, *k)?;
            let langlands = match info.delta {
                Delta::MType { .. } => Some(verify_langlands(&s, &info, *k)),
                Delta::DiscreteSeries { .. } => None,
            };
            ok(json::classification(&info, &t, langlands))
        }
        Command::Gk { group, tau, k, t_grid, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, Some(tau))?;
            let info = classify(&s, &t, *k)?;
            let grid = grid_of(&s, t_grid.as_deref())?;
            let estimate = gk_exponent_estimate(&s, info.case, *k, &grid)?;
            let counts = gk_counts(&s, info.case, *k, &grid)?;
            ok(json!({
                "group": json::group(&s),
                "tau": json::ktype(&t),
                "k": *k as i64,
                "case": info.case.name(),
                "t_grid": grid.iter().map(|x| json::float(*x)).collect::<Vec<_>>(),
                "counts": counts.iter().map(json::big_uint).collect::<Vec<_>>(),
                "estimate": json::float(estimate),
                "gk_dim": info.gk_dim,
            }))
        }
        Command::Orbits { group, .. } => {
            let s = spec_of(group)?;
            let orbits: Vec<Value> = nilpotent_orbits(&s)?.iter().map(json::orbit).collect();
            ok(json!({ "group": json::group(&s), "orbits": orbits }))
        }
        Command::Verify { group, tau, k_max, tol, contour_tol, samples, .. } => {
            let s = spec_of(group)?;
            let t = tau_of(&s, tau.as_deref())?;
            if *k_max < 0 {
                return Err(Failure::Usage("--k-max must be nonnegative".into()));
            }
            let sigmas: Vec<MType> = mhat(&s, &t)?.into_iter().map(|e| e.sigma).collect();
            let per_sigma = sigmas
                .par_iter()
                .map(|sigma| verify_sigma(&density(&s, sigma), *k_max, *tol, *contour_tol, *samples))
                .collect::<Result<Vec<_>, Error>>()?;
            let failures: usize = per_sigma.iter().map(|r| r.1).sum();
            let checks: usize = per_sigma.iter().map(|r| r.2).sum();
            Ok(Success {
                value:                 json!({
                    "group": json::group(&s),
                    "tau": json::ktype(&t),
                    "families": per_sigma.into_iter().map(|r| r.0).collect::<Vec<_>>(),
                    "checks": checks,
                    "failures": failures,
                    "passed": failures == 0,
                }),
                checks_failed: failures > 0,
            })
        }
    }
}

/// Distance in lattice steps from `B_max` to the first pole.
fn first_offset(d: &PlancherelDensity) -> i128 {
    d.first_pole().map_or(0, |f| (f - d.b_max).to_integer().max(0))
}

/// Poles whose index counted from the first pole is at most `k_max`.
fn genuine_poles(d: &PlancherelDensity, k_max: i128) -> Vec<PoleRecord> {
    let mut out = poles(d, k_max + first_offset(d));
    out.retain(|p| p.k_section5 <= k_max);
    out
}

/// Residues of every listed pole, then the contour shift past 0 to 3 poles.
fn verify_sigma(
    d: &PlancherelDensity,
    k_max: i128,
    tol: f64,
    contour_tol: f64,
    samples: usize,
) -> Result<(Value, usize, usize), Error> {
    let mut failures = 0;
    let mut checks = 0;
    let mut residues = vec![];
    for rec in genuine_poles(d, k_max) {
        let r = residue_quadrature(d, &rec, 0.25, samples)?;
        let pass = r.error() <= tol;
        failures += usize::from(!pass);
        checks += 1;
        residues.push(json::report(&r, tol, pass));
    }
    let mut contours = vec![];
    if let Some(first) = d.first_pole() {
        let zeta = Complex64::new(0.3, 1.0);
        for crossed in 0..=3i128 {
            let shift = if crossed == 0 { q(1, 4) } else { first + qi(crossed - 1) + q(1, 4) };
            match contour_shift_check(d, zeta, &shift, default_truncation(&shift), contour_tol * 1e-2) {
                Ok(r) => {
                    let pass = r.error() <= contour_tol;
                    failures += usize::from(!pass);
                    checks += 1;
                    contours.push(json::report(&r, contour_tol, pass));
                }
                // A density with a pole on the real axis has no contour identity to check.
                Err(Error::Configuration(m)) => contours.push(json!({ "skipped": m })),
                Err(e) => return Err(e),
            }
        }
    }
    let value = json!({
        "sigma": json::mtype(&d.sigma),
        "density": json::density(d),
        "residues": residues,
        "contour_shifts": contours,
    });
    Ok((value, failures, checks))
}
