// Copyright 2026 The purity-semigroup Authors
// SPDX-License-Identifier: Apache-2.0

//! The `purity` command line tool.
//!
//! Exit codes: 0 certified purity-decreasing (or monotone trajectory),
//! 1 input or usage error, 2 indefinite defect (witness found),
//! 3 monotonicity violation in a simulated trajectory.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::evolution::{
    check_monotonicity, evolve_expm, evolve_rk_on, uniform_grid, RkOptions, Trajectory, Verdict,
    LEAKAGE_THRESHOLD,
};
use crate::generator::{classify_guarded, classify_model, Classification, MonotonicityReport, MAX_LIOUVILLIAN_DIM};
use crate::io::{operator_to_document, parse_state, LoadedModel, ModelDocument};
use crate::operator::DensityMatrix;
use crate::probe::{find_guarded, find_purity_increasing_state_with, ProbeOptions, ProbeResult};
use crate::random::random_density_matrix;
use crate::zoo::{build_model, Family, ZooSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INDEFINITE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "purity", version, about = "Purity monotonicity of Lindblad semigroups")]
struct Cli {
    /// Classification and monotonicity tolerance.
    #[arg(long, global = true, default_value_t = crate::generator::DEFAULT_TOL)]
    tol: f64,
    /// Seed for random zoo families.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output file (standard output when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a model by the spectrum of L(I).
    Check { model: PathBuf },
    /// Integrate a model and export the purity trajectory as CSV.
    Simulate {
        model: PathBuf,
        /// `mixed`, `ginibre:<seed>` or a path to a JSON state matrix.
        #[arg(long, default_value = "mixed")]
        rho0: String,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        /// Number of samples, including t = 0.
        #[arg(long, default_value_t = crate::evolution::DEFAULT_SAMPLES)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Integrator::Auto)]
        integrator: Integrator,
    },
    /// Search for a purity-increasing state near I/d.
    Probe { model: PathBuf },
    /// List or emit canonical models.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Integrator {
    Auto,
    Expm,
    Rk,
}

#[derive(Debug, Subcommand)]
enum ZooAction {
    List,
    Emit {
        name: String,
        #[arg(long)]
        gamma: Option<f64>,
        /// Comma-separated rates (pauli_channel takes three).
        #[arg(long, value_delimiter = ',')]
        rates: Option<Vec<f64>>,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        ops: Option<usize>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Error::InvalidArgument(format!("--tol must be positive, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Check { model } => cmd_check(&load_model(model)?, cli, stdout),
        Command::Probe { model } => cmd_probe(&load_model(model)?, cli, stdout),
        Command::Simulate { model, rho0, t_max, steps, integrator } => {
            let loaded = load_model(model)?;
            cmd_simulate(&loaded, rho0, *t_max, *steps, *integrator, cli, stdout, stderr)
        }
        Command::Zoo { action } => cmd_zoo(action, cli, stdout),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<LoadedModel> {
    ModelDocument::parse(&read_file(path)?)?.to_model()
}

fn emit(cli: &Cli, stdout: &mut dyn Write, text: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    match &cli.out {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(io),
        None => writeln!(stdout, "{text}").map_err(io),
    }
}

fn classify(loaded: &LoadedModel, tol: f64) -> Result<MonotonicityReport> {
    let budget = ProbeOptions::default().max_halvings;
    match loaded.meta.guard_level {
        Some(g) => classify_guarded(&loaded.model, g, tol, budget),
        None => classify_model(&loaded.model, tol, budget),
    }
}

fn classification_exit(c: Classification) -> i32 {
    if c.is_purity_decreasing() {
        EXIT_OK
    } else {
        EXIT_INDEFINITE
    }
}

fn cmd_check(loaded: &LoadedModel, cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let report = classify(loaded, cli.tol)?;
    let mut out = json!({
        "classification": report.classification,
        "defect_spectrum": [report.defect.min_eig, report.defect.max_eig],
    });
    if let Some(g) = &report.guard {
        out["guard_note"] = json!(g.describe());
    }
    if let Some(w) = &report.witness {
        out["witness"] = json!({
            "state": operator_to_document(w.state.as_operator()),
            "epsilon": w.epsilon,
            "rate": w.exact_rate,
        });
    }
    if let Some(d) = &report.diagnostic {
        out["diagnostic"] = json!(d);
    }
    emit(cli, stdout, &serde_json::to_string(&out).expect("json"))?;
    Ok(classification_exit(report.classification))
}

fn probe_json(w: &ProbeResult) -> Value {
    json!({
        "perturbation": operator_to_document(&w.perturbation),
        "epsilon": w.epsilon,
        "sign": w.sign.value() as i32,
        "state": operator_to_document(w.state.as_operator()),
        "first_order_rate": w.first_order_rate,
        "exact_rate": w.exact_rate,
    })
}

fn cmd_probe(loaded: &LoadedModel, cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let opts = ProbeOptions::default();
    let witness = match loaded.meta.guard_level {
        Some(g) => find_guarded(&loaded.model, g, cli.tol, &opts)?,
        None => find_purity_increasing_state_with(&loaded.model, cli.tol, &opts)?,
    };
    let out = json!({ "witness": witness.as_ref().map(probe_json) });
    emit(cli, stdout, &serde_json::to_string(&out).expect("json"))?;
    Ok(if witness.is_some() { EXIT_INDEFINITE } else { EXIT_OK })
}

fn initial_state(spec: &str, dim: usize) -> Result<DensityMatrix> {
    let rho = if spec == "mixed" {
        DensityMatrix::maximally_mixed(dim)
    } else if let Some(seed) = spec.strip_prefix("ginibre:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("invalid ginibre seed {seed:?}")))?;
        random_density_matrix(dim, seed)?
    } else {
        parse_state(&read_file(Path::new(spec))?)?
    };
    if rho.dim() != dim {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: dim });
    }
    Ok(rho)
}

fn cmd_simulate(
    loaded: &LoadedModel,
    rho0: &str,
    t_max: f64,
    steps: usize,
    integrator: Integrator,
    cli: &Cli,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::InvalidArgument(format!("--t-max must be positive, got {t_max}")));
    }
    if steps < 2 {
        return Err(Error::InvalidArgument("--steps must be at least 2".into()));
    }
    let m = &loaded.model;
    let rho = initial_state(rho0, m.dim())?;
    let times = uniform_grid(t_max, steps);
    let use_expm = match integrator {
        Integrator::Auto => m.dim() <= MAX_LIOUVILLIAN_DIM,
        Integrator::Expm => true,
        Integrator::Rk => false,
    };
    let mut traj: Trajectory = if use_expm {
        evolve_expm(m, &rho, &times)?
    } else {
        evolve_rk_on(m, &rho, &times, &RkOptions::new(1e-8, 1e-10))?
    };
    if loaded.meta.guard_level.is_some() {
        traj = traj.with_top_level_population();
    }

    let mut csv = Vec::new();
    traj.write_csv(&mut csv)?;
    // The verdict goes to stdout unless stdout carries the CSV itself.
    let summary: &mut dyn Write = match &cli.out {
        Some(p) => {
            std::fs::write(p, &csv)
                .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display())))?;
            stdout
        }
        None => {
            stdout
                .write_all(&csv)
                .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
            stderr
        }
    };

    let judged = traj.below_leakage(LEAKAGE_THRESHOLD);
    let verdict = check_monotonicity(&judged, cli.tol);
    let scope = if judged.len() < traj.len() {
        format!(" (judged on t <= {} where top-level population < {LEAKAGE_THRESHOLD:e})", judged.times.last().copied().unwrap_or(0.0))
    } else {
        String::new()
    };
    let line = match verdict {
        Verdict::MonotoneNonincreasing => format!("MONOTONE_NONINCREASING{scope}"),
        Verdict::Violation { index, jump, rate } => format!(
            "VIOLATION at t = {} (sample {index}, purity jump {jump:e}, rate {rate:e}){scope}",
            judged.times[index]
        ),
    };
    let _ = writeln!(summary, "{line}");
    Ok(if verdict.is_monotone() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_zoo(action: &ZooAction, cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    match action {
        ZooAction::List => {
            let text = Family::sorted_names().join("\n");
            emit(cli, stdout, &text)?;
        }
        ZooAction::Emit { name, gamma, rates, cutoff, dim, ops } => {
            let family = Family::from_name(name).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown family {name:?}; valid names: {}",
                    Family::sorted_names().join(", ")
                ))
            })?;
            let mut spec = ZooSpec::new(family);
            if let Some(g) = gamma {
                spec = spec.with_rate(*g);
            }
            if let Some(r) = rates {
                spec = spec.with_rates(r.clone());
            }
            if let Some(n) = cutoff {
                spec = spec.with_cutoff(*n);
            }
            if let Some(d) = dim {
                spec = spec.with_dim(*d);
            }
            if let Some(n) = ops {
                spec = spec.with_ops(*n);
            }
            if let Some(s) = cli.seed {
                spec = spec.with_seed(s);
            }
            let z = build_model(&spec)?;
            emit(cli, stdout, &ModelDocument::from_zoo(&z).to_json())?;
        }
    }
    Ok(EXIT_OK)
}
