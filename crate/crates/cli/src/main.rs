mod report;
mod suites;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde::Serialize;

use qhopf::{cap_from_env, Rat};
use report::{emit, render, Format};
use suites::{CheckResult, Suite};
use tables::{parse_half, ClassicalCheck, SpectrumKind};

/// Exact symbolic checks for the quantum Hopf bundle SU_q(2) → S²_q.
#[derive(Parser)]
#[command(name = "qhopf", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples per sampled check.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Include wall-clock time in the report (makes it nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Laplacian eigenvalues up to `jmax`.
    Spectrum {
        #[arg(long, value_enum, default_value = "total")]
        kind: SpectrumKind,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        /// Half-integer such as 3/2.
        #[arg(long, value_parser = parse_half, default_value = "2")]
        jmax: i64,
        /// Also evaluate at s = q^{1/2} = s0.
        #[arg(long = "q", value_name = "S0")]
        s0: Option<Rat>,
        #[arg(long, default_value = "1")]
        alpha: Rat,
    },
    /// Ket, projector and projector checks for winding `n`.
    Projector {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Gauged spectrum together with the master relation on the eigenbasis.
    Gauged {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_parser = parse_half)]
        jmax: i64,
        #[arg(long = "q", value_name = "S0")]
        s0: Option<Rat>,
        #[arg(long, default_value = "1")]
        alpha: Rat,
    },
    /// Peter-Weyl box of degree `p` and the Casimir on it.
    PeterWeyl {
        #[arg(long)]
        p: i64,
    },
    /// Compare with the classical Hopf bundle at q = 1.
    Classical {
        #[arg(long, value_enum)]
        check: ClassicalCheck,
        #[arg(long, default_value = "1")]
        alpha: Rat,
    },
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    seed: u64,
    samples: usize,
    cap: i64,
    passed: usize,
    failed: usize,
    checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn verify(suite: Suite, seed: u64, samples: usize, timing: bool, cap: i64) -> SuiteReport {
    let start = Instant::now();
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let mut checks: Vec<CheckResult> = suite.checks().iter().map(|c| suites::run(c, seed, samples)).collect();
    std::panic::set_hook(hook);
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|c| c.pass).count();
    let elapsed = start.elapsed().as_millis();
    eprintln!("{}: {} passed, {} failed in {} ms", suite.name(), passed, checks.len() - passed, elapsed);
    SuiteReport {
        suite: suite.name(),
        seed,
        samples,
        cap,
        passed,
        failed: checks.len() - passed,
        checks,
        elapsed_ms: timing.then_some(elapsed),
    }
}

/// Renders the report and returns whether every verdict passed.
fn run(cli: Cli, cap: i64) -> Result<bool> {
    let (text, pass) = match cli.cmd {
        Cmd::Verify { suite, seed, samples, timing } => {
            let r = verify(suite, seed, samples, timing, cap);
            (render(cli.format, &r, &r.checks)?, r.failed == 0)
        }
        Cmd::Spectrum { kind, n, jmax, s0, alpha } => {
            let t = tables::spectrum(kind, n, jmax, &alpha, s0.as_ref())?;
            (render(cli.format, &t, &t.rows)?, true)
        }
        Cmd::Projector { n } => {
            let r = tables::projector(n)?;
            (render(cli.format, &r, &r.csv_rows())?, r.pass)
        }
        Cmd::Gauged { n, jmax, s0, alpha } => {
            let r = tables::gauged(n, jmax, &alpha, s0.as_ref())?;
            (render(cli.format, &r, &r.csv_rows())?, r.pass())
        }
        Cmd::PeterWeyl { p } => {
            let r = tables::peter_weyl(p)?;
            (render(cli.format, &r, &r.entries)?, r.pass)
        }
        Cmd::Classical { check, alpha } => {
            let r = tables::classical(check, &alpha)?;
            (render(cli.format, &r, &r.items)?, r.pass)
        }
    };
    emit(cli.out.as_deref(), &text)?;
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let cap = match cap_from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    match run(cli, cap) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
