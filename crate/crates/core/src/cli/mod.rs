//! Command-line harness: TOML configuration, seeded suite execution, JSON
//! reports and CSV time series.
//!
//! Exit codes: 0 all checks pass, 1 numerical failure, 2 usage or config
//! error.

pub mod config;
pub mod output;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::{FamilyMode, RunConfig, Suite};
pub use suites::{run_suite, RunReport, SuiteOutcome, TimeSeries};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "amwave", version, about = "Verify operator-valued Yang-Mills plane waves and Dirac Zitterbewegung")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one verification suite.
    Verify {
        /// wca, zca, exact, full, boost, gauge, zitter, poynting or su3.
        suite: Suite,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Zitterbewegung time series against closed forms.
    Zitter(RunOpts),
    /// Poynting flux closed form against quadrature.
    Poynting(RunOpts),
    /// Boosted-frame tensor equations.
    Boost(RunOpts),
    /// Trace-formula SU(3) structure constants.
    Su3Constants {
        #[arg(long = "tol")]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct RunOpts {
    /// TOML run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long = "tol")]
    pub tol: Option<f64>,
    /// Report path (JSON); time series go next to it with a .csv extension.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Boost velocity in units of c.
    #[arg(long, allow_negative_numbers = true)]
    pub velocity: Option<f64>,
    /// Mixing angle (zitter) or gauge angle (gauge).
    #[arg(long)]
    pub theta: Option<f64>,
    /// px,py,pz in natural units.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub momentum: Option<[f64; 3]>,
    #[arg(long)]
    pub steps: Option<usize>,
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    <[f64; 3]>::try_from(parts).map_err(|v| format!("expected px,py,pz, got {} values", v.len()))
}

impl RunOpts {
    /// Load the config file (if any) and apply flag overrides.
    pub fn resolve(&self, suite: Suite) -> Result<RunConfig, String> {
        let mut cfg = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
                RunConfig::from_toml_str(&text).map_err(|e| format!("{}: {e}", p.display()))?
            }
            None => RunConfig::default(),
        };
        cfg.suite = suite;
        if let Some(n) = self.trials {
            cfg.trials = n;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(t) = self.tol {
            cfg.tolerance = Some(t);
        }
        if let Some(v) = self.velocity {
            cfg.boost.velocities = vec![v];
        }
        if let Some(t) = self.theta {
            match suite {
                Suite::Gauge => cfg.gauge.theta = t,
                _ => cfg.zitter.theta = t,
            }
        }
        if let Some(p) = &self.momentum {
            cfg.zitter.momentum = *p;
        }
        if let Some(s) = self.steps {
            cfg.zitter.steps = s;
        }
        if let Some(o) = &self.out {
            cfg.output.report = Some(o.clone());
            if matches!(suite, Suite::Zitter | Suite::Poynting) && cfg.output.timeseries.is_none() {
                cfg.output.timeseries = Some(o.with_extension("csv"));
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn execute(cfg: &RunConfig) -> Result<bool, String> {
    let outcome = run_suite(cfg)?;
    let rep = &outcome.report;
    if let (Some(path), Some(ts)) = (&cfg.output.timeseries, &outcome.series) {
        output::write_timeseries(path, ts)?;
    }
    match &cfg.output.report {
        Some(path) => output::write_report(path, rep)?,
        None => print!("{}", output::report_json(rep)),
    }
    let s = &rep.summary;
    if s.overall_pass {
        eprintln!("{}: {} entries, all pass", rep.suite, s.entries);
    } else {
        eprintln!("{}: {} of {} entries fail", rep.suite, s.failing.len(), s.entries);
        for f in s.failing.iter().take(25) {
            eprintln!("  FAIL {f}");
        }
        if s.failing.len() > 25 {
            eprintln!("  ... {} more", s.failing.len() - 25);
        }
    }
    Ok(s.overall_pass)
}

fn su3_verb(tol: Option<f64>, out: Option<PathBuf>) -> Result<bool, String> {
    let tol = tol.unwrap_or(1e-12);
    if !(tol > 0.0) {
        return Err(format!("--tol: must be positive, got {tol}"));
    }
    let (rep, entries) = suites::su3_constants(tol)?;
    #[derive(serde::Serialize)]
    struct Out<'a> {
        tolerance: f64,
        nonzero_f: &'a [suites::StructureConstantEntry],
        check: &'a crate::residuals::ResidualReport,
    }
    let mut json = serde_json::to_string_pretty(&Out { tolerance: tol, nonzero_f: &entries, check: &rep }).expect("serializes");
    json.push('\n');
    match out {
        Some(p) => output::write_atomic(&p, json.as_bytes())?,
        None => print!("{json}"),
    }
    Ok(rep.overall_pass)
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { suite, opts } => opts.resolve(suite).and_then(|c| execute(&c)),
        Command::Zitter(opts) => opts.resolve(Suite::Zitter).and_then(|c| execute(&c)),
        Command::Poynting(opts) => opts.resolve(Suite::Poynting).and_then(|c| execute(&c)),
        Command::Boost(opts) => opts.resolve(Suite::Boost).and_then(|c| execute(&c)),
        Command::Su3Constants { tol, out } => su3_verb(tol, out),
    };
    match result {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}
