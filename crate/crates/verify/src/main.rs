use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use iso3_verify::config::{parse_tol, parse_two_j};
use iso3_verify::report::{render_checks, render_scan};
use iso3_verify::{run_scan, run_verify, ConfigError, Format, RunConfig, RunError, Scan, Suite};

#[derive(Parser)]
#[command(name = "iso3-verify", version, about = "Run the iso3-quant verification suites and convergence scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an invariant suite: bialgebra, fock-rosly, moduli, hopf, qybe or representations.
    Verify {
        suite: Suite,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run a convergence scan: r-limit or bch.
    Scan {
        scan: Scan,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest spin of the harmonic checks, e.g. 6, 5/2 or 2.5.
    #[arg(long, default_value = "6")]
    jmax: String,
    #[arg(long, default_value_t = 12)]
    band_limit: usize,
    #[arg(long, default_value_t = 0.1)]
    kappa_start: f64,
    #[arg(long, default_value_t = 7)]
    halvings: u32,
    /// Override a check tolerance, `<check>=<value>`; repeatable.
    #[arg(long = "tol", value_name = "CHECK=VALUE")]
    tols: Vec<String>,
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill the `ms` column with wall times.
    #[arg(long)]
    timing: bool,
}

impl Opts {
    fn config(&self) -> Result<RunConfig, ConfigError> {
        let mut tol_overrides = BTreeMap::new();
        for t in &self.tols {
            let (name, value) = parse_tol(t)?;
            tol_overrides.insert(name, value);
        }
        let cfg = RunConfig {
            seed: self.seed,
            tol_overrides,
            two_j_max: parse_two_j(&self.jmax)?,
            band_limit: self.band_limit,
            kappa_start: self.kappa_start,
            halvings: self.halvings,
            format: self.format,
            out: self.out.clone(),
            timing: self.timing,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn emit(text: &str, cfg: &RunConfig) -> Result<(), String> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, (u8, String)> {
    let (opts, action): (&Opts, Box<dyn Fn(&RunConfig) -> Result<(String, bool), RunError>>) = match &cli.command {
        Command::Verify { suite, opts } => {
            let suite = *suite;
            (
                opts,
                Box::new(move |cfg| {
                    let reports = run_verify(suite, cfg)?;
                    let ok = reports.iter().all(|r| r.passed());
                    Ok((render_checks(&reports, cfg.format), ok))
                }),
            )
        }
        Command::Scan { scan, opts } => {
            let scan = *scan;
            (
                opts,
                Box::new(move |cfg| {
                    let table = run_scan(scan, cfg)?;
                    Ok((render_scan(&table, cfg.format), table.passed()))
                }),
            )
        }
    };
    let cfg = opts.config().map_err(|e| (2, e.to_string()))?;
    let (text, ok) = action(&cfg).map_err(|e| match e {
        RunError::Config(e) => (2, e.to_string()),
        RunError::Numeric(e) => (1, e.to_string()),
    })?;
    emit(&text, &cfg).map_err(|e| (2, e))?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
