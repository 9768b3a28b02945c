use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lvse::scenario::{
    parse_formats, run_batch, run_scenario, run_verify, BatchFile, ReportBody, ReportBundle,
    ScenarioConfig, ScenarioOverrides, SolverChoice, SuiteKind, SystemKind, VerifyConfig,
};
use lvse::{Error, Result, Scheme};

/// Spectra and wavefunctions of the background-field-modified 1-D
/// Schroedinger equation, with built-in verification suites.
#[derive(Parser)]
#[command(name = "lvse", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Particle in an infinite well on [0, L]
    Box(ScenarioArgs),
    /// Harmonic oscillator
    Harmonic(ScenarioArgs),
    /// Free plane wave (analytic only)
    Free(ScenarioArgs),
    /// Run verification suites and report pass/fail per check
    Verify(VerifyArgs),
    /// Run a batch of named scenarios from a JSON config
    Batch(BatchArgs),
}

#[derive(Args)]
struct ScenarioArgs {
    /// Background field strength
    #[arg(long)]
    alpha: Option<f64>,
    /// Particle mass
    #[arg(long)]
    m: Option<f64>,
    /// Oscillator angular frequency
    #[arg(long)]
    omega: Option<f64>,
    /// Well width
    #[arg(long = "L")]
    width: Option<f64>,
    /// Plane-wave wavenumber (free system)
    #[arg(long)]
    k: Option<f64>,
    /// Grid points
    #[arg(long = "n-points")]
    n_points: Option<usize>,
    /// Number of states
    #[arg(long = "n-states")]
    n_states: Option<usize>,
    /// Discretization scheme: naive | gauge-exact
    #[arg(long)]
    scheme: Option<Scheme>,
    /// Solver: tridiag | rq-descent | analytic
    #[arg(long)]
    solver: Option<SolverChoice>,
    /// Comma-separated output formats from csv,json,svg
    #[arg(long)]
    formats: Option<String>,
    /// Output directory (default: $LVSE_OUT or ./out)
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for deterministic solver start vectors
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable or comma-separated); default: all
    #[arg(long = "suite", value_delimiter = ',')]
    suites: Vec<SuiteKind>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long = "L")]
    width: Option<f64>,
    /// Restrict scheme-specific checks: naive | gauge-exact
    #[arg(long)]
    scheme: Option<Scheme>,
    /// Restrict the convergence suite to one system
    #[arg(long)]
    system: Option<SystemKind>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BatchArgs {
    /// Batch JSON file: {"scenarios": [{"name": ..., "system": ..., ...}]}
    #[arg(long)]
    config: PathBuf,
    /// Output root; each scenario writes to <out>/<name>/
    #[arg(long)]
    out: Option<PathBuf>,
}

fn default_out() -> PathBuf {
    std::env::var_os("LVSE_OUT")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("out"))
}

fn scenario_config(system: SystemKind, args: &ScenarioArgs) -> Result<ScenarioConfig> {
    let mut config = ScenarioConfig::defaults(system);
    config.output_dir = default_out();
    if let Some(path) = &args.config {
        let file = ScenarioOverrides::from_json_file(path)?;
        if let Some(file_system) = file.system {
            if file_system != system {
                return Err(Error::Config(format!(
                    "config file names system {file_system}, but the {system} subcommand was invoked"
                )));
            }
        }
        config.apply(&file);
    }
    let flags = ScenarioOverrides {
        system: None,
        name: None,
        m: args.m,
        alpha: args.alpha,
        omega: args.omega,
        width: args.width,
        k: args.k,
        n_points: args.n_points,
        n_states: args.n_states,
        scheme: args.scheme,
        solver: args.solver,
        x_min: None,
        x_max: None,
        formats: args.formats.as_deref().map(parse_formats).transpose()?,
        out: args.out.clone(),
        seed: args.seed,
        a: None,
        b: None,
    };
    config.apply(&flags);
    Ok(config)
}

fn print_scenario(bundle: &ReportBundle) {
    if let ReportBody::Scenario(report) = &bundle.report {
        println!(
            "{} ({} scheme, {} solver)",
            report.system, report.scheme, report.solver
        );
        for (i, e) in report.energies.iter().enumerate() {
            match report.analytic_energies.as_ref().and_then(|a| a.get(i)) {
                Some(exact) => println!("  E[{i}] = {e:.12}  (closed form {exact:.12})"),
                None => println!("  E[{i}] = {e:.12}"),
            }
        }
        for check in &report.checks {
            println!(
                "  check {}: {:.3e} ({}) {}",
                check.name,
                check.value,
                check.criterion,
                if check.pass { "pass" } else { "FAIL" }
            );
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
    }
    for f in &bundle.files {
        println!("  wrote {}", f.display());
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Box(args) => {
            let config = scenario_config(SystemKind::Box, &args)?;
            let bundle = run_scenario(&config)?;
            print_scenario(&bundle);
            Ok(ExitCode::SUCCESS)
        }
        Command::Harmonic(args) => {
            let config = scenario_config(SystemKind::Harmonic, &args)?;
            let bundle = run_scenario(&config)?;
            print_scenario(&bundle);
            Ok(ExitCode::SUCCESS)
        }
        Command::Free(args) => {
            let config = scenario_config(SystemKind::Free, &args)?;
            let bundle = run_scenario(&config)?;
            print_scenario(&bundle);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let mut cfg = VerifyConfig {
                write_report: true,
                output_dir: args.out.unwrap_or_else(default_out),
                ..Default::default()
            };
            if !args.suites.is_empty() {
                cfg.suites = args.suites;
            }
            if let Some(v) = args.alpha {
                cfg.alpha = v;
            }
            if let Some(v) = args.m {
                cfg.m = v;
            }
            if let Some(v) = args.omega {
                cfg.omega = v;
            }
            if let Some(v) = args.width {
                cfg.width = v;
            }
            cfg.scheme = args.scheme;
            cfg.system = args.system;
            if let Some(v) = args.seed {
                cfg.seed = v;
            }
            let bundle = run_verify(&cfg)?;
            let mut all_pass = true;
            if let ReportBody::Verify(report) = &bundle.report {
                for suite in &report.suites {
                    println!(
                        "suite {}: {}",
                        suite.suite,
                        if suite.pass { "pass" } else { "FAIL" }
                    );
                    for check in &suite.checks {
                        println!(
                            "  {}: {:.3e} ({}) {}",
                            check.name,
                            check.value,
                            check.criterion,
                            if check.pass { "pass" } else { "FAIL" }
                        );
                    }
                }
                all_pass = report.pass;
            }
            for f in &bundle.files {
                println!("wrote {}", f.display());
            }
            if all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Batch(args) => {
            let text = std::fs::read_to_string(&args.config)?;
            let batch: BatchFile = serde_json::from_str(&text).map_err(|e| {
                Error::Config(format!("cannot parse batch {}: {e}", args.config.display()))
            })?;
            let out = args.out.unwrap_or_else(default_out);
            let bundle = run_batch(&batch, &out)?;
            if let ReportBody::Batch(report) = &bundle.report {
                for s in &report.scenarios {
                    println!(
                        "scenario {}: {} states, {} checks pass",
                        s.name.as_deref().unwrap_or("?"),
                        s.energies.len(),
                        s.checks.iter().filter(|c| c.pass).count()
                    );
                }
            }
            println!("wrote {}", out.join("batch_report.json").display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
