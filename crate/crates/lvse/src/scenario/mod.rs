//! Scenario driver: resolve a configuration (defaults, config file, flag
//! overrides), run the analytic or numeric pipeline, and emit CSV/JSON/SVG
//! into the output directory. Identical configurations produce
//! byte-identical outputs.

mod verify;

pub use verify::{
    commutator_suite, convergence_suite, cross_solver_suite, gauge_suite, parity_suite,
    run_suite, run_verify, uncertainty_suite, SuiteKind, SuiteReport, VerifyConfig, VerifyReport,
};

use std::path::{Path, PathBuf};

use nalgebra::DVector;
use num_complex::Complex64;

use crate::analytic;
use crate::domain::{make_grid, Energy, Grid, ModelParams, WaveFunction};
use crate::eigensolve::{
    eigen_lowest, rq_descent, Lcg, SolveOptions, SolverKind, Spectrum, DEFAULT_SEED,
};
use crate::error::{Error, Result};
use crate::operators::{hamiltonian, Scheme};
use crate::output::json::{write_report, CheckResult};
use crate::output::svg::{PlotMeta, SvgPart};
use crate::output::{emit_csv, emit_svg};

/// Physical system selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SystemKind {
    #[serde(rename = "box")]
    Box,
    #[serde(rename = "harmonic")]
    Harmonic,
    #[serde(rename = "free")]
    Free,
}

impl std::fmt::Display for SystemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SystemKind::Box => write!(f, "box"),
            SystemKind::Harmonic => write!(f, "harmonic"),
            SystemKind::Free => write!(f, "free"),
        }
    }
}

impl std::str::FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "box" => Ok(SystemKind::Box),
            "harmonic" => Ok(SystemKind::Harmonic),
            "free" => Ok(SystemKind::Free),
            other => Err(Error::Config(format!(
                "unknown system {other:?}; expected box, harmonic or free"
            ))),
        }
    }
}

/// Solver pipeline selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SolverChoice {
    #[serde(rename = "tridiag")]
    Tridiag,
    #[serde(rename = "rq-descent")]
    RqDescent,
    #[serde(rename = "analytic")]
    Analytic,
}

impl std::str::FromStr for SolverChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tridiag" => Ok(SolverChoice::Tridiag),
            "rq-descent" => Ok(SolverChoice::RqDescent),
            "analytic" => Ok(SolverChoice::Analytic),
            other => Err(Error::Config(format!(
                "unknown solver {other:?}; expected tridiag, rq-descent or analytic"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OutputFormat {
    #[serde(rename = "csv")]
    Csv,
    #[serde(rename = "json")]
    Json,
    #[serde(rename = "svg")]
    Svg,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::Config(format!(
                "unknown format {other:?}; expected csv, json or svg"
            ))),
        }
    }
}

/// Parse a comma-separated format list like `csv,svg`.
pub fn parse_formats(s: &str) -> Result<Vec<OutputFormat>> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse())
        .collect()
}

/// Optional fields from a JSON config file or command-line flags; unset
/// fields keep the scenario defaults. Flags override file values.
#[derive(Debug, Clone, Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioOverrides {
    pub system: Option<SystemKind>,
    pub name: Option<String>,
    pub m: Option<f64>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
    #[serde(rename = "L")]
    pub width: Option<f64>,
    pub k: Option<f64>,
    pub n_points: Option<usize>,
    pub n_states: Option<usize>,
    pub scheme: Option<Scheme>,
    pub solver: Option<SolverChoice>,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub formats: Option<Vec<OutputFormat>>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
    /// Plane-wave coefficient A as [re, im] (free system).
    pub a: Option<[f64; 2]>,
    /// Plane-wave coefficient B as [re, im] (free system).
    pub b: Option<[f64; 2]>,
}

impl ScenarioOverrides {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("cannot parse config {}: {e}", path.display())))
    }
}

/// Fully resolved scenario. Defaults encode the reference figures: the well
/// with alpha = 1/10 and L = 10 (four states), the oscillator with
/// alpha = 1/10 and m = omega = 1 (three states).
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub system: SystemKind,
    pub name: Option<String>,
    pub m: f64,
    pub alpha: f64,
    pub omega: f64,
    pub width: f64,
    pub k: f64,
    pub n_points: usize,
    pub n_states: usize,
    pub scheme: Scheme,
    pub solver: SolverChoice,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub formats: Vec<OutputFormat>,
    pub output_dir: PathBuf,
    pub seed: u64,
    pub amp_a: [f64; 2],
    pub amp_b: [f64; 2],
}

impl ScenarioConfig {
    pub fn defaults(system: SystemKind) -> Self {
        let (n_points, n_states) = match system {
            SystemKind::Box => (2001, 4),
            SystemKind::Harmonic => (1201, 3),
            SystemKind::Free => (1001, 1),
        };
        ScenarioConfig {
            system,
            name: None,
            m: 1.0,
            alpha: 0.1,
            omega: 1.0,
            width: 10.0,
            k: 1.0,
            n_points,
            n_states,
            scheme: Scheme::GaugeExact,
            solver: SolverChoice::Analytic,
            x_min: None,
            x_max: None,
            formats: vec![OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg],
            output_dir: PathBuf::from("out"),
            seed: DEFAULT_SEED,
            amp_a: [1.0, 0.0],
            amp_b: [0.0, 0.0],
        }
    }

    /// Layer overrides on top (later layers win; pass the config file first
    /// and the flags second).
    pub fn apply(&mut self, o: &ScenarioOverrides) {
        if let Some(v) = o.system {
            self.system = v;
        }
        if let Some(v) = &o.name {
            self.name = Some(v.clone());
        }
        if let Some(v) = o.m {
            self.m = v;
        }
        if let Some(v) = o.alpha {
            self.alpha = v;
        }
        if let Some(v) = o.omega {
            self.omega = v;
        }
        if let Some(v) = o.width {
            self.width = v;
        }
        if let Some(v) = o.k {
            self.k = v;
        }
        if let Some(v) = o.n_points {
            self.n_points = v;
        }
        if let Some(v) = o.n_states {
            self.n_states = v;
        }
        if let Some(v) = o.scheme {
            self.scheme = v;
        }
        if let Some(v) = o.solver {
            self.solver = v;
        }
        if let Some(v) = o.x_min {
            self.x_min = Some(v);
        }
        if let Some(v) = o.x_max {
            self.x_max = Some(v);
        }
        if let Some(v) = &o.formats {
            self.formats = v.clone();
        }
        if let Some(v) = &o.out {
            self.output_dir = v.clone();
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = o.a {
            self.amp_a = v;
        }
        if let Some(v) = o.b {
            self.amp_b = v;
        }
    }

    /// Domain the grid spans: explicit override, or the system default
    /// (the well lives on [0, L]; the oscillator default covers six decay
    /// lengths, widened to the turning point for higher states).
    pub fn domain(&self) -> (f64, f64) {
        match (self.x_min, self.x_max) {
            (Some(a), Some(b)) => (a, b),
            _ => match self.system {
                SystemKind::Box => (0.0, self.width),
                SystemKind::Harmonic => {
                    let six_decay = 6.0 / (self.m * self.omega).sqrt();
                    let x = if self.n_states <= 3 {
                        six_decay
                    } else {
                        analytic::ho_half_width(self.n_states as u32 - 1, self.m, self.omega)
                    };
                    (-x, x)
                }
                SystemKind::Free => (0.0, 10.0),
            },
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_states < 1 {
            return Err(Error::Config("n_states must be at least 1".into()));
        }
        if self.n_points < 3 {
            return Err(Error::Config("n_points must be at least 3".into()));
        }
        if self.m <= 0.0 || !self.m.is_finite() {
            return Err(Error::Config(format!("m must be positive, got {}", self.m)));
        }
        if !self.alpha.is_finite() {
            return Err(Error::Config(format!("alpha must be finite, got {}", self.alpha)));
        }
        match self.system {
            SystemKind::Box => {
                if self.width <= 0.0 || !self.width.is_finite() {
                    return Err(Error::Config(format!("L must be positive, got {}", self.width)));
                }
                if self.x_min.is_some() || self.x_max.is_some() {
                    let (a, b) = self.domain();
                    let slack = 1e-12 * self.width.max(1.0);
                    if a.abs() > slack || (b - self.width).abs() > slack {
                        return Err(Error::Config(
                            "the well domain is [0, L]; leave x_min/x_max unset or match them".into(),
                        ));
                    }
                }
            }
            SystemKind::Harmonic => {
                if self.omega <= 0.0 || !self.omega.is_finite() {
                    return Err(Error::Config(format!(
                        "omega must be positive, got {}",
                        self.omega
                    )));
                }
            }
            SystemKind::Free => {
                if self.solver != SolverChoice::Analytic {
                    return Err(Error::Config(
                        "the free system has no bound spectrum; only --solver analytic applies"
                            .into(),
                    ));
                }
                if self.n_states != 1 {
                    return Err(Error::Config(
                        "the free system produces a single plane-wave state; set n_states 1".into(),
                    ));
                }
            }
        }
        if self.solver == SolverChoice::RqDescent && self.n_states != 1 {
            return Err(Error::Config(
                "rq-descent finds the ground state only; set n_states 1".into(),
            ));
        }
        let (a, b) = self.domain();
        if a.is_nan() || b.is_nan() || b <= a {
            return Err(Error::Config(format!("empty domain [{a}, {b}]")));
        }
        Ok(())
    }

    /// First quantum number for file names and legends: the well counts
    /// from 1, the oscillator from 0.
    fn first_quantum_number(&self) -> u32 {
        match self.system {
            SystemKind::Harmonic => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ParameterEcho {
    pub m: f64,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    pub n_points: usize,
    pub n_states: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub seed: u64,
}

/// JSON report for one scenario run.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScenarioReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub system: SystemKind,
    pub scheme: Scheme,
    pub solver: SolverKind,
    pub parameters: ParameterEcho,
    pub energies: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic_energies: Option<Vec<f64>>,
    pub residuals: Vec<f64>,
    pub warnings: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub files: Vec<String>,
}

/// Batch report: per-scenario reports merged in name order.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BatchReport {
    pub kind: String,
    pub scenarios: Vec<ScenarioReport>,
}

/// Report plus the files a run produced.
#[derive(Debug, Clone)]
pub struct ReportBundle {
    pub report: ReportBody,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone, serde::Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)] // reports are built once per run
pub enum ReportBody {
    Scenario(ScenarioReport),
    Verify(VerifyReport),
    Batch(BatchReport),
}

impl ReportBundle {
    /// False when any recorded check or suite failed.
    pub fn all_pass(&self) -> bool {
        match &self.report {
            ReportBody::Scenario(r) => r.checks.iter().all(|c| c.pass),
            ReportBody::Verify(r) => r.pass,
            ReportBody::Batch(r) => r
                .scenarios
                .iter()
                .all(|s| s.checks.iter().all(|c| c.pass)),
        }
    }
}

fn solve_states(config: &ScenarioConfig, grid: &Grid) -> Result<Spectrum> {
    match config.solver {
        SolverChoice::Analytic => {
            let mut pairs: Vec<(Energy, WaveFunction)> = Vec::with_capacity(config.n_states);
            match config.system {
                SystemKind::Box => {
                    for n in 1..=config.n_states as u32 {
                        pairs.push((
                            analytic::box_energy(n, config.m, config.width)?,
                            analytic::box_state(n, config.width, config.alpha, grid)?,
                        ));
                    }
                }
                SystemKind::Harmonic => {
                    for n in 0..config.n_states as u32 {
                        pairs.push((
                            analytic::ho_energy(n, config.omega)?,
                            analytic::ho_state(n, config.m, config.omega, config.alpha, grid)?,
                        ));
                    }
                }
                SystemKind::Free => {
                    let a = Complex64::new(config.amp_a[0], config.amp_a[1]);
                    let b = Complex64::new(config.amp_b[0], config.amp_b[1]);
                    pairs.push((
                        analytic::free_energy(config.k, config.m)?,
                        analytic::free_particle(config.k, config.alpha, a, b, grid)?,
                    ));
                }
            }
            Spectrum::from_pairs(
                pairs,
                config.scheme,
                SolverKind::Analytic,
                Vec::new(),
                config.seed,
            )
        }
        SolverChoice::Tridiag => {
            let params = model_params(config)?;
            let op = hamiltonian(grid, &params, config.scheme)?;
            let opts = SolveOptions::new(config.n_states).with_seed(config.seed);
            eigen_lowest(&op, &opts)
        }
        SolverChoice::RqDescent => {
            let params = model_params(config)?;
            let op = hamiltonian(grid, &params, config.scheme)?;
            let mut rng = Lcg::new(config.seed);
            let seed_wf = WaveFunction::from_vector(grid.clone(), rng.complex_vector(grid.len()))?;
            let opts = SolveOptions::new(1)
                .with_seed(config.seed)
                .with_tol(1e-11)
                .with_max_iter(500_000);
            let (energy, wf) = rq_descent(&op, &seed_wf, &opts)?;
            // matrix residual of the converged state, for the report
            let v = DVector::from_iterator(op.dim(), (0..op.dim()).map(|j| wf.amp()[j + 1]));
            let scale = v.norm();
            let hv = op.apply(&v);
            let residual = (&hv - &v * Complex64::new(energy.0, 0.0)).norm() / scale;
            Spectrum::from_pairs(
                vec![(energy, wf)],
                config.scheme,
                SolverKind::RqDescent,
                vec![residual],
                config.seed,
            )
        }
    }
}

fn model_params(config: &ScenarioConfig) -> Result<ModelParams> {
    match config.system {
        SystemKind::Box => ModelParams::box_well(config.m, config.alpha, config.width),
        SystemKind::Harmonic => ModelParams::harmonic(config.m, config.alpha, config.omega),
        SystemKind::Free => ModelParams::free(config.m, config.alpha),
    }
}

fn analytic_energies(config: &ScenarioConfig) -> Result<Vec<f64>> {
    match config.system {
        SystemKind::Box => (1..=config.n_states as u32)
            .map(|n| analytic::box_energy(n, config.m, config.width).map(|e| e.0))
            .collect(),
        SystemKind::Harmonic => (0..config.n_states as u32)
            .map(|n| analytic::ho_energy(n, config.omega).map(|e| e.0))
            .collect(),
        SystemKind::Free => Ok(vec![analytic::free_energy(config.k, config.m)?.0]),
    }
}

fn scenario_checks(config: &ScenarioConfig, spectrum: &Spectrum, analytic_e: &[f64]) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    if config.system != SystemKind::Free {
        let mut norm_dev = 0.0f64;
        let mut ortho_dev = 0.0f64;
        let mut boundary = 0.0f64;
        for (i, a) in spectrum.states().enumerate() {
            norm_dev = norm_dev.max((a.norm_sq() - 1.0).abs());
            boundary = boundary.max(a.boundary_amplitude());
            for (j, b) in spectrum.states().enumerate() {
                if i < j {
                    if let Ok(ov) = a.inner(b) {
                        ortho_dev = ortho_dev.max(ov.norm());
                    }
                }
            }
        }
        checks.push(CheckResult::le("normalization_deviation", norm_dev, 1e-8));
        if spectrum.len() > 1 {
            checks.push(CheckResult::le("orthogonality_deviation", ortho_dev, 1e-8));
        }
        checks.push(CheckResult::le("boundary_amplitude", boundary, 1e-6));

        let mut energy_dev = 0.0f64;
        for (e, a) in spectrum.energies().iter().zip(analytic_e.iter()) {
            energy_dev = energy_dev.max((e - a).abs() / a.abs().max(1e-300));
        }
        checks.push(CheckResult::le(
            "energy_vs_closed_form_relative",
            energy_dev,
            1e-3,
        ));
    }

    // imaginary parts appear exactly when alpha != 0
    let mut max_im = 0.0f64;
    for wf in spectrum.states() {
        for j in 0..wf.len() {
            max_im = max_im.max(wf.amp()[j].im.abs());
        }
    }
    let pass = if config.alpha == 0.0 {
        max_im == 0.0
    } else {
        max_im > 0.0
    };
    checks.push(CheckResult {
        name: "imaginary_parts_iff_alpha_nonzero".into(),
        value: max_im,
        criterion: "= 0 iff alpha = 0".into(),
        pass,
    });
    checks
}

/// Run one scenario: solve, check, and write the requested outputs.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ReportBundle> {
    config.validate()?;
    let (x_lo, x_hi) = config.domain();
    let grid = make_grid(x_lo, x_hi, config.n_points).map_err(|e| match e {
        Error::Domain(msg) => Error::Config(msg),
        other => other,
    })?;
    let spectrum = solve_states(config, &grid)?;
    let analytic_e = analytic_energies(config)?;
    let checks = scenario_checks(config, &spectrum, &analytic_e);

    let mut notes = Vec::new();
    if config.system == SystemKind::Harmonic {
        notes.push(
            "oscillator defaults follow the figure-caption convention alpha = 1/10; \
             the conflicting alpha = 10 quoted in the accompanying prose is not used"
                .to_string(),
        );
        if config.x_min.is_none() && config.x_max.is_none() && config.n_states <= 3 {
            notes.push(format!(
                "default plot range [{x_lo}, {x_hi}] spans six decay lengths"
            ));
        }
    }

    let dir = &config.output_dir;
    std::fs::create_dir_all(dir)?;
    let mut files = Vec::new();
    let first_qn = config.first_quantum_number();

    if config.formats.contains(&OutputFormat::Csv) {
        files.extend(emit_csv(&spectrum, dir, first_qn)?);
    }
    if config.formats.contains(&OutputFormat::Svg) {
        let title_params = match config.system {
            SystemKind::Box => format!("alpha={}, m={}, L={}", config.alpha, config.m, config.width),
            SystemKind::Harmonic => format!(
                "alpha={}, m={}, omega={}",
                config.alpha, config.m, config.omega
            ),
            SystemKind::Free => format!("alpha={}, m={}, k={}", config.alpha, config.m, config.k),
        };
        for part in [SvgPart::Re, SvgPart::Im] {
            let meta = PlotMeta {
                title: format!("{} states, {} ({})", config.system, title_params, part.label()),
                first_quantum_number: first_qn,
            };
            let path = dir.join(format!("{}_{}.svg", config.system, part.file_tag()));
            emit_svg(&spectrum, part, &meta, &path)?;
            files.push(path);
        }
    }

    let file_names: Vec<String> = files
        .iter()
        .filter_map(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .collect();

    let report = ScenarioReport {
        kind: "scenario".into(),
        name: config.name.clone(),
        system: config.system,
        scheme: spectrum.scheme(),
        solver: spectrum.solver(),
        parameters: ParameterEcho {
            m: config.m,
            alpha: config.alpha,
            omega: (config.system == SystemKind::Harmonic).then_some(config.omega),
            width: (config.system == SystemKind::Box).then_some(config.width),
            k: (config.system == SystemKind::Free).then_some(config.k),
            n_points: config.n_points,
            n_states: config.n_states,
            x_min: x_lo,
            x_max: x_hi,
            seed: config.seed,
        },
        energies: spectrum.energies(),
        analytic_energies: Some(analytic_e),
        residuals: spectrum.residuals().to_vec(),
        warnings: spectrum.warnings().iter().map(|w| format!("{w:?}")).collect(),
        checks,
        notes,
        files: file_names,
    };

    let mut files_out = files;
    if config.formats.contains(&OutputFormat::Json) {
        let path = dir.join("report.json");
        write_report(&report, &path)?;
        files_out.push(path);
    }

    Ok(ReportBundle {
        report: ReportBody::Scenario(report),
        files: files_out,
    })
}

/// Batch file: a list of named scenario overrides.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchFile {
    pub scenarios: Vec<ScenarioOverrides>,
}

/// Run a batch: each scenario executes concurrently and writes only inside
/// `<out_root>/<name>/`; the merged report is assembled single-threaded in
/// name order.
pub fn run_batch(batch: &BatchFile, out_root: &Path) -> Result<ReportBundle> {
    let mut configs = Vec::with_capacity(batch.scenarios.len());
    for o in &batch.scenarios {
        let system = o
            .system
            .ok_or_else(|| Error::Config("batch scenarios need a system".into()))?;
        let name = o
            .name
            .clone()
            .ok_or_else(|| Error::Config("batch scenarios need a name".into()))?;
        if name.is_empty() || name.contains(['/', '\\']) {
            return Err(Error::Config(format!("bad scenario name {name:?}")));
        }
        let mut config = ScenarioConfig::defaults(system);
        config.apply(o);
        config.output_dir = out_root.join(&name);
        config.name = Some(name);
        configs.push(config);
    }
    {
        let mut names: Vec<&String> = configs.iter().filter_map(|c| c.name.as_ref()).collect();
        names.sort();
        names.dedup();
        if names.len() != configs.len() {
            return Err(Error::Config("batch scenario names must be unique".into()));
        }
    }

    let mut results: Vec<(String, Result<ReportBundle>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = configs
            .iter()
            .map(|config| {
                let name = config.name.clone().unwrap_or_default();
                (name, scope.spawn(move || run_scenario(config)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let res = h
                    .join()
                    .unwrap_or_else(|_| Err(Error::Convergence("scenario thread panicked".into())));
                (name, res)
            })
            .collect()
    });
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut scenarios = Vec::with_capacity(results.len());
    let mut files = Vec::new();
    for (_, res) in results {
        let bundle = res?;
        files.extend(bundle.files);
        match bundle.report {
            ReportBody::Scenario(r) => scenarios.push(r),
            _ => unreachable!("batch runs scenarios only"),
        }
    }

    let report = BatchReport {
        kind: "batch".into(),
        scenarios,
    };
    let path = out_root.join("batch_report.json");
    write_report(&report, &path)?;
    files.push(path);

    Ok(ReportBundle {
        report: ReportBody::Batch(report),
        files,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_encode_the_reference_figures() {
        let b = ScenarioConfig::defaults(SystemKind::Box);
        assert_eq!(b.alpha, 0.1);
        assert_eq!(b.width, 10.0);
        assert_eq!(b.n_states, 4);
        let h = ScenarioConfig::defaults(SystemKind::Harmonic);
        assert_eq!(h.alpha, 0.1);
        assert_eq!((h.m, h.omega), (1.0, 1.0));
        assert_eq!(h.n_states, 3);
        assert_eq!(h.domain(), (-6.0, 6.0));
    }

    #[test]
    fn overrides_layer_correctly() {
        let mut c = ScenarioConfig::defaults(SystemKind::Box);
        let from_file: ScenarioOverrides =
            serde_json::from_str(r#"{"alpha": 0.5, "n_points": 501}"#).unwrap();
        c.apply(&from_file);
        let flags = ScenarioOverrides {
            alpha: Some(0.7),
            ..Default::default()
        };
        c.apply(&flags);
        assert_eq!(c.alpha, 0.7); // flag wins over file
        assert_eq!(c.n_points, 501); // file wins over default
    }

    #[test]
    fn validation_rejects_contradictions() {
        let mut c = ScenarioConfig::defaults(SystemKind::Free);
        c.solver = SolverChoice::Tridiag;
        assert!(matches!(c.validate(), Err(Error::Config(_))));

        let mut c = ScenarioConfig::defaults(SystemKind::Box);
        c.solver = SolverChoice::RqDescent;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        c.n_states = 1;
        assert!(c.validate().is_ok());

        let mut c = ScenarioConfig::defaults(SystemKind::Box);
        c.n_points = 2;
        assert!(matches!(c.validate(), Err(Error::Config(_))));

        let mut c = ScenarioConfig::defaults(SystemKind::Harmonic);
        c.omega = -1.0;
        assert!(matches!(c.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn unknown_config_keys_rejected() {
        let r: std::result::Result<ScenarioOverrides, _> =
            serde_json::from_str(r#"{"alpa": 0.5}"#);
        assert!(r.is_err());
    }

    #[test]
    fn analytic_box_scenario_end_to_end() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ScenarioConfig::defaults(SystemKind::Box);
        config.n_points = 401;
        config.output_dir = dir.path().to_path_buf();
        let bundle = run_scenario(&config).unwrap();
        assert!(bundle.all_pass());
        // four state files, two svgs, one report
        assert!(dir.path().join("psi_1.csv").exists());
        assert!(dir.path().join("psi_4.csv").exists());
        assert!(dir.path().join("box_re.svg").exists());
        assert!(dir.path().join("box_im.svg").exists());
        assert!(dir.path().join("report.json").exists());
        match bundle.report {
            ReportBody::Scenario(r) => {
                assert_eq!(r.energies.len(), 4);
                assert!((r.energies[0] - 0.04934802200544679).abs() < 1e-15);
            }
            _ => panic!("expected scenario report"),
        }
    }

    #[test]
    fn tridiag_box_scenario_matches_closed_form() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ScenarioConfig::defaults(SystemKind::Box);
        config.solver = SolverChoice::Tridiag;
        config.alpha = 0.0;
        config.n_states = 1;
        config.n_points = 2001;
        config.formats = vec![OutputFormat::Json];
        config.output_dir = dir.path().to_path_buf();
        let bundle = run_scenario(&config).unwrap();
        match &bundle.report {
            ReportBody::Scenario(r) => {
                let rel = (r.energies[0] - 0.04934802200544679).abs() / 0.04934802200544679;
                assert!(rel <= 1e-5, "relative error {rel}");
            }
            _ => panic!(),
        }
    }

    #[test]
    fn free_scenario_emits_plane_wave() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ScenarioConfig::defaults(SystemKind::Free);
        config.n_points = 201;
        config.output_dir = dir.path().to_path_buf();
        let bundle = run_scenario(&config).unwrap();
        match &bundle.report {
            ReportBody::Scenario(r) => {
                assert_eq!(r.energies, vec![0.5]);
            }
            _ => panic!(),
        }
        assert!(dir.path().join("psi_1.csv").exists());
    }

    #[test]
    fn excluded_free_regime_propagates_condition_error() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = ScenarioConfig::defaults(SystemKind::Free);
        config.k = 0.05;
        config.alpha = 0.1;
        config.output_dir = dir.path().to_path_buf();
        assert!(matches!(
            run_scenario(&config),
            Err(Error::Condition { .. })
        ));
    }

    #[test]
    fn batch_runs_and_merges_in_name_order() {
        let dir = tempfile::tempdir().unwrap();
        let batch: BatchFile = serde_json::from_str(
            r#"{"scenarios": [
                {"name": "z-box", "system": "box", "n_points": 201, "n_states": 2, "formats": ["json"]},
                {"name": "a-harmonic", "system": "harmonic", "n_points": 201, "n_states": 2, "formats": ["json"]}
            ]}"#,
        )
        .unwrap();
        let bundle = run_batch(&batch, dir.path()).unwrap();
        match &bundle.report {
            ReportBody::Batch(r) => {
                assert_eq!(r.scenarios.len(), 2);
                assert_eq!(r.scenarios[0].name.as_deref(), Some("a-harmonic"));
                assert_eq!(r.scenarios[1].name.as_deref(), Some("z-box"));
            }
            _ => panic!(),
        }
        assert!(dir.path().join("a-harmonic/report.json").exists());
        assert!(dir.path().join("z-box/report.json").exists());
        assert!(dir.path().join("batch_report.json").exists());
    }

    #[test]
    fn outputs_byte_identical_across_runs() {
        let d1 = tempfile::tempdir().unwrap();
        let d2 = tempfile::tempdir().unwrap();
        for d in [&d1, &d2] {
            let mut config = ScenarioConfig::defaults(SystemKind::Harmonic);
            config.n_points = 301;
            config.output_dir = d.path().to_path_buf();
            run_scenario(&config).unwrap();
        }
        for name in ["psi_0.csv", "psi_2.csv", "harmonic_re.svg", "harmonic_im.svg", "report.json"] {
            let a = std::fs::read(d1.path().join(name)).unwrap();
            let b = std::fs::read(d2.path().join(name)).unwrap();
            assert_eq!(a, b, "{name} differs between runs");
        }
    }
}
