//! Batch experiment runner behind the `mobicov` binary.
//!
//! A run is configured by an optional JSON file whose fields can be
//! overridden by flags. Every output starts with the crate version, the
//! resolved configuration and the seed.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analytic::{comparison_suite, coverage_curve, shannon_rate, CoverageOptions};
use crate::dynamics::{sample_heads, shannon_timeseries, simulate, SimulationWindow};
use crate::error::{invalid, Error, Result};
use crate::model::{Attenuation, Epoch, EpochKind, Metric, MetricQuery, SystemParams};
use crate::palm::{sample_palm_batch, EpochLaw, NamedLaw};
use crate::validation::{Lab, ValidationConfig, CRITERIA};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    #[default]
    Intensities,
    Epochs,
    Ecdf,
}

/// Everything a run needs; parsed from the config file, then overridden.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub params: SystemParams,
    pub window: SimulationWindow,
    pub replications: usize,
    /// Uniform times per replication for typical-time statistics.
    pub typical: usize,
    /// Palm samples per kind for `palm`.
    pub samples: usize,
    pub kinds: Vec<EpochKind>,
    pub metrics: Vec<Metric>,
    pub fading: bool,
    /// Thresholds in dB as `start:stop:step` (inclusive) or a single value.
    pub tau_db: String,
    pub attenuation: Option<Attenuation>,
    pub mc_samples: usize,
    /// Rows of the `timeseries` table.
    pub points: usize,
    pub lambda_pair: (f64, f64),
    pub table: TableKind,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            params: SystemParams::default(),
            window: SimulationWindow::default(),
            replications: 1,
            typical: 1000,
            samples: 10_000,
            kinds: EpochKind::ALL.to_vec(),
            metrics: vec![Metric::Sir],
            fading: false,
            tau_db: "-10:10:0.5".into(),
            attenuation: None,
            mc_samples: 200_000,
            points: 1000,
            lambda_pair: (0.1, 10.0),
            table: TableKind::Intensities,
            output: None,
            format: Format::Csv,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mobicov", version, about = "Epoch statistics and coverage of Poisson networks of moving stations")]
pub struct Cli {
    /// JSON configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(flatten)]
    pub overrides: Overrides,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Args)]
pub struct Overrides {
    #[arg(long, global = true)]
    pub lambda: Option<f64>,
    #[arg(long, global = true)]
    pub speed: Option<f64>,
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true)]
    pub mu: Option<f64>,
    #[arg(long, global = true)]
    pub sigma2: Option<f64>,
    #[arg(long, global = true)]
    pub bandwidth: Option<f64>,
    #[arg(long, global = true)]
    pub t_obs: Option<f64>,
    #[arg(long, global = true)]
    pub h_max: Option<f64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub replications: Option<usize>,
    #[arg(long, global = true)]
    pub typical: Option<usize>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Epoch kinds, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub kind: Vec<String>,
    /// Metrics, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub metric: Vec<String>,
    #[arg(long, global = true, conflicts_with = "no_fading")]
    pub fading: bool,
    #[arg(long, global = true)]
    pub no_fading: bool,
    /// Thresholds in dB, `start:stop:step` inclusive.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tau_db: Option<String>,
    /// power-law, bounded or step.
    #[arg(long, global = true)]
    pub attenuation: Option<String>,
    #[arg(long, global = true)]
    pub step_p: Option<f64>,
    #[arg(long, global = true)]
    pub step_d: Option<f64>,
    #[arg(long, global = true)]
    pub mc_samples: Option<usize>,
    #[arg(long, global = true)]
    pub points: Option<usize>,
    /// Two intensities for the scale check, e.g. `0.1,10`.
    #[arg(long, global = true, value_delimiter = ',', num_args = 2)]
    pub lambda_pair: Vec<f64>,
    #[arg(long, global = true, value_enum)]
    pub table: Option<TableKind>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate the moving network and detect epochs.
    Simulate,
    /// Sample epoch configurations from their Palm laws.
    Palm,
    /// Coverage curves over the threshold grid.
    Coverage,
    /// Average Shannon rates.
    Rate,
    /// Tropical rate along one simulated trajectory.
    Timeseries,
    /// Run the acceptance suite; exit code 1 if a criterion fails.
    Validate {
        /// Reduced sample sizes.
        #[arg(long)]
        quick: bool,
        /// Criteria to run, comma separated (default all).
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u32>,
    },
    /// Ordering and invariance report; exit code 1 if a check fails.
    Compare,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Simulate => "simulate",
            Command::Palm => "palm",
            Command::Coverage => "coverage",
            Command::Rate => "rate",
            Command::Timeseries => "timeseries",
            Command::Validate { .. } => "validate",
            Command::Compare => "compare",
        }
    }
}

/// Parses `start:stop:step` (inclusive) or a single value, in dB.
pub fn parse_db_range(s: &str) -> Result<Vec<f64>> {
    let bad = |why: &str| invalid("tau_db", format!("`{s}`: {why}"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad("not a number")))
        .collect::<Result<_>>()?;
    if parts.iter().any(|v| !v.is_finite()) {
        return Err(bad("values must be finite"));
    }
    match parts[..] {
        [v] => Ok(vec![v]),
        [start, stop, step] => {
            if !(step > 0.0) {
                return Err(bad("step must be > 0"));
            }
            if stop < start {
                return Err(bad("stop must be >= start"));
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=n).map(|i| start + step * i as f64).collect())
        }
        _ => Err(bad("expected start:stop:step or a single value")),
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig> {
        serde_json::from_str(text).map_err(|e| {
            invalid("config", format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    /// Applies flag overrides on top of the file values.
    pub fn apply(&mut self, o: &Overrides, output: Option<PathBuf>, format: Option<Format>) -> Result<()> {
        let p = &mut self.params;
        set(&mut p.lambda, o.lambda);
        set(&mut p.speed, o.speed);
        set(&mut p.alpha, o.alpha);
        set(&mut p.mu, o.mu);
        set(&mut p.sigma2, o.sigma2);
        set(&mut p.bandwidth, o.bandwidth);
        set(&mut self.window.t_obs, o.t_obs);
        set(&mut self.window.h_max, o.h_max);
        set(&mut self.window.seed, o.seed);
        set(&mut self.replications, o.replications);
        set(&mut self.typical, o.typical);
        set(&mut self.samples, o.samples);
        set(&mut self.mc_samples, o.mc_samples);
        set(&mut self.points, o.points);
        set(&mut self.table, o.table);
        if let Some(t) = &o.tau_db {
            self.tau_db = t.clone();
        }
        if !o.kind.is_empty() {
            self.kinds = o.kind.iter().map(|k| k.parse()).collect::<Result<_>>()?;
        }
        if !o.metric.is_empty() {
            self.metrics = o.metric.iter().map(|m| m.parse()).collect::<Result<_>>()?;
        }
        if o.fading {
            self.fading = true;
        }
        if o.no_fading {
            self.fading = false;
        }
        if let [a, b] = o.lambda_pair[..] {
            self.lambda_pair = (a, b);
        }
        if let Some(name) = &o.attenuation {
            let alpha = self.params.alpha;
            self.attenuation = Some(match name.as_str() {
                "power-law" => Attenuation::PowerLaw { alpha },
                "bounded" => Attenuation::Bounded { alpha },
                "step" => Attenuation::Step { p: o.step_p.unwrap_or(1.0), d: o.step_d.unwrap_or(1.0) },
                other => return Err(invalid("attenuation", format!("unknown attenuation `{other}`"))),
            });
        } else if o.step_p.is_some() || o.step_d.is_some() {
            return Err(invalid("attenuation", "--step-p/--step-d need --attenuation step"));
        }
        if output.is_some() {
            self.output = output;
        }
        if let Some(f) = format {
            self.format = f;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.window.validate()?;
        if let Some(a) = &self.attenuation {
            a.validate()?;
        }
        if self.replications == 0 {
            return Err(invalid("replications", "must be >= 1"));
        }
        if self.kinds.is_empty() || self.metrics.is_empty() {
            return Err(invalid("kinds/metrics", "must be nonempty"));
        }
        if self.samples == 0 || self.mc_samples == 0 || self.points == 0 {
            return Err(invalid("samples/mc_samples/points", "must be >= 1"));
        }
        if !(self.lambda_pair.0 > 0.0 && self.lambda_pair.1 > 0.0) {
            return Err(invalid("lambda_pair", "intensities must be > 0"));
        }
        parse_db_range(&self.tau_db).map(|_| ())
    }

    fn query(&self, kind: EpochKind, metric: Metric) -> MetricQuery {
        let mut q = MetricQuery::new(kind, metric, self.fading, 1.0, self.params);
        if let Some(a) = self.attenuation {
            q.attenuation = a;
        }
        q
    }

    fn options(&self) -> CoverageOptions {
        CoverageOptions { mc_samples: self.mc_samples, seed: self.window.seed, ..CoverageOptions::default() }
    }
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

/// One cell of an output table.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    U(u64),
    S(String),
    B(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::F(v)
    }
}
impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::U(v as u64)
    }
}
impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::U(v as u64)
    }
}
impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::B(v)
    }
}
impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::S(v.to_string())
    }
}
impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::S(v)
    }
}

/// Floats with 17 significant digits.
pub fn fmt_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::F(v) => fmt_float(*v),
            Cell::U(v) => v.to_string(),
            Cell::B(v) => v.to_string(),
            Cell::S(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::S(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::F(v) if v.is_finite() => json!(v),
            Cell::F(v) => json!(fmt_float(*v)),
            Cell::U(v) => json!(v),
            Cell::B(v) => json!(v),
            Cell::S(s) => json!(s),
        }
    }
}

/// A titled table plus the run metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn render(&self) -> String {
        let config = serde_json::to_string(&self.config).expect("config serializes");
        match self.config.format {
            Format::Csv => {
                let mut out = String::new();
                let _ = writeln!(out, "# mobicov {VERSION}");
                let _ = writeln!(out, "# command: {}", self.command);
                let _ = writeln!(out, "# seed: {}", self.config.window.seed);
                let _ = writeln!(out, "# config: {config}");
                out.push_str(&self.columns.join(","));
                out.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let m: serde_json::Map<String, Value> =
                            self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
                        Value::Object(m)
                    })
                    .collect();
                let doc = json!({
                    "version": VERSION,
                    "command": self.command,
                    "seed": self.config.window.seed,
                    "config": serde_json::from_str::<Value>(&config).expect("valid json"),
                    "columns": self.columns,
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

fn conditioning(e: &Epoch) -> f64 {
    match e.kind {
        EpochKind::MaxInterference | EpochKind::MinInterference => e.interferers[0],
        _ => e.serving,
    }
}

fn epoch_rows(epochs: &[Epoch]) -> Vec<Vec<Cell>> {
    epochs
        .iter()
        .map(|e| {
            vec![
                e.kind.name().into(),
                e.time.into(),
                e.serving.into(),
                e.interferers.first().copied().unwrap_or(f64::INFINITY).into(),
                e.interferers.len().into(),
            ]
        })
        .collect()
}

fn ecdf_rows(kinds: &[EpochKind], lambda: f64, sample: impl Fn(EpochKind) -> Vec<f64>) -> Result<Vec<Vec<Cell>>> {
    let mut rows = Vec::new();
    for &k in kinds {
        let mut xs = sample(k);
        if xs.is_empty() {
            continue;
        }
        xs.sort_by(f64::total_cmp);
        let law = EpochLaw::new(NamedLaw::conditioning(k), lambda)?;
        let n = xs.len();
        for i in 0..=100usize {
            let j = i * (n - 1) / 100;
            rows.push(vec![
                k.name().into(),
                xs[j].into(),
                ((j + 1) as f64 / n as f64).into(),
                law.cdf(xs[j]).into(),
            ]);
        }
    }
    Ok(rows)
}

const EPOCH_COLUMNS: [&str; 5] = ["kind", "time", "serving", "nearest_interferer", "interferers"];
const ECDF_COLUMNS: [&str; 4] = ["kind", "distance", "ecdf", "cdf"];
const INTENSITY_COLUMNS: [&str; 5] = ["kind", "count", "total_time", "intensity", "expected"];

fn expected_intensity(k: EpochKind, p: &SystemParams) -> f64 {
    k.unit_intensity().map_or(f64::NAN, |u| u * p.speed * p.lambda.sqrt())
}

fn run_simulate(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>)> {
    let typical = if cfg.kinds.contains(&EpochKind::TypicalTime) { cfg.typical } else { 0 };
    let sim = simulate(&cfg.params, &cfg.window, cfg.replications, typical)?;
    Ok(match cfg.table {
        TableKind::Intensities => {
            let rows = cfg
                .kinds
                .iter()
                .filter(|k| k.unit_intensity().is_some())
                .map(|&k| {
                    vec![
                        k.name().into(),
                        sim.count(k).into(),
                        sim.total_time.into(),
                        sim.intensity(k).into(),
                        expected_intensity(k, &cfg.params).into(),
                    ]
                })
                .collect();
            (INTENSITY_COLUMNS.to_vec(), rows)
        }
        TableKind::Epochs => {
            let chosen: Vec<Epoch> = sim.epochs.iter().filter(|e| cfg.kinds.contains(&e.kind)).cloned().collect();
            (EPOCH_COLUMNS.to_vec(), epoch_rows(&chosen))
        }
        TableKind::Ecdf => {
            let rows = ecdf_rows(&cfg.kinds, cfg.params.lambda, |k| sim.of_kind(k).map(conditioning).collect())?;
            (ECDF_COLUMNS.to_vec(), rows)
        }
    })
}

fn run_palm(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>)> {
    let batch = |k| sample_palm_batch(k, &cfg.params, cfg.window.h_max, cfg.samples, cfg.window.seed);
    Ok(match cfg.table {
        TableKind::Intensities => {
            // Palm sampling fixes the epoch law, not its rate
            let rows = cfg
                .kinds
                .iter()
                .map(|&k| {
                    vec![
                        k.name().into(),
                        cfg.samples.into(),
                        f64::NAN.into(),
                        f64::NAN.into(),
                        expected_intensity(k, &cfg.params).into(),
                    ]
                })
                .collect();
            (INTENSITY_COLUMNS.to_vec(), rows)
        }
        TableKind::Epochs => {
            let all: Vec<Epoch> = cfg.kinds.iter().flat_map(|&k| batch(k)).collect();
            (EPOCH_COLUMNS.to_vec(), epoch_rows(&all))
        }
        TableKind::Ecdf => {
            let rows = ecdf_rows(&cfg.kinds, cfg.params.lambda, |k| batch(k).iter().map(conditioning).collect())?;
            (ECDF_COLUMNS.to_vec(), rows)
        }
    })
}

fn run_coverage(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>)> {
    let dbs = parse_db_range(&cfg.tau_db)?;
    let taus: Vec<f64> = dbs.iter().map(|&d| db_to_linear(d)).collect();
    let mut rows = Vec::new();
    for &k in &cfg.kinds {
        for &m in &cfg.metrics {
            let curve = coverage_curve(&cfg.query(k, m), &taus, &cfg.options())?;
            for (db, r) in dbs.iter().zip(curve) {
                rows.push(vec![
                    (*db).into(),
                    k.name().into(),
                    m.name().into(),
                    r.value.into(),
                    r.err.into(),
                    r.method.name().into(),
                ]);
            }
        }
    }
    Ok((vec!["tau_db", "kind", "metric", "value", "err", "method"], rows))
}

fn run_rate(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>)> {
    let mut rows = Vec::new();
    for &k in &cfg.kinds {
        for &m in &cfg.metrics {
            let r = shannon_rate(&cfg.query(k, m), &cfg.options())?;
            rows.push(vec![k.name().into(), m.name().into(), r.value.into(), r.err.into(), r.method.name().into()]);
        }
    }
    Ok((vec!["kind", "metric", "rate", "err", "method"], rows))
}

fn run_timeseries(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>)> {
    let heads = sample_heads(&cfg.params, &cfg.window)?;
    let n = cfg.points;
    let t = cfg.window.t_obs;
    let times: Vec<f64> = if n == 1 { vec![0.0] } else { (0..n).map(|i| t * i as f64 / (n - 1) as f64).collect() };
    let pts = shannon_timeseries(&heads, &cfg.params, &cfg.window, &times)?;
    let rows = pts.iter().map(|p| vec![p.time.into(), p.l1.into(), p.l2.into(), p.rate.into()]).collect();
    Ok((vec!["time", "l1", "l2", "rate"], rows))
}

fn run_compare(cfg: &RunConfig) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>, bool)> {
    let taus: Vec<f64> = parse_db_range(&cfg.tau_db)?.into_iter().map(db_to_linear).collect();
    let report = comparison_suite(&cfg.params, &taus, cfg.lambda_pair, &cfg.options())?;
    let pass = report.pass;
    let rows = report
        .checks
        .into_iter()
        .map(|c| {
            vec![
                c.name.into(),
                c.passed.into(),
                c.points.into(),
                c.worst_margin.into(),
                c.violations.first().cloned().unwrap_or_default().into(),
            ]
        })
        .collect();
    Ok((vec!["check", "passed", "points", "worst_margin", "first_violation"], rows, pass))
}

fn run_validate(cfg: &RunConfig, quick: bool, criteria: &[u32]) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>, bool)> {
    let base = if quick { ValidationConfig::quick() } else { ValidationConfig::default() };
    let mut lab = Lab::new(ValidationConfig { seed: cfg.window.seed, ..base })?;
    let ids: Vec<u32> = if criteria.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { criteria.to_vec() };
    let mut rows = Vec::new();
    let mut all = true;
    for id in ids {
        let o = lab.run(id)?;
        eprintln!("{o}");
        all &= o.passed;
        rows.push(vec![o.id.into(), o.name.into(), o.passed.into(), o.detail.into()]);
    }
    Ok((vec!["id", "name", "passed", "detail"], rows, all))
}

/// Runs one parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> ExitCode {
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Resolves the configuration of `cli`.
pub fn resolve(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| invalid("config", format!("{}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::default(),
    };
    cfg.apply(&cli.overrides, cli.output.clone(), cli.format)?;
    Ok(cfg)
}

fn execute(cli: Cli) -> Result<bool> {
    let cfg = resolve(&cli)?;
    let mut passed = true;
    let (columns, rows) = match &cli.command {
        Command::Simulate => run_simulate(&cfg)?,
        Command::Palm => run_palm(&cfg)?,
        Command::Coverage => run_coverage(&cfg)?,
        Command::Rate => run_rate(&cfg)?,
        Command::Timeseries => run_timeseries(&cfg)?,
        Command::Compare => {
            let (c, r, ok) = run_compare(&cfg)?;
            passed = ok;
            (c, r)
        }
        Command::Validate { quick, criteria } => {
            let (c, r, ok) = run_validate(&cfg, *quick, criteria)?;
            passed = ok;
            (c, r)
        }
    };
    let report = Report { command: cli.command.name().into(), config: cfg.clone(), columns, rows };
    let text = report.render();
    match &cfg.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Unsupported(format!("{}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::Unsupported(format!("stdout: {e}")))?;
        }
    }
    Ok(passed)
}

/// Entry point of the binary: parses `std::env::args`.
pub fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_ranges() {
        assert_eq!(parse_db_range("-10:10:0.5").unwrap().len(), 41);
        assert_eq!(parse_db_range("3").unwrap(), vec![3.0]);
        assert_eq!(parse_db_range("0:1:1").unwrap(), vec![0.0, 1.0]);
        assert!(parse_db_range("1:0:1").is_err());
        assert!(parse_db_range("0:1:0").is_err());
        assert!(parse_db_range("a:b").is_err());
    }

    #[test]
    fn config_errors_name_the_line() {
        let e = RunConfig::from_json("{\n \"params\": {\"lambda\": 1},\n \"bogus\": 3\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let e = RunConfig::from_json("{\"params\": {\"lamda\": 1}}").unwrap_err();
        assert!(e.to_string().contains("lamda"), "{e}");
    }

    #[test]
    fn config_round_trips() {
        let cfg = RunConfig { fading: true, attenuation: Some(Attenuation::Step { p: 1.0, d: 2.0 }), ..RunConfig::default() };
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(RunConfig::from_json(&text).unwrap(), cfg);
    }

    #[test]
    fn floats_carry_17_digits() {
        assert_eq!(fmt_float(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_float(f64::NAN), "nan");
        let x: f64 = fmt_float(std::f64::consts::PI).parse().unwrap();
        assert_eq!(x, std::f64::consts::PI);
    }
}
