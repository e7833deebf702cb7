//! The acceptance suite: each criterion cross-checks simulation, Palm
//! sampling and analytic formulas and reports a pass/fail outcome.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analytic::compare::{coverage_orderings, interference_lt, interference_orderings, scale_invariance, step_differences};
use crate::analytic::{coverage, coverage_curve, coverage_with, shannon_rate, CoverageOptions};
use crate::dynamics::{mc_coverage, mean_timeseries_rate, sample_heads, simulate, truncation_tail, Simulation, SimulationWindow};
use crate::error::{invalid, Result};
use crate::model::{Attenuation, Epoch, EpochKind, Metric, MetricQuery, SystemParams};
use crate::numerics::ks::{critical_1pct, critical_1pct_two, ks_one_sample, ks_two_sample};
use crate::numerics::rng_for;
use crate::palm::{joint_laplace, sample_palm_batch, sample_palm_config, EpochLaw, NamedLaw};

use EpochKind::{MaxInterference as I, MaxSignal as S, MinInterference as MI, MinSigMaxInt as V, TypicalTime as T};

/// Sample sizes and seeds of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ValidationConfig {
    pub seed: u64,
    pub replications: usize,
    pub t_obs: f64,
    pub h_max: f64,
    /// Samples per goodness-of-fit test.
    pub ks_n: usize,
    /// Palm samples per joint transform.
    pub laplace_n: usize,
    /// Palm samples per Monte Carlo coverage curve.
    pub mc_samples: usize,
    /// Observation length of the rate time series.
    pub rate_t_obs: f64,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig {
            seed: 7,
            replications: 8,
            t_obs: 5000.0,
            h_max: 8.0,
            ks_n: 10_000,
            laplace_n: 100_000,
            mc_samples: 100_000,
            rate_t_obs: 10_000.0,
        }
    }
}

impl ValidationConfig {
    /// A small budget for smoke runs; statistical criteria may lose power.
    pub fn quick() -> Self {
        ValidationConfig {
            replications: 2,
            t_obs: 500.0,
            ks_n: 1000,
            laplace_n: 10_000,
            mc_samples: 10_000,
            rate_t_obs: 1000.0,
            ..ValidationConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replications == 0 || self.ks_n == 0 || self.laplace_n < 2 || self.mc_samples == 0 {
            return Err(invalid("validation", "sample sizes must be positive"));
        }
        self.window().validate()
    }

    fn window(&self) -> SimulationWindow {
        SimulationWindow { t_obs: self.t_obs, h_max: self.h_max, seed: self.seed, safety: 0.9 }
    }

    fn typical_per_rep(&self) -> usize {
        self.ks_n.div_ceil(self.replications)
    }
}

/// Result of one criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

pub const CRITERIA: [(u32, &str); 11] = [
    (1, "epoch intensities"),
    (2, "distance laws"),
    (3, "uniform ratio laws"),
    (4, "joint Laplace transforms"),
    (5, "fading SIR closed forms"),
    (6, "no-fading tropical closed forms"),
    (7, "coverage ordering sweep"),
    (8, "scale and fading invariance"),
    (9, "Shannon rate consistency"),
    (10, "interference ordering"),
    (11, "step-attenuation counterexample"),
];

/// Shared state of a suite run; the dynamics simulation is built once.
pub struct Lab {
    pub cfg: ValidationConfig,
    pub params: SystemParams,
    sim: Option<Simulation>,
}

impl Lab {
    pub fn new(cfg: ValidationConfig) -> Result<Lab> {
        cfg.validate()?;
        Ok(Lab { cfg, params: SystemParams::default(), sim: None })
    }

    pub fn simulation(&mut self) -> Result<&Simulation> {
        if self.sim.is_none() {
            let c = &self.cfg;
            self.sim = Some(simulate(&self.params, &c.window(), c.replications, c.typical_per_rep())?);
        }
        Ok(self.sim.as_ref().expect("built above"))
    }

    pub fn run(&mut self, id: u32) -> Result<Outcome> {
        let (passed, detail) = match id {
            1 => self.intensities()?,
            2 => self.distance_laws()?,
            3 => self.uniform_ratios()?,
            4 => self.joint_laplace()?,
            5 => self.fading_closed_forms()?,
            6 => self.tropical_closed_forms()?,
            7 => self.ordering_sweep()?,
            8 => self.invariance()?,
            9 => self.rate()?,
            10 => self.interference_order()?,
            11 => self.step_counterexample()?,
            _ => return Err(invalid("criterion", format!("no criterion {id}"))),
        };
        let name = CRITERIA[id as usize - 1].1.to_string();
        Ok(Outcome { id, name, passed, detail })
    }

    pub fn run_all(&mut self) -> Result<Vec<Outcome>> {
        CRITERIA.iter().map(|&(id, _)| self.run(id)).collect()
    }

    fn intensities(&mut self) -> Result<(bool, String)> {
        let lambda = self.params.lambda;
        let speed = self.params.speed;
        let sim = self.simulation()?;
        let mut ok = true;
        let mut parts = Vec::new();
        for (kind, tol) in [(V, 0.02), (S, 0.02), (I, 0.03), (MI, 0.02)] {
            let want = kind.unit_intensity().expect("detected kind") * speed * lambda.sqrt();
            let got = sim.intensity(kind);
            let rel = (got - want) / want;
            ok &= rel.abs() <= tol;
            parts.push(format!("{kind} {got:.5} vs {want:.5} ({:+.2}%)", 100.0 * rel));
        }
        Ok((ok, parts.join("; ")))
    }

    fn distance_laws(&mut self) -> Result<(bool, String)> {
        let n = self.cfg.ks_n;
        let (lambda, seed, h_max) = (self.params.lambda, self.cfg.seed, self.cfg.h_max);
        let params = self.params;
        let sim = self.simulation()?;
        let mut ok = true;
        let mut parts = Vec::new();
        for kind in [V, S, I, MI, T] {
            let law = EpochLaw::new(NamedLaw::conditioning(kind), lambda)?;
            let dynamic: Vec<f64> = sim.of_kind(kind).take(n).map(conditioning_distance).collect();
            let palm: Vec<f64> =
                sample_palm_batch(kind, &params, h_max, n, seed).iter().map(conditioning_distance).collect();
            let d1 = ks_one_sample(&dynamic, |x| law.cdf(x));
            let d2 = ks_one_sample(&palm, |x| law.cdf(x));
            let d12 = ks_two_sample(&dynamic, &palm);
            let crit = critical_1pct_two(dynamic.len(), palm.len());
            let good = dynamic.len() == n && d1 < 0.02 && d2 < 0.02 && d12 < crit;
            ok &= good;
            parts.push(format!(
                "{kind} n={} KS dyn {d1:.4} palm {d2:.4} two-sample {d12:.4}/{crit:.4}",
                dynamic.len()
            ));
        }
        Ok((ok, parts.join("; ")))
    }

    fn uniform_ratios(&mut self) -> Result<(bool, String)> {
        let n = self.cfg.ks_n;
        let (seed, h_max) = (self.cfg.seed, self.cfg.h_max);
        let params = self.params;
        let sim = self.simulation()?;
        let ratio = |e: &Epoch| (e.serving / e.interferers[0]).powi(2);
        let uniform = |x: f64| x.clamp(0.0, 1.0);
        let mut ok = true;
        let mut parts = Vec::new();
        for kind in [I, MI] {
            let dynamic: Vec<f64> = sim.of_kind(kind).take(n).map(ratio).collect();
            let palm: Vec<f64> = sample_palm_batch(kind, &params, h_max, n, seed + 1).iter().map(ratio).collect();
            let d1 = ks_one_sample(&dynamic, uniform);
            let d2 = ks_one_sample(&palm, uniform);
            let (c1, c2) = (critical_1pct(dynamic.len()), critical_1pct(palm.len()));
            ok &= dynamic.len() == n && d1 < c1 && d2 < c2;
            parts.push(format!("{kind} KS dyn {d1:.4}/{c1:.4} palm {d2:.4}/{c2:.4}"));
        }
        Ok((ok, parts.join("; ")))
    }

    fn joint_laplace(&mut self) -> Result<(bool, String)> {
        let n = self.cfg.laplace_n;
        let lambda = self.params.lambda;
        let points = [(0.5, 1.0), (2.0, 0.5), (1.0, 3.0)];
        let mut ok = true;
        let mut parts = Vec::new();
        for kind in [S, I, MI] {
            let batch = sample_palm_batch(kind, &self.params, self.cfg.h_max, n, self.cfg.seed + 2);
            for &(g, b) in &points {
                let vals: Vec<f64> = batch
                    .iter()
                    .map(|e| {
                        let (h, r) = match kind {
                            S => (e.serving, e.interferers.first().copied().unwrap_or(f64::INFINITY)),
                            _ => (e.interferers[0], e.serving),
                        };
                        (-g * h * h - b * r * r).exp()
                    })
                    .collect();
                let (m, se) = mean_se(&vals);
                let want = joint_laplace(kind, g, b, lambda)?;
                let z = (m - want) / se;
                ok &= z.abs() <= 3.0;
                parts.push(format!("{kind}({g},{b}) {m:.5} vs {want:.5} z={z:+.2}"));
            }
        }
        Ok((ok, parts.join("; ")))
    }

    fn fading_closed_forms(&mut self) -> Result<(bool, String)> {
        let params = self.params;
        let seed = self.cfg.seed;
        let h_max = self.cfg.h_max;
        let mut ok = true;
        let mut parts = Vec::new();
        let stated = [(T, 0.56010), (S, 0.74840), (V, 0.20959)];
        let sim = self.simulation()?;
        for (kind, want) in stated {
            let q = MetricQuery::new(kind, Metric::Sir, true, 1.0, params);
            let a = coverage(&q)?.value;
            let tail = truncation_tail(&params, &q.attenuation, h_max, true);
            let est = mc_coverage(sim.of_kind(kind), &q, seed + 3, tail);
            let z = (est.value - a) / est.se;
            let good = (a - want).abs() < 5e-6 && z.abs() <= 3.0 && est.n >= 10_000;
            ok &= good;
            parts.push(format!("{kind} {a:.5} mc {:.5}±{:.5} (n={}, z={z:+.2})", est.value, est.se, est.n));
        }
        let forced = CoverageOptions { force_quadrature: true, ..CoverageOptions::default() };
        let mut worst: f64 = 0.0;
        for tau in db_grid(-10.0, 10.0, 0.5) {
            let p = |k| coverage_with(&MetricQuery::new(k, Metric::Sir, true, tau, params), &forced).map(|r| r.value);
            let (t, s, v) = (p(T)?, p(S)?, p(V)?);
            worst = worst.max((s * s - t).abs()).max(((1.0 + tau) * v - t.powf(1.5)).abs());
        }
        ok &= worst <= 1e-8;
        parts.push(format!("identity gap {worst:.2e}"));
        Ok((ok, parts.join("; ")))
    }

    fn tropical_closed_forms(&mut self) -> Result<(bool, String)> {
        let params = self.params;
        let alpha = params.alpha;
        let seed = self.cfg.seed;
        let forced = CoverageOptions { force_quadrature: true, ..CoverageOptions::default() };
        let mut ok = true;
        let mut parts = Vec::new();
        let mut worst: f64 = 0.0;
        let taus = [2.0, 4.0, 10.0];
        let sim = self.simulation()?;
        for (kind, mult) in [(T, 1.0), (I, 1.0), (MI, 2.0)] {
            for &tau in &taus {
                let q = MetricQuery::new(kind, Metric::Stir, false, tau, params);
                let want = (mult * tau).powf(-2.0 / alpha);
                let a = coverage(&q)?.value;
                let b = coverage_with(&q, &forced)?.value;
                worst = worst.max((a - want).abs());
                ok &= (b - want).abs() < 1e-8;
                let est = mc_coverage(sim.of_kind(kind), &q, seed + 4, 0.0);
                let z = (est.value - want) / est.se;
                ok &= z.abs() <= 3.0;
                parts.push(format!("{kind}@{tau} {want:.5} mc {:.5} z={z:+.2}", est.value));
            }
        }
        ok &= worst == 0.0;
        let q = MetricQuery::new(V, Metric::Stir, false, 1.0, params);
        let handovers: Vec<&Epoch> = sim.of_kind(V).collect();
        let off = handovers.iter().filter(|e| q.evaluate(e.serving, &e.interferers, None, 0.0) != 1.0).count();
        ok &= off == 0 && !handovers.is_empty();
        parts.push(format!("closed-form gap {worst:.1e}; handovers with STIR != 1: {off}/{}", handovers.len()));
        Ok((ok, parts.join("; ")))
    }

    fn ordering_sweep(&mut self) -> Result<(bool, String)> {
        let taus = db_grid(-10.0, 10.0, 0.5);
        let opts = CoverageOptions {
            mc_samples: self.cfg.mc_samples,
            seed: self.cfg.seed + 5,
            h_max: Some(6.0 / self.params.lambda.sqrt()),
            ..CoverageOptions::default()
        };
        let mut ok = true;
        let mut parts = Vec::new();
        for alpha in [3.0, 4.0] {
            for (metric, fading, sigma2) in [
                (Metric::Sir, true, 0.0),
                (Metric::Sinr, true, 1e-6),
                (Metric::Sir, false, 0.0),
                (Metric::Sinr, false, 1e-6),
            ] {
                let params = SystemParams { alpha, sigma2, ..self.params };
                let name = format!("a={alpha} {}{metric}", if fading { "fading " } else { "" });
                let c = coverage_orderings(&name, &MetricQuery::new(T, metric, fading, 1.0, params), &taus, &opts)?;
                ok &= c.passed;
                parts.push(format!("{name}: {} pts {}", c.points, if c.passed { "ok" } else { "VIOLATED" }));
                if let Some(v) = c.violations.first() {
                    parts.push(v.clone());
                }
            }
        }
        let (found, text) = tropical_triple_orders(&self.params, &opts)?;
        ok &= found;
        parts.push(text);
        Ok((ok, parts.join("; ")))
    }

    fn invariance(&mut self) -> Result<(bool, String)> {
        let forced = CoverageOptions { force_quadrature: true, ..CoverageOptions::default() };
        let quiet = SystemParams { sigma2: 0.0, ..self.params };
        let wide = db_grid(-10.0, 10.0, 0.5);
        let coarse = db_grid(-10.0, 10.0, 5.0);
        let mut ok = true;
        let mut parts = Vec::new();
        let cases = [
            (Metric::Sir, true, &wide),
            (Metric::Stir, true, &coarse),
            (Metric::Stir, false, &wide),
        ];
        for (metric, fading, taus) in cases {
            let q = MetricQuery::new(T, metric, fading, 1.0, quiet);
            let gl = scale_invariance(&q, &EpochKind::ALL, taus, (0.1, 10.0), &forced)?;
            ok &= gl < 1e-6;
            let mut text = format!("{}{metric} lambda gap {gl:.1e}", if fading { "fading " } else { "" });
            if fading {
                let gm = mu_gap(&q, taus, (0.5, 2.0), &forced)?;
                ok &= gm < 1e-6;
                text.push_str(&format!(" mu gap {gm:.1e}"));
            }
            parts.push(text);
        }
        let mut q = MetricQuery::new(T, Metric::Sir, true, 1.0, quiet);
        q.attenuation = Attenuation::Bounded { alpha: quiet.alpha };
        let gb = scale_invariance(&q, &EpochKind::ALL, &coarse, (0.1, 10.0), &CoverageOptions::default())?;
        ok &= gb > 1e-5;
        parts.push(format!("bounded lambda gap {gb:.3e}"));
        Ok((ok, parts.join("; ")))
    }

    fn rate(&mut self) -> Result<(bool, String)> {
        let params = SystemParams { sigma2: 0.0, alpha: 4.0, ..self.params };
        let q = MetricQuery::new(T, Metric::Stir, false, 1.0, params);
        let r = shannon_rate(&q, &CoverageOptions::default())?.value;
        let want = params.bandwidth * (LN_2 + PI / 2.0);
        let window = SimulationWindow { t_obs: self.cfg.rate_t_obs, seed: self.cfg.seed + 6, ..self.cfg.window() };
        let heads = sample_heads(&params, &window)?;
        let n = (20.0 * window.t_obs) as usize;
        let sim = mean_timeseries_rate(&heads, &params, &window, n)?;
        let rel = (sim - want) / want;
        let ok = (r - want).abs() < 1e-6 && rel.abs() < 0.02;
        Ok((ok, format!("analytic {r:.9} vs {want:.9}; time average {sim:.5} ({:+.2}%)", 100.0 * rel)))
    }

    fn interference_order(&mut self) -> Result<(bool, String)> {
        let grid: Vec<f64> = (-4..=4).map(|i| 10f64.powf(i as f64 / 2.0)).collect();
        let (lt, cdf) = interference_orderings(&self.params, &grid);
        let mut ok = lt.passed && cdf.passed;
        let mut parts = vec![
            format!("{}: {}/{} violated", lt.name, lt.violations.len(), lt.points),
            format!("{}: {}/{} violated", cdf.name, cdf.violations.len(), cdf.points),
        ];
        if let Some(v) = lt.violations.first().or(cdf.violations.first()) {
            parts.push(format!("e.g. {v}"));
        }
        let (spot_ok, spot) = self.interference_spot_checks()?;
        ok &= spot_ok;
        parts.push(spot);
        Ok((ok, parts.join("; ")))
    }

    /// Palm Monte Carlo of `E[e^{-γI}]` at three `γ` per kind.
    fn interference_spot_checks(&self) -> Result<(bool, String)> {
        let params = self.params;
        let n = self.cfg.laplace_n / 5;
        let h_max = self.cfg.h_max;
        let tail = truncation_tail(&params, &Attenuation::PowerLaw { alpha: params.alpha }, h_max, true);
        let mut worst: f64 = 0.0;
        for kind in EpochKind::ALL {
            let mut rng = rng_for(self.cfg.seed + 7, kind as u64);
            let exp = rand_distr::Exp::new(params.mu).map_err(|e| invalid("mu", e.to_string()))?;
            let fields: Vec<f64> = (0..n)
                .map(|_| {
                    let e = sample_palm_config(kind, &params, h_max, &mut rng);
                    let att = Attenuation::PowerLaw { alpha: params.alpha };
                    e.interferers
                        .iter()
                        .map(|&r| rand_distr::Distribution::sample(&exp, &mut rng) * att.gain(r))
                        .sum::<f64>()
                        + tail
                })
                .collect();
            for g in [0.1, 0.3, 1.0] {
                let vals: Vec<f64> = fields.iter().map(|i| (-g * i).exp()).collect();
                let (m, se) = mean_se(&vals);
                let want = interference_lt(kind, g, &params);
                worst = worst.max((m - want).abs() / se.max(1e-12));
            }
        }
        Ok((worst <= 3.0, format!("Palm MC spot checks max |z| = {worst:.2}")))
    }

    fn step_counterexample(&mut self) -> Result<(bool, String)> {
        let taus = db_grid(-10.0, 10.0, 2.5);
        let opts = CoverageOptions {
            mc_samples: self.cfg.mc_samples,
            seed: self.cfg.seed + 8,
            ..CoverageOptions::default()
        };
        let mut best_pos = f64::NEG_INFINITY;
        let mut found = None;
        for fading in [true, false] {
            for d in [0.5, 1.0, 2.0, 3.0] {
                let diffs = step_differences(&self.params, 1.0, d, Metric::Sir, fading, &taus, &opts)?;
                let z: Vec<(f64, f64)> =
                    diffs.iter().filter(|x| x.2 > 0.0).map(|&(tau, dv, se)| (tau, dv / se)).collect();
                let pos = z.iter().copied().fold((f64::NAN, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
                let neg = z.iter().copied().fold((f64::NAN, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
                best_pos = best_pos.max(pos.1);
                if pos.1 > 3.0 && neg.1 < -3.0 && found.is_none() {
                    found = Some(format!("fading={fading} d={d}: tau {} z={:+.1}, tau {} z={:+.1}", pos.0, pos.1, neg.0, neg.1));
                }
            }
        }
        Ok(match found {
            Some(text) => (true, text),
            None => (
                false,
                format!(
                    "no sign change of p_V - p_t found over fading/no-fading, d in {{0.5,1,2,3}}, {} thresholds; largest z of p_V - p_t = {best_pos:+.2}",
                    taus.len()
                ),
            ),
        })
    }
}

fn conditioning_distance(e: &Epoch) -> f64 {
    match e.kind {
        EpochKind::MaxInterference | EpochKind::MinInterference => e.interferers[0],
        _ => e.serving,
    }
}

fn mean_se(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let m = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}

/// Linear thresholds for `start:stop:step` in dB, inclusive.
pub fn db_grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| 10f64.powf((start + step * i as f64) / 10.0)).collect()
}

fn mu_gap(q: &MetricQuery, taus: &[f64], mus: (f64, f64), opts: &CoverageOptions) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for k in EpochKind::ALL {
        for &tau in taus {
            let at = |mu: f64| {
                let mut x = q.with_kind(k).with_tau(tau);
                x.params.mu = mu;
                coverage_with(&x, opts).map(|r| r.value)
            };
            worst = worst.max((at(mus.0)? - at(mus.1)?).abs());
        }
    }
    Ok(worst)
}

/// Searches for two parameter sets under which some pair of the
/// handover, typical and max-signal no-fading STIR coverages is ordered
/// oppositely.
pub fn tropical_triple_orders(params: &SystemParams, opts: &CoverageOptions) -> Result<(bool, String)> {
    let kinds = [V, T, S];
    let mut sets: Vec<(String, [f64; 3], f64)> = Vec::new();
    for alpha in [2.5, 3.0, 4.0, 6.0] {
        for sigma2 in [0.0, 0.1, 1.0] {
            let p = SystemParams { alpha, sigma2, ..*params };
            for tau in db_grid(-10.0, 10.0, 2.5) {
                let mut v = [0.0; 3];
                for (i, &k) in kinds.iter().enumerate() {
                    v[i] = coverage(&MetricQuery::new(k, Metric::Stinr, false, tau, p))?.value;
                }
                sets.push((format!("power-law a={alpha} s2={sigma2} tau={tau:.3}"), v, 1e-8));
            }
        }
    }
    for d in [0.5, 1.0, 2.0] {
        let mut q = MetricQuery::new(V, Metric::Stir, false, 1.0, SystemParams { sigma2: 0.0, ..*params });
        q.attenuation = Attenuation::Step { p: 1.0, d };
        for tau in [0.5, 2.0] {
            let mut v = [0.0; 3];
            let mut se: f64 = 0.0;
            for (i, &k) in kinds.iter().enumerate() {
                let r = coverage_curve(&q.with_kind(k), &[tau], opts)?[0];
                v[i] = r.value;
                se = se.max(r.err);
            }
            sets.push((format!("step d={d} tau={tau}"), v, 3.0 * 2f64.sqrt() * se));
        }
    }
    let names = ["p_V", "p_t", "p_S"];
    let power_law_ordered = sets
        .iter()
        .filter(|s| s.0.starts_with("power"))
        .all(|s| s.1[0] <= s.1[1] + s.2 && s.1[1] <= s.1[2] + s.2);
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let above = sets.iter().find(|s| s.1[i] > s.1[j] + s.2);
        let below = sets.iter().find(|s| s.1[j] > s.1[i] + s.2);
        if let (Some(a), Some(b)) = (above, below) {
            return Ok((
                true,
                format!(
                    "opposite orders of {} and {}: {} ({:.4} > {:.4}) vs {} ({:.4} < {:.4}); power-law sets all ordered p_V <= p_t <= p_S: {}",
                    names[i], names[j], a.0, a.1[i], a.1[j], b.0, b.1[i], b.1[j], power_law_ordered
                ),
            ));
        }
    }
    Ok((false, format!("no opposite orderings among {} parameter sets", sets.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_grid_is_inclusive() {
        let g = db_grid(-10.0, 10.0, 0.5);
        assert_eq!(g.len(), 41);
        assert!((g[0] - 0.1).abs() < 1e-15 && (g[40] - 10.0).abs() < 1e-12);
        assert_eq!(db_grid(0.0, 0.0, 1.0), vec![1.0]);
    }

    #[test]
    fn unknown_criterion_is_an_error() {
        let mut lab = Lab::new(ValidationConfig::quick()).unwrap();
        assert!(lab.run(12).is_err());
    }
}
