//! Space-time Monte Carlo over the head point process.
//!
//! Heads are Poisson on `[-h_max/v, t_obs + h_max/v] × (0, h_max]` with
//! intensity `2λv` per second per meter. Detection works on unit-speed
//! coordinates `t' = v·t` and converts times back at the boundary.

use rand::Rng;
use rand_distr::{Distribution, Exp, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::geometry::{bird_distance, bird_intersection, inside_halfball, Head, SpaceTimePoint};
use crate::model::{Attenuation, Epoch, EpochKind, MetricQuery, SystemParams};
use crate::numerics::{derive_seed, rng_for, SimRng};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulationWindow {
    /// Observation length in seconds.
    pub t_obs: f64,
    /// Distance cutoff in meters.
    pub h_max: f64,
    pub seed: u64,
    /// Epochs above `safety·h_max` are discarded.
    pub safety: f64,
}

impl Default for SimulationWindow {
    fn default() -> Self {
        SimulationWindow {
            t_obs: 1000.0,
            h_max: 8.0,
            seed: 7,
            safety: 0.9,
        }
    }
}

impl SimulationWindow {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_obs > 0.0) || !self.t_obs.is_finite() {
            return Err(invalid("t_obs", "observation window must be > 0"));
        }
        if !(self.h_max > 0.0) || !self.h_max.is_finite() {
            return Err(invalid("h_max", "distance cutoff must be > 0"));
        }
        if !(self.safety > 0.0 && self.safety <= 1.0) {
            return Err(invalid("safety", "safety margin must be in (0, 1]"));
        }
        Ok(())
    }

    /// The same window under the seed of replication `rep`.
    pub fn replication(&self, rep: u64) -> SimulationWindow {
        SimulationWindow {
            seed: derive_seed(self.seed, rep),
            ..*self
        }
    }
}

const HEAD_STREAM: u64 = 0;
const TYPICAL_STREAM: u64 = 1;
const MARK_STREAM: u64 = 2;

/// Heads of all stations that come within `h_max` during `[0, t_obs]`,
/// sorted by `t_min` (seconds).
pub fn sample_heads(params: &SystemParams, window: &SimulationWindow) -> Result<Vec<Head>> {
    window.validate()?;
    if !(params.lambda >= 0.0) || !(params.speed > 0.0) {
        return Err(invalid("lambda", "intensity must be >= 0 and speed > 0"));
    }
    if params.lambda == 0.0 {
        return Ok(Vec::new());
    }
    let mut rng = rng_for(window.seed, HEAD_STREAM);
    let v = params.speed;
    let t0 = -window.h_max / v;
    let extent = window.t_obs + 2.0 * window.h_max / v;
    let mean = 2.0 * params.lambda * v * extent * window.h_max;
    let n = Poisson::new(mean)
        .map_err(|e| invalid("lambda", e.to_string()))?
        .sample(&mut rng) as usize;
    let mut heads: Vec<Head> = (0..n)
        .map(|_| {
            let t = t0 + extent * rng.random::<f64>();
            let h = window.h_max * (1.0 - rng.random::<f64>());
            Head::new(t, h)
        })
        .collect();
    heads.sort_by(|a, b| a.t_min.total_cmp(&b.t_min));
    Ok(heads)
}

/// Sorted distances `bird_distance(g, s) <= cutoff` over all heads.
pub fn crossings_at(heads: &[Head], s: f64, cutoff: f64, speed: f64) -> Vec<f64> {
    let mut d: Vec<f64> = heads
        .iter()
        .map(|g| bird_distance(g, s, speed))
        .filter(|&d| d <= cutoff)
        .collect();
    d.sort_by(f64::total_cmp);
    d
}

/// Unit-speed heads sorted by abscissa with range lookups.
struct Sky {
    heads: Vec<Head>,
}

impl Sky {
    fn new(heads: &[Head], speed: f64) -> Sky {
        let mut hs: Vec<Head> = heads.iter().map(|g| Head::new(g.t_min * speed, g.h_min)).collect();
        hs.sort_by(|a, b| a.t_min.total_cmp(&b.t_min));
        Sky { heads: hs }
    }

    /// Index range of heads with `t_min` in `[lo, hi]`.
    fn range(&self, lo: f64, hi: f64) -> std::ops::Range<usize> {
        let a = self.heads.partition_point(|g| g.t_min < lo);
        let b = self.heads.partition_point(|g| g.t_min <= hi);
        a..b.max(a)
    }

    /// `(distance, index)` of birds below `cutoff` at `s`, sorted.
    fn crossings(&self, s: f64, cutoff: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = self
            .range(s - cutoff, s + cutoff)
            .filter_map(|i| {
                let d = bird_distance(&self.heads[i], s, 1.0);
                (d <= cutoff).then_some((d, i))
            })
            .collect();
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    /// Third-lowest crossing at `s`, capped at `cap`.
    fn third_lowest(&self, s: f64, start: f64, cap: f64) -> f64 {
        let mut r = start.min(cap);
        loop {
            let c = self.crossings(s, r);
            if c.len() >= 3 {
                return c[2].0;
            }
            if r >= cap {
                return cap;
            }
            r = (2.0 * r).min(cap);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Raw {
    /// Intersection of birds `a`, `b`; `inside` is the head in the half-ball.
    Cross { a: usize, b: usize, at: SpaceTimePoint, inside: Option<usize> },
    /// Head `a`; `inside` is the head in its half-ball.
    Top { a: usize, inside: Option<usize> },
}

/// Detects all four epoch kinds in one sweep over cells of width `w`.
///
/// Within a cell the third lower envelope is at most `L3(mid) + w/2`
/// (every envelope is 1-Lipschitz), so any bird that can lie below an
/// epoch point in the cell belongs to a short candidate list on which the
/// half-ball census is exact.
fn detect_raw(sky: &Sky, t_end: f64, h_cap: f64, lambda: f64) -> Vec<Raw> {
    let w = 0.5 / lambda.sqrt();
    let start = 2.0 / lambda.sqrt();
    let n_cells = (t_end / w).ceil().max(1.0) as usize;
    let mut out = Vec::new();
    let mut cand: Vec<usize> = Vec::new();
    for c in 0..n_cells {
        let a = c as f64 * w;
        let b = if c + 1 == n_cells { t_end } else { (c + 1) as f64 * w };
        let last = c + 1 == n_cells;
        let in_cell = |s: f64| s >= a && (s < b || (last && s <= b));
        let mid = 0.5 * (a + b);
        let bound = (sky.third_lowest(mid, start, h_cap + w) + 0.5 * (b - a)).min(h_cap);

        cand.clear();
        for i in sky.range(a - bound, b + bound) {
            let g = &sky.heads[i];
            let gap = if g.t_min < a {
                a - g.t_min
            } else if g.t_min > b {
                g.t_min - b
            } else {
                0.0
            };
            if gap.hypot(g.h_min) <= bound {
                cand.push(i);
            }
        }

        let census = |p: &SpaceTimePoint, skip: &[usize]| -> (usize, Option<usize>) {
            let mut count = 0;
            let mut who = None;
            for &k in cand.iter() {
                if !skip.contains(&k) && inside_halfball(&sky.heads[k], p) {
                    count += 1;
                    who = Some(k);
                    if count > 1 {
                        break;
                    }
                }
            }
            (count, who)
        };

        for (x, &i) in cand.iter().enumerate() {
            let g = &sky.heads[i];
            if in_cell(g.t_min) && g.h_min <= bound {
                let p = SpaceTimePoint { s: g.t_min, h: g.h_min };
                match census(&p, &[i]) {
                    (0, _) => out.push(Raw::Top { a: i, inside: None }),
                    (1, who) => out.push(Raw::Top { a: i, inside: who }),
                    _ => {}
                }
            }
            for &j in cand[x + 1..].iter() {
                let Ok(Some(p)) = bird_intersection(g, &sky.heads[j]) else {
                    continue;
                };
                if !in_cell(p.s) || p.h > bound {
                    continue;
                }
                match census(&p, &[i, j]) {
                    (0, _) => out.push(Raw::Cross { a: i, b: j, at: p, inside: None }),
                    (1, who) => out.push(Raw::Cross { a: i, b: j, at: p, inside: who }),
                    _ => {}
                }
            }
        }
    }
    out
}

fn build_epoch(sky: &Sky, raw: &Raw, h_max: f64, speed: f64) -> Epoch {
    match *raw {
        Raw::Cross { a, b, at, inside } => {
            let mut skip = vec![a, b];
            let (kind, serving, mut interferers) = match inside {
                None => (EpochKind::MinSigMaxInt, at.h, vec![at.h]),
                Some(k) => {
                    skip.push(k);
                    let serving = bird_distance(&sky.heads[k], at.s, 1.0);
                    (EpochKind::MinInterference, serving, vec![at.h, at.h])
                }
            };
            interferers.extend(
                sky.crossings(at.s, h_max)
                    .into_iter()
                    .filter(|(_, i)| !skip.contains(i))
                    .map(|(d, _)| d),
            );
            Epoch { kind, time: at.s / speed, serving, interferers }
        }
        Raw::Top { a, inside } => {
            let g = sky.heads[a];
            let mut skip = vec![a];
            let (kind, serving, mut interferers) = match inside {
                None => (EpochKind::MaxSignal, g.h_min, vec![]),
                Some(k) => {
                    skip.push(k);
                    let serving = bird_distance(&sky.heads[k], g.t_min, 1.0);
                    (EpochKind::MaxInterference, serving, vec![g.h_min])
                }
            };
            interferers.extend(
                sky.crossings(g.t_min, h_max)
                    .into_iter()
                    .filter(|(_, i)| !skip.contains(i))
                    .map(|(d, _)| d),
            );
            Epoch { kind, time: g.t_min / speed, serving, interferers }
        }
    }
}

/// All epochs of the four detected kinds, sorted by time.
pub fn detect_all(heads: &[Head], params: &SystemParams, window: &SimulationWindow) -> Result<Vec<Epoch>> {
    window.validate()?;
    params.validate()?;
    let sky = Sky::new(heads, params.speed);
    let t_end = window.t_obs * params.speed;
    let h_cap = window.safety * window.h_max;
    let raws = detect_raw(&sky, t_end, h_cap, params.lambda);
    let mut epochs: Vec<Epoch> = raws
        .iter()
        .map(|r| build_epoch(&sky, r, window.h_max, params.speed))
        .collect();
    epochs.sort_by(|a, b| a.time.total_cmp(&b.time));
    Ok(epochs)
}

/// Epochs of one kind. `TypicalTime` is not detected; see [`typical_epochs`].
pub fn detect_epochs(
    heads: &[Head],
    params: &SystemParams,
    window: &SimulationWindow,
    kind: EpochKind,
) -> Result<Vec<Epoch>> {
    if kind == EpochKind::TypicalTime {
        return Err(invalid("kind", "typical times are sampled, not detected"));
    }
    Ok(detect_all(heads, params, window)?
        .into_iter()
        .filter(|e| e.kind == kind)
        .collect())
}

/// Configurations at `count` i.i.d. uniform times in `[0, t_obs]`.
pub fn typical_epochs(
    heads: &[Head],
    params: &SystemParams,
    window: &SimulationWindow,
    count: usize,
) -> Result<Vec<Epoch>> {
    let sky = Sky::new(heads, params.speed);
    let mut rng = rng_for(window.seed, TYPICAL_STREAM);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let t = window.t_obs * rng.random::<f64>();
        let c = sky.crossings(t * params.speed, window.h_max);
        if c.is_empty() {
            return Err(Error::TooFewCrossings { time: t });
        }
        out.push(Epoch {
            kind: EpochKind::TypicalTime,
            time: t,
            serving: c[0].0,
            interferers: c[1..].iter().map(|x| x.0).collect(),
        });
    }
    Ok(out)
}

/// One row of the tropical rate time series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatePoint {
    pub time: f64,
    pub l1: f64,
    pub l2: f64,
    pub rate: f64,
}

/// `B·ln(1 + (L₂/L₁)^α)` from the two nearest stations at each time.
pub fn shannon_timeseries(
    heads: &[Head],
    params: &SystemParams,
    window: &SimulationWindow,
    times: &[f64],
) -> Result<Vec<RatePoint>> {
    if times.is_empty() {
        return Err(invalid("times", "need at least one time"));
    }
    let sky = Sky::new(heads, params.speed);
    times
        .iter()
        .map(|&t| {
            if !(0.0..=window.t_obs).contains(&t) {
                return Err(invalid("times", format!("time {t} outside [0, t_obs]")));
            }
            let c = sky.crossings(t * params.speed, window.h_max);
            if c.len() < 2 {
                return Err(Error::TooFewCrossings { time: t });
            }
            let (l1, l2) = (c[0].0, c[1].0);
            let rate = params.bandwidth * (l2 / l1).powf(params.alpha).ln_1p();
            Ok(RatePoint { time: t, l1, l2, rate })
        })
        .collect()
}

/// Exact time average of the tropical rate over `[0, t_obs]` estimated on
/// `n` stratified uniform times.
pub fn mean_timeseries_rate(
    heads: &[Head],
    params: &SystemParams,
    window: &SimulationWindow,
    n: usize,
) -> Result<f64> {
    let mut rng = rng_for(window.seed, TYPICAL_STREAM + 16);
    let step = window.t_obs / n as f64;
    let times: Vec<f64> = (0..n).map(|i| step * (i as f64 + rng.random::<f64>())).collect();
    let pts = shannon_timeseries(heads, params, window, &times)?;
    Ok(pts.iter().map(|p| p.rate).sum::<f64>() / n as f64)
}

/// Output of a multi-replication simulation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Simulation {
    pub params: SystemParams,
    pub window: SimulationWindow,
    pub replications: usize,
    /// Total observed time over all replications.
    pub total_time: f64,
    pub epochs: Vec<Epoch>,
}

impl Simulation {
    pub fn of_kind(&self, kind: EpochKind) -> impl Iterator<Item = &Epoch> {
        self.epochs.iter().filter(move |e| e.kind == kind)
    }

    pub fn count(&self, kind: EpochKind) -> usize {
        self.of_kind(kind).count()
    }

    pub fn intensity(&self, kind: EpochKind) -> f64 {
        self.count(kind) as f64 / self.total_time
    }

    pub fn serving(&self, kind: EpochKind) -> Vec<f64> {
        self.of_kind(kind).map(|e| e.serving).collect()
    }
}

/// Runs `replications` independent windows (seeds derived from
/// `window.seed`) in parallel; `typical` uniform times are drawn per
/// replication. Results are merged in replication order.
pub fn simulate(
    params: &SystemParams,
    window: &SimulationWindow,
    replications: usize,
    typical: usize,
) -> Result<Simulation> {
    params.validate()?;
    window.validate()?;
    let parts: Result<Vec<Vec<Epoch>>> = (0..replications.max(1) as u64)
        .into_par_iter()
        .map(|rep| {
            let w = window.replication(rep);
            let heads = sample_heads(params, &w)?;
            let mut e = detect_all(&heads, params, &w)?;
            e.extend(typical_epochs(&heads, params, &w, typical)?);
            Ok(e)
        })
        .collect();
    let epochs = parts?.into_iter().flatten().collect();
    Ok(Simulation {
        params: *params,
        window: *window,
        replications: replications.max(1),
        total_time: window.t_obs * replications.max(1) as f64,
        epochs,
    })
}

/// Coverage estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageEstimate {
    pub value: f64,
    pub se: f64,
    pub n: usize,
}

impl CoverageEstimate {
    pub fn from_hits(hits: usize, n: usize) -> Self {
        let p = if n == 0 { f64::NAN } else { hits as f64 / n as f64 };
        CoverageEstimate {
            value: p,
            se: (p * (1.0 - p) / n as f64).sqrt(),
            n,
        }
    }
}

/// Deterministic mean of the power-law interference beyond `h_max`.
pub fn truncation_tail(params: &SystemParams, att: &Attenuation, h_max: f64, fading: bool) -> f64 {
    match *att {
        Attenuation::PowerLaw { alpha } if alpha > 2.0 => {
            let mean_mark = if fading { 1.0 / params.mu } else { 1.0 };
            2.0 * std::f64::consts::PI * params.lambda * h_max.powf(2.0 - alpha) / (alpha - 2.0) * mean_mark
        }
        Attenuation::PowerLaw { .. } => f64::INFINITY,
        Attenuation::Bounded { alpha } if alpha > 2.0 => {
            let mean_mark = if fading { 1.0 / params.mu } else { 1.0 };
            let a = 1.0 + h_max;
            // ∫_{h}^∞ (1+r)^{-α} r dr
            let int = a.powf(2.0 - alpha) / (alpha - 2.0) - a.powf(1.0 - alpha) / (alpha - 1.0);
            2.0 * std::f64::consts::PI * params.lambda * int * mean_mark
        }
        Attenuation::Bounded { .. } => f64::INFINITY,
        Attenuation::Step { p, d } => {
            if d <= h_max {
                0.0
            } else {
                let mean_mark = if fading { 1.0 / params.mu } else { 1.0 };
                std::f64::consts::PI * params.lambda * (d * d - h_max * h_max) * p * mean_mark
            }
        }
    }
}

/// Statistics of the epochs of `query.kind`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpochStatistics {
    pub kind: EpochKind,
    pub count: usize,
    pub intensity: f64,
    pub serving: Vec<f64>,
    pub nearest_interferer: Vec<f64>,
    pub coverage: Option<CoverageEstimate>,
    /// Mean interference ignored by the cutoff (added back when requested).
    pub truncation_tail: f64,
}

/// Intensity, distance samples and coverage at the epochs of `query.kind`.
/// Fading marks are drawn afresh per epoch from a stream keyed by `seed`.
pub fn epoch_statistics(
    sim: &Simulation,
    query: &MetricQuery,
    seed: u64,
    tail_correction: bool,
) -> Result<EpochStatistics> {
    query.validate()?;
    let additive = query.metric.uses_interference() && !query.metric.tropical();
    if let Attenuation::PowerLaw { alpha } = query.attenuation {
        if additive && alpha <= 2.0 && !query.metric.uses_noise() {
            return Err(invalid("alpha", "additive interference diverges for alpha <= 2"));
        }
    }
    let epochs: Vec<&Epoch> = sim.of_kind(query.kind).collect();
    let tail = truncation_tail(&query.params, &query.attenuation, sim.window.h_max, query.fading);
    let applied = if tail_correction && additive { tail } else { 0.0 };
    let coverage = if epochs.is_empty() {
        None
    } else {
        Some(mc_coverage(epochs.iter().copied(), query, seed, applied))
    };
    Ok(EpochStatistics {
        kind: query.kind,
        count: epochs.len(),
        intensity: epochs.len() as f64 / sim.total_time,
        serving: epochs.iter().map(|e| e.serving).collect(),
        nearest_interferer: epochs.iter().filter_map(|e| e.interferers.first().copied()).collect(),
        coverage,
        truncation_tail: tail,
    })
}

/// Fraction of configurations whose metric exceeds `query.tau`.
pub fn mc_coverage<'a, I: Iterator<Item = &'a Epoch>>(
    epochs: I,
    query: &MetricQuery,
    seed: u64,
    tail: f64,
) -> CoverageEstimate {
    let mut rng = rng_for(seed, MARK_STREAM);
    let mut marks = Vec::new();
    let (mut hits, mut n) = (0usize, 0usize);
    for e in epochs {
        let v = metric_value(e, query, &mut rng, &mut marks, tail);
        n += 1;
        if v > query.tau {
            hits += 1;
        }
    }
    CoverageEstimate::from_hits(hits, n)
}

/// Metric of one configuration, drawing fresh marks if fading is on.
pub fn metric_value(e: &Epoch, query: &MetricQuery, rng: &mut SimRng, marks: &mut Vec<f64>, tail: f64) -> f64 {
    if query.fading {
        let exp = Exp::new(query.params.mu).expect("mu validated");
        marks.clear();
        marks.extend((0..=e.interferers.len()).map(|_| exp.sample(rng)));
        query.evaluate(e.serving, &e.interferers, Some(marks), tail)
    } else {
        query.evaluate(e.serving, &e.interferers, None, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> SystemParams {
        SystemParams::default()
    }

    fn win(t_obs: f64, h_max: f64) -> SimulationWindow {
        SimulationWindow { t_obs, h_max, seed: 1, safety: 0.9 }
    }

    #[test]
    fn toy_handover() {
        let heads = [Head::new(-1.0, 1.0), Head::new(1.0, 1.0)];
        let e = detect_all(&heads, &unit(), &win(0.5, 8.0)).unwrap();
        assert_eq!(e.len(), 1);
        let h: Vec<&Epoch> = e.iter().filter(|e| e.kind == EpochKind::MinSigMaxInt).collect();
        assert_eq!(h.len(), 1);
        assert!(h[0].time.abs() < 1e-15 && (h[0].serving - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(h[0].interferers, vec![h[0].serving]);
    }

    #[test]
    fn toy_tropical_handover() {
        let heads = [Head::new(-1.0, 1.0), Head::new(1.0, 1.0), Head::new(0.0, 0.5)];
        let e = detect_epochs(&heads, &unit(), &win(0.5, 8.0), EpochKind::MinInterference).unwrap();
        assert_eq!(e.len(), 1);
        assert!((e[0].serving - 0.5).abs() < 1e-15);
        assert_eq!(e[0].interferers[0], e[0].interferers[1]);
        let ms = detect_epochs(&heads, &unit(), &win(0.5, 8.0), EpochKind::MaxSignal).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].serving, 0.5);
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossings_at(&[Head::new(0.0, 1.0)], 0.0, 2.0, 1.0), vec![1.0]);
        let c = crossings_at(&[Head::new(0.0, 1.0), Head::new(0.5, 0.2)], 0.5, 2.0, 1.0);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0], 0.2);
        assert!((c[1] - 1.25f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn head_count_mean() {
        let p = unit();
        let w = win(10.0 - 10.0, 5.0);
        assert!(w.validate().is_err());
        let w = win(1.0, 2.5);
        // extent 1 + 5 = 6, mean 2·6·2.5 = 30
        let n: usize = (0..2000).map(|s| sample_heads(&p, &w.replication(s)).unwrap().len()).sum();
        let mean = n as f64 / 2000.0;
        assert!((mean - 30.0).abs() < 4.0 * (30.0f64 / 2000.0).sqrt(), "{mean}");
        let zero = SystemParams { lambda: 0.0, ..p };
        assert!(sample_heads(&zero, &w).unwrap().is_empty());
    }

    #[test]
    fn brute_force_agreement() {
        let p = SystemParams { lambda: 0.5, ..unit() };
        let w = SimulationWindow { t_obs: 60.0, h_max: 6.0, seed: 11, safety: 0.9 };
        let heads = sample_heads(&p, &w).unwrap();
        let fast = detect_all(&heads, &p, &w).unwrap();
        let mut slow = Vec::new();
        let cap = 0.9 * 6.0;
        for i in 0..heads.len() {
            let g = heads[i];
            if (0.0..=60.0).contains(&g.t_min) && g.h_min <= cap {
                let c = crate::geometry::halfball_census(&heads, &SpaceTimePoint { s: g.t_min, h: g.h_min }, &[i]);
                if c <= 1 {
                    slow.push((g.t_min, c));
                }
            }
            for j in i + 1..heads.len() {
                if let Ok(Some(q)) = bird_intersection(&g, &heads[j]) {
                    if (0.0..=60.0).contains(&q.s) && q.h <= cap {
                        let c = crate::geometry::halfball_census(&heads, &q, &[i, j]);
                        if c <= 1 {
                            slow.push((q.s, c + 10));
                        }
                    }
                }
            }
        }
        assert_eq!(fast.len(), slow.len());
    }

    #[test]
    fn handover_stir_is_one() {
        let p = unit();
        let w = win(200.0, 8.0);
        let heads = sample_heads(&p, &w).unwrap();
        let q = MetricQuery::new(EpochKind::MinSigMaxInt, crate::model::Metric::Stir, false, 1.0, p);
        let mut rng = rng_for(0, 0);
        let mut m = Vec::new();
        for e in detect_epochs(&heads, &p, &w, EpochKind::MinSigMaxInt).unwrap() {
            assert_eq!(metric_value(&e, &q, &mut rng, &mut m, 0.0), 1.0);
        }
    }
}
