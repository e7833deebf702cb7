//! Coverage probabilities `P(metric > τ)` under the Palm law of each epoch.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::analytic::integrals::{k_alpha, kappa, m_bounded};
use crate::dynamics::truncation_tail;
use crate::error::Result;
use crate::model::{Attenuation, EpochKind, Metric, MetricQuery, SystemParams};
use crate::numerics::{derive_seed, integrate_lenient, rng_for, Quad, QuadSpec};
use rayon::prelude::*;
use crate::palm::{joint_laplace, sample_palm_config, EpochLaw, NamedLaw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    PalmMc,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Quadrature => "quadrature",
            Method::PalmMc => "palm-mc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageResult {
    pub value: f64,
    pub method: Method,
    /// Absolute error estimate (standard error for `PalmMc`).
    pub err: f64,
}

/// Numerical knobs for [`coverage_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CoverageOptions {
    /// Absolute tolerance of the innermost quadrature.
    pub tol: f64,
    pub mc_samples: usize,
    pub seed: u64,
    /// Distance cutoff of Palm samples; `None` picks `10/sqrt(λ)`.
    pub h_max: Option<f64>,
    /// Add the mean interference beyond the cutoff to additive metrics.
    pub tail_correction: bool,
    /// Integrate over the distance laws even when a closed form exists.
    pub force_quadrature: bool,
}

impl Default for CoverageOptions {
    fn default() -> Self {
        CoverageOptions {
            tol: 1e-10,
            mc_samples: 200_000,
            seed: 7,
            h_max: None,
            tail_correction: true,
            force_quadrature: false,
        }
    }
}

impl CoverageOptions {
    fn inner(&self) -> QuadSpec {
        QuadSpec::with_tol(self.tol)
    }

    fn outer(&self) -> QuadSpec {
        QuadSpec::with_tol(10.0 * self.tol)
    }

    pub fn cutoff(&self, q: &MetricQuery) -> f64 {
        let base = self.h_max.unwrap_or(10.0 / q.params.lambda.sqrt());
        match q.attenuation {
            Attenuation::Step { d, .. } => base.max(1.5 * d),
            _ => base,
        }
    }
}

pub fn coverage(query: &MetricQuery) -> Result<CoverageResult> {
    coverage_with(query, &CoverageOptions::default())
}

pub fn coverage_with(q: &MetricQuery, opts: &CoverageOptions) -> Result<CoverageResult> {
    q.validate()?;
    let fading = q.fading;
    let metric = q.metric;
    match q.attenuation {
        Attenuation::PowerLaw { alpha } => {
            if metric == Metric::Snr {
                return if fading { snr_fading(q, alpha, opts) } else { snr_plain(q, alpha) };
            }
            if !metric.tropical() && alpha <= 2.0 {
                return Ok(CoverageResult { value: 0.0, method: Method::ClosedForm, err: 0.0 });
            }
            match (fading, metric.tropical()) {
                (true, false) => fading_additive(q, alpha, opts),
                (true, true) => fading_tropical(q, alpha, opts),
                (false, true) => plain_tropical(q, alpha, opts),
                (false, false) => palm_mc(q, opts),
            }
        }
        Attenuation::Bounded { alpha } if fading && metric.uses_interference() && !metric.tropical() => {
            fading_additive_bounded(q, alpha, opts)
        }
        _ => palm_mc(q, opts),
    }
}

/// Coverage over a grid of thresholds; Palm Monte Carlo reuses one sample.
pub fn coverage_curve(q: &MetricQuery, taus: &[f64], opts: &CoverageOptions) -> Result<Vec<CoverageResult>> {
    let probe = q.with_tau(taus.first().copied().unwrap_or(1.0));
    let first = coverage_with(&probe, opts)?;
    if first.method == Method::PalmMc {
        let mut values = palm_metric_samples(q, opts);
        values.sort_by(f64::total_cmp);
        let n = values.len() as f64;
        return Ok(taus
            .iter()
            .map(|&t| {
                let above = values.len() - values.partition_point(|&v| v <= t);
                let p = above as f64 / n;
                CoverageResult { value: p, method: Method::PalmMc, err: (p * (1.0 - p) / n).sqrt() }
            })
            .collect());
    }
    taus.iter().map(|&t| coverage_with(&q.with_tau(t), opts)).collect()
}

fn quad_result(qd: Quad, method: Method) -> CoverageResult {
    CoverageResult {
        value: qd.value.clamp(0.0, 1.0),
        method,
        err: qd.err,
    }
}

/// Upper integration limit for a conditioning distance of shape `m`.
fn h_upper(m: f64, lp: f64) -> f64 {
    ((m + 50.0) / lp).sqrt()
}

/// `E[f(H)]` over the conditioning distance of `kind`.
pub fn expect_conditioning<F: FnMut(f64) -> f64>(kind: EpochKind, lambda: f64, mut f: F, spec: &QuadSpec) -> Quad {
    let law = EpochLaw { law: NamedLaw::conditioning(kind), lambda };
    let up = h_upper(kind.shape(), lambda * PI);
    integrate_lenient(|h| if h > 0.0 { law.pdf(h) * f(h) } else { 0.0 }, 0.0, up, spec)
}

/// `E[f(H, R)]` over the conditioning and serving distances of `kind`;
/// `R = H` except at the interference epochs, where `R = H·sqrt(W)` with
/// `W` uniform.
pub fn expect_pair<F: FnMut(f64, f64) -> f64>(
    kind: EpochKind,
    lambda: f64,
    mut f: F,
    inner: &QuadSpec,
    outer: &QuadSpec,
) -> Quad {
    if kind.uniform_serving() {
        let mut err = 0.0;
        let q = expect_conditioning(
            kind,
            lambda,
            |h| {
                let qi = integrate_lenient(|w| f(h, h * w.sqrt()), 0.0, 1.0, inner);
                err += qi.err;
                qi.value
            },
            outer,
        );
        Quad { value: q.value, err: q.err + err * 1e-3 }
    } else {
        expect_conditioning(kind, lambda, |h| f(h, h), outer)
    }
}

fn snr_plain(q: &MetricQuery, alpha: f64) -> Result<CoverageResult> {
    let s2 = q.params.sigma2;
    if s2 == 0.0 {
        return Ok(CoverageResult { value: 1.0, method: Method::ClosedForm, err: 0.0 });
    }
    let r = (q.tau * s2).powf(-1.0 / alpha);
    let law = EpochLaw { law: NamedLaw::serving(q.kind), lambda: q.params.lambda };
    Ok(CoverageResult { value: law.cdf(r), method: Method::ClosedForm, err: 1e-14 })
}

fn snr_fading(q: &MetricQuery, alpha: f64, opts: &CoverageOptions) -> Result<CoverageResult> {
    let p = &q.params;
    let s = p.mu * q.tau * p.sigma2;
    if s == 0.0 {
        return Ok(CoverageResult { value: 1.0, method: Method::ClosedForm, err: 0.0 });
    }
    if alpha == 2.0 && !opts.force_quadrature {
        let v = match q.kind {
            EpochKind::MaxInterference | EpochKind::MinInterference => joint_laplace(q.kind, 0.0, s, p.lambda)?,
            k => (1.0 + s / p.lp()).powf(-k.shape()),
        };
        return Ok(CoverageResult { value: v, method: Method::ClosedForm, err: 1e-15 });
    }
    let qd = expect_pair(q.kind, p.lambda, |_, r| (-s * r.powf(alpha)).exp(), &opts.inner(), &opts.outer());
    Ok(quad_result(qd, Method::Quadrature))
}

/// Additive interference with fading and power-law attenuation.
fn fading_additive(q: &MetricQuery, alpha: f64, opts: &CoverageOptions) -> Result<CoverageResult> {
    let p = &q.params;
    let (tau, lp) = (q.tau, p.lp());
    let c = q.kind.colocated() as i32;
    let m = q.kind.shape();
    let s2 = q.noise();
    let noise = p.mu * tau * s2;

    if !q.kind.uniform_serving() {
        let k = kappa(tau, alpha)?;
        let pre = (1.0 + tau).recip().powi(c);
        if noise == 0.0 && !opts.force_quadrature {
            let method = if alpha == 4.0 { Method::ClosedForm } else { Method::Quadrature };
            return Ok(CoverageResult { value: pre * (1.0 + k).powf(-m), method, err: 1e-13 });
        }
        let qd = expect_conditioning(
            q.kind,
            p.lambda,
            |h| (-noise * h.powf(alpha) - lp * h * h * k).exp(),
            &opts.inner(),
        );
        return Ok(quad_result(Quad { value: pre * qd.value, err: qd.err }, Method::Quadrature));
    }

    // W-form of the z-integral: z = τ w^{α/2}
    let inner = opts.inner();
    let mut err = 0.0;
    let qd = integrate_lenient(
        |w| {
            let z = tau * w.powf(alpha / 2.0);
            let k = kappa(z, alpha).unwrap_or(f64::INFINITY);
            let pre = (1.0 + z).recip().powi(c);
            let e = if noise == 0.0 && !opts.force_quadrature {
                (1.0 + k).powf(-m)
            } else {
                let zn = noise * w.powf(alpha / 2.0);
                let qi = expect_conditioning(q.kind, p.lambda, |h| (-zn * h.powf(alpha) - lp * h * h * k).exp(), &inner);
                err += qi.err;
                qi.value
            };
            pre * e
        },
        0.0,
        1.0,
        &opts.outer(),
    );
    Ok(quad_result(Quad { value: qd.value, err: qd.err + err * 1e-3 }, Method::Quadrature))
}

/// `E[e^{-sT}]` of tropical interference with fading at conditioning
/// distance `h`, evaluated as `∫_0^∞ e^{-y} F_T(y/s) dy`.
fn tropical_lt(s: f64, h: f64, kind: EpochKind, p: &SystemParams, alpha: f64, spec: &QuadSpec) -> f64 {
    let c = kind.colocated() as i32;
    let lam2pi = 2.0 * PI * p.lambda;
    let f = |y: f64| {
        if y <= 0.0 {
            return 0.0;
        }
        let x = y / s;
        let near = -(-p.mu * h.powf(alpha) * x).exp_m1();
        let k = k_alpha(p.mu, x, h, alpha).unwrap_or(f64::INFINITY);
        (-y).exp() * near.powi(c) * (-lam2pi * k).exp()
    };
    integrate_lenient(f, 0.0, 1.0, spec).value + integrate_lenient(f, 1.0, 60.0, spec).value
}

fn fading_tropical(q: &MetricQuery, alpha: f64, opts: &CoverageOptions) -> Result<CoverageResult> {
    let p = q.params;
    let tau = q.tau;
    let noise = p.mu * tau * q.noise();
    let inner = QuadSpec::with_tol(opts.tol.max(1e-8));
    let mid = QuadSpec::with_tol(10.0 * opts.tol.max(1e-8));
    let outer = QuadSpec::with_tol(100.0 * opts.tol.max(1e-8));
    let kind = q.kind;
    let qd = if kind.uniform_serving() {
        expect_conditioning(
            kind,
            p.lambda,
            |h| {
                integrate_lenient(
                    |w| {
                        let r = h * w.sqrt();
                        let s = p.mu * tau * r.powf(alpha);
                        (-noise * r.powf(alpha)).exp() * tropical_lt(s, h, kind, &p, alpha, &inner)
                    },
                    0.0,
                    1.0,
                    &mid,
                )
                .value
            },
            &outer,
        )
    } else {
        expect_conditioning(
            kind,
            p.lambda,
            |h| {
                let s = p.mu * tau * h.powf(alpha);
                (-noise * h.powf(alpha)).exp() * tropical_lt(s, h, kind, &p, alpha, &inner)
            },
            &mid,
        )
    };
    Ok(quad_result(qd, Method::Quadrature))
}

/// Tropical metrics without fading. Co-located interferers at the same
/// distance add up, so the tropical interference at a min-interference
/// epoch is `2H^{-α}` and at a handover the ratio is exactly one.
fn plain_tropical(q: &MetricQuery, alpha: f64, opts: &CoverageOptions) -> Result<CoverageResult> {
    let p = &q.params;
    let tau = q.tau;
    let s2 = q.noise();
    let lp = p.lp();
    let closed = |v: f64| Ok(CoverageResult { value: v, method: Method::ClosedForm, err: 0.0 });
    match q.kind {
        EpochKind::MinSigMaxInt => {
            if tau >= 1.0 {
                return closed(0.0);
            }
            if s2 == 0.0 {
                return closed(1.0);
            }
            let h = ((1.0 - tau) / (tau * s2)).powf(1.0 / alpha);
            closed(EpochLaw { law: NamedLaw::HV, lambda: p.lambda }.cdf(h))
        }
        EpochKind::MaxSignal | EpochKind::TypicalTime => {
            let m = q.kind.shape();
            if s2 == 0.0 && !opts.force_quadrature {
                return closed(if tau > 1.0 { tau.powf(-2.0 * m / alpha) } else { 1.0 });
            }
            // nearest interferer D² = H² + Exp(λπ) must exceed (H^{-α}/τ - σ²)^{-2/α}
            let qd = expect_conditioning(
                q.kind,
                p.lambda,
                |h| {
                    let budget = h.powf(-alpha) / tau - s2;
                    if budget <= 0.0 {
                        return 0.0;
                    }
                    let excess = (budget.powf(-2.0 / alpha) - h * h).max(0.0);
                    (-lp * excess).exp()
                },
                &opts.inner(),
            );
            Ok(quad_result(qd, Method::Quadrature))
        }
        EpochKind::MaxInterference | EpochKind::MinInterference => {
            let c = q.kind.colocated() as f64;
            if s2 == 0.0 && !opts.force_quadrature {
                return closed((c * tau).powf(-2.0 / alpha).min(1.0));
            }
            let qd = expect_conditioning(
                q.kind,
                p.lambda,
                |h| (tau.powf(-2.0 / alpha) * (c + s2 * h.powf(alpha)).powf(-2.0 / alpha)).min(1.0),
                &opts.inner(),
            );
            Ok(quad_result(qd, Method::Quadrature))
        }
    }
}

/// Additive interference with fading under `ℓ(r) = (1+r)^{-α}`.
fn fading_additive_bounded(q: &MetricQuery, alpha: f64, opts: &CoverageOptions) -> Result<CoverageResult> {
    let p = q.params;
    let tau = q.tau;
    let c = q.kind.colocated() as i32;
    let noise = p.mu * tau * q.noise();
    let lam2pi = 2.0 * PI * p.lambda;
    let mspec = QuadSpec::with_tol(opts.tol.max(1e-11));
    let qd = expect_pair(
        q.kind,
        p.lambda,
        |h, r| {
            let ratio = ((1.0 + r) / (1.0 + h)).powf(alpha);
            let pre = (1.0 + tau * ratio).recip().powi(c);
            let mm = m_bounded(h, r, tau, alpha, &mspec).unwrap_or(f64::INFINITY);
            pre * (-noise * (1.0 + r).powf(alpha) - lam2pi * mm).exp()
        },
        &opts.inner(),
        &opts.outer(),
    );
    Ok(quad_result(qd, Method::Quadrature))
}

/// Metric values of `opts.mc_samples` Palm configurations of `q.kind`,
/// drawn in fixed-size chunks with one random stream per chunk.
pub fn palm_metric_samples(q: &MetricQuery, opts: &CoverageOptions) -> Vec<f64> {
    const CHUNK: usize = 8192;
    let h_max = opts.cutoff(q);
    let additive = q.metric.uses_interference() && !q.metric.tropical();
    let tail = if opts.tail_correction && additive {
        truncation_tail(&q.params, &q.attenuation, h_max, q.fading)
    } else {
        0.0
    };
    let n = opts.mc_samples;
    let chunks = n.div_ceil(CHUNK);
    let stream = derive_seed(opts.seed, 1000 + q.kind as u64);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = rng_for(stream, c as u64);
            let mut marks = Vec::new();
            let len = CHUNK.min(n - c * CHUNK);
            (0..len)
                .map(|_| {
                    let e = sample_palm_config(q.kind, &q.params, h_max, &mut rng);
                    crate::dynamics::metric_value(&e, q, &mut rng, &mut marks, tail)
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn palm_mc(q: &MetricQuery, opts: &CoverageOptions) -> Result<CoverageResult> {
    let values = palm_metric_samples(q, opts);
    let n = values.len() as f64;
    let p = values.iter().filter(|&&v| v > q.tau).count() as f64 / n;
    Ok(CoverageResult { value: p, method: Method::PalmMc, err: (p * (1.0 - p) / n).sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(kind: EpochKind, metric: Metric, fading: bool, tau: f64) -> MetricQuery {
        MetricQuery::new(kind, metric, fading, tau, SystemParams::default())
    }

    #[test]
    fn fading_sir_closed_forms() {
        let pt = coverage(&q(EpochKind::TypicalTime, Metric::Sir, true, 1.0)).unwrap().value;
        let ps = coverage(&q(EpochKind::MaxSignal, Metric::Sir, true, 1.0)).unwrap().value;
        let pv = coverage(&q(EpochKind::MinSigMaxInt, Metric::Sir, true, 1.0)).unwrap().value;
        assert!((pt - 1.0 / (1.0 + PI / 4.0)).abs() < 1e-14);
        assert!((pt - 0.56010).abs() < 5e-6);
        assert!((ps - 0.74840).abs() < 5e-6);
        assert!((pv - 0.20959).abs() < 5e-6);
    }

    #[test]
    fn quadrature_agrees_with_closed_forms() {
        let forced = CoverageOptions { force_quadrature: true, ..CoverageOptions::default() };
        for kind in EpochKind::ALL {
            for tau in [0.1, 1.0, 7.0] {
                let query = q(kind, Metric::Sir, true, tau);
                let a = coverage(&query).unwrap().value;
                let b = coverage_with(&query, &forced).unwrap().value;
                assert!((a - b).abs() < 1e-8, "{kind} {tau}: {a} {b}");
            }
        }
    }

    #[test]
    fn max_interference_matches_z_integral() {
        // (τ^{-1/2}/2) ∫_0^τ z^{-1/2}/(1+z) p_t(z)^{3/2} dz at α = 4
        let tau: f64 = 2.0;
        let pt = |z: f64| 1.0 / (1.0 + z.sqrt() * z.sqrt().atan());
        let zi = integrate_lenient(
            |z: f64| z.powf(-0.5) / (1.0 + z) * pt(z).powf(1.5),
            0.0,
            tau,
            &QuadSpec::with_tol(1e-12),
        );
        let want = 0.5 / tau.sqrt() * zi.value;
        let got = coverage(&q(EpochKind::MaxInterference, Metric::Sir, true, tau)).unwrap().value;
        assert!((got - want).abs() < 1e-8, "{got} {want}");
        let zi = integrate_lenient(
            |z: f64| z.powf(-0.5) / (1.0 + z).powi(2) * pt(z).powf(2.5),
            0.0,
            tau,
            &QuadSpec::with_tol(1e-12),
        );
        let want = 0.5 / tau.sqrt() * zi.value;
        let got = coverage(&q(EpochKind::MinInterference, Metric::Sir, true, tau)).unwrap().value;
        assert!((got - want).abs() < 1e-8, "{got} {want}");
    }

    #[test]
    fn plain_tropical_examples() {
        let c = |k, t| coverage(&q(k, Metric::Stir, false, t)).unwrap().value;
        assert_eq!(c(EpochKind::TypicalTime, 4.0), 0.5);
        assert!((c(EpochKind::MinInterference, 4.0) - 8f64.powf(-0.5)).abs() < 1e-15);
        assert_eq!(c(EpochKind::MinSigMaxInt, 0.5), 1.0);
        assert_eq!(c(EpochKind::MinSigMaxInt, 2.0), 0.0);
    }

    #[test]
    fn snr_forms() {
        let p = SystemParams { alpha: 2.0, sigma2: 0.3, ..SystemParams::default() };
        let forced = CoverageOptions { force_quadrature: true, ..CoverageOptions::default() };
        for kind in EpochKind::ALL {
            let query = MetricQuery::new(kind, Metric::Snr, true, 1.5, p);
            let a = coverage(&query).unwrap();
            let b = coverage_with(&query, &forced).unwrap();
            assert_eq!(a.method, Method::ClosedForm);
            assert!((a.value - b.value).abs() < 1e-8, "{kind}: {} {}", a.value, b.value);
        }
    }

    #[test]
    fn alpha_two_additive_is_zero() {
        let p = SystemParams { alpha: 2.0, ..SystemParams::default() };
        let r = coverage(&MetricQuery::new(EpochKind::TypicalTime, Metric::Sir, true, 1.0, p)).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn values_are_probabilities_and_monotone() {
        let p = SystemParams { alpha: 3.0, sigma2: 0.05, ..SystemParams::default() };
        for kind in EpochKind::ALL {
            for metric in [Metric::Sinr, Metric::Stinr, Metric::Snr] {
                let mut prev = 1.0 + 1e-9;
                for i in -2..=2 {
                    let tau = 10f64.powf(i as f64 / 2.0);
                    let v = coverage(&MetricQuery::new(kind, metric, true, tau, p)).unwrap().value;
                    assert!((0.0..=1.0).contains(&v));
                    assert!(v <= prev + 1e-7, "{kind} {metric} {tau}");
                    prev = v;
                }
            }
        }
    }
}
