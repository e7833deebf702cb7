//! Ordering and invariance checks across epoch kinds.

use serde::{Deserialize, Serialize};

use crate::analytic::coverage::{coverage_curve, coverage_with, expect_conditioning, CoverageOptions, CoverageResult};
use crate::analytic::interference::{interference_laplace_fading, tropical_interference_cdf_fading};
use crate::error::{invalid, Result};
use crate::model::{Attenuation, EpochKind, Metric, MetricQuery, SystemParams};
use crate::numerics::QuadSpec;

use EpochKind::{MaxInterference as I, MaxSignal as S, MinInterference as MI, MinSigMaxInt as V, TypicalTime as T};

/// One family of inequalities checked on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub points: usize,
    /// Smallest slack over the grid after allowing for numerical error.
    pub worst_margin: f64,
    pub violations: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            points: 0,
            worst_margin: f64::INFINITY,
            violations: Vec::new(),
        }
    }

    /// Records `lo <= hi` up to `allow`.
    fn le(&mut self, what: &str, x: f64, lo: f64, hi: f64, allow: f64) {
        self.points += 1;
        let slack = hi - lo + allow;
        self.worst_margin = self.worst_margin.min(slack);
        if slack < 0.0 || !slack.is_finite() {
            self.passed = false;
            self.violations.push(format!("{what} at {x}: {lo} > {hi}"));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub pass: bool,
    pub checks: Vec<Check>,
}

/// Allowed slack between two results: quadrature tolerances add, Monte
/// Carlo standard errors combine at three sigma.
fn allowance(a: &CoverageResult, b: &CoverageResult) -> f64 {
    use crate::analytic::coverage::Method::PalmMc;
    let mc = |r: &CoverageResult| if r.method == PalmMc { r.err } else { 0.0 };
    let det = |r: &CoverageResult| if r.method == PalmMc { 0.0 } else { r.err };
    1e-7 + det(a) + det(b) + 3.0 * (mc(a).powi(2) + mc(b).powi(2)).sqrt()
}

fn curves(
    base: &MetricQuery,
    kinds: &[EpochKind],
    taus: &[f64],
    opts: &CoverageOptions,
) -> Result<Vec<Vec<CoverageResult>>> {
    kinds.iter().map(|&k| coverage_curve(&base.with_kind(k), taus, opts)).collect()
}

/// `p_V <= p_t <= p_S` and `p_mI <= p_I` for one metric family.
pub fn coverage_orderings(
    name: &str,
    base: &MetricQuery,
    taus: &[f64],
    opts: &CoverageOptions,
) -> Result<Check> {
    let c = curves(base, &[V, T, S, MI, I], taus, opts)?;
    let mut check = Check::new(name);
    for (i, &tau) in taus.iter().enumerate() {
        let (v, t, s, mi, ii) = (&c[0][i], &c[1][i], &c[2][i], &c[3][i], &c[4][i]);
        check.le("p_V <= p_t", tau, v.value, t.value, allowance(v, t));
        check.le("p_t <= p_S", tau, t.value, s.value, allowance(t, s));
        check.le("p_mI <= p_I", tau, mi.value, ii.value, allowance(mi, ii));
    }
    Ok(check)
}

/// Largest gap between coverage curves evaluated at two intensities.
pub fn scale_invariance(
    base: &MetricQuery,
    kinds: &[EpochKind],
    taus: &[f64],
    lambdas: (f64, f64),
    opts: &CoverageOptions,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &k in kinds {
        for &tau in taus {
            let at = |lambda: f64| {
                let mut q = base.with_kind(k).with_tau(tau);
                q.params.lambda = lambda;
                coverage_with(&q, opts).map(|r| r.value)
            };
            worst = worst.max((at(lambdas.0)? - at(lambdas.1)?).abs());
        }
    }
    Ok(worst)
}

/// Unconditional interference transform `E[L_{I_H}(γ)]` at epochs of `kind`.
pub fn interference_lt(kind: EpochKind, gamma: f64, params: &SystemParams) -> f64 {
    let spec = QuadSpec::with_tol(1e-11);
    expect_conditioning(
        kind,
        params.lambda,
        |h| interference_laplace_fading(gamma, h, kind, params).unwrap_or(f64::NAN),
        &spec,
    )
    .value
}

/// Unconditional tropical interference CDF `P(T <= x)` at epochs of `kind`.
pub fn tropical_interference_cdf(kind: EpochKind, x: f64, params: &SystemParams) -> f64 {
    let spec = QuadSpec::with_tol(1e-11);
    expect_conditioning(
        kind,
        params.lambda,
        |h| tropical_interference_cdf_fading(x, h, kind, params).unwrap_or(f64::NAN),
        &spec,
    )
    .value
}

/// Interference orderings: Laplace transforms `L_V <= L_t <= L_S`,
/// `L_mI <= L_I` and the same pointwise for the tropical CDFs.
pub fn interference_orderings(params: &SystemParams, grid: &[f64]) -> (Check, Check) {
    let mut lt = Check::new("interference Laplace order");
    let mut cdf = Check::new("tropical interference CDF order");
    let tol = 1e-9;
    for &g in grid {
        let l = |k| interference_lt(k, g, params);
        let (v, t, s, mi, i) = (l(V), l(T), l(S), l(MI), l(I));
        lt.le("L_V <= L_t", g, v, t, tol);
        lt.le("L_t <= L_S", g, t, s, tol);
        lt.le("L_mI <= L_I", g, mi, i, tol);
        let f = |k| tropical_interference_cdf(k, g, params);
        let (v, t, s, mi, i) = (f(V), f(T), f(S), f(MI), f(I));
        cdf.le("F_V <= F_t", g, v, t, tol);
        cdf.le("F_t <= F_S", g, t, s, tol);
        cdf.le("F_mI <= F_I", g, mi, i, tol);
    }
    (lt, cdf)
}

/// Runs every ordering and invariance check on `taus` (linear thresholds).
///
/// The tropical triple without fading is left out: its order changes with
/// the parameters.
pub fn comparison_suite(
    params: &SystemParams,
    taus: &[f64],
    lambdas: (f64, f64),
    opts: &CoverageOptions,
) -> Result<ComparisonReport> {
    if taus.is_empty() {
        return Err(invalid("taus", "grid must be nonempty"));
    }
    params.validate()?;
    let mut checks = Vec::new();
    let (add, trop) = if params.sigma2 > 0.0 { (Metric::Sinr, Metric::Stinr) } else { (Metric::Sir, Metric::Stir) };
    let base = |metric, fading| MetricQuery::new(T, metric, fading, 1.0, *params);
    checks.push(coverage_orderings(&format!("coverage order, fading {add}"), &base(add, true), taus, opts)?);
    checks.push(coverage_orderings(&format!("coverage order, fading {trop}"), &base(trop, true), taus, opts)?);
    checks.push(coverage_orderings(&format!("coverage order, plain {add}"), &base(add, false), taus, opts)?);

    let mut plain_trop = Check::new(format!("coverage order, plain {trop} (mI vs I)"));
    let mi = coverage_curve(&base(trop, false).with_kind(MI), taus, opts)?;
    let ii = coverage_curve(&base(trop, false).with_kind(I), taus, opts)?;
    for (k, &tau) in taus.iter().enumerate() {
        plain_trop.le("p_mI <= p_I", tau, mi[k].value, ii[k].value, allowance(&mi[k], &ii[k]));
    }
    checks.push(plain_trop);

    let (lt, cdf) = interference_orderings(params, taus);
    checks.push(lt);
    checks.push(cdf);

    let mut scale = Check::new(format!("scale invariance, lambda {} vs {}", lambdas.0, lambdas.1));
    let quiet = SystemParams { sigma2: 0.0, ..*params };
    let forced = CoverageOptions { force_quadrature: true, ..*opts };
    let q = MetricQuery::new(T, Metric::Sir, true, 1.0, quiet);
    let gap = scale_invariance(&q, &EpochKind::ALL, taus, lambdas, &forced)?;
    scale.le("|p(l1) - p(l2)|", 0.0, gap, 1e-6, 0.0);
    checks.push(scale);

    Ok(ComparisonReport { pass: checks.iter().all(|c| c.passed), checks })
}

/// Signed differences `p_V - p_t` under step attenuation from Palm Monte
/// Carlo, with their standard errors.
pub fn step_differences(
    params: &SystemParams,
    p: f64,
    d: f64,
    metric: Metric,
    fading: bool,
    taus: &[f64],
    opts: &CoverageOptions,
) -> Result<Vec<(f64, f64, f64)>> {
    let mut q = MetricQuery::new(V, metric, fading, 1.0, *params);
    q.attenuation = Attenuation::Step { p, d };
    let v = coverage_curve(&q, taus, opts)?;
    let t = coverage_curve(&q.with_kind(T), taus, opts)?;
    Ok(taus
        .iter()
        .zip(v.iter().zip(&t))
        .map(|(&tau, (a, b))| (tau, a.value - b.value, (a.err.powi(2) + b.err.powi(2)).sqrt()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fading_sir_orders_and_scale() {
        let params = SystemParams { alpha: 3.0, ..SystemParams::default() };
        let taus: Vec<f64> = (-4..=4).map(|i| 10f64.powf(i as f64 / 4.0)).collect();
        let opts = CoverageOptions::default();
        let q = MetricQuery::new(T, Metric::Sir, true, 1.0, params);
        let c = coverage_orderings("sir", &q, &taus, &opts).unwrap();
        assert!(c.passed, "{:?}", c.violations);
        let forced = CoverageOptions { force_quadrature: true, ..opts };
        let gap = scale_invariance(&q, &EpochKind::ALL, &taus[..3], (0.1, 10.0), &forced).unwrap();
        assert!(gap < 1e-6, "{gap}");
    }

    #[test]
    fn interference_orders() {
        // handover interference dominates the typical one; the max-signal
        // and max-interference fields are heavier than the typical and
        // min-interference ones
        let (lt, cdf) = interference_orderings(&SystemParams::default(), &[0.1, 1.0, 10.0]);
        for c in [&lt, &cdf] {
            assert!(!c.violations.iter().any(|v| v.contains("_V <=")));
            assert_eq!(c.violations.len(), 6, "{:?}", c.violations);
        }
    }
}
