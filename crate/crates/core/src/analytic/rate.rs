//! Average Shannon rate `B ∫_0^∞ p(z)/(1+z) dz`.

use serde::{Deserialize, Serialize};

use crate::analytic::coverage::{coverage_with, palm_metric_samples, CoverageOptions, Method};
use crate::error::Result;
use crate::model::MetricQuery;
use crate::numerics::{integrate_lenient, QuadSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateResult {
    pub value: f64,
    pub method: Method,
    pub err: f64,
}

/// Shannon rate of `q` (its `tau` is ignored).
pub fn shannon_rate(q: &MetricQuery, opts: &CoverageOptions) -> Result<RateResult> {
    let probe = coverage_with(&q.with_tau(1.0), opts)?;
    let b = q.params.bandwidth;
    if probe.method == Method::PalmMc {
        let logs: Vec<f64> = palm_metric_samples(q, opts).into_iter().map(f64::ln_1p).collect();
        let n = logs.len() as f64;
        let mean = logs.iter().sum::<f64>() / n;
        let var = logs.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
        return Ok(RateResult { value: b * mean, method: Method::PalmMc, err: b * (var / n).sqrt() });
    }
    let mut worst = probe.method;
    let mut cov_err: f64 = 0.0;
    let mut p = |z: f64| {
        if z <= 0.0 {
            return 1.0;
        }
        match coverage_with(&q.with_tau(z), opts) {
            Ok(r) => {
                if r.method == Method::Quadrature {
                    worst = Method::Quadrature;
                }
                cov_err = cov_err.max(r.err);
                r.value
            }
            Err(_) => f64::NAN,
        }
    };
    let spec = QuadSpec::with_tol(opts.tol.max(1e-12) * 10.0);
    // split at z = 1 where the no-fading forms have kinks
    let lo = integrate_lenient(|z| p(z) / (1.0 + z), 0.0, 1.0, &spec);
    let hi = integrate_lenient(|z| p(z) / (1.0 + z), 1.0, f64::INFINITY, &spec);
    let value = lo.value + hi.value;
    if !value.is_finite() {
        return Err(crate::Error::Quadrature { value, err: f64::INFINITY });
    }
    Ok(RateResult {
        value: b * value,
        method: worst,
        err: b * (lo.err + hi.err + cov_err * std::f64::consts::LN_2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{EpochKind, Metric, SystemParams};
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn tropical_rates() {
        let p = SystemParams { bandwidth: 2.0, ..SystemParams::default() };
        let o = CoverageOptions::default();
        let q = MetricQuery::new(EpochKind::TypicalTime, Metric::Stir, false, 1.0, p);
        let r = shannon_rate(&q, &o).unwrap();
        assert!((r.value - 2.0 * (LN_2 + PI / 2.0)).abs() < 1e-8, "{}", r.value);
        let q = q.with_kind(EpochKind::MinSigMaxInt);
        let r = shannon_rate(&q, &o).unwrap();
        assert!((r.value - 2.0 * LN_2).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn fading_rate_ordering() {
        let o = CoverageOptions::default();
        let rate = |k| {
            shannon_rate(&MetricQuery::new(k, Metric::Sir, true, 1.0, SystemParams::default()), &o)
                .unwrap()
                .value
        };
        let (v, t, s) = (rate(EpochKind::MinSigMaxInt), rate(EpochKind::TypicalTime), rate(EpochKind::MaxSignal));
        assert!(v <= t && t <= s, "{v} {t} {s}");
    }
}
