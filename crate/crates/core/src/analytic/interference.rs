//! Interference transforms beyond a conditioning distance `h`.
//!
//! The field seen at an epoch of `kind` is `kind.colocated()` stations at
//! exactly `h` plus a Poisson process of stations farther than `h`.

use std::f64::consts::PI;

use crate::analytic::integrals::{k_alpha, kappa, l_nu};
use crate::error::{invalid, Result};
use crate::model::{EpochKind, SystemParams};

/// `E[e^{-γ I_h}]` of additive interference with exponential fading marks
/// under power-law attenuation.
pub fn interference_laplace_fading(gamma: f64, h: f64, kind: EpochKind, params: &SystemParams) -> Result<f64> {
    if !(gamma >= 0.0) || !(h >= 0.0) {
        return Err(invalid("gamma/h", "must be >= 0"));
    }
    if gamma == 0.0 {
        return Ok(1.0);
    }
    let (mu, alpha) = (params.mu, params.alpha);
    let z = gamma * h.powf(-alpha) / mu;
    let k = kappa(z, alpha)?;
    if k.is_infinite() {
        return Ok(0.0);
    }
    let pre = (1.0 + z).recip().powi(kind.colocated() as i32);
    Ok(pre * (-PI * params.lambda * h * h * k).exp())
}

/// `P(T_h <= x)` for tropical interference with exponential fading marks:
/// `(1 - e^{-μ h^α x})^c · e^{-2λπ K_α(μ, x, h)}`.
pub fn tropical_interference_cdf_fading(x: f64, h: f64, kind: EpochKind, params: &SystemParams) -> Result<f64> {
    if !(x >= 0.0) || !(h > 0.0) {
        return Err(invalid("x/h", "needs x >= 0 and h > 0"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if h.is_infinite() {
        return Ok(1.0);
    }
    let (mu, alpha) = (params.mu, params.alpha);
    let near = -(-mu * h.powf(alpha) * x).exp_m1();
    let far = (-2.0 * PI * params.lambda * k_alpha(mu, x, h, alpha)?).exp();
    Ok(near.powi(kind.colocated() as i32) * far)
}

/// `E[e^{-ν I_h}]` of additive interference without fading:
/// `e^{-c ν h^{-α}} · e^{-πλ L_ν(h, α)}`.
pub fn interference_laplace_nofading(nu: f64, h: f64, kind: EpochKind, params: &SystemParams) -> Result<f64> {
    if !(nu >= 0.0) || !(h >= 0.0) {
        return Err(invalid("nu/h", "must be >= 0"));
    }
    if nu == 0.0 {
        return Ok(1.0);
    }
    let alpha = params.alpha;
    let near = (-(kind.colocated() as f64) * nu * h.powf(-alpha)).exp();
    Ok(near * (-PI * params.lambda * l_nu(nu, h, alpha)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rng_for;
    use crate::palm::poisson_beyond;
    use rand_distr::{Distribution, Exp};

    #[test]
    fn limits() {
        let p = SystemParams::default();
        assert_eq!(interference_laplace_fading(0.0, 1.0, EpochKind::MaxSignal, &p).unwrap(), 1.0);
        assert_eq!(interference_laplace_nofading(0.0, 1.0, EpochKind::MaxSignal, &p).unwrap(), 1.0);
        let c = tropical_interference_cdf_fading(1e9, 1.0, EpochKind::MinInterference, &p).unwrap();
        assert!((c - 1.0).abs() < 1e-9);
        let far = tropical_interference_cdf_fading(0.3, 1e3, EpochKind::MaxSignal, &p).unwrap();
        assert!((far - 1.0).abs() < 1e-12);
        let tau: f64 = 2.0;
        let h: f64 = 0.8;
        let v = interference_laplace_fading(tau * h.powi(4), h, EpochKind::TypicalTime, &p).unwrap();
        let want = (-PI * h * h * tau.sqrt() * tau.sqrt().atan()).exp();
        assert!((v - want).abs() < 1e-14);
    }

    #[test]
    fn nofading_laplace_is_monotone() {
        let p = SystemParams { alpha: 3.0, ..SystemParams::default() };
        let mut prev = 1.0;
        for i in 1..50 {
            let v = interference_laplace_nofading(0.1 * i as f64, 0.5, EpochKind::MinInterference, &p).unwrap();
            assert!(v <= prev);
            prev = v;
        }
    }

    #[test]
    fn transforms_match_palm_monte_carlo() {
        let p = SystemParams { lambda: 1.0, alpha: 4.0, mu: 1.3, ..SystemParams::default() };
        let lp = p.lp();
        let mut rng = rng_for(5, 0);
        let exp = Exp::new(p.mu).unwrap();
        let (h, g, nu, x) = (0.6, 0.4, 0.3, 2.0);
        let n = 30_000;
        let h_max: f64 = 15.0;
        // mean interference beyond the cutoff
        let tail = PI * p.lambda / h_max.powi(2);
        for kind in [EpochKind::MinSigMaxInt, EpochKind::MaxSignal, EpochKind::MinInterference] {
            let (mut s1, mut s1q, mut s2, mut s2q, mut s3) = (0.0, 0.0, 0.0, 0.0, 0usize);
            let mut d = Vec::new();
            for _ in 0..n {
                d.clear();
                d.extend(std::iter::repeat_n(h, kind.colocated()));
                poisson_beyond(h, h_max, lp, &mut rng, &mut d);
                let fading: f64 = d.iter().map(|r| exp.sample(&mut rng) * r.powi(-4)).sum::<f64>() + tail / p.mu;
                let plain: f64 = d.iter().map(|r| r.powi(-4)).sum::<f64>() + tail;
                let top = d.iter().map(|r| exp.sample(&mut rng) * r.powi(-4)).fold(0.0, f64::max);
                let a = (-g * fading).exp();
                let b = (-nu * plain).exp();
                s1 += a;
                s1q += a * a;
                s2 += b;
                s2q += b * b;
                s3 += (top <= x) as usize;
            }
            let nf = n as f64;
            let check = |s: f64, sq: f64, want: f64, what: &str| {
                let m = s / nf;
                let se = ((sq / nf - m * m) / nf).sqrt().max(1e-4);
                assert!((m - want).abs() < 4.0 * se, "{kind} {what}: mc {m} analytic {want}");
            };
            check(s1, s1q, interference_laplace_fading(g, h, kind, &p).unwrap(), "fading LT");
            check(s2, s2q, interference_laplace_nofading(nu, h, kind, &p).unwrap(), "plain LT");
            let want = tropical_interference_cdf_fading(x, h, kind, &p).unwrap();
            check(s3 as f64, s3 as f64, want, "tropical cdf");
        }
    }
}
