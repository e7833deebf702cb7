//! Special integrals of the interference transforms.

use crate::error::{invalid, Result};
use crate::numerics::special::{gamma, gamma_lr, gamma_ur};
use crate::numerics::{integrate, integrate_lenient, QuadSpec};

/// `κ(τ, α) = τ^{2/α} ∫_{τ^{-2/α}}^∞ dz / (1 + z^{α/2})`.
///
/// Evaluated as `(2/(α-2)) ∫_0^1 τ / (1 + τ t^{α/(α-2)}) dt`, which is the
/// same integral after `z = τ^{-2/α} t^{-2/(α-2)}`. Closed form at `α = 4`:
/// `√τ·arctan√τ`. Infinite for `α <= 2`.
pub fn kappa(tau: f64, alpha: f64) -> Result<f64> {
    if !(tau >= 0.0) {
        return Err(invalid("tau", "must be >= 0"));
    }
    if alpha <= 2.0 {
        return Ok(f64::INFINITY);
    }
    if tau == 0.0 {
        return Ok(0.0);
    }
    if alpha == 4.0 {
        let s = tau.sqrt();
        return Ok(s * s.atan());
    }
    kappa_quadrature(tau, alpha)
}

/// [`kappa`] without the closed-form shortcut.
pub fn kappa_quadrature(tau: f64, alpha: f64) -> Result<f64> {
    if alpha <= 2.0 {
        return Ok(f64::INFINITY);
    }
    let e = alpha / (alpha - 2.0);
    let k = 2.0 / (alpha - 2.0);
    // the integrand falls off around t ~ τ^{-1/e}
    let knee = tau.powf(-1.0 / e).min(1.0);
    let spec = QuadSpec::with_tol(1e-13);
    let f = |t: f64| tau / (1.0 + tau * t.powf(e));
    let a = integrate(f, 0.0, knee, &spec)?.value;
    let b = integrate(f, knee, 1.0, &spec)?.value;
    Ok(k * (a + b))
}

/// `K_α(μ, x, h) = ∫_h^∞ e^{-μ x v^α} v dv = (1/α)(μx)^{-2/α} Γ(2/α, μ h^α x)`.
pub fn k_alpha(mu: f64, x: f64, h: f64, alpha: f64) -> Result<f64> {
    if !(mu > 0.0) || !(x >= 0.0) || !(h >= 0.0) || !(alpha > 0.0) {
        return Err(invalid("K_alpha", "needs mu > 0, x >= 0, h >= 0, alpha > 0"));
    }
    if x == 0.0 {
        return Ok(f64::INFINITY);
    }
    let a = 2.0 / alpha;
    let mx = mu * x;
    Ok(mx.powf(-a) / alpha * gamma(a) * gamma_ur(a, mx * h.powf(alpha))?)
}

/// `L_ν(h, α) = ∫_h^∞ (1 - e^{-ν r^{-α}}) 2r dr
///           = -h²(1 - e^{-ν h^{-α}}) + ν^{2/α} γ(1 - 2/α, ν h^{-α})`.
pub fn l_nu(nu: f64, h: f64, alpha: f64) -> Result<f64> {
    if !(nu >= 0.0) || !(h >= 0.0) {
        return Err(invalid("L_nu", "needs nu >= 0, h >= 0"));
    }
    if alpha <= 2.0 {
        return Err(invalid("alpha", "L_nu needs alpha > 2"));
    }
    if nu == 0.0 {
        return Ok(0.0);
    }
    let b = nu * h.powf(-alpha);
    let a = 1.0 - 2.0 / alpha;
    Ok(h * h * (-b).exp_m1() + nu.powf(2.0 / alpha) * gamma(a) * gamma_lr(a, b)?)
}

/// `∫_h^∞ τ / (τ + ((1+u)/(1+r))^α) u du`; the bounded-attenuation analog
/// of `(h²/2)κ`. With `r = h` this is `M_α(h, τ)`.
pub fn m_bounded(h: f64, r: f64, tau: f64, alpha: f64, spec: &QuadSpec) -> Result<f64> {
    if !(h >= 0.0) || !(r >= 0.0) || !(tau >= 0.0) {
        return Err(invalid("M_alpha", "needs h, r, tau >= 0"));
    }
    if alpha <= 2.0 {
        return Ok(f64::INFINITY);
    }
    if tau == 0.0 {
        return Ok(0.0);
    }
    let c = (1.0 + r).powf(alpha);
    let f = |u: f64| tau * c / (tau * c + (1.0 + u).powf(alpha)) * u;
    // split where the denominator switches regime, then integrate the
    // power tail in `s = 1/(1+u)`
    let knee = ((tau * c).powf(1.0 / alpha) - 1.0).max(h) + 1.0;
    let head = integrate_lenient(f, h, knee, spec);
    let s0 = 1.0 / (1.0 + knee);
    let g = |s: f64| {
        if s <= 0.0 {
            return 0.0;
        }
        let u = 1.0 / s - 1.0;
        f(u) / (s * s)
    };
    let tail = integrate_lenient(g, 0.0, s0, spec);
    Ok(head.value + tail.value)
}

/// `M_α(h, τ) = ∫_h^∞ τ / (τ + (1+r)^α (1+h)^{-α}) r dr`.
pub fn m_alpha(h: f64, tau: f64, alpha: f64) -> Result<f64> {
    m_bounded(h, h, tau, alpha, &QuadSpec::with_tol(1e-11))
}

/// Named entry point for the four integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialIntegral {
    Kappa { tau: f64, alpha: f64 },
    KAlpha { mu: f64, x: f64, h: f64, alpha: f64 },
    LNu { nu: f64, h: f64, alpha: f64 },
    MAlpha { h: f64, tau: f64, alpha: f64 },
}

pub fn special_integral(which: SpecialIntegral) -> Result<f64> {
    match which {
        SpecialIntegral::Kappa { tau, alpha } => kappa(tau, alpha),
        SpecialIntegral::KAlpha { mu, x, h, alpha } => k_alpha(mu, x, h, alpha),
        SpecialIntegral::LNu { nu, h, alpha } => l_nu(nu, h, alpha),
        SpecialIntegral::MAlpha { h, tau, alpha } => m_alpha(h, tau, alpha),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn direct_kappa(tau: f64, alpha: f64) -> f64 {
        let lo = tau.powf(-2.0 / alpha);
        let q = integrate(|z: f64| 1.0 / (1.0 + z.powf(alpha / 2.0)), lo, f64::INFINITY, &QuadSpec::with_tol(1e-12))
            .unwrap_or_else(|e| match e {
                crate::Error::Quadrature { value, .. } => crate::numerics::Quad { value, err: 0.0 },
                _ => panic!(),
            });
        tau.powf(2.0 / alpha) * q.value
    }

    #[test]
    fn kappa_values() {
        assert!((kappa(1.0, 4.0).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((kappa_quadrature(1.0, 4.0).unwrap() - PI / 4.0).abs() < 1e-12);
        assert_eq!(kappa(1.0, 2.0).unwrap(), f64::INFINITY);
        for &alpha in &[2.5, 3.0, 3.7, 4.0, 6.0] {
            for &tau in &[0.01, 0.1, 1.0, 10.0, 1000.0] {
                let a = kappa_quadrature(tau, alpha).unwrap();
                let b = direct_kappa(tau, alpha);
                assert!(((a - b) / a).abs() < 1e-7, "alpha={alpha} tau={tau} {a} {b}");
                let s = tau.sqrt();
                if alpha == 4.0 {
                    assert!(((a - s * s.atan()) / a).abs() < 1e-11);
                }
            }
        }
    }

    #[test]
    fn kappa_shell_identity() {
        // ∫_h^∞ γr^{-α}/(μ+γr^{-α}) r dr = (h²/2) κ(γ h^{-α}/μ, α)
        let (g, mu, h, alpha) = (2.3, 0.7, 0.9, 3.0);
        let lhs = integrate(
            |r: f64| g * r.powf(-alpha) / (mu + g * r.powf(-alpha)) * r,
            h,
            f64::INFINITY,
            &QuadSpec::with_tol(1e-12),
        )
        .map(|q| q.value)
        .unwrap_or_else(|e| match e {
            crate::Error::Quadrature { value, .. } => value,
            _ => panic!(),
        });
        let rhs = 0.5 * h * h * kappa(g * h.powf(-alpha) / mu, alpha).unwrap();
        assert!(((lhs - rhs) / rhs).abs() < 1e-7, "{lhs} {rhs}");
    }

    #[test]
    fn k_alpha_matches_definition() {
        let (mu, x, h, alpha) = (1.3, 0.4, 0.8, 3.5);
        let q = integrate(|v: f64| (-mu * x * v.powf(alpha)).exp() * v, h, f64::INFINITY, &QuadSpec::default())
            .unwrap();
        assert!((q.value - k_alpha(mu, x, h, alpha).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn l_nu_matches_definition() {
        assert_eq!(l_nu(0.0, 1.0, 4.0).unwrap(), 0.0);
        for &(nu, h, alpha) in &[(0.5, 0.7, 4.0), (3.0, 0.2, 3.0), (0.01, 2.0, 2.5)] {
            let q = integrate(
                |r: f64| -(-nu * r.powf(-alpha)).exp_m1() * 2.0 * r,
                h,
                f64::INFINITY,
                &QuadSpec::with_tol(1e-12),
            )
            .map(|q| q.value)
            .unwrap_or_else(|e| match e {
                crate::Error::Quadrature { value, .. } => value,
                _ => panic!(),
            });
            let l = l_nu(nu, h, alpha).unwrap();
            assert!(((q - l) / l).abs() < 1e-7, "{nu} {h} {alpha}: {q} {l}");
        }
    }

    #[test]
    fn m_alpha_matches_definition() {
        for &(h, tau, alpha) in &[(0.3, 1.0, 4.0), (1.5, 0.1, 3.0), (0.05, 10.0, 2.6)] {
            let m = m_alpha(h, tau, alpha).unwrap();
            let c = (1.0 + h).powf(-alpha);
            let q = integrate_lenient(
                |r: f64| tau / (tau + (1.0 + r).powf(alpha) * c) * r,
                h,
                f64::INFINITY,
                &QuadSpec::with_tol(1e-13),
            );
            assert!(((q.value - m) / m).abs() < 1e-6, "{h} {tau} {alpha}: {} {m}", q.value);
        }
    }
}
