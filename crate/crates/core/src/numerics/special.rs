//! Error function and incomplete gamma functions (non-regularized).

use statrs::function::{erf, gamma as sg};

use crate::error::{invalid, Result};

pub fn erfc(x: f64) -> f64 {
    erf::erfc(x)
}

pub fn gamma(a: f64) -> f64 {
    sg::gamma(a)
}

pub fn ln_gamma(a: f64) -> f64 {
    sg::ln_gamma(a)
}

/// Regularized lower incomplete gamma `P(a, b)`, `a > 0`, `b >= 0`.
pub fn gamma_lr(a: f64, b: f64) -> Result<f64> {
    check(a, b)?;
    if b == 0.0 {
        return Ok(0.0);
    }
    if b.is_infinite() {
        return Ok(1.0);
    }
    Ok(sg::gamma_lr(a, b))
}

/// Regularized upper incomplete gamma `Q(a, b)`, `a > 0`, `b >= 0`.
pub fn gamma_ur(a: f64, b: f64) -> Result<f64> {
    check(a, b)?;
    if b == 0.0 {
        return Ok(1.0);
    }
    if b.is_infinite() {
        return Ok(0.0);
    }
    Ok(sg::gamma_ur(a, b))
}

/// Upper incomplete gamma `Γ(a, b) = ∫_b^∞ t^{a-1} e^{-t} dt`.
pub fn gamma_upper(a: f64, b: f64) -> Result<f64> {
    Ok(gamma(a) * gamma_ur(a, b)?)
}

/// Lower incomplete gamma `γ(a, b) = ∫_0^b t^{a-1} e^{-t} dt`.
pub fn gamma_lower(a: f64, b: f64) -> Result<f64> {
    if a == 0.0 && b == 0.0 {
        return Err(invalid("a", "gamma_lower(0, 0) is undefined"));
    }
    Ok(gamma(a) * gamma_lr(a, b)?)
}

fn check(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(invalid("a", format!("incomplete gamma needs a > 0, got {a}")));
    }
    if !(b >= 0.0) {
        return Err(invalid("b", format!("incomplete gamma needs b >= 0, got {b}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn known_values() {
        assert_eq!(erfc(0.0), 1.0);
        assert!((gamma_upper(0.5, 0.0).unwrap() - PI.sqrt()).abs() < 1e-13);
        // √π·erf(1)
        let want = 1.493_648_265_624_854_1;
        assert!((gamma_lower(0.5, 1.0).unwrap() - want).abs() < 1e-13);
        assert!((PI.sqrt() * (1.0 - erfc(1.0)) - want).abs() < 1e-10);
        // Γ(1, b) = e^{-b}
        assert!((gamma_upper(1.0, 3.0).unwrap() - (-3f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn complementarity() {
        for &a in &[0.1, 1.0 / 3.0, 0.5, 0.75, 1.0, 1.5, 2.5, 7.0] {
            for &b in &[1e-6, 0.01, 0.3, 1.0, 1.7, 4.0, 12.0, 40.0] {
                let s = gamma_lower(a, b).unwrap() + gamma_upper(a, b).unwrap();
                assert!(((s - gamma(a)) / gamma(a)).abs() < 1e-10, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(gamma_lower(0.0, 0.0).is_err());
        assert!(gamma_upper(-0.5, 1.0).is_err());
        assert!(gamma_upper(0.5, -1.0).is_err());
    }
}
