//! Shared model types: system parameters, epoch kinds, attenuation and metrics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Network and link parameters. Times in seconds, distances in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SystemParams {
    /// Stations per square meter.
    pub lambda: f64,
    pub speed: f64,
    /// Path-loss exponent.
    pub alpha: f64,
    /// Rate of the exponential fading marks.
    pub mu: f64,
    pub sigma2: f64,
    pub bandwidth: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        SystemParams {
            lambda: 1.0,
            speed: 1.0,
            alpha: 4.0,
            mu: 1.0,
            sigma2: 0.0,
            bandwidth: 1.0,
        }
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) || !self.lambda.is_finite() {
            return Err(invalid("lambda", format!("must be > 0, got {}", self.lambda)));
        }
        if !(self.speed > 0.0) || !self.speed.is_finite() {
            return Err(invalid("speed", format!("must be > 0, got {}", self.speed)));
        }
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(invalid("alpha", format!("must be > 0, got {}", self.alpha)));
        }
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(invalid("mu", format!("must be > 0, got {}", self.mu)));
        }
        if !(self.sigma2 >= 0.0) || !self.sigma2.is_finite() {
            return Err(invalid("sigma2", format!("must be >= 0, got {}", self.sigma2)));
        }
        if !(self.bandwidth > 0.0) || !self.bandwidth.is_finite() {
            return Err(invalid("bandwidth", format!("must be > 0, got {}", self.bandwidth)));
        }
        Ok(())
    }

    /// `λπ`, the rate of `H²` for a Rayleigh nearest distance.
    pub fn lp(&self) -> f64 {
        self.lambda * std::f64::consts::PI
    }
}

/// The typical epochs, plus the typical time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EpochKind {
    /// Handover: the two nearest stations are equidistant.
    #[serde(rename = "handover")]
    MinSigMaxInt,
    /// The serving station is at its closest approach.
    #[serde(rename = "max-signal")]
    MaxSignal,
    /// The nearest interferer is at its closest approach.
    #[serde(rename = "max-interference")]
    MaxInterference,
    /// The nearest and second-nearest interferers swap.
    #[serde(rename = "min-interference")]
    MinInterference,
    #[serde(rename = "typical")]
    TypicalTime,
}

impl EpochKind {
    pub const ALL: [EpochKind; 5] = [
        EpochKind::MinSigMaxInt,
        EpochKind::MaxSignal,
        EpochKind::MaxInterference,
        EpochKind::MinInterference,
        EpochKind::TypicalTime,
    ];

    pub const DETECTED: [EpochKind; 4] = [
        EpochKind::MinSigMaxInt,
        EpochKind::MaxSignal,
        EpochKind::MaxInterference,
        EpochKind::MinInterference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EpochKind::MinSigMaxInt => "handover",
            EpochKind::MaxSignal => "max-signal",
            EpochKind::MaxInterference => "max-interference",
            EpochKind::MinInterference => "min-interference",
            EpochKind::TypicalTime => "typical",
        }
    }

    /// Nakagami shape `m` of the conditioning distance `H` (`H² ~ Gamma(m, λπ)`).
    pub fn shape(self) -> f64 {
        match self {
            EpochKind::MinSigMaxInt => 1.5,
            EpochKind::MaxSignal => 0.5,
            EpochKind::MaxInterference => 1.5,
            EpochKind::MinInterference => 2.5,
            EpochKind::TypicalTime => 1.0,
        }
    }

    /// Number of interferers located exactly at the conditioning distance.
    pub fn colocated(self) -> usize {
        match self {
            EpochKind::MinSigMaxInt | EpochKind::MaxInterference => 1,
            EpochKind::MinInterference => 2,
            EpochKind::MaxSignal | EpochKind::TypicalTime => 0,
        }
    }

    /// Serving distance is `H·sqrt(U)` rather than `H` itself.
    pub fn uniform_serving(self) -> bool {
        matches!(self, EpochKind::MaxInterference | EpochKind::MinInterference)
    }

    /// Point-process intensity at `λ = 1`, `v = 1`.
    pub fn unit_intensity(self) -> Option<f64> {
        use std::f64::consts::PI;
        match self {
            EpochKind::MinSigMaxInt => Some(4.0 / PI),
            EpochKind::MaxSignal => Some(1.0),
            EpochKind::MaxInterference => Some(0.5),
            EpochKind::MinInterference => Some(6.0 / PI),
            EpochKind::TypicalTime => None,
        }
    }
}

impl fmt::Display for EpochKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EpochKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "handover" | "ms-mi" | "minsigmaxint" | "v" => Ok(EpochKind::MinSigMaxInt),
            "max-signal" | "ms" | "maxsignal" | "s" => Ok(EpochKind::MaxSignal),
            "max-interference" | "mi" | "maxinterference" | "i" => Ok(EpochKind::MaxInterference),
            "min-interference" | "mi-min" | "mininterference" | "tropical-handover" => {
                Ok(EpochKind::MinInterference)
            }
            "typical" | "t" | "typicaltime" => Ok(EpochKind::TypicalTime),
            _ => Err(invalid("kind", format!("unknown epoch kind `{s}`"))),
        }
    }
}

/// Distance attenuation `ℓ(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Attenuation {
    /// `r^{-α}`
    PowerLaw { alpha: f64 },
    /// `(1 + r)^{-α}`
    Bounded { alpha: f64 },
    /// `p·1{r <= d}`
    Step { p: f64, d: f64 },
}

impl Attenuation {
    pub fn gain(&self, r: f64) -> f64 {
        match *self {
            Attenuation::PowerLaw { alpha } => r.powf(-alpha),
            Attenuation::Bounded { alpha } => (1.0 + r).powf(-alpha),
            Attenuation::Step { p, d } => {
                if r <= d {
                    p
                } else {
                    0.0
                }
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Attenuation::PowerLaw { alpha } | Attenuation::Bounded { alpha } => {
                if !(alpha > 0.0) {
                    return Err(invalid("alpha", "attenuation exponent must be > 0"));
                }
            }
            Attenuation::Step { p, d } => {
                if !(p > 0.0) {
                    return Err(invalid("p", "step gain must be > 0"));
                }
                if !(d > 0.0) {
                    return Err(invalid("d", "step radius must be > 0"));
                }
            }
        }
        Ok(())
    }
}

/// Link quality metric. Tropical metrics use the strongest interferer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Snr,
    Sir,
    Sinr,
    Stir,
    Stinr,
}

impl Metric {
    pub const ALL: [Metric; 5] = [Metric::Snr, Metric::Sir, Metric::Sinr, Metric::Stir, Metric::Stinr];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Snr => "snr",
            Metric::Sir => "sir",
            Metric::Sinr => "sinr",
            Metric::Stir => "stir",
            Metric::Stinr => "stinr",
        }
    }

    pub fn uses_noise(self) -> bool {
        matches!(self, Metric::Snr | Metric::Sinr | Metric::Stinr)
    }

    pub fn uses_interference(self) -> bool {
        !matches!(self, Metric::Snr)
    }

    pub fn tropical(self) -> bool {
        matches!(self, Metric::Stir | Metric::Stinr)
    }

    /// Ratio `signal / (noise + interference)` where the interference term
    /// is the sum (additive metrics) or the maximum (tropical metrics) of
    /// the received interferer powers.
    pub fn ratio(self, signal: f64, noise: f64, interference: f64) -> f64 {
        let n = if self.uses_noise() { noise } else { 0.0 };
        let i = if self.uses_interference() { interference } else { 0.0 };
        if signal == 0.0 {
            return 0.0;
        }
        signal / (n + i)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "snr" => Ok(Metric::Snr),
            "sir" => Ok(Metric::Sir),
            "sinr" => Ok(Metric::Sinr),
            "stir" => Ok(Metric::Stir),
            "stinr" => Ok(Metric::Stinr),
            _ => Err(invalid("metric", format!("unknown metric `{s}`"))),
        }
    }
}

/// Power received from interferers at `distances` (sorted nondecreasing),
/// with optional fading marks. Tropical interference is the largest
/// received power; interferers at exactly the same distance with no fading
/// are co-located and their powers add.
pub fn interference_power(
    att: &Attenuation,
    distances: &[f64],
    marks: Option<&[f64]>,
    tropical: bool,
) -> f64 {
    match (tropical, marks) {
        (false, Some(m)) => distances.iter().zip(m).map(|(&d, &f)| f * att.gain(d)).sum(),
        (false, None) => distances.iter().map(|&d| att.gain(d)).sum(),
        (true, Some(m)) => distances
            .iter()
            .zip(m)
            .map(|(&d, &f)| f * att.gain(d))
            .fold(0.0, f64::max),
        (true, None) => match distances.first() {
            None => 0.0,
            Some(&d0) => {
                let ties = distances.iter().take_while(|&&d| d == d0).count();
                ties as f64 * att.gain(d0)
            }
        },
    }
}

/// A detected or Palm-sampled epoch: serving distance and sorted interferer
/// distances (co-located interferers appear repeatedly).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Epoch {
    pub kind: EpochKind,
    pub time: f64,
    pub serving: f64,
    pub interferers: Vec<f64>,
}

/// What to evaluate: `P(metric > tau)` at epochs of `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricQuery {
    pub kind: EpochKind,
    pub metric: Metric,
    pub fading: bool,
    /// Linear threshold.
    pub tau: f64,
    pub attenuation: Attenuation,
    pub params: SystemParams,
}

impl MetricQuery {
    /// Power-law attenuation with the exponent from `params`.
    pub fn new(kind: EpochKind, metric: Metric, fading: bool, tau: f64, params: SystemParams) -> Self {
        MetricQuery {
            kind,
            metric,
            fading,
            tau,
            attenuation: Attenuation::PowerLaw { alpha: params.alpha },
            params,
        }
    }

    pub fn with_tau(mut self, tau: f64) -> Self {
        self.tau = tau;
        self
    }

    pub fn with_kind(mut self, kind: EpochKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.attenuation.validate()?;
        if !(self.tau > 0.0) || !self.tau.is_finite() {
            return Err(invalid("tau", format!("threshold must be > 0 and finite, got {}", self.tau)));
        }
        Ok(())
    }

    /// Noise term of the ratio, zero for interference-limited metrics.
    pub fn noise(&self) -> f64 {
        if self.metric.uses_noise() {
            self.params.sigma2
        } else {
            0.0
        }
    }

    /// Metric value for one configuration. `marks` holds the signal mark
    /// followed by one mark per interferer when fading is on.
    pub fn evaluate(&self, serving: f64, interferers: &[f64], marks: Option<&[f64]>, tail: f64) -> f64 {
        let att = &self.attenuation;
        let (s_mark, i_marks) = match marks {
            Some(m) => (m[0], Some(&m[1..])),
            None => (1.0, None),
        };
        let signal = s_mark * att.gain(serving);
        let mut interference = interference_power(att, interferers, i_marks, self.metric.tropical());
        if !self.metric.tropical() {
            interference += tail;
        }
        self.metric.ratio(signal, self.params.sigma2, interference)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip_through_names() {
        for k in EpochKind::ALL {
            assert_eq!(k.name().parse::<EpochKind>().unwrap(), k);
        }
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
        }
    }

    #[test]
    fn tropical_sums_exact_ties_only() {
        let att = Attenuation::PowerLaw { alpha: 2.0 };
        let p = interference_power(&att, &[1.0, 1.0, 2.0], None, true);
        assert_eq!(p, 2.0);
        let p = interference_power(&att, &[1.0, 2.0], None, true);
        assert_eq!(p, 1.0);
        let p = interference_power(&att, &[1.0, 2.0], None, false);
        assert_eq!(p, 1.25);
        let p = interference_power(&att, &[1.0, 2.0], Some(&[0.5, 8.0]), true);
        assert_eq!(p, 2.0);
    }
}
