//! Palm laws of the distances seen at each epoch kind.
//!
//! With `λπ` as rate, every conditioning distance `H` has `H²` Gamma
//! distributed (Nakagami), serving distances at the interference epochs are
//! `H·sqrt(U)`, and all stations farther than `H` form a Poisson process
//! with radial density `2πλr`.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Exp, Gamma};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::{Epoch, EpochKind, SystemParams};
use crate::numerics::special::{erfc, gamma, gamma_lr, gamma_ur, ln_gamma};
use crate::numerics::SimRng;

/// Distances with a known law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NamedLaw {
    /// Handover distance, Nakagami(3/2).
    HV,
    /// Serving distance at max-signal, Nakagami(1/2).
    HS,
    /// Nearest interferer at max-interference, Nakagami(3/2).
    HI,
    /// Tied interferers at min-interference, Nakagami(5/2).
    HMinI,
    /// Nearest station at a typical time, Rayleigh.
    R,
    /// Nearest interferer at max-signal, Nakagami(3/2).
    RS,
    /// Second-nearest station at a typical time, Nakagami(2).
    R1,
    /// Serving distance at max-interference.
    RI,
    /// Serving distance at min-interference.
    RMinI,
    /// `R_S` given `H_S = h`.
    RSGivenHS(f64),
    /// `R₁` given `R = r`.
    R1GivenR(f64),
}

impl NamedLaw {
    pub fn parse(name: &str) -> Result<NamedLaw> {
        Ok(match name {
            "H_V" | "hv" => NamedLaw::HV,
            "H_S" | "hs" => NamedLaw::HS,
            "H_I" | "hi" => NamedLaw::HI,
            "H_mI" | "hmi" => NamedLaw::HMinI,
            "R" | "r" => NamedLaw::R,
            "R_S" | "rs" => NamedLaw::RS,
            "R_1" | "r1" => NamedLaw::R1,
            "R_I" | "ri" => NamedLaw::RI,
            "R_mI" | "rmi" => NamedLaw::RMinI,
            _ => return Err(invalid("law", format!("unknown law `{name}`"))),
        })
    }

    /// Law of the conditioning distance at an epoch kind.
    pub fn conditioning(kind: EpochKind) -> NamedLaw {
        match kind {
            EpochKind::MinSigMaxInt => NamedLaw::HV,
            EpochKind::MaxSignal => NamedLaw::HS,
            EpochKind::MaxInterference => NamedLaw::HI,
            EpochKind::MinInterference => NamedLaw::HMinI,
            EpochKind::TypicalTime => NamedLaw::R,
        }
    }

    /// Law of the serving distance at an epoch kind.
    pub fn serving(kind: EpochKind) -> NamedLaw {
        match kind {
            EpochKind::MaxInterference => NamedLaw::RI,
            EpochKind::MinInterference => NamedLaw::RMinI,
            k => NamedLaw::conditioning(k),
        }
    }

    fn nakagami_shape(self) -> Option<f64> {
        match self {
            NamedLaw::HV | NamedLaw::HI | NamedLaw::RS => Some(1.5),
            NamedLaw::HS => Some(0.5),
            NamedLaw::HMinI => Some(2.5),
            NamedLaw::R => Some(1.0),
            NamedLaw::R1 => Some(2.0),
            _ => None,
        }
    }
}

/// A named law at intensity `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EpochLaw {
    pub law: NamedLaw,
    pub lambda: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eval {
    Pdf,
    Cdf,
    Quantile,
}

impl EpochLaw {
    pub fn new(law: NamedLaw, lambda: f64) -> Result<EpochLaw> {
        if !(lambda > 0.0) {
            return Err(invalid("lambda", "must be > 0"));
        }
        if let NamedLaw::RSGivenHS(h) | NamedLaw::R1GivenR(h) = law {
            if !(h >= 0.0) {
                return Err(invalid("h", "conditioning distance must be >= 0"));
            }
        }
        Ok(EpochLaw { law, lambda })
    }

    fn lp(&self) -> f64 {
        self.lambda * PI
    }

    pub fn pdf(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return if r == 0.0 && self.law.nakagami_shape() == Some(0.5) {
                2.0 * self.lp().sqrt() / PI.sqrt()
            } else {
                0.0
            };
        }
        let lp = self.lp();
        let x = lp * r * r;
        match self.law {
            NamedLaw::RI => 4.0 * lp * r * erfc(x.sqrt()),
            NamedLaw::RMinI => {
                4.0 * lp * r / 3.0 * (erfc(x.sqrt()) + 2.0 * r * self.lambda.sqrt() * (-x).exp())
            }
            NamedLaw::RSGivenHS(h) | NamedLaw::R1GivenR(h) => {
                if r <= h {
                    0.0
                } else {
                    2.0 * lp * r * (-lp * (r * r - h * h)).exp()
                }
            }
            law => {
                let m = law.nakagami_shape().expect("nakagami");
                (2.0f64.ln() + m * lp.ln() + (2.0 * m - 1.0) * r.ln() - x - ln_gamma(m)).exp()
            }
        }
    }

    pub fn cdf(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let lp = self.lp();
        let x = lp * r * r;
        match self.law {
            // P(m, x) + x·Γ(m-1, x)/Γ(m) with m = 3/2, 5/2
            NamedLaw::RI => gamma_lr(1.5, x).unwrap() + x * gamma_ur(0.5, x).unwrap() * gamma(0.5) / gamma(1.5),
            NamedLaw::RMinI => gamma_lr(2.5, x).unwrap() + x * gamma_ur(1.5, x).unwrap() * gamma(1.5) / gamma(2.5),
            NamedLaw::RSGivenHS(h) | NamedLaw::R1GivenR(h) => {
                if r <= h {
                    0.0
                } else {
                    -(-lp * (r * r - h * h)).exp_m1()
                }
            }
            law => gamma_lr(law.nakagami_shape().expect("nakagami"), x).unwrap(),
        }
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&p) {
            return Err(invalid("p", "quantile level must be in [0, 1)"));
        }
        let lp = self.lp();
        if let NamedLaw::RSGivenHS(h) | NamedLaw::R1GivenR(h) = self.law {
            return Ok((h * h - (-p).ln_1p() / lp).sqrt());
        }
        if self.law == NamedLaw::R {
            return Ok((-(-p).ln_1p() / lp).sqrt());
        }
        let (mut lo, mut hi) = (0.0, 1.0 / lp.sqrt());
        while self.cdf(hi) < p {
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-15 * hi {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn eval(&self, x: f64, what: Eval) -> Result<f64> {
        if !(x >= 0.0) {
            return Err(invalid("x", "must be >= 0"));
        }
        match what {
            Eval::Pdf => Ok(self.pdf(x)),
            Eval::Cdf => Ok(self.cdf(x)),
            Eval::Quantile => self.quantile(x),
        }
    }

    pub fn sample(&self, rng: &mut SimRng) -> f64 {
        let lp = self.lp();
        match self.law {
            NamedLaw::RI => nakagami(1.5, lp, rng) * rng.random::<f64>().sqrt(),
            NamedLaw::RMinI => nakagami(2.5, lp, rng) * rng.random::<f64>().sqrt(),
            NamedLaw::RSGivenHS(h) | NamedLaw::R1GivenR(h) => {
                (h * h + Exp::new(lp).unwrap().sample(rng)).sqrt()
            }
            law => nakagami(law.nakagami_shape().expect("nakagami"), lp, rng),
        }
    }
}

/// `H` with `H² ~ Gamma(shape m, rate lp)`.
fn nakagami(m: f64, lp: f64, rng: &mut SimRng) -> f64 {
    Gamma::new(m, 1.0 / lp).unwrap().sample(rng).sqrt()
}

/// One epoch configuration drawn from the Palm law of `kind`; stations
/// beyond the conditioning distance are generated out to `h_max`.
pub fn sample_palm_config(kind: EpochKind, params: &SystemParams, h_max: f64, rng: &mut SimRng) -> Epoch {
    let lp = params.lp();
    let h = nakagami(kind.shape(), lp, rng);
    let serving = if kind.uniform_serving() {
        h * rng.random::<f64>().sqrt()
    } else {
        h
    };
    let mut interferers = vec![h; kind.colocated()];
    poisson_beyond(h, h_max, lp, rng, &mut interferers);
    Epoch {
        kind,
        time: 0.0,
        serving,
        interferers,
    }
}

/// Appends the distances in `(h, h_max]` of a Poisson process with radial
/// density `2πλr`, in increasing order.
pub fn poisson_beyond(h: f64, h_max: f64, lp: f64, rng: &mut SimRng, out: &mut Vec<f64>) {
    let exp = Exp::new(lp).unwrap();
    let mut r2 = h * h;
    let cap = h_max * h_max;
    loop {
        r2 += exp.sample(rng);
        if r2 > cap {
            break;
        }
        out.push(r2.sqrt());
    }
}

/// `n` Palm configurations of `kind` from the stream `(seed, index)`.
pub fn sample_palm_batch(
    kind: EpochKind,
    params: &SystemParams,
    h_max: f64,
    n: usize,
    seed: u64,
) -> Vec<Epoch> {
    let mut rng = crate::numerics::rng_for(seed, 100 + kind as u64);
    (0..n).map(|_| sample_palm_config(kind, params, h_max, &mut rng)).collect()
}

/// `E[e^{-γH² - βR²}]` for the pair (conditioning `H`, other distance `R`)
/// at max-signal (`R = R_S`), max-interference and min-interference
/// (`R` the serving distance).
pub fn joint_laplace(kind: EpochKind, gamma: f64, beta: f64, lambda: f64) -> Result<f64> {
    if !(gamma >= 0.0) || !(beta >= 0.0) {
        return Err(invalid("gamma/beta", "transform arguments must be >= 0"));
    }
    if !(lambda > 0.0) {
        return Err(invalid("lambda", "must be > 0"));
    }
    let lp = lambda * PI;
    let a = 1.0 + gamma / lp;
    let b = beta / lp;
    match kind {
        EpochKind::MaxSignal => Ok((1.0 + b).recip() * (a + b).powf(-0.5)),
        EpochKind::MaxInterference => Ok(difference_quotient(a, b, 0.5)),
        EpochKind::MinInterference => Ok(difference_quotient(a, b, 1.5)),
        k => Err(invalid("kind", format!("no joint transform for {k}"))),
    }
}

/// `(1/(e·b))·[a^{-e} - (a+b)^{-e}]`, which tends to `a^{-e-1}` as `b → 0`.
fn difference_quotient(a: f64, b: f64, e: f64) -> f64 {
    if b == 0.0 {
        return a.powf(-e - 1.0);
    }
    let rel = b / a;
    if rel < 1e-6 {
        // a^{-e-1}·(1 - (e+1)/2·rel + (e+1)(e+2)/6·rel²)
        return a.powf(-e - 1.0) * (1.0 - 0.5 * (e + 1.0) * rel + (e + 1.0) * (e + 2.0) / 6.0 * rel * rel);
    }
    -a.powf(-e) * (-e * rel.ln_1p()).exp_m1() / (e * b)
}

/// Result of the ordering checks on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub pass: bool,
    /// Smallest slack over all inequalities (negative means violated).
    pub worst_margin: f64,
    pub failures: Vec<String>,
}

/// Laplace-transform, moment-generating and likelihood-ratio orderings of
/// the epoch distances on `grid` (transform arguments) and on a distance
/// grid.
pub fn ordering_diagnostics(lambda: f64, grid: &[f64]) -> Result<OrderingReport> {
    if grid.is_empty() {
        return Err(invalid("grid", "must be nonempty"));
    }
    if grid.iter().any(|&g| !(g >= 0.0)) {
        return Err(invalid("grid", "arguments must be >= 0"));
    }
    let lp = lambda * PI;
    let lt = |m: f64, g: f64| (1.0 + g / lp).powf(-m);
    let mut worst = f64::INFINITY;
    let mut failures = Vec::new();
    let mut check = |name: &str, lo: f64, hi: f64| {
        let slack = hi - lo;
        let tol = 1e-14 * hi.abs().max(1.0);
        worst = worst.min(slack);
        if slack < -tol {
            failures.push(format!("{name}: {lo} > {hi}"));
        }
    };
    for &g in grid {
        check(&format!("LT H_V <= LT R at {g}"), lt(1.5, g), lt(1.0, g));
        check(&format!("LT R <= LT H_S at {g}"), lt(1.0, g), lt(0.5, g));
        check(&format!("LT H_mI <= LT H_I at {g}"), lt(2.5, g), lt(1.5, g));
        let ri = joint_laplace(EpochKind::MaxInterference, 0.0, g, lambda)?;
        let rmi = joint_laplace(EpochKind::MinInterference, 0.0, g, lambda)?;
        check(&format!("LT R_mI <= LT R_I at {g}"), rmi, ri);
        // MGF of squared distances, defined for arguments below λπ
        let s = g.min(0.99 * lp);
        let mgf = |m: f64| (1.0 - s / lp).powf(-m);
        check(&format!("MGF R <= MGF H_V at {s}"), mgf(1.0), mgf(1.5));
        check(&format!("MGF H_S <= MGF R at {s}"), mgf(0.5), mgf(1.0));
        check(&format!("MGF H_I <= MGF H_mI at {s}"), mgf(1.5), mgf(2.5));
    }
    let rayleigh = EpochLaw::new(NamedLaw::R1, lambda)?;
    let hv = EpochLaw::new(NamedLaw::HV, lambda)?;
    let hi = EpochLaw::new(NamedLaw::HI, lambda)?;
    let hmi = EpochLaw::new(NamedLaw::HMinI, lambda)?;
    let scale = 1.0 / lp.sqrt();
    let mut prev = (0.0, 0.0);
    for i in 1..=400 {
        let r = scale * i as f64 * 0.0125;
        let ratio_a = rayleigh.pdf(r) / hv.pdf(r);
        let ratio_b = hmi.pdf(r) / hi.pdf(r);
        if i > 1 {
            check(&format!("f_R1/f_H_V nondecreasing at {r}"), prev.0 * (1.0 - 1e-12), ratio_a);
            check(&format!("f_H_mI/f_H_I nondecreasing at {r}"), prev.1 * (1.0 - 1e-12), ratio_b);
        }
        prev = (ratio_a, ratio_b);
    }
    Ok(OrderingReport {
        pass: failures.is_empty(),
        worst_margin: worst,
        failures,
    })
}
