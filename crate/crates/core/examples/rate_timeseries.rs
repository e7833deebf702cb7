// Tropical rate along one trajectory, and its time average against the
// typical-time analytic value.

use mobicov::analytic::{shannon_rate, CoverageOptions};
use mobicov::dynamics::{mean_timeseries_rate, sample_heads, shannon_timeseries, SimulationWindow};
use mobicov::{EpochKind, Metric, MetricQuery, SystemParams};

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams::default();
    let window = SimulationWindow { t_obs: 200.0, seed: 5, ..SimulationWindow::default() };
    let heads = sample_heads(&params, &window)?;
    let times: Vec<f64> = (0..=10).map(|i| 0.5 * i as f64).collect();
    for p in shannon_timeseries(&heads, &params, &window, &times)? {
        println!("t = {:4.1}  l1 = {:.4}  l2 = {:.4}  rate = {:.4}", p.time, p.l1, p.l2, p.rate);
    }
    let avg = mean_timeseries_rate(&heads, &params, &window, 4000)?;
    let q = MetricQuery::new(EpochKind::TypicalTime, Metric::Stir, false, 1.0, params);
    let exact = shannon_rate(&q, &CoverageOptions::default())?;
    println!("time average {avg:.4}, typical-time value {:.4}", exact.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
