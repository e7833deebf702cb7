// Coverage probability at each epoch kind over a threshold grid.

use mobicov::analytic::{coverage_curve, CoverageOptions};
use mobicov::{EpochKind, Metric, MetricQuery, SystemParams};

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams::default();
    let taus_db = [-5.0, 0.0, 5.0, 10.0];
    let taus: Vec<f64> = taus_db.iter().map(|d: &f64| 10f64.powf(d / 10.0)).collect();
    let opts = CoverageOptions { mc_samples: 20_000, ..CoverageOptions::default() };
    for (metric, fading) in [(Metric::Sir, true), (Metric::Stir, true), (Metric::Sir, false)] {
        println!("{} {}", metric.name(), if fading { "with fading" } else { "without fading" });
        for kind in EpochKind::ALL {
            let q = MetricQuery::new(kind, metric, fading, 1.0, params);
            let curve = coverage_curve(&q, &taus, &opts)?;
            let cells: Vec<String> = curve.iter().map(|r| format!("{:.4}", r.value)).collect();
            println!("  {:>18} [{}] via {}", kind.name(), cells.join(", "), curve[0].method.name());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
