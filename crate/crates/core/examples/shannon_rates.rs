// Average Shannon rate at epochs, from the coverage curves.

use mobicov::analytic::{shannon_rate, CoverageOptions};
use mobicov::{EpochKind, Metric, MetricQuery, SystemParams};

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams { bandwidth: 10.0, ..SystemParams::default() };
    let opts = CoverageOptions { mc_samples: 20_000, ..CoverageOptions::default() };
    for kind in EpochKind::ALL {
        let add = shannon_rate(&MetricQuery::new(kind, Metric::Sir, true, 1.0, params), &opts)?;
        let trop = shannon_rate(&MetricQuery::new(kind, Metric::Stir, false, 1.0, params), &opts)?;
        println!(
            "{:>18}: fading SIR {:.4} ({}), tropical {:.4} ({})",
            kind.name(),
            add.value,
            add.method.name(),
            trop.value,
            trop.method.name()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
