// Ordering and scale checks between epoch kinds.

use mobicov::analytic::{comparison_suite, CoverageOptions};
use mobicov::SystemParams;

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams { alpha: 3.0, ..SystemParams::default() };
    let taus = [0.5, 1.0, 2.0];
    let opts = CoverageOptions { mc_samples: 20_000, ..CoverageOptions::default() };
    let report = comparison_suite(&params, &taus, (0.1, 10.0), &opts)?;
    for c in &report.checks {
        let tag = if c.passed { "ok  " } else { "FAIL" };
        println!("{tag} {} ({} points, margin {:.3e})", c.name, c.points, c.worst_margin);
        for v in c.violations.iter().take(2) {
            println!("       {v}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
