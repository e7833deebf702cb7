// Distance laws at epochs: sampling, CDFs and stochastic orders.

use mobicov::numerics::ks::{critical_1pct, ks_one_sample};
use mobicov::palm::{joint_laplace, ordering_diagnostics, sample_palm_batch, EpochLaw, NamedLaw};
use mobicov::{EpochKind, SystemParams};

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams { lambda: 2.0, ..SystemParams::default() };
    for kind in EpochKind::ALL {
        let law = EpochLaw::new(NamedLaw::conditioning(kind), params.lambda)?;
        let batch = sample_palm_batch(kind, &params, 8.0, 2000, 3);
        let h: Vec<f64> = batch
            .iter()
            .map(|e| match kind {
                EpochKind::MaxInterference | EpochKind::MinInterference => e.interferers[0],
                _ => e.serving,
            })
            .collect();
        let d = ks_one_sample(&h, |x| law.cdf(x));
        let lt = match joint_laplace(kind, 1.0, 0.5, params.lambda) {
            Ok(v) => format!("{v:.4}"),
            Err(_) => "-".into(),
        };
        println!(
            "{:>18}: median {:.4}, KS {:.4} (1% critical {:.4}), joint transform {lt}",
            kind.name(),
            law.quantile(0.5)?,
            d,
            critical_1pct(h.len()),
        );
    }
    let orders = ordering_diagnostics(params.lambda, &[0.1, 1.0, 10.0])?;
    println!("stochastic orders hold: {} (worst margin {:.3e})", orders.pass, orders.worst_margin);
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
