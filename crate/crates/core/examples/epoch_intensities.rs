// Simulates the moving network and compares epoch rates with their
// closed forms.

use mobicov::dynamics::{simulate, SimulationWindow};
use mobicov::{EpochKind, SystemParams};

pub fn run_example() -> mobicov::Result<()> {
    let params = SystemParams { lambda: 0.5, speed: 2.0, ..SystemParams::default() };
    let window = SimulationWindow { t_obs: 400.0, h_max: 8.0, seed: 11, ..SimulationWindow::default() };
    let sim = simulate(&params, &window, 2, 0)?;
    println!("{:>18} {:>8} {:>10} {:>10}", "kind", "count", "rate", "expected");
    for kind in EpochKind::ALL {
        let Some(unit) = kind.unit_intensity() else { continue };
        let expected = unit * params.speed * params.lambda.sqrt();
        println!("{:>18} {:>8} {:>10.4} {:>10.4}", kind.name(), sim.count(kind), sim.intensity(kind), expected);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
