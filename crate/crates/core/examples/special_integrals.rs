// The special integrals used by the coverage formulas.

use mobicov::analytic::{special_integral, SpecialIntegral};

pub fn run_example() -> mobicov::Result<()> {
    let cases = [
        ("kappa(1, 4)", SpecialIntegral::Kappa { tau: 1.0, alpha: 4.0 }),
        ("kappa(1, 2.5)", SpecialIntegral::Kappa { tau: 1.0, alpha: 2.5 }),
        ("K(1, 1, 1, 4)", SpecialIntegral::KAlpha { mu: 1.0, x: 1.0, h: 1.0, alpha: 4.0 }),
        ("L(1, 1, 4)", SpecialIntegral::LNu { nu: 1.0, h: 1.0, alpha: 4.0 }),
        ("M(1, 1, 4)", SpecialIntegral::MAlpha { h: 1.0, tau: 1.0, alpha: 4.0 }),
    ];
    for (name, which) in cases {
        println!("{name:>14} = {:.12}", special_integral(which)?);
    }
    let k = special_integral(SpecialIntegral::Kappa { tau: 1.0, alpha: 4.0 })?;
    assert!((k - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
