// Runs a few acceptance criteria on a small budget.

use mobicov::validation::{Lab, ValidationConfig};

pub fn run_example() -> mobicov::Result<()> {
    let mut lab = Lab::new(ValidationConfig::quick())?;
    for id in [4, 6] {
        println!("{}", lab.run(id)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mobicov::Result<()> {
    run_example()
}
