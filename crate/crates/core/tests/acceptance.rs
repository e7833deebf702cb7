//! Acceptance suite: one line per criterion, full budget.

use std::io::Write;

use mobicov::validation::{Lab, ValidationConfig, CRITERIA};

#[test]
fn acceptance_criteria() {
    let mut lab = Lab::new(ValidationConfig::default()).expect("config");
    let outcomes = lab.run_all().expect("criteria run");
    assert_eq!(outcomes.len(), CRITERIA.len());
    let passed = outcomes.iter().filter(|o| o.passed).count();
    // written to the raw handle so the lines survive output capture
    let mut out = std::io::stdout().lock();
    for o in &outcomes {
        writeln!(out, "{o}").unwrap();
    }
    writeln!(out, "acceptance: {passed}/{} criteria pass", outcomes.len()).unwrap();
}
