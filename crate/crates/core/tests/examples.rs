//! Every example runs to completion.

mod birds_and_heads {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/birds_and_heads.rs"));
}

#[test]
fn birds_and_heads_runs() {
    birds_and_heads::run_example().expect("birds_and_heads");
}

mod coverage_curves {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coverage_curves.rs"));
}

#[test]
fn coverage_curves_runs() {
    coverage_curves::run_example().expect("coverage_curves");
}

mod epoch_intensities {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/epoch_intensities.rs"));
}

#[test]
fn epoch_intensities_runs() {
    epoch_intensities::run_example().expect("epoch_intensities");
}

mod orderings {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/orderings.rs"));
}

#[test]
fn orderings_runs() {
    orderings::run_example().expect("orderings");
}

mod palm_laws {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/palm_laws.rs"));
}

#[test]
fn palm_laws_runs() {
    palm_laws::run_example().expect("palm_laws");
}

mod quick_validation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quick_validation.rs"));
}

#[test]
fn quick_validation_runs() {
    quick_validation::run_example().expect("quick_validation");
}

mod rate_timeseries {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rate_timeseries.rs"));
}

#[test]
fn rate_timeseries_runs() {
    rate_timeseries::run_example().expect("rate_timeseries");
}

mod shannon_rates {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/shannon_rates.rs"));
}

#[test]
fn shannon_rates_runs() {
    shannon_rates::run_example().expect("shannon_rates");
}

mod special_integrals {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/special_integrals.rs"));
}

#[test]
fn special_integrals_runs() {
    special_integrals::run_example().expect("special_integrals");
}
