//! Random prime bindings for a case, reproducible from a seed.

use qseries::catalog;

fn main() {
    let case = catalog::find("f-doubling").expect("registered");
    for report in catalog::run_random(&case, 2024, 4, Some(15)) {
        let bindings: Vec<String> = report.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("{:<20} {}", bindings.join(" "), report.status);
    }
}
