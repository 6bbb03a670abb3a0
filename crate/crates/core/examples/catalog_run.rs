//! Runs registered identity cases, overrides a binding, and shows how a
//! perturbed identity is caught.

use qseries::catalog::{self, Bindings};

fn main() -> qseries::Result<()> {
    for report in catalog::run_all(Some(15), Some("theta")) {
        println!("{report}");
    }

    let case = catalog::find("thm1/ab").expect("registered");
    let mut overrides = Bindings::new();
    overrides.insert("z".into(), "29".parse()?);
    println!("{}", catalog::run_check(&case, &overrides, Some(15))?);

    let control = catalog::perturbed(&catalog::find("aq-entry").expect("registered"), 12);
    println!("{}", catalog::run_check(&control, &Bindings::new(), Some(15))?);
    Ok(())
}
