//! Ordinary Bailey pairs under the substitution q -> q^3, a = q^-1.

use qseries::pairs::{defining_check, make_msz_pair, make_slater_pair, make_unit_pair};
use qseries::{Base, QMonomial};

fn main() -> qseries::Result<()> {
    let a: QMonomial = "q^-1".parse()?;
    let base = Base::new(3);
    let pairs = [
        make_unit_pair(a.clone(), base)?,
        make_slater_pair(a.clone(), "2".parse()?, "3".parse()?, base)?,
        make_msz_pair(a, "5".parse()?, base)?,
    ];
    for pair in &pairs {
        println!("{:<40} {}", pair.name(), defining_check(pair, 6, 24));
        println!("  alpha_2 = {}", pair.alpha(2, 12)?);
    }
    Ok(())
}
