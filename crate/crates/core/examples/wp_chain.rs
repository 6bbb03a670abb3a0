//! WP-Bailey pairs: the defining relation, and the chain that maps a pair
//! to a new pair.

use qseries::pairs::{chain_transform, defining_check, make_ab_pair, make_singh_pair};
use qseries::{Base, QMonomial};

fn main() -> qseries::Result<()> {
    let m = |s: &str| s.parse::<QMonomial>();
    let singh = make_singh_pair(m("2")?, m("3")?, m("7")?, m("11")?, Base::ONE)?;
    let ab = make_ab_pair(m("2")?, m("3")?, Base::ONE)?;
    for pair in [singh, ab] {
        println!("{:<40} {}", pair.name(), defining_check(&pair, 5, 20));
        let chained = chain_transform(&pair, m("19")?, m("23")?)?;
        println!("{:<40} {}", chained.name(), defining_check(&chained, 5, 20));
        println!("  beta'_1 = {}", chained.beta(1, 6)?);
    }
    Ok(())
}
