//! Theta functions and Lambert series, each computed two ways.

use qseries::functions::lambert::{lambert, LambertSpec};
use qseries::functions::theta::{borwein_a, borwein_a_character, phi_product, phi_sum, psi_product, psi_sum, Sign};
use qseries::{Base, QMonomial};

fn main() -> qseries::Result<()> {
    let order = 20;
    println!("phi(q) sum      = {}", phi_sum(Sign::Plus, Base::ONE, order));
    println!("phi(q) product  = {}", phi_product(Sign::Plus, Base::ONE, order)?);
    println!("psi(q) sum      = {}", psi_sum(Base::ONE, order));
    println!("psi(q) product  = {}", psi_product(Base::ONE, order)?);
    println!("a(q) lattice    = {}", borwein_a(order));
    println!("a(q) Lambert    = {}", borwein_a_character(order));

    let divisors = lambert(&LambertSpec::new(QMonomial::one(), 1)?, order)?;
    println!("sum q^n/(1-q^n) = {divisors}");
    Ok(())
}
