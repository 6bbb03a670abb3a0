//! Truncated Laurent series: arithmetic, inversion and equality to order.

use qseries::{QMonomial, Series};

fn main() -> qseries::Result<()> {
    let order = 12;
    let one_minus_q = &Series::one(order) - &Series::monomial(&QMonomial::q(1), order);
    let geometric = one_minus_q.invert()?;
    println!("1/(1-q)            = {geometric}");
    println!("(1-q) * 1/(1-q)    = {}", &one_minus_q * &geometric);

    let laurent = &Series::monomial(&"q^-2".parse()?, order) + &Series::monomial(&"-3/2*q".parse()?, order);
    println!("q^-2 - 3/2 q       = {laurent}  (valuation {:?})", laurent.valuation());
    println!("(q^-2 - 3/2 q)^3   = {}", laurent.pow(3));
    println!("substitute q -> q^2: {}", geometric.substitute(2));
    Ok(())
}
