//! q-Pochhammer symbols of finite, negative and infinite length.

use qseries::{Base, Product, QMonomial};

fn main() -> qseries::Result<()> {
    let order = 15;
    let q = QMonomial::q(1);
    println!("(q;q)_3        = {}", Product::default().poch(&q, 1, 3).eval(order)?);
    println!("(q;q)_inf      = {}", Product::default().poch_inf(&q, 1).eval(order)?);
    println!("1/(q;q)_inf    = {}", Product::default().over_poch_inf(&q, 1).eval(order)?);

    let x: QMonomial = "3".parse()?;
    println!("(3;q)_-2       = {}", Product::default().poch_signed(&x, 1, -2).eval(order)?);

    let q3 = Base::new(3);
    println!("(q^3;q^3)_inf  = {}", Product::default().poch_inf(&q3.q(), q3.step()).eval(order)?);

    let k: QMonomial = "5".parse()?;
    println!("(1-k q^4)/(1-k) at k=5 = {}", Product::default().vwp(&k, 1, 2).eval(order)?);
    Ok(())
}
