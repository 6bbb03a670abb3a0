//! Classical summation formulas checked coefficient by coefficient.

use qseries::functions::classical::{bailey_6psi6_check, jackson_6phi5_check, q_binomial_check, q_binomial_infinity_check, q_binomial_zero_check};
use qseries::QMonomial;

fn main() -> qseries::Result<()> {
    let m = |s: &str| s.parse::<QMonomial>();
    println!("6psi6 (4,2,3,5,7)  {}", bailey_6psi6_check(&m("4")?, &m("2")?, &m("3")?, &m("5")?, &m("7")?, 20));
    println!("6phi5 (2,3,5,7)    {}", jackson_6phi5_check(&m("2")?, &m("3")?, &m("5")?, &m("7")?, 20));
    println!("q-binomial a=3     {}", q_binomial_check(&m("3")?, &m("q^2")?, 20));
    println!("a = 0              {}", q_binomial_zero_check(&m("q")?, 20));
    println!("a -> infinity      {}", q_binomial_infinity_check(&m("q")?, 20));
    Ok(())
}
