//! The function f(a,k,z,q): reciprocal antisymmetry, its Lambert form and
//! the closed form for f(a,k,z) - f(1/a,1/k,1/z).

use qseries::check::CheckResult;
use qseries::functions::f::{f, f_closed_form_rhs, f_lambert};
use qseries::{Base, QMonomial};

fn main() -> qseries::Result<()> {
    let order = 20;
    let (a, k, z): (QMonomial, QMonomial, QMonomial) = ("2".parse()?, "3".parse()?, "5".parse()?);
    let forward = f(&a, &k, &z, Base::ONE, order)?;
    let backward = f(&a.inv(), &k.inv(), &z.inv(), Base::ONE, order)?;
    println!("f(2,3,5)        = {forward}");
    println!("Lambert form    : {}", CheckResult::compare(&forward, &f_lambert(&a, &k, &z, Base::ONE, order)?, order));
    let difference = &forward - &backward;
    println!("closed form     : {}", CheckResult::compare(&difference, &f_closed_form_rhs(&a, &k, &z, Base::ONE, order)?, order));
    Ok(())
}
