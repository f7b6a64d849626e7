//! Exact arithmetic in Q(sqrt5), Q(i) and Q[x][sqrt(9x^2 - 1)].

use lucas_euler::sequences::{balancing_root, golden};
use lucas_euler::{QuadExt, Rational, Ring, Sign};

fn main() -> lucas_euler::Result<()> {
    let alpha = golden(Sign::Plus);
    let beta = golden(Sign::Minus);
    println!("alpha = {alpha}");
    println!("beta  = {beta}");
    println!("alpha * beta = {}", alpha.mul(&beta));
    println!("alpha^10 = {}", alpha.pow(10));
    println!("1 / alpha = {}", alpha.inverse()?);

    let i = QuadExt::root(Rational::from(-1));
    println!("i^3 = {}", i.powi(3)?);

    let lambda = balancing_root();
    println!("lambda   = {lambda}");
    println!("lambda^3 = {}", lambda.pow(3));
    println!("norm(lambda^3) = {}", lambda.pow(3).norm());

    let mismatch = alpha.checked_add(&i);
    println!("sqrt5 + i -> {}", mismatch.unwrap_err());
    Ok(())
}
