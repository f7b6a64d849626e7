//! Fibonacci, Lucas, Bernoulli, Euler and balancing families side by side.

use lucas_euler::{Rational, SequenceCache};

fn main() -> lucas_euler::Result<()> {
    let mut c = SequenceCache::new();
    println!(
        "{:>3} {:>6} {:>6} {:>12} {:>8}",
        "n", "F_n", "L_n", "B_n", "E_n"
    );
    for n in 0..=12 {
        println!(
            "{n:>3} {:>6} {:>6} {:>12} {:>8}",
            c.fibonacci(n)?,
            c.lucas(n)?,
            c.bernoulli_number(n)?.to_string(),
            c.euler_number(n)?
        );
    }
    println!();
    for n in 0..=5 {
        let b = c.balancing_poly(n)?;
        let l = c.lucas_balancing_poly(n)?;
        println!(
            "B*_{n}(x) = {b:<24} C_{n}(x) = {l:<24} B*_{n}(1) = {}, C_{n}(1) = {}",
            b.eval(&Rational::one()),
            l.eval(&Rational::one())
        );
    }
    println!();
    for n in 0..=4 {
        println!("B_{n}(x) = {}", c.bernoulli_poly(n)?);
        println!("E_{n}(x) = {}", c.euler_poly(n)?);
    }
    Ok(())
}
