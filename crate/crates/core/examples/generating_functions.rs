//! Truncated EGF arithmetic and the coefficientwise generating-function checks.

use lucas_euler::egf::{build_gf, check_gf_equation, EgfSeries, GfEquation, GfName, GfParams};
use lucas_euler::{Rational, Ring};

fn main() -> lucas_euler::Result<()> {
    // 1 / cosh z has the Euler numbers as EGF coefficients.
    let sech = EgfSeries::cosh_linear(&Rational::one(), 10).recip()?;
    let coeffs: Vec<String> = sech.coeffs().iter().map(ToString::to_string).collect();
    println!("sech z: {}", coeffs.join(", "));

    let c2 = build_gf(GfName::C2, &GfParams::default(), 3)?;
    for (n, a) in c2.coeffs().iter().enumerate() {
        println!("c2 coefficient {n}: {a}");
    }
    println!("constant term is one: {}", c2.coeff(0).is_one());

    for eq in GfEquation::ALL {
        let res = check_gf_equation(eq, 10)?;
        println!(
            "{eq:<11} order <= 10: {}",
            if res.passed() { "pass" } else { "fail" }
        );
    }
    Ok(())
}
