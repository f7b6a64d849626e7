//! Deliberately corrupted identities and series, each of which must be rejected.

use lucas_euler::catalog::{check_spec, negative_controls, Grid};
use lucas_euler::egf::{check_gf_equation_with, GfEquation, GfOptions, Perturbation};
use lucas_euler::SequenceCache;

fn main() -> lucas_euler::Result<()> {
    let mut cache = SequenceCache::new();
    for spec in negative_controls() {
        let res = check_spec(spec, &Grid::default(), &mut cache)?;
        println!("{}: {}", spec.id, res.status);
        if let Some(cx) = res.counterexample {
            println!(
                "    at {}\n    lhs = {}\n    rhs = {}",
                cx.params, cx.lhs, cx.rhs
            );
        }
    }
    let opts = GfOptions {
        perturbation: Some(Perturbation::DropC2Term(1)),
        ..GfOptions::default()
    };
    let res = check_gf_equation_with(GfEquation::Thm2, 4, &opts)?;
    println!(
        "thm2 with c2 missing its z^1 term: first failure at order {:?}",
        res.first_failing_order()
    );
    Ok(())
}
