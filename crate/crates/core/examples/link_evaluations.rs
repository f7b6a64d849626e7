//! Balancing polynomials evaluated at w_s L_s / 6, with w_s = 1 or i.

use lucas_euler::catalog::{evaluate_identity, ParamKind, Params};

fn main() -> lucas_euler::Result<()> {
    for s in 1..=4 {
        for family in [0, 1] {
            for n in [3, 4] {
                let p = Params::new(vec![
                    (ParamKind::N, n),
                    (ParamKind::S, s),
                    (ParamKind::Family, family),
                ]);
                let (lhs, rhs) = evaluate_identity("link1", &p)?;
                let mark = if lhs == rhs { "=" } else { "!=" };
                println!("{p:<28} {lhs} {mark} {rhs}   [{}]", lhs.ring());
            }
        }
    }
    Ok(())
}
