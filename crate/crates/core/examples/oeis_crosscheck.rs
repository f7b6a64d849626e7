//! Checks the sequence generators against the vendored b-files, or against a
//! user b-file: `oeis_crosscheck <family> <path>`.

use lucas_euler::cli::{bundled_bfile, oeis_check, parse_bfile, Family};

fn main() -> lucas_euler::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let runs = match args.as_slice() {
        [family, path] => {
            let text = std::fs::read(path).map_err(|e| lucas_euler::Error::Io {
                path: path.clone(),
                reason: e.to_string(),
            })?;
            vec![(family.parse::<Family>()?, parse_bfile(text)?)]
        }
        _ => Family::ALL
            .into_iter()
            .map(|f| (f, bundled_bfile(f)))
            .collect(),
    };
    for (family, bfile) in runs {
        let res = oeis_check(family, &bfile)?;
        println!("{:<22} {}  [{}]", res.id, res.status, res.grid);
        if let Some(cx) = res.counterexample {
            println!("    {}: computed {}, b-file {}", cx.params, cx.lhs, cx.rhs);
        }
    }
    Ok(())
}
