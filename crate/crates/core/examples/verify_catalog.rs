//! Runs every catalog identity on a reduced grid and prints the text report.
//!
//! Pass `--full` for the default grid.

use lucas_euler::catalog::Grid;
use lucas_euler::cli::run_verify;

fn main() -> lucas_euler::Result<()> {
    let grid = if std::env::args().any(|a| a == "--full") {
        Grid::default()
    } else {
        Grid {
            n_max: 10,
            j_max: 3,
            s_max: 4,
            q_set: vec![3, 5],
        }
    };
    let report = run_verify(&["all".into()], &grid)?;
    print!("{}", report.to_text());
    Ok(())
}
