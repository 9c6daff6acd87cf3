//! Runs the string C-group verification for a range of members: the
//! involution and commuting axioms, the Schlafli type, and both routes to
//! the intersection condition.
//!
//!     cargo run --release -p polycert --example string_c_checks

use polycert::family;
use polycert::sggi::{check_sggi, intersection_condition_full, intersection_condition_rank3};

fn main() -> polycert::Result<()> {
    for n in 3..=8 {
        let sys = family::system(n)?;
        let report = check_sggi(&sys);
        let reduced = intersection_condition_rank3(&sys)?;
        let full = intersection_condition_full(&sys)?;
        println!(
            "n={n}: order {:>5}, type {}, involutions {}, string {}, intersection reduced/full {}/{}",
            sys.group().order(),
            report.schlafli,
            report.involutions_ok,
            report.string_ok,
            reduced,
            full,
        );
    }
    Ok(())
}
