//! Sweeps the higher-rank generalization of the family presentation:
//! enumerates each (d, n) pair, rebuilds the group from its coset table,
//! and runs the full string C-group verification on it.
//!
//!     cargo run --release -p polycert --example rank_sweep

use polycert::fp::{conjecture_sweep, SweepStatus};

fn main() -> polycert::Result<()> {
    let records = conjecture_sweep(3..=5, 3..=4, 1 << 20)?;
    println!(
        "{:>3} {:>3} {:>9} {:>13} {:>9} status",
        "d", "n", "order", "type", "string C"
    );
    for r in records {
        let order = r.order.map_or("-".into(), |o| o.to_string());
        let schlafli = r
            .schlafli
            .as_ref()
            .map_or("-".into(), |t| format!("{t:?}"));
        let string_c = r.string_c.map_or("-".into(), |b| b.to_string());
        let status = match r.status {
            SweepStatus::Verified => "verified",
            SweepStatus::Failed => "FAILED",
            SweepStatus::Inconclusive => "inconclusive",
        };
        println!(
            "{:>3} {:>3} {:>9} {:>13} {:>9} {}",
            r.d, r.n, order, schlafli, string_c, status
        );
    }
    Ok(())
}
