//! Builds the group of each family member by breadth-first closure and
//! tabulates the orders against the 2^n * n formula.
//!
//!     cargo run --release -p polycert --example group_orders

use polycert::family;

fn main() -> polycert::Result<()> {
    println!("{:>3} {:>10} {:>10}", "n", "closure", "2^n*n");
    for n in 3..=12 {
        let group = family::group(n)?;
        println!(
            "{n:>3} {:>10} {:>10}",
            group.order(),
            family::expected_order(n)
        );
    }
    Ok(())
}
