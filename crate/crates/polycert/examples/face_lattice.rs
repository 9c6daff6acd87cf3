//! Materializes a face lattice, checks the polytope axioms, and writes
//! its Hasse diagram as DOT to stdout.
//!
//!     cargo run --release -p polycert --example face_lattice > hasse4.dot
//!     dot -Tsvg hasse4.dot -o hasse4.svg

use polycert::family;
use polycert::lattice::build_lattice;

fn main() -> polycert::Result<()> {
    let n = 4;
    let lat = build_lattice(&family::system(n)?)?;
    let report = lat.report();
    eprintln!("n={n}: f-vector {:?}", report.f_vector);
    eprintln!("  flags        : {}", report.flag_count);
    eprintln!("  diamond      : {}", report.diamond_ok);
    eprintln!("  connectivity : {}", report.connectivity_ok);
    eprintln!("  report JSON  : {}", serde_json::to_string(&report).expect("serializable"));
    let mut out = std::io::stdout();
    lat.hasse_dot(&mut out)?;
    Ok(())
}
