//! Todd-Coxeter coset enumeration with both strategies: dihedral warmup,
//! the family presentations, and a subgroup-relative run whose index is a
//! vertex count.
//!
//!     cargo run --release -p polycert --example coset_enumeration

use polycert::fp::{nn_presentation, todd_coxeter, Presentation, Strategy, Word};

fn main() -> polycert::Result<()> {
    let dihedral = Presentation::new(2, vec![Word::alternating(0, 1, 5)])?;
    let order = todd_coxeter(&dihedral, &[], 1 << 12, Strategy::Hlt)?.index;
    println!("dihedral <a,b | a2, b2, (ab)^5>: order {order}");

    println!("\nfamily presentations, trivial subgroup:");
    println!("{:>3} {:>8} {:>8}", "n", "scan", "deduce");
    for n in 3..=10 {
        let p = nn_presentation(n)?;
        let hlt = todd_coxeter(&p, &[], 1 << 20, Strategy::Hlt)?.index;
        let felsch = todd_coxeter(&p, &[], 1 << 20, Strategy::Felsch)?.index;
        println!("{n:>3} {hlt:>8} {felsch:>8}");
    }

    // Enumerating relative to the vertex stabilizer <1, 2> counts the
    // vertices of the polytope.
    let p = nn_presentation(5)?;
    let sub = vec![Word::new([1]), Word::new([2])];
    let vertices = todd_coxeter(&p, &sub, 1 << 16, Strategy::Hlt)?.index;
    println!("\nn=5 vertex-stabilizer index: {vertices}");
    Ok(())
}
