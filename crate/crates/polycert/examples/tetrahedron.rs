//! The smallest member of the family is the tetrahedron: same f-vector,
//! same flag count, and lattice-isomorphic to the boundary of the
//! 3-simplex built independently from transpositions on four letters.
//!
//!     cargo run --release -p polycert --example tetrahedron

use polycert::family;
use polycert::group::Permutation;
use polycert::lattice::{build_lattice, lattices_isomorphic};
use polycert::sggi::{check_sggi, GeneratorSystem};

fn main() -> polycert::Result<()> {
    let sys = family::system(3)?;
    let report = check_sggi(&sys);
    let lat = build_lattice(&sys)?;
    println!("family member n=3");
    println!("  group order : {}", sys.group().order());
    println!("  type        : {}", report.schlafli);
    println!("  f-vector    : {:?}", lat.f_vector());
    println!("  flags       : {}", lat.enumerate_flags().len());

    let transpositions: Vec<Permutation> = (0..3)
        .map(|i| Permutation::transposition(4, i, i + 1))
        .collect();
    let simplex_sys = GeneratorSystem::new(transpositions)?;
    let simplex = build_lattice(&simplex_sys)?;
    println!("simplex boundary from transpositions on 4 letters");
    println!("  group order : {}", simplex_sys.group().order());
    println!("  f-vector    : {:?}", simplex.f_vector());

    let iso = lattices_isomorphic(&lat, &simplex)?;
    println!("lattices isomorphic: {iso}");
    Ok(())
}
