//! The linear algebra the construction stands on: the circulant and its
//! block-structured powers, the involutory reflection pair, and the
//! partial-sum basis matrix, all over the two-element field.
//!
//!     cargo run --release -p polycert --example bit_matrices

use polycert::gf2::{annihilator_check, circulant, partial_sum_matrix, reflection_pair};

fn main() -> polycert::Result<()> {
    let n = 5;
    let a = circulant(n)?;
    println!("circulant (n={n}):\n{a}\n");
    println!("its (n-1)-th power:\n{}\n", a.pow(n as u64 - 1)?);

    let (u, v) = reflection_pair(n)?;
    println!("reflections:\n{u}\n\n{v}\n");
    println!("product equals the circulant: {}", u.mul(&v) == a);
    println!(
        "dihedral relations: u^2 = v^2 = 1: {}, (uv)^n = 1: {}",
        u.mul(&u).is_identity() && v.mul(&v).is_identity(),
        a.pow(n as u64)?.is_identity(),
    );

    let b = partial_sum_matrix(n)?;
    let elim = b.det_rank_inverse()?;
    println!("\npartial-sum matrix:\n{b}");
    println!("det {} rank {}", elim.det as u8, elim.rank);
    println!(
        "sum of the first n powers vanishes: {}",
        annihilator_check(n)?
    );
    Ok(())
}
