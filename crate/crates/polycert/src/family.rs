//! The {n,n} family: a concrete involution triple for every n >= 3.
//!
//! For each n the group lives inside the affine group of the
//! (n-1)-dimensional space over the two-element field. The first and
//! third generators share the same reflection as linear part and differ
//! by a translation along the last coordinate; the second generator is
//! the anti-diagonal reflection. Their closure is a group of order
//! 2^n * n realizing a self-dual regular 3-polytope of type {n,n}.

use crate::error::{Error, Result};
use crate::gf2::{reflection_pair, Gf2Vector};
use crate::group::{AffineMap, GroupTable, DEFAULT_CLOSURE_CAP};
use crate::sggi::GeneratorSystem;

/// The distinguished involution triple for one member of the family.
#[derive(Clone, Debug)]
pub struct Generators {
    n: usize,
    pub rho0: AffineMap,
    pub rho1: AffineMap,
    pub rho2: AffineMap,
}

impl Generators {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_vec(&self) -> Vec<AffineMap> {
        vec![self.rho0.clone(), self.rho1.clone(), self.rho2.clone()]
    }
}

/// Builds the generator triple for the given n.
///
/// The first two generators are purely linear; the third adds the
/// translation by the last unit vector. All three are involutions.
pub fn generators(n: usize) -> Result<Generators> {
    if n < 3 {
        return Err(Error::ParameterTooSmall(n));
    }
    let dim = n - 1;
    let (u, v) = reflection_pair(n)?;
    let last_unit = Gf2Vector::unit(dim, dim - 1);
    let rho0 = AffineMap::from_linear(u.clone())?;
    let rho1 = AffineMap::from_linear(v)?;
    let rho2 = AffineMap::new(u, last_unit)?;
    Ok(Generators { n, rho0, rho1, rho2 })
}

/// The flag count of the n-th member: 2^n * n, saturating far beyond
/// anything the closure cap admits.
pub fn expected_order(n: usize) -> u64 {
    if n >= 64 {
        return u64::MAX;
    }
    (n as u64).saturating_mul(1u64 << n)
}

/// Full element table of the group generated by the triple, with its
/// order checked against 2^n * n. A mismatch is reported as a hard error
/// because every downstream verification keys off that order.
pub fn group(n: usize) -> Result<GroupTable<AffineMap>> {
    let gens = generators(n)?;
    let table = GroupTable::closure(&gens.as_vec(), DEFAULT_CLOSURE_CAP)?;
    let expected = expected_order(n);
    if table.order() as u64 != expected {
        return Err(Error::OrderMismatch {
            expected,
            got: table.order() as u64,
        });
    }
    Ok(table)
}

/// The generator triple packaged with its enumerated group, ready for the
/// string C-group checks.
pub fn system(n: usize) -> Result<GeneratorSystem<AffineMap>> {
    let gens = generators(n)?;
    let sys = GeneratorSystem::new(gens.as_vec())?;
    let expected = expected_order(n);
    if sys.group().order() as u64 != expected {
        return Err(Error::OrderMismatch {
            expected,
            got: sys.group().order() as u64,
        });
    }
    Ok(sys)
}
