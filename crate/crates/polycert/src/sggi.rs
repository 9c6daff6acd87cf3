//! String-group-generated-by-involutions checks: generator orders, the
//! string (commuting) property, Schlafli types, and the intersection
//! condition on parabolic subgroups.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{element_order, GroupElement, GroupTable, DEFAULT_CLOSURE_CAP};

/// An ordered generator list together with the full closure it generates.
#[derive(Clone, Debug)]
pub struct GeneratorSystem<E> {
    generators: Vec<E>,
    group: GroupTable<E>,
}

impl<E: GroupElement> GeneratorSystem<E> {
    /// Encloses the generators with their breadth-first closure under the
    /// default element cap.
    pub fn new(generators: Vec<E>) -> Result<Self> {
        Self::with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_cap(generators: Vec<E>, cap: usize) -> Result<Self> {
        let group = GroupTable::closure(&generators, cap)?;
        Ok(GeneratorSystem { generators, group })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn group(&self) -> &GroupTable<E> {
        &self.group
    }

    /// The system with its generator list reversed; the group is shared.
    pub fn reversed(&self) -> GeneratorSystem<E> {
        GeneratorSystem {
            generators: self.generators.iter().rev().cloned().collect(),
            group: self.group.clone(),
        }
    }

    /// Sorted positions of the parabolic subgroup generated by the
    /// generators selected by `mask` (bit i = generator i). The empty
    /// selection yields the trivial subgroup.
    fn parabolic_positions(&self, mask: u32) -> Result<Vec<usize>> {
        let selected: Vec<E> = (0..self.rank())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.generators[i].clone())
            .collect();
        if selected.is_empty() {
            return Ok(vec![self.group.identity_position()]);
        }
        let sub = GroupTable::closure(&selected, self.group.order())?;
        self.group.positions_of(&sub)
    }
}

/// Orders of the adjacent generator products, e.g. {n,n} for a rank-3
/// system of that type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchlafliType(pub Vec<usize>);

impl fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Report from [`check_sggi`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SggiReport {
    /// Every generator has order exactly 2.
    pub involutions_ok: bool,
    /// Non-adjacent generator products square to the identity.
    pub string_ok: bool,
    pub schlafli: SchlafliType,
}

impl SggiReport {
    pub fn ok(&self) -> bool {
        self.involutions_ok && self.string_ok
    }
}

/// Checks the sggi axioms and computes the Schlafli type from the orders
/// of adjacent generator products.
pub fn check_sggi<E: GroupElement>(sys: &GeneratorSystem<E>) -> SggiReport {
    let cap = sys.group().order();
    let order = |e: &E| element_order(e, cap).expect("order divides the group order");
    let involutions_ok = sys.generators().iter().all(|g| order(g) == 2);
    let mut string_ok = true;
    for i in 0..sys.rank() {
        for j in i + 2..sys.rank() {
            let prod = sys.generators()[i].op(&sys.generators()[j]);
            if !prod.op(&prod).is_identity() {
                string_ok = false;
            }
        }
    }
    let schlafli = SchlafliType(
        (1..sys.rank())
            .map(|i| order(&sys.generators()[i - 1].op(&sys.generators()[i])))
            .collect(),
    );
    SggiReport {
        involutions_ok,
        string_ok,
        schlafli,
    }
}

/// The full intersection condition: for every pair of generator subsets
/// I, J, the intersection of the parabolic subgroups they generate equals
/// the parabolic subgroup of I intersect J. Exhaustive over all subset
/// pairs with memoized closures; exponential in the rank and meant for
/// rank at most 5 or so.
pub fn intersection_condition_full<E: GroupElement>(sys: &GeneratorSystem<E>) -> Result<bool> {
    let d = sys.rank();
    assert!(d <= 16, "full intersection check is exponential in rank");
    let mut memo: HashMap<u32, Vec<usize>> = HashMap::new();
    for mask in 0..1u32 << d {
        memo.insert(mask, sys.parabolic_positions(mask)?);
    }
    for i_mask in 0..1u32 << d {
        for j_mask in i_mask..1u32 << d {
            let expected = &memo[&(i_mask & j_mask)];
            let inter = sorted_intersection(&memo[&i_mask], &memo[&j_mask]);
            if inter != *expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The reduced rank-3 intersection check: the two outer one-generator
/// subgroups meet the middle one trivially, and the two adjacent
/// two-generator subgroups meet exactly in the middle generator's span.
pub fn intersection_condition_rank3<E: GroupElement>(sys: &GeneratorSystem<E>) -> Result<bool> {
    if sys.rank() != 3 {
        return Err(Error::WrongRank {
            expected: 3,
            got: sys.rank(),
        });
    }
    let id = vec![sys.group().identity_position()];
    let p = |mask: u32| sys.parabolic_positions(mask);
    let trivial_01 = sorted_intersection(&p(0b001)?, &p(0b010)?) == id;
    let trivial_12 = sorted_intersection(&p(0b010)?, &p(0b100)?) == id;
    let middle = sorted_intersection(&p(0b011)?, &p(0b110)?) == p(0b010)?;
    Ok(trivial_01 && trivial_12 && middle)
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::group::Permutation;

    #[test]
    fn family_systems_have_diagonal_type() {
        for n in [3usize, 4, 5] {
            let sys = family::system(n).unwrap();
            let report = check_sggi(&sys);
            assert!(report.involutions_ok, "n={n}");
            assert!(report.string_ok, "n={n}");
            assert_eq!(report.schlafli, SchlafliType(vec![n, n]), "n={n}");
        }
    }

    #[test]
    fn schlafli_renders_in_braces() {
        assert_eq!(SchlafliType(vec![4, 4]).to_string(), "{4,4}");
    }

    #[test]
    fn broken_triple_fails_the_string_check() {
        // Brute-forced in a symmetric group: adjacent transpositions at
        // positions 0 and 1 do not commute, their product has order 3.
        let a = Permutation::transposition(4, 0, 1);
        let b = Permutation::transposition(4, 2, 3);
        let c = Permutation::transposition(4, 1, 2);
        let sys = GeneratorSystem::new(vec![a.clone(), b, c.clone()]).unwrap();
        let report = check_sggi(&sys);
        assert!(report.involutions_ok);
        assert!(!report.string_ok);
        assert_eq!(element_order(&a.op(&c), 8).unwrap(), 3);
    }

    #[test]
    fn rank1_system_passes_everything_trivially() {
        let sys = GeneratorSystem::new(vec![Permutation::transposition(3, 0, 1)]).unwrap();
        assert!(intersection_condition_full(&sys).unwrap());
        let report = check_sggi(&sys);
        assert!(report.involutions_ok && report.string_ok);
        assert_eq!(report.schlafli, SchlafliType(vec![]));
    }

    #[test]
    fn family_intersection_checks_pass_and_agree() {
        for n in 3..=6 {
            let sys = family::system(n).unwrap();
            assert!(intersection_condition_rank3(&sys).unwrap(), "n={n}");
            assert!(intersection_condition_full(&sys).unwrap(), "n={n}");
        }
        // The reduced check stays cheap well past where the full check is
        // worth running routinely.
        for n in 9..=10 {
            let sys = family::system(n).unwrap();
            assert!(intersection_condition_rank3(&sys).unwrap(), "n={n}");
        }
    }

    #[test]
    fn middle_intersection_is_the_middle_generator_span() {
        let sys = family::system(3).unwrap();
        let left = sys.parabolic_positions(0b011).unwrap();
        let right = sys.parabolic_positions(0b110).unwrap();
        let inter = sorted_intersection(&left, &right);
        assert_eq!(inter.len(), 2);
        let middle = sys.parabolic_positions(0b010).unwrap();
        assert_eq!(inter, middle);
    }

    #[test]
    fn rank3_check_rejects_other_ranks() {
        let sys = GeneratorSystem::new(vec![Permutation::transposition(3, 0, 1)]).unwrap();
        assert!(matches!(
            intersection_condition_rank3(&sys),
            Err(Error::WrongRank { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn rotations_have_nonzero_translation_parts() {
        for n in 3..=8 {
            let sys = family::system(n).unwrap();
            let gens = sys.generators();
            let r12 = gens[1].op(&gens[2]);
            let mut p = r12.clone();
            for k in 1..n {
                assert!(!p.translation().is_zero(), "n={n} k={k}");
                p = p.op(&r12);
            }
        }
    }

    #[test]
    fn zero_translation_subgroup_is_the_first_two_generators() {
        for n in 3..=7 {
            let sys = family::system(n).unwrap();
            let sub = sys.parabolic_positions(0b011).unwrap();
            let zero_translation: Vec<usize> = (0..sys.group().order())
                .filter(|&p| sys.group().element(p).translation().is_zero())
                .collect();
            assert_eq!(sub, zero_translation, "n={n}");
        }
    }

    /// A symmetric-group counterexample: transpositions (01), (12), (01)
    /// repeat a generator, so the two-generator parabolics coincide while
    /// their index sets do not.
    #[test]
    fn full_check_detects_an_intersection_failure() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        let sys = GeneratorSystem::new(vec![a.clone(), b, a]).unwrap();
        assert!(!intersection_condition_full(&sys).unwrap());
    }
}
