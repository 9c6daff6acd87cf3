//! Finitely presented groups: presentations for the {n,n} family and its
//! higher-rank generalization, Todd-Coxeter enumeration, verification of
//! a presentation against the concrete group, and the self-duality check.

mod cayley;
mod enumerate;
mod word;

pub use cayley::{CayleyElement, CayleyGraph};
pub use enumerate::{todd_coxeter, CosetTable, Enumeration, Strategy};
pub use word::{evaluate_letters, Presentation, Word};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family;
use crate::group::{AffineMap, GroupElement};
use crate::sggi::{check_sggi, intersection_condition_full, GeneratorSystem, SchlafliType};

/// The rank-3 presentation of the {n,n} family group on generators
/// 0, 1, 2: involutions, commuting outer pair, the two adjacent products
/// of order n, and one squared mixed-power relator for each k up to n-1.
/// Together with the involution relators that is 6 + (n-1) relators.
pub fn nn_presentation(n: usize) -> Result<Presentation> {
    conjecture_presentation(3, n)
}

/// The rank-d generalization of the family presentation for type
/// {n,...,n}: the string Coxeter relators plus the squared mixed-power
/// relators for every adjacent pair of adjacent-product rotations.
pub fn conjecture_presentation(d: usize, n: usize) -> Result<Presentation> {
    if d < 3 {
        return Err(Error::WrongRank { expected: 3, got: d });
    }
    if n < 3 {
        return Err(Error::ParameterTooSmall(n));
    }
    assert!(d <= 64, "generator indices are stored in a byte");
    let mut relators = Vec::new();
    for i in 0..d {
        for j in i + 2..d {
            relators.push(Word::alternating(i as u8, j as u8, 2));
        }
    }
    for i in 0..d - 1 {
        relators.push(Word::alternating(i as u8, i as u8 + 1, n));
    }
    for r in 0..d - 2 {
        let (a, b, c) = (r as u8, r as u8 + 1, r as u8 + 2);
        for k in 1..n {
            let mixed = Word::alternating(b, c, k).concat(&Word::alternating(a, b, k));
            relators.push(mixed.pow(2));
        }
    }
    Presentation::new(d, relators)
}

/// Report from checking the family presentation against the concrete
/// group of the same n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    /// Every defining relator evaluates to the identity on the concrete
    /// generator triple.
    pub relators_hold: bool,
    /// Coset enumeration over the trivial subgroup reproduces the
    /// concrete group order.
    pub orders_equal: bool,
    pub enumerated_order: usize,
    pub group_order: usize,
}

impl PresentationReport {
    pub fn ok(&self) -> bool {
        self.relators_hold && self.orders_equal
    }
}

/// Builds the concrete system for n and checks the family presentation
/// against it both ways: relators hold in the group, and the enumerated
/// presentation order equals the group order.
pub fn verify_presentation(n: usize, max_cosets: usize) -> Result<PresentationReport> {
    let sys = family::system(n)?;
    verify_presentation_on(&sys, n, max_cosets)
}

/// As [`verify_presentation`], reusing an already-built system.
pub fn verify_presentation_on(
    sys: &GeneratorSystem<AffineMap>,
    n: usize,
    max_cosets: usize,
) -> Result<PresentationReport> {
    let p = nn_presentation(n)?;
    let relators_hold = relators_hold_under(sys, &p, &identity_mapping(p.generator_count()));
    let enumeration = todd_coxeter(&p, &[], max_cosets, Strategy::Hlt)?;
    let group_order = sys.group().order();
    Ok(PresentationReport {
        relators_hold,
        orders_equal: enumeration.index == group_order,
        enumerated_order: enumeration.index,
        group_order,
    })
}

fn identity_mapping(d: usize) -> Vec<u8> {
    (0..d as u8).collect()
}

/// Evaluates every defining relator of `p` (involutions included) on the
/// system's generators after relabeling letters through `mapping`; true
/// when all land on the identity.
pub fn relators_hold_under<E: GroupElement>(
    sys: &GeneratorSystem<E>,
    p: &Presentation,
    mapping: &[u8],
) -> bool {
    assert_eq!(p.generator_count(), sys.rank(), "rank mismatch");
    assert_eq!(mapping.len(), sys.rank());
    p.all_relator_letters().iter().all(|letters| {
        let mapped: Vec<u8> = letters.iter().map(|&l| mapping[l as usize]).collect();
        evaluate_letters(&mapped, sys.generators()).is_identity()
    })
}

/// The self-duality check: substituting generator i by generator d-1-i
/// into every relator of a presentation verified for the system must
/// again give identities. The substituted images generate the group, so
/// success certifies an involutory order-reversing automorphism.
pub fn check_self_dual<E: GroupElement>(sys: &GeneratorSystem<E>, p: &Presentation) -> bool {
    let d = sys.rank();
    let reversal: Vec<u8> = (0..d as u8).rev().collect();
    relators_hold_under(sys, p, &reversal)
}

/// Outcome of one (d, n) pair of the rank sweep.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SweepRecord {
    pub d: usize,
    pub n: usize,
    pub status: SweepStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub schlafli: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub string_c: Option<bool>,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum SweepStatus {
    /// Enumeration finished and the reconstructed group passed the full
    /// string C-group verification with the expected diagonal type.
    Verified,
    /// Enumeration finished but a check failed; the record shows which.
    Failed,
    /// The coset cap was hit; nothing was decided.
    Inconclusive,
}

/// Runs the rank sweep: for each (d, n) the generalized presentation is
/// enumerated; when finite, the group is rebuilt from the coset table and
/// put through the sggi and full intersection checks. Overflows are
/// recorded as inconclusive, never as failures.
pub fn conjecture_sweep(
    d_range: std::ops::RangeInclusive<usize>,
    n_range: std::ops::RangeInclusive<usize>,
    max_cosets: usize,
) -> Result<Vec<SweepRecord>> {
    if d_range.is_empty() || n_range.is_empty() {
        return Err(Error::InvalidRange(
            "rank and parameter ranges must be nonempty".into(),
        ));
    }
    let mut out = Vec::new();
    for d in d_range {
        for n in n_range.clone() {
            out.push(sweep_pair(d, n, max_cosets)?);
        }
    }
    Ok(out)
}

/// One entry of the sweep.
pub fn sweep_pair(d: usize, n: usize, max_cosets: usize) -> Result<SweepRecord> {
    let p = conjecture_presentation(d, n)?;
    let enumeration = match todd_coxeter(&p, &[], max_cosets, Strategy::Hlt) {
        Ok(e) => e,
        Err(Error::Overflow(_)) => {
            return Ok(SweepRecord {
                d,
                n,
                status: SweepStatus::Inconclusive,
                order: None,
                schlafli: None,
                string_c: None,
            });
        }
        Err(other) => return Err(other),
    };
    let order = enumeration.index;
    let graph = CayleyGraph::new(enumeration.table);
    let sys = GeneratorSystem::with_cap(graph.generators(), order.max(1))?;
    let report = check_sggi(&sys);
    let intersection = intersection_condition_full(&sys)?;
    let string_c = report.ok() && intersection;
    let expected_type = SchlafliType(vec![n; d - 1]);
    let status = if string_c && report.schlafli == expected_type {
        SweepStatus::Verified
    } else {
        SweepStatus::Failed
    };
    Ok(SweepRecord {
        d,
        n,
        status,
        order: Some(order),
        schlafli: Some(report.schlafli.0),
        string_c: Some(string_c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    #[test]
    fn family_presentation_relator_counts() {
        assert_eq!(nn_presentation(3).unwrap().relator_count(), 8);
        assert_eq!(nn_presentation(4).unwrap().relator_count(), 9);
        for n in 3..=8 {
            let p = nn_presentation(n).unwrap();
            assert_eq!(p.relator_count(), 6 + (n - 1), "n={n}");
            for w in p.relators() {
                let l = w.letters();
                assert!(!l.is_empty());
                assert!(l.windows(2).all(|ab| ab[0] != ab[1]), "stored reduced");
            }
        }
    }

    #[test]
    fn generalized_presentation_counts() {
        // d=4, n=3: 4 involutions + 3 commuting + 3 adjacent + 4 mixed.
        let p = conjecture_presentation(4, 3).unwrap();
        assert_eq!(p.relator_count(), 14);
        assert_eq!(conjecture_presentation(5, 3).unwrap().generator_count(), 5);
        assert_eq!(
            conjecture_presentation(3, 5).unwrap(),
            nn_presentation(5).unwrap()
        );
        assert!(conjecture_presentation(2, 4).is_err());
        assert!(conjecture_presentation(4, 2).is_err());
    }

    #[test]
    fn enumerated_orders_match_group_orders() {
        for n in 3..=6 {
            let p = nn_presentation(n).unwrap();
            let e = todd_coxeter(&p, &[], 1 << 16, Strategy::Hlt).unwrap();
            assert_eq!(e.index as u64, family::expected_order(n), "n={n}");
        }
    }

    #[test]
    fn verify_presentation_passes_for_small_n() {
        for n in 3..=5 {
            let report = verify_presentation(n, 1 << 16).unwrap();
            assert!(report.relators_hold, "n={n}");
            assert!(report.orders_equal, "n={n}");
        }
    }

    #[test]
    fn stretched_relator_fails_on_the_concrete_group() {
        let n = 4;
        let sys = family::system(n).unwrap();
        let mut relators = nn_presentation(n).unwrap().relators().to_vec();
        // Replace the order-n relator on 0,1 by an order-(n+1) claim.
        let idx = relators
            .iter()
            .position(|w| w == &Word::alternating(0, 1, n))
            .unwrap();
        relators[idx] = Word::alternating(0, 1, n + 1);
        let broken = Presentation::new(3, relators).unwrap();
        assert!(!relators_hold_under(
            &sys,
            &broken,
            &identity_mapping(3)
        ));
    }

    #[test]
    fn self_duality_of_family_systems() {
        for n in 3..=6 {
            let sys = family::system(n).unwrap();
            let p = nn_presentation(n).unwrap();
            assert!(check_self_dual(&sys, &p), "n={n}");
            assert!(check_self_dual(&sys.reversed(), &p), "n={n} reversed");
        }
    }

    #[test]
    fn identity_substitution_always_holds() {
        let sys = family::system(4).unwrap();
        let p = nn_presentation(4).unwrap();
        assert!(relators_hold_under(&sys, &p, &identity_mapping(3)));
    }

    #[test]
    fn swapping_adjacent_generators_is_not_an_automorphism() {
        let sys = family::system(4).unwrap();
        let p = nn_presentation(4).unwrap();
        // rho0 <-> rho1 with rho2 fixed: the commuting relator moves to a
        // non-commuting pair and fails.
        assert!(!relators_hold_under(&sys, &p, &[1, 0, 2]));
    }

    /// The rank-4, n=3 member surjects onto the symmetric group on five
    /// letters through adjacent transpositions; the enumeration must
    /// therefore report at least 120, and exactly 120 when it agrees.
    #[test]
    fn rank4_n3_is_the_simplex_symmetry_group() {
        let p = conjecture_presentation(4, 3).unwrap();
        let transpositions: Vec<Permutation> = (0..4)
            .map(|i| Permutation::transposition(5, i, i + 1))
            .collect();
        let sys = GeneratorSystem::new(transpositions).unwrap();
        assert_eq!(sys.group().order(), 120);
        assert!(relators_hold_under(&sys, &p, &identity_mapping(4)));
        let e = todd_coxeter(&p, &[], 1 << 16, Strategy::Hlt).unwrap();
        assert_eq!(e.index, 120);
    }

    #[test]
    fn sweep_records_rank4_n3_as_verified() {
        let rec = sweep_pair(4, 3, 1 << 16).unwrap();
        assert_eq!(rec.status, SweepStatus::Verified);
        assert_eq!(rec.order, Some(120));
        assert_eq!(rec.schlafli, Some(vec![3, 3, 3]));
        assert_eq!(rec.string_c, Some(true));
    }

    #[test]
    fn sweep_overflow_is_inconclusive() {
        let rec = sweep_pair(4, 4, 64).unwrap();
        assert_eq!(rec.status, SweepStatus::Inconclusive);
        assert_eq!(rec.order, None);
    }

    #[test]
    fn sweep_rejects_empty_ranges() {
        #[allow(clippy::reversed_empty_ranges)]
        let r = conjecture_sweep(4..=3, 3..=3, 100);
        assert!(matches!(r, Err(Error::InvalidRange(_))));
    }

    mod props {
        use super::*;
        use crate::fp::Strategy as TcStrategy;
        use crate::group::{AffineMap, GroupTable};
        use proptest::prelude::*;

        /// Order of the normal closure of `seeds` in the concrete group:
        /// the subgroup generated by all conjugates, computed directly.
        fn normal_closure_order(
            group: &GroupTable<AffineMap>,
            gens: &[AffineMap],
            seeds: &[AffineMap],
        ) -> usize {
            let mut conjugates = vec![gens[0].identity_like()];
            for h in group.elements() {
                let hinv = h.inverse();
                for s in seeds {
                    conjugates.push(hinv.op(s).op(h));
                }
            }
            GroupTable::closure(&conjugates, group.order())
                .expect("closure stays inside the group")
                .order()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            /// Adding relators to the family presentation quotients the
            /// group by the normal closure of their concrete values; the
            /// enumerated index must match |G| divided by that order.
            /// Exercises coincidence handling under real collapses.
            #[test]
            fn quotient_orders_match_normal_closures(
                n in 3usize..=5,
                extras in proptest::collection::vec(
                    proptest::collection::vec(0u8..3, 1..8), 1..=2),
            ) {
                let sys = family::system(n).unwrap();
                let mut relators = nn_presentation(n).unwrap().relators().to_vec();
                let mut seeds = Vec::new();
                for letters in &extras {
                    let w = Word::new(letters.iter().copied());
                    seeds.push(evaluate_letters(w.letters(), sys.generators()));
                    relators.push(w);
                }
                let quotient = Presentation::new(3, relators).unwrap();
                let expected =
                    sys.group().order() / normal_closure_order(sys.group(), sys.generators(), &seeds);
                let hlt = todd_coxeter(&quotient, &[], 1 << 16, TcStrategy::Hlt).unwrap();
                prop_assert_eq!(hlt.index, expected);
                let felsch = todd_coxeter(&quotient, &[], 1 << 16, TcStrategy::Felsch).unwrap();
                prop_assert_eq!(felsch.index, expected);
            }

            /// Subgroup-relative enumeration agrees with the concrete
            /// subgroup's index by Lagrange.
            #[test]
            fn subgroup_indices_match_concrete_closures(
                n in 3usize..=5,
                words in proptest::collection::vec(
                    proptest::collection::vec(0u8..3, 1..6), 1..=2),
            ) {
                let sys = family::system(n).unwrap();
                let p = nn_presentation(n).unwrap();
                let sub_words: Vec<Word> =
                    words.iter().map(|l| Word::new(l.iter().copied())).collect();
                let sub_elems: Vec<AffineMap> = sub_words
                    .iter()
                    .filter(|w| !w.is_empty())
                    .map(|w| w.evaluate(sys.generators()))
                    .collect();
                let sub_order = if sub_elems.is_empty() {
                    1
                } else {
                    GroupTable::closure(&sub_elems, sys.group().order())
                        .unwrap()
                        .order()
                };
                let e = todd_coxeter(&p, &sub_words, 1 << 16, TcStrategy::Hlt).unwrap();
                prop_assert_eq!(e.index * sub_order, sys.group().order());
            }
        }
    }
}
