//! Finite-group machinery over concrete element types.
//!
//! Everything here is generic over [`GroupElement`]: dihedral elements,
//! invertible affine maps over the two-element field, and permutations all
//! implement it, as do the coset-graph elements produced by enumeration.
//! The product convention throughout the crate is apply-left-factor-first:
//! `a.op(&b)` is the element that acts like `a` followed by `b`. With that
//! convention composition of affine maps is associative by construction,
//! and coset and closure code reads in the usual right-coset style.
//!
//! A [`GroupTable`] is the fully enumerated element list of a finite
//! group, sorted by the element's canonical ordering so that iteration
//! order, coset representatives and downstream exports are deterministic.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Default cap on closure size, guarding sweeps against runaway inputs.
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// An element of a concrete finite group.
///
/// `Ord` doubles as the canonical key used for hashing, deduplication and
/// deterministic tie-breaking; implementations derive it from the packed
/// bit representation.
pub trait GroupElement: Clone + Eq + Ord + std::hash::Hash + fmt::Debug {
    /// The identity with the same carrier (dimension, degree) as `self`.
    fn identity_like(&self) -> Self;

    /// Group product, applying `self` first and `other` second.
    /// Panics when the carriers differ; use [`GroupElement::compatible`]
    /// to validate inputs at API boundaries.
    fn op(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// Whether the two elements live in the same carrier.
    fn compatible(&self, other: &Self) -> bool;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }
}

/// An element of the dihedral group of order 2n: a rotation part modulo n
/// and an optional flip. Flips conjugate rotations to their inverses, and
/// every flipped element squares to the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    n: u32,
    rot: u32,
    flip: bool,
}

impl DihedralElement {
    pub fn identity(n: u32) -> Self {
        assert!(n >= 1);
        DihedralElement {
            n,
            rot: 0,
            flip: false,
        }
    }

    pub fn rotation(n: u32, k: u32) -> Self {
        assert!(n >= 1);
        DihedralElement {
            n,
            rot: k % n,
            flip: false,
        }
    }

    pub fn reflection(n: u32, k: u32) -> Self {
        assert!(n >= 1);
        DihedralElement {
            n,
            rot: k % n,
            flip: true,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_flip(&self) -> bool {
        self.flip
    }
}

impl GroupElement for DihedralElement {
    fn identity_like(&self) -> Self {
        DihedralElement::identity(self.n)
    }

    fn op(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dihedral modulus mismatch");
        let n = self.n;
        // Apply self first. A flip in `other` negates self's rotation part.
        let rot = if other.flip {
            (n + other.rot - self.rot) % n
        } else {
            (self.rot + other.rot) % n
        };
        DihedralElement {
            n,
            rot,
            flip: self.flip ^ other.flip,
        }
    }

    fn inverse(&self) -> Self {
        if self.flip {
            *self
        } else {
            DihedralElement {
                n: self.n,
                rot: (self.n - self.rot) % self.n,
                flip: false,
            }
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{} (mod {})",
            if self.flip { "s" } else { "r" },
            self.rot,
            self.n
        )
    }
}

/// An invertible affine transformation `w -> Mw + t` of a vector space
/// over the two-element field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineMap {
    linear: Gf2Matrix,
    translation: Gf2Vector,
}

impl AffineMap {
    /// Builds the map `w -> linear * w + translation`, validating that the
    /// linear part is square, invertible and sized to the translation.
    pub fn new(linear: Gf2Matrix, translation: Gf2Vector) -> Result<Self> {
        if !linear.is_square() {
            return Err(Error::NotSquare {
                rows: linear.rows(),
                cols: linear.cols(),
            });
        }
        if linear.rows() != translation.dim() {
            return Err(Error::DimensionMismatch(format!(
                "linear part is {}x{} but translation has dimension {}",
                linear.rows(),
                linear.cols(),
                translation.dim()
            )));
        }
        if !linear.det()? {
            return Err(Error::DimensionMismatch(
                "linear part of an affine map must be invertible".into(),
            ));
        }
        Ok(AffineMap {
            linear,
            translation,
        })
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap {
            linear: Gf2Matrix::identity(dim),
            translation: Gf2Vector::zeros(dim),
        }
    }

    pub fn from_linear(linear: Gf2Matrix) -> Result<Self> {
        let dim = linear.rows();
        AffineMap::new(linear, Gf2Vector::zeros(dim))
    }

    pub fn from_translation(translation: Gf2Vector) -> Self {
        AffineMap {
            linear: Gf2Matrix::identity(translation.dim()),
            translation,
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn linear(&self) -> &Gf2Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &Gf2Vector {
        &self.translation
    }

    /// True when the linear part is the identity.
    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn apply(&self, v: &Gf2Vector) -> Gf2Vector {
        self.linear.mul_vec(v).xor(&self.translation)
    }

    /// Validated composition entry point; the trait's `op` is the
    /// panicking fast path used by closure internals.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if !self.compatible(other) {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose affine maps of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self.op(other))
    }
}

impl GroupElement for AffineMap {
    fn identity_like(&self) -> Self {
        AffineMap::identity(self.dim())
    }

    fn op(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "affine map dimension mismatch");
        // (self then other)(w) = other.M * (self.M * w + self.t) + other.t
        AffineMap {
            linear: other.linear.mul(&self.linear),
            translation: other.linear.mul_vec(&self.translation).xor(&other.translation),
        }
    }

    fn inverse(&self) -> Self {
        let inv = self
            .linear
            .inverse()
            .expect("elimination on a valid matrix")
            .expect("linear part invertible by construction");
        let translation = inv.mul_vec(&self.translation);
        AffineMap {
            linear: inv,
            translation,
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.dim() == other.dim()
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineMap[t={}; M=", self.translation)?;
        for r in 0..self.linear.rows() {
            if r > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}", self.linear.row_vec(r))?;
        }
        write!(f, "]")
    }
}

/// A permutation of `0..degree`, stored by images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        assert!(i < degree && j < degree && i != j);
        let mut p = Permutation::identity(degree);
        p.images.swap(i, j);
        p
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::DimensionMismatch(
                    "images do not describe a permutation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }
}

impl GroupElement for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn op(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

/// Least k >= 1 with the k-th power of `g` trivial, or an error past `cap`.
pub fn element_order<E: GroupElement>(g: &E, cap: usize) -> Result<usize> {
    assert!(cap >= 1);
    let id = g.identity_like();
    let mut acc = g.clone();
    for k in 1..=cap {
        if acc == id {
            return Ok(k);
        }
        acc = acc.op(g);
    }
    Err(Error::OrderExceedsCap(cap))
}

/// A fully enumerated finite group: a duplicate-free element list in
/// canonical order, closed under product and inverse.
#[derive(Clone, Debug)]
pub struct GroupTable<E> {
    elements: Vec<E>,
    identity_pos: usize,
}

impl<E: GroupElement> GroupTable<E> {
    /// Breadth-first closure of a nonempty generating set under the group
    /// product. Fails with `ClosureExceedsCap` when more than `cap`
    /// distinct elements appear.
    pub fn closure(generators: &[E], cap: usize) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::DimensionMismatch(
                "closure requires at least one generator".into(),
            ));
        };
        for g in generators {
            if !first.compatible(g) {
                return Err(Error::DimensionMismatch(
                    "closure generators have mismatched carriers".into(),
                ));
            }
        }
        let id = first.identity_like();
        let mut seen: HashSet<E> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let next = e.op(g);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureExceedsCap(cap));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut elements: Vec<E> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(GroupTable::from_sorted(elements))
    }

    /// Wraps an explicit element list, validating that it is closed under
    /// the product and contains the identity. Quadratic; intended for
    /// small hand-built tables.
    pub fn from_elements(mut elements: Vec<E>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::DimensionMismatch("empty element list".into()));
        }
        let id = elements[0].identity_like();
        if elements.binary_search(&id).is_err() {
            return Err(Error::NotASubgroup);
        }
        for a in &elements {
            for b in &elements {
                if elements.binary_search(&a.op(b)).is_err() {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(GroupTable::from_sorted(elements))
    }

    fn from_sorted(elements: Vec<E>) -> Self {
        let id = elements[0].identity_like();
        let identity_pos = elements
            .binary_search(&id)
            .expect("closure contains the identity");
        GroupTable {
            elements,
            identity_pos,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, pos: usize) -> &E {
        &self.elements[pos]
    }

    pub fn identity(&self) -> &E {
        &self.elements[self.identity_pos]
    }

    pub fn identity_position(&self) -> usize {
        self.identity_pos
    }

    /// Position of `e` in canonical order, if present.
    pub fn position(&self, e: &E) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.position(e).is_some()
    }

    /// Positions of all of `sub`'s elements inside this table, ascending.
    /// `NotASubgroup` when any element is missing.
    pub fn positions_of(&self, sub: &GroupTable<E>) -> Result<Vec<usize>> {
        sub.elements
            .iter()
            .map(|e| self.position(e).ok_or(Error::NotASubgroup))
            .collect()
    }
}

/// A right coset, stored as sorted positions into the enclosing group's
/// table. The representative is the smallest member, which makes coset
/// lists and everything derived from them reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub representative: usize,
    pub members: Vec<usize>,
}

/// Partition of `group` into right cosets of `subgroup`, in order of each
/// coset's smallest element.
pub fn coset_decomposition<E: GroupElement>(
    group: &GroupTable<E>,
    subgroup: &GroupTable<E>,
) -> Result<Vec<Coset>> {
    group.positions_of(subgroup)?;
    let mut assigned = vec![false; group.order()];
    let mut cosets = Vec::with_capacity(group.order() / subgroup.order());
    for rep in 0..group.order() {
        if assigned[rep] {
            continue;
        }
        let rep_elem = group.element(rep);
        let mut members: Vec<usize> = subgroup
            .elements()
            .iter()
            .map(|s| {
                group
                    .position(&s.op(rep_elem))
                    .expect("group closed under products with subgroup elements")
            })
            .collect();
        members.sort_unstable();
        debug_assert_eq!(members[0], rep);
        for &m in &members {
            assigned[m] = true;
        }
        cosets.push(Coset {
            representative: rep,
            members,
        });
    }
    Ok(cosets)
}

/// Verdict of the coset-closure bound check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetClosure {
    pub closed: bool,
    /// `|subgroup| * |coset_reps|`, an upper bound for the group order
    /// whenever `closed` holds.
    pub bound: u64,
}

/// Checks that right multiplication by each generator permutes the listed
/// cosets of `subgroup`: for every representative h and generator g there
/// is a listed h' with subgroup.h.g = subgroup.h'. When that closure
/// holds, the group generated cannot exceed `|subgroup| * reps.len()`
/// elements.
///
/// Panics if the representatives do not yield pairwise distinct cosets.
pub fn coset_closure_bound<E: GroupElement>(
    generators: &[E],
    subgroup: &GroupTable<E>,
    coset_reps: &[E],
) -> CosetClosure {
    assert!(!coset_reps.is_empty(), "at least one coset representative");
    for (i, a) in coset_reps.iter().enumerate() {
        for b in &coset_reps[i + 1..] {
            assert!(
                !subgroup.contains(&a.op(&b.inverse())),
                "coset representatives must yield pairwise distinct cosets"
            );
        }
    }
    let in_listed_coset = |e: &E| {
        coset_reps
            .iter()
            .any(|h| subgroup.contains(&e.op(&h.inverse())))
    };
    let mut closed = true;
    'outer: for h in coset_reps {
        for g in generators {
            if !in_listed_coset(&h.op(g)) {
                closed = false;
                break 'outer;
            }
        }
    }
    CosetClosure {
        closed,
        bound: subgroup.order() as u64 * coset_reps.len() as u64,
    }
}
