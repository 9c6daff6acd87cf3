//! Face lattices of abstract polytopes built from generator systems.
//!
//! Faces of rank i are the right cosets of the parabolic subgroup that
//! omits the i-th generator; two proper faces of distinct ranks are
//! incident exactly when their cosets intersect. The unique minimal and
//! maximal faces are kept implicit and handled by the axiom checks.
//! Everything downstream (flag enumeration, diamond and connectivity
//! checks, duals, DOT exports) works on that combinatorial structure
//! alone, independent of the group the lattice came from.

use std::collections::HashMap;
use std::io::Write;

use serde::Serialize;

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::group::{coset_decomposition, GroupElement, GroupTable};
use crate::sggi::GeneratorSystem;

/// Node budget for the default isomorphism search.
pub const DEFAULT_ISO_BUDGET: u64 = 20_000_000;

/// A proper face: one right coset, stored as sorted positions into the
/// originating group table. Only the incidence structure matters after
/// construction; the members are kept for inspection.
#[derive(Clone, Debug)]
pub struct Face {
    pub representative: u32,
    pub members: Vec<u32>,
}

/// A flag as one proper face index per rank; the improper minimal and
/// maximal faces belong to every flag and are left implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag(pub Vec<u32>);

/// The ranked face poset of an abstract polytope.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    rank: usize,
    group_order: usize,
    faces: Vec<Vec<Face>>,
    /// Incidence bit-matrices for each rank pair i < j, triangular order.
    inc: Vec<Gf2Matrix>,
}

fn pair_slot(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < rank);
    i * rank - i * (i + 1) / 2 + (j - i - 1)
}

/// Builds the face lattice of a generator system. The caller is expected
/// to have verified the sggi and intersection conditions first; the
/// construction itself only needs the enumerated group.
pub fn build_lattice<E: GroupElement>(sys: &GeneratorSystem<E>) -> Result<FaceLattice> {
    let d = sys.rank();
    let group = sys.group();
    let mut faces: Vec<Vec<Face>> = Vec::with_capacity(d);
    for omit in 0..d {
        let kept: Vec<E> = sys
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, g)| g.clone())
            .collect();
        let sub = if kept.is_empty() {
            GroupTable::from_elements(vec![group.identity().clone()])?
        } else {
            GroupTable::closure(&kept, group.order())?
        };
        let cosets = coset_decomposition(group, &sub)?;
        faces.push(
            cosets
                .into_iter()
                .map(|c| Face {
                    representative: c.representative as u32,
                    members: c.members.into_iter().map(|m| m as u32).collect(),
                })
                .collect(),
        );
    }
    let mut inc = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            let mut m = Gf2Matrix::zeros(faces[i].len().max(1), faces[j].len().max(1));
            for (a, fa) in faces[i].iter().enumerate() {
                for (b, fb) in faces[j].iter().enumerate() {
                    if sorted_intersects(&fa.members, &fb.members) {
                        m.set(a, b, true);
                    }
                }
            }
            inc.push(m);
        }
    }
    Ok(FaceLattice {
        rank: d,
        group_order: group.order(),
        faces,
        inc,
    })
}

fn sorted_intersects(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

impl FaceLattice {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the group the lattice was built from; zero for lattices
    /// assembled directly from incidence data.
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    pub fn faces(&self, rank: usize) -> &[Face] {
        &self.faces[rank]
    }

    /// Incidence between proper faces of distinct ranks.
    pub fn incident(&self, rank_a: usize, a: usize, rank_b: usize, b: usize) -> bool {
        assert_ne!(rank_a, rank_b, "incidence is queried across ranks");
        if rank_a < rank_b {
            self.inc[pair_slot(self.rank, rank_a, rank_b)].get(a, b)
        } else {
            self.inc[pair_slot(self.rank, rank_b, rank_a)].get(b, a)
        }
    }

    /// Test-facing constructor from raw incidence data.
    #[cfg(test)]
    pub(crate) fn from_incidence(
        face_counts: &[usize],
        incident: impl Fn(usize, usize, usize, usize) -> bool,
    ) -> FaceLattice {
        let rank = face_counts.len();
        let faces: Vec<Vec<Face>> = face_counts
            .iter()
            .map(|&count| {
                (0..count)
                    .map(|k| Face {
                        representative: k as u32,
                        members: Vec::new(),
                    })
                    .collect()
            })
            .collect();
        let mut inc = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                let mut m = Gf2Matrix::zeros(face_counts[i].max(1), face_counts[j].max(1));
                for a in 0..face_counts[i] {
                    for b in 0..face_counts[j] {
                        if incident(i, a, j, b) {
                            m.set(a, b, true);
                        }
                    }
                }
                inc.push(m);
            }
        }
        FaceLattice {
            rank,
            group_order: 0,
            faces,
            inc,
        }
    }

    /// The diamond condition: every section of rank 2 contains exactly
    /// two intermediate faces. Sections bounded by the improper faces are
    /// included: every rank-1 face has exactly two vertices, and every
    /// face of rank d-2 lies in exactly two facets.
    pub fn check_diamond(&self) -> bool {
        let d = self.rank;
        if self.faces.iter().any(|f| f.is_empty()) {
            return false;
        }
        if d == 1 {
            return self.faces[0].len() == 2;
        }
        for edge in 0..self.faces[1].len() {
            let vertices = (0..self.faces[0].len())
                .filter(|&v| self.incident(0, v, 1, edge))
                .count();
            if vertices != 2 {
                return false;
            }
        }
        for face in 0..self.faces[d - 2].len() {
            let facets = (0..self.faces[d - 1].len())
                .filter(|&f| self.incident(d - 2, face, d - 1, f))
                .count();
            if facets != 2 {
                return false;
            }
        }
        for r in 0..d.saturating_sub(2) {
            for a in 0..self.faces[r].len() {
                for b in 0..self.faces[r + 2].len() {
                    if !self.incident(r, a, r + 2, b) {
                        continue;
                    }
                    let between = (0..self.faces[r + 1].len())
                        .filter(|&m| self.incident(r, a, r + 1, m) && self.incident(r + 1, m, r + 2, b))
                        .count();
                    if between != 2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All maximal chains with one face per proper rank, in lexicographic
    /// order of face indices. For a string C-group input the count equals
    /// the group order.
    pub fn enumerate_flags(&self) -> Vec<Flag> {
        let mut out = Vec::new();
        let mut chain: Vec<u32> = Vec::with_capacity(self.rank);
        self.extend_chain(&mut chain, &mut out);
        out
    }

    fn extend_chain(&self, chain: &mut Vec<u32>, out: &mut Vec<Flag>) {
        let r = chain.len();
        if r == self.rank {
            out.push(Flag(chain.clone()));
            return;
        }
        'faces: for idx in 0..self.faces[r].len() {
            for (lower, &c) in chain.iter().enumerate() {
                if !self.incident(lower, c as usize, r, idx) {
                    continue 'faces;
                }
            }
            chain.push(idx as u32);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }

    /// Strong flag connectivity: the graph whose vertices are flags and
    /// whose edges join flags differing in exactly one face must be
    /// connected, and every flag must have exactly one i-adjacent flag
    /// for each rank i.
    pub fn check_strong_connectivity(&self) -> bool {
        let flags = self.enumerate_flags();
        self.connectivity_of(&flags)
    }

    fn connectivity_of(&self, flags: &[Flag]) -> bool {
        if flags.is_empty() {
            return false;
        }
        let mut uf = UnionFind::with_len(flags.len());
        for i in 0..self.rank {
            let mut holes: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
            for (fi, flag) in flags.iter().enumerate() {
                let mut key = flag.0.clone();
                key[i] = u32::MAX;
                holes.entry(key).or_default().push(fi);
            }
            for members in holes.values() {
                if members.len() != 2 {
                    return false;
                }
                uf.union(members[0] as u32, members[1] as u32);
            }
        }
        let root = uf.find(0);
        (0..flags.len()).all(|i| uf.find(i as u32) == root)
    }

    /// The order-reversed lattice: ranks are flipped and incidence is
    /// carried over unchanged.
    pub fn dual(&self) -> FaceLattice {
        let d = self.rank;
        let faces: Vec<Vec<Face>> = (0..d).map(|i| self.faces[d - 1 - i].clone()).collect();
        let mut inc = Vec::with_capacity(d * (d - 1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                // Dual pair (i, j) corresponds to original (d-1-j, d-1-i).
                inc.push(self.inc[pair_slot(d, d - 1 - j, d - 1 - i)].transpose());
            }
        }
        FaceLattice {
            rank: d,
            group_order: self.group_order,
            faces,
            inc,
        }
    }

    /// Axiom summary together with the f-vector and flag count.
    pub fn report(&self) -> LatticeReport {
        let flags = self.enumerate_flags();
        LatticeReport {
            rank: self.rank,
            f_vector: self.f_vector(),
            flag_count: flags.len() as u64,
            diamond_ok: self.check_diamond(),
            connectivity_ok: self.connectivity_of(&flags),
        }
    }

    /// Writes the Hasse diagram as a DOT digraph: one node per face
    /// labeled `rank:index` (including the improper faces), an edge for
    /// every covering incidence, oriented upward in rank.
    pub fn hasse_dot(&self, w: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
        writeln!(w, "digraph hasse {{")?;
        writeln!(w, "  rankdir=BT;")?;
        writeln!(w, "  node [shape=box];")?;
        writeln!(w, "  \"-1:0\";")?;
        for (r, layer) in self.faces.iter().enumerate() {
            for idx in 0..layer.len() {
                writeln!(w, "  \"{r}:{idx}\";")?;
            }
        }
        writeln!(w, "  \"{}:0\";", self.rank)?;
        for idx in 0..self.faces[0].len() {
            writeln!(w, "  \"-1:0\" -> \"0:{idx}\";")?;
        }
        for r in 0..self.rank - 1 {
            for a in 0..self.faces[r].len() {
                for b in 0..self.faces[r + 1].len() {
                    if self.incident(r, a, r + 1, b) {
                        writeln!(w, "  \"{r}:{a}\" -> \"{}:{b}\";", r + 1)?;
                    }
                }
            }
        }
        let top = self.rank;
        for idx in 0..self.faces[top - 1].len() {
            writeln!(w, "  \"{}:{idx}\" -> \"{top}:0\";", top - 1)?;
        }
        writeln!(w, "}}")
    }

    /// Writes the flag-adjacency graph as an undirected DOT graph. Nodes
    /// are flags labeled by their face indices; each edge carries the
    /// rank at which the two flags differ.
    pub fn flag_graph_dot(&self, w: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
        let flags = self.enumerate_flags();
        writeln!(w, "graph flags {{")?;
        for (fi, flag) in flags.iter().enumerate() {
            let label: Vec<String> = flag.0.iter().map(|x| x.to_string()).collect();
            writeln!(w, "  f{fi} [label=\"{}\"];", label.join(","))?;
        }
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..self.rank {
            let mut holes: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
            for (fi, flag) in flags.iter().enumerate() {
                let mut key = flag.0.clone();
                key[i] = u32::MAX;
                holes.entry(key).or_default().push(fi);
            }
            for members in holes.values() {
                if let [a, b] = members[..] {
                    edges.push((a.min(b), a.max(b), i));
                }
            }
        }
        edges.sort_unstable();
        for (a, b, i) in edges {
            writeln!(w, "  f{a} -- f{b} [label=\"{i}\"];")?;
        }
        writeln!(w, "}}")
    }
}

/// JSON-facing summary of a built lattice.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LatticeReport {
    pub rank: usize,
    pub f_vector: Vec<usize>,
    pub flag_count: u64,
    pub diamond_ok: bool,
    pub connectivity_ok: bool,
}

/// Whether the two lattices are isomorphic as ranked incidence posets,
/// decided by backtracking with the default node budget.
pub fn lattices_isomorphic(a: &FaceLattice, b: &FaceLattice) -> Result<bool> {
    lattices_isomorphic_with_budget(a, b, DEFAULT_ISO_BUDGET)
}

/// Exact rank- and incidence-preserving bijection search. Faces are
/// matched most-constrained-first; candidates are pruned by incidence
/// profiles before backtracking. Exceeding `budget` search nodes is an
/// error rather than a verdict.
pub fn lattices_isomorphic_with_budget(
    a: &FaceLattice,
    b: &FaceLattice,
    budget: u64,
) -> Result<bool> {
    if a.rank != b.rank || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let d = a.rank;
    let offsets: Vec<usize> = {
        let mut acc = 0;
        let mut out = Vec::with_capacity(d);
        for r in 0..d {
            out.push(acc);
            acc += a.faces[r].len();
        }
        out
    };
    let total: usize = a.f_vector().iter().sum();
    let global = |r: usize, idx: usize| offsets[r] + idx;
    let rank_of: Vec<usize> = (0..d)
        .flat_map(|r| std::iter::repeat_n(r, a.faces[r].len()))
        .collect();
    let idx_of: Vec<usize> = (0..d).flat_map(|r| 0..a.faces[r].len()).collect();

    let profile = |lat: &FaceLattice, r: usize, idx: usize| -> Vec<usize> {
        (0..d)
            .map(|other| {
                if other == r {
                    0
                } else {
                    (0..lat.faces[other].len())
                        .filter(|&o| lat.incident(r, idx, other, o))
                        .count()
                }
            })
            .collect()
    };
    let prof_a: Vec<Vec<usize>> = (0..total)
        .map(|g| profile(a, rank_of[g], idx_of[g]))
        .collect();
    let prof_b: Vec<Vec<usize>> = (0..total)
        .map(|g| profile(b, rank_of[g], idx_of[g]))
        .collect();
    for r in 0..d {
        let mut pa: Vec<&Vec<usize>> = (0..a.faces[r].len()).map(|i| &prof_a[global(r, i)]).collect();
        let mut pb: Vec<&Vec<usize>> = (0..b.faces[r].len()).map(|i| &prof_b[global(r, i)]).collect();
        pa.sort();
        pb.sort();
        if pa != pb {
            return Ok(false);
        }
    }

    // Match order: grow a connected front so each new face is constrained
    // by as many placed neighbors as possible.
    let mut order: Vec<usize> = Vec::with_capacity(total);
    let mut placed = vec![false; total];
    let mut neighbor_count = vec![0usize; total];
    for step in 0..total {
        let pick = if step == 0 {
            0
        } else {
            (0..total)
                .filter(|&g| !placed[g])
                .max_by_key(|&g| (neighbor_count[g], std::cmp::Reverse(g)))
                .expect("unplaced face exists")
        };
        placed[pick] = true;
        order.push(pick);
        let (pr, pi) = (rank_of[pick], idx_of[pick]);
        for g in 0..total {
            if !placed[g] && rank_of[g] != pr && a.incident(pr, pi, rank_of[g], idx_of[g]) {
                neighbor_count[g] += 1;
            }
        }
    }

    let mut mapping: Vec<Option<u32>> = vec![None; total];
    let mut used = vec![false; total];
    let mut nodes_left = budget;
    backtrack_iso(
        a,
        b,
        &order,
        0,
        &rank_of,
        &idx_of,
        &prof_a,
        &prof_b,
        &offsets,
        &mut mapping,
        &mut used,
        &mut nodes_left,
    )
    .map_err(|e| match e {
        Error::SearchBudgetExceeded(_) => Error::SearchBudgetExceeded(budget),
        other => other,
    })
}

#[allow(clippy::too_many_arguments)]
fn backtrack_iso(
    a: &FaceLattice,
    b: &FaceLattice,
    order: &[usize],
    pos: usize,
    rank_of: &[usize],
    idx_of: &[usize],
    prof_a: &[Vec<usize>],
    prof_b: &[Vec<usize>],
    offsets: &[usize],
    mapping: &mut Vec<Option<u32>>,
    used: &mut Vec<bool>,
    nodes_left: &mut u64,
) -> Result<bool> {
    if pos == order.len() {
        return Ok(true);
    }
    let s = order[pos];
    let (sr, si) = (rank_of[s], idx_of[s]);
    for cand_idx in 0..b.faces[sr].len() {
        let cand = offsets[sr] + cand_idx;
        if used[cand] || prof_a[s] != prof_b[cand] {
            continue;
        }
        if *nodes_left == 0 {
            return Err(Error::SearchBudgetExceeded(u64::MAX));
        }
        *nodes_left -= 1;
        let consistent = order[..pos].iter().all(|&t| {
            let (tr, ti) = (rank_of[t], idx_of[t]);
            if tr == sr {
                return true;
            }
            let mapped = mapping[t].unwrap() as usize - offsets[tr];
            a.incident(sr, si, tr, ti) == b.incident(sr, cand_idx, tr, mapped)
        });
        if !consistent {
            continue;
        }
        mapping[s] = Some(cand as u32);
        used[cand] = true;
        if backtrack_iso(
            a, b, order, pos + 1, rank_of, idx_of, prof_a, prof_b, offsets, mapping, used,
            nodes_left,
        )? {
            return Ok(true);
        }
        mapping[s] = None;
        used[cand] = false;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::group::{DihedralElement, Permutation};
    use crate::sggi::GeneratorSystem;

    fn family_lattice(n: usize) -> FaceLattice {
        build_lattice(&family::system(n).unwrap()).unwrap()
    }

    fn square_lattice() -> FaceLattice {
        let sys = GeneratorSystem::new(vec![
            DihedralElement::reflection(4, 0),
            DihedralElement::reflection(4, 1),
        ])
        .unwrap();
        build_lattice(&sys).unwrap()
    }

    #[test]
    fn tetrahedral_f_vector() {
        let lat = family_lattice(3);
        assert_eq!(lat.f_vector(), vec![4, 6, 4]);
    }

    #[test]
    fn n4_f_vector() {
        let lat = family_lattice(4);
        assert_eq!(lat.f_vector(), vec![8, 16, 8]);
    }

    #[test]
    fn f_vector_entries_divide_the_group_order() {
        for n in 3..=6 {
            let sys = family::system(n).unwrap();
            let lat = build_lattice(&sys).unwrap();
            for (i, &count) in lat.f_vector().iter().enumerate() {
                let kept: Vec<_> = sys
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let parabolic = crate::group::GroupTable::closure(&kept, 1 << 16).unwrap();
                assert_eq!(
                    count * parabolic.order(),
                    sys.group().order(),
                    "n={n} rank {i}"
                );
            }
        }
    }

    #[test]
    fn rank1_lattice_is_a_segment() {
        let sys = GeneratorSystem::new(vec![Permutation::transposition(2, 0, 1)]).unwrap();
        let lat = build_lattice(&sys).unwrap();
        assert_eq!(lat.f_vector(), vec![2]);
        assert!(lat.check_diamond());
        assert_eq!(lat.enumerate_flags().len(), 2);
    }

    #[test]
    fn diamond_holds_on_family_lattices() {
        for n in [3, 5, 7] {
            assert!(family_lattice(n).check_diamond(), "n={n}");
        }
    }

    #[test]
    fn deleting_a_face_breaks_the_diamond() {
        let lat = family_lattice(3);
        // Keep only the first five rank-1 faces; all other incidences stay.
        let mutated =
            FaceLattice::from_incidence(&[4, 5, 4], |ri, a, rj, b| lat.incident(ri, a, rj, b));
        assert!(!mutated.check_diamond());
    }

    #[test]
    fn flag_counts_match_group_orders() {
        for n in 3..=6 {
            let lat = family_lattice(n);
            assert_eq!(
                lat.enumerate_flags().len() as u64,
                family::expected_order(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn square_has_eight_flags() {
        let lat = square_lattice();
        assert_eq!(lat.f_vector(), vec![4, 4]);
        assert_eq!(lat.enumerate_flags().len(), 8);
        assert!(lat.check_diamond());
        assert!(lat.check_strong_connectivity());
    }

    #[test]
    fn flag_graph_is_connected_and_regular() {
        let lat = family_lattice(4);
        let flags = lat.enumerate_flags();
        assert_eq!(flags.len(), 64);
        assert!(lat.check_strong_connectivity());
        // Exactly one i-adjacent flag per rank, so i-adjacency is a
        // fixed-point-free involution on flags.
        for (fi, flag) in flags.iter().enumerate() {
            for i in 0..lat.rank() {
                let mates: Vec<usize> = flags
                    .iter()
                    .enumerate()
                    .filter(|(fj, other)| {
                        *fj != fi
                            && other.0[i] != flag.0[i]
                            && other
                                .0
                                .iter()
                                .zip(&flag.0)
                                .enumerate()
                                .all(|(k, (x, y))| k == i || x == y)
                    })
                    .map(|(fj, _)| fj)
                    .collect();
                assert_eq!(mates.len(), 1, "flag {fi} rank {i}");
            }
        }
    }

    #[test]
    fn disjoint_union_is_not_strongly_connected() {
        let square = square_lattice();
        let (v, e) = (4usize, 4usize);
        let doubled = FaceLattice::from_incidence(&[2 * v, 2 * e], |ri, a, rj, b| {
            debug_assert!(ri == 0 && rj == 1);
            let _ = (ri, rj);
            let (copy_a, copy_b) = (a / v, b / e);
            copy_a == copy_b && square.incident(0, a % v, 1, b % e)
        });
        assert!(doubled.check_diamond());
        assert!(!doubled.check_strong_connectivity());
    }

    #[test]
    fn dual_of_dual_preserves_structure() {
        let lat = family_lattice(4);
        let dd = lat.dual().dual();
        assert_eq!(dd.f_vector(), lat.f_vector());
        for r in 0..lat.rank() {
            for a in 0..lat.faces(r).len() {
                for r2 in r + 1..lat.rank() {
                    for b in 0..lat.faces(r2).len() {
                        assert_eq!(lat.incident(r, a, r2, b), dd.incident(r, a, r2, b));
                    }
                }
            }
        }
    }

    #[test]
    fn dual_reverses_f_vector() {
        let lat = family_lattice(5);
        let mut fv = lat.f_vector();
        fv.reverse();
        assert_eq!(lat.dual().f_vector(), fv);
    }

    #[test]
    fn lattice_is_isomorphic_to_itself_and_its_dual() {
        let lat = family_lattice(3);
        assert!(lattices_isomorphic(&lat, &lat).unwrap());
        assert!(lattices_isomorphic(&lat, &lat.dual()).unwrap());
    }

    #[test]
    fn mismatched_f_vectors_are_never_isomorphic() {
        let lat = family_lattice(3);
        let square = square_lattice();
        assert!(!lattices_isomorphic(&lat, &square).unwrap());
    }

    #[test]
    fn iso_search_budget_error_fires() {
        let lat = family_lattice(4);
        assert!(matches!(
            lattices_isomorphic_with_budget(&lat, &lat.dual(), 3),
            Err(Error::SearchBudgetExceeded(_))
        ));
    }

    #[test]
    fn non_isomorphic_same_f_vector_detected() {
        // A hexagon against two disjoint triangles: same f-vector (6, 6),
        // different incidence structure.
        let hex_sys = GeneratorSystem::new(vec![
            DihedralElement::reflection(6, 0),
            DihedralElement::reflection(6, 1),
        ])
        .unwrap();
        let hexagon = build_lattice(&hex_sys).unwrap();
        let tri_sys = GeneratorSystem::new(vec![
            DihedralElement::reflection(3, 0),
            DihedralElement::reflection(3, 1),
        ])
        .unwrap();
        let triangle = build_lattice(&tri_sys).unwrap();
        let two_triangles = FaceLattice::from_incidence(&[6, 6], |_, a, _, b| {
            a / 3 == b / 3 && triangle.incident(0, a % 3, 1, b % 3)
        });
        assert!(!lattices_isomorphic(&hexagon, &two_triangles).unwrap());
    }

    #[test]
    fn hasse_dot_is_deterministic_and_well_formed() {
        let lat = family_lattice(3);
        let mut first = Vec::new();
        lat.hasse_dot(&mut first).unwrap();
        let mut second = Vec::new();
        lat.hasse_dot(&mut second).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert!(text.starts_with("digraph hasse {"));
        // 1 + 4 + 6 + 4 + 1 nodes.
        assert_eq!(text.matches(";").count() - text.matches("->").count() - 2, 16);
    }

    #[test]
    fn report_summarizes_axioms() {
        let lat = family_lattice(3);
        let report = lat.report();
        assert_eq!(report.f_vector, vec![4, 6, 4]);
        assert_eq!(report.flag_count, 24);
        assert!(report.diamond_ok && report.connectivity_ok);
    }
}
