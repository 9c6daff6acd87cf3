//! Group elements backed by a completed coset table.
//!
//! An enumeration over the trivial subgroup is a regular action: cosets
//! are exactly the group elements and the table columns give right
//! multiplication by each generator. Wrapping coset indices as
//! [`CayleyElement`]s lets a group that exists only as a table run
//! through the same generator-system checks as a concrete matrix group,
//! without ever materializing permutations of the full group.

use std::sync::Arc;

use crate::fp::enumerate::CosetTable;
use crate::group::GroupElement;

/// A coset table together with one witness word per coset, produced by a
/// breadth-first sweep from the identity coset through the table.
#[derive(Debug)]
pub struct CayleyGraph {
    table: CosetTable,
    /// Breadth-first tree: for each coset, the (parent, generator) edge
    /// that discovered it. The identity coset has no parent.
    tree: Vec<Option<(u32, u8)>>,
}

impl CayleyGraph {
    /// Wraps a complete table whose cosets are the group elements.
    /// Panics if some coset is unreachable from the identity, which
    /// cannot happen for a table produced by a completed enumeration.
    pub fn new(table: CosetTable) -> Arc<CayleyGraph> {
        let n = table.num_cosets();
        let mut tree: Vec<Option<(u32, u8)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for g in 0..table.generator_count() {
                let t = table.action(c, g);
                if !seen[t] {
                    seen[t] = true;
                    tree[t] = Some((c as u32, g as u8));
                    reached += 1;
                    queue.push_back(t);
                }
            }
        }
        assert_eq!(reached, n, "coset table must be transitive");
        Arc::new(CayleyGraph { table, tree })
    }

    pub fn order(&self) -> usize {
        self.table.num_cosets()
    }

    pub fn generator_count(&self) -> usize {
        self.table.generator_count()
    }

    /// The generators as elements of the regular action.
    pub fn generators(self: &Arc<Self>) -> Vec<CayleyElement> {
        (0..self.generator_count())
            .map(|g| CayleyElement {
                graph: Arc::clone(self),
                index: self.table.action(0, g) as u32,
            })
            .collect()
    }

    pub fn element(self: &Arc<Self>, index: usize) -> CayleyElement {
        assert!(index < self.order());
        CayleyElement {
            graph: Arc::clone(self),
            index: index as u32,
        }
    }

    /// Witness word for a coset: applying it to the identity coset lands
    /// on `index`. Generators are involutions, so the reversed word is
    /// the inverse.
    fn word(&self, index: u32) -> Vec<u8> {
        let mut letters = Vec::new();
        let mut c = index;
        while let Some((parent, g)) = self.tree[c as usize] {
            letters.push(g);
            c = parent;
        }
        letters.reverse();
        letters
    }

    fn walk(&self, start: u32, letters: impl IntoIterator<Item = u8>) -> u32 {
        let mut c = start as usize;
        for g in letters {
            c = self.table.action(c, g as usize);
        }
        c as u32
    }
}

/// One group element of a table-backed group: a coset index plus the
/// shared graph.
#[derive(Clone, Debug)]
pub struct CayleyElement {
    graph: Arc<CayleyGraph>,
    index: u32,
}

impl CayleyElement {
    pub fn index(&self) -> usize {
        self.index as usize
    }
}

impl PartialEq for CayleyElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) && self.index == other.index
    }
}

impl Eq for CayleyElement {}

impl PartialOrd for CayleyElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CayleyElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index
            .cmp(&other.index)
            .then_with(|| Arc::as_ptr(&self.graph).cmp(&Arc::as_ptr(&other.graph)))
    }
}

impl std::hash::Hash for CayleyElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.index.hash(state);
    }
}

impl GroupElement for CayleyElement {
    fn identity_like(&self) -> Self {
        CayleyElement {
            graph: Arc::clone(&self.graph),
            index: 0,
        }
    }

    fn op(&self, other: &Self) -> Self {
        assert!(
            Arc::ptr_eq(&self.graph, &other.graph),
            "elements of different table-backed groups"
        );
        let word = self.graph.word(other.index);
        CayleyElement {
            graph: Arc::clone(&self.graph),
            index: self.graph.walk(self.index, word),
        }
    }

    fn inverse(&self) -> Self {
        let mut word = self.graph.word(self.index);
        word.reverse();
        CayleyElement {
            graph: Arc::clone(&self.graph),
            index: self.graph.walk(0, word),
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph)
    }

    fn is_identity(&self) -> bool {
        self.index == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::enumerate::{todd_coxeter, Strategy};
    use crate::fp::word::{Presentation, Word};
    use crate::group::{element_order, GroupTable};

    fn dihedral_graph(n: usize) -> Arc<CayleyGraph> {
        let p = Presentation::new(2, vec![Word::alternating(0, 1, n)]).unwrap();
        let e = todd_coxeter(&p, &[], 1 << 12, Strategy::Hlt).unwrap();
        CayleyGraph::new(e.table)
    }

    #[test]
    fn regular_action_recovers_the_group() {
        let graph = dihedral_graph(7);
        assert_eq!(graph.order(), 14);
        let gens = graph.generators();
        let closure = GroupTable::closure(&gens, 32).unwrap();
        assert_eq!(closure.order(), 14);
    }

    #[test]
    fn orders_and_inverses_behave() {
        let graph = dihedral_graph(9);
        let gens = graph.generators();
        assert_eq!(element_order(&gens[0], 20).unwrap(), 2);
        assert_eq!(element_order(&gens[1], 20).unwrap(), 2);
        let rot = gens[0].op(&gens[1]);
        assert_eq!(element_order(&rot, 20).unwrap(), 9);
        assert!(rot.op(&rot.inverse()).is_identity());
        for idx in 0..graph.order() {
            let e = graph.element(idx);
            assert!(e.op(&e.inverse()).is_identity());
        }
    }

    #[test]
    fn composition_matches_table_walks() {
        let graph = dihedral_graph(5);
        for a in 0..graph.order() {
            for b in 0..graph.order() {
                let ea = graph.element(a);
                let eb = graph.element(b);
                // Associativity against a third element.
                let ec = graph.element((a + b) % graph.order());
                assert_eq!(ea.op(&eb).op(&ec), ea.op(&eb.op(&ec)));
            }
        }
    }
}
