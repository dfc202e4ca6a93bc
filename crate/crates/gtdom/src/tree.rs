//! Grundy total dominating sequences of trees.
//!
//! Repeatedly pick the smallest-id leaf `u` of the shrinking tree, record its
//! support `w`, and delete both; vertices that become isolated along the way
//! stay in the tree and are simply never chosen. The emitted sequence is the
//! chosen leaves followed by the recorded supports in reverse. Its length is
//! exactly twice the vertex cover number of the tree, and the recorded
//! supports form a minimum vertex cover.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::sequence::LegalSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree must have at least 2 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("input graph is not connected")]
    NotConnected,
    #[error("input graph contains a cycle")]
    HasCycle,
}

/// The leaf/support pairs produced by one run, in the order they were chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeRunTrace {
    pub chosen_leaves: Vec<usize>,
    pub supports: Vec<usize>,
}

impl TreeRunTrace {
    /// The support set `W`; a minimum vertex cover of the tree.
    pub fn support_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.supports.iter().copied())
    }
}

fn check_tree(tree: &Graph) -> Result<(), TreeError> {
    if tree.n() < 2 {
        return Err(TreeError::TooSmall { n: tree.n() });
    }
    if !tree.is_connected() {
        return Err(TreeError::NotConnected);
    }
    if tree.edge_count() != tree.n() - 1 {
        return Err(TreeError::HasCycle);
    }
    Ok(())
}

fn leaf_elimination(tree: &Graph) -> TreeRunTrace {
    let n = tree.n();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut chosen_leaves = Vec::new();
    let mut supports = Vec::new();
    while let Some(Reverse(u)) = heap.pop() {
        if !alive[u] || degree[u] != 1 {
            continue; // stale entry: u was removed or became isolated
        }
        let w = tree
            .neighbor_ids(u)
            .iter()
            .copied()
            .find(|&x| alive[x])
            .expect("a live leaf has a live neighbor");
        chosen_leaves.push(u);
        supports.push(w);
        alive[u] = false;
        alive[w] = false;
        for &x in tree.neighbor_ids(w) {
            if alive[x] {
                degree[x] -= 1;
                if degree[x] == 1 {
                    heap.push(Reverse(x));
                }
            }
        }
    }
    TreeRunTrace { chosen_leaves, supports }
}

/// Grundy total dominating sequence of a tree, with the run trace.
///
/// The sequence is legal, total dominating, and of length `2 * tau(tree)`.
pub fn grundy_tree(tree: &Graph) -> Result<(LegalSequence, TreeRunTrace), TreeError> {
    check_tree(tree)?;
    let trace = leaf_elimination(tree);
    let order: Vec<usize> = trace
        .chosen_leaves
        .iter()
        .chain(trace.supports.iter().rev())
        .copied()
        .collect();
    let seq = LegalSequence::from_order(tree, &order)
        .expect("leaf/support elimination always yields a legal sequence");
    Ok((seq, trace))
}

/// The support set of the same run: a minimum vertex cover of the tree.
pub fn tree_vertex_cover(tree: &Graph) -> Result<VertexSet, TreeError> {
    check_tree(tree)?;
    Ok(leaf_elimination(tree).support_set(tree.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::sequence::verify_sequence;

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    #[test]
    fn p7_has_length_6() {
        let (seq, trace) = grundy_tree(&path(7)).unwrap();
        assert_eq!(seq.len(), 6);
        assert_eq!(trace.chosen_leaves.len(), 3);
    }

    #[test]
    fn star_has_length_2() {
        let star = generate(&FamilySpec::Star { leaves: 4 }).unwrap();
        let (seq, trace) = grundy_tree(&star).unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!(trace.supports, vec![0]);
        assert_eq!(tree_vertex_cover(&star).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn double_star_has_length_4() {
        // Centers 0-1 adjacent, two leaves each.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let (seq, _) = grundy_tree(&g).unwrap();
        assert_eq!(seq.len(), 4);
    }

    #[test]
    fn emitted_sequence_verifies_with_mutual_footprints() {
        for g in [path(7), path(4), generate(&FamilySpec::Star { leaves: 3 }).unwrap()] {
            let (seq, trace) = grundy_tree(&g).unwrap();
            let verdict = verify_sequence(&g, seq.order()).unwrap();
            assert!(verdict.legal && verdict.total_dominating && verdict.maximal);
            for (&u, &w) in trace.chosen_leaves.iter().zip(&trace.supports) {
                assert_eq!(seq.footprinter(w), Some(u));
                assert_eq!(seq.footprinter(u), Some(w));
            }
        }
    }

    #[test]
    fn support_set_is_a_vertex_cover() {
        for g in [path(7), path(10)] {
            let cover = tree_vertex_cover(&g).unwrap();
            for (u, v) in g.edges() {
                assert!(cover.contains(u) || cover.contains(v));
            }
        }
        assert_eq!(tree_vertex_cover(&path(4)).unwrap().len(), 2);
        assert_eq!(tree_vertex_cover(&path(7)).unwrap().len(), 3);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(grundy_tree(&Graph::edgeless(1)).unwrap_err(), TreeError::TooSmall { n: 1 });
        let disconnected = path(2).disjoint_union(&path(2));
        assert_eq!(grundy_tree(&disconnected).unwrap_err(), TreeError::NotConnected);
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert_eq!(grundy_tree(&c4).unwrap_err(), TreeError::HasCycle);
    }

    #[test]
    fn sequence_length_is_even() {
        for n in 2..12 {
            let (seq, _) = grundy_tree(&path(n)).unwrap();
            assert_eq!(seq.len() % 2, 0);
            assert_eq!(seq.len(), 2 * (n / 2));
        }
    }
}
