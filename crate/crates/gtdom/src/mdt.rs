//! Modular decomposition trees and the union/join combination rules.
//!
//! A graph is *modular* when both it and its complement are connected. The
//! decomposition tree splits a disconnected graph at a disjoint union (the
//! smallest-id component versus the rest) and a co-disconnected graph at a
//! join (the smallest-id co-component versus the rest), recursing until every
//! piece is modular. Grundy total dominating sequences combine across the
//! internal nodes:
//!
//! - union: concatenate the two sequences; values add.
//! - join: the value is `max(len1 + 2*eta1, len2 + 2*eta2)`, witnessed either
//!   by the winning side's sequence alone (no isolated vertices) or by
//!   wrapping it as `(v) .. (w)` with `v` an isolated vertex of the winning
//!   side and `w` any vertex of the other side.
//!
//! [`solve_via_mdt`] closes the recursion over any exact leaf solver.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::sequence::{eta, LegalSequence};

/// Label of an internal decomposition node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdtOp {
    Union,
    Join,
}

/// A node of the decomposition tree. Leaves carry the modular subgraph in
/// local ids plus the map back to the ids of the decomposed graph.
#[derive(Debug, Clone)]
pub enum MdtNode {
    Leaf { graph: Graph, vertex_map: Vec<usize> },
    Internal { op: MdtOp, left: Box<MdtNode>, right: Box<MdtNode> },
}

impl MdtNode {
    pub fn leaf_count(&self) -> usize {
        match self {
            MdtNode::Leaf { .. } => 1,
            MdtNode::Internal { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            MdtNode::Leaf { .. } => 1,
            MdtNode::Internal { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }

    /// Visits every leaf, left to right.
    pub fn for_each_leaf<'a>(&'a self, f: &mut impl FnMut(&'a Graph, &'a [usize])) {
        match self {
            MdtNode::Leaf { graph, vertex_map } => f(graph, vertex_map),
            MdtNode::Internal { left, right, .. } => {
                left.for_each_leaf(f);
                right.for_each_leaf(f);
            }
        }
    }
}

/// A modular decomposition tree.
#[derive(Debug, Clone)]
pub struct MdTree {
    pub root: MdtNode,
}

/// Both the graph and its complement are connected. Single vertices count.
pub fn is_modular(g: &Graph) -> bool {
    g.is_connected() && g.complement().is_connected()
}

/// Builds the decomposition tree. Deterministic: splits always peel the
/// smallest-id (co-)component off the rest. Panics on the empty graph.
pub fn build_mdt(g: &Graph) -> MdTree {
    assert!(g.n() >= 1, "modular decomposition needs at least one vertex");
    let map: Vec<usize> = (0..g.n()).collect();
    MdTree { root: build_node(g.clone(), map) }
}

fn build_node(g: Graph, map: Vec<usize>) -> MdtNode {
    let comps = g.components();
    let (op, first) = if comps.len() > 1 {
        (MdtOp::Union, comps.into_iter().next().unwrap())
    } else {
        let co_comps = g.complement().components();
        if co_comps.len() > 1 {
            (MdtOp::Join, co_comps.into_iter().next().unwrap())
        } else {
            return MdtNode::Leaf { graph: g, vertex_map: map };
        }
    };
    let mut rest = VertexSet::full(g.n());
    rest.subtract(&first);
    let (g1, m1) = g.induced_subgraph(&first);
    let (g2, m2) = g.induced_subgraph(&rest);
    let lift = |sub_map: Vec<usize>| sub_map.into_iter().map(|v| map[v]).collect::<Vec<_>>();
    MdtNode::Internal {
        op,
        left: Box::new(build_node(g1, lift(m1))),
        right: Box::new(build_node(g2, lift(m2))),
    }
}

/// A solved piece: a Grundy total dominating sequence and the eta of the
/// solved graph. The length of the solution is `witness.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafSolution {
    pub witness: Vec<usize>,
    /// 1 if the solved graph has an isolated vertex, 0 otherwise.
    pub eta: usize,
}

impl LeafSolution {
    pub fn new(witness: Vec<usize>, eta: usize) -> Self {
        LeafSolution { witness, eta }
    }

    pub fn len(&self) -> usize {
        self.witness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witness.is_empty()
    }

    /// The same solution with every vertex id shifted by `offset` (the
    /// disjoint-union id convention).
    pub fn shifted(&self, offset: usize) -> LeafSolution {
        LeafSolution {
            witness: self.witness.iter().map(|&v| v + offset).collect(),
            eta: self.eta,
        }
    }
}

/// Combines solutions of two vertex-disjoint graphs into a solution of their
/// disjoint union: sequences concatenate, values add. The witnesses must
/// already live in a common id space (see [`LeafSolution::shifted`]).
pub fn combine_union(s1: &LeafSolution, s2: &LeafSolution) -> LeafSolution {
    let mut witness = s1.witness.clone();
    witness.extend_from_slice(&s2.witness);
    LeafSolution { witness, eta: s1.eta.max(s2.eta) }
}

/// Everything the join case analysis needs about one side, with vertex ids
/// already in the combined id space.
struct JoinSide {
    witness: Vec<usize>,
    eta: usize,
    /// Smallest isolated vertex of the side, when eta = 1.
    isolated_min: Option<usize>,
    /// Smallest vertex of the side.
    any_min: usize,
}

fn join_witness(a: JoinSide, b: JoinSide) -> Vec<usize> {
    let wrap = |side: &JoinSide, other: &JoinSide| {
        let v = side.isolated_min.expect("side with eta = 1 has an isolated vertex");
        let mut out = Vec::with_capacity(side.witness.len() + 2);
        out.push(v);
        out.extend_from_slice(&side.witness);
        out.push(other.any_min);
        out
    };
    match (a.eta, b.eta) {
        // Without isolated vertices the longer sequence already works.
        (0, 0) => {
            if a.witness.len() >= b.witness.len() {
                a.witness
            } else {
                b.witness
            }
        }
        (1, 1) => {
            if a.witness.len() >= b.witness.len() {
                wrap(&a, &b)
            } else {
                wrap(&b, &a)
            }
        }
        (1, 0) => {
            if a.witness.len() + 2 >= b.witness.len() {
                wrap(&a, &b)
            } else {
                b.witness
            }
        }
        (0, 1) => {
            if b.witness.len() + 2 >= a.witness.len() {
                wrap(&b, &a)
            } else {
                a.witness
            }
        }
        _ => unreachable!("eta is 0 or 1"),
    }
}

/// Combines Grundy solutions of `g1` and `g2` (each in its own local ids)
/// into a solution of `join(g1, g2)`, with `g2`'s ids shifted by `g1.n()`.
pub fn combine_join(g1: &Graph, s1: &LeafSolution, g2: &Graph, s2: &LeafSolution) -> LeafSolution {
    assert!(g1.n() >= 1 && g2.n() >= 1, "join of empty graphs");
    let shift = g1.n();
    let a = JoinSide {
        witness: s1.witness.clone(),
        eta: s1.eta,
        isolated_min: g1.isolated_vertex(),
        any_min: 0,
    };
    let b = JoinSide {
        witness: s2.shifted(shift).witness,
        eta: s2.eta,
        isolated_min: g2.isolated_vertex().map(|v| v + shift),
        any_min: shift,
    };
    let expect_len = (s1.len() + 2 * s1.eta).max(s2.len() + 2 * s2.eta);
    let witness = join_witness(a, b);
    debug_assert_eq!(witness.len(), expect_len);
    // A join of non-empty graphs never has isolated vertices.
    LeafSolution { witness, eta: 0 }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("unsupported modular leaf on vertices {vertices:?}: {reason}")]
    UnsupportedLeaf { vertices: Vec<usize>, reason: String },
}

/// Solves the whole graph by decomposing it, solving every modular leaf with
/// `leaf_solver` (ids local to the leaf; an `Err` is a rejection reason), and
/// combining upward with the union/join rules. The result is a verified
/// Grundy total dominating sequence in the ids of `g`.
pub fn solve_via_mdt<F>(g: &Graph, mut leaf_solver: F) -> Result<LegalSequence, SolveError>
where
    F: FnMut(&Graph) -> Result<LeafSolution, String>,
{
    let tree = build_mdt(g);
    let solved = solve_node(g, &tree.root, &mut leaf_solver)?;
    Ok(LegalSequence::from_order(g, &solved.witness)
        .expect("combined decomposition sequence is legal"))
}

struct NodeSolution {
    witness: Vec<usize>,
    eta: usize,
    vertices: VertexSet,
}

fn solve_node<F>(root: &Graph, node: &MdtNode, leaf_solver: &mut F) -> Result<NodeSolution, SolveError>
where
    F: FnMut(&Graph) -> Result<LeafSolution, String>,
{
    match node {
        MdtNode::Leaf { graph, vertex_map } => {
            let local = leaf_solver(graph).map_err(|reason| SolveError::UnsupportedLeaf {
                vertices: vertex_map.clone(),
                reason,
            })?;
            Ok(NodeSolution {
                witness: local.witness.iter().map(|&v| vertex_map[v]).collect(),
                eta: eta(graph),
                vertices: VertexSet::from_vertices(root.n(), vertex_map.iter().copied()),
            })
        }
        MdtNode::Internal { op, left, right } => {
            let a = solve_node(root, left, leaf_solver)?;
            let b = solve_node(root, right, leaf_solver)?;
            let vertices = a.vertices.union(&b.vertices);
            match op {
                MdtOp::Union => {
                    let mut witness = a.witness;
                    witness.extend(b.witness);
                    Ok(NodeSolution { witness, eta: a.eta.max(b.eta), vertices })
                }
                MdtOp::Join => {
                    // The smallest vertex of a side that has no neighbor
                    // inside the side is its smallest isolated vertex.
                    let isolated_in = |side: &VertexSet| {
                        side.iter().find(|&v| {
                            root.neighbor_ids(v).iter().all(|u| !side.contains(*u))
                        })
                    };
                    let side = |sol: &NodeSolution| JoinSide {
                        witness: sol.witness.clone(),
                        eta: sol.eta,
                        isolated_min: isolated_in(&sol.vertices),
                        any_min: sol.vertices.min().expect("non-empty side"),
                    };
                    let witness = join_witness(side(&a), side(&b));
                    Ok(NodeSolution { witness, eta: 0, vertices })
                }
            }
        }
    }
}
