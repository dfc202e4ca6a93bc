//! Legal open-neighborhood sequences, footprint certificates, and verdicts.
//!
//! A sequence `(v_1, .., v_k)` of distinct vertices is *legal* when every
//! `v_i` footprints at least one vertex, i.e. `N(v_i)` minus the union of the
//! earlier open neighborhoods is non-empty. This applies to `i = 1` as well,
//! so a vertex with no neighbors can never appear; on an edgeless graph the
//! only legal sequence is the empty one. A legal sequence is *maximal* when
//! no vertex can be appended, and *total dominating* when the union of the
//! neighborhoods covers every vertex.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("sequences overlap at vertex {v}")]
    OverlappingSequences { v: usize },
    #[error("sequence is illegal at position {position}")]
    Illegal { position: usize },
}

/// 1 if the graph has an isolated vertex, 0 otherwise.
pub fn eta(g: &Graph) -> usize {
    usize::from(g.isolated_vertex().is_some())
}

/// Outcome of checking an arbitrary vertex order against a graph.
///
/// `first_violation` is the smallest index holding a duplicate vertex or a
/// vertex that footprints nothing new. `total_dominating` and `maximal` are
/// only meaningful (and only set) when the sequence is legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceVerdict {
    pub legal: bool,
    pub total_dominating: bool,
    pub maximal: bool,
    pub first_violation: Option<usize>,
}

/// A verified legal sequence together with its footprint certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegalSequence {
    order: Vec<usize>,
    footprinter: Vec<Option<usize>>,
    dominated: VertexSet,
}

impl LegalSequence {
    /// Checks `order` for legality and computes the certificate.
    pub fn from_order(g: &Graph, order: &[usize]) -> Result<LegalSequence, SequenceError> {
        let n = g.n();
        let mut footprinter = vec![None; n];
        let mut dominated = VertexSet::new(n);
        let mut used = VertexSet::new(n);
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(SequenceError::VertexOutOfRange { v, n });
            }
            if !used.insert(v) {
                return Err(SequenceError::Illegal { position: i });
            }
            let mut footprints_something = false;
            for &u in g.neighbor_ids(v) {
                if dominated.insert(u) {
                    footprinter[u] = Some(v);
                    footprints_something = true;
                }
            }
            if !footprints_something {
                return Err(SequenceError::Illegal { position: i });
            }
        }
        Ok(LegalSequence { order: order.to_vec(), footprinter, dominated })
    }

    /// The empty sequence on a graph with `universe` vertices.
    pub fn empty(universe: usize) -> LegalSequence {
        LegalSequence {
            order: Vec::new(),
            footprinter: vec![None; universe],
            dominated: VertexSet::new(universe),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The footprinter `f_S(v)`: the earliest sequence vertex adjacent to `v`.
    pub fn footprinter(&self, v: usize) -> Option<usize> {
        self.footprinter[v]
    }

    /// All `(vertex, footprinter)` pairs, ascending by vertex.
    pub fn footprint_pairs(&self) -> Vec<(usize, usize)> {
        self.footprinter
            .iter()
            .enumerate()
            .filter_map(|(v, f)| f.map(|u| (v, u)))
            .collect()
    }

    /// The set of vertices totally dominated by the sequence.
    pub fn dominated(&self) -> &VertexSet {
        &self.dominated
    }

    pub fn is_total_dominating(&self) -> bool {
        self.dominated.len() == self.dominated.universe()
    }
}

/// Checks an arbitrary order and reports legality, total domination,
/// maximality, and the first violating position.
pub fn verify_sequence(g: &Graph, order: &[usize]) -> Result<SequenceVerdict, SequenceError> {
    for &v in order {
        if v >= g.n() {
            return Err(SequenceError::VertexOutOfRange { v, n: g.n() });
        }
    }
    match LegalSequence::from_order(g, order) {
        Err(SequenceError::Illegal { position }) => Ok(SequenceVerdict {
            legal: false,
            total_dominating: false,
            maximal: false,
            first_violation: Some(position),
        }),
        Err(e) => Err(e),
        Ok(seq) => {
            let used = VertexSet::from_vertices(g.n(), order.iter().copied());
            let maximal = (0..g.n()).all(|v| {
                used.contains(v) || g.neighbor_ids(v).iter().all(|&u| seq.dominated.contains(u))
            });
            Ok(SequenceVerdict {
                legal: true,
                total_dominating: seq.is_total_dominating(),
                maximal,
                first_violation: None,
            })
        }
    }
}

/// Concatenates two vertex-disjoint sequences. Legality of the result is not
/// implied; callers re-verify.
pub fn concatenate(s1: &[usize], s2: &[usize]) -> Result<Vec<usize>, SequenceError> {
    if let Some(&v) = s1.iter().find(|v| s2.contains(v)) {
        return Err(SequenceError::OverlappingSequences { v });
    }
    Ok(s1.iter().chain(s2).copied().collect())
}
