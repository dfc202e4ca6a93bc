//! Generators for named graph families and the split-graph reduction.
//!
//! Labelings are fixed and documented so that outputs are reproducible:
//!
//! - `path n` / `cycle n`: vertices `0..n` in path order.
//! - `star k`: center `0`, leaves `1..=k`.
//! - `complete n`: all pairs.
//! - `prism n`: two `n`-cliques `{0..n}` and `{n..2n}` joined by the perfect
//!   matching `i ~ n+i`.
//! - `net`: triangle `{0,1,2}` with pendant `i+3` attached to `i`.
//! - `g5k k`: triangles `{0,1,2}` and `{3,4,5}` joined by the bridge `2-3`,
//!   with a path of `2k` vertices `6..6+2k` attached at the degree-2 vertex
//!   `4` of the second triangle.
//! - spiders: stable side `0..r`, clique side `r..2r`, head `2r..2r+h`;
//!   a quasi replacement vertex, when present, is the last id `2r+h`.

use thiserror::Error;

use crate::graph::{Graph, TwinKind};
use crate::p4tidy::{SpiderKind, SpiderSide};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("input graph has an isolated vertex ({v}); the split reduction requires none")]
    IsolatedVertex { v: usize },
}

/// Head of a spider, restricted to the shapes the test corpus uses. Arbitrary
/// heads can be passed to [`spider_graph`] directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadSpec {
    Empty,
    /// `K_k`.
    Complete(usize),
    /// `k` isolated vertices.
    Edgeless(usize),
    /// `P_k`.
    Path(usize),
}

impl HeadSpec {
    pub fn build(&self) -> Graph {
        match *self {
            HeadSpec::Empty => Graph::edgeless(0),
            HeadSpec::Complete(k) => complete_graph(k),
            HeadSpec::Edgeless(k) => Graph::edgeless(k),
            HeadSpec::Path(k) => path_graph(k),
        }
    }
}

/// A named family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    Complete { n: usize },
    Prism { n: usize },
    Net,
    G5k { k: usize },
    ThinSpider { weight: usize, head: HeadSpec },
    ThickSpider { weight: usize, head: HeadSpec },
    QuasiSpider { kind: SpiderKind, weight: usize, side: SpiderSide, twin: TwinKind, head: HeadSpec },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter { family, reason: reason.into() }
}

fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("clique edges are valid")
}

/// Builds the generator described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Path { n } => {
            if *n == 0 {
                return Err(invalid("path", "need n >= 1"));
            }
            Ok(path_graph(*n))
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return Err(invalid("cycle", "need n >= 3"));
            }
            let mut edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Ok(Graph::from_edges(*n, &edges).expect("cycle edges are valid"))
        }
        FamilySpec::Star { leaves } => {
            if *leaves == 0 {
                return Err(invalid("star", "need at least one leaf"));
            }
            let edges: Vec<_> = (1..=*leaves).map(|i| (0, i)).collect();
            Ok(Graph::from_edges(leaves + 1, &edges).expect("star edges are valid"))
        }
        FamilySpec::Complete { n } => {
            if *n == 0 {
                return Err(invalid("complete", "need n >= 1"));
            }
            Ok(complete_graph(*n))
        }
        FamilySpec::Prism { n } => {
            if *n < 2 {
                return Err(invalid("prism", "need n >= 2"));
            }
            let n = *n;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                    edges.push((n + u, n + v));
                }
                edges.push((u, n + u));
            }
            Ok(Graph::from_edges(2 * n, &edges).expect("prism edges are valid"))
        }
        FamilySpec::Net => {
            let edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)];
            Ok(Graph::from_edges(6, &edges).expect("net edges are valid"))
        }
        FamilySpec::G5k { k } => {
            let k = *k;
            let mut edges = vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)];
            if k > 0 {
                edges.push((4, 6));
                for i in 6..6 + 2 * k - 1 {
                    edges.push((i, i + 1));
                }
            }
            Ok(Graph::from_edges(6 + 2 * k, &edges).expect("g5k edges are valid"))
        }
        FamilySpec::ThinSpider { weight, head } => {
            spider_graph(SpiderKind::Thin, *weight, &head.build(), None)
        }
        FamilySpec::ThickSpider { weight, head } => {
            spider_graph(SpiderKind::Thick, *weight, &head.build(), None)
        }
        FamilySpec::QuasiSpider { kind, weight, side, twin, head } => {
            spider_graph(*kind, *weight, &head.build(), Some((*side, *twin)))
        }
    }
}

/// Builds a spider or quasi-spider over an arbitrary head graph.
///
/// Stable side `0..r`, clique side `r..2r`, head `2r..2r+h`. With
/// `quasi = Some((side, twin))` the last stable/clique vertex (`r-1` or
/// `2r-1`) is replaced by a pair, realized as an extra vertex `2r+h` that is
/// a true (`TwinKind::True`) or false (`TwinKind::False`) twin of it.
pub fn spider_graph(
    kind: SpiderKind,
    weight: usize,
    head: &Graph,
    quasi: Option<(SpiderSide, TwinKind)>,
) -> Result<Graph, FamilyError> {
    let r = weight;
    let min_weight = match kind {
        SpiderKind::Thin => 2,
        SpiderKind::Thick => 3,
    };
    // r = 2 thin and thick spiders are both P4; only the thin form is built.
    if r < min_weight {
        return Err(invalid(
            "spider",
            format!("{kind:?} spider needs weight >= {min_weight}, got {r}"),
        ));
    }
    let h = head.n();
    let n = 2 * r + h + usize::from(quasi.is_some());
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let adjacent = match kind {
                SpiderKind::Thin => i == j,
                SpiderKind::Thick => i != j,
            };
            if adjacent {
                edges.push((i, r + j));
            }
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            edges.push((r + i, r + j));
        }
    }
    for (u, v) in head.edges() {
        edges.push((2 * r + u, 2 * r + v));
    }
    for x in 0..h {
        for i in 0..r {
            edges.push((r + i, 2 * r + x));
        }
    }
    if let Some((side, twin)) = quasi {
        let original = match side {
            SpiderSide::Stable => r - 1,
            SpiderSide::Clique => 2 * r - 1,
        };
        let replacement = n - 1;
        let existing: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(u, v)| u == original || v == original)
            .map(|&(u, v)| {
                let other = if u == original { v } else { u };
                (replacement, other)
            })
            .collect();
        edges.extend(existing);
        if twin == TwinKind::True {
            edges.push((original, replacement));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("spider edges are valid"))
}

/// The value the source results pin down for this family, if any.
pub fn expected_gamma(spec: &FamilySpec) -> Option<usize> {
    match spec {
        FamilySpec::Path { n } => Some(2 * (n / 2)),
        FamilySpec::Complete { n } => Some(if *n >= 2 { 2 } else { 0 }),
        FamilySpec::Prism { n } => (*n >= 2 && *n != 3).then_some(*n),
        FamilySpec::G5k { k } => Some(5 + 2 * k),
        FamilySpec::Net => Some(6),
        _ => None,
    }
}

/// The split-graph reduction: for `G` without isolated vertices, builds `G'`
/// on a stable copy `V1 = {0..n}` and a clique copy `V2 = {n..2n}` of `V(G)`,
/// where `v1_i ~ v2_j` iff `i ~ j` in `G`. Grundy total domination doubles
/// under this map. Returns the graph and the two id maps.
pub fn split_reduction(g: &Graph) -> Result<(Graph, Vec<usize>, Vec<usize>), FamilyError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(FamilyError::IsolatedVertex { v });
    }
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((n + u, n + v));
        }
    }
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    let split = Graph::from_edges(2 * n, &edges).expect("split edges are valid");
    let v1: Vec<usize> = (0..n).collect();
    let v2: Vec<usize> = (n..2 * n).collect();
    Ok((split, v1, v2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::grundy_exact;

    #[test]
    fn prism_2_is_a_4_cycle() {
        let g = generate(&FamilySpec::Prism { n: 2 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert!(g.is_bipartite().is_some());
    }

    #[test]
    fn prism_counts() {
        let g = generate(&FamilySpec::Prism { n: 4 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 16));
        for i in 0..4 {
            assert!(g.has_edge(i, 4 + i));
        }
    }

    #[test]
    fn g5k_zero_is_two_triangles_and_a_bridge() {
        let g = generate(&FamilySpec::G5k { k: 0 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 7));
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn g5k_size_is_minimal() {
        for k in 0..4 {
            let g = generate(&FamilySpec::G5k { k }).unwrap();
            assert_eq!(g.n(), 6 + 2 * k);
            assert_eq!(g.edge_count(), g.n() + 1);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn net_shape() {
        let g = generate(&FamilySpec::Net).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 6));
        assert_eq!(g.leaves_and_supports(), vec![(3, 0), (4, 1), (5, 2)]);
    }

    #[test]
    fn expected_gamma_table() {
        assert_eq!(expected_gamma(&FamilySpec::Prism { n: 5 }), Some(5));
        assert_eq!(expected_gamma(&FamilySpec::Prism { n: 3 }), None);
        assert_eq!(expected_gamma(&FamilySpec::G5k { k: 2 }), Some(9));
        assert_eq!(expected_gamma(&FamilySpec::Path { n: 9 }), Some(8));
        assert_eq!(expected_gamma(&FamilySpec::Complete { n: 7 }), Some(2));
        assert_eq!(expected_gamma(&FamilySpec::Cycle { n: 6 }), None);
        assert_eq!(expected_gamma(&FamilySpec::Star { leaves: 3 }), None);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Prism { n: 1 }).is_err());
        assert!(generate(&FamilySpec::ThickSpider { weight: 2, head: HeadSpec::Empty }).is_err());
        assert!(generate(&FamilySpec::ThinSpider { weight: 1, head: HeadSpec::Empty }).is_err());
    }

    #[test]
    fn thin_spider_r2_is_p4() {
        let g = generate(&FamilySpec::ThinSpider { weight: 2, head: HeadSpec::Empty }).unwrap();
        // 0-2, 1-3, 2-3: a path 0-2-3-1.
        assert_eq!(g.edges(), vec![(0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn quasi_spider_has_twin_replacement() {
        let g = spider_graph(
            SpiderKind::Thin,
            3,
            &Graph::edgeless(0),
            Some((SpiderSide::Stable, TwinKind::True)),
        )
        .unwrap();
        assert_eq!(g.n(), 7);
        // Vertex 6 is a true twin of stable vertex 2.
        assert!(g.has_edge(2, 6));
        assert!(g.has_edge(6, 5) && g.has_edge(2, 5));
        let g = spider_graph(
            SpiderKind::Thick,
            3,
            &Graph::edgeless(1),
            Some((SpiderSide::Clique, TwinKind::False)),
        )
        .unwrap();
        assert_eq!(g.n(), 8);
        assert!(!g.has_edge(5, 7)); // false twin pair not adjacent
        assert_eq!(g.neighbors(5), g.neighbors(7));
    }

    #[test]
    fn split_reduction_shape() {
        let k3 = complete_graph(3);
        let (g, v1, v2) = split_reduction(&k3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(v1, vec![0, 1, 2]);
        assert_eq!(v2, vec![3, 4, 5]);
        // V1 stable, V2 clique, cross edges mirror K3.
        assert!(!g.has_edge(0, 1) && !g.has_edge(0, 2) && !g.has_edge(1, 2));
        assert!(g.has_edge(3, 4) && g.has_edge(3, 5) && g.has_edge(4, 5));
        assert!(g.has_edge(0, 4) && g.has_edge(0, 5) && !g.has_edge(0, 3));
        assert_eq!(
            split_reduction(&Graph::edgeless(2)),
            Err(FamilyError::IsolatedVertex { v: 0 })
        );
    }

    #[test]
    fn split_reduction_doubles_gamma_on_small_examples() {
        for (spec, doubled) in [
            (FamilySpec::Path { n: 4 }, 8),
            (FamilySpec::Complete { n: 3 }, 4),
            (FamilySpec::Cycle { n: 4 }, 4),
        ] {
            let g = generate(&spec).unwrap();
            let (split, _, _) = split_reduction(&g).unwrap();
            assert_eq!(grundy_exact(&split, Some(16)).unwrap().length, doubled);
        }
    }

    #[test]
    fn family_gammas_match_oracle() {
        for spec in [
            FamilySpec::Path { n: 7 },
            FamilySpec::Complete { n: 5 },
            FamilySpec::Prism { n: 4 },
            FamilySpec::Prism { n: 2 },
            FamilySpec::G5k { k: 1 },
            FamilySpec::Net,
        ] {
            let g = generate(&spec).unwrap();
            let expect = expected_gamma(&spec).unwrap();
            assert_eq!(grundy_exact(&g, None).unwrap().length, expect, "{spec:?}");
        }
    }
}
