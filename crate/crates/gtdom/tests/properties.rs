//! Property tests for the graph algebra, the sequence verifier, and the
//! oracle's symmetry invariants.

mod common;

use gtdom::{eta, grundy_exact, verify_sequence, Graph, TwinKind, VertexSet};
use proptest::prelude::*;

use common::{random_permutation, relabel, rng};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2..=n * (n - 1) / 2 + 1)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n..=n)
        .prop_map(move |bits| VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v])))
}

proptest! {
    #[test]
    fn neighborhood_of_union_is_union_of_neighborhoods(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut r = rng(seed);
        use rand::Rng;
        let pick = |r: &mut rand_chacha::ChaCha8Rng| {
            VertexSet::from_vertices(n, (0..n).filter(|_| r.gen_bool(0.4)))
        };
        let u = pick(&mut r);
        let w = pick(&mut r);
        prop_assert_eq!(
            g.neighborhood_of_set(&u.union(&w)),
            g.neighborhood_of_set(&u).union(&g.neighborhood_of_set(&w))
        );
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_is_complement_of_union_of_complements(g1 in arb_graph(5), g2 in arb_graph(5)) {
        let direct = g1.join(&g2);
        let via_complement = g1.complement().disjoint_union(&g2.complement()).complement();
        prop_assert_eq!(direct, via_complement);
    }

    #[test]
    fn leaves_have_degree_one_and_their_support(g in arb_graph(9)) {
        for (leaf, support) in g.leaves_and_supports() {
            prop_assert_eq!(g.degree(leaf), 1);
            prop_assert!(g.neighbors(leaf).contains(support));
        }
    }

    #[test]
    fn twin_pair_postcondition(g in arb_graph(8)) {
        if let Some((u, v, kind)) = g.twin_pair() {
            match kind {
                TwinKind::False => prop_assert_eq!(g.neighbors(u), g.neighbors(v)),
                TwinKind::True => {
                    let mut nu = g.neighbors(u);
                    nu.insert(u);
                    let mut nv = g.neighbors(v);
                    nv.insert(v);
                    prop_assert_eq!(nu, nv);
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_preserves_adjacency(g in arb_graph(9), seed in any::<u64>()) {
        let mut r = rng(seed);
        use rand::Rng;
        let set = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|_| r.gen_bool(0.5)));
        let (sub, map) = g.induced_subgraph(&set);
        prop_assert_eq!(sub.n(), set.len());
        for a in 0..sub.n() {
            for b in a + 1..sub.n() {
                prop_assert_eq!(sub.has_edge(a, b), g.has_edge(map[a], map[b]));
            }
        }
    }

    #[test]
    fn singleton_sequences_are_legal_iff_not_isolated(g in arb_graph(9)) {
        for v in 0..g.n() {
            let verdict = verify_sequence(&g, &[v]).unwrap();
            prop_assert_eq!(verdict.legal, g.degree(v) >= 1);
        }
    }

    #[test]
    fn oracle_witness_is_maximal_and_cannot_be_extended(g in arb_graph(8)) {
        let r = grundy_exact(&g, None).unwrap();
        let verdict = verify_sequence(&g, &r.witness).unwrap();
        prop_assert!(verdict.legal || r.witness.is_empty());
        prop_assert!(verdict.maximal);
        for v in 0..g.n() {
            if r.witness.contains(&v) {
                continue;
            }
            let mut extended = r.witness.clone();
            extended.push(v);
            prop_assert!(!verify_sequence(&g, &extended).unwrap().legal);
        }
    }

    #[test]
    fn oracle_length_is_relabeling_invariant(g in arb_graph(7), seed in any::<u64>()) {
        let mut r = rng(seed);
        let perm = random_permutation(&mut r, g.n());
        let h = relabel(&g, &perm);
        prop_assert_eq!(
            grundy_exact(&g, None).unwrap().length,
            grundy_exact(&h, None).unwrap().length
        );
    }

    #[test]
    fn eta_flags_isolated_vertices(g in arb_graph(9)) {
        prop_assert_eq!(eta(&g) == 1, (0..g.n()).any(|v| g.degree(v) == 0));
    }

    #[test]
    fn legal_sequences_footprint_every_dominated_vertex(g in arb_graph(8)) {
        let r = grundy_exact(&g, None).unwrap();
        let seq = gtdom::LegalSequence::from_order(&g, &r.witness);
        if let Ok(seq) = seq {
            for v in 0..g.n() {
                prop_assert_eq!(seq.dominated().contains(v), seq.footprinter(v).is_some());
                if let Some(f) = seq.footprinter(v) {
                    // The footprinter is the earliest sequence vertex seeing v.
                    let first = r.witness.iter().find(|&&u| g.has_edge(u, v));
                    prop_assert_eq!(first, Some(&f));
                }
            }
        }
    }

    #[test]
    fn subset_roundtrip(set in (1usize..40).prop_flat_map(arb_subset)) {
        let round = VertexSet::from_vertices(set.universe(), set.iter());
        prop_assert_eq!(&round, &set);
        prop_assert_eq!(round.len(), set.to_vec().len());
    }
}
